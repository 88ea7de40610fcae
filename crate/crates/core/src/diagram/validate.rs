use std::collections::HashSet;

use serde::Serialize;

use super::map::PlanarMap;
use super::tld::check_arity;
use super::{Dir, PlanarDiagram};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub code: &'static str,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn push(&mut self, code: &'static str, message: String) {
        self.valid = false;
        self.violations.push(Violation { code, message });
    }
}

/// Check every structural invariant of a planar diagram, including the
/// per-component Euler check `V - E + F = 2` on the rotation system.
pub fn validate(d: &PlanarDiagram) -> ValidationReport {
    let mut report = ValidationReport { valid: true, violations: Vec::new() };
    let mut ids = HashSet::new();
    for c in d.classical.iter().chain(&d.virtuals) {
        if !ids.insert(c.id.as_str()) {
            report.push("duplicate-id", format!("duplicate crossing identifier '{}'", c.id));
        }
    }
    for c in &d.classical {
        let dirs: Vec<Dir> = c.slots.iter().map(|s| s.dir).collect();
        if dirs[0] != Dir::In || dirs[2] != Dir::Out || dirs[1] == dirs[3] {
            report.push("slot-direction", format!("classical crossing '{}' has bad slot directions", c.id));
        }
    }
    for c in &d.virtuals {
        if c.slots.iter().map(|s| s.dir).ne([Dir::In, Dir::In, Dir::Out, Dir::Out]) {
            report.push("slot-direction", format!("virtual crossing '{}' has bad slot directions", c.id));
        }
    }
    if let Err(e) = check_arity(d) {
        let code = match e {
            super::ParseError::EdgeDirection { .. } => "edge-direction",
            _ => "edge-multiplicity",
        };
        report.push(code, e.to_string());
        return report;
    }
    let labels: HashSet<String> = d.edge_labels().into_iter().collect();
    for e in d.bars.keys() {
        if !labels.contains(e) {
            report.push("unknown-bar-edge", format!("bars on unknown edge '{e}'"));
        }
    }
    if !report.valid {
        return report;
    }
    let map = PlanarMap::new(d);
    let (ncomp, comp) = map.vertex_components();
    let mut v = vec![0i64; ncomp];
    let mut e = vec![0i64; ncomp];
    let mut f = vec![0i64; ncomp];
    for &c in &comp {
        v[c] += 1;
    }
    for a in &map.arcs {
        e[comp[a.tail.0]] += 1;
    }
    for face in map.faces() {
        f[comp[face[0].corner.0]] += 1;
    }
    for c in 0..ncomp {
        let chi = v[c] - e[c] + f[c];
        if chi != 2 {
            let rep = comp.iter().position(|&x| x == c).expect("nonempty component");
            report.push(
                "euler",
                format!(
                    "Euler check failed for the component of '{}': V - E + F = {chi}",
                    map.ids[rep]
                ),
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_tld;

    #[test]
    fn barred_loop_is_valid() {
        let d = parse_tld("O 1\nB 1 5\n").unwrap();
        assert!(validate(&d).valid);
    }

    #[test]
    fn curl_is_valid_and_twisted_rotation_is_not() {
        let d = parse_tld("X a -q +q +p -p\n").unwrap();
        assert!(validate(&d).valid);
        // Swapping two opposite slots breaks the rotation system.
        let d = parse_tld("X a -q +p +q -p\n").unwrap();
        let r = validate(&d);
        assert!(!r.valid);
        assert_eq!(r.violations[0].code, "euler");
        assert!(r.violations[0].message.contains("Euler check failed"));
    }

    #[test]
    fn reports_multiplicity() {
        let mut d = parse_tld("O 1\n").unwrap();
        d.classical.push(crate::diagram::Crossing {
            id: "x".into(),
            slots: [
                crate::diagram::Slot::incoming("a"),
                crate::diagram::Slot::outgoing("b"),
                crate::diagram::Slot::outgoing("c"),
                crate::diagram::Slot::incoming("b"),
            ],
        });
        let r = validate(&d);
        assert!(!r.valid);
        assert_eq!(r.violations[0].code, "edge-multiplicity");
        assert_eq!(r.valid, r.violations.is_empty());
    }
}
