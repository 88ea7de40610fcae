//! Invariant and group reports, as text or versioned JSON.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bracket::{bracket, jones_from_twisted, kamada_check, twisted_jones};
use crate::diagram::AbstractLink;
use crate::faces::{carrier, faces, two_colorable};
use crate::group::{
    abelianization, count_homs_with_cap, tietze_simplify, twisted_group, virtual_group, GroupPresentation, Level,
    FINGERPRINT_GENERATOR_CAP,
};
use crate::poly::LaurentBipoly;
use crate::Result;

pub const SCHEMA: &str = "twistlink/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub schema: &'static str,
    pub crossings: usize,
    pub components: usize,
    pub writhe: i64,
    /// Per component of the carrier surface.
    pub euler_genus: Vec<usize>,
    pub euler_genus_total: usize,
    pub orientable: Vec<bool>,
    pub orientable_all: bool,
    pub faces: usize,
    pub two_colorable: bool,
    pub coloring: Option<Vec<u8>>,
    pub bracket: LaurentBipoly,
    pub twisted_jones: LaurentBipoly,
    pub jones: LaurentBipoly,
    pub kamada: bool,
}

pub fn invariant_report(a: &AbstractLink) -> Result<InvariantReport> {
    let components = a.components().0;
    let c = carrier(a);
    let coloring = two_colorable(a);
    let v = twisted_jones(a)?;
    let jones = jones_from_twisted(&v)?;
    Ok(InvariantReport {
        schema: SCHEMA,
        crossings: a.crossing_count(),
        components,
        writhe: a.writhe(),
        euler_genus: c.components.iter().map(|k| k.euler_genus).collect(),
        euler_genus_total: c.euler_genus,
        orientable: c.components.iter().map(|k| k.orientable).collect(),
        orientable_all: c.orientable,
        faces: faces(a).len(),
        two_colorable: coloring.is_some(),
        coloring,
        bracket: bracket(a)?,
        kamada: kamada_check(&jones, components),
        twisted_jones: v,
        jones,
    })
}

impl InvariantReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "crossings: {}", self.crossings);
        let _ = writeln!(s, "components: {}", self.components);
        let _ = writeln!(s, "writhe: {}", self.writhe);
        let _ = writeln!(s, "faces: {}", self.faces);
        let _ = writeln!(s, "euler genus: {} {:?}", self.euler_genus_total, self.euler_genus);
        let _ = writeln!(s, "orientable: {} {:?}", self.orientable_all, self.orientable);
        let _ = writeln!(s, "two-colorable: {}", self.two_colorable);
        let _ = writeln!(s, "bracket: {}", self.bracket);
        let _ = writeln!(s, "twisted jones: {}", self.twisted_jones);
        let _ = writeln!(s, "jones: {}", self.jones);
        let _ = writeln!(s, "kamada: {}", self.kamada);
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub schema: &'static str,
    pub level: String,
    pub presentation: GroupPresentation,
    pub simplified: GroupPresentation,
    pub exhausted: bool,
    pub abelianization: Vec<u64>,
    /// `(degree, count)` pairs.
    pub homs: Vec<(usize, u64)>,
}

/// Group at `level` (`None` for the twisted group), simplified within
/// `budget` Tietze steps, with hom counts into each requested degree.
pub fn group_report(a: &AbstractLink, level: Option<Level>, budget: usize, degrees: &[usize]) -> Result<GroupReport> {
    let presentation = match level {
        None => twisted_group(a),
        Some(l) => virtual_group(a, l),
    };
    let s = tietze_simplify(&presentation, budget);
    let homs = degrees
        .iter()
        .map(|&d| Ok((d, count_homs_with_cap(&s.presentation, d, FINGERPRINT_GENERATOR_CAP)?)))
        .collect::<Result<_>>()?;
    Ok(GroupReport {
        schema: SCHEMA,
        level: match level {
            None => "twisted",
            Some(Level::Upper) => "upper",
            Some(Level::Lower) => "lower",
        }
        .into(),
        abelianization: abelianization(&s.presentation),
        presentation,
        simplified: s.presentation,
        exhausted: s.exhausted,
        homs,
    })
}

impl GroupReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "level: {}", self.level);
        let _ = writeln!(s, "presentation: {}", self.presentation);
        let _ = writeln!(s, "simplified: {}", self.simplified);
        if self.exhausted {
            let _ = writeln!(s, "simplification budget exhausted");
        }
        let _ = writeln!(s, "abelianization: {:?}", self.abelianization);
        for (d, n) in &self.homs {
            let _ = writeln!(s, "homs into S{d}: {n}");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn onefoil_json_has_schema_and_triples() {
        let o = AbstractLink::from_slots(vec![("1".into(), [1, 1, 0, 0], 1)], vec![("a".into(), 1), ("b".into(), 1)])
            .unwrap();
        let r = invariant_report(&o).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["schema"], "twistlink/1");
        assert_eq!(v["twisted_jones"], serde_json::json!([[-6, 0, 1], [-2, 0, 1], [-2, 2, -1]]));
        assert_eq!(v["jones"], serde_json::json!([[0, 0, 1]]));
        assert_eq!((r.euler_genus_total, r.orientable_all), (2, false));
    }
}
