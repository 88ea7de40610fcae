//! The TLD text format.
//!
//! ```text
//! # comment
//! X <id> <±e0> <±e1> <±e2> <±e3>   classical crossing
//! V <id> <-e0> <-e1> <+e2> <+e3>   virtual crossing
//! O <edge>                         crossing-free loop
//! B <edge> <count>                 bar count on an arc
//! ```
//!
//! `+` marks an outgoing end (the edge's tail), `-` an incoming end.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use super::{Crossing, Dir, PlanarDiagram, Slot};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate crossing identifier '{id}'")]
    DuplicateId { line: usize, id: String },
    #[error("edge multiplicity: edge '{edge}' {detail}")]
    EdgeMultiplicity { edge: String, detail: String },
    #[error("edge direction: edge '{edge}' {detail}")]
    EdgeDirection { edge: String, detail: String },
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

fn is_token(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric())
}

fn parse_slot(tok: &str, line: usize) -> Result<Slot, ParseError> {
    let mut chars = tok.chars();
    let dir = match chars.next() {
        Some('+') => Dir::Out,
        Some('-') | Some('\u{2212}') => Dir::In,
        _ => return Err(syntax(line, format!("expected '+' or '-' before edge label in '{tok}'"))),
    };
    let label = chars.as_str();
    if !is_token(label) {
        return Err(syntax(line, format!("bad edge label '{label}'")));
    }
    Ok(Slot::new(label, dir))
}

fn check_classical(c: &Crossing, line: usize) -> Result<(), ParseError> {
    let d: Vec<Dir> = c.slots.iter().map(|s| s.dir).collect();
    if d[0] != Dir::In || d[2] != Dir::Out || d[1] == d[3] {
        return Err(syntax(
            line,
            format!("classical crossing '{}' needs slots (-, ±, +, ∓)", c.id),
        ));
    }
    Ok(())
}

fn check_virtual(c: &Crossing, line: usize) -> Result<(), ParseError> {
    let want = [Dir::In, Dir::In, Dir::Out, Dir::Out];
    if c.slots.iter().map(|s| s.dir).ne(want) {
        return Err(syntax(line, format!("virtual crossing '{}' needs slots (-, -, +, +)", c.id)));
    }
    Ok(())
}

/// Parse TLD text. Checks syntax, identifier uniqueness and edge arity only;
/// planarity is left to [`validate`](super::validate).
pub fn parse_tld(text: &str) -> Result<PlanarDiagram, ParseError> {
    let mut d = PlanarDiagram::default();
    let mut ids = HashSet::new();
    let mut bar_lines: Vec<(usize, String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks[0] {
            kind @ ("X" | "V") => {
                if toks.len() != 6 {
                    return Err(syntax(line, format!("'{kind}' takes an identifier and four ends")));
                }
                let id = toks[1];
                if !is_token(id) {
                    return Err(syntax(line, format!("bad identifier '{id}'")));
                }
                if !ids.insert(id.to_string()) {
                    return Err(ParseError::DuplicateId { line, id: id.into() });
                }
                let slots = [
                    parse_slot(toks[2], line)?,
                    parse_slot(toks[3], line)?,
                    parse_slot(toks[4], line)?,
                    parse_slot(toks[5], line)?,
                ];
                let c = Crossing { id: id.into(), slots };
                if kind == "X" {
                    check_classical(&c, line)?;
                    d.classical.push(c);
                } else {
                    check_virtual(&c, line)?;
                    d.virtuals.push(c);
                }
            }
            "O" => {
                if toks.len() != 2 || !is_token(toks[1]) {
                    return Err(syntax(line, "'O' takes one edge label"));
                }
                d.loops.push(toks[1].into());
            }
            "B" => {
                if toks.len() != 3 || !is_token(toks[1]) {
                    return Err(syntax(line, "'B' takes an edge label and a count"));
                }
                let count: u32 = toks[2]
                    .parse()
                    .map_err(|_| syntax(line, format!("bad bar count '{}'", toks[2])))?;
                if d.bars.contains_key(toks[1]) {
                    return Err(syntax(line, format!("repeated bar line for edge '{}'", toks[1])));
                }
                d.bars.insert(toks[1].into(), count);
                bar_lines.push((line, toks[1].into()));
            }
            other => return Err(syntax(line, format!("unknown record '{other}'"))),
        }
    }
    check_arity(&d)?;
    let known: HashSet<String> = d.edge_labels().into_iter().collect();
    for (line, edge) in bar_lines {
        if !known.contains(&edge) {
            return Err(syntax(line, format!("bars on unknown edge '{edge}'")));
        }
    }
    d.bars.retain(|_, v| *v > 0);
    Ok(d)
}

/// Every crossing edge label must occur once as `+` and once as `-`; loop
/// labels must occur nowhere else.
pub(crate) fn check_arity(d: &PlanarDiagram) -> Result<(), ParseError> {
    let mut seen: BTreeMap<&str, (u32, u32)> = BTreeMap::new();
    for s in d.classical.iter().chain(&d.virtuals).flat_map(|c| c.slots.iter()) {
        let e = seen.entry(s.edge.as_str()).or_default();
        match s.dir {
            Dir::Out => e.0 += 1,
            Dir::In => e.1 += 1,
        }
    }
    let mut loops = HashSet::new();
    for l in &d.loops {
        if seen.contains_key(l.as_str()) || !loops.insert(l.as_str()) {
            return Err(ParseError::EdgeMultiplicity {
                edge: l.clone(),
                detail: "is a loop label that appears more than once".into(),
            });
        }
    }
    for (edge, (outs, ins)) in seen {
        if outs + ins != 2 {
            return Err(ParseError::EdgeMultiplicity {
                edge: edge.into(),
                detail: format!("appears {} time(s), expected 2", outs + ins),
            });
        }
        if outs != 1 {
            return Err(ParseError::EdgeDirection {
                edge: edge.into(),
                detail: "needs exactly one '+' end and one '-' end".into(),
            });
        }
    }
    Ok(())
}

fn write_crossing(out: &mut String, kind: char, c: &Crossing) {
    let _ = write!(out, "{kind} {}", c.id);
    for s in &c.slots {
        let sign = if s.dir == Dir::Out { '+' } else { '-' };
        let _ = write!(out, " {sign}{}", s.edge);
    }
    out.push('\n');
}

/// Canonical text: crossings sorted by identifier, slots in order, loops and
/// bars sorted by edge label.
pub fn serialize_tld(d: &PlanarDiagram) -> String {
    let d = d.normalized();
    let mut out = String::new();
    for c in &d.classical {
        write_crossing(&mut out, 'X', c);
    }
    for c in &d.virtuals {
        write_crossing(&mut out, 'V', c);
    }
    for l in &d.loops {
        let _ = writeln!(out, "O {l}");
    }
    for (e, n) in &d.bars {
        let _ = writeln!(out, "B {e} {n}");
    }
    out
}
