//! Group presentations attached to abstract links: the twisted link group with
//! an upper and a lower generator on each side of every edge end, and the
//! classical upper and lower Wirtinger groups.

mod homs;
mod snf;
mod tietze;

use std::fmt;

use serde::Serialize;

use crate::diagram::{AbstractLink, EdgeEnds};

pub use homs::{count_homs, count_homs_with_cap, DEFAULT_GENERATOR_CAP};
pub use snf::{abelianization, smith_diagonal};
pub use tietze::{tietze_simplify, Simplified};

/// Generators are numbered from 1; a relator letter `-i` is the inverse of
/// generator `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<i32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Upper,
    Lower,
}

/// Which way the lower-level conjugation runs relative to the crossing sign.
/// Flipping a crossing's neighbourhood swaps the levels, so only `1` keeps
/// the group unchanged under that move.
const LOWER_SIGN: i32 = 1;

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Vec<i32>>) -> Self {
        let mut p = Self { generators, relators: Vec::new() };
        for r in relators {
            p.push(r);
        }
        p
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Add a relator after free reduction; trivial relators are dropped.
    pub fn push(&mut self, word: Vec<i32>) {
        let w = free_reduce(word);
        if !w.is_empty() {
            self.relators.push(w);
        }
    }

    fn word(&self, w: &[i32]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let name = &self.generators[w[i].unsigned_abs() as usize - 1];
            let power = (j - i) as i64 * w[i].signum() as i64;
            parts.push(if power == 1 { name.clone() } else { format!("{name}^{power}") });
            i = j;
        }
        parts.join(" ")
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.relators.iter().map(|r| self.word(r)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), words.join(", "))
    }
}

pub(crate) fn free_reduce(word: Vec<i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for x in word {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub(crate) fn inverse(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|x| -x).collect()
}

/// Relator for `lhs = c^-e x c^e`.
fn conj_relator(lhs: i32, x: i32, c: i32, e: i32) -> Vec<i32> {
    let (c, ci) = if e > 0 { (c, -c) } else { (-c, c) };
    vec![lhs, ci, -x, c]
}

/// Upper and lower generator indices for the two ends of an edge.
struct EndGens {
    tail_u: i32,
    tail_l: i32,
    head_u: i32,
    head_l: i32,
}

pub fn twisted_group(a: &AbstractLink) -> GroupPresentation {
    let mut names = Vec::new();
    let mut ends = Vec::new();
    let mut p_rel = Vec::new();
    for edge in &a.edges {
        let base = names.len() as i32;
        match edge.ends {
            EdgeEnds::Loop => {
                names.push(format!("{}_u", edge.id));
                names.push(format!("{}_l", edge.id));
                if edge.parity & 1 == 1 {
                    p_rel.push(vec![base + 1, -(base + 2)]);
                }
                ends.push(EndGens { tail_u: base + 1, tail_l: base + 2, head_u: base + 1, head_l: base + 2 });
            }
            EdgeEnds::Arc { .. } => {
                for suffix in ["tu", "tl", "hu", "hl"] {
                    names.push(format!("{}_{suffix}", edge.id));
                }
                let g = EndGens { tail_u: base + 1, tail_l: base + 2, head_u: base + 3, head_l: base + 4 };
                if edge.parity & 1 == 0 {
                    p_rel.push(vec![g.head_u, -g.tail_u]);
                    p_rel.push(vec![g.head_l, -g.tail_l]);
                } else {
                    p_rel.push(vec![g.head_u, -g.tail_l]);
                    p_rel.push(vec![g.head_l, -g.tail_u]);
                }
                ends.push(g);
            }
        }
    }
    let mut p = GroupPresentation::new(names, Vec::new());
    // Generator pair at slot k: head generators for incoming ends.
    let at = |c: usize, k: u8| -> (i32, i32) {
        let cr = &a.crossings[c];
        let g = &ends[cr.ends[k as usize]];
        if cr.is_incoming(k) {
            (g.head_u, g.head_l)
        } else {
            (g.tail_u, g.tail_l)
        }
    };
    for (c, cr) in a.crossings.iter().enumerate() {
        let e = cr.sign as i32;
        let (ui, li) = at(c, 0);
        let (uo, lo) = at(c, 2);
        let (oi_u, oi_l) = at(c, cr.over_in());
        let (oo_u, oo_l) = at(c, cr.over_out());
        p.push(vec![oo_u, -oi_u]);
        p.push(conj_relator(uo, ui, oo_u, e));
        p.push(vec![lo, -li]);
        p.push(conj_relator(oo_l, oi_l, lo, LOWER_SIGN * e));
    }
    for r in p_rel {
        p.push(r);
    }
    p
}

/// Classical Wirtinger presentation on one level, ignoring bars. Upper-level
/// generators are arcs between undercrossings, lower-level ones arcs between
/// overcrossings.
pub fn virtual_group(a: &AbstractLink, level: Level) -> GroupPresentation {
    let n = a.edges.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for c in &a.crossings {
        // The strand that passes through unbroken on this level.
        let (i, o) = match level {
            Level::Upper => (c.over_in(), c.over_out()),
            Level::Lower => (0, 2),
        };
        let (x, y) = (find(&mut parent, c.ends[i as usize]), find(&mut parent, c.ends[o as usize]));
        parent[x] = y;
    }
    let mut index = vec![0i32; n];
    let mut names = Vec::new();
    let mut roots = std::collections::BTreeMap::new();
    for e in 0..n {
        let r = find(&mut parent, e);
        let g = *roots.entry(r).or_insert_with(|| {
            names.push(format!("x{}", names.len() + 1));
            names.len() as i32
        });
        index[e] = g;
    }
    let mut p = GroupPresentation::new(names, Vec::new());
    for c in &a.crossings {
        let e = c.sign as i32;
        let g = |k: u8| index[c.ends[k as usize]];
        match level {
            Level::Upper => p.push(conj_relator(g(2), g(0), g(c.over_out()), e)),
            Level::Lower => p.push(conj_relator(g(c.over_out()), g(c.over_in()), g(2), LOWER_SIGN * e)),
        }
    }
    p
}

/// Computable isomorphism invariants of a presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub abelianization: Vec<u64>,
    pub homs_s3: u64,
    pub homs_s4: u64,
}

/// Generator cap used when fingerprinting simplified presentations.
pub const FINGERPRINT_GENERATOR_CAP: usize = 24;

pub fn fingerprint(p: &GroupPresentation) -> crate::Result<Fingerprint> {
    let s = tietze_simplify(p, 10_000);
    Ok(Fingerprint {
        abelianization: abelianization(&s.presentation),
        homs_s3: count_homs_with_cap(&s.presentation, 3, FINGERPRINT_GENERATOR_CAP)?,
        homs_s4: count_homs_with_cap(&s.presentation, 4, FINGERPRINT_GENERATOR_CAP)?,
    })
}
