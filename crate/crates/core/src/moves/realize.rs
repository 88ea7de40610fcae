//! Planar realization of an abstract link.
//!
//! Crossings sit in a row below a horizontal line, each sending its four
//! stubs up to consecutive points of the line. Every edge is an upper
//! semicircle between its two stub points; two semicircles meet once iff
//! their endpoints interleave, and each meeting becomes a virtual crossing.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::work::Vertex;
use crate::diagram::{AbstractLink, Crossing, Dir, EdgeEnds, PlanarDiagram, Slot};
use crate::{Error, Result};

const ATTEMPTS: u64 = 64;

/// Exact rational `num / den` with `den > 0`.
#[derive(Clone, Copy, Debug)]
struct Ratio {
    num: i128,
    den: i128,
}

impl Ratio {
    fn new(num: i128, den: i128) -> Self {
        if den < 0 {
            Ratio { num: -num, den: -den }
        } else {
            Ratio { num, den }
        }
    }

    fn cmp(&self, o: &Ratio) -> Ordering {
        (self.num * o.den).cmp(&(o.num * self.den))
    }
}

/// Left-to-right stub position of `slot` at crossing `c` under rotation
/// shift `r`: stubs read `r+3, r+2, r+1, r`.
fn stub(c: usize, slot: u8, r: usize) -> usize {
    4 * c + (r + 3 + 4 - slot as usize) % 4
}

fn interleave(p: (usize, usize), q: (usize, usize)) -> bool {
    let (a1, a2) = (p.0.min(p.1), p.0.max(p.1));
    let (b1, b2) = (q.0.min(q.1), q.0.max(q.1));
    (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2)
}

fn arcs(a: &AbstractLink, shifts: &[usize]) -> Vec<Option<(usize, usize)>> {
    a.edges
        .iter()
        .map(|e| match e.ends {
            EdgeEnds::Loop => None,
            EdgeEnds::Arc { tail, head } => {
                Some((stub(tail.0, tail.1, shifts[tail.0]), stub(head.0, head.1, shifts[head.0])))
            }
        })
        .collect()
}

fn virtual_count(a: &AbstractLink, shifts: &[usize]) -> usize {
    let ends: Vec<_> = arcs(a, shifts).into_iter().flatten().collect();
    let mut n = 0;
    for i in 0..ends.len() {
        for j in i + 1..ends.len() {
            n += usize::from(interleave(ends[i], ends[j]));
        }
    }
    n
}

/// Greedy choice of stub rotations to keep the virtual crossing count low.
fn choose_shifts(a: &AbstractLink) -> Vec<usize> {
    let mut shifts = vec![0; a.crossings.len()];
    let mut best = virtual_count(a, &shifts);
    for _ in 0..3 {
        let mut improved = false;
        for c in 0..shifts.len() {
            for r in 0..4 {
                let old = shifts[c];
                shifts[c] = r;
                let n = virtual_count(a, &shifts);
                if n < best {
                    best = n;
                    improved = true;
                } else {
                    shifts[c] = old;
                }
            }
        }
        if !improved {
            break;
        }
    }
    shifts
}

struct Meeting {
    /// Edge whose left endpoint is further left, then the other one.
    edges: [usize; 2],
    x: Ratio,
}

/// Virtual meetings in general position, or `None` if two fall on the same
/// point of some edge.
fn meetings(ends: &[Option<(usize, usize)>], pos: &[i128]) -> Option<(Vec<Meeting>, Vec<Vec<usize>>)> {
    let span = |e: usize| {
        let (t, h) = ends[e].expect("arc");
        (pos[t.min(h)], pos[t.max(h)])
    };
    let mut list = Vec::new();
    for i in 0..ends.len() {
        for j in i + 1..ends.len() {
            let (Some(p), Some(q)) = (ends[i], ends[j]) else { continue };
            if !interleave(p, q) {
                continue;
            }
            let (al, be) = if span(i).0 < span(j).0 { (i, j) } else { (j, i) };
            let ((a1, a2), (b1, b2)) = (span(al), span(be));
            let x = Ratio::new(a1 * a2 - b1 * b2, (a1 + a2) - (b1 + b2));
            list.push(Meeting { edges: [al, be], x });
        }
    }
    let mut along = vec![Vec::new(); ends.len()];
    for (m, meet) in list.iter().enumerate() {
        for e in meet.edges {
            along[e].push(m);
        }
    }
    for (e, ms) in along.iter_mut().enumerate() {
        let Some((t, h)) = ends[e] else { continue };
        ms.sort_by(|&p, &q| list[p].x.cmp(&list[q].x));
        if ms.windows(2).any(|w| list[w[0]].x.cmp(&list[w[1]].x) == Ordering::Equal) {
            return None;
        }
        if t > h {
            ms.reverse();
        }
    }
    Some((list, along))
}

/// A planar diagram whose projection is `a`, built from semicircle arcs.
/// Odd edges carry one bar on their first segment.
pub fn realize(a: &AbstractLink) -> Result<PlanarDiagram> {
    let shifts = choose_shifts(a);
    let ends = arcs(a, &shifts);
    let stubs = 4 * a.crossings.len();
    let (list, along) = (0..ATTEMPTS)
        .find_map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let pos: Vec<i128> = (0..stubs).map(|k| 64 * k as i128 + rng.gen_range(0..32)).collect();
            meetings(&ends, &pos)
        })
        .ok_or_else(|| Error::InvalidDiagram("no general-position realization found".into()))?;

    let mut used: BTreeSet<String> = a.edges.iter().map(|e| e.id.clone()).collect();
    let fresh = |prefix: &str, used: &mut BTreeSet<String>| {
        let mut n = used.len() + 1;
        loop {
            let s = format!("{prefix}{n}");
            n += 1;
            if used.insert(s.clone()) {
                return s;
            }
        }
    };
    // Segment labels per edge, in traversal order.
    let segs: Vec<Vec<String>> = a
        .edges
        .iter()
        .enumerate()
        .map(|(e, edge)| {
            let mut s = vec![edge.id.clone()];
            for _ in 0..along[e].len() {
                s.push(fresh("e", &mut used));
            }
            s
        })
        .collect();

    let mut d = PlanarDiagram::default();
    for c in &a.crossings {
        let slots = std::array::from_fn(|k| {
            let e = c.ends[k];
            if c.is_incoming(k as u8) {
                Slot::new(segs[e].last().expect("segment").clone(), Dir::In)
            } else {
                Slot::new(segs[e][0].clone(), Dir::Out)
            }
        });
        d.classical.push(Crossing { id: c.id.clone(), slots });
    }
    let mut ids: BTreeSet<String> = a.crossings.iter().map(|c| c.id.clone()).collect();
    for (m, meet) in list.iter().enumerate() {
        // Ring: first edge toward its right end, second edge toward its
        // right end, then the two halves back toward the left.
        let half = |e: usize, rightward: bool| -> (String, Dir) {
            let (t, h) = ends[e].expect("arc");
            let i = along[e].iter().position(|&x| x == m).expect("meeting on edge");
            let forward = rightward == (t < h);
            if forward {
                (segs[e][i + 1].clone(), Dir::Out)
            } else {
                (segs[e][i].clone(), Dir::In)
            }
        };
        let [al, be] = meet.edges;
        let ring = [half(al, true), half(be, true), half(al, false), half(be, false)];
        let id = fresh("v", &mut ids);
        let v = Vertex::virtual_(id, ring);
        d.virtuals.push(Crossing { id: v.id, slots: v.slots.map(|(e, dir)| Slot::new(e, dir)) });
    }
    for e in &a.edges {
        if e.parity & 1 == 1 {
            d.bars.insert(e.id.clone(), 1);
        }
        if e.ends == EdgeEnds::Loop {
            d.loops.push(e.id.clone());
        }
    }
    Ok(d)
}
