//! Canonical text codes: equal codes iff the diagrams are isomorphic as
//! rotation systems with the same roles, signs, orientations and bars.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::diagram::map::PlanarMap;
use crate::diagram::{AbstractLink, EdgeEnds, PlanarDiagram};
use crate::{Error, Result};

pub const ABSTRACT_CODE_CAP: usize = 16;

/// Rigid rotation system: per vertex a label and, per slot, the far end
/// `(vertex, slot)`, whether this end is the tail, and an edge weight.
struct Rigid {
    labels: Vec<String>,
    slots: Vec<[((usize, u8), bool, u32); 4]>,
}

impl Rigid {
    fn code_from(&self, start: usize, comp: &mut [bool]) -> String {
        let n = self.labels.len();
        let mut num = vec![usize::MAX; n];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([start]);
        num[start] = 0;
        let mut next = 1;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            comp[v] = true;
            for &((w, _), _, _) in &self.slots[v] {
                if num[w] == usize::MAX {
                    num[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
        let mut s = String::new();
        for v in order {
            s.push_str(&self.labels[v]);
            for &((w, k), tail, weight) in &self.slots[v] {
                let _ = write!(s, " {}.{}{}{}", num[w], k, if tail { '+' } else { '-' }, weight);
            }
            s.push(';');
        }
        s
    }

    fn components(&self) -> Vec<String> {
        let n = self.labels.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![false; n];
            let first = self.code_from(s, &mut comp);
            let mut best = first;
            for t in 0..n {
                if comp[t] && t != s {
                    let c = self.code_from(t, &mut vec![false; n]);
                    if c < best {
                        best = c;
                    }
                }
            }
            for t in 0..n {
                seen[t] |= comp[t];
            }
            out.push(best);
        }
        out.sort();
        out
    }
}

fn finish(mut comps: Vec<String>, mut loops: Vec<u32>) -> String {
    loops.sort_unstable();
    comps.extend(loops.into_iter().map(|b| format!("O{b}")));
    comps.join(" | ")
}

/// Canonical code of an abstract link (at most 16 crossings).
pub fn canonical_code(a: &AbstractLink) -> Result<String> {
    if a.crossings.len() > ABSTRACT_CODE_CAP {
        return Err(Error::SizeCap(format!(
            "canonical code needs at most {ABSTRACT_CODE_CAP} crossings, got {}",
            a.crossings.len()
        )));
    }
    let mut slots = vec![[((0, 0), false, 0); 4]; a.crossings.len()];
    let mut loops = Vec::new();
    for e in &a.edges {
        match e.ends {
            EdgeEnds::Loop => loops.push(u32::from(e.parity & 1)),
            EdgeEnds::Arc { tail, head } => {
                let p = u32::from(e.parity & 1);
                slots[tail.0][tail.1 as usize] = (head, true, p);
                slots[head.0][head.1 as usize] = (tail, false, p);
            }
        }
    }
    let labels = a.crossings.iter().map(|c| if c.sign > 0 { "X+" } else { "X-" }.to_string()).collect();
    Ok(finish(Rigid { labels, slots }.components(), loops))
}

/// Canonical code of a planar diagram, including virtual crossings and exact
/// bar counts. Assumes edge arity has been checked.
pub fn planar_code(d: &PlanarDiagram) -> String {
    let map = PlanarMap::new(d);
    let mut slots = vec![[((0, 0), false, 0); 4]; map.vertex_count()];
    for a in &map.arcs {
        slots[a.tail.0][a.tail.1 as usize] = (a.head, true, a.bars);
        slots[a.head.0][a.head.1 as usize] = (a.tail, false, a.bars);
    }
    let labels = (0..map.vertex_count())
        .map(|v| if map.is_classical(v) { if d.classical[v].sign() > 0 { "X+" } else { "X-" } } else { "V" }.to_string())
        .collect();
    let loops = d.loops.iter().map(|l| d.bar_count(l)).collect();
    finish(Rigid { labels, slots }.components(), loops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_tld;

    #[test]
    fn relabeling_invariance() {
        let a = parse_tld("X 1 -a +b +c -d\nX 2 -c +d +a -b\n").unwrap();
        let b = parse_tld("X q -w +x +y -z\nX p -y +z +w -x\n").unwrap();
        assert_eq!(planar_code(&a), planar_code(&b));
        let (pa, pb) = (a.project().unwrap(), b.project().unwrap());
        assert_eq!(canonical_code(&pa).unwrap(), canonical_code(&pb).unwrap());
    }

    #[test]
    fn bars_matter_by_parity_only_in_abstract_code() {
        let a = parse_tld("X 1 -q +q +p -p\nB p 1\n").unwrap();
        let b = parse_tld("X 1 -q +q +p -p\nB p 3\n").unwrap();
        assert_ne!(planar_code(&a), planar_code(&b));
        assert_eq!(canonical_code(&a.project().unwrap()).unwrap(), canonical_code(&b.project().unwrap()).unwrap());
        let u = AbstractLink::unknot(0);
        assert_ne!(canonical_code(&u).unwrap(), canonical_code(&a.project().unwrap()).unwrap());
    }
}
