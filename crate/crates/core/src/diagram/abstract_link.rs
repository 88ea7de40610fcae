use std::collections::BTreeMap;

use super::map::PlanarMap;
use super::{Dir, PlanarDiagram};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbstractCrossing {
    pub id: String,
    /// Edge index at each slot, counterclockwise, same roles as a planar
    /// classical crossing.
    pub ends: [usize; 4],
    pub sign: i8,
}

impl AbstractCrossing {
    /// Slot of the incoming over-strand end.
    pub fn over_in(&self) -> u8 {
        if self.sign > 0 {
            3
        } else {
            1
        }
    }

    pub fn over_out(&self) -> u8 {
        if self.sign > 0 {
            1
        } else {
            3
        }
    }

    pub fn is_incoming(&self, slot: u8) -> bool {
        slot == 0 || slot == self.over_in()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeEnds {
    /// A crossing-free closed component.
    Loop,
    Arc { tail: (usize, u8), head: (usize, u8) },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbstractEdge {
    pub id: String,
    pub ends: EdgeEnds,
    pub parity: u8,
}

/// Classical crossings joined by edges carrying bar parity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbstractLink {
    pub crossings: Vec<AbstractCrossing>,
    pub edges: Vec<AbstractEdge>,
}

impl AbstractLink {
    /// The crossing-free unknot with the given bar parity.
    pub fn unknot(parity: u8) -> Self {
        Self {
            crossings: Vec::new(),
            edges: vec![AbstractEdge { id: "1".into(), ends: EdgeEnds::Loop, parity: parity & 1 }],
        }
    }

    /// Build from crossings given as `(id, [edge index; 4], sign)` with slot
    /// roles fixed by the sign, plus edge `(id, parity)` pairs. Edge endpoints
    /// are derived; edges not attached to any crossing become loops.
    pub fn from_slots(crossings: Vec<(String, [usize; 4], i8)>, edges: Vec<(String, u8)>) -> Result<Self> {
        let mut tails = vec![None; edges.len()];
        let mut heads = vec![None; edges.len()];
        let mut out = Vec::with_capacity(crossings.len());
        for (ci, (id, ends, sign)) in crossings.into_iter().enumerate() {
            let c = AbstractCrossing { id, ends, sign: if sign > 0 { 1 } else { -1 } };
            for k in 0..4u8 {
                let e = ends[k as usize];
                let slot = if c.is_incoming(k) { &mut heads } else { &mut tails };
                let entry = slot.get_mut(e).ok_or_else(|| Error::InvalidDiagram(format!("edge index {e} out of range")))?;
                if entry.replace((ci, k)).is_some() {
                    return Err(Error::InvalidDiagram(format!("edge {e} attached twice at the same end")));
                }
            }
            out.push(c);
        }
        let edges = edges
            .into_iter()
            .enumerate()
            .map(|(i, (id, parity))| {
                let ends = match (tails[i], heads[i]) {
                    (Some(tail), Some(head)) => EdgeEnds::Arc { tail, head },
                    (None, None) => EdgeEnds::Loop,
                    _ => return Err(Error::InvalidDiagram(format!("edge '{id}' has one free end"))),
                };
                Ok(AbstractEdge { id, ends, parity: parity & 1 })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { crossings: out, edges })
    }

    pub(crate) fn project(d: &PlanarDiagram) -> Result<Self> {
        super::tld::check_arity(d)?;
        let map = PlanarMap::new(d);
        let nc = map.n_classical;
        let mut crossings: Vec<AbstractCrossing> = d
            .classical
            .iter()
            .map(|c| AbstractCrossing { id: c.id.clone(), ends: [usize::MAX; 4], sign: c.sign() })
            .collect();
        let mut edges = Vec::new();
        let mut used = vec![false; map.arcs.len()];
        // Walk from every outgoing classical end through virtual crossings.
        for v in 0..nc {
            for k in 0..4u8 {
                let (arc, is_tail) = map.rotations[v][k as usize];
                if !is_tail {
                    continue;
                }
                let mut parity = 0;
                let mut a = arc;
                let head = loop {
                    used[a] = true;
                    parity ^= map.arcs[a].bars & 1;
                    let (w, slot) = map.arcs[a].head;
                    if map.is_classical(w) {
                        break (w, slot);
                    }
                    a = map.rotations[w][map.through(w, slot) as usize].0;
                };
                let idx = edges.len();
                crossings[v].ends[k as usize] = idx;
                crossings[head.0].ends[head.1 as usize] = idx;
                edges.push(AbstractEdge {
                    id: map.arcs[arc].label.clone(),
                    ends: EdgeEnds::Arc { tail: (v, k), head },
                    parity: parity as u8,
                });
            }
        }
        // Closed components made only of virtual crossings.
        for start in 0..map.arcs.len() {
            if used[start] {
                continue;
            }
            let mut parity = 0;
            let mut label = map.arcs[start].label.clone();
            let mut a = start;
            loop {
                used[a] = true;
                parity ^= map.arcs[a].bars & 1;
                label = label.min(map.arcs[a].label.clone());
                let (w, slot) = map.arcs[a].head;
                a = map.rotations[w][map.through(w, slot) as usize].0;
                if a == start {
                    break;
                }
            }
            edges.push(AbstractEdge { id: label, ends: EdgeEnds::Loop, parity: parity as u8 });
        }
        for l in &d.loops {
            edges.push(AbstractEdge {
                id: l.clone(),
                ends: EdgeEnds::Loop,
                parity: (d.bar_count(l) & 1) as u8,
            });
        }
        Ok(Self { crossings, edges })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn loops(&self) -> impl Iterator<Item = &AbstractEdge> {
        self.edges.iter().filter(|e| e.ends == EdgeEnds::Loop)
    }

    /// Recompute each sign from the edge directions at the slots: `+1` iff the
    /// end at slot 3 is incoming.
    pub fn recomputed_signs(&self) -> Vec<i8> {
        self.crossings
            .iter()
            .enumerate()
            .map(|(ci, c)| {
                let e = &self.edges[c.ends[3]];
                match e.ends {
                    EdgeEnds::Arc { head, .. } if head == (ci, 3) => 1,
                    _ => -1,
                }
            })
            .collect()
    }

    /// Edge at the far end of a strand leaving `(crossing, slot)` is the one
    /// at the opposite slot; returns `(edge at slot, edge at opposite slot)`.
    pub fn strand(&self, crossing: usize, slot: u8) -> (usize, usize) {
        let c = &self.crossings[crossing];
        (c.ends[slot as usize], c.ends[((slot + 2) % 4) as usize])
    }

    /// Link components, traced through crossings along strands. Returns the
    /// count and a component index per edge.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut comp = vec![usize::MAX; self.edges.len()];
        let mut count = 0;
        for start in 0..self.edges.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut e = start;
            loop {
                comp[e] = count;
                match self.edges[e].ends {
                    EdgeEnds::Loop => break,
                    EdgeEnds::Arc { head: (c, k), .. } => {
                        e = self.crossings[c].ends[((k + 2) % 4) as usize];
                    }
                }
                if e == start {
                    break;
                }
            }
            count += 1;
        }
        (count, comp)
    }

    /// Same link with every bar parity cleared.
    pub fn without_bars(&self) -> Self {
        let mut out = self.clone();
        for e in &mut out.edges {
            e.parity = 0;
        }
        out
    }

    /// Edge-index lookup by identifier.
    pub fn edge_by_id(&self) -> BTreeMap<&str, usize> {
        self.edges.iter().enumerate().map(|(i, e)| (e.id.as_str(), i)).collect()
    }
}

/// Link components of a planar diagram: strands continue straight through
/// classical and virtual crossings. Returns the count and a component index
/// per edge label.
pub fn components(d: &PlanarDiagram) -> Result<(usize, BTreeMap<String, usize>)> {
    super::tld::check_arity(d)?;
    let map = PlanarMap::new(d);
    let mut comp = vec![usize::MAX; map.arcs.len()];
    let mut count = 0;
    for start in 0..map.arcs.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut a = start;
        loop {
            comp[a] = count;
            let (w, slot) = map.arcs[a].head;
            a = map.rotations[w][map.through(w, slot) as usize].0;
            if a == start {
                break;
            }
        }
        count += 1;
    }
    let mut out: BTreeMap<String, usize> =
        map.arcs.iter().enumerate().map(|(i, a)| (a.label.clone(), comp[i])).collect();
    for l in &d.loops {
        out.insert(l.clone(), count);
        count += 1;
    }
    debug_assert!(d.classical.iter().chain(&d.virtuals).all(|c| c.slots.iter().any(|s| s.dir == Dir::In)));
    Ok((count, out))
}
