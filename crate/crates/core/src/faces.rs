//! Faces of the ribbon neighbourhood of an abstract link, two-colorability and
//! the carrier surface obtained by capping the faces with disks.

use std::collections::BTreeMap;

use serde::Serialize;

pub use crate::ribbon::Side;
use crate::diagram::{AbstractLink, EdgeEnds};
use crate::ribbon::{Ribbon, SlotEnd};

/// One edge side on a face boundary. Sides are named at the edge's tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FaceGerm {
    pub edge: usize,
    pub side: Side,
    pub forward: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Vec<FaceGerm>>,
    pub face_of: BTreeMap<(usize, Side), usize>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

pub fn faces(a: &AbstractLink) -> FaceSet {
    let mut arc_ids = Vec::new();
    let mut local = vec![usize::MAX; a.edges.len()];
    let mut ribbon_edges = Vec::new();
    for (e, edge) in a.edges.iter().enumerate() {
        if let EdgeEnds::Arc { tail, head } = edge.ends {
            local[e] = arc_ids.len();
            arc_ids.push(e);
            ribbon_edges.push((tail, head, edge.parity & 1));
        }
    }
    let rotations: Vec<[SlotEnd; 4]> = a
        .crossings
        .iter()
        .enumerate()
        .map(|(ci, c)| {
            let mut r = [(0, false); 4];
            for k in 0..4 {
                let e = c.ends[k];
                let is_tail = matches!(a.edges[e].ends, EdgeEnds::Arc { tail, .. } if tail == (ci, k as u8));
                r[k] = (local[e], is_tail);
            }
            r
        })
        .collect();
    let mut faces: Vec<Vec<FaceGerm>> = Ribbon { rotations: &rotations, edges: &ribbon_edges }
        .faces()
        .into_iter()
        .map(|f| {
            f.into_iter()
                .map(|s| FaceGerm { edge: arc_ids[s.edge], side: s.side, forward: s.forward })
                .collect()
        })
        .collect();
    for (e, edge) in a.edges.iter().enumerate() {
        if edge.ends != EdgeEnds::Loop {
            continue;
        }
        let l = FaceGerm { edge: e, side: Side::Left, forward: true };
        let r = FaceGerm { edge: e, side: Side::Right, forward: true };
        if edge.parity & 1 == 0 {
            faces.push(vec![l]);
            faces.push(vec![r]);
        } else {
            faces.push(vec![l, r]);
        }
    }
    let mut face_of = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for g in f {
            face_of.insert((g.edge, g.side), i);
        }
    }
    FaceSet { faces, face_of }
}

/// A 2-coloring of the faces (one bit per face) in which the two sides of
/// every edge differ, if one exists.
pub fn two_colorable(a: &AbstractLink) -> Option<Vec<u8>> {
    let fs = faces(a);
    let mut adj = vec![Vec::new(); fs.len()];
    for e in 0..a.edges.len() {
        let (l, r) = (fs.face_of[&(e, Side::Left)], fs.face_of[&(e, Side::Right)]);
        if l == r {
            return None;
        }
        adj[l].push(r);
        adj[r].push(l);
    }
    let mut color = vec![u8::MAX; fs.len()];
    for s in 0..fs.len() {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(f) = stack.pop() {
            for &g in &adj[f] {
                if color[g] == u8::MAX {
                    color[g] = 1 - color[f];
                    stack.push(g);
                } else if color[g] == color[f] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentCarrier {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_genus: usize,
    pub orientable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CarrierSummary {
    pub components: Vec<ComponentCarrier>,
    pub euler_genus: usize,
    pub orientable: bool,
}

/// Connected components of the diagram graph; a crossing-free loop is its own
/// component. Returns a component index per edge.
fn graph_components(a: &AbstractLink) -> (usize, Vec<usize>) {
    let mut comp_of_crossing = vec![usize::MAX; a.crossings.len()];
    let mut count = 0;
    for s in 0..a.crossings.len() {
        if comp_of_crossing[s] != usize::MAX {
            continue;
        }
        comp_of_crossing[s] = count;
        let mut stack = vec![s];
        while let Some(c) = stack.pop() {
            for &e in &a.crossings[c].ends {
                if let EdgeEnds::Arc { tail, head } = a.edges[e].ends {
                    for w in [tail.0, head.0] {
                        if comp_of_crossing[w] == usize::MAX {
                            comp_of_crossing[w] = count;
                            stack.push(w);
                        }
                    }
                }
            }
        }
        count += 1;
    }
    let mut comp = vec![0; a.edges.len()];
    for (e, edge) in a.edges.iter().enumerate() {
        comp[e] = match edge.ends {
            EdgeEnds::Arc { tail, .. } => comp_of_crossing[tail.0],
            EdgeEnds::Loop => {
                count += 1;
                count - 1
            }
        };
    }
    (count, comp)
}

/// Whether every cycle has even total parity: a potential `p` on crossings
/// with `p(tail) + p(head) = parity` mod 2 on every edge must exist.
fn orientable_components(a: &AbstractLink, ncomp: usize, comp: &[usize]) -> Vec<bool> {
    let mut ok = vec![true; ncomp];
    let mut adj = vec![Vec::new(); a.crossings.len()];
    for (e, edge) in a.edges.iter().enumerate() {
        if let EdgeEnds::Arc { tail, head } = edge.ends {
            adj[tail.0].push((head.0, edge.parity & 1));
            adj[head.0].push((tail.0, edge.parity & 1));
        } else if edge.parity & 1 == 1 {
            ok[comp[e]] = false;
        }
    }
    let mut pot = vec![u8::MAX; a.crossings.len()];
    for s in 0..a.crossings.len() {
        if pot[s] != u8::MAX {
            continue;
        }
        pot[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &(w, p) in &adj[v] {
                if pot[w] == u8::MAX {
                    pot[w] = pot[v] ^ p;
                    stack.push(w);
                } else if pot[w] != pot[v] ^ p {
                    let e = a.crossings[v].ends[0];
                    ok[comp[e]] = false;
                }
            }
        }
    }
    ok
}

pub fn carrier(a: &AbstractLink) -> CarrierSummary {
    let (ncomp, comp) = graph_components(a);
    let fs = faces(a);
    let mut v = vec![0usize; ncomp];
    let mut e = vec![0usize; ncomp];
    let mut f = vec![0usize; ncomp];
    for c in &a.crossings {
        v[comp[c.ends[0]]] += 1;
    }
    for (i, edge) in a.edges.iter().enumerate() {
        e[comp[i]] += 1;
        if edge.ends == EdgeEnds::Loop {
            // A loop is drawn as one vertex and one edge.
            v[comp[i]] += 1;
        }
    }
    for face in &fs.faces {
        f[comp[face[0].edge]] += 1;
    }
    let orient = orientable_components(a, ncomp, &comp);
    let components: Vec<ComponentCarrier> = (0..ncomp)
        .map(|c| {
            let chi = v[c] as i64 - e[c] as i64 + f[c] as i64;
            ComponentCarrier {
                vertices: v[c],
                edges: e[c],
                faces: f[c],
                euler_genus: (2 - chi) as usize,
                orientable: orient[c],
            }
        })
        .collect();
    CarrierSummary {
        euler_genus: components.iter().map(|c| c.euler_genus).sum(),
        orientable: components.iter().all(|c| c.orientable),
        components,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn onefoil() -> AbstractLink {
        AbstractLink::from_slots(vec![("1".into(), [1, 1, 0, 0], 1)], vec![("a".into(), 1), ("b".into(), 1)]).unwrap()
    }

    fn torus1212() -> AbstractLink {
        AbstractLink::from_slots(
            vec![("1".into(), [1, 0, 2, 3], 1), ("2".into(), [0, 3, 1, 2], 1)],
            (1..=4).map(|i| (format!("e{i}"), 0)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn loops() {
        assert_eq!(faces(&AbstractLink::unknot(0)).len(), 2);
        assert_eq!(faces(&AbstractLink::unknot(1)).len(), 1);
        assert_eq!(two_colorable(&AbstractLink::unknot(0)).map(|c| c.len()), Some(2));
        assert!(two_colorable(&AbstractLink::unknot(1)).is_none());
        let c = carrier(&AbstractLink::unknot(0));
        assert_eq!((c.euler_genus, c.orientable), (0, true));
        let c = carrier(&AbstractLink::unknot(1));
        assert_eq!((c.euler_genus, c.orientable), (1, false));
    }

    #[test]
    fn onefoil_lives_in_a_klein_bottle() {
        let o = onefoil();
        assert_eq!(faces(&o).len(), 1);
        let c = carrier(&o);
        assert_eq!((c.euler_genus, c.orientable), (2, false));
    }

    #[test]
    fn torus_diagram() {
        let t = torus1212();
        assert_eq!(faces(&t).len(), 2);
        let c = carrier(&t);
        assert_eq!((c.euler_genus, c.orientable), (2, true));
        assert!(two_colorable(&t).is_none());
    }

    #[test]
    fn every_germ_in_one_face() {
        for l in [onefoil(), torus1212()] {
            let fs = faces(&l);
            let total: usize = fs.faces.iter().map(Vec::len).sum();
            assert_eq!(total, 2 * l.edges.len());
            assert_eq!(fs.face_of.len(), 2 * l.edges.len());
        }
    }
}
