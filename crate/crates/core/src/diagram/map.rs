//! Indexed view of a planar diagram: vertices, arcs, faces.

use std::collections::BTreeMap;

use super::{Dir, PlanarDiagram};
use crate::ribbon::{FaceStep, Ribbon, SlotEnd};

#[derive(Clone, Debug)]
pub(crate) struct Arc {
    pub label: String,
    pub tail: (usize, u8),
    pub head: (usize, u8),
    pub bars: u32,
}

/// Vertices are numbered classical first, then virtual.
#[derive(Clone, Debug)]
pub(crate) struct PlanarMap {
    pub n_classical: usize,
    pub ids: Vec<String>,
    pub rotations: Vec<[SlotEnd; 4]>,
    pub arcs: Vec<Arc>,
}

impl PlanarMap {
    /// Assumes arity has been checked.
    pub fn new(d: &PlanarDiagram) -> Self {
        let verts: Vec<_> = d.classical.iter().chain(&d.virtuals).collect();
        let mut tails: BTreeMap<&str, (usize, u8)> = BTreeMap::new();
        let mut heads: BTreeMap<&str, (usize, u8)> = BTreeMap::new();
        for (v, c) in verts.iter().enumerate() {
            for (k, s) in c.slots.iter().enumerate() {
                let map = if s.dir == Dir::Out { &mut tails } else { &mut heads };
                map.insert(s.edge.as_str(), (v, k as u8));
            }
        }
        let mut arcs = Vec::new();
        let mut arc_index = BTreeMap::new();
        for (label, &tail) in &tails {
            let head = heads[label];
            arc_index.insert(label.to_string(), arcs.len());
            arcs.push(Arc { label: label.to_string(), tail, head, bars: d.bar_count(label) });
        }
        let rotations = verts
            .iter()
            .map(|c| {
                let mut r = [(0, false); 4];
                for (k, s) in c.slots.iter().enumerate() {
                    r[k] = (arc_index[&s.edge], s.dir == Dir::Out);
                }
                r
            })
            .collect();
        Self {
            n_classical: d.classical.len(),
            ids: verts.iter().map(|c| c.id.clone()).collect(),
            rotations,
            arcs,
        }
    }

    pub fn is_classical(&self, v: usize) -> bool {
        v < self.n_classical
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    /// Faces of the plane map; bars play no role.
    pub fn faces(&self) -> Vec<Vec<FaceStep>> {
        let edges: Vec<_> = self.arcs.iter().map(|a| (a.tail, a.head, 0u8)).collect();
        Ribbon { rotations: &self.rotations, edges: &edges }.faces()
    }

    /// Connected components of vertices; returns a component index per vertex.
    pub fn vertex_components(&self) -> (usize, Vec<usize>) {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(v) = stack.pop() {
                for &(a, _) in &self.rotations[v] {
                    for w in [self.arcs[a].tail.0, self.arcs[a].head.0] {
                        if comp[w] == usize::MAX {
                            comp[w] = count;
                            stack.push(w);
                        }
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    /// The slot a strand leaves by after entering `(v, slot)`.
    pub fn through(&self, _v: usize, slot: u8) -> u8 {
        (slot + 2) % 4
    }
}
