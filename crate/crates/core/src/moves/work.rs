//! Mutable, label-addressed form of a planar diagram used while rewriting.

use std::collections::{BTreeMap, BTreeSet};

use crate::diagram::{Crossing, Dir, PlanarDiagram, Slot};

#[derive(Clone, Debug)]
pub(crate) struct Vertex {
    pub id: String,
    pub virt: bool,
    pub slots: [(String, Dir); 4],
}

impl Vertex {
    /// Classical vertex from a counterclockwise ring of ends, rotated so that
    /// slot 0 is the incoming end of the under strand. `under[k]` marks the
    /// ends of the under strand.
    pub fn classical(id: String, ring: [(String, Dir); 4], under: [bool; 4]) -> Self {
        let r = (0..4).find(|&k| under[k] && ring[k].1 == Dir::In).expect("under strand has an incoming end");
        Vertex { id, virt: false, slots: rotate(ring, r) }
    }

    /// Virtual vertex from a counterclockwise ring of ends, rotated so that
    /// slot 0 is the incoming end followed by another incoming end.
    pub fn virtual_(id: String, ring: [(String, Dir); 4]) -> Self {
        let r = (0..4)
            .find(|&k| ring[k].1 == Dir::In && ring[(k + 1) % 4].1 == Dir::In)
            .expect("virtual ring has two adjacent incoming ends");
        Vertex { id, virt: true, slots: rotate(ring, r) }
    }
}

fn rotate(ring: [(String, Dir); 4], r: usize) -> [(String, Dir); 4] {
    std::array::from_fn(|k| ring[(k + r) % 4].clone())
}

#[derive(Clone, Debug)]
pub(crate) struct Work {
    pub verts: Vec<Vertex>,
    pub loops: BTreeMap<String, u32>,
    pub bars: BTreeMap<String, u32>,
    used_edges: BTreeSet<String>,
    used_ids: BTreeSet<String>,
}

impl Work {
    pub fn new(d: &PlanarDiagram) -> Self {
        let mut verts = Vec::new();
        for (virt, list) in [(false, &d.classical), (true, &d.virtuals)] {
            for c in list {
                verts.push(Vertex {
                    id: c.id.clone(),
                    virt,
                    slots: std::array::from_fn(|k| (c.slots[k].edge.clone(), c.slots[k].dir)),
                });
            }
        }
        let loops = d.loops.iter().map(|l| (l.clone(), d.bar_count(l))).collect();
        let mut bars = d.bars.clone();
        for l in &d.loops {
            bars.remove(l);
        }
        let used_edges = d.edge_labels().into_iter().collect();
        let used_ids = verts.iter().map(|v| v.id.clone()).collect();
        Work { verts, loops, bars, used_edges, used_ids }
    }

    pub fn into_diagram(self) -> PlanarDiagram {
        let mut d = PlanarDiagram::default();
        for v in self.verts {
            let c = Crossing { id: v.id, slots: v.slots.map(|(e, dir)| Slot::new(e, dir)) };
            if v.virt {
                d.virtuals.push(c);
            } else {
                d.classical.push(c);
            }
        }
        for (l, b) in self.loops {
            if b > 0 {
                d.bars.insert(l.clone(), b);
            }
            d.loops.push(l);
        }
        for (e, b) in self.bars {
            if b > 0 {
                d.bars.insert(e, b);
            }
        }
        d
    }

    fn fresh(used: &mut BTreeSet<String>, prefix: &str) -> String {
        let mut n = used.len() + 1;
        loop {
            let s = format!("{prefix}{n}");
            if !used.contains(&s) {
                used.insert(s.clone());
                return s;
            }
            n += 1;
        }
    }

    pub fn fresh_edge(&mut self) -> String {
        Self::fresh(&mut self.used_edges, "e")
    }

    pub fn fresh_vertex(&mut self, virt: bool) -> String {
        Self::fresh(&mut self.used_ids, if virt { "v" } else { "c" })
    }

    pub fn vertex(&self, id: &str) -> Option<usize> {
        self.verts.iter().position(|v| v.id == id)
    }

    pub fn end(&self, label: &str, dir: Dir) -> Option<(usize, usize)> {
        self.verts.iter().enumerate().find_map(|(vi, v)| {
            v.slots.iter().position(|(e, d)| e == label && *d == dir).map(|k| (vi, k))
        })
    }

    pub fn bar_count(&self, label: &str) -> u32 {
        self.bars.get(label).or_else(|| self.loops.get(label)).copied().unwrap_or(0)
    }

    pub fn set_bars(&mut self, label: &str, n: u32) {
        if let Some(b) = self.loops.get_mut(label) {
            *b = n;
        } else if n == 0 {
            self.bars.remove(label);
        } else {
            self.bars.insert(label.to_string(), n);
        }
    }

    pub fn is_arc(&self, label: &str) -> bool {
        self.end(label, Dir::Out).is_some()
    }

    /// Cut an arc just before its head: the head end is renamed to a fresh
    /// label, which is returned. The old label is left without a head. Bars
    /// stay on the old label.
    pub fn cut(&mut self, label: &str) -> String {
        let new = self.fresh_edge();
        let (vi, k) = self.end(label, Dir::In).expect("arc has a head");
        self.verts[vi].slots[k].0 = new.clone();
        new
    }

    /// Remove a vertex, joining each strand's incoming arc to its outgoing
    /// arc. The incoming label survives and absorbs the bars.
    pub fn remove_vertex(&mut self, vi: usize) {
        for s in 0..2 {
            let v = &self.verts[vi];
            let (i, o) = if v.slots[s].1 == Dir::In { (s, s + 2) } else { (s + 2, s) };
            let a = v.slots[i].0.clone();
            let b = v.slots[o].0.clone();
            // Detach this strand from the vertex before relabeling.
            self.verts[vi].slots[i].0 = String::new();
            self.verts[vi].slots[o].0 = String::new();
            if a == b {
                let n = self.bar_count(&a);
                self.bars.remove(&a);
                self.loops.insert(a, n);
                continue;
            }
            let n = self.bar_count(&a) + self.bar_count(&b);
            self.bars.remove(&b);
            if let Some((wi, k)) = self.end(&b, Dir::In) {
                self.verts[wi].slots[k].0 = a.clone();
            }
            self.set_bars(&a, n);
            self.used_edges.remove(&b);
        }
        let v = self.verts.remove(vi);
        self.used_ids.remove(&v.id);
    }
}
