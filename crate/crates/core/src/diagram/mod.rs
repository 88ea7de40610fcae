//! Twisted link diagrams: planar diagrams as written by users, and the
//! abstract links they project to.
//!
//! Slot convention at a classical crossing: the four ends are listed
//! counterclockwise, slot 0 is the incoming under-strand end and slot 2 the
//! outgoing one. The over strand enters at slot 3 for a positive crossing and
//! at slot 1 for a negative one. A virtual crossing lists its ends
//! counterclockwise starting from the incoming end whose counterclockwise
//! neighbour is also incoming; its strands are (0, 2) and (1, 3).

mod abstract_link;
pub(crate) mod map;
mod tld;
mod validate;

use std::collections::BTreeMap;

pub use abstract_link::{components, AbstractCrossing, AbstractEdge, AbstractLink, EdgeEnds};
pub use tld::{parse_tld, serialize_tld, ParseError};
pub(crate) use tld::check_arity as tld_check;
pub use validate::{validate, ValidationReport, Violation};

/// Direction of an edge end at a crossing slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    /// The edge ends here (its head); written `-`.
    In,
    /// The edge starts here (its tail); written `+`.
    Out,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub edge: String,
    pub dir: Dir,
}

impl Slot {
    pub fn new(edge: impl Into<String>, dir: Dir) -> Self {
        Self { edge: edge.into(), dir }
    }
    pub fn incoming(edge: impl Into<String>) -> Self {
        Self::new(edge, Dir::In)
    }
    pub fn outgoing(edge: impl Into<String>) -> Self {
        Self::new(edge, Dir::Out)
    }
}

/// A 4-valent vertex: identifier plus its ends in counterclockwise order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub id: String,
    pub slots: [Slot; 4],
}

impl Crossing {
    /// Sign of a classical crossing, read off the slot convention.
    pub fn sign(&self) -> i8 {
        if self.slots[3].dir == Dir::In {
            1
        } else {
            -1
        }
    }
}

/// A twisted link diagram in the plane.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlanarDiagram {
    pub classical: Vec<Crossing>,
    pub virtuals: Vec<Crossing>,
    /// Edge labels of crossing-free closed components.
    pub loops: Vec<String>,
    /// Bar counts per edge label; absent means zero.
    pub bars: BTreeMap<String, u32>,
}

impl PlanarDiagram {
    pub fn unknot() -> Self {
        Self {
            loops: vec!["1".into()],
            ..Self::default()
        }
    }

    pub fn bar_count(&self, edge: &str) -> u32 {
        self.bars.get(edge).copied().unwrap_or(0)
    }

    pub fn set_bars(&mut self, edge: &str, count: u32) {
        if count == 0 {
            self.bars.remove(edge);
        } else {
            self.bars.insert(edge.to_string(), count);
        }
    }

    pub fn add_bars(&mut self, edge: &str, count: u32) {
        let total = self.bar_count(edge) + count;
        self.set_bars(edge, total);
    }

    pub fn crossing_count(&self) -> usize {
        self.classical.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.classical.len() + self.virtuals.len()
    }

    /// All edge labels, sorted.
    pub fn edge_labels(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .classical
            .iter()
            .chain(&self.virtuals)
            .flat_map(|c| c.slots.iter())
            .filter(|s| s.dir == Dir::Out)
            .map(|s| s.edge.clone())
            .chain(self.loops.iter().cloned())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Total bar count over all edges.
    pub fn total_bars(&self) -> u32 {
        self.bars.values().sum()
    }

    /// Same diagram with crossings sorted by identifier, loops sorted and
    /// zero bar entries dropped; two diagrams with identical labels compare
    /// equal after normalization.
    pub fn normalized(&self) -> Self {
        let mut out = self.clone();
        out.classical.sort_by(|a, b| a.id.cmp(&b.id));
        out.virtuals.sort_by(|a, b| a.id.cmp(&b.id));
        out.loops.sort();
        out.bars.retain(|_, v| *v > 0);
        out
    }

    /// Project to the abstract link: drop virtual crossings, fuse the arcs
    /// they interrupt and reduce bar counts to parity.
    pub fn project(&self) -> crate::Result<AbstractLink> {
        AbstractLink::project(self)
    }
}
