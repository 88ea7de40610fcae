//! Boundary tracing for 4-valent ribbon graphs with twisted edges.
//!
//! Each edge has two strip sides, named relative to its tail: `Left` is the
//! counterclockwise side at the tail vertex. A twisted edge (odd parity)
//! arrives at its head with the sides exchanged. A face is a cycle of edge
//! sides joined at vertex corners; corner `k` of a vertex lies between slots
//! `k` and `k + 1`.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn index(self) -> usize {
        match self {
            Side::Left => 0,
            Side::Right => 1,
        }
    }
}

/// One edge side on a face boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FaceStep {
    pub edge: usize,
    pub side: Side,
    /// Traversed from tail to head.
    pub forward: bool,
    /// Corner `(vertex, k)` entered after this step.
    pub corner: (usize, u8),
}

/// Slot contents: edge index and whether this end is the edge's tail.
pub(crate) type SlotEnd = (usize, bool);

pub(crate) struct Ribbon<'a> {
    pub rotations: &'a [[SlotEnd; 4]],
    /// `(tail (vertex, slot), head (vertex, slot), parity)` per edge.
    pub edges: &'a [((usize, u8), (usize, u8), u8)],
}

impl Ribbon<'_> {
    /// Whether the germ of `side` at the given end lies on the
    /// counterclockwise side of its slot.
    fn ccw(&self, edge: usize, side: Side, at_tail: bool) -> bool {
        let parity = self.edges[edge].2 & 1;
        (side == Side::Left) ^ (!at_tail && parity == 0)
    }

    fn end(&self, edge: usize, at_tail: bool) -> (usize, u8) {
        if at_tail {
            self.edges[edge].0
        } else {
            self.edges[edge].1
        }
    }

    pub fn faces(&self) -> Vec<Vec<FaceStep>> {
        let mut seen = vec![[false; 2]; self.edges.len()];
        let mut faces = Vec::new();
        for start in 0..self.edges.len() {
            for side in [Side::Left, Side::Right] {
                if seen[start][side.index()] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut edge, mut side, mut from_tail) = (start, side, true);
                loop {
                    seen[edge][side.index()] = true;
                    let at_tail = !from_tail;
                    let (v, slot) = self.end(edge, at_tail);
                    let (next_slot, want_ccw, corner) = if self.ccw(edge, side, at_tail) {
                        ((slot + 1) % 4, false, slot)
                    } else {
                        ((slot + 3) % 4, true, (slot + 3) % 4)
                    };
                    face.push(FaceStep { edge, side, forward: from_tail, corner: (v, corner) });
                    let (next_edge, is_tail) = self.rotations[v][next_slot as usize];
                    let next_side = if self.ccw(next_edge, Side::Left, is_tail) == want_ccw {
                        Side::Left
                    } else {
                        Side::Right
                    };
                    edge = next_edge;
                    side = next_side;
                    from_tail = is_tail;
                    if edge == start && side == face[0].side && from_tail {
                        break;
                    }
                    if seen[edge][side.index()] {
                        // Entered a side from its head end: only possible for a
                        // face that started mid-cycle, which cannot happen.
                        unreachable!("face tracing revisited an edge side");
                    }
                }
                faces.push(face);
            }
        }
        faces
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // One vertex, edge 0 from slot 2 to slot 3, edge 1 from slot 1 to slot 0.
    fn single_vertex(parity: u8) -> (Vec<[SlotEnd; 4]>, Vec<((usize, u8), (usize, u8), u8)>) {
        let rot = vec![[(1, false), (1, true), (0, true), (0, false)]];
        let edges = vec![((0, 2), (0, 3), parity), ((0, 1), (0, 0), parity)];
        (rot, edges)
    }

    #[test]
    fn planar_figure_eight_curve_has_three_faces() {
        let (rot, edges) = single_vertex(0);
        let faces = Ribbon { rotations: &rot, edges: &edges }.faces();
        assert_eq!(faces.len(), 3);
        let total: usize = faces.iter().map(Vec::len).sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn twisted_edges_merge_faces() {
        let (rot, edges) = single_vertex(1);
        let faces = Ribbon { rotations: &rot, edges: &edges }.faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 4);
    }
}
