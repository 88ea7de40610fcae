//! Seeded random move walks and bounded bidirectional equivalence search.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{apply_move, find_moves, planar_code, Direction, MoveSite, MoveTag};
use crate::diagram::PlanarDiagram;
use crate::{Error, Result};

pub const DEFAULT_FRONTIER_CAP: usize = 100_000;

/// Size limits a walk never exceeds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WalkCaps {
    pub max_classical: usize,
    pub max_virtual: usize,
    pub max_bars: u32,
}

impl Default for WalkCaps {
    fn default() -> Self {
        WalkCaps { max_classical: 10, max_virtual: 12, max_bars: 10 }
    }
}

impl WalkCaps {
    fn admits(&self, d: &PlanarDiagram) -> bool {
        d.classical.len() <= self.max_classical && d.virtuals.len() <= self.max_virtual && d.total_bars() <= self.max_bars
    }
}

/// Diagram at the end of a seeded random walk; see [`random_walk_steps`].
pub fn random_walk(d: &PlanarDiagram, seed: u64, steps: usize, caps: WalkCaps) -> Result<PlanarDiagram> {
    let walk = random_walk_steps(d, seed, steps, caps)?;
    Ok(walk.last().map_or_else(|| d.clone(), |s| s.1.clone()))
}

/// Random walk of `steps` moves. Each step flips a coin between reductions
/// and expansions, then picks a site uniformly; sites whose result breaks
/// the caps are skipped. Returns the applied sites and the diagram after
/// each one. The walk stops early only if no site fits the caps.
pub fn random_walk_steps(
    d: &PlanarDiagram,
    seed: u64,
    steps: usize,
    caps: WalkCaps,
) -> Result<Vec<(MoveSite, PlanarDiagram)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = d.clone();
    let mut out = Vec::with_capacity(steps);
    for _ in 0..steps {
        let sites = find_moves(&cur, None);
        let (mut reduce, mut expand): (Vec<_>, Vec<_>) =
            sites.into_iter().partition(|s| s.direction == Direction::Reduce);
        reduce.shuffle(&mut rng);
        expand.shuffle(&mut rng);
        let order = if rng.gen_bool(0.5) { [reduce, expand] } else { [expand, reduce] };
        let mut next = None;
        for s in order.into_iter().flatten() {
            let r = apply_move(&cur, &s)?;
            if caps.admits(&r) {
                next = Some((s, r));
                break;
            }
        }
        let Some((s, r)) = next else { break };
        cur = r.clone();
        out.push((s, r));
    }
    Ok(out)
}

struct Node {
    diagram: PlanarDiagram,
    /// Forward side: the node it was reached from and the site used.
    /// Backward side: the node one step closer to the target and the site
    /// leading there.
    link: Option<(String, MoveSite)>,
}

type Side = HashMap<String, Node>;

/// Site of `from` with the given tag whose result has code `to`.
fn site_between(from: &PlanarDiagram, tag: MoveTag, to: &str) -> Option<MoveSite> {
    find_moves(from, Some(&[tag]))
        .into_iter()
        .find(|s| apply_move(from, s).is_ok_and(|r| planar_code(&r) == to))
}

fn grow(side: &mut Side, frontier: &[String], backward: bool, cap: usize) -> Result<Vec<String>> {
    let mut next = Vec::new();
    for code in frontier {
        let d = side[code].diagram.clone();
        for s in find_moves(&d, None) {
            let r = apply_move(&d, &s)?;
            let c = planar_code(&r);
            if side.contains_key(&c) {
                continue;
            }
            let link = if backward {
                // The walk runs from `r` to `d`; record a forward site.
                match site_between(&r, s.tag, code) {
                    Some(f) => (code.clone(), f),
                    None => continue,
                }
            } else {
                (code.clone(), s)
            };
            side.insert(c.clone(), Node { diagram: r, link: Some(link) });
            next.push(c);
            if side.len() > cap {
                return Err(Error::SearchExhausted(cap));
            }
        }
    }
    Ok(next)
}

/// Shortest move sequence of length at most `depth` taking `d1` to a
/// diagram with the same planar code as `d2`, or `None`.
pub fn equiv_search(d1: &PlanarDiagram, d2: &PlanarDiagram, depth: usize) -> Result<Option<Vec<MoveSite>>> {
    equiv_search_with_cap(d1, d2, depth, DEFAULT_FRONTIER_CAP)
}

pub fn equiv_search_with_cap(
    d1: &PlanarDiagram,
    d2: &PlanarDiagram,
    depth: usize,
    cap: usize,
) -> Result<Option<Vec<MoveSite>>> {
    let (c1, c2) = (planar_code(d1), planar_code(d2));
    let mut fwd = Side::from([(c1.clone(), Node { diagram: d1.clone(), link: None })]);
    let mut bwd = Side::from([(c2.clone(), Node { diagram: d2.clone(), link: None })]);
    let (mut ff, mut bf) = (vec![c1], vec![c2]);
    let mut meet = ff.iter().find(|c| bwd.contains_key(*c)).cloned();
    let (mut df, mut db) = (0, 0);
    while meet.is_none() && df + db < depth {
        if df <= db {
            ff = grow(&mut fwd, &ff, false, cap)?;
            df += 1;
            meet = ff.iter().find(|c| bwd.contains_key(*c)).cloned();
        } else {
            bf = grow(&mut bwd, &bf, true, cap)?;
            db += 1;
            meet = bf.iter().find(|c| fwd.contains_key(*c)).cloned();
        }
        if ff.is_empty() && bf.is_empty() {
            break;
        }
    }
    let Some(m) = meet else { return Ok(None) };
    let mut path = Vec::new();
    let mut c = m.clone();
    while let Some((prev, s)) = &fwd[&c].link {
        path.push(s.clone());
        c = prev.clone();
    }
    path.reverse();
    let mut c = m;
    while let Some((next, s)) = &bwd[&c].link {
        path.push(s.clone());
        c = next.clone();
    }
    Ok(Some(path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_tld;
    use crate::moves::apply_sequence;

    #[test]
    fn walk_is_reproducible_and_capped() {
        let d = parse_tld("X 1 -b +b +a -a\nB a 1\nB b 1\n").unwrap();
        let caps = WalkCaps { max_classical: 3, max_virtual: 3, max_bars: 4 };
        let w1 = random_walk_steps(&d, 7, 10, caps).unwrap();
        let w2 = random_walk_steps(&d, 7, 10, caps).unwrap();
        assert_eq!(w1.len(), 10);
        let sites: Vec<_> = w1.iter().map(|s| s.0.clone()).collect();
        assert_eq!(sites, w2.iter().map(|s| s.0.clone()).collect::<Vec<_>>());
        assert!(w1.iter().all(|(_, r)| caps.admits(r)));
        assert_eq!(planar_code(&apply_sequence(&d, &sites).unwrap()), planar_code(&w1[9].1));
        assert_eq!(random_walk(&d, 7, 10, caps).unwrap(), w1[9].1);
    }

    #[test]
    fn search_finds_a_two_move_path() {
        let u = parse_tld("O a\n").unwrap();
        let target = apply_sequence(&u, &crate::moves::parse_sequence("T2 expand a\nR1 expand a v=1\n").unwrap()).unwrap();
        let path = equiv_search(&u, &target, 2).unwrap().expect("path");
        assert_eq!(path.len(), 2);
        assert_eq!(planar_code(&apply_sequence(&u, &path).unwrap()), planar_code(&target));
        assert_eq!(equiv_search(&u, &target, 1).unwrap(), None);
    }
}
