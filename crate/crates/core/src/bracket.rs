//! Twisted bracket state sum and the polynomials derived from it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{AbstractLink, EdgeEnds};
use crate::poly::LaurentBipoly;
use crate::{Error, Result};

pub const DEFAULT_CAP: usize = 24;

/// Smoothing outcome of one state. Bit `i` of `state` set means the
/// b-smoothing at crossing `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StateSummary {
    pub state: u64,
    pub a_count: usize,
    pub b_count: usize,
    pub even_circles: usize,
    pub odd_circles: usize,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// Precomputed end nodes: node `2e` is the tail of edge `e`, `2e + 1` its head.
struct Smoother {
    /// For each crossing, the end node at each slot.
    nodes: Vec<[usize; 4]>,
    arcs: Vec<(usize, u8)>,
    loop_even: usize,
    loop_odd: usize,
}

impl Smoother {
    fn new(a: &AbstractLink) -> Self {
        let mut nodes = vec![[0; 4]; a.crossings.len()];
        let mut arcs = Vec::new();
        let (mut loop_even, mut loop_odd) = (0, 0);
        for (e, edge) in a.edges.iter().enumerate() {
            match edge.ends {
                EdgeEnds::Loop => {
                    if edge.parity & 1 == 0 {
                        loop_even += 1
                    } else {
                        loop_odd += 1
                    }
                }
                EdgeEnds::Arc { tail, head } => {
                    nodes[tail.0][tail.1 as usize] = 2 * e;
                    nodes[head.0][head.1 as usize] = 2 * e + 1;
                    arcs.push((e, edge.parity & 1));
                }
            }
        }
        Smoother { nodes, arcs, loop_even, loop_odd }
    }

    fn summary(&self, state: u64, n_edges: usize) -> StateSummary {
        let mut dsu = Dsu::new(2 * n_edges);
        for &(e, _) in &self.arcs {
            dsu.union(2 * e, 2 * e + 1);
        }
        let mut b_count = 0;
        for (i, n) in self.nodes.iter().enumerate() {
            if state >> i & 1 == 1 {
                b_count += 1;
                dsu.union(n[0], n[3]);
                dsu.union(n[1], n[2]);
            } else {
                dsu.union(n[0], n[1]);
                dsu.union(n[2], n[3]);
            }
        }
        let mut parity: BTreeMap<usize, u8> = BTreeMap::new();
        for &(e, p) in &self.arcs {
            *parity.entry(dsu.find(2 * e)).or_default() ^= p;
        }
        let odd = parity.values().filter(|&&p| p == 1).count();
        StateSummary {
            state,
            a_count: self.nodes.len() - b_count,
            b_count,
            even_circles: parity.len() - odd + self.loop_even,
            odd_circles: odd + self.loop_odd,
        }
    }
}

pub fn state_summary(a: &AbstractLink, state: u64) -> Result<StateSummary> {
    let n = a.crossings.len();
    if n < 64 && state >> n != 0 || n >= 64 {
        return Err(Error::StateOutOfRange { state, crossings: n });
    }
    Ok(Smoother::new(a).summary(state, a.edges.len()))
}

/// State counts keyed by `(a - b, even circles, odd circles)`.
type Tally = BTreeMap<(i64, usize, usize), u64>;

fn tally(s: &Smoother, n_edges: usize, range: std::ops::Range<u64>) -> Tally {
    let mut t = Tally::new();
    for state in range {
        let x = s.summary(state, n_edges);
        let key = (x.a_count as i64 - x.b_count as i64, x.even_circles, x.odd_circles);
        *t.entry(key).or_default() += 1;
    }
    t
}

fn tally_to_poly(t: &Tally) -> LaurentBipoly {
    let d = LaurentBipoly::loop_value();
    let mut powers: Vec<LaurentBipoly> = vec![LaurentBipoly::one()];
    let mut out = LaurentBipoly::zero();
    for (&(ab, c, m), &count) in t {
        while powers.len() <= c {
            let next = powers.last().expect("nonempty") * &d;
            powers.push(next);
        }
        let term = LaurentBipoly::monomial(BigInt::from(count), ab, m as u32);
        out = &out + &(&term * &powers[c]);
    }
    out
}

fn check_cap(a: &AbstractLink, cap: usize) -> Result<()> {
    let n = a.crossings.len();
    if n > cap || n >= 63 {
        return Err(Error::StateSpaceTooLarge { crossings: n, cap });
    }
    Ok(())
}

/// Sum over all states of `A^(a-b) d^even M^odd` with `d = -A^-2 - A^2`.
pub fn bracket(a: &AbstractLink) -> Result<LaurentBipoly> {
    bracket_with_cap(a, DEFAULT_CAP)
}

pub fn bracket_with_cap(a: &AbstractLink, cap: usize) -> Result<LaurentBipoly> {
    check_cap(a, cap)?;
    let parts = if a.crossings.len() >= 12 { rayon::current_num_threads().max(1) * 4 } else { 1 };
    bracket_partitioned(a, parts, cap)
}

/// State sum over `parts` disjoint index ranges, evaluated in parallel and
/// merged. The result does not depend on `parts`.
pub fn bracket_partitioned(a: &AbstractLink, parts: usize, cap: usize) -> Result<LaurentBipoly> {
    check_cap(a, cap)?;
    let s = Smoother::new(a);
    let total = 1u64 << a.crossings.len();
    let parts = (parts.max(1) as u64).min(total);
    let chunk = total.div_ceil(parts);
    let n_edges = a.edges.len();
    let merged = (0..parts)
        .into_par_iter()
        .map(|p| tally(&s, n_edges, p * chunk..((p + 1) * chunk).min(total)))
        .reduce(Tally::new, |mut x, y| {
            for (k, v) in y {
                *x.entry(k).or_default() += v;
            }
            x
        });
    Ok(tally_to_poly(&merged))
}

/// Bracket by recursive smoothing, one crossing at a time. Each remaining
/// crossing port is paired with the port at the far end of its strand;
/// smoothing a crossing rejoins those strands. Independent of the state sum.
pub fn bracket_skein(a: &AbstractLink) -> Result<LaurentBipoly> {
    check_cap(a, DEFAULT_CAP)?;
    let mut partner = vec![(usize::MAX, 0u8); 4 * a.crossings.len()];
    let (mut even, mut odd) = (0, 0);
    for e in &a.edges {
        match e.ends {
            EdgeEnds::Loop if e.parity & 1 == 1 => odd += 1,
            EdgeEnds::Loop => even += 1,
            EdgeEnds::Arc { tail, head } => {
                let (t, h) = (4 * tail.0 + tail.1 as usize, 4 * head.0 + head.1 as usize);
                partner[t] = (h, e.parity & 1);
                partner[h] = (t, e.parity & 1);
            }
        }
    }
    Ok(skein(a.crossings.len(), &partner, even, odd))
}

fn skein(remaining: usize, partner: &[(usize, u8)], even: usize, odd: usize) -> LaurentBipoly {
    if remaining == 0 {
        return &LaurentBipoly::loop_value().pow(even as u32) * &LaurentBipoly::monomial(1, 0, odd as u32);
    }
    let c = remaining - 1;
    let mut out = LaurentBipoly::zero();
    for (pairs, shift) in [([(0, 1), (2, 3)], 1), ([(0, 3), (1, 2)], -1)] {
        let mut p = partner.to_vec();
        let (mut ev, mut od) = (even, odd);
        for (i, j) in pairs {
            let (x, y) = (4 * c + i, 4 * c + j);
            let ((xp, xb), (yp, yb)) = (p[x], p[y]);
            if xp == y {
                if xb == 1 {
                    od += 1
                } else {
                    ev += 1
                }
            } else {
                p[xp] = (yp, xb ^ yb);
                p[yp] = (xp, xb ^ yb);
            }
        }
        p.truncate(4 * c);
        out = &out + &skein(c, &p, ev, od).shift_a(shift);
    }
    out
}

/// `(-A)^(-3w)` times the bracket.
pub fn twisted_jones(a: &AbstractLink) -> Result<LaurentBipoly> {
    twisted_jones_with_cap(a, DEFAULT_CAP)
}

pub fn twisted_jones_with_cap(a: &AbstractLink, cap: usize) -> Result<LaurentBipoly> {
    let w = a.writhe();
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    Ok(&LaurentBipoly::monomial(sign, -3 * w, 0) * &bracket_with_cap(a, cap)?)
}

/// Substitute `M = -A^-2 - A^2` and divide by `-A^-2 - A^2`.
pub fn jones(a: &AbstractLink) -> Result<LaurentBipoly> {
    jones_from_twisted(&twisted_jones(a)?)
}

pub fn jones_from_twisted(v: &LaurentBipoly) -> Result<LaurentBipoly> {
    let d = LaurentBipoly::loop_value();
    v.eval_m(&d).div_exact(&d)
}

/// Exponent condition for Jones polynomials of two-colorable links: all
/// exponents are `0 mod 4` for an odd number of components, `2 mod 4` for an
/// even number.
pub fn kamada_check(j: &LaurentBipoly, components: usize) -> bool {
    let want = if components % 2 == 1 { 0 } else { 2 };
    j.a_exponents().iter().all(|e| e.rem_euclid(4) == want)
}
