use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::GroupPresentation;

/// Diagonal of the Smith normal form of an integer matrix, including zeros,
/// with `d1 | d2 | ...` and length `min(rows, cols)`.
pub fn smith_diagonal(rows: &[Vec<i64>], cols: usize) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let nr = m.len();
    let mut diag = Vec::new();
    for t in 0..nr.min(cols) {
        // Smallest nonzero entry in the remaining block as pivot.
        let mut pivot = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && pivot.as_ref().is_none_or(|&(pi, pj): &(usize, usize)| x.abs() < m[pi][pj].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            diag.extend(std::iter::repeat_n(BigInt::zero(), nr.min(cols) - t));
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t].clone();
            let mut dirty = false;
            for i in t + 1..nr {
                let q = m[i][t].div_floor(&p);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = &m[t][j] * &q;
                        m[i][j] -= v;
                    }
                }
                dirty |= !m[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = m[t][j].div_floor(&p);
                if !q.is_zero() {
                    for row in m.iter_mut().skip(t) {
                        let v = &row[t] * &q;
                        row[j] -= v;
                    }
                }
                dirty |= !m[t][j].is_zero();
            }
            if !dirty {
                // Keep divisibility: fold any entry not divisible by the pivot
                // into the pivot row and repeat.
                let bad = (t + 1..nr).find(|&i| (t + 1..cols).any(|j| !(&m[i][j] % &p).is_zero()));
                match bad {
                    Some(i) => {
                        for j in t..cols {
                            let v = m[i][j].clone();
                            m[t][j] += v;
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // Move the smallest nonzero entry of row t / column t to the pivot.
            let mut best = (t, t);
            for i in t..nr {
                if !m[i][t].is_zero() && (m[best.0][best.1].is_zero() || m[i][t].abs() < m[best.0][best.1].abs()) {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !m[t][j].is_zero() && (m[best.0][best.1].is_zero() || m[t][j].abs() < m[best.0][best.1].abs()) {
                    best = (t, j);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(m[t][t].abs());
    }
    diag
}

/// Invariant factors of the abelianization: torsion orders greater than one
/// in divisibility order, then a zero per free factor.
pub fn abelianization(p: &GroupPresentation) -> Vec<u64> {
    let n = p.generator_count();
    let rows: Vec<Vec<i64>> = p
        .relators
        .iter()
        .map(|w| {
            let mut r = vec![0i64; n];
            for &x in w {
                r[x.unsigned_abs() as usize - 1] += x.signum() as i64;
            }
            r
        })
        .collect();
    let diag = smith_diagonal(&rows, n);
    let mut torsion: Vec<u64> = diag
        .iter()
        .filter(|d| !d.is_zero())
        .map(|d| d.to_u64().expect("torsion order fits in u64"))
        .filter(|&d| d > 1)
        .collect();
    torsion.sort_unstable();
    let rank = n - diag.iter().filter(|d| !d.is_zero()).count();
    torsion.extend(std::iter::repeat_n(0, rank));
    torsion
}
