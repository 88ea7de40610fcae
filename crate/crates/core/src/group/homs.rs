use rayon::prelude::*;

use super::GroupPresentation;
use crate::{Error, Result};

pub const DEFAULT_GENERATOR_CAP: usize = 12;

/// Multiplication and inverse tables of the symmetric group of degree `n`.
struct Sym {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, (n - 1) as u8);
            out.push(q);
        }
    }
    out.sort();
    out
}

impl Sym {
    fn new(n: usize) -> Self {
        let perms = permutations(n);
        let order = perms.len();
        let index = |p: &[u8]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("permutation") as u16;
        let mut mul = vec![0; order * order];
        let mut inv = vec![0; order];
        for (i, p) in perms.iter().enumerate() {
            let mut q = vec![0u8; n];
            for (k, &v) in p.iter().enumerate() {
                q[v as usize] = k as u8;
            }
            inv[i] = index(&q);
            for (j, r) in perms.iter().enumerate() {
                let pr: Vec<u8> = r.iter().map(|&x| p[x as usize]).collect();
                mul[i * order + j] = index(&pr);
            }
        }
        Sym { order, mul, inv }
    }
}

const UNSET: u16 = u16::MAX;

/// Backtracking over generator images. A relator whose only unassigned
/// generator occurs once in it fixes that generator's image.
struct Search<'a> {
    sym: &'a Sym,
    rels: &'a [Vec<i32>],
    /// Generators in branching order (most frequent first).
    order: &'a [usize],
}

impl Search<'_> {
    fn image(&self, x: i32, img: &[u16]) -> u16 {
        let g = img[x.unsigned_abs() as usize - 1];
        if x > 0 {
            g
        } else {
            self.sym.inv[g as usize]
        }
    }

    fn product(&self, w: &[i32], img: &[u16]) -> u16 {
        // Identity is the first (sorted) permutation.
        w.iter().fold(0u16, |acc, &x| self.sym.mul[acc as usize * self.sym.order + self.image(x, img) as usize])
    }

    /// Assign forced images; false on a violated relator. Assigned
    /// generators are pushed to `trail`.
    fn propagate(&self, img: &mut [u16], trail: &mut Vec<usize>) -> bool {
        loop {
            let mut changed = false;
            for w in self.rels {
                let mut open = None;
                let mut hits = 0;
                let mut several = false;
                for &x in w {
                    let g = x.unsigned_abs() as usize - 1;
                    if img[g] == UNSET {
                        hits += 1;
                        match open {
                            None => open = Some((g, x)),
                            Some((h, _)) if h != g => several = true,
                            _ => {}
                        }
                    }
                }
                match open {
                    None if self.product(w, img) != 0 => return false,
                    Some((g, x)) if !several && hits == 1 => {
                        // w = u x v = 1 gives x = u^-1 v^-1.
                        let pos = w.iter().position(|&y| y == x).expect("occurrence");
                        let u = self.product(&w[..pos], img);
                        let v = self.product(&w[pos + 1..], img);
                        let val = self.sym.mul[self.sym.inv[u as usize] as usize * self.sym.order
                            + self.sym.inv[v as usize] as usize];
                        img[g] = if x > 0 { val } else { self.sym.inv[val as usize] };
                        trail.push(g);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Unassigned generator to branch on: the most frequent one in a
    /// relator with the fewest distinct unassigned generators.
    fn branch(&self, img: &[u16]) -> Option<usize> {
        let mut best: Option<(usize, &Vec<i32>)> = None;
        for w in self.rels {
            let mut open: Vec<usize> = w.iter().map(|x| x.unsigned_abs() as usize - 1).filter(|&g| img[g] == UNSET).collect();
            open.sort_unstable();
            open.dedup();
            if !open.is_empty() && best.is_none_or(|(n, _)| open.len() < n) {
                best = Some((open.len(), w));
            }
        }
        let (_, w) = best?;
        self.order.iter().copied().find(|&g| img[g] == UNSET && w.iter().any(|x| x.unsigned_abs() as usize - 1 == g))
    }

    /// Relators with unassigned generators, grouped so that no two groups
    /// share an unassigned generator.
    fn parts(&self, img: &[u16]) -> Vec<Vec<Vec<i32>>> {
        let mut root: Vec<usize> = (0..img.len()).collect();
        fn find(root: &mut [usize], mut g: usize) -> usize {
            while root[g] != g {
                root[g] = root[root[g]];
                g = root[g];
            }
            g
        }
        fn open<'w>(w: &'w [i32], img: &'w [u16]) -> impl Iterator<Item = usize> + 'w {
            w.iter().map(|x| x.unsigned_abs() as usize - 1).filter(move |&g| img[g] == UNSET)
        }
        for w in self.rels {
            let mut gs = open(w, img);
            if let Some(first) = gs.next() {
                for g in gs {
                    let (a, b) = (find(&mut root, first), find(&mut root, g));
                    root[a] = b;
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<Vec<i32>>> = Default::default();
        for w in self.rels {
            if let Some(g) = open(w, img).next() {
                groups.entry(find(&mut root, g)).or_default().push(w.clone());
            }
        }
        groups.into_values().collect()
    }

    fn count(&self, img: &mut [u16]) -> u64 {
        let mut trail = Vec::new();
        let total = if !self.propagate(img, &mut trail) {
            0
        } else {
            let parts = self.parts(img);
            if parts.len() > 1 {
                let mut product = 1;
                for rels in &parts {
                    product *= Search { sym: self.sym, rels, order: self.order }.count(img);
                    if product == 0 {
                        break;
                    }
                }
                product
            } else if let Some(g) = self.branch(img) {
                (0..self.sym.order as u16)
                    .map(|v| {
                        img[g] = v;
                        let n = self.count(img);
                        img[g] = UNSET;
                        n
                    })
                    .sum()
            } else {
                1
            }
        };
        for g in trail {
            img[g] = UNSET;
        }
        total
    }
}

pub fn count_homs(p: &GroupPresentation, degree: usize) -> Result<u64> {
    count_homs_with_cap(p, degree, DEFAULT_GENERATOR_CAP)
}

/// Number of homomorphisms into the symmetric group of the given degree
/// (1 to 5), by exhaustive search with relator propagation.
pub fn count_homs_with_cap(p: &GroupPresentation, degree: usize, cap: usize) -> Result<u64> {
    if !(1..=5).contains(&degree) {
        return Err(Error::UnsupportedDegree(degree));
    }
    let n = p.generator_count();
    if n > cap {
        return Err(Error::TooManyGenerators { generators: n, cap });
    }
    let sym = Sym::new(degree);
    // Generators linked by relators; the count factors over the blocks.
    let mut block: Vec<usize> = (0..n).collect();
    fn root(block: &mut [usize], g: usize) -> usize {
        let mut r = g;
        while block[r] != r {
            r = block[r];
        }
        block[g] = r;
        r
    }
    let mut freq = vec![0usize; n];
    for w in &p.relators {
        let first = w[0].unsigned_abs() as usize - 1;
        for &x in w {
            let g = x.unsigned_abs() as usize - 1;
            freq[g] += 1;
            let (a, b) = (root(&mut block, first), root(&mut block, g));
            block[a] = b;
        }
    }
    let free = freq.iter().filter(|&&f| f == 0).count() as u32;
    let mut total = (sym.order as u64).pow(free);
    let mut roots: Vec<usize> = (0..n).filter(|&g| freq[g] > 0).map(|g| root(&mut block, g)).collect();
    roots.sort_unstable();
    roots.dedup();
    for r in roots {
        let rels: Vec<Vec<i32>> =
            p.relators.iter().filter(|w| root(&mut block, w[0].unsigned_abs() as usize - 1) == r).cloned().collect();
        let mut order: Vec<usize> = (0..n).filter(|&g| freq[g] > 0 && root(&mut block, g) == r).collect();
        order.sort_by_key(|&g| std::cmp::Reverse(freq[g]));
        let first = order[0];
        let search = Search { sym: &sym, rels: &rels, order: &order };
        let part: u64 = (0..sym.order as u16)
            .into_par_iter()
            .map(|v| {
                let mut img = vec![UNSET; n];
                img[first] = v;
                search.count(&mut img)
            })
            .sum();
        total *= part;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(n: usize, rels: Vec<Vec<i32>>) -> GroupPresentation {
        GroupPresentation::new((1..=n).map(|i| format!("g{i}")).collect(), rels)
    }

    #[test]
    fn free_groups() {
        assert_eq!(count_homs(&pres(2, vec![]), 3).unwrap(), 36);
        assert_eq!(count_homs(&pres(2, vec![]), 4).unwrap(), 576);
        assert_eq!(count_homs(&pres(0, vec![]), 3).unwrap(), 1);
    }

    #[test]
    fn twofoil_group_into_s3() {
        let p = pres(2, vec![vec![1, 1, -2, -1, -1, 2]]);
        assert_eq!(count_homs(&p, 3).unwrap(), 30);
    }

    #[test]
    fn cyclic_groups() {
        // Z/2 into S3: identity and the three transpositions.
        assert_eq!(count_homs(&pres(1, vec![vec![1, 1]]), 3).unwrap(), 4);
        assert_eq!(count_homs(&pres(1, vec![vec![1, 1, 1]]), 4).unwrap(), 9);
        assert_eq!(count_homs(&pres(2, vec![vec![1, 2, -1, -2]]), 3).unwrap(), 18);
    }

    /// Plain enumeration of all image tuples.
    fn brute(p: &GroupPresentation, degree: usize) -> u64 {
        let sym = Sym::new(degree);
        let s = Search { sym: &sym, rels: &p.relators, order: &[] };
        let n = p.generator_count();
        let total = sym.order.pow(n as u32);
        (0..total)
            .filter(|&code| {
                let img: Vec<u16> = (0..n).map(|k| ((code / sym.order.pow(k as u32)) % sym.order) as u16).collect();
                p.relators.iter().all(|w| s.product(w, &img) == 0)
            })
            .count() as u64
    }

    #[test]
    fn propagation_matches_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..60 {
            let n = rng.gen_range(1..=3);
            let rels = (0..rng.gen_range(0..=3))
                .map(|_| {
                    (0..rng.gen_range(1..=6))
                        .map(|_| rng.gen_range(1..=n as i32) * if rng.gen_bool(0.5) { 1 } else { -1 })
                        .collect()
                })
                .collect();
            let p = pres(n, rels);
            for degree in [3, 4] {
                assert_eq!(count_homs(&p, degree).unwrap(), brute(&p, degree), "{p}");
            }
        }
    }

    #[test]
    fn caps() {
        assert!(matches!(count_homs(&pres(13, vec![]), 3), Err(Error::TooManyGenerators { .. })));
        assert!(matches!(count_homs(&pres(1, vec![]), 6), Err(Error::UnsupportedDegree(6))));
    }
}
