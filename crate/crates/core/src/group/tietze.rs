use super::{free_reduce, inverse, GroupPresentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplified {
    pub presentation: GroupPresentation,
    /// The step budget ran out before a fixpoint was reached.
    pub exhausted: bool,
}

fn cyclic_reduce(mut w: Vec<i32>) -> Vec<i32> {
    w = free_reduce(w);
    let mut i = 0;
    while i < w.len() / 2 && w[i] == -w[w.len() - 1 - i] {
        i += 1;
    }
    w[i..w.len() - i].to_vec()
}

/// Lexicographically least cyclic permutation of `w` or of its inverse.
fn canonical(w: &[i32]) -> Vec<i32> {
    let inv = inverse(w);
    let mut best = w.to_vec();
    for cand in [w, &inv[..]] {
        for s in 0..cand.len() {
            let rot: Vec<i32> = cand[s..].iter().chain(&cand[..s]).copied().collect();
            if rot < best {
                best = rot;
            }
        }
    }
    best
}

fn tidy(rels: Vec<Vec<i32>>) -> Vec<Vec<i32>> {
    let mut out: Vec<Vec<i32>> = rels.into_iter().map(cyclic_reduce).filter(|w| !w.is_empty()).map(|w| canonical(&w)).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.dedup();
    out
}

/// Find a relator in which some generator occurs exactly once; returns
/// (relator index, position). Prefers the shortest relator.
fn find_elimination(rels: &[Vec<i32>]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (ri, r) in rels.iter().enumerate() {
        if best.is_some_and(|(b, _)| rels[b].len() <= r.len()) {
            continue;
        }
        for (pos, &x) in r.iter().enumerate() {
            if r.iter().filter(|y| y.abs() == x.abs()).count() == 1 {
                best = Some((ri, pos));
                break;
            }
        }
    }
    best
}

/// Free and cyclic reduction, duplicate removal and elimination of generators
/// that occur once in some relator, until nothing changes or `budget`
/// eliminations have been made.
pub fn tietze_simplify(p: &GroupPresentation, budget: usize) -> Simplified {
    let mut gens: Vec<Option<String>> = p.generators.iter().cloned().map(Some).collect();
    let mut rels = tidy(p.relators.clone());
    let mut steps = 0;
    let mut exhausted = false;
    while let Some((ri, pos)) = find_elimination(&rels) {
        if steps >= budget {
            exhausted = true;
            break;
        }
        steps += 1;
        let r = rels.remove(ri);
        let x = r[pos];
        let g = x.unsigned_abs() as usize;
        // r = u x v = 1  gives  x = u^-1 v^-1, so g = (u^-1 v^-1)^sign(x).
        let mut value = inverse(&r[..pos]);
        value.extend(inverse(&r[pos + 1..]));
        let value = if x > 0 { value } else { inverse(&value) };
        let value_inv = inverse(&value);
        rels = tidy(
            rels.into_iter()
                .map(|w| {
                    let mut out = Vec::with_capacity(w.len());
                    for y in w {
                        if y.unsigned_abs() as usize == g {
                            out.extend_from_slice(if y > 0 { &value } else { &value_inv });
                        } else {
                            out.push(y);
                        }
                    }
                    out
                })
                .collect(),
        );
        gens[g - 1] = None;
    }
    // Renumber the surviving generators.
    let mut map = vec![0i32; gens.len() + 1];
    let mut names = Vec::new();
    for (i, g) in gens.into_iter().enumerate() {
        if let Some(name) = g {
            names.push(name);
            map[i + 1] = names.len() as i32;
        }
    }
    let rels = rels
        .into_iter()
        .map(|w| w.into_iter().map(|y| map[y.unsigned_abs() as usize] * y.signum()).collect())
        .collect();
    Simplified { presentation: GroupPresentation::new(names, rels), exhausted }
}
