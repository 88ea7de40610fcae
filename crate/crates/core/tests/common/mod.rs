#![allow(dead_code)]

use std::path::PathBuf;

use twistlink::diagram::{parse_tld, AbstractLink, EdgeEnds, PlanarDiagram};
use twistlink::LaurentBipoly;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn corpus_text(name: &str) -> String {
    std::fs::read_to_string(corpus_dir().join(format!("{name}.tld"))).unwrap()
}

pub fn load(name: &str) -> PlanarDiagram {
    parse_tld(&corpus_text(name)).unwrap()
}

pub fn abs(name: &str) -> AbstractLink {
    load(name).project().unwrap()
}

/// Every corpus file as (name, diagram), sorted by name.
pub fn corpus() -> Vec<(String, PlanarDiagram)> {
    let mut names: Vec<String> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            (p.extension()? == "tld").then(|| p.file_stem().unwrap().to_string_lossy().into_owned())
        })
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), load(&n))).collect()
}

pub fn poly(terms: &[(i64, u32, i64)]) -> LaurentBipoly {
    LaurentBipoly::from_terms(terms.iter().copied())
}

/// Polynomial in A only, from (exponent, coefficient) pairs.
pub fn apoly(terms: &[(i64, i64)]) -> LaurentBipoly {
    LaurentBipoly::from_terms(terms.iter().map(|&(a, c)| (a, 0u32, c)))
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        x = p[x];
    }
    x
}

/// Normalized virtual Jones polynomial: `(-A)^(-3w)` times the sum over
/// states of `A^(a-b) d^(circles-1)`, ignoring bars. Written directly from
/// the crossing slots, without the library's state machinery.
pub fn virtual_jones(a: &AbstractLink) -> LaurentBipoly {
    let n = a.crossings.len();
    let ne = a.edges.len();
    let loops = a.edges.iter().filter(|e| e.ends == EdgeEnds::Loop).count();
    let d = LaurentBipoly::loop_value();
    let mut sum = LaurentBipoly::zero();
    for state in 0u64..1 << n {
        // Nodes: 2e = tail end of edge e, 2e + 1 = head end.
        let mut p: Vec<usize> = (0..2 * ne).collect();
        let join = |p: &mut Vec<usize>, x: usize, y: usize| {
            let (rx, ry) = (find(p, x), find(p, y));
            p[rx] = ry;
        };
        for e in 0..ne {
            join(&mut p, 2 * e, 2 * e + 1);
        }
        let node = |c: usize, k: usize| {
            let e = a.crossings[c].ends[k];
            match a.edges[e].ends {
                EdgeEnds::Arc { tail, .. } if tail == (c, k as u8) => 2 * e,
                _ => 2 * e + 1,
            }
        };
        let mut ab = 0i64;
        for c in 0..n {
            let pairs = if state >> c & 1 == 0 { ab += 1; [(0, 1), (2, 3)] } else { ab -= 1; [(0, 3), (1, 2)] };
            for (x, y) in pairs {
                join(&mut p, node(c, x), node(c, y));
            }
        }
        let arcs: std::collections::BTreeSet<usize> = (0..ne)
            .filter(|&e| a.edges[e].ends != EdgeEnds::Loop)
            .map(|e| find(&mut p, 2 * e))
            .collect();
        let circles = arcs.len() + loops;
        sum = &sum + &(&LaurentBipoly::monomial(1, ab, 0) * &d.pow(circles as u32 - 1));
    }
    let w = a.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    &LaurentBipoly::monomial(sign, -3 * w, 0) * &sum
}
