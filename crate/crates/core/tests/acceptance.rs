//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line.

mod common;

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use twistlink::bracket::{bracket, bracket_skein, jones_from_twisted, kamada_check, state_summary, twisted_jones};
use twistlink::diagram::{parse_tld, serialize_tld, validate, AbstractLink};
use twistlink::faces::{carrier, two_colorable};
use twistlink::gen::{random_abstract, random_diagram};
use twistlink::group::{
    abelianization, count_homs, fingerprint, tietze_simplify, twisted_group, virtual_group, GroupPresentation, Level,
};
use twistlink::moves::{canonical_code, equiv_search, random_walk_steps, realize, MoveTag, WalkCaps};
use twistlink::LaurentBipoly;

/// Print the verdict line, then fail the test if any check failed.
fn verdict(n: u32, name: &str, start: Instant, limit: Duration, failures: Vec<String>) {
    let took = start.elapsed();
    let mut failures = failures;
    if took > limit {
        failures.push(format!("took {took:?}, limit {limit:?}"));
    }
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n}: {status} {name} ({took:.2?})");
    for f in &failures {
        println!("  {f}");
    }
    assert!(failures.is_empty(), "criterion {n} failed: {failures:?}");
}

fn check<T: PartialEq + std::fmt::Debug>(out: &mut Vec<String>, what: &str, got: T, want: T) {
    if got != want {
        out.push(format!("{what}: got {got:?}, want {want:?}"));
    }
}

fn loop_value() -> LaurentBipoly {
    LaurentBipoly::loop_value()
}

/// (-A^-2 - A^2)(A^-4 + A^-6 - A^-10)
fn twofoil_polynomial() -> LaurentBipoly {
    &loop_value() * &apoly(&[(-4, 1), (-6, 1), (-10, 1 - 2)])
}

/// Homomorphisms into S3 by plain backtracking over generator images,
/// checking each relator once all its generators are assigned.
fn s3_brute(p: &GroupPresentation) -> u64 {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let compose = |x: [usize; 3], y: [usize; 3]| [x[y[0]], x[y[1]], x[y[2]]];
    let invert = |x: [usize; 3]| {
        let mut r = [0; 3];
        for (i, &v) in x.iter().enumerate() {
            r[v] = i;
        }
        r
    };
    let n = p.generator_count();
    let last_gen = |w: &Vec<i32>| w.iter().map(|x| x.unsigned_abs() as usize - 1).max().unwrap_or(0);
    fn go(
        k: usize,
        n: usize,
        img: &mut Vec<[usize; 3]>,
        p: &GroupPresentation,
        perms: &[[usize; 3]],
        ok: &dyn Fn(&Vec<i32>, &[[usize; 3]]) -> bool,
        last: &dyn Fn(&Vec<i32>) -> usize,
    ) -> u64 {
        if p.relators.iter().filter(|w| !w.is_empty() && last(w) + 1 == k).any(|w| !ok(w, img)) {
            return 0;
        }
        if k == n {
            return 1;
        }
        perms
            .iter()
            .map(|&g| {
                img.push(g);
                let c = go(k + 1, n, img, p, perms, ok, last);
                img.pop();
                c
            })
            .sum()
    }
    let ok = |w: &Vec<i32>, img: &[[usize; 3]]| {
        let prod = w.iter().fold([0, 1, 2], |acc, &x| {
            let g = img[x.unsigned_abs() as usize - 1];
            compose(acc, if x > 0 { g } else { invert(g) })
        });
        prod == [0, 1, 2]
    };
    go(0, n, &mut Vec::new(), p, &perms, &ok, &last_gen)
}

#[test]
fn criterion_01_onefoil_polynomial_and_carrier() {
    let start = Instant::now();
    let mut f = Vec::new();
    let o = abs("onefoil");
    let v = twisted_jones(&o).unwrap();
    check(&mut f, "twisted_jones", v.clone(), poly(&[(-6, 0, 1), (-2, 0, 1), (-2, 2, -1)]));
    check(&mut f, "jones", jones_from_twisted(&v).unwrap(), LaurentBipoly::one());
    let c = carrier(&o);
    check(&mut f, "carrier", (c.euler_genus, c.orientable), (2, false));
    verdict(1, "onefoil polynomial, jones, carrier", start, Duration::from_secs(1), f);
}

#[test]
fn criterion_01_onefoil_group() {
    let start = Instant::now();
    let mut f = Vec::new();
    let s = tietze_simplify(&twisted_group(&abs("onefoil")), 10_000).presentation;
    check(&mut f, "simplified shape", (s.generator_count(), s.relators.len()), (2, 0));
    check(&mut f, "homs (S3, S4)", (count_homs(&s, 3).unwrap(), count_homs(&s, 4).unwrap()), (36, 576));
    if !f.is_empty() {
        f.push(format!("simplified presentation: {s}"));
    }
    verdict(1, "onefoil twisted group is free of rank two", start, Duration::from_secs(1), f);
}

#[test]
fn criterion_02_twofoil() {
    let start = Instant::now();
    let mut f = Vec::new();
    let t = abs("twofoil");
    check(&mut f, "twisted_jones", twisted_jones(&t).unwrap(), twofoil_polynomial());
    check(&mut f, "two_colorable", two_colorable(&t).is_some(), true);
    let c = carrier(&t);
    check(&mut f, "carrier", (c.euler_genus, c.orientable), (1, false));
    let g = twisted_group(&t);
    let s = tietze_simplify(&g, 10_000).presentation;
    check(&mut f, "abelianization", abelianization(&s), vec![0, 0]);
    check(&mut f, "S3 homs", count_homs(&s, 3).unwrap(), 30);
    check(&mut f, "S3 homs by enumeration", s3_brute(&g), 30);
    verdict(2, "twofoil", start, Duration::from_secs(1), f);
}

#[test]
fn criterion_03_torus1212() {
    let start = Instant::now();
    let mut f = Vec::new();
    let t = abs("torus1212");
    check(&mut f, "writhe", t.writhe(), 2);
    let v = twisted_jones(&t).unwrap();
    check(&mut f, "twisted_jones", v.clone(), twofoil_polynomial());
    check(&mut f, "two_colorable", two_colorable(&t).is_some(), false);
    let j = jones_from_twisted(&v).unwrap();
    check(&mut f, "kamada", kamada_check(&j, t.components().0), false);
    let c = carrier(&t);
    check(&mut f, "carrier", (c.euler_genus, c.orientable), (2, true));
    let g = twisted_group(&t);
    let s = tietze_simplify(&g, 10_000).presentation;
    check(&mut f, "S3 homs", count_homs(&s, 3).unwrap(), 36);
    check(&mut f, "S3 homs by enumeration", s3_brute(&g), 36);
    verdict(3, "torus1212", start, Duration::from_secs(1), f);
}

#[test]
fn criterion_04_bar_free_factorization() {
    let start = Instant::now();
    let mut f = Vec::new();
    let d = loop_value();
    for seed in 0..200 {
        let a = random_diagram(seed, 6, 0).unwrap().project().unwrap();
        let v = twisted_jones(&a).unwrap();
        if !v.is_m_free() {
            f.push(format!("seed {seed}: not M-free: {v}"));
            continue;
        }
        match v.div_exact(&d) {
            Ok(q) if q == virtual_jones(&a) => {}
            Ok(q) => f.push(format!("seed {seed}: quotient {q} differs from {}", virtual_jones(&a))),
            Err(e) => f.push(format!("seed {seed}: {e}")),
        }
    }
    verdict(4, "bar-free factorization on 200 diagrams", start, Duration::from_secs(30), f);
}

#[test]
fn criterion_05_move_invariance() {
    let start = Instant::now();
    let mut f = Vec::new();
    let mut steps = 0;
    let fp = |a: &AbstractLink| {
        let s = tietze_simplify(&twisted_group(a), 10_000).presentation;
        (twisted_jones(a).unwrap(), abelianization(&s), twistlink::group::count_homs_with_cap(&s, 3, 24).unwrap())
    };
    let mut tags = std::collections::BTreeSet::new();
    for seed in 0..200 {
        let d = random_diagram(seed, 6, 4).unwrap();
        let caps = WalkCaps {
            max_classical: d.classical.len() + 2,
            max_virtual: d.virtuals.len() + 4,
            max_bars: d.total_bars() + 4,
        };
        let walk = random_walk_steps(&d, seed, 8, caps).unwrap();
        if walk.len() != 8 {
            f.push(format!("seed {seed}: walk stopped after {} steps", walk.len()));
        }
        let mut prev = fp(&d.project().unwrap());
        for (site, r) in &walk {
            tags.insert(site.tag);
            let next = fp(&r.project().unwrap());
            if next != prev {
                f.push(format!("seed {seed}: {site} changed {prev:?} to {next:?}"));
            }
            prev = next;
            steps += 1;
        }
    }
    if tags.len() != MoveTag::ALL.len() {
        f.push(format!("only tags {tags:?} were exercised"));
    }
    println!("  {steps} steps checked");
    verdict(5, "invariance along 200 random walks of length 8", start, Duration::from_secs(60), f);
}

#[test]
fn criterion_06_two_colorable_factorization() {
    let start = Instant::now();
    let mut f = Vec::new();
    let d = loop_value();
    let mut links: Vec<(String, AbstractLink)> = corpus().into_iter().map(|(n, p)| (n, p.project().unwrap())).collect();
    links.extend((0..200).map(|s| (format!("seed {s}"), random_diagram(s, 6, 4).unwrap().project().unwrap())));
    let mut colorable = 0;
    for (name, a) in &links {
        if two_colorable(a).is_none() {
            continue;
        }
        colorable += 1;
        let v = twisted_jones(a).unwrap();
        if !v.is_m_free() || v.div_exact(&d).is_err() {
            f.push(format!("{name}: {v}"));
        }
    }
    println!("  {colorable} of {} diagrams two-colorable", links.len());
    if colorable == 0 {
        f.push("no two-colorable diagram exercised".into());
    }
    verdict(6, "two-colorable diagrams factor", start, Duration::from_secs(30), f);
}

#[test]
fn criterion_07_skein_and_states() {
    let start = Instant::now();
    let mut f = Vec::new();
    let mut links: Vec<(String, AbstractLink)> = corpus().into_iter().map(|(n, p)| (n, p.project().unwrap())).collect();
    links.extend((0..200).map(|s| (format!("seed {s}"), random_diagram(s, 5, 4).unwrap().project().unwrap())));
    let d = loop_value();
    for (name, a) in links.iter().filter(|(_, a)| a.crossing_count() <= 5) {
        let full = bracket(a).unwrap();
        let rec = bracket_skein(a).unwrap();
        if full != rec {
            f.push(format!("{name}: enumeration {full} vs recursion {rec}"));
        }
        let n = a.crossing_count();
        let mut states = 0u64;
        let mut sum = LaurentBipoly::zero();
        for s in 0..1u64 << n {
            let x = state_summary(a, s).unwrap();
            if x.a_count + x.b_count != n {
                f.push(format!("{name}: state {s} has {} + {} smoothings", x.a_count, x.b_count));
            }
            states += 1;
            let term = LaurentBipoly::monomial(1, x.a_count as i64 - x.b_count as i64, x.odd_circles as u32);
            sum = &sum + &(&term * &d.pow(x.even_circles as u32));
        }
        check(&mut f, &format!("{name}: states"), states, 1 << n);
        check(&mut f, &format!("{name}: summed states"), sum, full);
    }
    verdict(7, "skein recursion and state enumeration agree", start, Duration::from_secs(10), f);
}

#[test]
fn criterion_08_round_trips() {
    let start = Instant::now();
    let mut f = Vec::new();
    for (name, d) in corpus() {
        if !validate(&d).valid {
            f.push(format!("{name}: invalid"));
        }
        check(&mut f, &format!("{name}: parse(serialize)"), parse_tld(&serialize_tld(&d)).unwrap(), d.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..200 {
        let a = random_abstract(&mut rng, i % 7, 4);
        let back = realize(&a).unwrap().project().unwrap();
        check(&mut f, &format!("link {i}: canonical code"), canonical_code(&back).unwrap(), canonical_code(&a).unwrap());
    }
    verdict(8, "serialize and realize round trips", start, Duration::from_secs(10), f);
}

#[test]
fn criterion_09_unknot_replay() {
    let start = Instant::now();
    let mut f = Vec::new();
    let path = equiv_search(&load("unknot"), &load("unknot-barred-3"), 3).unwrap();
    match path {
        Some(p) => {
            let tags: Vec<MoveTag> = p.iter().map(|s| s.tag).collect();
            check(&mut f, "tags", tags, vec![MoveTag::T2, MoveTag::V1, MoveTag::R2]);
            println!("  {}", p.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("; "));
        }
        None => f.push("no sequence within depth 3".into()),
    }
    verdict(9, "three-move unknot replay", start, Duration::from_secs(10), f);
}

#[test]
fn criterion_10_naive_group_is_not_invariant() {
    let start = Instant::now();
    let mut f = Vec::new();
    let (t, t3) = (abs("trefoil"), abs("trefoil-after-t3"));
    let (u, u3) = (fingerprint(&virtual_group(&t, Level::Upper)).unwrap(), fingerprint(&virtual_group(&t3, Level::Upper)).unwrap());
    if u.homs_s3 == u3.homs_s3 {
        f.push(format!("upper S3 counts agree: {}", u.homs_s3));
    }
    check(&mut f, "twisted fingerprint", fingerprint(&twisted_group(&t3)).unwrap(), fingerprint(&twisted_group(&t)).unwrap());
    println!("  upper S3: {} vs {}", u.homs_s3, u3.homs_s3);
    verdict(10, "upper group changes under T3, twisted group does not", start, Duration::from_secs(5), f);
}
