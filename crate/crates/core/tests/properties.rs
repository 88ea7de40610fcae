mod common;

use proptest::prelude::*;

use twistlink::bracket::{bracket, bracket_partitioned, twisted_jones, DEFAULT_CAP};
use twistlink::diagram::{parse_tld, serialize_tld, validate, AbstractEdge, AbstractLink, EdgeEnds, PlanarDiagram};
use twistlink::faces::{carrier, faces};
use twistlink::gen::random_diagram;
use twistlink::group::{
    abelianization, count_homs_with_cap, fingerprint, tietze_simplify, twisted_group, virtual_group, Level,
};
use twistlink::moves::{apply_move, canonical_code, find_moves, planar_code, Direction, MoveTag};
use twistlink::LaurentBipoly;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

/// Vertex ids at both ends of an edge label.
fn endpoints(d: &PlanarDiagram, edge: &str) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    for (classical, list) in [(true, &d.classical), (false, &d.virtuals)] {
        for c in list {
            for s in &c.slots {
                if s.edge == edge {
                    out.push((c.id.clone(), classical));
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn serialize_parse_round_trip(seed in any::<u64>()) {
        let d = random_diagram(seed, 6, 4).unwrap();
        prop_assert!(validate(&d).valid);
        prop_assert_eq!(parse_tld(&serialize_tld(&d)).unwrap().normalized(), d.normalized());
    }

    #[test]
    fn stored_signs_match_slots(seed in any::<u64>()) {
        let a = random_diagram(seed, 6, 4).unwrap().project().unwrap();
        let stored: Vec<i8> = a.crossings.iter().map(|c| c.sign).collect();
        prop_assert_eq!(a.recomputed_signs(), stored);
    }

    #[test]
    fn euler_characteristic_per_component(seed in any::<u64>()) {
        let a = random_diagram(seed, 6, 4).unwrap().project().unwrap();
        let c = carrier(&a);
        let mut total_faces = 0;
        for k in &c.components {
            prop_assert_eq!(k.vertices as i64 - k.edges as i64 + k.faces as i64, 2 - k.euler_genus as i64);
            total_faces += k.faces;
        }
        prop_assert_eq!(total_faces, faces(&a).len());
        prop_assert_eq!(c.euler_genus, c.components.iter().map(|k| k.euler_genus).sum::<usize>());
    }

    #[test]
    fn orientable_iff_even(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let mut a = random_diagram(seed, 6, 0).unwrap().project().unwrap();
        prop_assert!(carrier(&a).orientable);
        // Every edge of a 4-valent graph lies on a cycle.
        let arcs: Vec<usize> = (0..a.edges.len()).filter(|&e| a.edges[e].ends != EdgeEnds::Loop).collect();
        let e = arcs[pick.index(arcs.len())];
        a.edges[e].parity = 1;
        prop_assert!(!carrier(&a).orientable);
    }

    #[test]
    fn disjoint_loops_multiply(seed in any::<u64>(), parity in 0u8..2) {
        let a = random_diagram(seed, 5, 3).unwrap().project().unwrap();
        let mut b = a.clone();
        b.edges.push(AbstractEdge { id: "extra".into(), ends: EdgeEnds::Loop, parity });
        let factor = if parity == 0 { LaurentBipoly::loop_value() } else { LaurentBipoly::m() };
        prop_assert_eq!(bracket(&b).unwrap(), &bracket(&a).unwrap() * &factor);
    }

    #[test]
    fn partitioned_state_sum_is_identical(seed in any::<u64>(), parts in 1usize..9) {
        let a = random_diagram(seed, 6, 4).unwrap().project().unwrap();
        prop_assert_eq!(bracket_partitioned(&a, parts, DEFAULT_CAP).unwrap(), bracket(&a).unwrap());
    }
}

proptest! {
    #![proptest_config(config(32))]

    #[test]
    fn bar_pairs_change_nothing(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let d = random_diagram(seed, 4, 3).unwrap();
        let labels = d.edge_labels();
        let mut e = d.clone();
        e.add_bars(&labels[pick.index(labels.len())], 2);
        let (a, b) = (d.project().unwrap(), e.project().unwrap());
        prop_assert_eq!(faces(&a).len(), faces(&b).len());
        prop_assert_eq!(carrier(&a), carrier(&b));
        prop_assert_eq!(bracket(&a).unwrap(), bracket(&b).unwrap());
        prop_assert_eq!(fingerprint(&twisted_group(&a)).unwrap(), fingerprint(&twisted_group(&b)).unwrap());
    }

    #[test]
    fn bar_free_group_is_a_free_product(seed in any::<u64>()) {
        let a = random_diagram(seed, 5, 0).unwrap().project().unwrap();
        let s3 = |p| {
            let s = tietze_simplify(&p, 10_000).presentation;
            count_homs_with_cap(&s, 3, 24).unwrap()
        };
        prop_assert_eq!(
            s3(twisted_group(&a)),
            s3(virtual_group(&a, Level::Upper)) * s3(virtual_group(&a, Level::Lower))
        );
    }

    #[test]
    fn simplification_keeps_fingerprints(seed in any::<u64>()) {
        let a = random_diagram(seed, 3, 3).unwrap().project().unwrap();
        for p in [twisted_group(&a), virtual_group(&a, Level::Upper)] {
            let s = tietze_simplify(&p, 10_000).presentation;
            prop_assert_eq!(abelianization(&p), abelianization(&s));
            for n in [3, 4] {
                prop_assert_eq!(count_homs_with_cap(&p, n, 64).unwrap(), count_homs_with_cap(&s, n, 64).unwrap());
            }
        }
    }

    #[test]
    fn twisted_jones_ignores_bar_pairs_on_loops(parity in 0u32..2, extra in 0u32..3) {
        let d = parse_tld(&format!("O a\nB a {}\n", parity + 2 * extra)).unwrap();
        let want = if parity == 0 { LaurentBipoly::loop_value() } else { LaurentBipoly::m() };
        prop_assert_eq!(twisted_jones(&d.project().unwrap()).unwrap(), want);
    }
}

proptest! {
    #![proptest_config(config(32))]

    /// Every emitted site validates, keeps the invariants, can be undone,
    /// and never matches a forbidden triangle.
    #[test]
    fn every_site_is_sound(seed in any::<u64>()) {
        let d = random_diagram(seed, 3, 2).unwrap();
        let a = d.project().unwrap();
        let v = twisted_jones(&a).unwrap();
        let group = |a: &AbstractLink| {
            let s = tietze_simplify(&twisted_group(a), 10_000).presentation;
            (abelianization(&s), count_homs_with_cap(&s, 3, 24).unwrap())
        };
        let g = group(&a);
        let code = planar_code(&d);
        let abstract_code = canonical_code(&a).unwrap();
        for s in find_moves(&d, None) {
            let r = apply_move(&d, &s).unwrap();
            prop_assert!(validate(&r).valid, "{}", s);
            let ra = r.project().unwrap();
            prop_assert_eq!(&twisted_jones(&ra).unwrap(), &v, "{}", s);
            prop_assert_eq!(&group(&ra), &g, "{}", s);
            // Triangle moves undo themselves, so their direction label may repeat.
            let triangle = matches!(s.tag, MoveTag::R3 | MoveTag::V3 | MoveTag::V4);
            let back = find_moves(&r, Some(&[s.tag])).into_iter().any(|t| {
                (triangle || t.direction != s.direction) && apply_move(&r, &t).is_ok_and(|x| planar_code(&x) == code)
            });
            prop_assert!(back, "{} has no inverse", s);
            if matches!(s.tag, MoveTag::V1 | MoveTag::V2 | MoveTag::V3 | MoveTag::V4 | MoveTag::T1 | MoveTag::T2) {
                prop_assert_eq!(&canonical_code(&ra).unwrap(), &abstract_code, "{}", s);
            }
            if matches!(s.tag, MoveTag::R3 | MoveTag::V3 | MoveTag::V4) {
                // Corners of the triangle are the vertices shared by two of its arcs.
                let mut seen = std::collections::BTreeMap::new();
                for e in &s.anchors[..3] {
                    let mut ends = endpoints(&d, e);
                    ends.sort();
                    ends.dedup();
                    for x in ends {
                        *seen.entry(x).or_insert(0) += 1;
                    }
                }
                let classical = seen.iter().filter(|(x, &n)| n == 2 && x.1).count();
                let want = match s.tag { MoveTag::R3 => 3, MoveTag::V3 => 0, _ => 1 };
                prop_assert_eq!(classical, want, "{}", s);
                prop_assert_eq!(r.classical.len(), d.classical.len());
            }
            if s.direction == Direction::Reduce {
                prop_assert!(r.vertex_count() <= d.vertex_count() || s.tag == MoveTag::T3 || s.tag == MoveTag::T1);
            }
        }
    }
}
