//! Seeded random abstract links and planar diagrams for property tests.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{AbstractLink, PlanarDiagram};
use crate::moves::realize;
use crate::Result;

/// Random abstract link with exactly `crossings` crossings and at most
/// `max_odd` odd edges. Signs and the matching of outgoing to incoming
/// ends are uniform; links may have several components.
pub fn random_abstract<R: Rng>(rng: &mut R, crossings: usize, max_odd: usize) -> AbstractLink {
    if crossings == 0 {
        return AbstractLink::unknot(u8::from(max_odd > 0 && rng.gen_bool(0.5)));
    }
    let signs: Vec<i8> = (0..crossings).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    let mut outs = Vec::new();
    let mut ins = Vec::new();
    for (c, &s) in signs.iter().enumerate() {
        outs.extend([(c, 2), (c, if s > 0 { 1 } else { 3 })]);
        ins.extend([(c, 0), (c, if s > 0 { 3 } else { 1 })]);
    }
    ins.shuffle(rng);
    let mut ends = vec![[0usize; 4]; crossings];
    for (e, (&(tc, ts), &(hc, hs))) in outs.iter().zip(&ins).enumerate() {
        ends[tc][ts] = e;
        ends[hc][hs] = e;
    }
    let n_edges = outs.len();
    let n_odd = rng.gen_range(0..=max_odd.min(n_edges));
    let mut parity = vec![0u8; n_edges];
    for e in index::sample(rng, n_edges, n_odd) {
        parity[e] = 1;
    }
    AbstractLink::from_slots(
        (0..crossings).map(|c| ((c + 1).to_string(), ends[c], signs[c])).collect(),
        (0..n_edges).map(|e| (format!("e{}", e + 1), parity[e])).collect(),
    )
    .expect("every end is matched once")
}

/// Random planar diagram from a seed: a realized random abstract link with
/// `1..=max_crossings` classical crossings and at most `max_bars` bars.
pub fn random_diagram(seed: u64, max_crossings: usize, max_bars: usize) -> Result<PlanarDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_crossings.max(1));
    realize(&random_abstract(&mut rng, n, max_bars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::validate;

    #[test]
    fn diagrams_are_valid_and_reproducible() {
        for seed in 0..40 {
            let d = random_diagram(seed, 6, 4).unwrap();
            assert!(validate(&d).valid, "seed {seed}: {:?}", validate(&d).violations);
            assert!(d.classical.len() <= 6 && d.total_bars() <= 4);
            assert_eq!(d, random_diagram(seed, 6, 4).unwrap());
        }
    }
}
