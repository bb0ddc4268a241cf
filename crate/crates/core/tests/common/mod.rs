#![allow(dead_code)]

use monoideal::corpus::random_complete_ideal;
use monoideal::{CompleteIdeal, MonomialIdeal};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn ideal(pts: &[(i64, i64)]) -> MonomialIdeal {
    MonomialIdeal::normalize(pts.iter().map(|&p| p.into())).unwrap()
}

pub fn complete(pts: &[(i64, i64)]) -> CompleteIdeal {
    CompleteIdeal::new(ideal(pts).integral_closure().unwrap()).unwrap()
}

/// Hand-picked complete ideals covering slope-one edges, single blocks and
/// long chains.
pub fn named_ideals() -> Vec<CompleteIdeal> {
    vec![
        CompleteIdeal::maximal(),
        complete(&[(3, 0), (1, 1), (0, 3)]),
        complete(&[(2, 0), (0, 3)]),
        complete(&[(4, 0), (0, 4)]),
        complete(&[(7, 0), (0, 1)]),
        complete(&[(1, 0), (0, 9)]),
        complete(&[(20, 0), (0, 20), (1, 12), (3, 5), (8, 2)]),
        complete(&[(6, 0), (0, 6), (2, 2)]),
        complete(&[(5, 0), (3, 1), (1, 3), (0, 5)]),
    ]
}

/// Seeded pairs of random complete m-primary ideals with a, b <= 20.
pub fn random_pairs(count: usize, seed: u64) -> Vec<(CompleteIdeal, CompleteIdeal)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (
                random_complete_ideal(&mut rng, 20).unwrap(),
                random_complete_ideal(&mut rng, 20).unwrap(),
            )
        })
        .collect()
}

/// Named ideals paired with each other plus `count` random pairs.
pub fn corpus(count: usize, seed: u64) -> Vec<(CompleteIdeal, CompleteIdeal)> {
    let named = named_ideals();
    let mut pairs: Vec<_> = named.iter().flat_map(|i| named.iter().map(move |j| (i.clone(), j.clone()))).collect();
    pairs.extend(random_pairs(count, seed));
    pairs
}
