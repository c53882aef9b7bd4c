use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scheme::{FatPointScheme, ProjectivePoint};

/// Scheme in `P^n` with `1..=max_points` points, coordinates in `0..=3`, multiplicities in `1..=max_mult`.
pub fn random_scheme<R: Rng>(rng: &mut R, n: usize, max_points: usize, max_mult: u32) -> FatPointScheme {
    let s = rng.gen_range(1..=max_points);
    let mut points: Vec<ProjectivePoint> = Vec::new();
    while points.len() < s {
        let coords: Vec<i64> = (0..=n).map(|_| rng.gen_range(0..=3)).collect();
        let Ok(p) = ProjectivePoint::from_integers(&coords) else { continue };
        if !points.contains(&p) {
            points.push(p);
        }
    }
    let mults = (0..s).map(|_| rng.gen_range(1..=max_mult)).collect();
    FatPointScheme::new(n, points, mults).expect("distinct points")
}

/// `count` reproducible schemes with `n ∈ {2, 3}`, at most 4 points and multiplicity at most 3.
pub fn random_schemes(seed: u64, count: usize) -> Vec<FatPointScheme> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=3);
            random_scheme(&mut rng, n, 4, 3)
        })
        .collect()
}
