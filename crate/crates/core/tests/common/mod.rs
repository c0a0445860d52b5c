#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trinity_core::build::{from_curve, random_planar, trivial_trinity, CurvePresentation};
use trinity_core::trinity::Trinity;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Named planar trinities built without randomness.
pub fn planar_fixtures() -> Vec<(String, Trinity)> {
    let mut out = vec![("trivial".to_string(), trivial_trinity())];
    for m in 1..=4 {
        let t = from_curve(&CurvePresentation::two_bridge_twist(m)).expect("twist curve");
        out.push((format!("twist-{m}"), t));
    }
    out
}

/// `count` random planar trinities with sizes cycling through `1..=n_max`.
pub fn generated_planar(seed: u64, count: usize, n_max: usize) -> Vec<Trinity> {
    let mut r = rng(seed);
    (0..count).map(|i| random_planar(1 + i % n_max, &mut r)).collect()
}
