//! Shared corpus helpers for the integration suites. Everything is seeded
//! and deterministic: the same call always yields the same graphs.

#![allow(dead_code)]

use discut::graph::Graph;
use discut::oracle::{generate, oracle_disconnected_cut, GeneratorKind, GeneratorSpec};

/// Deterministic connected G(n,p)-style sample; bumps a sub-seed until the
/// draw is connected.
pub fn gnp_connected(n: usize, density: f64, seed: u64) -> Graph {
    for attempt in 0..10_000u64 {
        let spec = GeneratorSpec::new(
            GeneratorKind::Gnp,
            n,
            density,
            seed.wrapping_mul(1_000_003).wrapping_add(attempt),
        );
        let (g, _) = generate(&spec).unwrap();
        if g.is_connected() {
            return g;
        }
    }
    panic!("no connected sample at n={n}, density={density}");
}

/// Deterministic pseudo-random stream of (n, density) pairs.
pub fn mix(seed: u64, i: u64, n_lo: usize, n_hi: usize) -> (usize, f64) {
    // SplitMix-style scrambling; only used to spread corpus parameters.
    let mut z = seed ^ i.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^= z >> 31;
    let n = n_lo + (z as usize % (n_hi - n_lo + 1));
    let density = 0.2 + (z >> 17 & 0xFFFF) as f64 / 65535.0 * 0.6;
    (n, density)
}

pub fn oracle_answer(g: &Graph) -> bool {
    oracle_disconnected_cut(g, u64::MAX).unwrap().is_yes()
}

/// Connected sample from a named generator family, bumping sub-seeds.
pub fn generated_connected(kind: GeneratorKind, n: usize, density: f64, seed: u64) -> Graph {
    for attempt in 0..10_000u64 {
        let spec = GeneratorSpec::new(
            kind,
            n,
            density,
            seed.wrapping_mul(999_983).wrapping_add(attempt),
        );
        let (g, _) = generate(&spec).unwrap();
        if g.is_connected() {
            return g;
        }
    }
    panic!("no connected {kind:?} sample at n={n}");
}
