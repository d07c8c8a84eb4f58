//! Shared instance builders for the criterion benches.

use kernels_core::{generate, GenClass, GenParams, Generated};

pub const SEED: u64 = 2024;

/// A generated instance; panics on invalid parameters.
pub fn instance(class: GenClass, n: usize, density: f64) -> Generated {
    generate(&GenParams::new(class, n, density, SEED)).expect("valid generator parameters")
}
