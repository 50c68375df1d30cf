//! Shared model builders for unit tests.

use crate::model::{BandSpec, CouplingBlockSpec, ModelSpec, SystemSpec};

/// Two-level system (gap 25) over two bands of `n` levels each
/// (width 0.5, separated by 25), with the single resonant canonical block.
pub fn two_band_model(n: usize, lambda: f64) -> ModelSpec {
    ModelSpec::new(
        SystemSpec::new(vec![0.0, 25.0]),
        vec![BandSpec::new(0.0, 0.5, n), BandSpec::new(25.0, 0.5, n)],
        vec![CouplingBlockSpec::new((0, 1), (1, 0), lambda)],
    )
}

/// Three-band model: two canonical ladder blocks of strength `lambda_can`
/// and the four band-diagonal microcanonical blocks of strength
/// `xi * lambda_can`.
pub fn three_band_model(n: usize, lambda_can: f64, xi: f64) -> ModelSpec {
    let lambda_mic = xi * lambda_can;
    ModelSpec::new(
        SystemSpec::new(vec![0.0, 25.0]),
        vec![
            BandSpec::new(0.0, 0.5, n),
            BandSpec::new(25.0, 0.5, n),
            BandSpec::new(50.0, 0.5, n),
        ],
        vec![
            CouplingBlockSpec::new((0, 1), (1, 0), lambda_can),
            CouplingBlockSpec::new((0, 1), (2, 1), lambda_can),
            CouplingBlockSpec::new((0, 0), (1, 1), lambda_mic),
            CouplingBlockSpec::new((0, 0), (2, 2), lambda_mic),
            CouplingBlockSpec::new((1, 1), (0, 0), lambda_mic),
            CouplingBlockSpec::new((1, 1), (1, 1), lambda_mic),
        ],
    )
}
