//! Numerical tolerances used by the spectral and Verlinde code paths.
//!
//! Integer identities never consult these values.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Unitarity and symmetry of the S-matrix.
    pub unitarity: f64,
    /// Distance of a Verlinde sum from the nearest integer.
    pub verlinde_rounding: f64,
    /// Residual of the Bethe ansatz equations at the explicit roots.
    pub bae: f64,
    /// Relative residuals of eigenvalue, idempotency and vector comparisons.
    pub spectral: f64,
    /// Elementwise agreement of the Bethe-assembled S-matrix with Kac-Peterson.
    pub s_from_bethe: f64,
    /// Smallest admissible singular value for Bethe-basis completeness.
    pub completeness: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            unitarity: 1e-9,
            verlinde_rounding: 1e-6,
            bae: 1e-9,
            spectral: 1e-8,
            s_from_bethe: 1e-7,
            completeness: 1e-8,
        }
    }
}
