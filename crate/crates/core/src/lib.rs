//! Fusion coefficients of the su(n) level-k WZNW model.
//!
//! Four independent routes to the same numbers are provided and
//! cross-checked against each other:
//!
//! * reduction of Schur classes modulo the Bethe ideal ([`fusion::fuse_bethe`]),
//! * the Kac-Walton formula ([`fusion::fuse_kac_walton`]),
//! * the Verlinde formula with the Kac-Peterson S-matrix ([`fusion::fuse_verlinde`]),
//! * affine plactic Schur operators ([`plactic::fuse_plactic`]).
//!
//! Around them sit a cylindric vertex model whose partition functions
//! generate the same numbers ([`vertex`]), the Bethe eigenbasis that
//! diagonalizes the fusion matrices ([`spectrum`]), level recursions and a
//! validator that runs every cross-check ([`identities`]).
//!
//! The exact layers are generic over a [`Ring`], the spectral layer over a
//! [`Real`]; the aliases below fix `BigInt` and `f64`.

pub mod combinatorics;
pub mod error;
pub mod fusion;
pub mod identities;
pub mod linalg;
pub mod plactic;
pub mod scalar;
pub mod spectrum;
pub mod symfunc;
pub mod tolerance;
pub mod vertex;

pub use combinatorics::{AffineWeight, FusionContext, Partition};
pub use error::{FusionError, Result};
pub use scalar::{Real, Ring};
pub use symfunc::{SchurExpansion, SignedPartition};
pub use tolerance::Tolerances;

pub use fusion::{FusionExpansion, FusionMethod};
pub use identities::ValidationReport;
pub use plactic::{Operator, ZGraded};
pub use vertex::LatticeConfig;

use num_bigint::BigInt;

/// Polynomial in `z` with integer coefficients.
pub type ZGradedInt = ZGraded<BigInt>;
/// Plactic operator with z-graded integer entries.
pub type PlacticOperator = Operator<BigInt>;
/// Double-precision dense complex matrix over a weight basis.
pub type ComplexMatrix = linalg::ComplexMatrix<f64>;
/// Double-precision complex vector over a weight basis.
pub type ComplexVector = linalg::ComplexVector<f64>;
/// Polynomial in the spectral variables and `z` with integer coefficients.
pub type PartitionFunction = vertex::SymbolicPoly<BigInt>;
/// Double-precision Bethe roots.
pub type Roots = spectrum::BetheRoots<f64>;
/// Double-precision Bethe eigenbasis of one context.
pub type Spectrum = spectrum::BetheSpectrum<f64>;
