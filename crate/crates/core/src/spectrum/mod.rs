//! Explicit Bethe roots and the Bethe eigenbasis of the plactic operators,
//! at `z = 1` and in floating point.

mod roots;
mod vectors;

pub use roots::{bae_residual, bethe_roots, root_exponents, BetheRoots};
pub use vectors::{
    bethe_vector, eigen_check, fix_phase, norm_residual, s_matrix_from_bethe, shift_identity_holds,
    BOperator, BetheMethod, BetheSpectrum,
};
