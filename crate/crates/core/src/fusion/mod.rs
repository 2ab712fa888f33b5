//! Level-k fusion products by three independent routes; the fourth, via
//! affine plactic Schur operators, lives in [`crate::plactic`].

mod bethe;
mod expansion;
mod kac_walton;
mod method;
mod verlinde;

pub use bethe::{fuse_bethe, reduce_bethe};
pub use expansion::FusionExpansion;
pub use kac_walton::{dominant_representative, fuse_kac_walton, ShiftedLabels};
pub use method::{FusionEngine, FusionMethod};
pub use verlinde::{
    fuse_verlinde, quantum_dimensions, s_matrix, smatrix_to_json, VerlindeFusion, MAX_SMATRIX_RANK,
};
