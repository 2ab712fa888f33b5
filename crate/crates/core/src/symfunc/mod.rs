//! Commutative symmetric functions: Littlewood-Richardson products,
//! straightening of non-partition Schur indices, numerical Schur evaluation.

mod expansion;
mod lr;
mod schur_eval;
mod straighten;

use num_bigint::BigInt;

pub(crate) use expansion::bigint_to_json;
pub use expansion::Expansion;
pub use lr::{lr_coefficient, lr_expand};
pub use schur_eval::{complete_symmetric, complex_det, elementary_symmetric, schur_evaluate};
pub use straighten::{straighten, SignedPartition};

/// Integer Schur expansion.
pub type SchurExpansion = Expansion<BigInt>;
