//! Exact operator realization of the affine plactic algebra on the level-k
//! weight spaces: phase-algebra generators, noncommutative elementary,
//! complete and Schur polynomials, and the combinatorial fusion product.

mod functional;
mod generators;
mod operator;
mod schur;
mod zgraded;

pub use functional::{functional_equation_residual, tq_coefficient, tq_expected};
pub use generators::{generator, nc_poly, nc_poly_finite, GeneratorKind, PolyKind};
pub use operator::{Operator, SparseVector};
pub use schur::{fuse_plactic, nc_schur, star_extend, PlacticFusion};
pub use zgraded::ZGraded;
