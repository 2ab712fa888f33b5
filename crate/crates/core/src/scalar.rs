//! Scalar traits shared by the exact and the floating-point halves of the crate.
//!
//! Combinatorial objects (Schur expansions, plactic operators, lattice
//! polynomials) are generic over an exact commutative ring [`Ring`]; the
//! spectral side (S-matrix, Bethe roots and vectors) is generic over a
//! floating-point type [`Real`]. The crate root fixes the concrete choices
//! (`BigInt` and `f64`) through type aliases.

use std::fmt::Debug;
use std::ops::{AddAssign, MulAssign, Neg, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive, Num, ToPrimitive};

/// Exact commutative ring with unit: `i64`, `BigInt`, `BigRational`, ...
pub trait Ring:
    Num + Clone + Debug + Neg<Output = Self> + AddAssign + SubAssign + MulAssign + Send + Sync
{
    fn from_int(v: i64) -> Self;
}

impl<T> Ring for T
where
    T: Num
        + Clone
        + Debug
        + Neg<Output = T>
        + AddAssign
        + SubAssign
        + MulAssign
        + FromPrimitive
        + Send
        + Sync,
{
    fn from_int(v: i64) -> Self {
        <T as FromPrimitive>::from_i64(v).expect("ring contains the integers")
    }
}

/// Floating point: f32 or f64
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Default + Send + Sync + 'static
{
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite literal")
    }
}

impl Real for f32 {}
impl Real for f64 {}
