use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;

/// `ε · s_shape` with `ε ∈ {−1, 0, +1}`; the shape is meaningless when `ε = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedPartition {
    pub sign: i8,
    pub shape: Partition,
}

impl SignedPartition {
    pub fn zero() -> Self {
        Self {
            sign: 0,
            shape: Partition::empty(),
        }
    }

    pub fn positive(shape: Partition) -> Self {
        Self { sign: 1, shape }
    }

    pub fn new(sign: i8, shape: Partition) -> Self {
        if sign == 0 {
            return Self::zero();
        }
        Self { sign, shape }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }
}

/// Rewrites `s_α` for an arbitrary nonnegative sequence as `±s_ν` or zero.
///
/// Sorts `α_i + (len − i)` into strictly decreasing order; a repeated value
/// means the alternant vanishes, otherwise the sign is that of the sorting
/// permutation.
pub fn straighten(alpha: &[usize]) -> SignedPartition {
    let len = alpha.len();
    let mut shifted: Vec<usize> = alpha
        .iter()
        .enumerate()
        .map(|(i, a)| a + (len - 1 - i))
        .collect();
    // insertion sort, counting transpositions
    let mut swaps = 0usize;
    for i in 1..len {
        let mut j = i;
        while j > 0 && shifted[j - 1] < shifted[j] {
            shifted.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    if shifted.windows(2).any(|w| w[0] == w[1]) {
        return SignedPartition::zero();
    }
    let parts = shifted
        .iter()
        .enumerate()
        .map(|(i, v)| v - (len - 1 - i))
        .collect();
    let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
    SignedPartition::new(sign, Partition::from_decreasing(parts))
}
