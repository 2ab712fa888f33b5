//! Fusion by the Kac-Walton formula: tensor product multiplicities folded
//! back into the fundamental alcove by the shifted affine Weyl action.

use num_bigint::BigInt;

use crate::combinatorics::{FusionContext, Partition};
use crate::error::{FusionError, Result};
use crate::fusion::FusionExpansion;
use crate::symfunc::{lr_expand, SchurExpansion, SignedPartition};

/// Dynkin labels of `ν̂ + ρ̂` at shifted level `n + k`, affine label last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedLabels {
    labels: Vec<i64>,
}

impl ShiftedLabels {
    /// `ℓ_i = λ_i − λ_{i+1} + 1` for `i < n`, `ℓ_n = k − λ_1 + 1`.
    pub fn from_partition(lambda: &Partition, n: usize, k: usize) -> Self {
        let parts = lambda.padded(n);
        let mut labels: Vec<i64> = (0..n - 1)
            .map(|i| parts[i] as i64 - parts[i + 1] as i64 + 1)
            .collect();
        labels.push(k as i64 - parts[0] as i64 + 1);
        Self { labels }
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn total(&self) -> i64 {
        self.labels.iter().sum()
    }

    /// Affine simple reflection at 0-based node `i` of the cyclic diagram.
    pub fn reflect(&mut self, i: usize) {
        let n = self.labels.len();
        let v = self.labels[i];
        self.labels[i] = -v;
        self.labels[(i + n - 1) % n] += v;
        self.labels[(i + 1) % n] += v;
    }

    /// Partition with finite Dynkin labels `ℓ_i − 1`; all labels must be positive.
    fn to_partition(&self) -> Partition {
        let n = self.labels.len();
        let mut parts = vec![0usize; n - 1];
        let mut acc = 0;
        for i in (0..n - 1).rev() {
            acc += (self.labels[i] - 1) as usize;
            parts[i] = acc;
        }
        Partition::new(parts).expect("decreasing by construction")
    }
}

/// Signed dominant representative of the shifted affine Weyl orbit of `ρ`
/// (at most `n − 1` parts after removing full columns).
pub fn dominant_representative(rho: &Partition, ctx: &FusionContext) -> Result<SignedPartition> {
    let (n, k) = (ctx.n(), ctx.k());
    let rho = rho.remove_full_columns(n);
    let mut shifted = ShiftedLabels::from_partition(&rho, n, k);
    let total = shifted.total();
    let mut sign = 1i8;
    // each reflection strictly shortens the distance to the alcove, which
    // the weight of ρ bounds
    let bound = (rho.weight() + n) * (rho.weight() + n) * n + 16;
    for _ in 0..bound {
        match shifted.labels.iter().position(|&l| l < 0) {
            Some(i) => {
                shifted.reflect(i);
                sign = -sign;
                debug_assert_eq!(shifted.total(), total);
            }
            None => {
                if shifted.labels.contains(&0) {
                    return Ok(SignedPartition::zero());
                }
                return Ok(SignedPartition::new(sign, shifted.to_partition()));
            }
        }
    }
    Err(FusionError::Invariant(format!(
        "affine reflection of {rho} did not reach the alcove"
    )))
}

pub fn fuse_kac_walton(
    lambda: &Partition,
    mu: &Partition,
    ctx: &FusionContext,
) -> Result<FusionExpansion> {
    ctx.check_partition(lambda)?;
    ctx.check_partition(mu)?;
    let n = ctx.n();
    let mut acc = SchurExpansion::new();
    for (rho, c) in lr_expand(lambda, mu).iter() {
        if rho.len() > n {
            continue;
        }
        let r = dominant_representative(rho, ctx)?;
        if !r.is_zero() {
            acc.add_term(r.shape, c * BigInt::from(r.sign));
        }
    }
    FusionExpansion::from_terms(ctx, acc)
}
