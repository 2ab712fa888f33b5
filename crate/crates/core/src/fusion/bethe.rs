//! Fusion by reduction modulo the Bethe ideal.
//!
//! With the roles of rows and columns exchanged, a Schur class `s_ρ` whose
//! first part is at least `n` is congruent to `s_{(ρ_2, …, ρ_k, ρ_1 − n)}`
//! (z = 1). Rotating and straightening until the first part drops below `n`
//! leaves a class in the `k × (n−1)` box or zero.

use num_bigint::BigInt;

use crate::combinatorics::{FusionContext, Partition};
use crate::error::{FusionError, Result};
use crate::fusion::FusionExpansion;
use crate::symfunc::{lr_expand, straighten, SchurExpansion, SignedPartition};

/// Reduces `s_{ρᵗ}` to a signed basis class. `ρᵗ` must have at most `k` parts.
pub fn reduce_bethe(rho_t: &Partition, ctx: &FusionContext) -> Result<SignedPartition> {
    let (n, k) = (ctx.n(), ctx.k());
    if rho_t.len() > k {
        return Err(FusionError::InvalidArgument(format!(
            "{rho_t} has more than k = {k} parts"
        )));
    }
    let mut sign = 1i8;
    let mut shape = rho_t.clone();
    // the first part drops by at least one per step
    let bound = rho_t.weight() + 1;
    let mut steps = 0;
    while shape.first() >= n {
        steps += 1;
        if steps > bound {
            return Err(FusionError::Invariant(format!(
                "Bethe reduction of {rho_t} did not terminate"
            )));
        }
        let parts = shape.padded(k);
        let mut rotated: Vec<usize> = parts[1..].to_vec();
        rotated.push(parts[0] - n);
        let s = straighten(&rotated);
        if s.is_zero() {
            return Ok(SignedPartition::zero());
        }
        sign *= s.sign;
        shape = s.shape;
    }
    Ok(SignedPartition::new(sign, shape.remove_rows_of_length(n)))
}

pub fn fuse_bethe(
    lambda: &Partition,
    mu: &Partition,
    ctx: &FusionContext,
) -> Result<FusionExpansion> {
    ctx.check_partition(lambda)?;
    ctx.check_partition(mu)?;
    let mut acc = SchurExpansion::new();
    for (rho_t, c) in lr_expand(&lambda.transpose(), &mu.transpose()).iter() {
        if rho_t.len() > ctx.k() {
            continue;
        }
        let r = reduce_bethe(rho_t, ctx)?;
        if r.is_zero() {
            continue;
        }
        acc.add_term(r.shape.transpose(), c * BigInt::from(r.sign));
    }
    FusionExpansion::from_terms(ctx, acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::p;

    fn ctx(n: usize, k: usize) -> FusionContext {
        FusionContext::new(n, k).unwrap()
    }

    #[test]
    fn reduction_examples() {
        let c = ctx(3, 4);
        assert_eq!(
            reduce_bethe(&p(&[4, 2, 2, 1]), &c).unwrap(),
            SignedPartition::positive(p(&[2, 2, 1, 1]))
        );
        assert!(reduce_bethe(&p(&[4, 3, 2]), &c).unwrap().is_zero());
        assert_eq!(
            reduce_bethe(&p(&[2, 2, 1]), &c).unwrap(),
            SignedPartition::positive(p(&[2, 2, 1]))
        );
        assert!(reduce_bethe(&p(&[1, 1, 1, 1, 1]), &c).is_err());
    }

    #[test]
    fn golden_product() {
        let c = ctx(3, 4);
        let e = fuse_bethe(&p(&[3, 1]), &p(&[3, 2]), &c).unwrap();
        assert_eq!(e.to_string(), "{0: 1, 2,1: 2, 3: 1, 3,3: 1, 4,2: 1}");
    }

    #[test]
    fn unit_and_small_rank() {
        let c = ctx(3, 4);
        let mu = p(&[3, 2]);
        let e = fuse_bethe(&Partition::empty(), &mu, &c).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.coeff(&mu), BigInt::from(1));
        let e = fuse_bethe(&p(&[1]), &p(&[1]), &ctx(2, 2)).unwrap();
        assert_eq!(e.to_string(), "{0: 1, 2: 1}");
    }

    #[test]
    fn coefficient_of_four_two_comes_from_one_lr_number() {
        // only ρᵗ = (4,2,2,1), i.e. ρ = (4,3,1,1), reduces onto (4,2)ᵗ = (2,2,1,1)
        let c = ctx(3, 4);
        let lr = lr_expand(&p(&[3, 1]).transpose(), &p(&[3, 2]).transpose());
        let target = p(&[4, 2]).transpose();
        let contributing: Vec<_> = lr
            .iter()
            .filter(|(rho_t, _)| rho_t.len() <= 4)
            .filter(|(rho_t, _)| {
                let r = reduce_bethe(rho_t, &c).unwrap();
                !r.is_zero() && r.shape == target
            })
            .map(|(rho_t, coeff)| (rho_t.clone(), coeff.clone()))
            .collect();
        assert_eq!(contributing, vec![(p(&[4, 2, 2, 1]), BigInt::from(1))]);
        assert_eq!(
            crate::symfunc::lr_coefficient(&p(&[3, 1]), &p(&[3, 2]), &p(&[4, 3, 1, 1])),
            BigInt::from(1)
        );
    }

    #[test]
    fn level_zero() {
        let c = ctx(4, 0);
        let e = fuse_bethe(&Partition::empty(), &Partition::empty(), &c).unwrap();
        assert_eq!(e.to_string(), "{0: 1}");
    }
}
