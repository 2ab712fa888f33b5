use std::collections::HashMap;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::combinatorics::{AffineWeight, FusionContext, Partition};
use crate::error::{FusionError, Result};
use crate::fusion::{fuse_bethe, FusionExpansion};
use crate::symfunc::SchurExpansion;

/// Which one-row or one-column weight is fused.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StripKind {
    /// `(1^r)`
    Column,
    /// `(r)`
    Row,
}

impl StripKind {
    pub fn shape(self, r: usize) -> Partition {
        match self {
            Self::Column => Partition::column(r),
            Self::Row => Partition::row(r),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Column => "column",
            Self::Row => "row",
        }
    }
}

impl FromStr for StripKind {
    type Err = FusionError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "column" => Ok(Self::Column),
            "row" => Ok(Self::Row),
            _ => Err(FusionError::Parse(format!("unknown strip kind {s:?}"))),
        }
    }
}

fn check_strip(kind: StripKind, r: usize, ctx: &FusionContext) -> Result<()> {
    let shape = kind.shape(r);
    if !ctx.contains_partition(&shape) {
        return Err(FusionError::InvalidArgument(format!(
            "{} strip of length {r} is not a level-{} weight of su({})",
            kind.name(),
            ctx.k(),
            ctx.n()
        )));
    }
    Ok(())
}

/// Adds one walker at node `i`, landing on level `k+1`.
fn raise(w: &AffineWeight, i: usize) -> AffineWeight {
    let mut out = w.clone();
    out.labels_mut()[i - 1] += 1;
    out
}

/// Removes one walker at node `i`, or `None` when the node is empty.
fn lower(w: &AffineWeight, i: usize) -> Option<AffineWeight> {
    let mut out = w.clone();
    let m = &mut out.labels_mut()[i - 1];
    *m = m.checked_sub(1)?;
    Some(out)
}

/// `N_{ρ, φ_i*μ̂}^{(k+1), φ_i*ν̂} = N_{ρ μ̂}^{(k) ν̂}` with `ρ = (1^r)` or `(r)`.
pub fn check_level_recursion(
    r: usize,
    kind: StripKind,
    mu: &AffineWeight,
    nu: &AffineWeight,
    i: usize,
    ctx: &FusionContext,
) -> Result<bool> {
    let n = ctx.n();
    if i == 0 || i > n {
        return Err(FusionError::IndexOutOfRange { index: i, n });
    }
    check_strip(kind, r, ctx)?;
    ctx.check_weight(mu)?;
    ctx.check_weight(nu)?;
    let up = ctx.with_level(ctx.k() + 1);
    let rho = kind.shape(r);
    let lower_side =
        fuse_bethe(&rho, &ctx.weight_to_partition(mu)?, ctx)?.coeff(&ctx.weight_to_partition(nu)?);
    let mu_up = up.weight_to_partition(&raise(mu, i))?;
    let nu_up = up.weight_to_partition(&raise(nu, i))?;
    let upper_side = fuse_bethe(&rho, &mu_up, &up)?.coeff(&nu_up);
    Ok(lower_side == upper_side)
}

/// `ν` with `0..=max` columns of height `n` adjoined: the shapes a strip on
/// `μ` can produce before full columns are deleted.
fn lifts(nu: &Partition, n: usize, max: usize) -> Vec<Partition> {
    (0..=max)
        .map(|c| {
            Partition::new((1..=n).map(|i| nu.part(i) + c).collect())
                .expect("adding columns keeps it a partition")
        })
        .collect()
}

fn vertical_strip(outer: &Partition, inner: &Partition, size: usize) -> bool {
    outer.weight() == inner.weight() + size && outer.is_vertical_strip_over(inner)
}

fn horizontal_strip(outer: &Partition, inner: &Partition, size: usize) -> bool {
    outer.weight() == inner.weight() + size && outer.is_horizontal_strip_over(inner)
}

/// Closed form for `N_{(1^r) μ̂}^{(k) ν̂}`, `0 ≤ r ≤ n−1`:
/// 1 if `ν/μ` is a vertical `r`-strip with `ν_1 = μ_1`, or if `ν` over `μ`
/// with one box added to its first row is a vertical `(r−1)`-strip with
/// `ν_1 = μ_1 + 1`; otherwise 0.
///
/// `ν` may carry a deleted column of height `n`, so both lifts are tried.
pub fn fuse_column_closed_form(
    r: usize,
    mu: &AffineWeight,
    nu: &AffineWeight,
    ctx: &FusionContext,
) -> Result<u8> {
    let n = ctx.n();
    if r >= n {
        return Err(FusionError::InvalidArgument(format!(
            "column closed form needs r < n, got r = {r}"
        )));
    }
    let mu = ctx.weight_to_partition(mu)?;
    let nu = ctx.weight_to_partition(nu)?;
    let mut mu_plus = mu.parts().to_vec();
    match mu_plus.first_mut() {
        Some(m) => *m += 1,
        None => mu_plus.push(1),
    }
    let mu_plus = Partition::new(mu_plus)?;
    let mut hits = 0u8;
    // a vertical strip adds at most one box to row n
    for nt in lifts(&nu, n, 1) {
        if nt.first() == mu.first() && vertical_strip(&nt, &mu, r) {
            hits += 1;
        }
        if r >= 1 && nt.first() == mu.first() + 1 && vertical_strip(&nt, &mu_plus, r - 1) {
            hits += 1;
        }
    }
    if hits > 1 {
        return Err(FusionError::Invariant(format!(
            "closed form matched {hits} times for {mu} -> {nu}"
        )));
    }
    Ok(hits)
}

type Memo = HashMap<(usize, usize, AffineWeight, AffineWeight), BigInt>;

fn row_coefficient(
    r: usize,
    mu: &AffineWeight,
    nu: &AffineWeight,
    ctx: &FusionContext,
    memo: &mut Memo,
) -> Result<BigInt> {
    let key = (ctx.k(), r, mu.clone(), nu.clone());
    if let Some(v) = memo.get(&key) {
        return Ok(v.clone());
    }
    let n = ctx.n();
    let mu_p = ctx.weight_to_partition(mu)?;
    let nu_p = ctx.weight_to_partition(nu)?;
    let direct = lifts(&nu_p, n, r)
        .iter()
        .any(|nt| nt.first() == mu_p.first() && horizontal_strip(nt, &mu_p, r));
    let value = if direct {
        BigInt::from(1)
    } else if r == 0 || ctx.k() == 0 {
        BigInt::from(0)
    } else {
        match (lower(mu, n), lower(nu, 1)) {
            (Some(m), Some(v)) => {
                row_coefficient(r - 1, &m, &v, &ctx.with_level(ctx.k() - 1), memo)?
            }
            // an annihilating φ ends the descent
            _ => BigInt::from(0),
        }
    };
    memo.insert(key, value.clone());
    Ok(value)
}

/// `(r) ∗ μ̂` by the row recursion: 1 where `ν/μ` is a horizontal `r`-strip
/// with `ν_1 = μ_1`, otherwise the level-`(k−1)` coefficient
/// `N_{(r−1), φ_n μ̂}^{φ_1 ν̂}`.
pub fn fuse_row_recursion(
    r: usize,
    mu: &AffineWeight,
    ctx: &FusionContext,
) -> Result<FusionExpansion> {
    check_strip(StripKind::Row, r, ctx)?;
    ctx.check_weight(mu)?;
    let mut memo = Memo::new();
    let mut terms = SchurExpansion::new();
    for (nu, nu_p) in ctx.basis().iter().zip(ctx.partitions()) {
        let c = row_coefficient(r, mu, nu, ctx, &mut memo)?;
        terms.add_term(nu_p.clone(), c);
    }
    FusionExpansion::from_terms(ctx, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::p;

    #[test]
    fn lifts_add_a_full_column() {
        let l = lifts(&p(&[2, 1]), 3, 2);
        assert_eq!(l, vec![p(&[2, 1]), p(&[3, 2, 1]), p(&[4, 3, 2])]);
    }

    #[test]
    fn node_moves() {
        let w = AffineWeight::new(vec![1, 0, 2]);
        assert_eq!(raise(&w, 2).labels(), &[1, 1, 2]);
        assert_eq!(lower(&w, 2), None);
        assert_eq!(lower(&w, 3).unwrap().labels(), &[1, 0, 1]);
    }

    #[test]
    fn column_through_the_seam() {
        // (1) ∗ (1,1) = ∅ at n = 3, k = 1 needs the lifted shape
        let ctx = FusionContext::new(3, 1).unwrap();
        let mu = ctx.partition_to_weight(&p(&[1, 1])).unwrap();
        let nu = ctx.partition_to_weight(&Partition::empty()).unwrap();
        assert_eq!(fuse_column_closed_form(1, &mu, &nu, &ctx).unwrap(), 1);
    }
}
