use num_bigint::BigInt;

use crate::combinatorics::FusionContext;
use crate::error::Result;
use crate::plactic::{nc_poly, Operator, PolyKind};

/// Degree-`r` coefficient of `T(−u) Q(u)`: `Σ_{a+b=r} (−1)^a e_a(A) h_b(A)`.
pub fn tq_coefficient(r: usize, ctx: &FusionContext) -> Result<Operator<BigInt>> {
    let mut acc = Operator::zero(ctx, ctx);
    for a in 0..=r {
        let term = nc_poly::<BigInt>(PolyKind::Elementary, a, ctx).compose(&nc_poly(
            PolyKind::Complete,
            r - a,
            ctx,
        ))?;
        let sign = BigInt::from(if a % 2 == 0 { 1 } else { -1 });
        acc = acc.add(&term.scale(&sign))?;
    }
    Ok(acc)
}

/// Right-hand side on level `k` at degree `r`: the identity at `r = 0` and
/// `z(−1)^n h_k(A)` at `r = n + k`.
pub fn tq_expected(r: usize, ctx: &FusionContext) -> Operator<BigInt> {
    let (n, k) = (ctx.n(), ctx.k());
    let mut out = if r == 0 {
        Operator::identity(ctx)
    } else {
        Operator::zero(ctx, ctx)
    };
    if r == n + k {
        let sign = BigInt::from(if n % 2 == 0 { 1 } else { -1 });
        out = out
            .add(
                &nc_poly::<BigInt>(PolyKind::Complete, k, ctx)
                    .shift_z(1)
                    .scale(&sign),
            )
            .expect("same level");
    }
    out
}

/// Largest absolute coefficient of `T(−u)Q(u) − RHS` over degrees `0..=cutoff`.
pub fn functional_equation_residual(ctx: &FusionContext, cutoff: usize) -> Result<BigInt> {
    let mut worst = BigInt::from(0);
    for r in 0..=cutoff {
        let diff = tq_coefficient(r, ctx)?.sub(&tq_expected(r, ctx))?;
        worst = worst.max(diff.max_abs_coeff());
    }
    Ok(worst)
}
