//! Affine plactic Schur operators `s_λ(A) = det(h_{λ_i − i + j}(A))` and the
//! combinatorial fusion product `λ̂ ∗ μ̂ = s_λ(A) μ̂` at `z = 1`.

use itertools::Itertools;
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::Zero;

use crate::combinatorics::{FusionContext, Partition};
use crate::error::Result;
use crate::fusion::FusionExpansion;
use crate::linalg::{ComplexMatrix, ComplexVector};
use crate::plactic::{nc_poly, Operator, PolyKind, SparseVector, ZGraded};
use crate::scalar::{Real, Ring};
use crate::symfunc::SchurExpansion;

fn sign_of(perm: &[usize]) -> i64 {
    let inv = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Signed index lists `(ε(w), [λ_i − i + w(i)])` of the Jacobi-Trudi
/// expansion, dropping terms with a negative index.
///
/// Only the first `ℓ(λ)` rows are used: the remaining rows of the
/// `(n−1) × (n−1)` array are unitriangular and do not change the determinant.
fn jacobi_trudi_terms(lambda: &Partition) -> Vec<(i64, Vec<usize>)> {
    let l = lambda.len();
    (0..l)
        .permutations(l)
        .filter_map(|perm| {
            let idx: Option<Vec<usize>> = (0..l)
                .map(|i| {
                    let v = lambda.part(i + 1) as i64 - i as i64 + perm[i] as i64;
                    (v >= 0).then_some(v as usize)
                })
                .collect();
            idx.map(|idx| (sign_of(&perm), idx))
        })
        .collect()
}

/// `s_λ(A)` on level `k`, z-graded.
pub fn nc_schur<T: Ring>(lambda: &Partition, ctx: &FusionContext) -> Result<Operator<T>> {
    if lambda.len() >= ctx.n() {
        return Err(crate::FusionError::InvalidArgument(format!(
            "{lambda} has more than n − 1 = {} rows",
            ctx.n() - 1
        )));
    }
    let max = lambda.first() + lambda.len();
    let h: Vec<Operator<T>> = (0..=max)
        .map(|r| nc_poly(PolyKind::Complete, r, ctx))
        .collect();
    let mut acc = Operator::zero(ctx, ctx);
    for (sign, idx) in jacobi_trudi_terms(lambda) {
        let mut term = Operator::identity(ctx);
        for r in idx {
            term = h[r].compose(&term)?;
        }
        acc = acc.add(&term.scale(&T::from_int(sign)))?;
    }
    Ok(acc)
}

/// Fusion through plactic Schur operators with `h_r(A)|_{z=1}` cached.
#[derive(Debug, Clone)]
pub struct PlacticFusion {
    ctx: FusionContext,
    h: Vec<Operator<BigInt>>,
}

impl PlacticFusion {
    pub fn new(ctx: &FusionContext) -> Self {
        // Jacobi-Trudi indices for λ in the box never exceed k + n − 2
        let max = ctx.k() + ctx.n();
        Self {
            ctx: ctx.clone(),
            h: (0..=max)
                .map(|r| nc_poly::<BigInt>(PolyKind::Complete, r, ctx).at_z_one())
                .collect(),
        }
    }

    pub fn context(&self) -> &FusionContext {
        &self.ctx
    }

    fn apply_schur(&self, lambda: &Partition, v: &SparseVector<BigInt>) -> SparseVector<BigInt> {
        let mut out = SparseVector::new();
        for (sign, idx) in jacobi_trudi_terms(lambda) {
            let mut w = v.clone();
            for r in idx {
                w = self.h[r].apply(&w);
            }
            let s = ZGraded::monomial(0, BigInt::from(sign));
            for (i, c) in w {
                let slot = out.entry(i).or_insert_with(ZGraded::zero);
                *slot += &(&c * &s);
                if slot.is_zero() {
                    out.remove(&i);
                }
            }
        }
        out
    }

    /// `λ̂ ∗ μ̂ = s_λ(A) μ̂` at `z = 1`.
    pub fn fuse(&self, lambda: &Partition, mu: &Partition) -> Result<FusionExpansion> {
        let ctx = &self.ctx;
        ctx.check_partition(lambda)?;
        let j = ctx.index_of_partition(mu)?;
        let v = SparseVector::from([(j, ZGraded::one())]);
        let terms: SchurExpansion = self
            .apply_schur(lambda, &v)
            .into_iter()
            .map(|(i, c)| (ctx.partitions()[i].clone(), c.at_one()))
            .collect();
        FusionExpansion::from_terms(ctx, terms)
    }

    /// Dense `s_λ(A)|_{z=1}`.
    pub fn schur_matrix<R: Real>(&self, lambda: &Partition) -> Result<ComplexMatrix<R>> {
        self.ctx.check_partition(lambda)?;
        let dim = self.ctx.dim();
        let mut m = ComplexMatrix::zeros(dim, dim);
        for j in 0..dim {
            let v = SparseVector::from([(j, ZGraded::one())]);
            for (i, c) in self.apply_schur(lambda, &v) {
                let x = num_traits::ToPrimitive::to_f64(&c.at_one()).expect("small integer");
                m.set(i, j, Complex::new(R::lit(x), R::zero()));
            }
        }
        Ok(m)
    }

    /// Bilinear extension `u ∗ v = Σ_λ u_λ s_λ(A) v`.
    pub fn star_extend<R: Real>(
        &self,
        u: &[Complex<R>],
        v: &[Complex<R>],
    ) -> Result<ComplexVector<R>> {
        let dim = self.ctx.dim();
        let mut out = vec![Complex::<R>::zero(); dim];
        for (a, lambda) in self.ctx.partitions().iter().enumerate() {
            if u[a].is_zero() {
                continue;
            }
            let sv = self.schur_matrix::<R>(lambda)?.mul_vec(v);
            for (o, x) in out.iter_mut().zip(sv) {
                *o = *o + u[a] * x;
            }
        }
        Ok(out)
    }
}

pub fn fuse_plactic(
    lambda: &Partition,
    mu: &Partition,
    ctx: &FusionContext,
) -> Result<FusionExpansion> {
    PlacticFusion::new(ctx).fuse(lambda, mu)
}

/// `u ∗ v` for vectors in the level-k weight space.
pub fn star_extend<R: Real>(
    u: &[Complex<R>],
    v: &[Complex<R>],
    ctx: &FusionContext,
) -> Result<ComplexVector<R>> {
    PlacticFusion::new(ctx).star_extend(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::p;

    #[test]
    fn golden_products() {
        let ctx = FusionContext::new(3, 4).unwrap();
        let e = fuse_plactic(&p(&[3, 1]), &p(&[3, 2]), &ctx).unwrap();
        assert_eq!(e.to_string(), "{0: 1, 2,1: 2, 3: 1, 3,3: 1, 4,2: 1}");
        let ctx = FusionContext::new(5, 2).unwrap();
        let e = fuse_plactic(&p(&[1, 1, 1]), &p(&[2, 2, 1]), &ctx).unwrap();
        assert_eq!(e.to_string(), "{1,1,1: 1, 2,1: 1}");
        let ctx = FusionContext::new(5, 3).unwrap();
        let e = fuse_plactic(&p(&[1, 1, 1]), &p(&[3, 2, 1]), &ctx).unwrap();
        assert_eq!(e.to_string(), "{2,1,1: 1, 2,2: 1, 3,1: 1, 3,3,2,1: 1}");
    }

    #[test]
    fn schur_of_a_row_is_complete() {
        let ctx = FusionContext::new(3, 2).unwrap();
        assert_eq!(
            nc_schur::<BigInt>(&p(&[2]), &ctx).unwrap(),
            nc_poly(PolyKind::Complete, 2, &ctx)
        );
        assert_eq!(
            nc_schur::<BigInt>(&Partition::empty(), &ctx).unwrap(),
            Operator::identity(&ctx)
        );
    }

    #[test]
    fn star_with_unit() {
        let ctx = FusionContext::new(3, 2).unwrap();
        let dim = ctx.dim();
        let mut unit = vec![Complex::new(0.0, 0.0); dim];
        unit[ctx.vacuum_index()] = Complex::new(1.0, 0.0);
        let v: Vec<Complex<f64>> = (0..dim).map(|i| Complex::new(i as f64, 1.0)).collect();
        let w = star_extend(&unit, &v, &ctx).unwrap();
        assert!(crate::linalg::distance(&w, &v) < 1e-12);
    }
}
