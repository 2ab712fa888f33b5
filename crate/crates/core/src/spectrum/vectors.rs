use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combinatorics::{
    dual_weight, partitions_in_box, AffineWeight, FusionContext, Partition,
};
use crate::error::{FusionError, Result};
use crate::fusion::s_matrix;
use crate::linalg::{distance, inner, norm, scale, vector_to_json, ComplexMatrix, ComplexVector};
use crate::plactic::{
    generator, nc_poly, nc_poly_finite, GeneratorKind, Operator, PlacticFusion, PolyKind,
};
use crate::scalar::Real;
use crate::spectrum::{bethe_roots, BetheRoots};
use crate::symfunc::schur_evaluate;

/// How a Bethe vector is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetheMethod {
    /// `B(x̄_1) ⋯ B(x̄_k) Ω` from the level-0 vacuum.
    BOperator,
    /// Components `S_{σ*λ} / S_{σ*∅}` read off the S-matrix.
    SMatrix,
}

impl FromStr for BetheMethod {
    type Err = FusionError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "b-operator" | "b_operator" => Ok(Self::BOperator),
            "s-matrix" | "s_matrix" => Ok(Self::SMatrix),
            _ => Err(FusionError::Parse(format!(
                "unknown Bethe vector method {s:?}"
            ))),
        }
    }
}

fn cmul<R: Real>(m: &ComplexMatrix<R>, v: &[Complex<R>]) -> ComplexVector<R> {
    m.mul_vec(v)
}

/// `B(u) = u A(u) φ_1*` from level `l` to level `l+1`, with `A(u)` the
/// z-free elementary generating function.
pub struct BOperator<R> {
    phi_star: ComplexMatrix<R>,
    elementary: Vec<ComplexMatrix<R>>,
}

impl<R: Real> BOperator<R> {
    pub fn new(source: &FusionContext) -> Result<Self> {
        let target = source.with_level(source.k() + 1);
        let phi_star = generator::<BigInt>(GeneratorKind::PhiStar, 1, source)?.to_complex();
        let elementary = (0..source.n())
            .map(|r| nc_poly_finite::<BigInt>(PolyKind::Elementary, r, &target).to_complex())
            .collect();
        Ok(Self {
            phi_star,
            elementary,
        })
    }

    pub fn apply(&self, u: Complex<R>, v: &[Complex<R>]) -> ComplexVector<R> {
        let w = cmul(&self.phi_star, v);
        let mut out = vec![Complex::zero(); w.len()];
        let mut power = u;
        for e in &self.elementary {
            for (o, x) in out.iter_mut().zip(cmul(e, &w)) {
                *o = *o + power * x;
            }
            power = power * u;
        }
        out
    }
}

/// Multiplies `v` by a unit complex number so that its vacuum component is
/// real and positive.
pub fn fix_phase<R: Real>(v: &[Complex<R>], ctx: &FusionContext) -> Result<ComplexVector<R>> {
    let c = v[ctx.vacuum_index()];
    let r = c.norm();
    if r <= R::lit(1e-300) {
        return Err(FusionError::Numerical(
            "vacuum component vanishes; phase undefined".into(),
        ));
    }
    Ok(scale(v, c.conj() / r))
}

/// Bethe vectors of one context, with the operators they need built once.
pub struct BetheSpectrum<R> {
    ctx: FusionContext,
    b_ops: Vec<BOperator<R>>,
    s: Option<ComplexMatrix<R>>,
}

impl<R: Real> BetheSpectrum<R> {
    pub fn new(ctx: &FusionContext) -> Result<Self> {
        let b_ops = (0..ctx.k())
            .map(|l| BOperator::new(&ctx.with_level(l)))
            .collect::<Result<_>>()?;
        // the S-matrix route is optional; beyond its guard only B is available
        let s = s_matrix::<R>(ctx).ok();
        Ok(Self {
            ctx: ctx.clone(),
            b_ops,
            s,
        })
    }

    pub fn context(&self) -> &FusionContext {
        &self.ctx
    }

    fn s(&self) -> Result<&ComplexMatrix<R>> {
        self.s
            .as_ref()
            .ok_or_else(|| FusionError::Infeasible(format!("no S-matrix for n = {}", self.ctx.n())))
    }

    pub fn sigmas(&self) -> Vec<Partition> {
        partitions_in_box(self.ctx.n() - 1, self.ctx.k())
    }

    pub fn roots(&self, sigma: &Partition) -> Result<BetheRoots<R>> {
        bethe_roots(sigma, &self.ctx)
    }

    /// The phase-fixed Bethe vector `b_σ`.
    pub fn vector(&self, sigma: &Partition, method: BetheMethod) -> Result<ComplexVector<R>> {
        let raw = match method {
            BetheMethod::BOperator => {
                let roots = self.roots(sigma)?;
                let vac0 = self.ctx.with_level(0);
                let mut v = vec![Complex::zero(); vac0.dim()];
                v[vac0.vacuum_index()] = Complex::new(R::one(), R::zero());
                for (l, x) in roots.roots.iter().enumerate().rev() {
                    // x_k is applied first, landing on level 1
                    let level = roots.roots.len() - 1 - l;
                    v = self.b_ops[level].apply(x.conj(), &v);
                }
                v
            }
            BetheMethod::SMatrix => {
                let s = self.s()?;
                let dual = dual_weight(sigma, &self.ctx)?;
                let row = self.ctx.index_of_partition(&dual)?;
                let denom = s.get(row, self.ctx.vacuum_index());
                (0..self.ctx.dim()).map(|j| s.get(row, j) / denom).collect()
            }
        };
        fix_phase(&raw, &self.ctx)
    }

    /// `b̂_σ = b_σ / ⟨b_σ, b_σ⟩^{1/2}`.
    pub fn normalized(&self, sigma: &Partition) -> Result<ComplexVector<R>> {
        let b = self.vector(sigma, BetheMethod::BOperator)?;
        let nb = norm(&b);
        Ok(scale(&b, Complex::new(R::one() / nb, R::zero())))
    }

    /// The idempotent `b_σ / ⟨b_σ, b_σ⟩ = S_{∅σ} Σ_λ S̄_{λσ} λ̂`.
    ///
    /// Dividing by the norm instead of its square leaves a stray factor
    /// `S_{∅σ}` and the result is not idempotent.
    pub fn idempotent(&self, sigma: &Partition) -> Result<ComplexVector<R>> {
        let b = self.vector(sigma, BetheMethod::BOperator)?;
        let nb = inner(&b, &b).re;
        Ok(scale(&b, Complex::new(R::one() / nb, R::zero())))
    }

    /// Relative distance between the two constructions after phase fixing.
    pub fn method_residual(&self, sigma: &Partition) -> Result<R> {
        let a = self.vector(sigma, BetheMethod::BOperator)?;
        let b = self.vector(sigma, BetheMethod::SMatrix)?;
        Ok(distance(&a, &b) / norm(&b))
    }

    /// `S_{λσ}/S_{∅σ} = s_{λᵗ}(x^σ)`.
    pub fn eigenvalue(&self, lambda: &Partition, sigma: &Partition) -> Result<Complex<R>> {
        Ok(schur_evaluate(
            &lambda.transpose(),
            &self.roots(sigma)?.roots,
        ))
    }

    /// `‖O b_σ − (S_{ρσ}/S_{∅σ}) b_σ‖ / ‖b_σ‖` for `O = h_r(A)` (`ρ = (r)`)
    /// or `O = e_r(A)` (`ρ = (1^r)`) at `z = 1`.
    ///
    /// Meaningful for `r < n + k`: `e_{n+k}(A)` vanishes identically while
    /// `h_{n+k}(x^σ)` does not.
    pub fn eigen_residual(&self, sigma: &Partition, r: usize, kind: PolyKind) -> Result<R> {
        let op: ComplexMatrix<R> = nc_poly::<BigInt>(kind, r, &self.ctx).to_complex();
        let rho = match kind {
            PolyKind::Complete => Partition::row(r),
            PolyKind::Elementary => Partition::column(r),
        };
        self.operator_residual(&op, &rho, sigma)
    }

    /// Residual of the eigenvalue equation for an arbitrary operator whose
    /// eigenvalue on `b_σ` should be `S_{ρσ}/S_{∅σ}`.
    pub fn operator_residual(
        &self,
        op: &ComplexMatrix<R>,
        rho: &Partition,
        sigma: &Partition,
    ) -> Result<R> {
        let b = self.vector(sigma, BetheMethod::BOperator)?;
        let ev = self.eigenvalue(rho, sigma)?;
        let ob = op.mul_vec(&b);
        let expected = scale(&b, ev);
        Ok(distance(&ob, &expected) / norm(&b))
    }

    /// `S_{λσ} = ⟨b_σ, λ⟩ / ⟨b_σ, b_σ⟩^{1/2}`, assembled column by column.
    pub fn s_matrix(&self) -> Result<ComplexMatrix<R>> {
        let dim = self.ctx.dim();
        let columns: Vec<ComplexVector<R>> = self
            .ctx
            .partitions()
            .par_iter()
            .map(|sigma| {
                let b = self.vector(sigma, BetheMethod::BOperator)?;
                let nb = norm(&b);
                Ok((0..dim).map(|l| b[l].conj() / nb).collect())
            })
            .collect::<Result<_>>()?;
        Ok(ComplexMatrix::from_columns(&columns))
    }

    /// Smallest singular value of the matrix whose columns are the `b̂_σ`.
    pub fn completeness(&self) -> Result<f64> {
        let columns = self
            .ctx
            .partitions()
            .par_iter()
            .map(|sigma| self.normalized(sigma))
            .collect::<Result<Vec<_>>>()?;
        Ok(ComplexMatrix::from_columns(&columns).smallest_singular_value())
    }

    /// `max_{σ,ρ} ‖e_σ ∗ e_ρ − δ_{σρ} e_σ‖` over the idempotents `e_σ`.
    pub fn idempotency_residual(&self) -> Result<R> {
        let fusion = PlacticFusion::new(&self.ctx);
        let hats = self
            .ctx
            .partitions()
            .iter()
            .map(|s| self.idempotent(s))
            .collect::<Result<Vec<_>>>()?;
        let mut worst = R::zero();
        for (i, u) in hats.iter().enumerate() {
            for (j, v) in hats.iter().enumerate() {
                let prod = fusion.star_extend(u, v)?;
                let expected = if i == j {
                    u.clone()
                } else {
                    vec![Complex::zero(); u.len()]
                };
                worst = worst.max(distance(&prod, &expected));
            }
        }
        Ok(worst)
    }

    /// `{sigma, roots, residual, vector}` for one Bethe vector.
    pub fn to_json_value(&self, sigma: &Partition) -> Result<Value> {
        let roots = self.roots(sigma)?;
        let v = self.vector(sigma, BetheMethod::BOperator)?;
        Ok(json!({
            "sigma": sigma.parts(),
            "roots": roots.to_json_value()["roots"],
            "residual": roots.residual(&self.ctx).to_f64(),
            "vector": vector_to_json(&v),
        }))
    }
}

/// `‖b_σ‖² = |S_{∅σ}|^{−2}` residual, relative.
pub fn norm_residual<R: Real>(sp: &BetheSpectrum<R>, sigma: &Partition) -> Result<R> {
    let s = sp.s()?;
    let b = sp.vector(sigma, BetheMethod::BOperator)?;
    let col = sp.ctx.index_of_partition(sigma)?;
    let s0 = s.get(sp.ctx.vacuum_index(), col).norm();
    let expected = R::one() / (s0 * s0);
    Ok((inner(&b, &b).re - expected).abs() / expected)
}

pub fn bethe_vector<R: Real>(
    sigma: &Partition,
    ctx: &FusionContext,
    method: BetheMethod,
) -> Result<ComplexVector<R>> {
    BetheSpectrum::new(ctx)?.vector(sigma, method)
}

pub fn eigen_check<R: Real>(
    sigma: &Partition,
    r: usize,
    kind: PolyKind,
    ctx: &FusionContext,
) -> Result<R> {
    BetheSpectrum::new(ctx)?.eigen_residual(sigma, r, kind)
}

pub fn s_matrix_from_bethe<R: Real>(ctx: &FusionContext) -> Result<ComplexMatrix<R>> {
    BetheSpectrum::new(ctx)?.s_matrix()
}

/// Whether `h_k(A)` at `z = 1` rotates Dynkin labels `(m_1, …, m_n) ↦ (m_n, m_1, …, m_{n−1})`.
pub fn shift_identity_holds(ctx: &FusionContext) -> bool {
    let hk = nc_poly::<BigInt>(PolyKind::Complete, ctx.k(), ctx).at_z_one();
    let rotation = Operator::from_weight_map(ctx, ctx, |m| {
        let mut labels = m.labels().to_vec();
        labels.rotate_right(1);
        vec![(AffineWeight::new(labels), crate::plactic::ZGraded::one())]
    });
    hk == rotation
}
