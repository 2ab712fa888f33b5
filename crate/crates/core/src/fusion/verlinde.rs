//! Kac-Peterson S-matrix, quantum dimensions and the Verlinde formula.
//!
//! Weights are embedded as `λ ↦ (λ_1, …, λ_{n−1}, 0)` with Weyl vector
//! `ρ = (n−1, …, 1, 0)` and pairing `(a, b) = Σ a_i b_i − (Σa)(Σb)/n`; the
//! finite Weyl group acts by permuting coordinates.

use itertools::Itertools;
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::combinatorics::{FusionContext, Partition};
use crate::error::{FusionError, Result};
use crate::fusion::FusionExpansion;
use crate::linalg::ComplexMatrix;
use crate::scalar::Real;
use crate::symfunc::SchurExpansion;

/// Largest rank for which the `n!`-term Weyl sum is attempted.
pub const MAX_SMATRIX_RANK: usize = 6;

fn shifted(lambda: &Partition, n: usize) -> Vec<i64> {
    let parts = lambda.padded(n);
    (0..n)
        .map(|i| parts[i] as i64 + (n - 1 - i) as i64)
        .collect()
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let inversions = perm
        .iter()
        .enumerate()
        .flat_map(|(i, a)| perm[i + 1..].iter().filter(move |b| *b < a))
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `e^{2πi p/q}`, with `p` reduced mod `q` before going to floating point.
fn root_of_unity<R: Real>(p: i64, q: i64) -> Complex<R> {
    let angle = R::TAU() * R::lit(p.rem_euclid(q) as f64) / R::lit(q as f64);
    Complex::new(angle.cos(), angle.sin())
}

/// `S_{λσ} = e^{iπn(n−1)/4} / √(n(k+n)^{n−1}) · Σ_w ε(w) e^{−2πi (w(λ+ρ), σ+ρ)/(k+n)}`
/// in basis order.
#[allow(clippy::needless_range_loop)]
pub fn s_matrix<R: Real>(ctx: &FusionContext) -> Result<ComplexMatrix<R>> {
    let (n, k) = (ctx.n(), ctx.k());
    if n > MAX_SMATRIX_RANK {
        return Err(FusionError::Infeasible(format!(
            "S-matrix needs n! terms per entry; n = {n} exceeds {MAX_SMATRIX_RANK}"
        )));
    }
    let h = (n + k) as i64;
    let ni = n as i64;
    let perms: Vec<(Vec<usize>, i64)> = (0..n)
        .permutations(n)
        .map(|p| {
            let s = permutation_sign(&p);
            (p, s)
        })
        .collect();
    let shifted_basis: Vec<Vec<i64>> = ctx.partitions().iter().map(|l| shifted(l, n)).collect();
    // e^{iπ n(n−1)/4} = e^{2πi n(n−1)/8}
    let phase = root_of_unity::<R>(ni * (ni - 1), 8);
    let norm = R::lit((n as f64) * (h as f64).powi(n as i32 - 1)).sqrt();
    let prefactor = phase / norm;
    let dim = ctx.dim();
    let mut s = ComplexMatrix::zeros(dim, dim);
    for a in 0..dim {
        let la = &shifted_basis[a];
        let sum_a: i64 = la.iter().sum();
        for b in a..dim {
            let sb = &shifted_basis[b];
            let sum_b: i64 = sb.iter().sum();
            let mut total = Complex::<R>::zero();
            for (perm, sign) in &perms {
                // n · (w(λ+ρ), σ+ρ), an integer
                let pairing = ni
                    * perm
                        .iter()
                        .enumerate()
                        .map(|(i, &j)| la[j] * sb[i])
                        .sum::<i64>()
                    - sum_a * sum_b;
                let term = root_of_unity::<R>(-pairing, ni * h);
                total = if *sign > 0 {
                    total + term
                } else {
                    total - term
                };
            }
            let v = total * prefactor;
            s.set(a, b, v);
            s.set(b, a, v);
        }
    }
    Ok(s)
}

/// `S_{λ∅}/S_{∅∅} = Π_{i<j} sin(π(λ_i − λ_j + j − i)/(k+n)) / sin(π(j − i)/(k+n))`,
/// in basis order.
pub fn quantum_dimensions<R: Real>(ctx: &FusionContext) -> Vec<R> {
    let n = ctx.n();
    let h = R::lit((n + ctx.k()) as f64);
    ctx.partitions()
        .iter()
        .map(|lambda| {
            let l = shifted(lambda, n);
            let mut q = R::one();
            for i in 0..n {
                for j in i + 1..n {
                    let num = (R::PI() * R::lit((l[i] - l[j]) as f64) / h).sin();
                    let den = (R::PI() * R::lit((j - i) as f64) / h).sin();
                    q = q * num / den;
                }
            }
            q
        })
        .collect()
}

/// Verlinde sums against a precomputed S-matrix.
#[derive(Debug, Clone)]
pub struct VerlindeFusion<R> {
    ctx: FusionContext,
    s: ComplexMatrix<R>,
    tolerance: f64,
}

impl<R: Real> VerlindeFusion<R> {
    pub fn new(ctx: &FusionContext, tolerance: f64) -> Result<Self> {
        Ok(Self {
            ctx: ctx.clone(),
            s: s_matrix(ctx)?,
            tolerance,
        })
    }

    pub fn s_matrix(&self) -> &ComplexMatrix<R> {
        &self.s
    }

    /// Fusion expansion together with the largest distance of any Verlinde
    /// sum from its nearest integer.
    pub fn fuse_with_residual(
        &self,
        lambda: &Partition,
        mu: &Partition,
    ) -> Result<(FusionExpansion, f64)> {
        let ctx = &self.ctx;
        let a = ctx.index_of_partition(lambda)?;
        let b = ctx.index_of_partition(mu)?;
        let vac = ctx.vacuum_index();
        let dim = ctx.dim();
        let weights: Vec<Complex<R>> = (0..dim)
            .map(|sigma| self.s.get(a, sigma) * self.s.get(b, sigma) / self.s.get(vac, sigma))
            .collect();
        let mut terms = SchurExpansion::new();
        let mut worst = 0.0f64;
        for (nu_idx, nu) in ctx.partitions().iter().enumerate() {
            // S^{-1} = S† by unitarity
            let value = (0..dim).fold(Complex::<R>::zero(), |acc, sigma| {
                acc + weights[sigma] * self.s.get(nu_idx, sigma).conj()
            });
            let re = value.re.to_f64().unwrap_or(f64::NAN);
            let im = value.im.to_f64().unwrap_or(f64::NAN);
            let rounded = re.round();
            let residual = (re - rounded).abs().max(im.abs());
            worst = worst.max(residual);
            // NaN fails this comparison too
            #[allow(clippy::neg_cmp_op_on_partial_ord)]
            if !(residual < self.tolerance) || rounded < 0.0 {
                return Err(FusionError::Numerical(format!(
                    "Verlinde sum for {lambda} * {mu} at {nu} is {re}{im:+}i (worst residual {worst:e})"
                )));
            }
            let c = rounded as i64;
            if c != 0 {
                terms.add_term(nu.clone(), BigInt::from(c));
            }
        }
        Ok((FusionExpansion::from_terms(ctx, terms)?, worst))
    }

    pub fn fuse(&self, lambda: &Partition, mu: &Partition) -> Result<FusionExpansion> {
        self.fuse_with_residual(lambda, mu).map(|(e, _)| e)
    }
}

/// One-shot Verlinde fusion in double precision with the default rounding tolerance.
pub fn fuse_verlinde(
    lambda: &Partition,
    mu: &Partition,
    ctx: &FusionContext,
) -> Result<FusionExpansion> {
    VerlindeFusion::<f64>::new(ctx, crate::Tolerances::default().verlinde_rounding)?
        .fuse(lambda, mu)
}

/// `{"n","k","basis":[weights],"partitions":[..],"entries":[[[re,im],..],..]}`
pub fn smatrix_to_json<R: Real>(ctx: &FusionContext, s: &ComplexMatrix<R>) -> Value {
    json!({
        "n": ctx.n(),
        "k": ctx.k(),
        "basis": ctx.basis().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "partitions": ctx.partitions(),
        "entries": s.to_json_value(),
    })
}
