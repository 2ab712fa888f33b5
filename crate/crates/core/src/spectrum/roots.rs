use num_complex::Complex;
use serde_json::{json, Value};

use crate::combinatorics::{FusionContext, Partition};
use crate::error::{FusionError, Result};
use crate::linalg::complex_to_json;
use crate::scalar::Real;

/// The explicit solution of the Bethe ansatz equations labelled by `σ`, at `z = 1`.
#[derive(Clone, Debug)]
pub struct BetheRoots<R> {
    pub sigma: Partition,
    pub roots: Vec<Complex<R>>,
}

impl<R: Real> BetheRoots<R> {
    pub fn residual(&self, ctx: &FusionContext) -> R {
        bae_residual(&self.roots, ctx)
    }

    pub fn conjugated(&self) -> Vec<Complex<R>> {
        self.roots.iter().map(|x| x.conj()).collect()
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "sigma": self.sigma.parts(),
            "roots": self.roots.iter().map(complex_to_json).collect::<Vec<_>>(),
        })
    }
}

/// Half-integer exponents `I_j = (k+1)/2 + σᵗ_{k+1−j} − (k+1−j)`, `j = 1..k`.
pub fn root_exponents(sigma: &Partition, k: usize) -> Vec<f64> {
    let st = sigma.transpose();
    (1..=k)
        .map(|j| {
            let i = k + 1 - j;
            (k as f64 + 1.0) / 2.0 + st.part(i) as f64 - i as f64
        })
        .collect()
}

/// `x_j = ζ^{|σ|/n} ζ^{I_j}` with `ζ = exp(2πi/(k+n))`.
pub fn bethe_roots<R: Real>(sigma: &Partition, ctx: &FusionContext) -> Result<BetheRoots<R>> {
    let (n, k) = (ctx.n(), ctx.k());
    if !sigma.fits_box(n - 1, k) {
        return Err(FusionError::PartitionOutsideBox {
            partition: sigma.to_string(),
            rows: n - 1,
            cols: k,
        });
    }
    let base = sigma.weight() as f64 / n as f64;
    let roots = root_exponents(sigma, k)
        .into_iter()
        .map(|e| {
            let theta = R::lit(2.0 * std::f64::consts::PI * (base + e) / (k + n) as f64);
            Complex::new(theta.cos(), theta.sin())
        })
        .collect();
    Ok(BetheRoots {
        sigma: sigma.clone(),
        roots,
    })
}

/// `max_i |x_i^{n+k} − (−1)^{k−1} Π_j x_j|`; zero for `k = 0`.
pub fn bae_residual<R: Real>(roots: &[Complex<R>], ctx: &FusionContext) -> R {
    let k = roots.len();
    if k == 0 {
        return R::zero();
    }
    let prod = roots
        .iter()
        .fold(Complex::new(R::one(), R::zero()), |acc, x| acc * x);
    let rhs = if k % 2 == 1 { prod } else { -prod };
    roots
        .iter()
        .map(|x| (x.powu((ctx.n() + k) as u32) - rhs).norm())
        .fold(R::zero(), R::max)
}
