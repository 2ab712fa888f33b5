use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::combinatorics::{hook_content_product, AffineWeight, FusionContext, Partition};
use crate::error::{FusionError, Result};
use crate::plactic::{nc_poly, PolyKind};
use crate::scalar::Ring;
use crate::vertex::{enumerate_lattice_configs, LatticeConfig, SymbolicPoly};

/// How the partition function is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    /// Sum of Boltzmann weights over enumerated configurations.
    Direct,
    /// Product of row transfer matrices built from `h_r(A)`.
    Operator,
}

impl FromStr for Backend {
    type Err = FusionError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Self::Direct),
            "operator" => Ok(Self::Operator),
            _ => Err(FusionError::Parse(format!("unknown backend {s:?}"))),
        }
    }
}

/// Boltzmann weight of a configuration: `Π_i x_i^{#horizontal} z^{seam}`.
pub fn boltzmann_weight<T: Ring>(config: &LatticeConfig) -> SymbolicPoly<T> {
    let exps = config
        .horizontal_edges()
        .iter()
        .map(|&h| h as u32)
        .collect();
    SymbolicPoly::monomial(exps, config.z_degree() as u32, T::one())
}

/// Partition function between bottom boundary `μ̂` and top boundary `ν̂`,
/// a polynomial in `x_1, …, x_{n−1}` and `z`.
pub fn partition_function<T: Ring>(
    mu: &AffineWeight,
    nu: &AffineWeight,
    ctx: &FusionContext,
    backend: Backend,
) -> Result<SymbolicPoly<T>> {
    ctx.check_weight(mu)?;
    ctx.check_weight(nu)?;
    let nvars = ctx.n() - 1;
    match backend {
        Backend::Direct => {
            let mut z = SymbolicPoly::zero(nvars);
            for c in enumerate_lattice_configs(mu, nu, ctx)? {
                z.add_assign(&boltzmann_weight(&c));
            }
            Ok(z)
        }
        Backend::Operator => {
            // on level k a row moves at most k walkers, so h_r = 0 for r > k
            let h: Vec<_> = (0..=ctx.k())
                .map(|r| nc_poly::<T>(PolyKind::Complete, r, ctx))
                .collect();
            let start = ctx.index_of(mu).expect("checked above");
            let mut state: BTreeMap<usize, SymbolicPoly<T>> = BTreeMap::new();
            state.insert(start, SymbolicPoly::one(nvars));
            for var in 0..nvars {
                let mut next: BTreeMap<usize, SymbolicPoly<T>> = BTreeMap::new();
                for (r, op) in h.iter().enumerate() {
                    for (&j, poly) in &state {
                        for (&i, entry) in op.column(j) {
                            let slot = next.entry(i).or_insert_with(|| SymbolicPoly::zero(nvars));
                            for (d, c) in entry.iter() {
                                slot.add_assign(&poly.mul_monomial(var, r as u32, d, c));
                            }
                        }
                    }
                }
                state = next;
            }
            let end = ctx.index_of(nu).expect("checked above");
            Ok(state
                .remove(&end)
                .unwrap_or_else(|| SymbolicPoly::zero(nvars)))
        }
    }
}

/// The z-degree at which `s_λ` carries `N_{λμ}^ν` in the partition function,
/// or `None` when it is not a nonnegative integer.
pub fn fusion_degree(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Option<u32> {
    let num = (lambda.weight() + mu.weight()) as i64 - nu.weight() as i64;
    if num % n as i64 != 0 {
        return None;
    }
    let d = num / n as i64 + nu.first() as i64 - mu.first() as i64;
    u32::try_from(d).ok()
}

/// Number of configurations with exactly `2d` occupied outer horizontal edges.
pub fn count_paths(
    mu: &AffineWeight,
    nu: &AffineWeight,
    d: usize,
    ctx: &FusionContext,
) -> Result<BigInt> {
    Ok(enumerate_lattice_configs(mu, nu, ctx)?
        .iter()
        .filter(|c| c.z_degree() == d)
        .count()
        .into())
}

/// `Σ_λ N_{λμ}^ν · Π_{(i,j)∈λ} (n + j − i)/h(i,j)` over those `λ` whose
/// fusion degree equals `d`. Fusion coefficients come from `coeffs`.
pub fn hook_content_sum(
    mu: &Partition,
    nu: &Partition,
    d: usize,
    ctx: &FusionContext,
    mut coeffs: impl FnMut(&Partition) -> Result<BigInt>,
) -> Result<BigInt> {
    let mut total = num_rational::BigRational::from_integer(BigInt::from(0));
    for lambda in ctx.partitions() {
        if fusion_degree(lambda, mu, nu, ctx.n()) != Some(d as u32) {
            continue;
        }
        let c = coeffs(lambda)?;
        if c != BigInt::from(0) {
            total +=
                hook_content_product(lambda, ctx.n()) * num_rational::BigRational::from_integer(c);
        }
    }
    if !total.is_integer() {
        return Err(FusionError::Invariant(format!(
            "hook-content sum {total} is not an integer"
        )));
    }
    Ok(total.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::p;

    #[test]
    fn vacuum_to_vacuum_at_level_zero() {
        let ctx = FusionContext::new(3, 0).unwrap();
        let vac = ctx.basis()[0].clone();
        for b in [Backend::Direct, Backend::Operator] {
            let z = partition_function::<BigInt>(&vac, &vac, &ctx, b).unwrap();
            assert_eq!(z, SymbolicPoly::one(2));
        }
    }

    #[test]
    fn degree_formula() {
        // (3,1)*(3,2) at n=3: the (2,1) term sits at z^1
        assert_eq!(
            fusion_degree(&p(&[3, 1]), &p(&[3, 2]), &p(&[2, 1]), 3),
            Some(1)
        );
        assert_eq!(fusion_degree(&p(&[1]), &p(&[1]), &p(&[1]), 3), None);
    }
}
