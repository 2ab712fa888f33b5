use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::Partition;
use crate::error::{FusionError, Result};
use crate::scalar::Ring;
use crate::symfunc::Expansion;

/// Monomial `x_1^{e_1} ⋯ x_m^{e_m} z^d`.
pub type Monomial = (Vec<u32>, u32);

/// Polynomial in `x_1, …, x_m` and `z` with exact coefficients.
#[derive(Clone, PartialEq)]
pub struct SymbolicPoly<T> {
    nvars: usize,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Ring> SymbolicPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], 0, T::one())
    }

    pub fn monomial(exps: Vec<u32>, z: u32, c: T) -> Self {
        let mut out = Self::zero(exps.len());
        out.add_term(exps, z, c);
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Vec<u32>, z: u32, c: T) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let key = (exps, z);
        let slot = self.terms.entry(key.clone()).or_insert_with(T::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_assign(&mut self, rhs: &SymbolicPoly<T>) {
        for ((e, z), c) in &rhs.terms {
            self.add_term(e.clone(), *z, c.clone());
        }
    }

    pub fn mul(&self, rhs: &SymbolicPoly<T>) -> SymbolicPoly<T> {
        let mut out = Self::zero(self.nvars);
        for ((e1, z1), c1) in &self.terms {
            for ((e2, z2), c2) in &rhs.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, z1 + z2, c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Multiplies by `c · x_var^power · z^z` (`var` is 0-based).
    pub fn mul_monomial(&self, var: usize, power: u32, z: u32, c: &T) -> SymbolicPoly<T> {
        let mut out = Self::zero(self.nvars);
        for ((e, d), v) in &self.terms {
            let mut e = e.clone();
            e[var] += power;
            out.add_term(e, d + z, v.clone() * c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32], z: u32) -> T {
        self.terms
            .get(&(exps.to_vec(), z))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `x_1 = ⋯ = x_m = z = 1`.
    pub fn at_ones(&self) -> T {
        self.terms
            .values()
            .fold(T::zero(), |acc, c| acc + c.clone())
    }

    /// Coefficient of `z^d`, as a polynomial in the `x` alone.
    pub fn z_part(&self, d: u32) -> SymbolicPoly<T> {
        let mut out = Self::zero(self.nvars);
        for ((e, z), c) in &self.terms {
            if *z == d {
                out.add_term(e.clone(), 0, c.clone());
            }
        }
        out
    }

    pub fn z_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|(_, z)| *z).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Invariance under all adjacent transpositions of the `x` variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|((e, z), c)| {
                let mut swapped = e.clone();
                swapped.swap(i, i + 1);
                &self.coeff(&swapped, *z) == c
            })
        })
    }

    /// Expansion `Σ_d z^d Σ_λ c_{λ,d} s_λ(x)`, keyed by `d`.
    ///
    /// Peels off the lexicographically leading monomial, which for a
    /// symmetric polynomial is a partition with the Schur coefficient
    /// attached to it.
    pub fn schur_expand(&self) -> Result<BTreeMap<u32, Expansion<T>>> {
        let mut out = BTreeMap::new();
        for d in self.z_degrees() {
            let mut rest = self.z_part(d);
            let mut exp = Expansion::new();
            while let Some(((lead, _), c)) = rest.terms.iter().next_back() {
                let lead = lead.clone();
                let c = c.clone();
                if lead.windows(2).any(|w| w[0] < w[1]) {
                    return Err(FusionError::Invariant(format!(
                        "leading monomial {lead:?} is not a partition; polynomial is not symmetric"
                    )));
                }
                let lambda = Partition::new(lead.iter().map(|&v| v as usize).collect())?;
                let s = schur_polynomial::<T>(&lambda, self.nvars);
                for ((e, _), v) in &s.terms {
                    rest.add_term(e.clone(), 0, -(v.clone() * c.clone()));
                }
                exp.add_term(lambda, c);
            }
            out.insert(d, exp);
        }
        Ok(out)
    }
}

/// `s_λ(x_1, …, x_m)` as a sum over semistandard tableaux with entries `1..=m`.
pub fn schur_polynomial<T: Ring>(lambda: &Partition, nvars: usize) -> SymbolicPoly<T> {
    let mut out = SymbolicPoly::zero(nvars);
    if lambda.len() > nvars {
        return out;
    }
    let cells: Vec<(usize, usize)> = lambda.boxes().collect();
    let mut grid = vec![vec![0usize; lambda.first() + 1]; lambda.len() + 1];
    fn rec<T: Ring>(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        exps: &mut Vec<u32>,
        out: &mut SymbolicPoly<T>,
    ) {
        if idx == cells.len() {
            out.add_term(exps.clone(), 0, T::one());
            return;
        }
        let (i, j) = cells[idx];
        let left = if j > 1 { grid[i][j - 1] } else { 1 };
        let above = if i > 1 { grid[i - 1][j] + 1 } else { 1 };
        for v in left.max(above)..=exps.len() {
            grid[i][j] = v;
            exps[v - 1] += 1;
            rec(idx + 1, cells, grid, exps, out);
            exps[v - 1] -= 1;
        }
        grid[i][j] = 0;
    }
    rec(0, &cells, &mut grid, &mut vec![0; nvars], &mut out);
    out
}

impl<T: Ring + fmt::Display> fmt::Display for SymbolicPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|((e, z), c)| {
                let mut s = format!("{c}");
                for (i, p) in e.iter().enumerate() {
                    match p {
                        0 => {}
                        1 => s.push_str(&format!("·x{}", i + 1)),
                        _ => s.push_str(&format!("·x{}^{p}", i + 1)),
                    }
                }
                match z {
                    0 => {}
                    1 => s.push_str("·z"),
                    _ => s.push_str(&format!("·z^{z}")),
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<T: Ring> fmt::Debug for SymbolicPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::p;
    use num_bigint::BigInt;

    #[test]
    fn two_one_in_three_variables() {
        // Example 1 lists eight tableaux over the letters 1, 2, 3
        let s = schur_polynomial::<BigInt>(&p(&[2, 1]), 3);
        assert_eq!(s.at_ones(), BigInt::from(8));
        assert_eq!(s.coeff(&[1, 1, 1], 0), BigInt::from(2));
        assert_eq!(s.coeff(&[2, 1, 0], 0), BigInt::from(1));
        assert_eq!(s.coeff(&[0, 1, 2], 0), BigInt::from(1));
        assert_eq!(s.len(), 7);
        assert!(s.is_symmetric());
    }

    #[test]
    fn schur_expansion_recovers_products() {
        // s_1 · s_1 = s_2 + s_11 in two variables, carried at z^1
        let s1 = schur_polynomial::<BigInt>(&p(&[1]), 2);
        let prod = s1
            .mul(&s1)
            .mul(&SymbolicPoly::monomial(vec![0, 0], 1, BigInt::from(1)));
        let e = prod.schur_expand().unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[&1].coeff(&p(&[2])), BigInt::from(1));
        assert_eq!(e[&1].coeff(&p(&[1, 1])), BigInt::from(1));
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        let q = SymbolicPoly::monomial(vec![0, 1], 0, BigInt::from(1));
        assert!(!q.is_symmetric());
        assert!(q.schur_expand().is_err());
    }
}
