use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::scalar::Ring;

/// Polynomial in the boundary parameter `z`: `Σ_d c_d z^d`, zeros never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZGraded<T> {
    coeffs: BTreeMap<u32, T>,
}

impl<T: Ring> ZGraded<T> {
    pub fn zero() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, T::one())
    }

    /// `c · z^degree`
    pub fn monomial(degree: u32, c: T) -> Self {
        let mut out = Self::zero();
        out.add_term(degree, c);
        out
    }

    pub fn add_term(&mut self, degree: u32, c: T) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(degree).or_insert_with(T::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, degree: u32) -> T {
        self.coeffs.get(&degree).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &T)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Value at `z = 1`.
    pub fn at_one(&self) -> T {
        self.coeffs
            .values()
            .fold(T::zero(), |acc, c| acc + c.clone())
    }

    /// Value at an arbitrary ring element.
    pub fn specialize(&self, z: &T) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, (d, c)| {
            acc + c.clone() * num_traits::pow(z.clone(), *d as usize)
        })
    }

    /// Multiplication by `z^shift`.
    pub fn shift(&self, shift: u32) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(d, c)| (d + shift, c.clone()))
                .collect(),
        }
    }

    /// The `z^degree` part, as a constant.
    pub fn part(&self, degree: u32) -> Self {
        Self::monomial(0, self.coeff(degree))
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero();
        for (d, v) in &self.coeffs {
            out.add_term(*d, v.clone() * c.clone());
        }
        out
    }
}

impl<T: Ring> Default for ZGraded<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Ring> AddAssign<&ZGraded<T>> for ZGraded<T> {
    fn add_assign(&mut self, rhs: &ZGraded<T>) {
        for (d, c) in &rhs.coeffs {
            self.add_term(*d, c.clone());
        }
    }
}

impl<T: Ring> Add for &ZGraded<T> {
    type Output = ZGraded<T>;

    fn add(self, rhs: &ZGraded<T>) -> ZGraded<T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<T: Ring> Neg for &ZGraded<T> {
    type Output = ZGraded<T>;

    fn neg(self) -> ZGraded<T> {
        ZGraded {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c.clone())).collect(),
        }
    }
}

impl<T: Ring> Sub for &ZGraded<T> {
    type Output = ZGraded<T>;

    fn sub(self, rhs: &ZGraded<T>) -> ZGraded<T> {
        self + &(-rhs)
    }
}

impl<T: Ring> Mul for &ZGraded<T> {
    type Output = ZGraded<T>;

    fn mul(self, rhs: &ZGraded<T>) -> ZGraded<T> {
        let mut out = ZGraded::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<T: Ring + fmt::Display> fmt::Display for ZGraded<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(d, c)| match d {
                0 => format!("{c}"),
                1 => format!("{c}z"),
                _ => format!("{c}z^{d}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl<T: Ring> fmt::Debug for ZGraded<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter()).finish()
    }
}
