//! Dense complex matrices and vectors indexed by a weight basis.
//!
//! Only the handful of operations the spectral code needs live here;
//! singular values are delegated to nalgebra.

use std::ops::Mul;

use num_complex::Complex;
use num_traits::Zero;
use serde_json::Value;

use crate::scalar::Real;

pub type ComplexVector<R> = Vec<Complex<R>>;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<R>>,
}

impl<R: Real> ComplexMatrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex::zero(); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, dim, |i, j| {
            if i == j {
                Complex::new(R::one(), R::zero())
            } else {
                Complex::zero()
            }
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Complex<R>,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[ComplexVector<R>]) -> Self {
        let rows = columns.first().map_or(0, Vec::len);
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<R> {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex<R>) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Complex<R>] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> ComplexVector<R> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn mul_vec(&self, v: &[Complex<R>]) -> ComplexVector<R> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Complex::zero(), |acc, (a, b)| acc + *a * *b)
            })
            .collect()
    }

    /// Largest elementwise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> R {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "dimension mismatch"
        );
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (*a - *b).norm())
            .fold(R::zero(), R::max)
    }

    /// `max |(S S†)_{ij} − δ_{ij}|`.
    pub fn unitarity_residual(&self) -> R {
        (self * &self.adjoint()).max_abs_diff(&Self::identity(self.rows))
    }

    /// `max |S_{ij} − S_{ji}|`.
    pub fn symmetry_residual(&self) -> R {
        self.max_abs_diff(&self.transpose())
    }

    pub fn singular_values(&self) -> Vec<f64> {
        let m = nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| {
            let v = self.get(i, j);
            nalgebra::Complex::new(
                v.re.to_f64().unwrap_or(f64::NAN),
                v.im.to_f64().unwrap_or(f64::NAN),
            )
        });
        m.singular_values().iter().copied().collect()
    }

    pub fn smallest_singular_value(&self) -> f64 {
        self.singular_values()
            .into_iter()
            .fold(f64::INFINITY, f64::min)
    }

    /// Array of rows, each entry a `[re, im]` pair.
    pub fn to_json_value(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array(self.row(i).iter().map(complex_to_json).collect()))
                .collect(),
        )
    }
}

impl<R: Real> Mul for &ComplexMatrix<R> {
    type Output = ComplexMatrix<R>;

    fn mul(self, rhs: &ComplexMatrix<R>) -> ComplexMatrix<R> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] = out.data[idx] + a * rhs.get(l, j);
                }
            }
        }
        out
    }
}

pub fn complex_to_json<R: Real>(v: &Complex<R>) -> Value {
    serde_json::json!([v.re.to_f64(), v.im.to_f64()])
}

pub fn vector_to_json<R: Real>(v: &[Complex<R>]) -> Value {
    Value::Array(v.iter().map(complex_to_json).collect())
}

/// `⟨u, v⟩ = Σ ū_i v_i`.
pub fn inner<R: Real>(u: &[Complex<R>], v: &[Complex<R>]) -> Complex<R> {
    u.iter()
        .zip(v)
        .fold(Complex::zero(), |acc, (a, b)| acc + a.conj() * *b)
}

pub fn norm<R: Real>(v: &[Complex<R>]) -> R {
    v.iter().fold(R::zero(), |acc, a| acc + a.norm_sqr()).sqrt()
}

pub fn scale<R: Real>(v: &[Complex<R>], c: Complex<R>) -> ComplexVector<R> {
    v.iter().map(|a| *a * c).collect()
}

/// `‖u − v‖`.
pub fn distance<R: Real>(u: &[Complex<R>], v: &[Complex<R>]) -> R {
    u.iter()
        .zip(v)
        .fold(R::zero(), |acc, (a, b)| acc + (*a - *b).norm_sqr())
        .sqrt()
}
