use num_complex::Complex;
use num_traits::{One, Zero};

use crate::combinatorics::Partition;
use crate::scalar::Real;

/// `h_0, …, h_max` evaluated at `points`, via `h_r(x_1..x_l) = h_r(x_1..x_{l−1}) + x_l h_{r−1}(x_1..x_l)`.
pub fn complete_symmetric<R: Real>(max: usize, points: &[Complex<R>]) -> Vec<Complex<R>> {
    let mut h = vec![Complex::<R>::zero(); max + 1];
    h[0] = Complex::one();
    for &x in points {
        for r in 1..=max {
            let prev = h[r - 1];
            h[r] = h[r] + x * prev;
        }
    }
    h
}

/// `e_0, …, e_max` evaluated at `points`.
pub fn elementary_symmetric<R: Real>(max: usize, points: &[Complex<R>]) -> Vec<Complex<R>> {
    let mut e = vec![Complex::<R>::zero(); max + 1];
    e[0] = Complex::one();
    for &x in points {
        for r in (1..=max).rev() {
            let prev = e[r - 1];
            e[r] = e[r] + x * prev;
        }
    }
    e
}

/// Determinant by Gaussian elimination with partial pivoting.
#[allow(clippy::needless_range_loop)]
pub fn complex_det<R: Real>(mut m: Vec<Vec<Complex<R>>>) -> Complex<R> {
    let n = m.len();
    let mut det = Complex::<R>::one();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].norm().partial_cmp(&m[b][col].norm()).unwrap())
            .unwrap();
        if m[pivot][col].norm().is_zero() {
            return Complex::zero();
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col];
        det = det * p;
        for row in col + 1..n {
            let f = m[row][col] / p;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let v = m[col][c];
                m[row][c] = m[row][c] - f * v;
            }
        }
    }
    det
}

/// Schur polynomial `s_λ(points)` from the Jacobi-Trudi determinant
/// `det(h_{λ_i − i + j})`; zero when `λ` has more parts than there are points.
pub fn schur_evaluate<R: Real>(lambda: &Partition, points: &[Complex<R>]) -> Complex<R> {
    if lambda.len() > points.len() {
        return Complex::zero();
    }
    if lambda.is_empty() {
        return Complex::one();
    }
    let l = lambda.len();
    let h = complete_symmetric(lambda.first() + l, points);
    let matrix = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let idx = lambda.part(i) as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        Complex::zero()
                    } else {
                        h[idx as usize]
                    }
                })
                .collect()
        })
        .collect();
    complex_det(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{hook_content_product, p, partitions_in_box};
    use num_traits::ToPrimitive;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    /// Monomial sum over semistandard tableaux.
    fn schur_by_tableaux(lambda: &Partition, x: &[Complex<f64>]) -> Complex<f64> {
        let cells: Vec<(usize, usize)> = lambda.boxes().collect();
        let mut grid = vec![vec![0usize; lambda.first() + 1]; lambda.len() + 1];
        fn rec(
            idx: usize,
            cells: &[(usize, usize)],
            grid: &mut Vec<Vec<usize>>,
            x: &[Complex<f64>],
        ) -> Complex<f64> {
            if idx == cells.len() {
                return cells.iter().fold(Complex::new(1.0, 0.0), |acc, &(i, j)| {
                    acc * x[grid[i][j] - 1]
                });
            }
            let (i, j) = cells[idx];
            let lo = (if j > 1 { grid[i][j - 1] } else { 1 }).max(if i > 1 {
                grid[i - 1][j] + 1
            } else {
                1
            });
            let mut total = Complex::new(0.0, 0.0);
            for v in lo..=x.len() {
                grid[i][j] = v;
                total += rec(idx + 1, cells, grid, x);
            }
            grid[i][j] = 0;
            total
        }
        rec(0, &cells, &mut grid, x)
    }

    #[test]
    fn example_values() {
        let ones = vec![c(1.0, 0.0); 3];
        assert!((schur_evaluate(&p(&[2, 1]), &ones) - c(8.0, 0.0)).norm() < 1e-12);
        assert_eq!(
            schur_evaluate(&Partition::empty(), &[c(0.3, 0.1)]),
            c(1.0, 0.0)
        );
        assert_eq!(schur_evaluate(&p(&[1, 1, 1]), &ones[..2]), c(0.0, 0.0));
    }

    #[test]
    fn all_ones_equals_hook_content() {
        for n in 2..=5 {
            let ones = vec![c(1.0, 0.0); n - 1];
            for lambda in partitions_in_box(n - 1, 4) {
                let expected = hook_content_product(&lambda, n).to_f64().unwrap();
                let got = schur_evaluate(&lambda, &ones);
                assert!(
                    (got - c(expected, 0.0)).norm() < 1e-9,
                    "{lambda} n={n}: {got}"
                );
            }
        }
    }

    #[test]
    fn agrees_with_tableau_sum_at_generic_points() {
        let x = [c(0.3, 0.7), c(-1.1, 0.2), c(0.5, -0.4), c(0.9, 0.9)];
        for lambda in partitions_in_box(4, 3) {
            let a = schur_evaluate(&lambda, &x);
            let b = schur_by_tableaux(&lambda, &x);
            assert!((a - b).norm() < 1e-9 * (1.0 + b.norm()), "{lambda}");
        }
    }

    #[test]
    fn single_precision_runs() {
        let x = [Complex::new(1.0f32, 0.0); 3];
        assert!((schur_evaluate(&p(&[2, 1]), &x).re - 8.0).abs() < 1e-4);
    }
}
