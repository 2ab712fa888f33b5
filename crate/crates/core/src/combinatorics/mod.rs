//! Partitions, affine weights of level k and the bijection between them.
//!
//! A level-k weight `m = (m_1, …, m_n)` corresponds to the partition
//! `λ_i = m_i + … + m_{n−1}` inside the `(n−1) × k` box; the affine label
//! `m_n = k − λ_1` is the unused width.

mod context;
mod partition;
mod weight;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use context::{enumerate_level, FusionContext};
pub use partition::{p, partitions_in_box, partitions_of, Partition};
pub use weight::AffineWeight;

pub fn weight_to_partition(w: &AffineWeight, ctx: &FusionContext) -> crate::Result<Partition> {
    ctx.weight_to_partition(w)
}

pub fn partition_to_weight(lambda: &Partition, ctx: &FusionContext) -> crate::Result<AffineWeight> {
    ctx.partition_to_weight(lambda)
}

pub fn transpose(lambda: &Partition) -> Partition {
    lambda.transpose()
}

pub fn dual_weight(lambda: &Partition, ctx: &FusionContext) -> crate::Result<Partition> {
    ctx.dual_weight(lambda)
}

/// `Π_{s∈λ} (n − 1 + c(s)) / h(s)`, the number of semistandard tableaux of
/// shape `λ` with entries in `{1, …, n−1}`.
pub fn hook_content_product(lambda: &Partition, n: usize) -> BigRational {
    let shift = n as i64 - 1;
    lambda
        .boxes()
        .fold(BigRational::from_integer(BigInt::from(1)), |acc, (i, j)| {
            let content = j as i64 - i as i64;
            let hook = lambda.hook(i, j) as i64;
            acc * BigRational::new(BigInt::from(shift + content), BigInt::from(hook))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force count of semistandard tableaux of shape `lambda` with entries `1..=letters`.
    fn count_ssyt(lambda: &Partition, letters: usize) -> usize {
        let cells: Vec<(usize, usize)> = lambda.boxes().collect();
        let mut fill = vec![vec![0usize; lambda.first() + 1]; lambda.len() + 1];
        fn rec(
            idx: usize,
            cells: &[(usize, usize)],
            fill: &mut Vec<Vec<usize>>,
            letters: usize,
        ) -> usize {
            if idx == cells.len() {
                return 1;
            }
            let (i, j) = cells[idx];
            let lo_row = if j > 1 { fill[i][j - 1] } else { 1 };
            let lo_col = if i > 1 { fill[i - 1][j] + 1 } else { 1 };
            let lo = lo_row.max(lo_col).max(1);
            let mut total = 0;
            for v in lo..=letters {
                fill[i][j] = v;
                total += rec(idx + 1, cells, fill, letters);
            }
            fill[i][j] = 0;
            total
        }
        rec(0, &cells, &mut fill, letters)
    }

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn hook_content_examples() {
        assert_eq!(hook_content_product(&Partition::empty(), 5), int(1));
        assert_eq!(hook_content_product(&p(&[1]), 3), int(2));
        assert_eq!(hook_content_product(&p(&[2, 1]), 4), int(8));
        assert_eq!(count_ssyt(&p(&[2, 1]), 3), 8);
    }

    #[test]
    fn hook_content_matches_tableau_count() {
        for n in 2..=4 {
            for k in 0..=4 {
                for lambda in partitions_in_box(n - 1, k) {
                    let hc = hook_content_product(&lambda, n);
                    assert!(hc.is_integer(), "{lambda} n={n}");
                    assert_eq!(hc, int(count_ssyt(&lambda, n - 1) as i64), "{lambda} n={n}");
                }
            }
        }
    }

    #[test]
    fn round_trip_and_dual_involution() {
        for n in 2..=5 {
            for k in 0..=5 {
                let ctx = FusionContext::new(n, k).unwrap();
                assert_eq!(ctx.dim(), binom(n + k - 1, k));
                for w in ctx.basis() {
                    let lambda = weight_to_partition(w, &ctx).unwrap();
                    assert!(lambda.fits_box(n - 1, k));
                    assert_eq!(&partition_to_weight(&lambda, &ctx).unwrap(), w);
                    let dual = dual_weight(&lambda, &ctx).unwrap();
                    assert_eq!(dual_weight(&dual, &ctx).unwrap(), lambda);
                    // conjugate representation: finite Dynkin labels reversed
                    let mut m = w.labels().to_vec();
                    m[..n - 1].reverse();
                    assert_eq!(
                        ctx.weight_to_partition(&AffineWeight::new(m)).unwrap(),
                        dual
                    );
                }
            }
        }
    }

    fn binom(a: usize, b: usize) -> usize {
        (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
    }
}
