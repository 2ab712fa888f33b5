use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::combinatorics::{AffineWeight, Partition};
use crate::error::{FusionError, Result};

/// The pair `(n, k)` together with the ordered level-k weight basis.
///
/// Cloning is cheap: the basis is shared.
#[derive(Clone)]
pub struct FusionContext {
    inner: Arc<Inner>,
}

struct Inner {
    n: usize,
    k: usize,
    basis: Vec<AffineWeight>,
    partitions: Vec<Partition>,
    index: HashMap<AffineWeight, usize>,
    partition_index: HashMap<Partition, usize>,
}

/// All compositions of `k` into `n` nonnegative parts, in colexicographic order.
pub fn enumerate_level(n: usize, k: usize) -> Vec<AffineWeight> {
    fn rec(n: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<AffineWeight>) {
        if cur.len() + 1 == n {
            cur.push(rest);
            out.push(AffineWeight::new(cur.clone()));
            cur.pop();
            return;
        }
        for v in 0..=rest {
            cur.push(v);
            rec(n, rest - v, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::with_capacity(n), &mut out);
    out.sort_by_key(|w| w.colex_key());
    out
}

impl FusionContext {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 2 {
            return Err(FusionError::InvalidRank(n));
        }
        let basis = enumerate_level(n, k);
        let partitions: Vec<Partition> = basis
            .iter()
            .map(|w| labels_to_partition(w.labels()))
            .collect();
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        let partition_index = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        Ok(Self {
            inner: Arc::new(Inner {
                n,
                k,
                basis,
                partitions,
                index,
                partition_index,
            }),
        })
    }

    /// Same rank, different level.
    pub fn with_level(&self, k: usize) -> Self {
        if k == self.k() {
            return self.clone();
        }
        Self::new(self.n(), k).expect("rank already validated")
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn k(&self) -> usize {
        self.inner.k
    }

    pub fn basis(&self) -> &[AffineWeight] {
        &self.inner.basis
    }

    /// Partitions of the basis weights, in basis order.
    pub fn partitions(&self) -> &[Partition] {
        &self.inner.partitions
    }

    pub fn dim(&self) -> usize {
        self.inner.basis.len()
    }

    pub fn index_of(&self, w: &AffineWeight) -> Option<usize> {
        self.inner.index.get(w).copied()
    }

    pub fn index_of_partition(&self, lambda: &Partition) -> Result<usize> {
        self.inner
            .partition_index
            .get(lambda)
            .copied()
            .ok_or_else(|| self.box_error(lambda))
    }

    /// Basis index of the vacuum `∅̂ = (0,…,0,k)`.
    pub fn vacuum_index(&self) -> usize {
        self.dim() - 1
    }

    pub fn contains_partition(&self, lambda: &Partition) -> bool {
        lambda.fits_box(self.n() - 1, self.k())
    }

    pub fn check_partition(&self, lambda: &Partition) -> Result<()> {
        if self.contains_partition(lambda) {
            Ok(())
        } else {
            Err(self.box_error(lambda))
        }
    }

    pub fn check_weight(&self, w: &AffineWeight) -> Result<()> {
        if w.rank() == self.n() && w.level() == self.k() {
            Ok(())
        } else {
            Err(FusionError::InvalidWeight {
                weight: w.to_string(),
                n: self.n(),
                level: self.k(),
            })
        }
    }

    fn box_error(&self, lambda: &Partition) -> FusionError {
        FusionError::PartitionOutsideBox {
            partition: lambda.to_string(),
            rows: self.n() - 1,
            cols: self.k(),
        }
    }

    /// `λ_i = Σ_{j=i}^{n−1} m_j`.
    pub fn weight_to_partition(&self, w: &AffineWeight) -> Result<Partition> {
        self.check_weight(w)?;
        Ok(labels_to_partition(w.labels()))
    }

    /// `m_i = λ_i − λ_{i+1}` for `i < n` and `m_n = k − λ_1`.
    pub fn partition_to_weight(&self, lambda: &Partition) -> Result<AffineWeight> {
        self.check_partition(lambda)?;
        let n = self.n();
        let parts = lambda.padded(n - 1);
        let mut m: Vec<usize> = (0..n - 1)
            .map(|i| parts[i] - parts.get(i + 1).copied().unwrap_or(0))
            .collect();
        m.push(self.k() - lambda.first());
        Ok(AffineWeight::new(m))
    }

    /// `λ* = (λ_1, λ_1 − λ_{n−1}, …, λ_1 − λ_2)`.
    pub fn dual_weight(&self, lambda: &Partition) -> Result<Partition> {
        self.check_partition(lambda)?;
        let n = self.n();
        let l1 = lambda.first();
        let mut parts = vec![l1];
        parts.extend((2..n).rev().map(|i| l1 - lambda.part(i)));
        Ok(Partition::from_decreasing(parts))
    }
}

fn labels_to_partition(m: &[usize]) -> Partition {
    let n = m.len();
    let mut parts = vec![0; n - 1];
    let mut acc = 0;
    for i in (0..n - 1).rev() {
        acc += m[i];
        parts[i] = acc;
    }
    Partition::from_decreasing(parts)
}

impl fmt::Debug for FusionContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FusionContext(n={}, k={}, dim={})",
            self.n(),
            self.k(),
            self.dim()
        )
    }
}

impl PartialEq for FusionContext {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n() && self.k() == other.k()
    }
}

impl Eq for FusionContext {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::p;

    fn w(m: &[usize]) -> AffineWeight {
        AffineWeight::new(m.to_vec())
    }

    #[test]
    fn weight_to_partition_examples() {
        // affine label last: ω̂0 + 2ω̂1 + ω̂2 is stored as [2,1,1]
        let ctx = FusionContext::new(3, 4).unwrap();
        assert_eq!(ctx.weight_to_partition(&w(&[2, 1, 1])).unwrap(), p(&[3, 1]));
        assert_eq!(ctx.weight_to_partition(&w(&[1, 2, 1])).unwrap(), p(&[3, 2]));
        assert_eq!(
            ctx.weight_to_partition(&w(&[0, 0, 4])).unwrap(),
            Partition::empty()
        );
        assert!(ctx.weight_to_partition(&w(&[1, 1, 1])).is_err());
    }

    #[test]
    fn partition_to_weight_examples() {
        let ctx = FusionContext::new(5, 3).unwrap();
        assert_eq!(
            ctx.partition_to_weight(&p(&[2, 2, 1])).unwrap(),
            w(&[0, 1, 1, 0, 1])
        );
        assert_eq!(
            ctx.partition_to_weight(&Partition::empty()).unwrap(),
            w(&[0, 0, 0, 0, 3])
        );
        let ctx = FusionContext::new(3, 4).unwrap();
        assert_eq!(ctx.partition_to_weight(&p(&[3, 1])).unwrap(), w(&[2, 1, 1]));
        assert!(matches!(
            ctx.partition_to_weight(&p(&[5])),
            Err(FusionError::PartitionOutsideBox { .. })
        ));
        assert!(ctx.partition_to_weight(&p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn dual_examples() {
        let ctx = FusionContext::new(3, 4).unwrap();
        assert_eq!(ctx.dual_weight(&p(&[3, 1])).unwrap(), p(&[3, 2]));
        assert_eq!(
            ctx.dual_weight(&Partition::empty()).unwrap(),
            Partition::empty()
        );
        assert_eq!(ctx.dual_weight(&p(&[4])).unwrap(), p(&[4, 4]));
        assert_eq!(ctx.dual_weight(&p(&[4, 4])).unwrap(), p(&[4]));
    }

    #[test]
    fn enumeration_sizes_and_order() {
        assert_eq!(enumerate_level(2, 1).len(), 2);
        assert_eq!(enumerate_level(3, 4).len(), 15);
        assert_eq!(enumerate_level(5, 3).len(), 35);
        let b = enumerate_level(3, 1);
        assert_eq!(b, vec![w(&[1, 0, 0]), w(&[0, 1, 0]), w(&[0, 0, 1])]);
        let ctx = FusionContext::new(4, 2).unwrap();
        assert_eq!(ctx.partitions()[ctx.vacuum_index()], Partition::empty());
    }

    #[test]
    fn rank_guard() {
        assert_eq!(
            FusionContext::new(1, 3).unwrap_err(),
            FusionError::InvalidRank(1)
        );
    }
}
