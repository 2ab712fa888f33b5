//! Littlewood-Richardson coefficients by enumeration of LR skew tableaux.
//!
//! Labels `1, 2, …` are added to the outer shape one value at a time; each
//! value forms a horizontal strip, and the reverse reading word must stay a
//! lattice word. For value `i` placed in row `r` that means the number of
//! `i`'s in rows `1..=r` may not exceed the number of `i−1`'s in rows `1..r`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::combinatorics::Partition;
use crate::symfunc::SchurExpansion;

struct LrState<'a> {
    content: &'a [usize],
    shape: Vec<usize>,
    /// `counts[r][v]`: number of entries equal to `v + 1` in row `r` (0-based).
    counts: Vec<Vec<usize>>,
    found: HashMap<Vec<usize>, u64>,
}

impl LrState<'_> {
    fn place_value(&mut self, value: usize) {
        if value == self.content.len() {
            *self.found.entry(self.shape.clone()).or_insert(0) += 1;
            return;
        }
        let before = self.shape.clone();
        self.place_rows(value, 0, self.content[value], &before, 0, 0);
    }

    /// Distributes `remaining` copies of `value + 1` over rows `row..`.
    /// `placed_above` counts copies already put in rows `< row`, `prev_above`
    /// the copies of `value` in rows `< row`.
    fn place_rows(
        &mut self,
        value: usize,
        row: usize,
        remaining: usize,
        before: &[usize],
        placed_above: usize,
        prev_above: usize,
    ) {
        if remaining == 0 {
            self.place_value(value + 1);
            return;
        }
        if row > before.len() {
            return;
        }
        let cap_strip = if row == 0 {
            remaining
        } else {
            before[row - 1] - before.get(row).copied().unwrap_or(0)
        };
        let cap_lattice = if value == 0 {
            remaining
        } else {
            prev_above.saturating_sub(placed_above)
        };
        let prev_here = if value == 0 {
            0
        } else {
            self.counts.get(row).map_or(0, |c| c[value - 1])
        };
        let max = remaining.min(cap_strip).min(cap_lattice);
        for a in (0..=max).rev() {
            if a > 0 {
                if row == self.shape.len() {
                    self.shape.push(0);
                    self.counts.push(vec![0; self.content.len()]);
                }
                self.shape[row] += a;
                self.counts[row][value] += a;
            }
            self.place_rows(
                value,
                row + 1,
                remaining - a,
                before,
                placed_above + a,
                prev_above + prev_here,
            );
            if a > 0 {
                self.shape[row] -= a;
                self.counts[row][value] -= a;
                if self.shape[row] == 0 {
                    self.shape.pop();
                    self.counts.pop();
                }
            }
        }
    }
}

/// `s_λ · s_μ = Σ_ν c_{λμ}^ν s_ν`.
pub fn lr_expand(lambda: &Partition, mu: &Partition) -> SchurExpansion {
    // enumerate with the shorter content; c is symmetric in λ and μ
    let (outer, inner) = if mu.weight() <= lambda.weight() {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let mut state = LrState {
        content: inner.parts(),
        shape: outer.parts().to_vec(),
        counts: vec![vec![0; inner.len()]; outer.len()],
        found: HashMap::new(),
    };
    state.place_value(0);
    state
        .found
        .into_iter()
        .map(|(shape, c)| (Partition::from_decreasing(shape), BigInt::from(c)))
        .collect()
}

/// Single coefficient `c_{λμ}^ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if nu.weight() != lambda.weight() + mu.weight() || !nu.contains(lambda) || !nu.contains(mu) {
        return BigInt::from(0);
    }
    lr_expand(lambda, mu).coeff(nu)
}
