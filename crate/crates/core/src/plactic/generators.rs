//! Phase-algebra generators and the affine plactic polynomials built from them.
//!
//! Operators are assembled by applying monomials letter by letter to basis
//! weights, so intermediate level changes (through `φ_n` and `φ_1*`) never
//! need a materialized matrix.

use std::str::FromStr;

use crate::combinatorics::{AffineWeight, FusionContext};
use crate::error::{FusionError, Result};
use crate::plactic::{Operator, ZGraded};
use crate::scalar::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    /// `φ_i`: removes a particle from node `i`, lowers the level.
    Phi,
    /// `φ_i*`: adds a particle at node `i`, raises the level.
    PhiStar,
    /// `N_i`: occupation number of node `i`.
    Number,
    /// `a_i = φ*_{i+1} φ_i` for `i < n`, `a_n = z φ_1* φ_n`.
    A,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKind {
    Elementary,
    Complete,
}

impl FromStr for PolyKind {
    type Err = FusionError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" | "elementary" => Ok(Self::Elementary),
            "h" | "complete" => Ok(Self::Complete),
            _ => Err(FusionError::Parse(format!("unknown polynomial kind {s:?}"))),
        }
    }
}

/// One letter of a monomial; indices are 1-based.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Letter {
    PhiStar(usize),
    Phi(usize),
    /// `φ*_{i+1} φ_i`, or `φ_1* φ_n` for `i = n` (the `z` is tracked by the caller).
    Hop(usize),
}

/// Applies `letter` in place; `false` when the state is annihilated.
pub(crate) fn act(m: &mut [usize], letter: Letter) -> bool {
    let n = m.len();
    match letter {
        Letter::PhiStar(i) => {
            m[i - 1] += 1;
            true
        }
        Letter::Phi(i) => {
            if m[i - 1] == 0 {
                return false;
            }
            m[i - 1] -= 1;
            true
        }
        Letter::Hop(i) => {
            if m[i - 1] == 0 {
                return false;
            }
            m[i - 1] -= 1;
            m[i % n] += 1;
            true
        }
    }
}

/// Applies the letters in slice order (first letter acts first).
pub(crate) fn act_word(m: &mut [usize], word: &[(Letter, usize)]) -> bool {
    word.iter()
        .all(|&(letter, power)| (0..power).all(|_| act(m, letter)))
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if (1..=n).contains(&i) {
        Ok(())
    } else {
        Err(FusionError::IndexOutOfRange { index: i, n })
    }
}

/// Matrix of a single generator on level `k`.
pub fn generator<T: Ring>(
    kind: GeneratorKind,
    i: usize,
    ctx: &FusionContext,
) -> Result<Operator<T>> {
    let n = ctx.n();
    check_index(i, n)?;
    let single = |m: &AffineWeight, letter: Letter, z: u32| {
        let mut labels = m.labels().to_vec();
        if act(&mut labels, letter) {
            vec![(AffineWeight::new(labels), ZGraded::monomial(z, T::one()))]
        } else {
            vec![]
        }
    };
    Ok(match kind {
        GeneratorKind::PhiStar => {
            Operator::from_weight_map(ctx, &ctx.with_level(ctx.k() + 1), |m| {
                single(m, Letter::PhiStar(i), 0)
            })
        }
        GeneratorKind::Phi => {
            if ctx.k() == 0 {
                return Err(FusionError::InvalidArgument(
                    "φ_i maps level 0 to nothing".into(),
                ));
            }
            Operator::from_weight_map(ctx, &ctx.with_level(ctx.k() - 1), |m| {
                single(m, Letter::Phi(i), 0)
            })
        }
        GeneratorKind::Number => Operator::from_weight_map(ctx, ctx, |m| {
            vec![(
                m.clone(),
                ZGraded::monomial(0, T::from_int(m.label(i) as i64)),
            )]
        }),
        GeneratorKind::A => {
            let z = u32::from(i == n);
            Operator::from_weight_map(ctx, ctx, |m| single(m, Letter::Hop(i), z))
        }
    })
}

/// All `(ε_1, …, ε_parts)` with entries in `0..=cap` summing to `total`.
pub(crate) fn compositions(total: usize, parts: usize, cap: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, parts: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == parts {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let remaining_slots = parts - cur.len() - 1;
        for v in 0..=rest.min(cap) {
            if rest - v > remaining_slots * cap {
                continue;
            }
            cur.push(v);
            rec(rest - v, parts, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, cap, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// Monomials of `e_r` or `h_r` as (word in application order, z-degree).
/// With `affine = false` only the z-free part (the finite plactic polynomial
/// in `a_1, …, a_{n−1}`) is produced.
fn monomials(kind: PolyKind, r: usize, n: usize, affine: bool) -> Vec<(Vec<(Letter, usize)>, u32)> {
    match kind {
        PolyKind::Complete => {
            // z^{ε_0} (φ_1*)^{ε_0} a_1^{ε_1} ⋯ a_{n−1}^{ε_{n−1}} φ_n^{ε_0}
            compositions(r, n, r)
                .into_iter()
                .filter(|eps| affine || eps[0] == 0)
                .map(|eps| {
                    let mut word = vec![(Letter::Phi(n), eps[0])];
                    word.extend((1..n).rev().map(|j| (Letter::Hop(j), eps[j])));
                    word.push((Letter::PhiStar(1), eps[0]));
                    (word, eps[0] as u32)
                })
                .collect()
        }
        PolyKind::Elementary => {
            // z^{ε_n} φ_n^{ε_n} a_{n−1}^{ε_{n−1}} ⋯ a_1^{ε_1} (φ_1*)^{ε_n}
            compositions(r, n, 1)
                .into_iter()
                .filter(|eps| affine || eps[n - 1] == 0)
                .map(|eps| {
                    let mut word = vec![(Letter::PhiStar(1), eps[n - 1])];
                    word.extend((1..n).map(|j| (Letter::Hop(j), eps[j - 1])));
                    word.push((Letter::Phi(n), eps[n - 1]));
                    (word, eps[n - 1] as u32)
                })
                .collect()
        }
    }
}

fn poly_operator<T: Ring>(
    kind: PolyKind,
    r: usize,
    ctx: &FusionContext,
    affine: bool,
) -> Operator<T> {
    let words = monomials(kind, r, ctx.n(), affine);
    Operator::from_weight_map(ctx, ctx, |m| {
        words
            .iter()
            .filter_map(|(word, z)| {
                let mut labels = m.labels().to_vec();
                act_word(&mut labels, word)
                    .then(|| (AffineWeight::new(labels), ZGraded::monomial(*z, T::one())))
            })
            .collect()
    })
}

/// Affine plactic `e_r(A)` or `h_r(A)` on level `k`.
pub fn nc_poly<T: Ring>(kind: PolyKind, r: usize, ctx: &FusionContext) -> Operator<T> {
    poly_operator(kind, r, ctx, true)
}

/// Finite plactic `e_r(A′)` or `h_r(A′)`, the z-free part.
pub fn nc_poly_finite<T: Ring>(kind: PolyKind, r: usize, ctx: &FusionContext) -> Operator<T> {
    poly_operator(kind, r, ctx, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(3, 3, 3).len(), 10);
        assert_eq!(compositions(2, 4, 1).len(), 6);
        assert_eq!(compositions(0, 2, 5), vec![vec![0, 0]]);
        assert!(compositions(5, 2, 1).is_empty());
    }

    #[test]
    fn hop_wraps_around() {
        let mut m = vec![0, 0, 2];
        assert!(act(&mut m, Letter::Hop(3)));
        assert_eq!(m, vec![1, 0, 1]);
        let mut m = vec![0, 1, 0];
        assert!(!act(&mut m, Letter::Hop(1)));
    }
}
