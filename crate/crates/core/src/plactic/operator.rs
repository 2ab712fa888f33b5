use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::combinatorics::{AffineWeight, FusionContext};
use crate::error::{FusionError, Result};
use crate::linalg::ComplexMatrix;
use crate::plactic::ZGraded;
use crate::scalar::{Real, Ring};
use crate::symfunc::bigint_to_json;

/// Sparse vector over a level-k weight basis, keyed by basis index.
pub type SparseVector<T> = BTreeMap<usize, ZGraded<T>>;

/// Linear map from the level-`source` weight space to the level-`target`
/// weight space (same rank) with z-graded entries, stored by columns.
#[derive(Clone, PartialEq)]
pub struct Operator<T> {
    source: FusionContext,
    target: FusionContext,
    columns: Vec<SparseVector<T>>,
}

impl<T: Ring> Operator<T> {
    pub fn zero(source: &FusionContext, target: &FusionContext) -> Self {
        assert_eq!(source.n(), target.n(), "rank mismatch");
        Self {
            source: source.clone(),
            target: target.clone(),
            columns: vec![SparseVector::new(); source.dim()],
        }
    }

    pub fn identity(ctx: &FusionContext) -> Self {
        let mut op = Self::zero(ctx, ctx);
        for j in 0..ctx.dim() {
            op.columns[j].insert(j, ZGraded::one());
        }
        op
    }

    /// Builds the operator from its action on basis weights.
    pub fn from_weight_map(
        source: &FusionContext,
        target: &FusionContext,
        mut f: impl FnMut(&AffineWeight) -> Vec<(AffineWeight, ZGraded<T>)>,
    ) -> Self {
        let mut op = Self::zero(source, target);
        for (j, w) in source.basis().iter().enumerate() {
            for (image, c) in f(w) {
                let i = target
                    .index_of(&image)
                    .expect("image lies in the target level");
                op.add_entry(i, j, &c);
            }
        }
        op
    }

    pub fn source(&self) -> &FusionContext {
        &self.source
    }

    pub fn target(&self) -> &FusionContext {
        &self.target
    }

    pub fn n(&self) -> usize {
        self.source.n()
    }

    pub fn add_entry(&mut self, row: usize, col: usize, c: &ZGraded<T>) {
        if c.is_zero() {
            return;
        }
        let column = &mut self.columns[col];
        let slot = column.entry(row).or_default();
        *slot += c;
        if slot.is_zero() {
            column.remove(&row);
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> ZGraded<T> {
        self.columns[col].get(&row).cloned().unwrap_or_default()
    }

    pub fn column(&self, col: usize) -> &SparseVector<T> {
        &self.columns[col]
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    pub fn nonzero_entries(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    /// `(row, col, entry)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &ZGraded<T>)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, c)| (*i, j, c)))
    }

    pub fn apply(&self, v: &SparseVector<T>) -> SparseVector<T> {
        let mut out = SparseVector::new();
        for (j, x) in v {
            for (i, a) in &self.columns[*j] {
                let slot = out.entry(*i).or_default();
                *slot += &(a * x);
                if slot.is_zero() {
                    out.remove(i);
                }
            }
        }
        out
    }

    /// `self ∘ rhs`: apply `rhs` first.
    pub fn compose(&self, rhs: &Operator<T>) -> Result<Operator<T>> {
        if rhs.target.k() != self.source.k() || rhs.n() != self.n() {
            return Err(FusionError::LevelMismatch {
                left: self.source.k(),
                right: rhs.target.k(),
            });
        }
        Ok(Operator {
            source: rhs.source.clone(),
            target: self.target.clone(),
            columns: rhs.columns.iter().map(|col| self.apply(col)).collect(),
        })
    }

    fn check_same_shape(&self, rhs: &Operator<T>) -> Result<()> {
        if self.source.k() != rhs.source.k()
            || self.target.k() != rhs.target.k()
            || self.n() != rhs.n()
        {
            return Err(FusionError::LevelMismatch {
                left: self.source.k(),
                right: rhs.source.k(),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Operator<T>) -> Result<Operator<T>> {
        self.check_same_shape(rhs)?;
        let mut out = self.clone();
        for (i, j, c) in rhs.entries() {
            out.add_entry(i, j, c);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Operator<T>) -> Result<Operator<T>> {
        self.add(&rhs.scale(&-T::one()))
    }

    /// `[self, rhs] = self∘rhs − rhs∘self`.
    pub fn commutator(&self, rhs: &Operator<T>) -> Result<Operator<T>> {
        self.compose(rhs)?.sub(&rhs.compose(self)?)
    }

    pub fn scale(&self, c: &T) -> Operator<T> {
        self.map_entries(|e| e.scale(c))
    }

    /// Multiplication by `z^d`.
    pub fn shift_z(&self, d: u32) -> Operator<T> {
        self.map_entries(|e| e.shift(d))
    }

    /// The coefficient of `z^d`, as an operator with constant entries.
    pub fn z_part(&self, d: u32) -> Operator<T> {
        self.map_entries(|e| e.part(d))
    }

    /// Entries evaluated at `z = 1`, kept as constants.
    pub fn at_z_one(&self) -> Operator<T> {
        self.map_entries(|e| ZGraded::monomial(0, e.at_one()))
    }

    fn map_entries(&self, f: impl Fn(&ZGraded<T>) -> ZGraded<T>) -> Operator<T> {
        let mut out = Operator::zero(&self.source, &self.target);
        for (i, j, c) in self.entries() {
            out.add_entry(i, j, &f(c));
        }
        out
    }

    /// Dense matrix at `z = 1`.
    pub fn to_complex<R: Real>(&self) -> ComplexMatrix<R>
    where
        T: ToPrimitive,
    {
        let mut m = ComplexMatrix::zeros(self.target.dim(), self.source.dim());
        for (i, j, c) in self.entries() {
            let v = c.at_one().to_f64().expect("entry fits a double");
            m.set(i, j, Complex::new(R::lit(v), R::zero()));
        }
        m
    }
}

impl Operator<num_bigint::BigInt> {
    /// Largest absolute integer coefficient over all entries and z-degrees.
    pub fn max_abs_coeff(&self) -> num_bigint::BigInt {
        use num_traits::Signed;
        self.entries()
            .flat_map(|(_, _, c)| c.iter().map(|(_, v)| v.abs()).collect::<Vec<_>>())
            .max()
            .unwrap_or_default()
    }

    /// Sparse triples `{"row": weight, "col": weight, "entry": {degree: coeff}}`.
    pub fn to_json_value(&self) -> Value {
        let triples: Vec<Value> = self
            .entries()
            .map(|(i, j, c)| {
                let entry: serde_json::Map<String, Value> = c
                    .iter()
                    .map(|(d, v)| (d.to_string(), bigint_to_json(v)))
                    .collect();
                json!({
                    "row": self.target.basis()[i].to_string(),
                    "col": self.source.basis()[j].to_string(),
                    "entry": entry,
                })
            })
            .collect();
        json!({
            "n": self.n(),
            "source_level": self.source.k(),
            "target_level": self.target.k(),
            "entries": triples,
        })
    }
}

impl<T: Ring> fmt::Debug for Operator<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Operator(n={}, level {} -> {})",
            self.n(),
            self.source.k(),
            self.target.k()
        )?;
        for (i, j, c) in self.entries() {
            writeln!(
                f,
                "  {} <- {}: {:?}",
                self.target.basis()[i],
                self.source.basis()[j],
                c
            )?;
        }
        Ok(())
    }
}
