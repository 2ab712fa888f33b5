use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::combinatorics::Partition;
use crate::error::{FusionError, Result};
use crate::scalar::Ring;

/// Finite linear combination of partitions with coefficients in `T`.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct Expansion<T> {
    terms: BTreeMap<Partition, T>,
}

impl<T: Ring> Default for Expansion<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Ring> Expansion<T> {
    pub fn new() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn single(shape: Partition, coeff: T) -> Self {
        let mut e = Self::new();
        e.add_term(shape, coeff);
        e
    }

    pub fn add_term(&mut self, shape: Partition, coeff: T) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&shape) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&shape);
                }
            }
            None => {
                self.terms.insert(shape, coeff);
            }
        }
    }

    pub fn coeff(&self, shape: &Partition) -> T {
        self.terms.get(shape).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, factor: &T) -> Self {
        let mut out = Self::new();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c.clone() * factor.clone());
        }
        out
    }

    /// Applies a linear map on basis elements.
    pub fn map_shapes(&self, mut f: impl FnMut(&Partition) -> Partition) -> Self {
        let mut out = Self::new();
        for (p, c) in &self.terms {
            out.add_term(f(p), c.clone());
        }
        out
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&Partition, &T) -> bool) {
        self.terms.retain(|p, c| keep(p, c));
    }
}

impl<T: Ring> AddAssign<&Expansion<T>> for Expansion<T> {
    fn add_assign(&mut self, rhs: &Expansion<T>) {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), c.clone());
        }
    }
}

impl<T: Ring> Add for Expansion<T> {
    type Output = Expansion<T>;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<T: Ring> FromIterator<(Partition, T)> for Expansion<T> {
    fn from_iter<I: IntoIterator<Item = (Partition, T)>>(iter: I) -> Self {
        let mut e = Self::new();
        for (p, c) in iter {
            e.add_term(p, c);
        }
        e
    }
}

/// `{4,2: 1, 3: 1, 0: 1}`
impl<T: Ring + fmt::Display> fmt::Display for Expansion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| format!("{p}: {c}"))
            .collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

impl<T: Ring> fmt::Debug for Expansion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    shape: Partition,
    coeff: Value,
}

#[derive(Serialize, Deserialize)]
struct JsonExpansion {
    terms: Vec<JsonTerm>,
}

pub(crate) fn bigint_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        // beyond i64 the coefficient travels as a decimal string
        None => Value::String(c.to_string()),
    }
}

pub(crate) fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| FusionError::Parse(format!("non-integer coefficient {n}"))),
        Value::String(s) => s
            .parse()
            .map_err(|e| FusionError::Parse(format!("bad coefficient {s:?}: {e}"))),
        other => Err(FusionError::Parse(format!("bad coefficient {other}"))),
    }
}

impl Expansion<BigInt> {
    /// `{"terms":[{"shape":[..],"coeff":int}]}` in partition order.
    pub fn to_json_value(&self) -> Value {
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| JsonTerm {
                shape: p.clone(),
                coeff: bigint_to_json(c),
            })
            .collect();
        serde_json::to_value(JsonExpansion { terms }).expect("plain data")
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let raw: JsonExpansion =
            serde_json::from_value(v.clone()).map_err(|e| FusionError::Parse(e.to_string()))?;
        let mut e = Self::new();
        for t in raw.terms {
            e.add_term(t.shape, bigint_from_json(&t.coeff)?);
        }
        Ok(e)
    }
}
