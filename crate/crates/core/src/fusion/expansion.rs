use std::fmt;

use num_bigint::{BigInt, Sign};
use serde_json::{json, Value};

use crate::combinatorics::{FusionContext, Partition};
use crate::error::{FusionError, Result};
use crate::symfunc::SchurExpansion;

/// `λ̂ ∗ μ̂ = Σ_ν N_{λμ}^{(k)ν} ν̂`: nonnegative integer coefficients on
/// partitions in the `(n−1) × k` box.
#[derive(Clone, PartialEq)]
pub struct FusionExpansion {
    n: usize,
    k: usize,
    terms: SchurExpansion,
}

impl FusionExpansion {
    pub fn zero(ctx: &FusionContext) -> Self {
        Self {
            n: ctx.n(),
            k: ctx.k(),
            terms: SchurExpansion::new(),
        }
    }

    /// Validates support and signs.
    pub fn from_terms(ctx: &FusionContext, terms: SchurExpansion) -> Result<Self> {
        for (shape, c) in terms.iter() {
            ctx.check_partition(shape)?;
            if c.sign() == Sign::Minus {
                return Err(FusionError::Invariant(format!(
                    "negative fusion coefficient {c} at {shape} (n={}, k={})",
                    ctx.n(),
                    ctx.k()
                )));
            }
        }
        Ok(Self {
            n: ctx.n(),
            k: ctx.k(),
            terms,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coeff(&self, nu: &Partition) -> BigInt {
        self.terms.coeff(nu)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &SchurExpansion {
        &self.terms
    }

    pub fn into_terms(self) -> SchurExpansion {
        self.terms
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// `{"n":..,"k":..,"terms":[{"shape":[..],"coeff":int}]}`
    pub fn to_json_value(&self) -> Value {
        let mut v = self.terms.to_json_value();
        let obj = v.as_object_mut().expect("object");
        obj.insert("n".into(), json!(self.n));
        obj.insert("k".into(), json!(self.k));
        v
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let field = |name: &str| {
            v.get(name)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| FusionError::Parse(format!("missing integer field {name:?}")))
        };
        let ctx = FusionContext::new(field("n")?, field("k")?)?;
        Self::from_terms(&ctx, SchurExpansion::from_json_value(v)?)
    }
}

impl fmt::Display for FusionExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.terms)
    }
}

impl fmt::Debug for FusionExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FusionExpansion(n={}, k={}) {:?}",
            self.n, self.k, self.terms
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::p;

    #[test]
    fn json_round_trip_and_validation() {
        let ctx = FusionContext::new(3, 4).unwrap();
        let terms: SchurExpansion = [(p(&[4, 2]), BigInt::from(1)), (p(&[2, 1]), BigInt::from(2))]
            .into_iter()
            .collect();
        let e = FusionExpansion::from_terms(&ctx, terms).unwrap();
        let v = e.to_json_value();
        assert_eq!(v["n"], 3);
        assert_eq!(FusionExpansion::from_json_value(&v).unwrap(), e);
        assert_eq!(e.total(), BigInt::from(3));

        let bad: SchurExpansion = [(p(&[5]), BigInt::from(1))].into_iter().collect();
        assert!(FusionExpansion::from_terms(&ctx, bad).is_err());
        let neg: SchurExpansion = [(p(&[1]), BigInt::from(-1))].into_iter().collect();
        assert!(matches!(
            FusionExpansion::from_terms(&ctx, neg),
            Err(FusionError::Invariant(_))
        ));
    }
}
