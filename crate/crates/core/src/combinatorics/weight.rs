use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{FusionError, Result};

/// Dynkin labels `(m_1, …, m_n)` of an affine su(n) weight; the affine node
/// is stored last.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AffineWeight {
    dynkin: Vec<usize>,
}

impl AffineWeight {
    pub fn new(dynkin: Vec<usize>) -> Self {
        Self { dynkin }
    }

    pub fn labels(&self) -> &[usize] {
        &self.dynkin
    }

    pub fn labels_mut(&mut self) -> &mut [usize] {
        &mut self.dynkin
    }

    pub fn rank(&self) -> usize {
        self.dynkin.len()
    }

    pub fn level(&self) -> usize {
        self.dynkin.iter().sum()
    }

    /// Label `m_i`, 1-based.
    pub fn label(&self, i: usize) -> usize {
        self.dynkin[i - 1]
    }

    /// Colexicographic comparison key.
    pub(crate) fn colex_key(&self) -> Vec<usize> {
        self.dynkin.iter().rev().copied().collect()
    }
}

/// `"[1,2,1]"`
impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.dynkin.iter().map(|m| m.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl fmt::Debug for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for AffineWeight {
    type Err = FusionError;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| FusionError::Parse(format!("affine weight {s:?} must be bracketed")))?;
        let dynkin = inner
            .split(',')
            .map(|m| {
                m.trim()
                    .parse::<usize>()
                    .map_err(|e| FusionError::Parse(format!("bad Dynkin label {m:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(dynkin))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let w: AffineWeight = "[1, 2,1]".parse().unwrap();
        assert_eq!(w.labels(), &[1, 2, 1]);
        assert_eq!(w.to_string(), "[1,2,1]");
        assert_eq!(w.level(), 4);
        assert!("1,2,1".parse::<AffineWeight>().is_err());
        assert!("[1,-2]".parse::<AffineWeight>().is_err());
    }
}
