use std::fmt;

use crate::arith::Nat;
use crate::error::{Error, Result};

/// A finite prefix `(a_1, ..., a_N)` of a non-negative integer sequence.
///
/// Indexing is 1-based throughout: [`Sequence1::get`] takes `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence1 {
    label: String,
    values: Vec<Nat>,
}

impl Sequence1 {
    pub fn new(label: impl Into<String>, values: Vec<Nat>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Sequence1 { label: label.into(), values })
    }

    pub fn from_u64s(label: impl Into<String>, values: &[u64]) -> Result<Self> {
        Self::new(label, values.iter().map(|&v| Nat::from(v)).collect())
    }

    /// Build `(f(1), ..., f(len))`.
    pub fn from_fn(label: impl Into<String>, len: usize, f: impl FnMut(usize) -> Nat) -> Result<Self> {
        Self::new(label, (1..=len).map(f).collect())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The term `a_n`, `1 <= n <= len`.
    pub fn get(&self, n: usize) -> &Nat {
        &self.values[n - 1]
    }

    pub fn values(&self) -> &[Nat] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Nat> {
        self.values
    }

    /// `(n, a_n)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Nat)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }

    /// The first `n` terms.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySequence);
        }
        if n > self.len() {
            return Err(Error::InsufficientDepth { needed: n, available: self.len() });
        }
        Ok(Sequence1 { label: self.label.clone(), values: self.values[..n].to_vec() })
    }
}

impl fmt::Display for Sequence1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
