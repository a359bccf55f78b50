use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Int, Nat};
use crate::error::{Error, Result};

/// A square matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<Int>,
}

impl IntMatrix {
    pub fn zero(dim: usize) -> Self {
        IntMatrix { dim, entries: vec![Int::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Precondition("matrix must be square and non-empty".into()));
        }
        Ok(IntMatrix { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect())
    }

    /// Companion matrix of a monic polynomial given highest degree first,
    /// e.g. `[1, 0, -1, -1]` for `x^3 - x - 1`.
    pub fn companion(coeffs: &[Int]) -> Result<Self> {
        if coeffs.len() < 2 || !coeffs[0].is_one() {
            return Err(Error::Precondition(
                "companion matrix needs a monic polynomial of degree >= 1".into(),
            ));
        }
        let dim = coeffs.len() - 1;
        let mut m = Self::zero(dim);
        for i in 1..dim {
            m.entries[i * dim + (i - 1)] = Int::one();
        }
        // last column carries -c_0, ..., -c_{d-1}
        for i in 0..dim {
            m.entries[i * dim + (dim - 1)] = -coeffs[dim - i].clone();
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[Int] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Int>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn scale(&self, k: &Int) -> Self {
        IntMatrix { dim: self.dim, entries: self.entries.iter().map(|x| x * k).collect() }
    }

    /// Exact division of every entry, or `None` if some entry is not a multiple.
    pub fn div_exact(&self, k: &Int) -> Option<Self> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for x in &self.entries {
            let (q, r) = x.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            entries.push(q);
        }
        Some(IntMatrix { dim: self.dim, entries })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Entries reduced to `[0, m)`.
    pub fn reduce_mod(&self, m: &Nat) -> Self {
        let mi = Int::from(m.clone());
        IntMatrix { dim: self.dim, entries: self.entries.iter().map(|x| x.mod_floor(&mi)).collect() }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n.saturating_sub(1) {
            if a[k * n + k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return Int::zero();
                };
                for j in 0..n {
                    a.swap(k * n + j, swap * n + j);
                }
                sign = -sign;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &pivot * &a[i * n + j] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = v / &prev;
                }
                a[i * n + k] = Int::zero();
            }
            prev = pivot;
        }
        if n == 0 {
            return Int::one();
        }
        sign * a[n * n - 1].clone()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn has_negative_entries(&self) -> bool {
        self.entries.iter().any(|x| x.is_negative())
    }
}

impl<'a> Mul<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let aik = &self.entries[i * n + k];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += aik * &rhs.entries[k * n + j];
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        IntMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        IntMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.chunks(self.dim).enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}
