//! Small prime-power fields `GF(p^m)` as polynomials over `Z/p`.
//!
//! Elements and monic moduli are ordered by the integer `sum c_i p^i` of
//! their coefficient vectors, so "smallest" is always well defined.

use num_traits::Zero;

use crate::algebraic::matrix::IntMatrix;
use crate::arith::{self, Int};
use crate::error::{Error, Result};

/// Coefficients `c_0, ..., c_{len-1}` (lowest degree first), each in `[0, p)`.
pub type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Poly {
    let mut r = trim(a.to_vec());
    let f = trim(f.to_vec());
    let df = f.len() - 1;
    let lead_inv = inv(f[df], p);
    while r.len() > df {
        let shift = r.len() - 1 - df;
        let c = mulmod(*r.last().unwrap(), lead_inv, p);
        for (i, &fi) in f.iter().enumerate() {
            let j = i + shift;
            r[j] = (r[j] + p - mulmod(c, fi, p)) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    poly_rem(&out, f, p)
}

fn poly_pow_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Poly {
    let mut acc = poly_rem(&[1], f, p);
    let mut b = poly_rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &b, f, p);
        }
        b = poly_mul_mod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// `x^(p^e) mod f` by repeated `p`-th powering.
fn frobenius_x(e: u32, f: &[u64], p: u64) -> Poly {
    let mut x = poly_rem(&[0, 1], f, p);
    for _ in 0..e {
        x = poly_pow_mod(&x, p, f, p);
    }
    x
}

/// Rabin's test for a monic polynomial of degree `m >= 1`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = (f.len() - 1) as u32;
    if m == 1 {
        return true;
    }
    let x = vec![0, 1];
    if poly_sub(&frobenius_x(m, f, p), &x, p) != Vec::<u64>::new() {
        return false;
    }
    arith::factorize(m as u64).into_iter().all(|(r, _)| {
        let h = poly_sub(&frobenius_x(m / r as u32, f, p), &x, p);
        poly_gcd(f, &h, p).len() == 1
    })
}

fn digits(mut code: u64, p: u64, len: usize) -> Poly {
    (0..len)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

/// `GF(p^m)` presented as `Z/p[x] / (f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    m: u32,
    modulus: Poly,
}

impl PrimeField {
    /// The field built on the smallest monic irreducible of degree `m`.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroArgument { op: "field degree" });
        }
        let q = p.checked_pow(m).ok_or_else(|| Error::Unsupported(format!("{p}^{m} overflows")))?;
        let modulus = (0..q)
            .map(|code| {
                let mut f = digits(code, p, m as usize);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .expect("irreducible polynomials exist in every degree");
        Ok(PrimeField { p, m, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.m)
    }

    /// Monic modulus, lowest degree first (length `m + 1`).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The element with coefficient code `code < p^m`.
    pub fn element(&self, code: u64) -> Poly {
        digits(code, self.p, self.m as usize)
    }

    pub fn code(&self, e: &[u64]) -> u64 {
        e.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn pad(&self, mut e: Poly) -> Poly {
        e.resize(self.m as usize, 0);
        e
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Poly {
        self.pad(poly_mul_mod(a, b, &self.modulus, self.p))
    }

    pub fn pow(&self, a: &[u64], e: u64) -> Poly {
        self.pad(poly_pow_mod(a, e, &self.modulus, self.p))
    }

    pub fn is_one(&self, a: &[u64]) -> bool {
        a.first() == Some(&1) && a[1..].iter().all(|&c| c == 0)
    }

    /// Multiplicative order of a non-zero element, via the factorization of
    /// `q - 1`.
    pub fn order(&self, a: &[u64]) -> u64 {
        let mut ord = self.size() - 1;
        for (r, _) in arith::factorize(ord) {
            while ord % r == 0 && self.is_one(&self.pow(a, ord / r)) {
                ord /= r;
            }
        }
        ord
    }

    /// The smallest element of order `q - 1`.
    pub fn generator(&self) -> Poly {
        let q = self.size();
        (1..q)
            .map(|code| self.element(code))
            .find(|e| self.order(e) == q - 1)
            .expect("the multiplicative group is cyclic")
    }

    /// Matrix of `x -> g x` on the basis `1, X, ..., X^(m-1)`.
    pub fn multiplication_matrix(&self, g: &[u64]) -> IntMatrix {
        let m = self.m as usize;
        let mut rows = vec![vec![Int::zero(); m]; m];
        let mut basis = self.element(1);
        for j in 0..m {
            let col = self.mul(g, &basis);
            for (i, c) in col.iter().enumerate() {
                rows[i][j] = Int::from(*c);
            }
            basis = self.mul(&basis, &[0, 1]);
        }
        IntMatrix::from_rows(rows).expect("square")
    }
}

/// The smallest monic irreducible of degree `m` over `Z/p` and the smallest
/// generator of the multiplicative group of the resulting field.
pub fn field_generator(p: u64, m: u32) -> Result<(Poly, Poly)> {
    let f = PrimeField::new(p, m)?;
    let g = f.generator();
    Ok((f.modulus().to_vec(), g))
}
