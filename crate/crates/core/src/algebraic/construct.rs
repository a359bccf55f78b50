//! Integer matrices whose action on the `p`-torsion of a torus realizes the
//! sequences `l^(k,m,p)`.

use num_integer::Integer;
use num_traits::Zero;

use crate::algebraic::field::PrimeField;
use crate::algebraic::matrix::IntMatrix;
use crate::arith::{self, Int, Nat};
use crate::error::{Error, Result};
use crate::sequence::Sequence1;

/// `q = p^m`, and optionally `k` with `c = (q - 1) / k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionParams {
    pub p: u64,
    pub m: u32,
    pub q: u64,
    pub k: u64,
    pub c: Option<u64>,
}

impl ConstructionParams {
    pub fn new(k: u64, m: u32, p: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroArgument { op: "m" });
        }
        if k == 0 {
            return Err(Error::ZeroArgument { op: "k" });
        }
        if k % p == 0 {
            return Err(Error::Precondition(format!("k = {k} must be coprime to p = {p}")));
        }
        let q = p.checked_pow(m).ok_or_else(|| Error::Unsupported(format!("{p}^{m} overflows")))?;
        let c = ((q - 1) % k == 0).then(|| (q - 1) / k);
        Ok(ConstructionParams { p, m, q, k, c })
    }
}

/// `l_n = p^(m(1 + ord_p n))` when `k | n`, otherwise 1.
pub fn ell_sequence(params: &ConstructionParams, n: usize) -> Sequence1 {
    let ConstructionParams { p, m, k, .. } = *params;
    let label = format!("l^({k},{m},{p})");
    Sequence1::from_fn(label, n.max(1), |i| {
        if i as u64 % k == 0 {
            arith::pow_u64(p, m * (1 + arith::ord_p(i as u64, p)))
        } else {
            Nat::from(1u32)
        }
    })
    .expect("non-empty")
}

/// Whether `l^(k,m,p)` is realized by a group endomorphism, for odd `p`.
pub fn ell_algebraically_realizable(k: u64, m: u32, p: u64) -> Result<bool> {
    if p == 2 {
        return Err(Error::Unsupported("the criterion covers odd primes only".into()));
    }
    let params = ConstructionParams::new(k, m, p)?;
    Ok(params.c.is_some())
}

/// A pair `(A, B)` with `det(A^n - I) != 0 mod p` for `q - 1` not dividing
/// `n` and `A^(q-1) = I + pB`, `det B != 0 mod p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPair {
    pub a: IntMatrix,
    pub b: IntMatrix,
    /// Whether `A` had to be replaced by `A + p(I + AB)`.
    pub adjusted: bool,
}

fn det_mod(m: &IntMatrix, p: u64) -> Nat {
    m.det().mod_floor(&Int::from(p)).magnitude().clone()
}

fn raw_b(a: &IntMatrix, q: u64, p: u64) -> Option<IntMatrix> {
    let id = IntMatrix::identity(a.dim());
    (&a.pow(q - 1) - &id).div_exact(&Int::from(p))
}

/// Checks both properties of a candidate pair for the field of size `p^m`.
pub fn verify_matrix_pair(a: &IntMatrix, b: &IntMatrix, p: u64, m: u32) -> bool {
    let q = p.pow(m);
    let pn = Nat::from(p);
    let id = IntMatrix::identity(a.dim());
    let a_mod = a.reduce_mod(&pn);
    let mut power = id.clone();
    for _ in 1..q - 1 {
        power = (&power * &a_mod).reduce_mod(&pn);
        if det_mod(&(&power - &id), p).is_zero() {
            return false;
        }
    }
    let lhs = a.pow(q - 1);
    let rhs = &id + &b.scale(&Int::from(p));
    lhs == rhs && !det_mod(b, p).is_zero()
}

/// The multiplication-by-generator matrix of `GF(p^m)`, adjusted if needed.
pub fn construct_matrix(p: u64, m: u32) -> Result<MatrixPair> {
    let field = PrimeField::new(p, m)?;
    let q = field.size();
    let a = field.multiplication_matrix(&field.generator());
    let b = raw_b(&a, q, p).ok_or_else(|| {
        Error::VerificationFailed(format!("A^(q-1) - I not divisible by {p}"))
    })?;
    let pair = if det_mod(&b, p).is_zero() {
        let id = IntMatrix::identity(a.dim());
        let a2 = &a + &(&id + &(&a * &b)).scale(&Int::from(p));
        let b2 = raw_b(&a2, q, p).ok_or_else(|| {
            Error::VerificationFailed(format!("adjusted A^(q-1) - I not divisible by {p}"))
        })?;
        MatrixPair { a: a2, b: b2, adjusted: true }
    } else {
        MatrixPair { a, b, adjusted: false }
    };
    if !verify_matrix_pair(&pair.a, &pair.b, p, m) {
        return Err(Error::VerificationFailed(format!("matrix pair for {p}^{m}")));
    }
    Ok(pair)
}

/// Fixed points of `x -> A^c x` on the `p`-power torsion of `(R/Z)^dim`:
/// the `p`-part of `|det(A^(cn) - I)|`.
pub fn torsion_fix_counts(a: &IntMatrix, c: u64, p: u64, n: usize) -> Result<Sequence1> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let step = a.pow(c);
    let id = IntMatrix::identity(a.dim());
    let mut power = id.clone();
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        power = &power * &step;
        let det = (&power - &id).det();
        if det.is_zero() {
            return Err(Error::DegenerateMatrix { n: i });
        }
        out.push(arith::p_adic(det.magnitude(), p)?.part);
    }
    Sequence1::new(format!("fix[{p}-torsion]"), out)
}

/// The map `x -> 5x` on the 2-power torsion of the circle.
pub fn two_adic_five(n: usize) -> Sequence1 {
    let a = IntMatrix::from_i64_rows(&[&[5]]).expect("1x1");
    torsion_fix_counts(&a, 1, 2, n).expect("5^n - 1 is never zero").with_label("fix[5x]")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ell_examples() {
        let p = ConstructionParams::new(1, 1, 2).unwrap();
        assert_eq!(ell_sequence(&p, 8).to_string(), "(2, 4, 2, 8, 2, 4, 2, 16)");
        let p = ConstructionParams::new(3, 1, 7).unwrap();
        assert_eq!(ell_sequence(&p, 6).to_string(), "(1, 1, 7, 1, 1, 7)");
        assert_eq!(p.c, Some(2));
        assert!(ConstructionParams::new(7, 1, 7).is_err());
    }

    #[test]
    fn realizability_criterion() {
        assert!(ell_algebraically_realizable(2, 1, 5).unwrap());
        assert!(!ell_algebraically_realizable(5, 1, 3).unwrap());
        assert!(ell_algebraically_realizable(4, 2, 3).unwrap());
        assert!(matches!(ell_algebraically_realizable(1, 1, 2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn one_by_one_pairs() {
        let pair = construct_matrix(5, 1).unwrap();
        assert_eq!(pair.a.to_string(), "[2]");
        assert_eq!(pair.b.to_string(), "[3]");
        assert!(!pair.adjusted);
        let pair = construct_matrix(2, 1).unwrap();
        assert_eq!(pair.a.to_string(), "[3]");
        assert_eq!(pair.b.to_string(), "[1]");
        assert!(pair.adjusted);
    }

    #[test]
    fn five_x() {
        assert_eq!(two_adic_five(4).to_string(), "(4, 8, 4, 16)");
        let id = IntMatrix::identity(2);
        assert_eq!(torsion_fix_counts(&id, 1, 3, 3).unwrap_err(), Error::DegenerateMatrix { n: 1 });
    }
}
