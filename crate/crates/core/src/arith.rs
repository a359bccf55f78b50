//! Exact integers, rationals and the elementary arithmetic functions.
//!
//! Everything here works on desk-scale inputs: primality is trial division,
//! factorizations are of machine-word integers, and the big-number types are
//! only used where values genuinely grow (sequence terms, Bernoulli numbers).

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision natural number.
pub type Nat = BigUint;
/// Arbitrary-precision signed integer.
pub type Int = BigInt;
/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

/// The `p`-adic valuation of a nonzero integer together with its `p`-part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAdicPart {
    pub ord: u32,
    pub part: Nat,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mobius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::ZeroArgument { op: "mobius" });
    }
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        Ok(0)
    } else if f.len() % 2 == 0 {
        Ok(1)
    } else {
        Ok(-1)
    }
}

pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument { op: "euler_phi" });
    }
    Ok(factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

/// All divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroArgument { op: "divisors" });
    }
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Primes in the closed interval `[lo, hi]`.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let hi_us = hi as usize;
    let mut sieve = vec![true; hi_us + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i <= hi_us {
        if sieve[i] {
            let mut j = i * i;
            while j <= hi_us {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (lo.max(2)..=hi).filter(|&k| sieve[k as usize]).collect()
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `ord_p(n)` and `p^ord_p(n)` for `n >= 1`.
pub fn p_adic(n: &Nat, p: u64) -> Result<PAdicPart> {
    require_prime(p)?;
    if n.is_zero() {
        return Err(Error::ZeroArgument { op: "p_adic" });
    }
    let pb = Nat::from(p);
    let mut rest = n.clone();
    let mut ord = 0u32;
    let mut part = Nat::one();
    loop {
        let (q, r) = rest.div_rem(&pb);
        if !r.is_zero() {
            break;
        }
        rest = q;
        ord += 1;
        part *= &pb;
    }
    Ok(PAdicPart { ord, part })
}

/// `ord_p(n)` for machine integers; `n` must be nonzero.
pub fn ord_p(mut n: u64, p: u64) -> u32 {
    debug_assert!(n != 0 && p >= 2);
    let mut r = 0;
    while n % p == 0 {
        n /= p;
        r += 1;
    }
    r
}

/// `ord_p` of a nonzero big integer (sign ignored).
pub fn ord_p_int(n: &Int, p: u64) -> u32 {
    debug_assert!(!n.is_zero());
    let pb = Int::from(p);
    let mut rest = n.abs();
    let mut r = 0;
    loop {
        let (q, rem) = rest.div_rem(&pb);
        if !rem.is_zero() {
            return r;
        }
        rest = q;
        r += 1;
    }
}

pub fn pow_u64(base: u64, exp: u32) -> Nat {
    num_traits::pow(Nat::from(base), exp as usize)
}

/// Least non-negative residue of an integer.
pub fn residue(x: &Int, modulus: &Nat) -> Nat {
    let m = Int::from(modulus.clone());
    x.mod_floor(&m)
        .to_biguint()
        .expect("mod_floor with positive modulus is non-negative")
}

/// Reduce a rational modulo `modulus`, or `None` when the denominator is not
/// invertible there.
pub fn rat_residue(x: &Rat, modulus: &Nat) -> Option<Nat> {
    if modulus.is_one() {
        return Some(Nat::zero());
    }
    let den = x.denom().to_biguint()?;
    if !den.gcd(modulus).is_one() {
        return None;
    }
    let inv = mod_inverse(&den, modulus)?;
    let num = residue(x.numer(), modulus);
    Some(num * inv % modulus)
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
pub fn mod_inverse(a: &Nat, m: &Nat) -> Option<Nat> {
    let a = Int::from(a % m);
    let m_int = Int::from(m.clone());
    let g = a.extended_gcd(&m_int);
    if !g.gcd.is_one() {
        return None;
    }
    Some(residue(&g.x, m))
}

pub fn nat_to_int(n: &Nat) -> Int {
    Int::from_biguint(Sign::Plus, n.clone())
}

pub fn nat_to_u64(n: &Nat) -> Option<u64> {
    n.to_u64()
}

/// Binomial coefficient as an exact natural number.
pub fn binomial(n: u64, k: u64) -> Nat {
    if k > n {
        return Nat::zero();
    }
    let k = k.min(n - k);
    let mut acc = Nat::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}
