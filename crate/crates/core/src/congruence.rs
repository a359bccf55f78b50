//! Executable congruences for Bernoulli and Euler numbers.
//!
//! Each check evaluates both sides exactly and reduces them modulo the stated
//! prime power. These are theorems, so a check that comes back with
//! `holds == false` points at a bug in the number engines.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{self, Int, Nat, Rat};
use crate::classical::{BernoulliTable, EulerTable};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceCheck {
    pub description: String,
    /// Zero means the two sides are compared as integers.
    pub modulus: Nat,
    pub lhs: Int,
    pub rhs: Int,
    pub holds: bool,
}

impl CongruenceCheck {
    fn new(description: String, modulus: Nat, lhs: Int, rhs: Int) -> Self {
        let holds = lhs == rhs;
        CongruenceCheck { description, modulus, lhs, rhs, holds }
    }
}

fn pre(msg: String) -> Error {
    Error::Precondition(msg)
}

fn require_odd_prime(p: u64) -> Result<()> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(pre("p must be odd".into()));
    }
    Ok(())
}

fn need(tbl_len: usize, n: usize) -> Result<()> {
    if n > tbl_len {
        return Err(Error::InsufficientDepth { needed: n, available: tbl_len });
    }
    Ok(())
}

fn reduce(x: &Rat, modulus: &Nat, what: &str) -> Result<Int> {
    arith::rat_residue(x, modulus)
        .map(|r| arith::nat_to_int(&r))
        .ok_or_else(|| pre(format!("{what} has a denominator not invertible mod {modulus}")))
}

fn multiplicative_order(g: u64, m: &Nat) -> Nat {
    let g = Nat::from(g) % m;
    let mut k = Nat::one();
    let mut x = g.clone();
    while !x.is_one() {
        x = x * &g % m;
        k += 1u32;
    }
    k
}

/// The least `g > 1` that is a primitive root mod `p` with `p^2` not
/// dividing `g^(p-1) - 1`, so that it is a primitive root mod every `p^r`.
pub fn good_primitive_root(p: u64) -> Result<u64> {
    require_odd_prime(p)?;
    let pn = Nat::from(p);
    let p2 = &pn * &pn;
    let order = Nat::from(p - 1);
    Ok((2..)
        .find(|&g| {
            g % p != 0
                && multiplicative_order(g, &pn) == order
                && !Nat::from(g).modpow(&order, &p2).is_one()
        })
        .expect("good primitive roots exist"))
}

/// Multiplicative order of `g` modulo `p^r`.
pub fn order_mod_prime_power(g: u64, p: u64, r: u32) -> Nat {
    multiplicative_order(g, &arith::pow_u64(p, r))
}

/// `B_{2m}/2m = B_{2n}/2n (mod p^r)` when `2m = 2n (mod phi(p^r))` and
/// `p - 1` does not divide `2n`.
pub fn kummer_check(tbl: &BernoulliTable, p: u64, r: u32, m: usize, n: usize) -> Result<CongruenceCheck> {
    require_odd_prime(p)?;
    if r == 0 || (r as usize) > 2 * n - 1 || n > m {
        return Err(pre(format!("need 1 <= r <= 2n - 1 <= 2m - 1, got r={r} n={n} m={m}")));
    }
    if (2 * n as u64) % (p - 1) == 0 {
        return Err(pre(format!("p - 1 = {} divides 2n = {}", p - 1, 2 * n)));
    }
    if (2 * m as u64) % (p - 1) == 0 {
        return Err(pre(format!("p - 1 = {} divides 2m = {}", p - 1, 2 * m)));
    }
    let phi = arith::euler_phi(p.pow(r))?;
    if (2 * (m - n)) as u64 % phi != 0 {
        return Err(pre(format!("2m = {} and 2n = {} differ mod phi({p}^{r}) = {phi}", 2 * m, 2 * n)));
    }
    need(tbl.max_index(), m)?;
    let modulus = arith::pow_u64(p, r);
    let lhs = reduce(&tbl.over_index(m), &modulus, "B_2m/2m")?;
    let rhs = reduce(&tbl.over_index(n), &modulus, "B_2n/2n")?;
    Ok(CongruenceCheck::new(format!("B_{}/{} = B_{}/{} mod {p}^{r}", 2 * m, 2 * m, 2 * n, 2 * n), modulus, lhs, rhs))
}

fn young_side(tbl: &BernoulliTable, gamma: u64, n: usize) -> Rat {
    let g = Int::from(num_traits::pow(Nat::from(gamma), 2 * n)) - 1;
    Rat::from_integer(g) * tbl.over_index(n)
}

/// `(g^{2n} - 1) B_{2n}/2n = (g^{2k} - 1) B_{2k}/2k (mod p^r)` with `g` a good
/// primitive root, `p - 1 | 2n`, `r = ord_p(n) >= 1` and `k = n/p`.
pub fn young_check(tbl: &BernoulliTable, p: u64, n: usize) -> Result<CongruenceCheck> {
    require_odd_prime(p)?;
    if n == 0 || (2 * n as u64) % (p - 1) != 0 {
        return Err(pre(format!("p - 1 = {} must divide 2n = {}", p - 1, 2 * n)));
    }
    let r = arith::ord_p(n as u64, p);
    if r == 0 {
        return Err(pre(format!("ord_{p}({n}) = 0")));
    }
    need(tbl.max_index(), n)?;
    let k = n / p as usize;
    let gamma = good_primitive_root(p)?;
    let modulus = arith::pow_u64(p, r);
    let lhs = reduce(&young_side(tbl, gamma, n), &modulus, "left side")?;
    let rhs = reduce(&young_side(tbl, gamma, k), &modulus, "right side")?;
    Ok(CongruenceCheck::new(format!("Young at p={p} n={n} k={k} mod {p}^{r} (g={gamma})"), modulus, lhs, rhs))
}

fn five_side(tbl: &BernoulliTable, n: usize) -> Rat {
    let f = Int::from(num_traits::pow(Nat::from(5u32), n)) - 1;
    Rat::from_integer(f) * tbl.over_index(n)
}

/// `(5^n - 1) B_{2n}/2n = (5^k - 1) B_{2k}/2k (mod 2^r)`, `r = ord_2(n) >= 1`,
/// `k = n/2`.
pub fn lemma_five_check(tbl: &BernoulliTable, n: usize) -> Result<CongruenceCheck> {
    if n == 0 || n % 2 == 1 {
        return Err(pre(format!("n = {n} must be even and positive")));
    }
    need(tbl.max_index(), n)?;
    let r = arith::ord_p(n as u64, 2);
    let k = n / 2;
    let modulus = arith::pow_u64(2, r);
    let lhs = reduce(&five_side(tbl, n), &modulus, "left side")?;
    let rhs = reduce(&five_side(tbl, k), &modulus, "right side")?;
    Ok(CongruenceCheck::new(format!("(5^{n}-1)B_{}/{} vs k={k} mod 2^{r}", 2 * n, 2 * n), modulus, lhs, rhs))
}

/// `(5^n - 1)/2^(r+2)` and `(5^k - 1)/2^(r+1)` are odd and congruent mod
/// `2^r`, where `n = 2^r m` with `m` odd, `r >= 1`, `k = n/2`.
pub fn staying_alive_check(n: usize) -> Result<CongruenceCheck> {
    if n == 0 || n % 2 == 1 {
        return Err(pre(format!("n = {n} must be even and positive")));
    }
    let r = arith::ord_p(n as u64, 2);
    let k = n / 2;
    let quotient = |e: usize, s: u32| -> Result<Int> {
        let v: Int = Int::from(num_traits::pow(Nat::from(5u32), e)) - 1;
        let d = Int::from(arith::pow_u64(2, s));
        let (q, rem) = v.div_rem(&d);
        if !rem.is_zero() {
            return Err(Error::VerificationFailed(format!("2^{s} does not divide 5^{e} - 1")));
        }
        Ok(q)
    };
    let a = quotient(n, r + 2)?;
    let b = quotient(k, r + 1)?;
    let modulus = arith::pow_u64(2, r);
    let mut check = CongruenceCheck::new(
        format!("(5^{n}-1)/2^{} vs (5^{k}-1)/2^{} mod 2^{r}", r + 2, r + 1),
        modulus.clone(),
        arith::nat_to_int(&arith::residue(&a, &modulus)),
        arith::nat_to_int(&arith::residue(&b, &modulus)),
    );
    check.holds &= a.is_odd() && b.is_odd();
    Ok(check)
}

/// `A_n(m) = sum_{k=1}^m (-1)^(m-k) k^n`.
pub fn wagstaff_a(n: u32, m: u64) -> Int {
    (1..=m)
        .map(|k| {
            let t = Int::from(num_traits::pow(Nat::from(k), n as usize));
            if (m - k) % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// `2^(2n+1) A_{2n}((p-1)/2) = sum_k C(2n,k) E_k p^(2n-k)` as an exact
/// equality.
pub fn wagstaff_identity_check(tbl: &EulerTable, n: usize, p: u64) -> Result<CongruenceCheck> {
    require_odd_prime(p)?;
    if n == 0 {
        return Err(Error::ZeroArgument { op: "wagstaff n" });
    }
    need(tbl.max_index(), n)?;
    let lhs = (Int::one() << (2 * n + 1)) * wagstaff_a(2 * n as u32, (p - 1) / 2);
    let pi = Int::from(p);
    let rhs: Int = (0..=2 * n)
        .map(|k| {
            arith::nat_to_int(&arith::binomial(2 * n as u64, k as u64))
                * tbl.number(k)
                * num_traits::pow(pi.clone(), 2 * n - k)
        })
        .sum();
    Ok(CongruenceCheck::new(format!("Wagstaff identity n={n} p={p}"), Nat::zero(), lhs, rhs))
}

/// `E_{2 p^r b} = E_{2 p^(r-1) b} (mod p^r)` for `p` not dividing `b`.
pub fn euler_additive_check(tbl: &EulerTable, p: u64, r: u32, b: u64) -> Result<CongruenceCheck> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if r == 0 || b == 0 {
        return Err(pre("need r >= 1 and b >= 1".into()));
    }
    if b % p == 0 {
        return Err(pre(format!("{p} divides b = {b}")));
    }
    let hi = (p.pow(r) * b) as usize;
    let lo = (p.pow(r - 1) * b) as usize;
    need(tbl.max_index(), hi)?;
    let modulus = arith::pow_u64(p, r);
    let lhs = arith::nat_to_int(&arith::residue(tbl.get(hi), &modulus));
    let rhs = arith::nat_to_int(&arith::residue(tbl.get(lo), &modulus));
    Ok(CongruenceCheck::new(format!("E_{} = E_{} mod {p}^{r}", 2 * hi, 2 * lo), modulus, lhs, rhs))
}

/// Outcome of running one oracle across a parameter grid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GridSummary {
    pub checked: usize,
    pub rejected: usize,
    pub failures: Vec<CongruenceCheck>,
}

impl GridSummary {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, outcome: Result<CongruenceCheck>) -> Result<()> {
        match outcome {
            Ok(c) => {
                self.checked += 1;
                if !c.holds {
                    self.failures.push(c);
                }
                Ok(())
            }
            Err(Error::Precondition(_)) => {
                self.rejected += 1;
                Ok(())
            }
            Err(e) => Err(e),
        }
    }
}

fn odd_primes(p_max: u64) -> Vec<u64> {
    arith::primes_in_range(3, p_max)
}

/// Every `(p, r, m, n)` with odd `p <= p_max`, `r <= r_max`,
/// `1 <= n <= m <= n_max` and `2m = 2n (mod phi(p^r))`. Pairs with
/// `p - 1 | 2n` are counted as rejected.
pub fn kummer_grid(tbl: &BernoulliTable, p_max: u64, r_max: u32, n_max: usize) -> Result<GridSummary> {
    let mut s = GridSummary::default();
    for p in odd_primes(p_max) {
        for r in 1..=r_max {
            let phi = arith::euler_phi(p.pow(r))? as usize;
            for n in 1..=n_max {
                if r as usize > 2 * n - 1 {
                    continue;
                }
                for m in (n..=n_max).filter(|m| (2 * (m - n)) % phi == 0) {
                    s.record(kummer_check(tbl, p, r, m, n))?;
                }
            }
        }
    }
    Ok(s)
}

pub fn young_grid(tbl: &BernoulliTable, p_max: u64, r_max: u32, n_max: usize) -> Result<GridSummary> {
    let mut s = GridSummary::default();
    for p in odd_primes(p_max) {
        for n in 1..=n_max {
            let r = arith::ord_p(n as u64, p);
            if r >= 1 && r <= r_max && (2 * n as u64) % (p - 1) == 0 {
                s.record(young_check(tbl, p, n))?;
            }
        }
    }
    Ok(s)
}

pub fn lemma_five_grid(tbl: &BernoulliTable, n_max: usize) -> Result<GridSummary> {
    let mut s = GridSummary::default();
    for n in (2..=n_max).step_by(2) {
        s.record(lemma_five_check(tbl, n))?;
    }
    Ok(s)
}

pub fn staying_alive_grid(n_max: usize) -> Result<GridSummary> {
    let mut s = GridSummary::default();
    for n in (2..=n_max).step_by(2) {
        s.record(staying_alive_check(n))?;
    }
    Ok(s)
}

/// `p <= p_max` (including 2), `r <= r_max`, `p^r b <= n_max`.
pub fn euler_additive_grid(tbl: &EulerTable, p_max: u64, r_max: u32, n_max: usize) -> Result<GridSummary> {
    let mut s = GridSummary::default();
    for p in arith::primes_in_range(2, p_max) {
        for r in 1..=r_max {
            let pr = p.pow(r) as usize;
            for b in (1..=n_max / pr.max(1)).filter(|b| *b as u64 % p != 0) {
                s.record(euler_additive_check(tbl, p, r, b as u64))?;
            }
        }
    }
    Ok(s)
}

pub fn wagstaff_grid(tbl: &EulerTable, n_max: usize, p_max: u64) -> Result<GridSummary> {
    let mut s = GridSummary::default();
    for p in odd_primes(p_max) {
        for n in 1..=n_max {
            s.record(wagstaff_identity_check(tbl, n, p))?;
        }
    }
    Ok(s)
}
