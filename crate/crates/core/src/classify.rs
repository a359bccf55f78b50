//! Bernoulli and Euler (ir)regularity of primes, and what it says about
//! local realizability of `t` and `e`.

use rayon::prelude::*;

use crate::arith::{self, Nat};
use crate::classical::{self, DerivedBernoulli};
use crate::error::{Error, Result};
use crate::realize::{Verdict, Witness, WitnessDetail};
use crate::sequence::Sequence1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BernoulliStatus {
    Regular,
    /// `q | t_k` with `k <= (q - 3) / 2`, `k` least.
    Irregular { k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerStatus {
    Regular,
    /// `q | e_n` with `0 < n < (q - 1) / 2`, `n` least.
    Irregular { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerStrength {
    /// No `e_n` with `n <= depth` is divisible by `q`.
    StrongUpTo(usize),
    /// Regular, but `q | e_n` for this least `n`.
    Weak { n: usize },
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Bernoulli,
    Euler,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeClassification {
    pub q: u64,
    pub bernoulli: Option<BernoulliStatus>,
    pub euler: Option<EulerStatus>,
    pub euler_strength: EulerStrength,
    pub depth: usize,
}

impl PrimeClassification {
    pub fn is_irregular(&self) -> bool {
        matches!(self.bernoulli, Some(BernoulliStatus::Irregular { .. }))
            || matches!(self.euler, Some(EulerStatus::Irregular { .. }))
    }
}

fn require_prime(q: u64) -> Result<()> {
    if arith::is_prime(q) {
        Ok(())
    } else {
        Err(Error::NotPrime(q))
    }
}

fn divides(q: u64, x: &Nat) -> bool {
    (x % q) == Nat::from(0u32)
}

/// Kummer's criterion on `t_1, ..., t_{(q-3)/2}`. The prime 2 is regular by
/// convention.
pub fn classify_bernoulli(q: u64, tbl: &DerivedBernoulli) -> Result<BernoulliStatus> {
    require_prime(q)?;
    let bound = (q.saturating_sub(3) / 2) as usize;
    if bound > tbl.len() {
        return Err(Error::InsufficientDepth { needed: bound, available: tbl.len() });
    }
    Ok((1..=bound)
        .find(|&k| divides(q, tbl.t.get(k)))
        .map_or(BernoulliStatus::Regular, |k| BernoulliStatus::Irregular { k }))
}

/// Regularity below `(q - 1) / 2` and strength up to `depth`.
pub fn classify_euler(q: u64, e: &Sequence1, depth: usize) -> Result<(EulerStatus, EulerStrength)> {
    require_prime(q)?;
    let half = ((q - 1) / 2) as usize;
    if depth < half || e.len() < depth {
        return Err(Error::InsufficientDepth { needed: depth.max(half), available: e.len() });
    }
    let first = (1..=depth).find(|&n| divides(q, e.get(n)));
    Ok(match first {
        Some(n) if n < half => (EulerStatus::Irregular { n }, EulerStrength::NotApplicable),
        Some(n) => (EulerStatus::Regular, EulerStrength::Weak { n }),
        None => (EulerStatus::Regular, EulerStrength::StrongUpTo(depth)),
    })
}

/// Classifies every prime `<= q_max`. For [`Kind::Bernoulli`], `depth` is the
/// number of `t_n` computed; for [`Kind::Euler`] it is the number of `e_n`.
pub fn scan_primes(kind: Kind, q_max: u64, depth: usize) -> Result<Vec<PrimeClassification>> {
    let primes = arith::primes_in_range(2, q_max);
    match kind {
        Kind::Bernoulli => {
            let tbl = classical::derived_bernoulli(depth.max(1));
            scan_bernoulli(&primes, &tbl)
        }
        Kind::Euler => {
            let e = classical::sequence_e(depth.max(1));
            scan_euler(&primes, &e, depth)
        }
    }
}

pub fn scan_bernoulli(primes: &[u64], tbl: &DerivedBernoulli) -> Result<Vec<PrimeClassification>> {
    primes
        .par_iter()
        .map(|&q| {
            Ok(PrimeClassification {
                q,
                bernoulli: Some(classify_bernoulli(q, tbl)?),
                euler: None,
                euler_strength: EulerStrength::NotApplicable,
                depth: tbl.len(),
            })
        })
        .collect()
}

pub fn scan_euler(primes: &[u64], e: &Sequence1, depth: usize) -> Result<Vec<PrimeClassification>> {
    primes
        .par_iter()
        .map(|&q| {
            let (status, strength) = classify_euler(q, e, depth)?;
            Ok(PrimeClassification { q, bernoulli: None, euler: Some(status), euler_strength: strength, depth })
        })
        .collect()
}

/// Tests the conjectured `q`-part profile of `e` for a weak Euler regular
/// prime: `q^(1 + ord_q(n))` when `(q - 1)/2 | n`, otherwise 1. A prime with
/// no `q | e_n` on the prefix is checked against the all-ones profile.
///
/// A pass is evidence on a prefix, nothing more.
pub fn weak_euler_profile_check(q: u64, e: &Sequence1) -> Result<Verdict> {
    let (status, strength) = classify_euler(q, e, e.len())?;
    if let EulerStatus::Irregular { n } = status {
        return Err(Error::Precondition(format!("{q} is Euler irregular (q | e_{n})")));
    }
    let half = (q - 1) / 2;
    let weak = matches!(strength, EulerStrength::Weak { .. });
    for (n, v) in e.iter() {
        let expected = if weak && n as u64 % half == 0 {
            arith::pow_u64(q, 1 + arith::ord_p(n as u64, q))
        } else {
            Nat::from(1u32)
        };
        let part = arith::p_adic(v, q)?.part;
        if part != expected {
            return Ok(Verdict::FailAt(Witness {
                n,
                value: arith::nat_to_int(&part),
                detail: WitnessDetail::None,
            }));
        }
    }
    Ok(Verdict::PassUpTo(e.len()))
}

/// How `t` looks locally at `q` on the prefix covered by `tbl`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NumeratorLocal {
    /// Regular prime: every `q`-part is 1.
    Trivial { upto: usize },
    /// Irregular prime with `k | m` and `q`-part of `t_k` above that of `t_m`.
    FailurePair { k: usize, m: usize, part_k: Nat, part_m: Nat },
}

pub fn numerator_local_status(q: u64, tbl: &DerivedBernoulli) -> Result<NumeratorLocal> {
    let parts: Vec<Nat> =
        tbl.t.values().iter().map(|v| arith::p_adic(v, q).map(|p| p.part)).collect::<Result<_>>()?;
    match classify_bernoulli(q, tbl)? {
        BernoulliStatus::Regular => {
            if let Some(i) = parts.iter().position(|p| p != &Nat::from(1u32)) {
                return Err(Error::VerificationFailed(format!("{q} is regular but divides t_{}", i + 1)));
            }
            Ok(NumeratorLocal::Trivial { upto: tbl.len() })
        }
        BernoulliStatus::Irregular { k } => {
            let m = (2..)
                .map(|j| j * k)
                .take_while(|&m| m <= tbl.len())
                .find(|&m| parts[m - 1] < parts[k - 1])
                .ok_or_else(|| Error::InsufficientDepth { needed: tbl.len() + 1, available: tbl.len() })?;
            Ok(NumeratorLocal::FailurePair { k, m, part_k: parts[k - 1].clone(), part_m: parts[m - 1].clone() })
        }
    }
}
