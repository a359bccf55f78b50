//! Orbit counts, the Dold congruence, the sign condition and friends.
//!
//! A non-negative sequence `a` counts the periodic points of some map
//! exactly when every orbit count
//!
//! ```text
//! o_n = sum_{d | n} mu(n/d) a_d
//! ```
//!
//! is non-negative (sign condition) and divisible by `n` (Dold congruence).
//! On a finite prefix we can only ever report `PassUpTo(N)`; a failure is
//! always reported at the least offending index.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{self, Int, Nat};
use crate::error::{Error, Result};
use crate::sequence::Sequence1;

/// `mu(1..=n)` by a linear sieve; index 0 is unused.
pub(crate) fn mobius_table(n: usize) -> Vec<i8> {
    let mut mu = vec![1i8; n + 1];
    let mut is_comp = vec![false; n + 1];
    let mut primes = Vec::new();
    if n >= 1 {
        mu[0] = 0;
    }
    for i in 2..=n {
        if !is_comp[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let ip = i * p;
            if ip > n {
                break;
            }
            is_comp[ip] = true;
            if i % p == 0 {
                mu[ip] = 0;
                break;
            }
            mu[ip] = -mu[i];
        }
    }
    mu
}

/// Proper divisor lists for `1..=n`; entry `k` holds the divisors of `k`
/// (including `k`) in ascending order.
pub(crate) fn divisor_table(n: usize) -> Vec<Vec<usize>> {
    let mut divs = vec![Vec::new(); n + 1];
    for d in 1..=n {
        let mut m = d;
        while m <= n {
            divs[m].push(d);
            m += d;
        }
    }
    divs
}

/// The Möbius-inverted companion `o_n = sum_{d|n} mu(n/d) a_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCounts {
    values: Vec<Int>,
}

impl OrbitCounts {
    pub fn get(&self, n: usize) -> &Int {
        &self.values[n - 1]
    }

    pub fn values(&self) -> &[Int] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Recover `a_n = sum_{d|n} o_d`.
    pub fn invert(&self) -> Vec<Int> {
        let n = self.values.len();
        let divs = divisor_table(n);
        (1..=n)
            .map(|k| divs[k].iter().map(|&d| &self.values[d - 1]).sum())
            .collect()
    }

    /// `o_n / n` when every quotient is exact, i.e. the number of closed
    /// orbits of each length.
    pub fn closed_orbits(&self) -> Option<Vec<Int>> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, o)| {
                let n = Int::from(i + 1);
                let (q, r) = o.div_rem(&n);
                r.is_zero().then_some(q)
            })
            .collect()
    }
}

pub fn orbit_counts(a: &Sequence1) -> OrbitCounts {
    let n = a.len();
    let mu = mobius_table(n);
    let divs = divisor_table(n);
    let values = (1..=n)
        .map(|k| {
            let mut acc = Int::zero();
            for &d in &divs[k] {
                match mu[k / d] {
                    1 => acc += arith::nat_to_int(a.get(d)),
                    -1 => acc -= arith::nat_to_int(a.get(d)),
                    _ => {}
                }
            }
            acc
        })
        .collect();
    OrbitCounts { values }
}

/// Extra information attached to a failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessDetail {
    None,
    /// A divisor `d | n` with `a_d > a_n`.
    Divisor(usize),
    /// `a_{c p^m} != a_{c p^(m-1)} mod p^m` with `c` coprime to `p`.
    Arias { cofactor: usize, p: u64, m: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub n: usize,
    pub value: Int,
    pub detail: WitnessDetail,
}

impl Witness {
    fn plain(n: usize, value: Int) -> Self {
        Witness { n, value, detail: WitnessDetail::None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    PassUpTo(usize),
    FailAt(Witness),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::PassUpTo(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::FailAt(w) => Some(w),
            Verdict::PassUpTo(_) => None,
        }
    }

    pub fn fail_index(&self) -> Option<usize> {
        self.witness().map(|w| w.n)
    }
}

/// The three checks carried by a [`RealizabilityReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    Dold,
    Sign,
    Monotone,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::Dold => "dold",
            Condition::Sign => "sign",
            Condition::Monotone => "monotone",
        }
    }
}

/// Which conditions decide a pass/fail verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// Dold congruence alone.
    Dold,
    /// Dold congruence and sign condition (realizability proper).
    Full,
}

impl Criterion {
    pub fn conditions(self) -> &'static [Condition] {
        match self {
            Criterion::Dold => &[Condition::Dold],
            Criterion::Full => &[Condition::Dold, Condition::Sign],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizabilityReport {
    pub checked_upto: usize,
    pub dold: Verdict,
    pub sign: Verdict,
    pub monotone: Verdict,
}

impl RealizabilityReport {
    /// Dold congruence and sign condition both hold on the prefix.
    pub fn is_realizable_consistent(&self) -> bool {
        self.dold.is_pass() && self.sign.is_pass()
    }

    pub fn verdict(&self, c: Condition) -> &Verdict {
        match c {
            Condition::Dold => &self.dold,
            Condition::Sign => &self.sign,
            Condition::Monotone => &self.monotone,
        }
    }

    /// The earliest failure among the conditions of `criterion`.
    pub fn first_failure(&self, criterion: Criterion) -> Option<(Condition, &Witness)> {
        criterion
            .conditions()
            .iter()
            .filter_map(|&c| self.verdict(c).witness().map(|w| (c, w)))
            .min_by_key(|(c, w)| (w.n, *c))
    }

    pub fn passes(&self, criterion: Criterion) -> bool {
        self.first_failure(criterion).is_none()
    }
}

pub fn check_realizable(a: &Sequence1) -> RealizabilityReport {
    let n = a.len();
    let orbits = orbit_counts(a);
    let mut dold = None;
    let mut sign = None;
    for (i, o) in orbits.values().iter().enumerate() {
        let k = i + 1;
        if dold.is_none() && !(o % Int::from(k)).is_zero() {
            dold = Some(Witness::plain(k, o.clone()));
        }
        if sign.is_none() && o.is_negative() {
            sign = Some(Witness::plain(k, o.clone()));
        }
        if dold.is_some() && sign.is_some() {
            break;
        }
    }
    let verdict = |w: Option<Witness>| w.map_or(Verdict::PassUpTo(n), Verdict::FailAt);
    RealizabilityReport {
        checked_upto: n,
        dold: verdict(dold),
        sign: verdict(sign),
        monotone: monotone_verdict(a),
    }
}

/// Fixed-point sets nest under divisibility, so `d | n` forces `a_d <= a_n`.
fn monotone_verdict(a: &Sequence1) -> Verdict {
    let n = a.len();
    let divs = divisor_table(n);
    for k in 2..=n {
        let ak = a.get(k);
        for &d in &divs[k][..divs[k].len() - 1] {
            let ad = a.get(d);
            if ad > ak {
                let value = arith::nat_to_int(ad) - arith::nat_to_int(ak);
                return Verdict::FailAt(Witness { n: k, value, detail: WitnessDetail::Divisor(d) });
            }
        }
    }
    Verdict::PassUpTo(n)
}

/// The Dold congruence tested through `a_{np^m} = a_{np^(m-1)} mod p^m`.
///
/// The reported index is the least `n p^m` at which some such congruence
/// breaks; it agrees with the least Dold failure of [`check_realizable`].
pub fn arias_criterion(a: &Sequence1) -> Verdict {
    let len = a.len();
    for idx in 2..=len {
        for (p, m) in arith::factorize(idx as u64) {
            let pm = arith::pow_u64(p, m);
            let lower = idx / p as usize;
            let diff = arith::nat_to_int(a.get(idx)) - arith::nat_to_int(a.get(lower));
            if !(&diff % arith::nat_to_int(&pm)).is_zero() {
                let cofactor = idx / (p as usize).pow(m);
                return Verdict::FailAt(Witness {
                    n: idx,
                    value: diff,
                    detail: WitnessDetail::Arias { cofactor, p, m },
                });
            }
        }
    }
    Verdict::PassUpTo(len)
}

/// The sequence of `q`-parts `(⌊a_n⌋_q)`.
pub fn p_part_sequence(a: &Sequence1, q: u64) -> Result<Sequence1> {
    if !arith::is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let mut out = Vec::with_capacity(a.len());
    for (n, v) in a.iter() {
        if v.is_zero() {
            return Err(Error::ZeroEntry { n });
        }
        out.push(arith::p_adic(v, q)?.part);
    }
    Sequence1::new(format!("⌊{}⌋_{q}", a.label()), out)
}

/// [`check_realizable`] applied to the `q`-parts.
pub fn local_report(a: &Sequence1, q: u64) -> Result<RealizabilityReport> {
    Ok(check_realizable(&p_part_sequence(a, q)?))
}

/// `(a_{1+k}, ..., a_N)`.
pub fn shift(a: &Sequence1, k: usize) -> Result<Sequence1> {
    if k >= a.len() {
        return Err(Error::ShiftTooLarge { k, len: a.len() });
    }
    let label = if k == 0 { a.label().to_string() } else { format!("{}[+{k}]", a.label()) };
    Sequence1::new(label, a.values()[k..].to_vec())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagicalReport {
    pub reports: Vec<(usize, RealizabilityReport)>,
}

impl MagicalReport {
    /// Every tested shift is realizable-consistent.
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|(_, r)| r.is_realizable_consistent())
    }

    /// The least shift that fails, with its earliest witness.
    pub fn first_failure(&self) -> Option<(usize, Condition, &Witness)> {
        self.reports
            .iter()
            .find_map(|(k, r)| r.first_failure(Criterion::Full).map(|(c, w)| (*k, c, w)))
    }
}

/// Realizability of every shift `0 <= k <= max_shift`.
pub fn magical_report(a: &Sequence1, max_shift: usize) -> Result<MagicalReport> {
    if max_shift >= a.len() {
        return Err(Error::ShiftTooLarge { k: max_shift, len: a.len() });
    }
    let reports = (0..=max_shift)
        .map(|k| shift(a, k).map(|s| (k, check_realizable(&s))))
        .collect::<Result<_>>()?;
    Ok(MagicalReport { reports })
}

pub fn pointwise_product(a: &Sequence1, b: &Sequence1) -> Result<Sequence1> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    let values: Vec<Nat> = a.values().iter().zip(b.values()).map(|(x, y)| x * y).collect();
    Sequence1::new(format!("{}·{}", a.label(), b.label()), values)
}
