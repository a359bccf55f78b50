//! Exact Bernoulli and Euler numbers and the sequences built from them.
//!
//! Bernoulli numbers come from the integer tangent-number recurrence, so no
//! rational arithmetic happens until the very last step. Euler numbers come
//! from the Seidel boustrophedon triangle.
//!
//! With `|B_{2n} / 2n| = t_n / b_n` in lowest terms:
//!
//! | sequence | first terms |
//! |----------|-------------|
//! | `e_n = (-1)^n E_{2n}` | 1, 5, 61, 1385, ... |
//! | `t_n` | 1, 1, 1, 1, 1, 691, ... |
//! | `b_n` | 12, 120, 252, 240, ... |
//! | `d_n` (denominator of `B_{2n}`) | 6, 30, 42, 30, ... |

use num_bigint::Sign;
use num_traits::{One, Zero};

use crate::algebraic::matrix::IntMatrix;
use crate::arith::{self, Int, Nat, Rat};
use crate::error::{Error, Result};
use crate::sequence::Sequence1;

/// Tangent numbers `T_1, ..., T_n` (1, 2, 16, 272, ...), index 0 unused.
pub fn tangent_numbers(n: usize) -> Vec<Nat> {
    let mut t = vec![Nat::zero(); n + 1];
    if n == 0 {
        return t;
    }
    t[1] = Nat::one();
    for k in 2..=n {
        t[k] = &t[k - 1] * (k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * (j - k) + &t[j] * (j - k + 2);
        }
    }
    t
}

/// `B_2, B_4, ..., B_{2N}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rat>,
}

impl BernoulliTable {
    pub fn max_index(&self) -> usize {
        self.values.len()
    }

    /// `B_{2n}` for `1 <= n <= max_index`.
    pub fn get(&self, n: usize) -> &Rat {
        &self.values[n - 1]
    }

    /// `B_{2n} / 2n`.
    pub fn over_index(&self, n: usize) -> Rat {
        self.get(n) / Rat::from_integer(Int::from(2 * n))
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }
}

pub fn bernoulli_upto(n: usize) -> BernoulliTable {
    let tangent = tangent_numbers(n);
    let values = (1..=n)
        .map(|k| {
            // B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1))
            let four_k = Nat::one() << (2 * k);
            let den = &four_k * (&four_k - 1u32);
            let num = arith::nat_to_int(&(&tangent[k] * (2 * k)));
            let num = if k % 2 == 1 { num } else { -num };
            Rat::new(num, arith::nat_to_int(&den))
        })
        .collect();
    BernoulliTable { values }
}

/// `E_2, E_4, ..., E_{2N}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTable {
    values: Vec<Int>,
}

impl EulerTable {
    pub fn max_index(&self) -> usize {
        self.values.len()
    }

    /// `E_{2n}` for `1 <= n <= max_index`.
    pub fn get(&self, n: usize) -> &Int {
        &self.values[n - 1]
    }

    /// `E_k` for any `0 <= k <= 2 max_index`, zero at odd `k`.
    pub fn number(&self, k: usize) -> Int {
        match k {
            0 => Int::one(),
            k if k % 2 == 1 => Int::zero(),
            k => self.get(k / 2).clone(),
        }
    }

    pub fn values(&self) -> &[Int] {
        &self.values
    }
}

/// Zigzag numbers `A_0, ..., A_m` by the boustrophedon triangle.
pub fn zigzag_numbers(m: usize) -> Vec<Nat> {
    let mut out = Vec::with_capacity(m + 1);
    out.push(Nat::one());
    let mut row = vec![Nat::one()];
    for n in 1..=m {
        let mut next = vec![Nat::zero(); n + 1];
        for k in 1..=n {
            next[k] = &next[k - 1] + &row[n - k];
        }
        out.push(next[n].clone());
        row = next;
    }
    out
}

pub fn euler_upto(n: usize) -> EulerTable {
    let zig = zigzag_numbers(2 * n);
    let values = (1..=n)
        .map(|k| {
            let v = arith::nat_to_int(&zig[2 * k]);
            if k % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect();
    EulerTable { values }
}

/// `e_n = (-1)^n E_{2n}`, i.e. (1, 5, 61, 1385, ...).
pub fn sequence_e(n: usize) -> Sequence1 {
    sequence_e_from(&euler_upto(n))
}

pub fn sequence_e_from(tbl: &EulerTable) -> Sequence1 {
    let values = tbl.values().iter().map(|v| v.magnitude().clone()).collect();
    Sequence1::new("e", values).expect("table has at least one entry")
}

/// The numerator, denominator and von Staudt–Clausen sequences of `B_{2n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedBernoulli {
    pub t: Sequence1,
    pub b: Sequence1,
    pub d: Sequence1,
}

impl DerivedBernoulli {
    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

pub fn derived_bernoulli(n: usize) -> DerivedBernoulli {
    derived_from(&bernoulli_upto(n))
}

pub fn derived_from(tbl: &BernoulliTable) -> DerivedBernoulli {
    let n = tbl.max_index();
    let mut t = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for k in 1..=n {
        let x = tbl.over_index(k);
        t.push(x.numer().magnitude().clone());
        b.push(x.denom().magnitude().clone());
    }
    let d = (1..=n).map(von_staudt_clausen_denominator).collect();
    DerivedBernoulli {
        t: Sequence1::new("t", t).expect("non-empty"),
        b: Sequence1::new("b", b).expect("non-empty"),
        d: Sequence1::new("d", d).expect("non-empty"),
    }
}

/// Primes `p` with `p - 1 | 2n`, ascending.
pub fn staudt_primes(n: usize) -> Vec<u64> {
    arith::divisors(2 * n as u64)
        .expect("2n >= 2")
        .into_iter()
        .map(|d| d + 1)
        .filter(|&p| arith::is_prime(p))
        .collect()
}

/// `prod_{p - 1 | 2n} p`.
pub fn von_staudt_clausen_denominator(n: usize) -> Nat {
    staudt_primes(n).into_iter().map(Nat::from).product()
}

/// `b_n = 2 prod_{p - 1 | 2n} p^(1 + ord_p(n))`.
pub fn b_product_formula(n: usize) -> Nat {
    let mut acc = Nat::from(2u32);
    for p in staudt_primes(n) {
        acc *= arith::pow_u64(p, 1 + arith::ord_p(n as u64, p));
    }
    acc
}

/// `a_n = |det(M^n - I)|` for the companion matrix `M` of a monic integer
/// polynomial (highest degree first).
pub fn lehmer_pierce(char_poly: &[Int], n: usize) -> Result<Sequence1> {
    let m = IntMatrix::companion(char_poly)?;
    let id = IntMatrix::identity(m.dim());
    let mut power = id.clone();
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        power = &power * &m;
        let det = (&power - &id).det();
        if det.is_zero() {
            return Err(Error::DegeneratePolynomial { n: k });
        }
        out.push(det.magnitude().clone());
    }
    Sequence1::new(lehmer_pierce_label(char_poly), out)
}

fn lehmer_pierce_label(coeffs: &[Int]) -> String {
    let deg = coeffs.len() - 1;
    let mut s = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let power = deg - i;
        let sign = if c.sign() == Sign::Minus { "-" } else { "+" };
        if !s.is_empty() || sign == "-" {
            s.push_str(sign);
        }
        let mag = c.magnitude();
        if !mag.is_one() || power == 0 {
            s.push_str(&mag.to_string());
        }
        match power {
            0 => {}
            1 => s.push('x'),
            p => s.push_str(&format!("x^{p}")),
        }
    }
    format!("LP[{s}]")
}

/// Coefficients of `x^3 - x - 1`, the polynomial behind A001945.
pub fn x3_minus_x_minus_1() -> Vec<Int> {
    [1, 0, -1, -1].iter().map(|&c| Int::from(c)).collect()
}
