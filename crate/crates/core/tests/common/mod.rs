//! Slow, obviously-correct reference implementations used as oracles.
#![allow(dead_code)]

use dold::{Int, Nat, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn binom(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// `B_0..=B_n` from `sum_{k=0}^{m} C(m+1, k) B_k = 0`.
pub fn bernoulli_recurrence(n: usize) -> Vec<Rat> {
    let mut b = vec![Rat::one()];
    for m in 1..=n {
        if m > 1 && m % 2 == 1 {
            b.push(Rat::zero());
            continue;
        }
        let mut s = Rat::zero();
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                s += Rat::from_integer(binom(m as u64 + 1, k as u64)) * bk;
            }
        }
        b.push(-s / Rat::from_integer(Int::from(m + 1)));
    }
    b
}

/// `E_0..=E_{2n}` (even indices) from `sum_k C(2n, 2k) E_{2k} = 0`.
pub fn euler_series(n: usize) -> Vec<Int> {
    let mut e = vec![Int::one()];
    for m in 1..=n {
        let s: Int = (0..m).map(|k| binom(2 * m as u64, 2 * k as u64) * &e[k]).sum();
        e.push(-s);
    }
    e
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub fn mobius(n: u64) -> i64 {
    let mut m = n;
    let mut k = 0;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            k += 1;
        }
        d += 1;
    }
    if m > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `o_n` by summing over every `d <= n`.
pub fn orbit_count(a: &[Nat], n: usize) -> Int {
    (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| Int::from(mobius((n / d) as u64)) * Int::from(a[d - 1].clone()))
        .sum()
}

pub fn p_part(x: &Nat, p: u64) -> Nat {
    let mut x = x.clone();
    let mut part = Nat::one();
    let pb = Nat::from(p);
    while !x.is_zero() && (&x % &pb).is_zero() {
        x /= &pb;
        part *= &pb;
    }
    part
}

pub fn ord(mut n: u64, p: u64) -> u32 {
    let mut r = 0;
    while n % p == 0 {
        n /= p;
        r += 1;
    }
    r
}

/// `a_n = sum_{d | n} d c_d` for non-negative `c`.
pub fn from_orbits(c: &[u64]) -> Vec<Nat> {
    (1..=c.len())
        .map(|n| (1..=n).filter(|d| n % d == 0).map(|d| Nat::from(d as u64 * c[d - 1])).sum())
        .collect()
}

pub fn abs_nat(x: &Int) -> Nat {
    x.abs().to_biguint().unwrap()
}

pub fn int_mod(x: &Int, m: u64) -> Int {
    x.mod_floor(&Int::from(m))
}
