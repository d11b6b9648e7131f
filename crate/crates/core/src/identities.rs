//! Relations between the four variants.
//!
//! Forcing the all-ones vector in or leaving it free doubles the count
//! (`H0 = 2 H`, `H01 = 2 H1`), and an equation `m = 1` fixes the variables of
//! `m` to 1, which gives `H1(n) = sum_k C(n,k) H(k)` and the same sum from
//! `H0` to `H01`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Published values of `H(n)` for `n = 0..=6`.
pub const KNOWN_H: [u64; 7] = [1, 1, 4, 45, 2271, 1_373_701, 75_965_474_236];

/// Published values of `H1(n)` (Moore families) for `n = 0..=6`.
pub const KNOWN_H1: [u64; 7] = [1, 2, 7, 61, 2480, 1_385_552, 75_973_751_474];

pub fn binomial(n: u64, k: u64) -> Result<BigUint> {
    if k > n {
        return Err(Error::Input(format!("binomial({n}, {k}) needs k <= n")));
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    Ok(acc)
}

pub fn doubling(h: &BigUint) -> BigUint {
    h << 1u32
}

/// Inverse of [`doubling`]; fails on odd input.
pub fn halving(h: &BigUint) -> Result<BigUint> {
    if h.bit(0) {
        return Err(Error::Input(format!("{h} is odd and cannot be halved")));
    }
    Ok(h >> 1u32)
}

/// `sum_k C(n, k) base[k]` with `n = base.len() - 1`.
pub fn binomial_sum(base: &[BigUint]) -> BigUint {
    let Some(n) = base.len().checked_sub(1) else {
        return BigUint::zero();
    };
    base.iter()
        .enumerate()
        .map(|(k, b)| binomial(n as u64, k as u64).expect("k <= n") * b)
        .sum()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticRow {
    pub n: usize,
    pub log2_count: f64,
    pub central_binomial: u64,
    pub ratio: f64,
}

/// `log2(count)` against `C(n, floor(n/2))` for each `(n, count)`.
/// Diagnostic only.
pub fn asymptotic_report(counts: &[(usize, BigUint)]) -> Result<Vec<AsymptoticRow>> {
    counts
        .iter()
        .map(|(n, c)| {
            if c.is_zero() {
                return Err(Error::Input(format!("count for n = {n} is zero")));
            }
            let log2_count = log2(c);
            let central = binomial(*n as u64, (*n / 2) as u64)?
                .to_u64()
                .ok_or_else(|| Error::Input(format!("C({n}, {}) overflows", n / 2)))?;
            Ok(AsymptoticRow {
                n: *n,
                log2_count,
                central_binomial: central,
                ratio: log2_count / central as f64,
            })
        })
        .collect()
}

fn log2(c: &BigUint) -> f64 {
    let bits = c.bits();
    if bits <= 53 {
        return c.to_f64().unwrap_or(f64::INFINITY).log2();
    }
    let shift = bits - 53;
    let top = (c >> shift).to_f64().expect("53 bits fit in f64");
    top.log2() + shift as f64
}
