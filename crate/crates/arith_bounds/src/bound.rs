//! f(n), the largest m whose unit group (Z/mZ)^x has exponent dividing n,
//! and the order bounds for twists and central charges derived from it.
//!
//! For some n (n = 14 is the first) no modulus has exponent exactly n, so
//! the divisibility form is the one that makes f total.

use num_prime::nt_funcs::is_prime64;
use thiserror::Error;

use crate::factored::FactoredInteger;
use crate::totient::carmichael_lambda;

/// Search window of the brute-force oracle, as a multiple of the closed form.
pub const DEFAULT_ORACLE_MULTIPLIER: u64 = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("argument must be a positive even integer, got {0}")]
    NotEven(u64),
    #[error("argument must be positive")]
    NotPositive,
    #[error("value does not fit in 128 bits")]
    Overflow,
    #[error("bad factorization: {0}")]
    BadFactorization(String),
}

/// Closed form for f(2N): 2^(a+3) times, for every odd prime p with
/// (p-1) | 2N, the factor p^(1 + v_p(N)); here 2^a is the 2-part of N.
pub fn f_bound(two_n: u64) -> Result<u128, BoundError> {
    if two_n == 0 || two_n % 2 == 1 {
        return Err(BoundError::NotEven(two_n));
    }
    let n = FactoredInteger::new(two_n / 2)?;
    let mut acc: u128 = 1u128 << (n.valuation(2) + 3);
    for d in FactoredInteger::new(two_n)?.divisors() {
        let p = d + 1;
        if p < 3 || !is_prime64(p) {
            continue;
        }
        let q = (p as u128).checked_pow(1 + n.valuation(p)).ok_or(BoundError::Overflow)?;
        acc = acc.checked_mul(q).ok_or(BoundError::Overflow)?;
    }
    Ok(acc)
}

/// Largest m up to `multiplier` times the closed form with lambda(m)
/// dividing 2N, found by exhaustive search.
pub fn f_bound_oracle(two_n: u64, multiplier: u64) -> Result<Option<u64>, BoundError> {
    let limit = f_bound(two_n)?.checked_mul(multiplier as u128).ok_or(BoundError::Overflow)?;
    let limit = u64::try_from(limit).map_err(|_| BoundError::Overflow)?;
    Ok((1..=limit).rev().find(|&m| two_n % carmichael_lambda(m) == 0))
}

/// Whether some modulus has unit group exponent exactly 2N.
pub fn exponent_is_attained(two_n: u64) -> Result<bool, BoundError> {
    Ok(carmichael_lambda(u64::try_from(f_bound(two_n)?).map_err(|_| BoundError::Overflow)?) == two_n)
}

/// f(2N) / 3: central charges of categories whose dimension field has
/// Galois group of exponent N have order dividing this.
pub fn charge_order_bound(exponent: u64) -> Result<u128, BoundError> {
    let two_n = exponent.checked_mul(2).ok_or(BoundError::Overflow)?;
    Ok(f_bound(two_n)? / 3)
}

/// f(2N): twists with field of Galois exponent N have order dividing this.
pub fn twist_order_bound(exponent: u64) -> Result<u128, BoundError> {
    f_bound(exponent.checked_mul(2).ok_or(BoundError::Overflow)?)
}

/// f(2N)/3 for N = 1..=count.
pub fn fig_k_values(count: u64) -> Result<Vec<u128>, BoundError> {
    (1..=count).map(charge_order_bound).collect()
}

/// How an observed central charge order compares with the bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeVerdict {
    pub order: u64,
    /// Exponent of the Galois group of K0 over Q.
    pub exponent: u64,
    /// The bound is doubled when K1 is strictly larger than K0.
    pub doubled: bool,
    pub bound: u128,
    pub divides: bool,
    pub attains: bool,
}

pub fn charge_verdict(order: u64, exponent: u64, k1_larger: bool) -> Result<ChargeVerdict, BoundError> {
    let base = charge_order_bound(exponent)?;
    let bound = if k1_larger { base * 2 } else { base };
    Ok(ChargeVerdict {
        order,
        exponent,
        doubled: k1_larger,
        bound,
        divides: bound % order as u128 == 0,
        attains: bound == order as u128,
    })
}
