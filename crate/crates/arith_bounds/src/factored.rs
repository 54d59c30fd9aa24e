use std::fmt;

use num_prime::nt_funcs::{factorize64, is_prime64};

use crate::bound::BoundError;

/// A positive integer as its prime factorization, primes ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactoredInteger {
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    pub fn new(n: u64) -> Result<Self, BoundError> {
        if n == 0 {
            return Err(BoundError::NotPositive);
        }
        let factors = factorize64(n).into_iter().map(|(p, e)| (p, e as u32)).collect();
        Ok(Self { factors })
    }

    /// From explicit (prime, exponent) pairs; they are checked and sorted.
    pub fn from_pairs(mut pairs: Vec<(u64, u32)>) -> Result<Self, BoundError> {
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(BoundError::BadFactorization(format!("prime {} repeated", w[0].0)));
            }
        }
        for &(p, e) in &pairs {
            if e == 0 || !is_prime64(p) {
                return Err(BoundError::BadFactorization(format!("{p}^{e} is not a prime power factor")));
            }
        }
        let out = Self { factors: pairs };
        out.value()?;
        Ok(out)
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn value(&self) -> Result<u64, BoundError> {
        self.factors
            .iter()
            .try_fold(1u64, |acc, &(p, e)| p.checked_pow(e).and_then(|q| acc.checked_mul(q)))
            .ok_or(BoundError::Overflow)
    }

    /// Exponent of `p` in the integer (0 if absent).
    pub fn valuation(&self, p: u64) -> u32 {
        self.factors.iter().find(|f| f.0 == p).map_or(0, |f| f.1)
    }

    pub fn prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.factors {
            let prev = out.clone();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                out.extend(prev.iter().map(|d| d * pk));
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}
