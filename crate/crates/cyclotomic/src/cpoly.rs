//! Cyclotomic polynomials with a process-wide memo cache.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::ntheory::prime_divisors;

/// Coefficients of a cyclotomic polynomial, constant term first, plus the
/// positions of its nonzero coefficients below the leading term.
#[derive(Debug)]
pub struct CycPoly {
    pub coeffs: Vec<i64>,
    pub sparse: Vec<(usize, i64)>,
}

impl CycPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

fn cache() -> &'static RwLock<HashMap<u64, Arc<CycPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<CycPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The n-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: u64) -> Arc<CycPoly> {
    assert!(n >= 1);
    if let Some(p) = cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let coeffs = compute(n);
    let sparse = coeffs[..coeffs.len() - 1]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    let poly = Arc::new(CycPoly { coeffs, sparse });
    cache().write().unwrap().insert(n, poly.clone());
    poly
}

fn compute(n: u64) -> Vec<i64> {
    let primes = prime_divisors(n);
    let rad: u64 = primes.iter().product();
    let mut p: Vec<i64> = vec![-1, 1];
    for &q in &primes {
        let stretched = stretch(&p, q as usize);
        p = div_exact(&stretched, &p);
    }
    stretch(&p, (n / rad.max(1)) as usize)
}

fn stretch(p: &[i64], k: usize) -> Vec<i64> {
    if k == 1 {
        return p.to_vec();
    }
    let mut out = vec![0i64; (p.len() - 1) * k + 1];
    for (i, &c) in p.iter().enumerate() {
        out[i * k] = c;
    }
    out
}

fn div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem: Vec<i128> = num.iter().map(|&c| c as i128).collect();
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd];
        q[i] = i64::try_from(c).expect("cyclotomic coefficient overflow");
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d as i128;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}
