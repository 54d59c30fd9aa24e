//! Integer kernels on coefficient vectors: folding exponents modulo N,
//! convolution and reduction modulo the N-th cyclotomic polynomial.
//!
//! Every kernel first runs on checked `i128` and falls back to `BigInt`
//! when an intermediate overflows.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::cpoly::{cyclotomic_poly, CycPoly};

trait Coef: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// `self += a * b`; false on overflow.
    fn add_prod(&mut self, a: &Self, b: &Self) -> bool;
    /// `self -= a * s`; false on overflow.
    fn sub_small(&mut self, a: &Self, s: i64) -> bool;
}

impl Coef for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add_prod(&mut self, a: &Self, b: &Self) -> bool {
        match a.checked_mul(*b).and_then(|p| self.checked_add(p)) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn sub_small(&mut self, a: &Self, s: i64) -> bool {
        match a.checked_mul(s as i128).and_then(|p| self.checked_sub(p)) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
}

impl Coef for BigInt {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_prod(&mut self, a: &Self, b: &Self) -> bool {
        if !Zero::is_zero(a) && !Zero::is_zero(b) {
            *self += a * b;
        }
        true
    }
    fn sub_small(&mut self, a: &Self, s: i64) -> bool {
        *self -= a * s;
        true
    }
}

fn to_small(v: &[BigInt]) -> Option<Vec<i128>> {
    v.iter().map(|x| x.to_i64().map(|y| y as i128)).collect()
}

fn to_big(v: Vec<i128>) -> Vec<BigInt> {
    v.into_iter().map(BigInt::from).collect()
}

fn reduce_generic<C: Coef>(v: &mut Vec<C>, p: &CycPoly) -> bool {
    let d = p.degree();
    for i in (d..v.len()).rev() {
        if v[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut v[i], C::zero());
        let base = i - d;
        for &(k, pk) in &p.sparse {
            if !v[base + k].sub_small(&c, pk) {
                return false;
            }
        }
    }
    v.resize(d, C::zero());
    true
}

/// Reduce a coefficient vector (any length) modulo the n-th cyclotomic
/// polynomial; the result has length phi(n).
pub(crate) fn reduce(n: u64, v: Vec<BigInt>) -> Vec<BigInt> {
    let p = cyclotomic_poly(n);
    if let Some(mut small) = to_small(&v) {
        if reduce_generic(&mut small, &p) {
            return to_big(small);
        }
    }
    let mut big = v;
    reduce_generic(&mut big, &p);
    big
}

/// True if the vector represents zero in Q(zeta_n).
pub(crate) fn is_zero_mod(n: u64, v: Vec<BigInt>) -> bool {
    reduce(n, v).iter().all(Zero::is_zero)
}

fn convolve_generic<C: Coef>(a: &[C], b: &[C], n: usize) -> Option<Vec<C>> {
    let mut out = vec![C::zero(); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let mut k = i + j;
            if k >= n {
                k -= n;
            }
            if !out[k].add_prod(x, y) {
                return None;
            }
        }
    }
    Some(out)
}

/// Product of two power-basis vectors of Q(zeta_n), reduced.
pub(crate) fn mul(n: u64, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let len = n as usize;
    if let (Some(sa), Some(sb)) = (to_small(a), to_small(b)) {
        if let Some(mut prod) = convolve_generic(&sa, &sb, len) {
            if reduce_generic(&mut prod, &cyclotomic_poly(n)) {
                return to_big(prod);
            }
            return reduce(n, to_big(convolve_generic(&sa, &sb, len).unwrap()));
        }
    }
    let prod = convolve_generic(a, b, len).expect("bigint never overflows");
    reduce(n, prod)
}

/// Fold a list of (exponent, coefficient) terms into a dense vector of length n.
pub(crate) fn fold_terms(n: u64, terms: impl IntoIterator<Item = (i64, BigInt)>) -> Vec<BigInt> {
    let mut out = vec![<BigInt as Zero>::zero(); n as usize];
    for (e, c) in terms {
        let k = (e as i128).rem_euclid(n as i128) as usize;
        out[k] += c;
    }
    out
}
