//! Certified numerical evaluation of cyclotomic elements.
//!
//! Values are computed in binary fixed point with a tracked absolute error,
//! and the working precision is raised until the requested relative bound
//! holds.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::elem::CycElem;
use crate::ntheory::euler_phi;

/// A complex value `(re + i im) / 2^scale` with each part off by at most
/// `err / 2^scale`.
#[derive(Clone, Debug)]
pub struct ComplexApprox {
    re: BigInt,
    im: BigInt,
    scale: u64,
    err: BigInt,
}

impl ComplexApprox {
    fn ratio(&self, v: BigInt) -> BigRational {
        BigRational::new(v, BigInt::one() << self.scale)
    }

    pub fn re_lower(&self) -> BigRational {
        self.ratio(&self.re - &self.err)
    }

    pub fn re_upper(&self) -> BigRational {
        self.ratio(&self.re + &self.err)
    }

    pub fn im_lower(&self) -> BigRational {
        self.ratio(&self.im - &self.err)
    }

    pub fn im_upper(&self) -> BigRational {
        self.ratio(&self.im + &self.err)
    }

    pub fn re_f64(&self) -> f64 {
        scaled_to_f64(&self.re, self.scale)
    }

    pub fn im_f64(&self) -> f64 {
        scaled_to_f64(&self.im, self.scale)
    }

    /// Error bound on each component, as a float.
    pub fn error_bound(&self) -> f64 {
        scaled_to_f64(&self.err, self.scale)
    }

    /// Real part rounded to `digits` decimal places.
    pub fn re_decimal(&self, digits: usize) -> String {
        decimal(&self.re, self.scale, digits)
    }

    pub fn im_decimal(&self, digits: usize) -> String {
        decimal(&self.im, self.scale, digits)
    }
}

fn scaled_to_f64(v: &BigInt, scale: u64) -> f64 {
    let bits = v.bits();
    let drop = bits.saturating_sub(62);
    let top = (v >> drop).to_f64().unwrap_or(0.0);
    top * 2f64.powf(drop as f64 - scale as f64)
}

fn decimal(v: &BigInt, scale: u64, digits: usize) -> String {
    let p10 = num_traits::pow(BigInt::from(10), digits);
    let den = BigInt::one() << scale;
    let num = v * &p10;
    // round half away from zero
    let (q, r) = num.abs().div_rem(&den);
    let q = if &r * 2 >= den { q + 1 } else { q };
    let s = q.to_string();
    let s = if s.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
    } else {
        s
    };
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if v.sign() == Sign::Minus && !q_is_zero(&s) { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

fn q_is_zero(s: &str) -> bool {
    s.chars().all(|c| c == '0')
}

/// atan(1/k) * 2^w, error at most the number of terms.
fn atan_inv(k: u64, w: u64) -> (BigInt, u64) {
    let one = BigInt::one() << w;
    let k = BigInt::from(k);
    let k2 = &k * &k;
    let mut power = &one / &k;
    let mut sum = BigInt::zero();
    let mut i = 0u64;
    let mut terms = 0u64;
    while !power.is_zero() {
        let t = &power / BigInt::from(2 * i + 1);
        if i % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        power = &power / &k2;
        i += 1;
        terms += 2;
    }
    (sum, terms + 1)
}

/// pi * 2^w with error at most 2.
fn pi_fixed(w: u64) -> BigInt {
    let g = 32;
    let (a, _) = atan_inv(5, w + g);
    let (b, _) = atan_inv(239, w + g);
    let pi = a * 16 - b * 4;
    pi >> g
}

/// (cos t, sin t) * 2^w for t = 2 pi / n, error in ulps returned.
fn unit_root_fixed(n: u64, w: u64) -> (BigInt, BigInt, u64) {
    let one = BigInt::one() << w;
    let theta: BigInt = (pi_fixed(w) * 2) / BigInt::from(n);
    let theta2: BigInt = (&theta * &theta) >> w;
    let mut cos = BigInt::zero();
    let mut sin = BigInt::zero();
    let mut term_c = one.clone();
    let mut term_s = theta.clone();
    let mut k = 0u64;
    let mut steps = 0u64;
    while !term_c.is_zero() || !term_s.is_zero() {
        if k % 2 == 0 {
            cos += &term_c;
            sin += &term_s;
        } else {
            cos -= &term_c;
            sin -= &term_s;
        }
        term_c = ((&term_c * &theta2) >> w) / BigInt::from((2 * k + 1) * (2 * k + 2));
        term_s = ((&term_s * &theta2) >> w) / BigInt::from((2 * k + 2) * (2 * k + 3));
        k += 1;
        steps += 1;
    }
    (cos, sin, 4 * steps + 32)
}

/// Certified evaluation of `x` with relative error at most 2^(1 - precision).
pub fn to_float(x: &CycElem, precision: u32) -> ComplexApprox {
    let precision = precision.max(64) as u64;
    let n = x.conductor();
    if x.is_zero() {
        return ComplexApprox {
            re: BigInt::zero(),
            im: BigInt::zero(),
            scale: precision,
            err: BigInt::zero(),
        };
    }
    let log_n = 64 - n.leading_zeros() as u64;
    let mut w = precision + 2 * log_n + 64;
    loop {
        let approx = evaluate(x, w);
        let mag = approx.re.abs().max(approx.im.abs());
        let lhs = &approx.err << (precision - 1);
        if mag > approx.err && lhs <= &mag - &approx.err {
            return approx;
        }
        w += w.max(64);
    }
}

fn evaluate(x: &CycElem, w: u64) -> ComplexApprox {
    let n = x.conductor();
    let phi = euler_phi(n) as usize;
    let nums = x.numerators();
    let den = x.denominator();
    let one = BigInt::one() << w;
    let mut re = BigInt::zero();
    let mut im = BigInt::zero();
    let mut err_sum = BigInt::zero();
    if phi == 1 {
        re = (&nums[0] * &one) / den;
        return ComplexApprox {
            re,
            im,
            scale: w,
            err: BigInt::one(),
        };
    }
    let (c, s, e1) = unit_root_fixed(n, w);
    let mut pr = one.clone();
    let mut pi = BigInt::zero();
    let mut err_j: u64 = 0;
    for a in nums.iter().take(phi) {
        if !a.is_zero() {
            re += a * &pr;
            im += a * &pi;
            err_sum += a.abs() * BigInt::from(err_j);
        }
        let nr = (&pr * &c - &pi * &s) >> w;
        let ni = (&pr * &s + &pi * &c) >> w;
        pr = nr;
        pi = ni;
        err_j += 2 * e1 + 4;
    }
    let re = re.div_floor(den);
    let im = im.div_floor(den);
    let err = err_sum.div_ceil(den) + 2;
    ComplexApprox { re, im, scale: w, err }
}

/// Sign of the real part of `x`, decided with certified error bounds.
/// Zero only for an exactly zero real part.
pub fn real_sign(x: &CycElem) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let re = x.add_ref(&x.conj()).scale_rational(&BigRational::new(1.into(), 2.into()));
    if re.is_zero() {
        return Ordering::Equal;
    }
    if to_float(&re, 64).re_lower().is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Quick double-precision value of `x`, without certification.
pub fn approx_f64(x: &CycElem) -> (f64, f64) {
    let n = x.conductor() as f64;
    let bits = x.numerators().iter().map(|c| c.bits()).max().unwrap_or(0);
    let shift = bits.saturating_sub(60);
    let mut re = 0.0;
    let mut im = 0.0;
    for (j, c) in x.numerators().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let v = (c >> shift).to_f64().unwrap_or(0.0);
        let (s, co) = (std::f64::consts::TAU * j as f64 / n).sin_cos();
        re += v * co;
        im += v * s;
    }
    let scale = 2f64.powi(shift as i32) / scaled_to_f64(x.denominator(), 0);
    (re * scale, im * scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        let p = pi_fixed(200);
        let v = ComplexApprox {
            re: p,
            im: BigInt::zero(),
            scale: 200,
            err: BigInt::from(2),
        };
        assert_eq!(v.re_decimal(30), "3.141592653589793238462643383280");
    }

    #[test]
    fn sqrt_two() {
        let s = CycElem::from_int_terms(8, &[(1, 1), (7, 1)]);
        let v = to_float(&s, 128);
        assert_eq!(v.re_decimal(20), "1.41421356237309504880");
        assert!(v.im_upper().abs() <= v.im_lower().abs() + v.im_upper().abs());
    }
}
