//! Elements of cyclotomic fields in canonical power-basis form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::CycError;
use crate::kernel;
use crate::ntheory::{crt, euler_phi, gcd, inv_mod, lcm, prime_divisors, primitive_root_prime_power};

/// An element of Q(zeta_N), stored as integer numerators over a common
/// positive denominator on the power basis 1, zeta_N, ..., zeta_N^{phi(N)-1}.
///
/// The conductor is always the least m with the element in Q(zeta_m), so
/// structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycElem {
    conductor: u64,
    den: BigInt,
    num: Vec<BigInt>,
}

impl CycElem {
    // ---- constructors ----

    pub fn zero() -> Self {
        CycElem {
            conductor: 1,
            den: BigInt::one(),
            num: vec![BigInt::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        CycElem {
            conductor: 1,
            den: BigInt::one(),
            num: vec![v.into()],
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let mut e = CycElem {
            conductor: 1,
            den: r.denom().clone(),
            num: vec![r.numer().clone()],
        };
        e.normalize_content();
        e
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(&BigRational::new(n.into(), d.into()))
    }

    /// The sum over `terms` of `c * zeta_n^e`, divided by `den`.
    pub fn from_terms(n: u64, den: impl Into<BigInt>, terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let folded = kernel::fold_terms(n, terms);
        Self::from_folded(n, den.into(), folded)
    }

    /// Sum of integer `terms` (exponent, coefficient) of zeta_n.
    pub fn from_int_terms(n: u64, terms: &[(i64, i64)]) -> Self {
        Self::from_terms(n, 1, terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    /// Build from a dense vector indexed by exponents modulo n (length n).
    pub fn from_folded(n: u64, den: BigInt, folded: Vec<BigInt>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert_eq!(folded.len() as u64, n);
        canonicalize(n, den, folded)
    }

    /// Build from rational coordinates on the power basis of zeta_n.
    pub fn from_power_basis(n: u64, coeffs: &[BigRational]) -> Result<Self, CycError> {
        let phi = euler_phi(n) as usize;
        if coeffs.len() != phi {
            return Err(CycError::Invalid(format!(
                "expected {phi} coefficients for conductor {n}, got {}",
                coeffs.len()
            )));
        }
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut folded = vec![BigInt::zero(); n as usize];
        for (j, c) in coeffs.iter().enumerate() {
            folded[j] = c.numer() * (&den / c.denom());
        }
        Ok(Self::from_folded(n, den, folded))
    }

    // ---- accessors ----

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    /// Rational coordinates on the power basis of zeta_conductor.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.num[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.num[0] == self.den
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        (self.conductor == 1).then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    /// True when every coordinate is an integer.
    pub fn has_integral_coords(&self) -> bool {
        self.den.is_one()
    }

    // ---- arithmetic ----

    /// Numerators at a multiple `m` of the conductor, reduced mod Phi_m.
    pub(crate) fn numerators_at(&self, m: u64) -> Vec<BigInt> {
        if m == self.conductor {
            return self.num.clone();
        }
        debug_assert_eq!(m % self.conductor, 0);
        let step = (m / self.conductor) as usize;
        let mut folded = vec![BigInt::zero(); m as usize];
        for (j, c) in self.num.iter().enumerate() {
            folded[(j * step) % m as usize] = c.clone();
        }
        kernel::reduce(m, folded)
    }

    pub fn add_ref(&self, other: &CycElem) -> CycElem {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let m = lcm(self.conductor, other.conductor);
        let den = self.den.lcm(&other.den);
        let fa = &den / &self.den;
        let fb = &den / &other.den;
        let a = self.numerators_at(m);
        let b = other.numerators_at(m);
        let mut folded = vec![BigInt::zero(); m as usize];
        for (j, (x, y)) in a.iter().zip(b.iter()).enumerate() {
            folded[j] = x * &fa + y * &fb;
        }
        canonicalize(m, den, folded)
    }

    pub fn mul_ref(&self, other: &CycElem) -> CycElem {
        if self.is_zero() || other.is_zero() {
            return CycElem::zero();
        }
        if self.conductor == 1 {
            return other.scale_rational(&self.to_rational().unwrap());
        }
        if other.conductor == 1 {
            return self.scale_rational(&other.to_rational().unwrap());
        }
        let m = lcm(self.conductor, other.conductor);
        let a = self.numerators_at(m);
        let b = other.numerators_at(m);
        let prod = kernel::mul(m, &a, &b);
        let mut folded = prod;
        folded.resize(m as usize, BigInt::zero());
        canonicalize(m, &self.den * &other.den, folded)
    }

    pub fn neg_ref(&self) -> CycElem {
        CycElem {
            conductor: self.conductor,
            den: self.den.clone(),
            num: self.num.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub_ref(&self, other: &CycElem) -> CycElem {
        self.add_ref(&other.neg_ref())
    }

    pub fn scale_rational(&self, r: &BigRational) -> CycElem {
        if r.is_zero() {
            return CycElem::zero();
        }
        let mut e = CycElem {
            conductor: self.conductor,
            den: &self.den * r.denom(),
            num: self.num.iter().map(|c| c * r.numer()).collect(),
        };
        e.normalize_content();
        e
    }

    pub fn scale_int(&self, k: i64) -> CycElem {
        self.scale_rational(&BigRational::from_integer(k.into()))
    }

    pub fn square(&self) -> CycElem {
        self.mul_ref(self)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm with the
    /// cyclotomic polynomial over Q.
    pub fn inv(&self) -> Result<CycElem, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(CycElem::from_rational(&r.recip()));
        }
        let n = self.conductor;
        let phi_poly: Vec<BigRational> = crate::cpoly::cyclotomic_poly(n)
            .coeffs
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        let a: Vec<BigRational> = self.coeffs();
        let s = qpoly::inverse_mod(&a, &phi_poly).ok_or(CycError::DivisionByZero)?;
        CycElem::from_power_basis(n, &s)
    }

    pub fn div_ref(&self, other: &CycElem) -> Result<CycElem, CycError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<CycElem, CycError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = CycElem::one();
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_ref(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.square();
            }
        }
        Ok(acc)
    }

    // ---- Galois action ----

    /// The automorphism zeta -> zeta^l, for l a unit modulo the conductor.
    pub fn galois(&self, l: i64) -> Result<CycElem, CycError> {
        let n = self.conductor;
        let lr = crate::ntheory::residue(l, n);
        if gcd(lr, n) != 1 && n != 1 {
            return Err(CycError::NotAUnit { unit: l, modulus: n });
        }
        Ok(self.galois_unchecked(lr))
    }

    pub(crate) fn galois_unchecked(&self, l: u64) -> CycElem {
        let n = self.conductor;
        if n == 1 || l % n == 1 {
            return self.clone();
        }
        let mut folded = vec![BigInt::zero(); n as usize];
        for (j, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                folded[((j as u128 * l as u128) % n as u128) as usize] = c.clone();
            }
        }
        CycElem {
            conductor: n,
            den: self.den.clone(),
            num: kernel::reduce(n, folded),
        }
    }

    /// Exact test of sigma_l(x) = x, for l a unit modulo the conductor.
    pub(crate) fn is_fixed_by(&self, l: u64) -> bool {
        fixed_by(self.conductor, &self.num, l)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> CycElem {
        self.galois_unchecked(self.conductor.saturating_sub(1).max(1))
    }

    pub fn is_real(&self) -> bool {
        self.conductor <= 2 || self.is_fixed_by(self.conductor - 1)
    }

    fn normalize_content(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            *self = CycElem::zero();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            self.den = &self.den / &g;
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
        }
    }
}

fn fixed_by(n: u64, num: &[BigInt], l: u64) -> bool {
    if n <= 2 || l % n == 1 {
        return true;
    }
    let mut w = vec![BigInt::zero(); n as usize];
    for (j, c) in num.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        w[((j as u128 * l as u128) % n as u128) as usize] += c;
        w[j] -= c;
    }
    kernel::is_zero_mod(n, w)
}

/// Rewrite a folded vector at n = 2h (h odd) as one at h.
fn halve(n: u64, folded: &[BigInt]) -> Vec<BigInt> {
    let h = n / 2;
    let mut out = vec![BigInt::zero(); h as usize];
    let step = (h + 1) / 2;
    for (j, c) in folded.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let k = ((j as u64 % h) * step % h) as usize;
        if j % 2 == 0 {
            out[k] += c;
        } else {
            out[k] -= c;
        }
    }
    out
}

/// Full canonicalization: reduce, clear content, minimize the conductor.
pub(crate) fn canonicalize(mut n: u64, den: BigInt, mut folded: Vec<BigInt>) -> CycElem {
    if n % 4 == 2 {
        folded = halve(n, &folded);
        n /= 2;
    }
    let num = kernel::reduce(n, folded);
    let mut e = CycElem { conductor: n, den, num };
    e.normalize_content();
    if e.conductor == 1 {
        return e;
    }
    minimize_conductor(e)
}

fn minimize_conductor(mut e: CycElem) -> CycElem {
    'outer: loop {
        let n = e.conductor;
        if n == 1 {
            return e;
        }
        for p in prime_divisors(n) {
            let m = n / p;
            if n % (p * p) == 0 {
                let clean = e
                    .num
                    .iter()
                    .enumerate()
                    .all(|(j, c)| j as u64 % p == 0 || c.is_zero());
                if clean {
                    let mut folded = vec![BigInt::zero(); m as usize];
                    for (j, c) in e.num.iter().enumerate() {
                        if j as u64 % p == 0 {
                            folded[j / p as usize] = c.clone();
                        }
                    }
                    e = canonical_step(m, e.den.clone(), folded);
                    continue 'outer;
                }
            } else {
                let g = crt(1, m, primitive_root_prime_power(p, 1), p);
                if fixed_by(n, &e.num, g) {
                    let b = inv_mod(p % m.max(1), m).unwrap_or(0);
                    let mut folded = vec![BigInt::zero(); m as usize];
                    for (j, c) in e.num.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let k = if m == 1 { 0 } else { ((j as u64 % m) * b % m) as usize };
                        if j as u64 % p == 0 {
                            folded[k] += c * BigInt::from(p - 1);
                        } else {
                            folded[k] -= c;
                        }
                    }
                    e = canonical_step(m, &e.den * BigInt::from(p - 1), folded);
                    continue 'outer;
                }
            }
        }
        return e;
    }
}

fn canonical_step(mut n: u64, den: BigInt, mut folded: Vec<BigInt>) -> CycElem {
    if n % 4 == 2 {
        folded = halve(n, &folded);
        n /= 2;
    }
    let num = kernel::reduce(n, folded);
    let mut e = CycElem { conductor: n, den, num };
    e.normalize_content();
    e
}

/// Polynomial helpers over Q used by inversion.
mod qpoly {
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn trim(p: &mut Vec<BigRational>) {
        while p.len() > 1 && p.last().map_or(false, Zero::is_zero) {
            p.pop();
        }
    }

    fn degree(p: &[BigRational]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }

    fn divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let db = degree(b).expect("nonzero divisor");
        let mut r = a.to_vec();
        let mut q = vec![BigRational::zero(); a.len().saturating_sub(db).max(1)];
        let lead = b[db].clone();
        while let Some(dr) = degree(&r) {
            if dr < db {
                break;
            }
            let c = &r[dr] / &lead;
            let shift = dr - db;
            for (i, bi) in b[..=db].iter().enumerate() {
                if !bi.is_zero() {
                    r[shift + i] = &r[shift + i] - &c * bi;
                }
            }
            q[shift] = c;
        }
        trim(&mut r);
        (q, r)
    }

    fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = &out[i + j] + x * y;
                }
            }
        }
        out
    }

    fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, x) in a.iter().enumerate() {
            out[i] = x.clone();
        }
        for (i, y) in b.iter().enumerate() {
            out[i] = &out[i] - y;
        }
        trim(&mut out);
        out
    }

    /// u with u * a = 1 modulo m, reduced below deg m; None if not coprime.
    pub fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
        let dm = degree(m)?;
        let mut r0 = m.to_vec();
        let mut r1 = a.to_vec();
        trim(&mut r1);
        let mut s0 = vec![BigRational::zero()];
        let mut s1 = vec![BigRational::one()];
        loop {
            let d1 = degree(&r1)?;
            if d1 == 0 {
                let c = r1[0].clone();
                let mut u: Vec<BigRational> = s1.iter().map(|x| x / &c).collect();
                let (_, rem) = divmod(&u, m);
                u = rem;
                u.resize(dm, BigRational::zero());
                return Some(u);
            }
            let (q, r) = divmod(&r0, &r1);
            let s2 = sub(&s0, &mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            // keep the remainder monic to limit coefficient growth
            if let Some(d) = degree(&r1) {
                let lead = r1[d].clone();
                r1.iter_mut().for_each(|x| *x = &*x / &lead);
                s1.iter_mut().for_each(|x| *x = &*x / &lead);
            } else {
                return None;
            }
        }
    }
}

// ---- operator sugar ----

impl Add for &CycElem {
    type Output = CycElem;
    fn add(self, rhs: &CycElem) -> CycElem {
        self.add_ref(rhs)
    }
}

impl Add for CycElem {
    type Output = CycElem;
    fn add(self, rhs: CycElem) -> CycElem {
        self.add_ref(&rhs)
    }
}

impl Sub for &CycElem {
    type Output = CycElem;
    fn sub(self, rhs: &CycElem) -> CycElem {
        self.sub_ref(rhs)
    }
}

impl Sub for CycElem {
    type Output = CycElem;
    fn sub(self, rhs: CycElem) -> CycElem {
        self.sub_ref(&rhs)
    }
}

impl Mul for &CycElem {
    type Output = CycElem;
    fn mul(self, rhs: &CycElem) -> CycElem {
        self.mul_ref(rhs)
    }
}

impl Mul for CycElem {
    type Output = CycElem;
    fn mul(self, rhs: CycElem) -> CycElem {
        self.mul_ref(&rhs)
    }
}

impl Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        self.neg_ref()
    }
}

impl Neg for CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        self.neg_ref()
    }
}

impl std::iter::Sum for CycElem {
    fn sum<I: Iterator<Item = CycElem>>(iter: I) -> CycElem {
        iter.fold(CycElem::zero(), |a, b| a.add_ref(&b))
    }
}

impl From<i64> for CycElem {
    fn from(v: i64) -> Self {
        CycElem::from_integer(v)
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = BigRational::new(c.clone(), self.den.clone());
            let (sign, mag) = if r.is_negative() { ("-", -r) } else { ("+", r) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let n = self.conductor;
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z{n}")?,
                (1, false) => write!(f, "{mag}*z{n}")?,
                (_, true) => write!(f, "z{n}^{j}")?,
                (_, false) => write!(f, "{mag}*z{n}^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElem({self})")
    }
}
