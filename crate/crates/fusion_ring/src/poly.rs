//! Dense univariate polynomials over Z and Q, characteristic polynomials
//! and real-root isolation by Sturm sequences.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer polynomial, constant term first, no trailing zeros (zero is `[]`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().map_or(false, Zero::is_zero) {
            c.pop();
        }
        IntPoly(c)
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn lead(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        IntPoly(self.0.iter().map(|c| c / &g).collect())
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.0.iter().enumerate() {
            out[i] -= b;
        }
        IntPoly::new(out)
    }

    /// Exact division over Z, if `other` divides `self`.
    pub fn div_exact(&self, other: &IntPoly) -> Option<IntPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::default());
        }
        if self.degree() < other.degree() {
            return None;
        }
        let d = other.degree();
        let lc = other.lead();
        let mut rem = self.0.clone();
        let mut q = vec![BigInt::zero(); self.degree() - d + 1];
        for i in (0..q.len()).rev() {
            let c = &rem[i + d];
            if c.is_zero() {
                continue;
            }
            let (qi, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in other.0.iter().enumerate() {
                rem[i + j] -= &qi * b;
            }
            q[i] = qi;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.0
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn to_rational(&self) -> RatPoly {
        RatPoly::new(
            self.0
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// gcd over Q, returned primitive.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        self.to_rational().gcd(&other.to_rational()).to_primitive_int()
    }

    /// Square-free part (product of the distinct irreducible factors).
    pub fn squarefree_part(&self) -> IntPoly {
        if self.degree() == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.primitive()
            .to_rational()
            .div_rem(&g.to_rational())
            .0
            .to_primitive_int()
    }

    /// Monic-ness test.
    pub fn is_monic(&self) -> bool {
        self.lead().is_one()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Rational polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RatPoly(pub Vec<BigRational>);

impl RatPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().map_or(false, Zero::is_zero) {
            c.pop();
        }
        RatPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (RatPoly::default(), self.clone());
        }
        let lc = d.0[dd].clone();
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.0.iter().enumerate() {
                r[i + j] = &r[i + j] - &c * b;
            }
            q[i] = c;
        }
        (RatPoly::new(q), RatPoly::new(r))
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::default();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn add_constant(&self, c: &BigRational) -> RatPoly {
        let mut v = self.0.clone();
        if v.is_empty() {
            v.push(BigRational::zero());
        }
        v[0] = &v[0] + c;
        RatPoly::new(v)
    }

    pub fn monic(&self) -> RatPoly {
        match self.0.last() {
            None => self.clone(),
            Some(lc) => RatPoly(self.0.iter().map(|c| c / lc).collect()),
        }
    }

    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn to_primitive_int(&self) -> IntPoly {
        let den = self.0.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        IntPoly::new(
            self.0
                .iter()
                .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
                .collect(),
        )
        .primitive()
    }
}

/// Characteristic polynomial det(xI - A) by the division-free Berkowitz
/// algorithm.
pub fn charpoly(a: &[Vec<i64>]) -> IntPoly {
    let n = a.len();
    if n == 0 {
        return IntPoly::from_i64(&[1]);
    }
    let big: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    // coefficients, highest degree first
    let mut vect: Vec<BigInt> = vec![BigInt::one(), -big[0][0].clone()];
    for r in 1..n {
        let row: Vec<BigInt> = big[r][..r].to_vec();
        let mut col: Vec<BigInt> = (0..r).map(|i| big[i][r].clone()).collect();
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-big[r][r].clone());
        for _ in 0..r {
            let dot: BigInt = row.iter().zip(col.iter()).map(|(x, y)| x * y).sum();
            t.push(-dot);
            // col <- M col, M the leading r x r block
            col = (0..r)
                .map(|i| (0..r).map(|j| &big[i][j] * &col[j]).sum())
                .collect();
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, v) in vect.iter().enumerate() {
                if i >= j {
                    *slot += &t[i - j] * v;
                }
            }
        }
        vect = next;
    }
    vect.reverse();
    IntPoly::new(vect)
}

/// Sturm sequence of a square-free polynomial.
pub struct Sturm {
    chain: Vec<RatPoly>,
}

impl Sturm {
    pub fn new(p: &IntPoly) -> Self {
        let p0 = p.to_rational();
        let p1 = p.derivative().to_rational();
        let mut chain = vec![p0, p1];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            // scale by a positive constant to keep coefficients small
            let lc = r.0.last().unwrap().abs();
            let r = RatPoly(r.0.iter().map(|c| -c / &lc).collect());
            chain.push(r);
        }
        Sturm { chain }
    }

    fn sign_changes(&self, x: &BigRational) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for p in &self.chain {
            let v = p.eval(x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.sign_changes(a).saturating_sub(self.sign_changes(b))
    }
}

/// A bound B with every real root in (-B, B).
pub fn root_bound(p: &IntPoly) -> BigRational {
    let lc = p.lead().abs();
    let m = p.0[..p.0.len().saturating_sub(1)]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    BigRational::new(m + &lc, lc) + BigRational::one()
}

/// Isolating interval (a, b] for the largest real root of a square-free
/// polynomial, with b - a <= 2^-bits; None if there is no real root.
pub fn isolate_largest_root(p: &IntPoly, bits: u32) -> Option<(BigRational, BigRational)> {
    let st = Sturm::new(p);
    let b = root_bound(p);
    let a = -b.clone();
    let total = st.count(&a, &b);
    if total == 0 {
        return None;
    }
    let (mut lo, mut hi) = (a, b);
    let width = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let two = BigRational::from_integer(2.into());
    // invariant: exactly one root in (lo, hi] and it is the largest
    loop {
        let count = st.count(&lo, &hi);
        if count == 1 && &hi - &lo <= width {
            return Some((lo, hi));
        }
        let mid = (&lo + &hi) / &two;
        if st.count(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Refine an isolating interval (a, b] of a square-free polynomial.
pub fn refine(p: &IntPoly, mut lo: BigRational, mut hi: BigRational, bits: u32) -> (BigRational, BigRational) {
    let st = Sturm::new(p);
    let width = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let two = BigRational::from_integer(2.into());
    while &hi - &lo > width {
        let mid = (&lo + &hi) / &two;
        if st.count(&mid, &hi) == 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Isolating intervals of all real roots, ascending.
pub fn isolate_all_roots(p: &IntPoly, bits: u32) -> Vec<(BigRational, BigRational)> {
    let st = Sturm::new(p);
    let b = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    let two = BigRational::from_integer(2.into());
    let width = BigRational::new(BigInt::one(), BigInt::one() << bits);
    while let Some((lo, hi)) = stack.pop() {
        let c = st.count(&lo, &hi);
        if c == 0 {
            continue;
        }
        if c == 1 && &hi - &lo <= width {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / &two;
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
