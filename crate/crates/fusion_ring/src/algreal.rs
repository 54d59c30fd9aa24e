//! Real algebraic numbers given by a minimal polynomial and an isolating
//! interval, optionally with an exact cyclotomic form.

use std::cmp::Ordering;
use std::fmt;

use cyclotomic::{real_sign, CycElem};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::poly::{rational_to_f64, refine, IntPoly, Sturm};

/// Default isolating-interval width, as a power of two.
pub const DEFAULT_BITS: u32 = 64;

#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    minpoly: IntPoly,
    lo: BigRational,
    hi: BigRational,
    exact: Option<CycElem>,
}

impl AlgebraicReal {
    /// Root of the irreducible `minpoly` isolated by (lo, hi].
    pub fn new(minpoly: IntPoly, lo: BigRational, hi: BigRational) -> Self {
        debug_assert_eq!(Sturm::new(&minpoly).count(&lo, &hi), 1);
        AlgebraicReal {
            minpoly: minpoly.primitive(),
            lo,
            hi,
            exact: None,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        let v = BigRational::from_integer(n.into());
        AlgebraicReal {
            minpoly: IntPoly::from_i64(&[-n, 1]),
            lo: &v - BigRational::one(),
            hi: v,
            exact: Some(CycElem::from_integer(n)),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree()
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn exact(&self) -> Option<&CycElem> {
        self.exact.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    /// The value when rational.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.degree() != 1 {
            return None;
        }
        let c = self.minpoly.coeffs();
        Some(BigRational::new(-c[0].clone(), c[1].clone()))
    }

    pub fn is_one(&self) -> bool {
        self.to_rational().map_or(false, |r| r.is_one())
    }

    /// Shrink the isolating interval below width 2^-bits.
    pub fn refined(&self, bits: u32) -> Self {
        if let Some(r) = self.to_rational() {
            let w = BigRational::new(BigInt::one(), BigInt::one() << bits);
            return AlgebraicReal {
                lo: &r - w,
                hi: r,
                ..self.clone()
            };
        }
        let (lo, hi) = refine(&self.minpoly, self.lo.clone(), self.hi.clone(), bits);
        AlgebraicReal {
            lo,
            hi,
            ..self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(r) = self.to_rational() {
            return rational_to_f64(&r);
        }
        let r = self.refined(60);
        rational_to_f64(&((&r.lo + &r.hi) / BigRational::from_integer(2.into())))
    }

    /// Attach an exact cyclotomic form after checking it is this number.
    pub fn with_exact(mut self, x: CycElem) -> Option<Self> {
        if !self.matches(&x) {
            return None;
        }
        self.exact = Some(x);
        Some(self)
    }

    /// Exact test that `x` is a real root of the minimal polynomial lying
    /// in the isolating interval.
    pub fn matches(&self, x: &CycElem) -> bool {
        if !x.is_real() {
            return false;
        }
        if !eval_cyc(&self.minpoly, x).is_zero() {
            return false;
        }
        let lo = CycElem::from_rational(&self.lo);
        let hi = CycElem::from_rational(&self.hi);
        real_sign(&x.sub_ref(&lo)) == Ordering::Greater && real_sign(&hi.sub_ref(x)) != Ordering::Less
    }

    /// Rational lower bound check: value >= r.
    pub fn at_least(&self, r: &BigRational) -> bool {
        if let Some(v) = self.to_rational() {
            return &v >= r;
        }
        if &self.lo >= r {
            return true;
        }
        if &self.hi < r {
            return false;
        }
        // r sits inside (lo, hi]: the sign of the polynomial decides
        let st = Sturm::new(&self.minpoly);
        st.count(&self.lo, r) == 0
    }
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        if self.minpoly != other.minpoly {
            return false;
        }
        // same irreducible polynomial: compare via overlapping intervals
        let lo = if self.lo > other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi < other.hi { &self.hi } else { &other.hi };
        lo < hi && Sturm::new(&self.minpoly).count(lo, hi) == 1
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        write!(f, "{:.12} (root of {})", self.to_f64(), self.minpoly)
    }
}

/// Evaluate an integer polynomial at a cyclotomic number.
pub fn eval_cyc(p: &IntPoly, x: &CycElem) -> CycElem {
    let mut acc = CycElem::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul_ref(x).add_ref(&CycElem::from_integer(c.clone()));
    }
    acc
}
