use std::fmt;
use std::ops::Mul;

use cyclotomic::{root_of_unity, CycElem};
use num_integer::Integer;

/// exp(2 pi i num/den), stored reduced with 0 <= num < den.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let r = num.rem_euclid(den);
        let g = r.gcd(&den).max(1);
        RootOfUnity { num: (r / g) as u64, den: (den / g) as u64 }
    }

    pub fn one() -> Self {
        RootOfUnity { num: 0, den: 1 }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn inverse(&self) -> Self {
        Self::new(-(self.num as i64), self.den as i64)
    }

    pub fn pow(&self, e: i64) -> Self {
        let n = (self.num as i128 * e as i128).rem_euclid(self.den as i128) as i64;
        Self::new(n, self.den as i64)
    }

    pub fn to_cyc(&self) -> CycElem {
        root_of_unity(self.den, self.num as i64)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        let t = 2.0 * std::f64::consts::PI * self.num as f64 / self.den as f64;
        (t.cos(), t.sin())
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, o: RootOfUnity) -> RootOfUnity {
        let den = self.den.lcm(&o.den);
        let n = self.num * (den / self.den) + o.num * (den / o.den);
        RootOfUnity::new(n as i64, den as i64)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp(2 pi i {}/{})", self.num, self.den)
    }
}
