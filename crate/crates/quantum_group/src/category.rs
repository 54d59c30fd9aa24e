//! The categories C(g, k): alcove, quantum dimensions and dimension fields.

use cyclotomic::{root_of_unity, CycElem, SubfieldHandle};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::QgError;
use crate::lie::{build_algebra, AlgebraData, LieType, Weight};

#[derive(Clone, Debug)]
pub struct CategoryHandle {
    pub algebra: AlgebraData,
    pub level: i64,
    pub kappa: i64,
    /// exp(pi i / (m kappa)) as zeta_{2 m kappa}.
    pub q: CycElem,
}

impl CategoryHandle {
    pub fn new(letter: LieType, rank: usize, level: i64) -> Result<Self, QgError> {
        Self::from_algebra(build_algebra(letter, rank)?, level)
    }

    pub fn from_algebra(algebra: AlgebraData, level: i64) -> Result<Self, QgError> {
        if level < 1 {
            return Err(QgError::BadLevel);
        }
        let kappa = level + algebra.h_dual;
        let q = root_of_unity(2 * (algebra.lacing_m * kappa) as u64, 1);
        Ok(CategoryHandle { algebra, level, kappa, q })
    }

    pub fn name(&self) -> String {
        format!("C({},{})", self.algebra.name(), self.level)
    }

    /// m * kappa; q has order twice this.
    pub fn mk(&self) -> i64 {
        self.algebra.lacing_m * self.kappa
    }

    pub fn in_alcove(&self, lambda: &[i64]) -> bool {
        lambda.len() == self.algebra.rank
            && lambda.iter().all(|&l| l >= 0)
            && self.algebra.level_of(lambda) <= self.level
    }

    pub fn weyl_alcove(&self) -> Vec<Weight> {
        let n = self.algebra.rank;
        let mut out = Vec::new();
        let mut cur = vec![0i64; n];
        fill(&self.algebra.comarks, self.level, 0, &mut cur, &mut out);
        out.sort();
        out
    }

    pub fn alcove_size(&self) -> u64 {
        alcove_size(&self.algebra, self.level)
    }

    /// Exponents `<alpha, lambda + rho>` over the positive roots.
    fn shifted_pairings(&self, lambda: &[i64]) -> Vec<i64> {
        let shifted: Vec<i64> = lambda.iter().map(|l| l + 1).collect();
        (0..self.algebra.num_positive_roots())
            .map(|r| self.algebra.root_pairing(r, &shifted))
            .collect()
    }

    /// The Weyl dimension polynomial: qdim(lambda) = q^(-shift) R(q^2) with
    /// R = prod (1 - y^a) / prod (1 - y^b), exact in Z[y].
    pub fn principal_specialization(&self, lambda: &[i64]) -> (Vec<BigInt>, i64) {
        let a = self.shifted_pairings(lambda);
        let b = self.shifted_pairings(&vec![0; self.algebra.rank]);
        let top: i64 = a.iter().sum();
        let mut p = vec![BigInt::zero(); top as usize + 1];
        p[0] = BigInt::one();
        let mut deg = 0usize;
        for &e in &a {
            let e = e as usize;
            deg += e;
            for i in (e..=deg).rev() {
                let v = p[i - e].clone();
                p[i] -= v;
            }
        }
        for &e in &b {
            let e = e as usize;
            for i in e..p.len() {
                let v = p[i - e].clone();
                p[i] += v;
            }
        }
        let low: i64 = b.iter().sum();
        let keep = (top - low) as usize + 1;
        debug_assert!(p[keep..].iter().all(Zero::is_zero), "Weyl quotient is not a polynomial");
        p.truncate(keep);
        (p, top - low)
    }

    /// The quantum Weyl dimension formula at any weight, alcove or not.
    pub fn weyl_dimension(&self, lambda: &[i64]) -> CycElem {
        let (coeffs, shift) = self.principal_specialization(lambda);
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (2 * j as i64 - shift, c));
        CycElem::from_terms(2 * self.mk() as u64, 1, terms)
    }

    pub fn qdim(&self, lambda: &[i64]) -> Result<CycElem, QgError> {
        if !self.in_alcove(lambda) {
            return Err(QgError::OutsideAlcove(lambda.to_vec()));
        }
        Ok(self.weyl_dimension(lambda))
    }

    /// The Galois conjugate sigma_l(qdim(lambda)) in floating point.
    pub fn qdim_conjugate_f64(&self, lambda: &[i64], l: i64) -> f64 {
        let a = self.shifted_pairings(lambda);
        let b = self.shifted_pairings(&vec![0; self.algebra.rank]);
        let t = std::f64::consts::PI * l as f64 / self.mk() as f64;
        a.iter()
            .zip(&b)
            .map(|(&x, &y)| (t * x as f64).sin() / (t * y as f64).sin())
            .product()
    }

    pub fn qdim_f64(&self, lambda: &[i64]) -> f64 {
        self.qdim_conjugate_f64(lambda, 1)
    }

    /// prod over positive roots of 4 sin^2(pi <alpha,rho> / (m kappa)).
    /// The global dimension is a rational multiple of its inverse.
    pub fn weyl_denominator_square(&self) -> CycElem {
        let b = self.shifted_pairings(&vec![0; self.algebra.rank]);
        let total: i64 = b.iter().sum();
        let mut p = vec![BigInt::zero(); 2 * total as usize + 1];
        p[0] = BigInt::one();
        let mut deg = 0usize;
        for &e in b.iter().chain(b.iter()) {
            let e = e as usize;
            deg += e;
            for i in (e..=deg).rev() {
                let v = p[i - e].clone();
                p[i] -= v;
            }
        }
        // -(q^b - q^-b)^2 = -q^(-2b) (1 - q^(2b))^2
        let sign = if b.len() % 2 == 0 { 1 } else { -1 };
        let terms = p
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (2 * j as i64 - 2 * total, c * sign));
        CycElem::from_terms(2 * self.mk() as u64, 1, terms)
    }

    /// Sum of squared quantum dimensions over the alcove, exactly.
    pub fn fpdim_total_category(&self) -> CycElem {
        self.weyl_alcove().iter().map(|l| self.weyl_dimension(l).square()).sum()
    }

    pub fn k0_field(&self) -> SubfieldHandle {
        SubfieldHandle::generated_by(&self.weyl_denominator_square())
    }

    /// K1 from the fundamental weights: the Weyl formula is a ring map on
    /// the representation ring, which the fundamental characters generate,
    /// and outside the alcove it returns plus or minus an alcove value or 0.
    pub fn k1_field(&self) -> SubfieldHandle {
        let mut acc = SubfieldHandle::rationals();
        for i in 0..self.algebra.rank {
            let d = self.weyl_dimension(&self.algebra.fundamental_weight(i));
            if !acc.contains(&d) {
                acc = acc.join(&SubfieldHandle::generated_by(&d));
            }
        }
        acc
    }

    /// K1 as the join over every alcove weight.
    pub fn k1_field_exhaustive(&self) -> SubfieldHandle {
        let mut acc = SubfieldHandle::rationals();
        for l in self.weyl_alcove() {
            let d = self.weyl_dimension(&l);
            if !acc.contains(&d) {
                acc = acc.join(&SubfieldHandle::generated_by(&d));
            }
        }
        acc
    }

    pub fn k_lambda(&self, lambda: &[i64]) -> Result<SubfieldHandle, QgError> {
        Ok(SubfieldHandle::generated_by(&self.qdim(lambda)?))
    }
}

fn fill(comarks: &[i64], budget: i64, i: usize, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
    if i == comarks.len() {
        out.push(cur.clone());
        return;
    }
    let mut l = 0;
    while l * comarks[i] <= budget {
        cur[i] = l;
        fill(comarks, budget - l * comarks[i], i + 1, cur, out);
        l += 1;
    }
    cur[i] = 0;
}

/// Number of alcove weights at level k, without enumerating them.
pub fn alcove_size(algebra: &AlgebraData, level: i64) -> u64 {
    let k = level.max(0) as usize;
    let mut ways = vec![0u64; k + 1];
    ways[0] = 1;
    for &c in &algebra.comarks {
        let c = c as usize;
        for s in c..=k {
            ways[s] = ways[s].saturating_add(ways[s - c]);
        }
    }
    ways.iter().fold(0u64, |a, &b| a.saturating_add(b))
}
