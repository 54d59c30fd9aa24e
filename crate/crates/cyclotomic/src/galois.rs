//! Galois automorphisms zeta -> zeta^l and stabilizer computation.

use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::elem::CycElem;
use crate::error::CycError;
use crate::ntheory::{gcd, is_subgroup, residue, subgroup_generators, unit_residue, units};

/// The automorphism of Q(zeta_N) sending zeta_N to zeta_N^unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaloisElement {
    modulus: u64,
    unit: u64,
}

impl GaloisElement {
    pub fn new(modulus: u64, unit: i64) -> Result<Self, CycError> {
        if modulus == 0 {
            return Err(CycError::Invalid("modulus must be positive".into()));
        }
        let r = residue(unit, modulus);
        if modulus > 1 && gcd(r, modulus) != 1 {
            return Err(CycError::NotAUnit { unit, modulus });
        }
        Ok(GaloisElement {
            modulus,
            unit: unit_residue(r, modulus),
        })
    }

    pub fn identity(modulus: u64) -> Self {
        GaloisElement {
            modulus,
            unit: unit_residue(1, modulus),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn unit(&self) -> u64 {
        self.unit
    }

    pub fn compose(&self, other: &GaloisElement) -> Result<GaloisElement, CycError> {
        if self.modulus != other.modulus {
            return Err(CycError::ModulusMismatch {
                modulus: self.modulus,
                conductor: other.modulus,
            });
        }
        let u = crate::ntheory::mul_mod(self.unit, other.unit, self.modulus.max(1));
        Ok(GaloisElement {
            modulus: self.modulus,
            unit: unit_residue(u, self.modulus),
        })
    }

    /// Apply to `x`; the modulus must be a multiple of the conductor of `x`.
    pub fn apply(&self, x: &CycElem) -> Result<CycElem, CycError> {
        let c = x.conductor();
        if self.modulus % c != 0 {
            return Err(CycError::ModulusMismatch {
                modulus: self.modulus,
                conductor: c,
            });
        }
        Ok(x.galois_unchecked(self.unit % c.max(1)))
    }
}

pub fn galois_apply(sigma: &GaloisElement, x: &CycElem) -> Result<CycElem, CycError> {
    sigma.apply(x)
}

/// Double-precision values of every conjugate sigma_l(x) for l in `ls`,
/// with a bound on the absolute error of each, in the same scaled units.
fn numeric_conjugates(x: &CycElem, ls: &[u64]) -> (Vec<(f64, f64)>, f64) {
    let n = x.conductor();
    let nums = x.numerators();
    let bits = nums.iter().map(|c| c.bits()).max().unwrap_or(0);
    let shift = bits.saturating_sub(60);
    let coeffs: Vec<(usize, f64)> = nums
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| {
            let s: BigInt = c >> shift;
            (j, s.to_f64().unwrap_or(0.0))
        })
        .collect();
    let table: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let (s, c) = (TAU * k as f64 / n as f64).sin_cos();
            (c, s)
        })
        .collect();
    let abs_sum: f64 = coeffs.iter().map(|(_, c)| c.abs()).sum();
    let terms = coeffs.len() as f64;
    // truncation of the shifted numerators contributes at most 1 per term
    let err = (terms + 8.0) * 16.0 * f64::EPSILON * abs_sum + if shift > 0 { terms + 1.0 } else { 0.0 };
    let vals = ls
        .iter()
        .map(|&l| {
            let mut re = 0.0;
            let mut im = 0.0;
            for &(j, c) in &coeffs {
                let k = ((j as u128 * l as u128) % n as u128) as usize;
                re += c * table[k].0;
                im += c * table[k].1;
            }
            (re, im)
        })
        .collect();
    (vals, err)
}

/// The subgroup { l : sigma_l(x) = x } of (Z/NZ)^x, N the conductor of `x`,
/// as a sorted residue list.
///
/// A floating-point screen proposes candidates (it never rejects a true
/// fixer); every reported element is then confirmed exactly.
pub fn stabilizer_of(x: &CycElem) -> Vec<u64> {
    let n = x.conductor();
    let all = units(n);
    if x.is_rational() {
        return all;
    }
    let (vals, err) = numeric_conjugates(x, &all);
    let idx1 = all.binary_search(&1).unwrap();
    let (r1, i1) = vals[idx1];
    let tol = 2.0 * err;
    let cand: Vec<u64> = all
        .iter()
        .zip(vals.iter())
        .filter(|(_, &(re, im))| (re - r1).abs() <= tol && (im - i1).abs() <= tol)
        .map(|(&l, _)| l)
        .collect();
    if is_subgroup(&cand, n) {
        let gens = subgroup_generators(&cand, n);
        if gens.iter().all(|&g| x.is_fixed_by(g)) {
            return cand;
        }
    }
    cand.into_iter().filter(|&l| x.is_fixed_by(l)).collect()
}

/// Exact stabilizer by testing every unit; slow reference used in tests.
pub fn stabilizer_exhaustive(x: &CycElem) -> Vec<u64> {
    units(x.conductor())
        .into_iter()
        .filter(|&l| x.is_fixed_by(l))
        .collect()
}

/// Galois conjugates of `x` (one per coset of the stabilizer), as f64 pairs.
pub fn conjugates_f64(x: &CycElem) -> Vec<(f64, f64)> {
    let n = x.conductor();
    let stab = stabilizer_of(x);
    let mut reps = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for l in units(n) {
        if seen.contains(&l) {
            continue;
        }
        reps.push(l);
        for &s in &stab {
            seen.insert(unit_residue(crate::ntheory::mul_mod(l, s, n.max(1)), n));
        }
    }
    let (vals, _) = numeric_conjugates(x, &reps);
    let bits = x.numerators().iter().map(|c| c.bits()).max().unwrap_or(0);
    let shift = bits.saturating_sub(60) as i32;
    let den = x.denominator().to_f64().unwrap_or(f64::INFINITY);
    let scale = 2f64.powi(shift) / den;
    vals.into_iter().map(|(a, b)| (a * scale, b * scale)).collect()
}

/// True when every conjugate of `x` is real.
pub fn is_totally_real(x: &CycElem) -> bool {
    if !x.is_real() {
        return false;
    }
    // the field generated by a real element of an abelian extension is Galois,
    // so one real conjugate makes all of them real
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two_stabilizer() {
        let s = CycElem::from_int_terms(8, &[(1, 1), (7, 1)]);
        assert_eq!(stabilizer_of(&s), vec![1, 7]);
    }

    #[test]
    fn composition() {
        let a = GaloisElement::new(5, 2).unwrap();
        let z = CycElem::from_int_terms(5, &[(1, 1)]);
        let twice = a.apply(&a.apply(&z).unwrap()).unwrap();
        assert_eq!(twice, CycElem::from_int_terms(5, &[(4, 1)]));
        assert_eq!(a.compose(&a).unwrap().unit(), 4);
    }

    #[test]
    fn rejects_non_unit() {
        assert!(GaloisElement::new(6, 3).is_err());
    }
}
