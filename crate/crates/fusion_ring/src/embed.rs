//! Exact cyclotomic forms of totally real algebraic integers.
//!
//! For a candidate conductor N the Galois action of (Z/N)^x on the roots of
//! the minimal polynomial f is recovered from Frobenius elements: for a prime
//! p = g (mod N) not dividing the discriminant, sigma_g(x) = h_g(x) where
//! h_g = X^p mod (f, p). The h_g are assembled by CRT over several such
//! primes and rational reconstruction. Knowing every conjugate numerically,
//! the coordinates N a_m = Tr(x zeta^-m) are integers and are recovered by
//! rounding. Every result is checked exactly before it is returned.

use std::collections::HashMap;
use std::f64::consts::PI;

use cyclotomic::ntheory::{euler_phi, generated_subgroup, is_prime_small, mul_mod, unit_group_generators};
use cyclotomic::{sqrt_integer, CycElem};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algreal::AlgebraicReal;
use crate::factor::modp;
use crate::poly::{isolate_all_roots, rational_to_f64, IntPoly, RatPoly};

/// Default upper limit for the conductor search.
pub const DEFAULT_CONDUCTOR_BOUND: u64 = 2000;

/// How to choose the conductor of the embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConductorChoice {
    /// Work inside Q(zeta_N) for this N only.
    Fixed(u64),
    /// Try conductors in increasing order up to this bound.
    SearchUpTo(u64),
}

impl Default for ConductorChoice {
    fn default() -> Self {
        ConductorChoice::SearchUpTo(DEFAULT_CONDUCTOR_BOUND)
    }
}

/// Cache of solved minimal polynomials: all real roots in exact form.
#[derive(Default)]
pub struct Embedder {
    choice: ConductorChoice,
    solved: HashMap<IntPoly, Option<Vec<CycElem>>>,
}

impl Embedder {
    pub fn new(choice: ConductorChoice) -> Self {
        Embedder {
            choice,
            solved: HashMap::new(),
        }
    }

    /// Exact form of `x`, or None when no cyclotomic form was found.
    pub fn embed(&mut self, x: &AlgebraicReal) -> Option<CycElem> {
        if let Some(r) = x.to_rational() {
            return Some(CycElem::from_rational(&r));
        }
        let f = x.minpoly().clone();
        let choice = self.choice;
        let roots = self
            .solved
            .entry(f.clone())
            .or_insert_with(|| embed_all_roots(&f, choice));
        roots.as_ref()?.iter().find(|c| x.matches(c)).cloned()
    }
}

/// Exact forms of all roots of the irreducible monic `f`, or None.
pub fn embed_all_roots(f: &IntPoly, choice: ConductorChoice) -> Option<Vec<CycElem>> {
    let d = f.degree();
    if d == 0 || !f.is_monic() {
        return None;
    }
    let fits = |x: &CycElem| match choice {
        ConductorChoice::Fixed(n) => n % x.conductor() == 0 || (n % 4 == 2 && (n / 2) % x.conductor() == 0),
        ConductorChoice::SearchUpTo(b) => x.conductor() <= b,
    };
    let c = f.coeffs();
    if d == 1 {
        let x = CycElem::from_integer(-c[0].clone());
        return fits(&x).then(|| vec![x]);
    }
    if d == 2 {
        // x^2 + b x + c, roots (-b +- sqrt(b^2 - 4c)) / 2
        let disc: BigInt = &c[1] * &c[1] - BigInt::from(4) * &c[0];
        let disc = disc.to_i64()?;
        if disc <= 0 {
            return None;
        }
        let s = sqrt_integer(disc);
        let b = CycElem::from_integer(-c[1].clone());
        let half = BigRational::new(1.into(), 2.into());
        let out = vec![
            b.sub_ref(&s).scale_rational(&half),
            b.add_ref(&s).scale_rational(&half),
        ];
        return fits(&out[0]).then_some(out);
    }
    let intervals = isolate_all_roots(f, 60);
    if intervals.len() != d {
        // an element of a real cyclotomic field is totally real
        return None;
    }
    let roots: Vec<f64> = intervals
        .iter()
        .map(|(lo, hi)| rational_to_f64(&((lo + hi) / BigRational::from_integer(2.into()))))
        .collect();
    let candidates: Vec<u64> = match choice {
        ConductorChoice::Fixed(n) => vec![if n % 4 == 2 { n / 2 } else { n }],
        ConductorChoice::SearchUpTo(b) => (3..=b)
            .filter(|&n| n % 4 != 2 && euler_phi(n) % (2 * d as u64) == 0)
            .collect(),
    };
    for n in candidates {
        if !splits_at_unit_class(f, n) {
            continue;
        }
        if let Some(vals) = solve_at_conductor(f, n, &roots) {
            let targets: Vec<AlgebraicReal> = intervals
                .iter()
                .map(|(lo, hi)| AlgebraicReal::new(f.clone(), lo.clone(), hi.clone()))
                .collect();
            if vals.iter().zip(targets.iter()).all(|(v, t)| t.matches(v)) {
                return Some(vals);
            }
        }
    }
    None
}

/// Primes p = residue (mod n), skipping those that divide the leading
/// coefficient or make f inseparable mod p.
fn good_primes<'a>(f: &'a IntPoly, residue: u64, n: u64) -> impl Iterator<Item = u64> + 'a {
    let start = if residue <= 1 { residue + n } else { residue };
    (0..)
        .map(move |t| start + t * n)
        .take_while(|&p| p < (1 << 31))
        .filter(|&p| p > 2 && is_prime_small(p))
        .filter(move |&p| {
            let fp = reduce(f, p);
            fp.len() == f.degree() + 1 && modp::gcd(&fp, &modp::derivative(&fp, p), p).len() == 1
        })
}

fn reduce(f: &IntPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    modp::trim(f.coeffs().iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

/// Necessary condition: f splits into linear factors modulo primes that
/// split completely in Q(zeta_n).
fn splits_at_unit_class(f: &IntPoly, n: u64) -> bool {
    good_primes(f, 1, n).take(6).all(|p| {
        let fp = reduce(f, p);
        let xp = modp::powmod(&vec![0, 1], p as u128, &fp, p);
        xp == vec![0, 1]
    })
}

fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// f(h) = 0 modulo f, over Q.
fn is_root_polynomial(f: &IntPoly, h: &RatPoly) -> bool {
    let fr = f.to_rational();
    let mut acc = RatPoly::default();
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(h).add_constant(&BigRational::from_integer(c.clone()));
        acc = acc.div_rem(&fr).1;
    }
    acc.is_zero()
}

/// The polynomial h with sigma_g(x) = h(x), recovered from Frobenius data.
fn galois_polynomial(f: &IntPoly, g: u64, n: u64) -> Option<RatPoly> {
    let d = f.degree();
    let mut modulus = BigInt::one();
    let mut residues = vec![BigInt::zero(); d];
    for (count, p) in good_primes(f, g, n).take(64).enumerate() {
        let fp = reduce(f, p);
        let mut hp = modp::powmod(&vec![0, 1], p as u128, &fp, p);
        hp.resize(d, 0);
        let pb = BigInt::from(p);
        // CRT: combine residues mod `modulus` with hp mod p
        let inv = {
            let e = modulus.mod_floor(&pb).extended_gcd(&pb);
            e.x.mod_floor(&pb)
        };
        for (r, &c) in residues.iter_mut().zip(hp.iter()) {
            let delta = ((BigInt::from(c) - &*r) * &inv).mod_floor(&pb);
            *r += &modulus * delta;
        }
        modulus *= &pb;
        if count < 1 {
            continue;
        }
        let rec: Option<Vec<BigRational>> = residues
            .iter()
            .map(|r| rational_reconstruct(r, &modulus))
            .collect();
        if let Some(coeffs) = rec {
            let h = RatPoly::new(coeffs);
            if is_root_polynomial(f, &h) {
                return Some(h);
            }
        }
    }
    None
}

fn eval_rat_f64(h: &RatPoly, x: f64) -> f64 {
    h.0.iter().rev().fold(0.0, |acc, c| acc * x + rational_to_f64(c))
}

/// Root permutation induced by h.
fn root_permutation(h: &RatPoly, roots: &[f64]) -> Option<Vec<usize>> {
    let scale = roots.iter().fold(1.0f64, |a, r| a.max(r.abs()));
    let mut perm = Vec::with_capacity(roots.len());
    for &r in roots {
        let y = eval_rat_f64(h, r);
        let (idx, dist) = roots
            .iter()
            .enumerate()
            .map(|(i, &s)| (i, (s - y).abs()))
            .min_by(|a, b| a.1.total_cmp(&b.1))?;
        if dist > 1e-6 * scale {
            return None;
        }
        perm.push(idx);
    }
    let mut seen = vec![false; roots.len()];
    for &i in &perm {
        if std::mem::replace(&mut seen[i], true) {
            return None;
        }
    }
    Some(perm)
}

fn solve_at_conductor(f: &IntPoly, n: u64, roots: &[f64]) -> Option<Vec<CycElem>> {
    let d = roots.len();
    let gens = unit_group_generators(n);
    let mut gen_perms = Vec::new();
    for &g in &gens {
        if g % n == 1 {
            gen_perms.push((g, (0..d).collect::<Vec<_>>()));
            continue;
        }
        let h = galois_polynomial(f, g, n)?;
        gen_perms.push((g, root_permutation(&h, roots)?));
    }
    // permutation for every unit, by closure from the generators
    let mut perms: HashMap<u64, Vec<usize>> = HashMap::new();
    perms.insert(1, (0..d).collect());
    let mut frontier = vec![1u64];
    while let Some(l) = frontier.pop() {
        let pl = perms[&l].clone();
        for (g, pg) in &gen_perms {
            let m = mul_mod(l, *g, n);
            let composed: Vec<usize> = pl.iter().map(|&i| pg[i]).collect();
            match perms.get(&m) {
                Some(existing) if existing != &composed => return None,
                Some(_) => {}
                None => {
                    perms.insert(m, composed);
                    frontier.push(m);
                }
            }
        }
    }
    debug_assert_eq!(perms.len(), generated_subgroup(&gens, n).len());
    let cos_table: Vec<f64> = (0..n).map(|k| (2.0 * PI * k as f64 / n as f64).cos()).collect();
    let mut out = Vec::with_capacity(d);
    for r0 in 0..d {
        let mut terms = Vec::with_capacity(n as usize);
        for m in 0..n {
            let mut tr = 0.0;
            for (&l, p) in &perms {
                let k = (l as u128 * m as u128 % n as u128) as usize;
                tr += roots[p[r0]] * cos_table[k];
            }
            let rounded = tr.round();
            if (tr - rounded).abs() > 1e-3 {
                return None;
            }
            terms.push((m as i64, BigInt::from(rounded as i64)));
        }
        out.push(CycElem::from_terms(n, n, terms));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_in_q7() {
        // 2 cos(2 pi / 7) is a root of x^3 + x^2 - 2x - 1
        let f = IntPoly::from_i64(&[-1, -2, 1, 1]);
        let vals = embed_all_roots(&f, ConductorChoice::default()).unwrap();
        assert_eq!(vals.len(), 3);
        assert!(vals.iter().all(|v| v.conductor() == 7));
    }

    #[test]
    fn quartic_in_q15() {
        // minimal polynomial of 2 cos(2 pi / 15)
        let f = IntPoly::from_i64(&[1, -4, -4, 1, 1]);
        let vals = embed_all_roots(&f, ConductorChoice::default()).unwrap();
        assert!(vals.iter().all(|v| v.conductor() == 15));
    }

    #[test]
    fn non_abelian_cubic_fails() {
        // x^3 - 4x - 1 has discriminant 229, not a square
        let f = IntPoly::from_i64(&[-1, -4, 0, 1]);
        assert!(embed_all_roots(&f, ConductorChoice::SearchUpTo(300)).is_none());
    }
}
