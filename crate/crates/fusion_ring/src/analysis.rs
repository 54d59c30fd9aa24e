//! Frobenius-Perron dimensions, distinguished subrings and field checks.

use std::collections::{BTreeSet, HashSet};

use cyclotomic::{real_sign, CycElem, SubfieldHandle};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algreal::{AlgebraicReal, DEFAULT_BITS};
use crate::embed::{ConductorChoice, Embedder};
use crate::error::RingError;
use crate::factor::factor;
use crate::poly::{charpoly, isolate_largest_root, refine, IntPoly, Sturm};
use crate::ring::FusionRing;

/// Largest real eigenvalue of an integer matrix, with its minimal polynomial.
pub fn largest_eigenvalue(m: &[Vec<i64>]) -> Option<AlgebraicReal> {
    let cp = charpoly(m);
    let sf = cp.squarefree_part();
    let (lo, hi) = isolate_largest_root(&sf, 8)?;
    for g in factor(&sf) {
        if Sturm::new(&g).count(&lo, &hi) == 1 {
            let (lo, hi) = refine(&g, lo.clone(), hi.clone(), DEFAULT_BITS);
            return Some(AlgebraicReal::new(g, lo, hi));
        }
    }
    None
}

fn is_invertible(ring: &FusionRing, i: usize) -> bool {
    let d = ring.dual(i);
    (0..ring.rank()).all(|k| ring.c(i, d, k) == u64::from(k == 0))
}

/// The Frobenius-Perron dimension of a basis element.
pub fn fpdim(ring: &FusionRing, i: usize) -> AlgebraicReal {
    if is_invertible(ring, i) {
        return AlgebraicReal::one();
    }
    largest_eigenvalue(&ring.fusion_matrix(i)).expect("a nonnegative integer matrix has a real eigenvalue")
}

/// Dimensions of all basis elements; elements with the same fusion matrix
/// spectrum share work through the dual symmetry d_i = d_{i*}.
pub fn fpdims(ring: &FusionRing) -> Vec<AlgebraicReal> {
    let mut out: Vec<Option<AlgebraicReal>> = vec![None; ring.rank()];
    for i in 0..ring.rank() {
        if out[i].is_some() {
            continue;
        }
        let d = fpdim(ring, i);
        let j = ring.dual(i);
        out[j] = Some(d.clone());
        out[i] = Some(d);
    }
    out.into_iter().map(Option::unwrap).collect()
}

/// Matrix of left multiplication by a nonnegative element.
fn element_matrix(ring: &FusionRing, x: &[u64]) -> Vec<Vec<i64>> {
    let r = ring.rank();
    let mut m = vec![vec![0i64; r]; r];
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, row) in m.iter_mut().enumerate() {
            for (k, v) in row.iter_mut().enumerate() {
                *v += (a * ring.c(i, j, k)) as i64;
            }
        }
    }
    m
}

/// FPdim of a nonnegative element: the dimension vector is a positive
/// eigenvector of its multiplication matrix, so FPdim is the largest root.
pub fn fpdim_of_element(ring: &FusionRing, x: &[u64]) -> AlgebraicReal {
    if x.iter().all(|&a| a == 0) {
        return AlgebraicReal::from_integer(0);
    }
    largest_eigenvalue(&element_matrix(ring, x)).expect("nonzero nonnegative element")
}

/// FPdim(R) = sum of d_j^2, computed as FPdim of the element sum_j b_j b_{j*}.
pub fn fpdim_total(ring: &FusionRing) -> AlgebraicReal {
    let r = ring.rank();
    let mut x = vec![0u64; r];
    for j in 0..r {
        for (k, c) in ring.product(j, ring.dual(j)) {
            x[k] += c;
        }
    }
    fpdim_of_element(ring, &x)
}

/// Dimension data for a ring: algebraic values, exact cyclotomic forms where
/// an embedding was found, and the indices that failed.
#[derive(Clone, Debug)]
pub struct Dimensions {
    algebraic: Vec<AlgebraicReal>,
    exact: Vec<Option<CycElem>>,
}

impl Dimensions {
    pub fn algebraic(&self) -> &[AlgebraicReal] {
        &self.algebraic
    }

    pub fn approx(&self) -> Vec<f64> {
        self.algebraic.iter().map(AlgebraicReal::to_f64).collect()
    }

    pub fn failures(&self) -> Vec<usize> {
        (0..self.exact.len()).filter(|&i| self.exact[i].is_none()).collect()
    }

    pub fn is_exact(&self) -> bool {
        self.exact.iter().all(Option::is_some)
    }

    /// Exact dimensions, or an error when some embedding is missing.
    pub fn exact(&self) -> Result<Vec<CycElem>, RingError> {
        self.exact.iter().cloned().collect::<Option<Vec<_>>>().ok_or(RingError::MissingEmbedding)
    }

    pub fn exact_at(&self, i: usize) -> Option<&CycElem> {
        self.exact[i].as_ref()
    }

    /// FPdim(R) as an exact cyclotomic number.
    pub fn total(&self) -> Result<CycElem, RingError> {
        Ok(self.exact()?.iter().map(CycElem::square).sum())
    }

    /// Field generated by FPdim(R).
    pub fn k0(&self) -> Result<SubfieldHandle, RingError> {
        Ok(SubfieldHandle::generated_by(&self.total()?))
    }

    /// Field generated by all basis dimensions.
    pub fn k1(&self) -> Result<SubfieldHandle, RingError> {
        Ok(self
            .exact()?
            .iter()
            .fold(SubfieldHandle::rationals(), |k, d| k.join(&SubfieldHandle::generated_by(d))))
    }

    pub fn field_of(&self, i: usize) -> Result<SubfieldHandle, RingError> {
        self.exact[i].as_ref().map(SubfieldHandle::generated_by).ok_or(RingError::MissingEmbedding)
    }

    /// Exact FPdim of an element with rational coefficients.
    pub fn of_rational_element(&self, x: &[BigRational]) -> Result<CycElem, RingError> {
        let d = self.exact()?;
        Ok(x.iter()
            .zip(d.iter())
            .filter(|(a, _)| !a.is_zero())
            .map(|(a, v)| v.scale_rational(a))
            .sum())
    }
}

/// Compute dimensions and search for cyclotomic forms. Failures are not
/// fatal; they are listed by [`Dimensions::failures`].
pub fn attach_cyclotomic_embedding(ring: &FusionRing, choice: ConductorChoice) -> Dimensions {
    let algebraic = fpdims(ring);
    let mut embedder = Embedder::new(choice);
    let exact = algebraic.iter().map(|d| embedder.embed(d)).collect();
    Dimensions { algebraic, exact }
}

/// Accept externally known exact dimensions after checking that they are
/// positive and satisfy d_i d_j = sum_k c_ij^k d_k. By uniqueness of the
/// positive character these are the Frobenius-Perron dimensions.
pub fn attach_exact_dims(ring: &FusionRing, dims: Vec<CycElem>) -> Result<Dimensions, RingError> {
    let r = ring.rank();
    if dims.len() != r {
        return Err(RingError::BadDimensions(format!("expected {r} values, got {}", dims.len())));
    }
    for (i, d) in dims.iter().enumerate() {
        if !d.is_real() || real_sign(d) != std::cmp::Ordering::Greater {
            return Err(RingError::BadDimensions(format!("value {i} is not a positive real")));
        }
    }
    for i in 0..r {
        for j in i..r {
            let lhs = dims[i].mul_ref(&dims[j]);
            let rhs: CycElem = ring.product(i, j).into_iter().map(|(k, c)| dims[k].scale_int(c as i64)).sum();
            if lhs != rhs {
                return Err(RingError::BadDimensions(format!("product rule fails for ({i},{j})")));
            }
        }
    }
    let algebraic = dims.iter().map(algebraic_from_exact).collect();
    Ok(Dimensions {
        algebraic,
        exact: dims.into_iter().map(Some).collect(),
    })
}

/// Minimal polynomial and isolating interval of a real cyclotomic number,
/// from the product of (X - conjugate) over its Galois orbit.
fn algebraic_from_exact(x: &CycElem) -> AlgebraicReal {
    if let Some(q) = x.to_rational() {
        let num = q.numer().clone();
        let den = q.denom().clone();
        let p = IntPoly::new(vec![-num, den]);
        let lo = &q - BigRational::from_integer(1.into());
        let a = AlgebraicReal::new(p, lo, q);
        return a.with_exact(x.clone()).expect("rational value matches itself");
    }
    let field = SubfieldHandle::generated_by(x);
    let n = field.conductor();
    let stab: HashSet<u64> = field.stabilizer().iter().copied().collect();
    // coset representatives of the stabilizer
    let mut reps = Vec::new();
    let mut covered: HashSet<u64> = HashSet::new();
    for l in cyclotomic::ntheory::units(n) {
        if covered.contains(&l) {
            continue;
        }
        reps.push(l);
        for &s in &stab {
            covered.insert(cyclotomic::ntheory::mul_mod(l, s, n));
        }
    }
    let x = x.clone();
    // prod (X - sigma(x)) with exact cyclotomic coefficients
    let mut coeffs = vec![CycElem::one()];
    for &l in &reps {
        let c = x.galois(l as i64).expect("unit");
        let mut next = vec![CycElem::zero(); coeffs.len() + 1];
        for (i, a) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1].add_ref(a);
            next[i] = next[i].sub_ref(&a.mul_ref(&c));
        }
        coeffs = next;
    }
    let rat: Vec<BigRational> = coeffs.iter().map(|c| c.to_rational().expect("symmetric function")).collect();
    let p = crate::poly::RatPoly::new(rat).to_primitive_int();
    let approx = cyclotomic::approx_f64(&x).0;
    let roots = crate::poly::isolate_all_roots(&p, 40);
    for (lo, hi) in roots {
        let cand = AlgebraicReal::new(p.clone(), lo, hi);
        if (cand.to_f64() - approx).abs() < 1e-6 * approx.abs().max(1.0) {
            if let Some(a) = cand.with_exact(x.clone()) {
                return a.refined(DEFAULT_BITS);
            }
        }
    }
    unreachable!("a real number is a root of its own minimal polynomial")
}

// ---- subrings ----

/// Basis elements with b_j b_{j*} = 1.
pub fn pointed_subring(ring: &FusionRing) -> Vec<usize> {
    (0..ring.rank()).filter(|&j| is_invertible(ring, j)).collect()
}

/// Smallest subring containing b_k for every summand b_k of some b_j b_{j*}.
pub fn adjoint_subring(ring: &FusionRing) -> Vec<usize> {
    let mut seed = BTreeSet::new();
    for j in 0..ring.rank() {
        for (k, _) in ring.product(j, ring.dual(j)) {
            seed.insert(k);
        }
    }
    subring_generated_by(ring, &seed.into_iter().collect::<Vec<_>>())
}

/// Smallest duality- and product-closed basis subset containing the seed
/// and the unit.
pub fn subring_generated_by(ring: &FusionRing, seed: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = seed.iter().copied().collect();
    set.insert(0);
    loop {
        let cur: Vec<usize> = set.iter().copied().collect();
        let mut grew = false;
        for &i in &cur {
            grew |= set.insert(ring.dual(i));
            for &j in &cur {
                for (k, _) in ring.product(i, j) {
                    grew |= set.insert(k);
                }
            }
        }
        if !grew {
            return set.into_iter().collect();
        }
    }
}

/// True if the basis subset spans a fusion subring.
pub fn is_subring(ring: &FusionRing, subset: &[usize]) -> bool {
    let set: BTreeSet<usize> = subset.iter().copied().collect();
    set.contains(&0)
        && set.iter().all(|&i| set.contains(&ring.dual(i)))
        && set
            .iter()
            .all(|&i| set.iter().all(|&j| ring.product(i, j).iter().all(|(k, _)| set.contains(k))))
}

/// Every basis element occurs in some power of b_i.
pub fn is_multiplicatively_generated_by(ring: &FusionRing, i: usize) -> bool {
    let r = ring.rank();
    let mut reached = vec![false; r];
    let mut seen_states: HashSet<Vec<usize>> = HashSet::new();
    let mut state = vec![i];
    while seen_states.insert(state.clone()) {
        for &k in &state {
            reached[k] = true;
        }
        let mut next = BTreeSet::new();
        for &k in &state {
            for (m, _) in ring.product(k, i) {
                next.insert(m);
            }
        }
        state = next.into_iter().collect();
    }
    reached.into_iter().all(|b| b)
}

// ---- field statements ----

/// Both FPdim(x1) and FPdim(x2) lie in Q(FPdim(x1 + x2)), for elements with
/// nonnegative rational coefficients.
pub fn check_main_lemma(dims: &Dimensions, x1: &[BigRational], x2: &[BigRational]) -> Result<bool, RingError> {
    if x1.iter().chain(x2.iter()).any(|a| a.is_negative()) {
        return Err(RingError::BadDimensions("coefficients must be nonnegative".into()));
    }
    let sum: Vec<BigRational> = x1.iter().zip(x2.iter()).map(|(a, b)| a + b).collect();
    let k = SubfieldHandle::generated_by(&dims.of_rational_element(&sum)?);
    Ok(k.contains(&dims.of_rational_element(x1)?) && k.contains(&dims.of_rational_element(x2)?))
}

/// Basis elements whose dimension lies in the field `k`.
#[allow(non_snake_case)]
pub fn subring_R_K(dims: &Dimensions, k: &SubfieldHandle) -> Result<Vec<usize>, RingError> {
    let d = dims.exact()?;
    Ok((0..d.len()).filter(|&i| k.contains(&d[i])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{abelian_group_ring, fibonacci_ring, ising_ring};

    #[test]
    fn fibonacci_dimension() {
        let d = fpdim(&fibonacci_ring(), 1);
        assert_eq!(d.minpoly(), &IntPoly::from_i64(&[-1, -1, 1]));
        assert!((d.to_f64() - 1.618033988749895).abs() < 1e-12);
    }

    #[test]
    fn totals() {
        let t = fpdim_total(&fibonacci_ring());
        assert_eq!(t.minpoly(), &IntPoly::from_i64(&[5, -5, 1]));
        assert_eq!(fpdim_total(&abelian_group_ring(&[6])).to_rational(), Some(BigRational::from_integer(6.into())));
        assert_eq!(fpdim_total(&ising_ring()).to_rational(), Some(BigRational::from_integer(4.into())));
    }
}
