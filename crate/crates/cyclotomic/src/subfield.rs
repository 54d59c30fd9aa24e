//! Subfields of cyclotomic fields, stored as Galois stabilizers.

use std::collections::BTreeSet;
use std::fmt;

use crate::elem::CycElem;
use crate::galois::stabilizer_of;
use crate::ntheory::{
    euler_phi, factorize, gcd, generated_subgroup, lcm, mul_mod, prime_divisors,
    subgroup_generators, unit_residue, units,
};

/// The fixed field of `stabilizer` inside Q(zeta_conductor).
///
/// The conductor is minimal, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubfieldHandle {
    conductor: u64,
    stabilizer: Vec<u64>,
}

impl SubfieldHandle {
    pub fn rationals() -> Self {
        SubfieldHandle {
            conductor: 1,
            stabilizer: vec![1],
        }
    }

    /// The full cyclotomic field Q(zeta_n).
    pub fn cyclotomic(n: u64) -> Self {
        Self::from_stabilizer(n, &[1])
    }

    /// Fixed field of the subgroup generated by `gens` in (Z/nZ)^x.
    pub fn from_generators(n: u64, gens: &[u64]) -> Self {
        let stab = generated_subgroup(&gens.iter().map(|&g| unit_residue(g % n.max(1), n)).collect::<Vec<_>>(), n);
        Self::minimize(n, stab)
    }

    /// Fixed field of a subgroup given as a list of residues; closure is taken.
    pub fn from_stabilizer(n: u64, stab: &[u64]) -> Self {
        Self::from_generators(n, stab)
    }

    pub fn generated_by(x: &CycElem) -> Self {
        let n = x.conductor();
        Self::minimize(n, stabilizer_of(x))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn stabilizer(&self) -> &[u64] {
        &self.stabilizer
    }

    pub fn degree(&self) -> u64 {
        euler_phi(self.conductor) / self.stabilizer.len() as u64
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    /// True if the field is fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        self.conductor <= 2 || self.stabilizer.binary_search(&(self.conductor - 1)).is_ok()
    }

    fn minimize(mut n: u64, mut stab: Vec<u64>) -> Self {
        loop {
            if n % 4 == 2 {
                let h = n / 2;
                stab = image(&stab, h);
                n = h;
                continue;
            }
            if n == 1 {
                return Self::rationals();
            }
            let mut moved = false;
            for p in prime_divisors(n) {
                let m = n / p;
                let kernel_inside = (0..p).map(|t| 1 + m * t).filter(|&l| gcd(l, n) == 1).all(|l| {
                    stab.binary_search(&(l % n)).is_ok()
                });
                if kernel_inside {
                    stab = image(&stab, m);
                    n = m;
                    moved = true;
                    break;
                }
            }
            if !moved {
                return SubfieldHandle {
                    conductor: n,
                    stabilizer: stab,
                };
            }
        }
    }

    /// The stabilizer pulled back to a multiple `m` of the conductor.
    pub fn stabilizer_at(&self, m: u64) -> Vec<u64> {
        assert_eq!(m % self.conductor, 0, "promotion needs a multiple of the conductor");
        if m == self.conductor {
            return self.stabilizer.clone();
        }
        let n = self.conductor;
        units(m)
            .into_iter()
            .filter(|&l| self.stabilizer.binary_search(&unit_residue(l % n, n)).is_ok())
            .collect()
    }

    /// Subfield inclusion: self is contained in `other`.
    pub fn is_subfield_of(&self, other: &SubfieldHandle) -> bool {
        if self.conductor == 1 {
            return true;
        }
        if other.conductor % self.conductor != 0 {
            return false;
        }
        let m = lcm(self.conductor, other.conductor);
        let big = self.stabilizer_at(m);
        let small = other.stabilizer_at(m);
        small.iter().all(|l| big.binary_search(l).is_ok())
    }

    /// Compositum.
    pub fn join(&self, other: &SubfieldHandle) -> SubfieldHandle {
        let m = lcm(self.conductor, other.conductor);
        let a = self.stabilizer_at(m);
        let b = other.stabilizer_at(m);
        let stab: Vec<u64> = a.into_iter().filter(|l| b.binary_search(l).is_ok()).collect();
        Self::minimize(m, stab)
    }

    /// Intersection.
    pub fn meet(&self, other: &SubfieldHandle) -> SubfieldHandle {
        let m = lcm(self.conductor, other.conductor);
        let mut gens = subgroup_generators(&self.stabilizer_at(m), m);
        gens.extend(subgroup_generators(&other.stabilizer_at(m), m));
        Self::minimize(m, generated_subgroup(&gens, m))
    }

    /// Exact membership test.
    pub fn contains(&self, x: &CycElem) -> bool {
        let c = x.conductor();
        if c == 1 {
            return true;
        }
        if self.conductor == 1 {
            return false;
        }
        let m = lcm(self.conductor, c);
        let acting: BTreeSet<u64> = self
            .stabilizer_at(m)
            .into_iter()
            .map(|l| unit_residue(l % c, c))
            .collect();
        let acting: Vec<u64> = acting.into_iter().collect();
        subgroup_generators(&acting, c)
            .into_iter()
            .all(|g| x.galois(g as i64).map_or(false, |y| &y == x))
    }

    /// Exponent of the Galois group of the field over Q.
    pub fn galois_exponent(&self) -> u64 {
        let n = self.conductor;
        if n == 1 {
            return 1;
        }
        units(n)
            .into_iter()
            .map(|l| {
                let mut x = l;
                let mut k = 1;
                while self.stabilizer.binary_search(&x).is_err() {
                    x = unit_residue(mul_mod(x, l, n), n);
                    k += 1;
                }
                k
            })
            .max()
            .unwrap_or(1)
    }

    /// The quadratic subfields, as squarefree integers d with Q(sqrt d) inside.
    pub fn quadratic_subfields(&self) -> Vec<i64> {
        let n = self.conductor;
        let mut out = Vec::new();
        for d in squarefree_candidates(n) {
            let f = quadratic_field(d);
            if f.conductor() > 1 && f.is_subfield_of(self) {
                out.push(d);
            }
        }
        out.sort_by_key(|d| (d.abs(), *d < 0));
        out
    }

    /// A short human-readable name such as `Q`, `Q(sqrt(5))`, `Q_16` or
    /// `Q(zeta_7)`.
    pub fn name(&self) -> String {
        let n = self.conductor;
        if n == 1 {
            return "Q".into();
        }
        if self.stabilizer.len() == 1 {
            return format!("Q(zeta_{n})");
        }
        let quads = self.quadratic_subfields();
        let deg = self.degree();
        if deg.is_power_of_two() && self.galois_exponent() <= 2 {
            let r = deg.trailing_zeros() as usize;
            // greedy basis of the elementary abelian extension
            let mut basis: Vec<i64> = Vec::new();
            let mut field = SubfieldHandle::rationals();
            for &d in &quads {
                if basis.len() == r {
                    break;
                }
                let next = field.join(&quadratic_field(d));
                if next.degree() > field.degree() {
                    basis.push(d);
                    field = next;
                }
            }
            let parts: Vec<String> = basis.iter().map(|d| format!("sqrt({d})")).collect();
            return format!("Q({})", parts.join(", "));
        }
        if self.stabilizer == [1, n - 1] {
            return format!("Q_{n}");
        }
        let gens = subgroup_generators(&self.stabilizer, n);
        let g: Vec<String> = gens.iter().map(u64::to_string).collect();
        format!("Q(zeta_{n})^<{}>", g.join(","))
    }
}

/// Image of a residue list under reduction to modulus m.
fn image(stab: &[u64], m: u64) -> Vec<u64> {
    let set: BTreeSet<u64> = stab.iter().map(|&l| unit_residue(l % m.max(1), m)).collect();
    set.into_iter().collect()
}

fn squarefree_candidates(n: u64) -> Vec<i64> {
    let odd: Vec<u64> = factorize(n).into_iter().filter(|&(p, _)| p != 2).map(|(p, _)| p).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << odd.len()) {
        let mut d: i64 = 1;
        for (i, &p) in odd.iter().enumerate() {
            if mask & (1 << i) != 0 {
                d *= p as i64;
            }
        }
        for two in [1, 2] {
            for sign in [1, -1] {
                let v = sign * two * d;
                if v != 1 {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Q(sqrt(d)) for a squarefree integer d.
pub fn quadratic_field(d: i64) -> SubfieldHandle {
    SubfieldHandle::generated_by(&crate::special::sqrt_integer(d))
}

impl fmt::Display for SubfieldHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for SubfieldHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SubfieldHandle({}, conductor {}, stabilizer {:?})",
            self.name(),
            self.conductor,
            self.stabilizer
        )
    }
}

/// Q_n = Q(cos(2 pi / n)).
pub fn real_cyclotomic(n: u64) -> SubfieldHandle {
    assert!(n >= 1);
    if n <= 2 {
        return SubfieldHandle::rationals();
    }
    SubfieldHandle::from_stabilizer(n, &[1, n - 1])
}

pub fn field_generated_by(x: &CycElem) -> SubfieldHandle {
    SubfieldHandle::generated_by(x)
}

pub fn field_join(a: &SubfieldHandle, b: &SubfieldHandle) -> SubfieldHandle {
    a.join(b)
}

pub fn field_meet(a: &SubfieldHandle, b: &SubfieldHandle) -> SubfieldHandle {
    a.meet(b)
}

pub fn subfield_leq(a: &SubfieldHandle, b: &SubfieldHandle) -> bool {
    a.is_subfield_of(b)
}
