//! Fusion rings: structure constants, duality and axiom checking.

use std::fmt;

use crate::error::RingError;

/// A based ring with basis b_0 (the unit), ..., b_{r-1}.
///
/// Structure constants are stored flat in i-major, j-middle, k-minor order:
/// b_i b_j = sum_k c[i][j][k] b_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    rank: usize,
    labels: Vec<String>,
    duality: Vec<usize>,
    constants: Vec<u64>,
}

/// One failed axiom, with the offending indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    UnitLeft { j: usize, k: usize },
    UnitRight { j: usize, k: usize },
    DualityNotInvolution { i: usize },
    DualityMovesUnit,
    DualityPairing { i: usize, j: usize, value: u64 },
    Associativity { i: usize, j: usize, k: usize, l: usize },
    DualitySymmetry { i: usize, j: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnitLeft { j, k } => write!(f, "unit axiom: c(0,{j},{k}) is wrong"),
            Violation::UnitRight { j, k } => write!(f, "unit axiom: c({j},0,{k}) is wrong"),
            Violation::DualityNotInvolution { i } => {
                write!(f, "duality axiom: duality is not an involution at {i}")
            }
            Violation::DualityMovesUnit => write!(f, "duality axiom: the unit is not self-dual"),
            Violation::DualityPairing { i, j, value } => write!(
                f,
                "duality axiom: c({i},{j},0) = {value}, expected {}",
                if *value == 0 { 1 } else { 0 }
            ),
            Violation::Associativity { i, j, k, l } => {
                write!(f, "associativity fails at (i,j,k,l) = ({i},{j},{k},{l})")
            }
            Violation::DualitySymmetry { i, j, k } => {
                write!(f, "duality symmetry c(i,j,k) = c(j*,i*,k*) fails at ({i},{j},{k})")
            }
        }
    }
}

impl FusionRing {
    /// Build a ring, checking only shapes; run [`FusionRing::validate`] for
    /// the axioms.
    pub fn new(labels: Vec<String>, duality: Vec<usize>, constants: Vec<u64>) -> Result<Self, RingError> {
        let rank = labels.len();
        if rank == 0 {
            return Err(RingError::Shape("rank must be at least 1".into()));
        }
        if duality.len() != rank {
            return Err(RingError::Shape(format!(
                "duality has length {}, expected {rank}",
                duality.len()
            )));
        }
        if let Some(&d) = duality.iter().find(|&&d| d >= rank) {
            return Err(RingError::Shape(format!("duality entry {d} out of range")));
        }
        if constants.len() != rank * rank * rank {
            return Err(RingError::Shape(format!(
                "expected {} structure constants, got {}",
                rank * rank * rank,
                constants.len()
            )));
        }
        Ok(FusionRing {
            rank,
            labels,
            duality,
            constants,
        })
    }

    /// Build from a product rule `mul(i, j) -> [(k, c)]`.
    pub fn from_rule(
        labels: Vec<String>,
        duality: Vec<usize>,
        mul: impl Fn(usize, usize) -> Vec<(usize, u64)>,
    ) -> Result<Self, RingError> {
        let r = labels.len();
        let mut c = vec![0u64; r * r * r];
        for i in 0..r {
            for j in 0..r {
                for (k, v) in mul(i, j) {
                    if k >= r {
                        return Err(RingError::Shape(format!("product index {k} out of range")));
                    }
                    c[(i * r + j) * r + k] += v;
                }
            }
        }
        Self::new(labels, duality, c)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn duality(&self) -> &[usize] {
        &self.duality
    }

    pub fn dual(&self, i: usize) -> usize {
        self.duality[i]
    }

    pub fn constants(&self) -> &[u64] {
        &self.constants
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> u64 {
        self.constants[(i * self.rank + j) * self.rank + k]
    }

    /// Support and multiplicities of b_i b_j.
    pub fn product(&self, i: usize, j: usize) -> Vec<(usize, u64)> {
        (0..self.rank)
            .filter_map(|k| {
                let v = self.c(i, j, k);
                (v > 0).then_some((k, v))
            })
            .collect()
    }

    /// Product of two elements written in the basis.
    pub fn multiply(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let r = self.rank;
        let mut out = vec![0i64; r];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot += a * b * self.c(i, j, k) as i64;
                }
            }
        }
        out
    }

    /// The fusion matrix (N_i)_{jk} = c_{ij}^k.
    pub fn fusion_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|j| (0..self.rank).map(|k| self.c(i, j, k) as i64).collect())
            .collect()
    }

    /// Matrix of right multiplication, (M_i)_{jk} = c_{ji}^k.
    pub fn right_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|j| (0..self.rank).map(|k| self.c(j, i, k) as i64).collect())
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.rank).all(|i| (0..self.rank).all(|j| (0..self.rank).all(|k| self.c(i, j, k) == self.c(j, i, k))))
    }

    /// All axiom violations; empty iff the data is a fusion ring.
    pub fn validate(&self) -> Vec<Violation> {
        let r = self.rank;
        let mut out = Vec::new();
        for j in 0..r {
            for k in 0..r {
                let want = u64::from(j == k);
                if self.c(0, j, k) != want {
                    out.push(Violation::UnitLeft { j, k });
                }
                if self.c(j, 0, k) != want {
                    out.push(Violation::UnitRight { j, k });
                }
            }
        }
        if self.duality[0] != 0 {
            out.push(Violation::DualityMovesUnit);
        }
        for i in 0..r {
            if self.duality[self.duality[i]] != i {
                out.push(Violation::DualityNotInvolution { i });
            }
        }
        for i in 0..r {
            for j in 0..r {
                let value = self.c(i, j, 0);
                let want = u64::from(i == self.duality[j]);
                if value != want {
                    out.push(Violation::DualityPairing { i, j, value });
                }
            }
        }
        if out.iter().any(|v| matches!(v, Violation::DualityNotInvolution { .. })) {
            return out;
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let (di, dj, dk) = (self.duality[i], self.duality[j], self.duality[k]);
                    if self.c(i, j, k) != self.c(dj, di, dk) {
                        out.push(Violation::DualitySymmetry { i, j, k });
                    }
                }
            }
        }
        // (b_i b_j) b_k = b_i (b_j b_k)
        for i in 0..r {
            for j in 0..r {
                let ij = self.product(i, j);
                for k in 0..r {
                    let jk = self.product(j, k);
                    for l in 0..r {
                        let lhs: u64 = ij.iter().map(|&(m, a)| a * self.c(m, k, l)).sum();
                        let rhs: u64 = jk.iter().map(|&(m, a)| a * self.c(i, m, l)).sum();
                        if lhs != rhs {
                            out.push(Violation::Associativity { i, j, k, l });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Set one structure constant; used to build broken rings in tests.
    pub fn with_constant(mut self, i: usize, j: usize, k: usize, v: u64) -> Self {
        let r = self.rank;
        self.constants[(i * r + j) * r + k] = v;
        self
    }

    /// Index of a label, if present.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// A basis bijection p with c(i,j,k) = other.c(p[i],p[j],p[k]), if one
    /// exists. Backtracking search; fine for the small ranks used here.
    pub fn isomorphism_to(&self, other: &FusionRing) -> Option<Vec<usize>> {
        let r = self.rank;
        if other.rank != r {
            return None;
        }
        // cheap invariant: the multiset of row sums of each fusion matrix
        let profile = |ring: &FusionRing, i: usize| -> Vec<u64> {
            let mut v: Vec<u64> = (0..r).map(|j| (0..r).map(|k| ring.c(i, j, k)).sum()).collect();
            v.sort_unstable();
            v
        };
        let mine: Vec<Vec<u64>> = (0..r).map(|i| profile(self, i)).collect();
        let theirs: Vec<Vec<u64>> = (0..r).map(|i| profile(other, i)).collect();
        let mut perm = vec![usize::MAX; r];
        let mut used = vec![false; r];
        perm[0] = 0;
        used[0] = true;
        fn extend(
            a: &FusionRing,
            b: &FusionRing,
            depth: usize,
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
            mine: &[Vec<u64>],
            theirs: &[Vec<u64>],
        ) -> bool {
            let r = a.rank;
            if depth == r {
                return true;
            }
            for cand in 1..r {
                if used[cand] || mine[depth] != theirs[cand] {
                    continue;
                }
                perm[depth] = cand;
                // check every constant among already-assigned indices involving depth
                let ok = (0..=depth).all(|i| {
                    (0..=depth).all(|j| {
                        (0..=depth).all(|k| {
                            (i != depth && j != depth && k != depth) || a.c(i, j, k) == b.c(perm[i], perm[j], perm[k])
                        })
                    })
                });
                if ok {
                    used[cand] = true;
                    if extend(a, b, depth + 1, perm, used, mine, theirs) {
                        return true;
                    }
                    used[cand] = false;
                }
            }
            perm[depth] = usize::MAX;
            false
        }
        if extend(self, other, 1, &mut perm, &mut used, &mine, &theirs) {
            Some(perm)
        } else {
            None
        }
    }
}

// ---- standard examples ----

/// The trivial ring Z.
pub fn trivial_ring() -> FusionRing {
    FusionRing::new(vec!["1".into()], vec![0], vec![1]).unwrap()
}

/// Group ring of the abelian group Z/n_1 x ... x Z/n_s.
pub fn abelian_group_ring(orders: &[u64]) -> FusionRing {
    let orders: Vec<u64> = orders.iter().copied().filter(|&n| n > 1).collect();
    let size: u64 = orders.iter().product();
    let decode = |mut x: u64| -> Vec<u64> {
        orders
            .iter()
            .map(|&n| {
                let d = x % n;
                x /= n;
                d
            })
            .collect()
    };
    let encode = |v: &[u64]| -> usize {
        let mut x = 0u64;
        for (d, &n) in v.iter().zip(orders.iter()).rev() {
            x = x * n + d;
        }
        x as usize
    };
    let labels: Vec<String> = (0..size)
        .map(|x| {
            if x == 0 {
                "e".to_string()
            } else {
                let v = decode(x);
                format!("g({})", v.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            }
        })
        .collect();
    let duality: Vec<usize> = (0..size)
        .map(|x| {
            let v: Vec<u64> = decode(x).iter().zip(orders.iter()).map(|(&d, &n)| (n - d) % n).collect();
            encode(&v)
        })
        .collect();
    FusionRing::from_rule(labels, duality, |i, j| {
        let a = decode(i as u64);
        let b = decode(j as u64);
        let s: Vec<u64> = a
            .iter()
            .zip(b.iter())
            .zip(orders.iter())
            .map(|((&x, &y), &n)| (x + y) % n)
            .collect();
        vec![(encode(&s), 1)]
    })
    .unwrap()
}

/// {1, X} with X^2 = 1 + X.
pub fn fibonacci_ring() -> FusionRing {
    FusionRing::from_rule(vec!["1".into(), "X".into()], vec![0, 1], |i, j| match (i, j) {
        (0, k) | (k, 0) => vec![(k, 1)],
        _ => vec![(0, 1), (1, 1)],
    })
    .unwrap()
}

/// {1, psi, sigma} with psi^2 = 1, psi sigma = sigma, sigma^2 = 1 + psi.
pub fn ising_ring() -> FusionRing {
    FusionRing::from_rule(
        vec!["1".into(), "psi".into(), "sigma".into()],
        vec![0, 1, 2],
        |i, j| match (i, j) {
            (0, k) | (k, 0) => vec![(k, 1)],
            (1, 1) => vec![(0, 1)],
            (1, 2) | (2, 1) => vec![(2, 1)],
            _ => vec![(0, 1), (1, 1)],
        },
    )
    .unwrap()
}

/// {1, X, Y} with X^2 = 1 + Y, Y^2 = 1, XY = YX = X; same rules as the
/// Ising ring with the labels of the product example.
pub fn ring_s() -> FusionRing {
    FusionRing::from_rule(
        vec!["1_S".into(), "X_S".into(), "Y_S".into()],
        vec![0, 1, 2],
        |i, j| match (i, j) {
            (0, k) | (k, 0) => vec![(k, 1)],
            (1, 1) => vec![(0, 1), (2, 1)],
            (2, 2) => vec![(0, 1)],
            _ => vec![(1, 1)],
        },
    )
    .unwrap()
}

/// {1, X} with X^2 = 1 + X, labelled for the product example.
pub fn ring_t() -> FusionRing {
    let mut t = fibonacci_ring();
    t.labels = vec!["1_T".into(), "X_T".into()];
    t
}

/// Truncated tensor-product rules of SU(2) at level k: basis V_0..V_k with
/// V_a V_b = sum of V_c, c from |a-b| to min(a+b, 2k-a-b) in steps of 2.
pub fn su2_level_ring(k: usize) -> FusionRing {
    let labels = (0..=k).map(|a| format!("V{a}")).collect();
    FusionRing::from_rule(labels, (0..=k).collect(), |a, b| {
        let hi = (a + b).min(2 * k - a - b);
        (a.abs_diff(b)..=hi).step_by(2).map(|c| (c, 1)).collect()
    })
    .unwrap()
}

/// Tambara-Yamagami rules for an abelian group A: basis A plus one more
/// element m with m^2 = sum of A and a m = m a = m.
pub fn tambara_yamagami_ring(orders: &[u64]) -> FusionRing {
    let g = abelian_group_ring(orders);
    let n = g.rank();
    let mut labels = g.labels().to_vec();
    labels.push("m".into());
    let mut duality = g.duality().to_vec();
    duality.push(n);
    FusionRing::from_rule(labels, duality, |a, b| match (a == n, b == n) {
        (false, false) => g.product(a, b),
        (true, true) => (0..n).map(|c| (c, 1)).collect(),
        _ => vec![(n, 1)],
    })
    .unwrap()
}

/// Tensor product of based rings; basis index i * rank(T) + j is (s_i, t_j).
pub fn product_ring(s: &FusionRing, t: &FusionRing) -> FusionRing {
    let (rs, rt) = (s.rank(), t.rank());
    let labels: Vec<String> = (0..rs)
        .flat_map(|i| (0..rt).map(move |j| (i, j)))
        .map(|(i, j)| {
            if rt == 1 {
                s.label(i).to_string()
            } else if rs == 1 {
                t.label(j).to_string()
            } else {
                format!("{}{}", s.label(i), t.label(j))
            }
        })
        .collect();
    let duality = (0..rs * rt)
        .map(|x| s.dual(x / rt) * rt + t.dual(x % rt))
        .collect();
    FusionRing::from_rule(labels, duality, |a, b| {
        let (i1, j1) = (a / rt, a % rt);
        let (i2, j2) = (b / rt, b % rt);
        let mut out = Vec::new();
        for (k1, c1) in s.product(i1, i2) {
            for (k2, c2) in t.product(j1, j2) {
                out.push((k1 * rt + k2, c1 * c2));
            }
        }
        out
    })
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_validate() {
        assert!(trivial_ring().is_valid());
        assert!(fibonacci_ring().is_valid());
        assert!(ising_ring().is_valid());
        assert!(abelian_group_ring(&[2, 6]).is_valid());
        assert!(su2_level_ring(5).is_valid());
        assert!(tambara_yamagami_ring(&[3]).is_valid());
        let p = product_ring(&ring_s(), &ring_t());
        assert_eq!(p.rank(), 6);
        assert!(p.is_valid());
    }

    #[test]
    fn broken_duality() {
        let bad = fibonacci_ring().with_constant(1, 1, 0, 2);
        assert!(bad
            .validate()
            .iter()
            .any(|v| matches!(v, Violation::DualityPairing { i: 1, j: 1, value: 2 })));
    }
}
