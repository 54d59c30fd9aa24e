//! Gradings of fusion rings: the universal grading and the grading by the
//! Galois group of the dimension fields.

use std::collections::{BTreeMap, BTreeSet};

use cyclotomic::ntheory::{factorize, generated_subgroup, lcm};
use cyclotomic::SubfieldHandle;

use crate::analysis::{adjoint_subring, Dimensions};
use crate::error::RingError;
use crate::ring::FusionRing;

/// A faithful grading: basis elements assigned to group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingPartition {
    /// Component of each basis element; component 0 holds the unit.
    pub assignment: Vec<usize>,
    /// Group multiplication of components.
    pub table: Vec<Vec<usize>>,
    /// Display label of each component.
    pub labels: Vec<String>,
    /// Invariant factors d_1 | d_2 | ... when the group is abelian.
    pub invariants: Option<Vec<u64>>,
}

impl GradingPartition {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.order()];
        for (i, &c) in self.assignment.iter().enumerate() {
            out[c].push(i);
        }
        out
    }

    pub fn trivial_component(&self) -> Vec<usize> {
        self.components().swap_remove(0)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariants.as_ref().map_or(false, |v| v.len() <= 1)
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == 0).expect("group element has an inverse")
    }

    /// Name of the group, e.g. "trivial", "Z/2", "Z/2 x Z/6".
    pub fn group_name(&self) -> String {
        match &self.invariants {
            Some(v) if v.is_empty() => "trivial".into(),
            Some(v) => v.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" x "),
            None => format!("non-abelian group of order {}", self.order()),
        }
    }

    /// Check faithfulness, closure under products and duality against the ring.
    pub fn check(&self, ring: &FusionRing) -> Result<(), String> {
        let comps = self.components();
        if let Some(c) = comps.iter().position(Vec::is_empty) {
            return Err(format!("component {c} is empty"));
        }
        for i in 0..ring.rank() {
            let gi = self.assignment[i];
            if self.assignment[ring.dual(i)] != self.inverse(gi) {
                return Err(format!("duality does not invert the degree of {i}"));
            }
            for j in 0..ring.rank() {
                let g = self.table[gi][self.assignment[j]];
                if let Some((k, _)) = ring.product(i, j).into_iter().find(|&(k, _)| self.assignment[k] != g) {
                    return Err(format!("b_{i} b_{j} has summand {k} of the wrong degree"));
                }
            }
        }
        Ok(())
    }

    /// Every component of `self` maps into a single component of `coarse`.
    pub fn refines(&self, coarse: &GradingPartition) -> bool {
        self.components().iter().all(|c| {
            let targets: BTreeSet<usize> = c.iter().map(|&i| coarse.assignment[i]).collect();
            targets.len() == 1
        })
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Build the component group from an assignment; fails when the induced
/// multiplication is not a well-defined group.
fn from_assignment(ring: &FusionRing, raw: &[usize], labels: impl Fn(&[usize]) -> String) -> Result<GradingPartition, RingError> {
    // renumber so that the unit's component is 0, the rest by first member
    let mut order: Vec<usize> = Vec::new();
    let unit = raw[0];
    order.push(unit);
    for &c in raw {
        if !order.contains(&c) {
            order.push(c);
        }
    }
    let assignment: Vec<usize> = raw.iter().map(|c| order.iter().position(|o| o == c).unwrap()).collect();
    let n = order.len();
    let mut table = vec![vec![usize::MAX; n]; n];
    for i in 0..ring.rank() {
        for j in 0..ring.rank() {
            let (a, b) = (assignment[i], assignment[j]);
            for (k, _) in ring.product(i, j) {
                let c = assignment[k];
                if table[a][b] == usize::MAX {
                    table[a][b] = c;
                } else if table[a][b] != c {
                    return Err(RingError::NotAGroup(format!("components {a} and {b} have products in {} and {c}", table[a][b])));
                }
            }
        }
    }
    if table.iter().flatten().any(|&c| c == usize::MAX) {
        return Err(RingError::NotAGroup("a product of components is empty".into()));
    }
    for a in 0..n {
        if table[0][a] != a || table[a][0] != a {
            return Err(RingError::NotAGroup("the unit component is not an identity".into()));
        }
        if !(0..n).any(|b| table[a][b] == 0) {
            return Err(RingError::NotAGroup(format!("component {a} has no inverse")));
        }
        let row: BTreeSet<usize> = table[a].iter().copied().collect();
        if row.len() != n {
            return Err(RingError::NotAGroup("multiplication is not a Latin square".into()));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(RingError::NotAGroup("component multiplication is not associative".into()));
                }
            }
        }
    }
    let mut members = vec![Vec::new(); n];
    for (i, &c) in assignment.iter().enumerate() {
        members[c].push(i);
    }
    let labels = members.iter().map(|m| labels(m)).collect();
    let mut g = GradingPartition {
        assignment,
        table,
        labels,
        invariants: None,
    };
    if g.is_abelian() {
        g.invariants = Some(abelian_invariants(&g.table));
    }
    Ok(g)
}

fn element_order(table: &[Vec<usize>], a: usize) -> u64 {
    let mut x = a;
    let mut k = 1;
    while x != 0 {
        x = table[x][a];
        k += 1;
    }
    k
}

/// Invariant factors of a finite abelian group given by its table,
/// from the number of elements of each prime power order.
pub fn abelian_invariants(table: &[Vec<usize>]) -> Vec<u64> {
    let n = table.len() as u64;
    let orders: Vec<u64> = (0..table.len()).map(|a| element_order(table, a)).collect();
    // exponents[p] = multiset of e with a cyclic factor Z/p^e
    let mut per_prime: Vec<Vec<u64>> = Vec::new();
    for (p, e_total) in factorize(n) {
        let mut s_prev = 0u32;
        let mut at_least = Vec::new();
        for k in 1..=e_total {
            let pk = p.pow(k);
            let count = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            let s = (count as f64).log(p as f64).round() as u32;
            at_least.push(s - s_prev);
            s_prev = s;
        }
        // at_least[k-1] = number of factors with exponent >= k
        let mut exps = Vec::new();
        for k in 0..at_least.len() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..(at_least[k] - next) {
                exps.push(p.pow(k as u32 + 1));
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push(exps);
    }
    let len = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut out: Vec<u64> = (0..len)
        .map(|i| per_prime.iter().map(|v| v.get(i).copied().unwrap_or(1)).product())
        .collect();
    out.reverse();
    out
}

/// The universal grading: b_i and b_j share a component iff b_i b_{j*}
/// contains a basis element of the adjoint subring.
pub fn universal_grading(ring: &FusionRing) -> Result<GradingPartition, RingError> {
    let r = ring.rank();
    let adj: BTreeSet<usize> = adjoint_subring(ring).into_iter().collect();
    let mut parent: Vec<usize> = (0..r).collect();
    for i in 0..r {
        for j in 0..r {
            if ring.product(i, ring.dual(j)).iter().any(|(k, _)| adj.contains(k)) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let raw: Vec<usize> = (0..r).map(|i| find(&mut parent, i)).collect();
    let labels: Vec<String> = ring.labels().to_vec();
    from_assignment(ring, &raw, |m| {
        let names: Vec<&str> = m.iter().map(|&i| labels[i].as_str()).collect();
        format!("{{{}}}", names.join(", "))
    })
}

/// The grading by Gal(K1/K0) together with the fields involved.
#[derive(Clone, Debug)]
pub struct DimensionalGrading {
    pub partition: GradingPartition,
    /// Field generated by FPdim(R).
    pub k0: SubfieldHandle,
    /// Field generated by all basis dimensions.
    pub k1: SubfieldHandle,
    /// Units modulo `modulus` representing a basis of Gal(K1/K0).
    pub galois_basis: Vec<u64>,
    pub modulus: u64,
}

impl DimensionalGrading {
    /// log2 of [K1 : K0].
    pub fn rank(&self) -> usize {
        self.galois_basis.len()
    }
}

/// Partition of the basis by the field K0(d_i). Each class is labelled by
/// the character sigma -> sigma(d_i)/d_i of Gal(K1/K0), written on a basis
/// of that elementary abelian 2-group.
pub fn dimensional_grading(ring: &FusionRing, dims: &Dimensions) -> Result<DimensionalGrading, RingError> {
    let d = dims.exact()?;
    let k0 = dims.k0()?;
    let k1 = dims.k1()?.join(&k0);
    let m = lcm(k0.conductor(), k1.conductor()).max(1);
    let s0 = k0.stabilizer_at(m);
    let s1 = k1.stabilizer_at(m);
    let mut basis: Vec<u64> = Vec::new();
    let mut span = s1.clone();
    for &t in &s0 {
        if span.binary_search(&t).is_err() {
            basis.push(t);
            let mut gens = s1.clone();
            gens.extend(basis.iter().copied());
            span = generated_subgroup(&gens, m);
        }
    }
    let mut chars: Vec<Vec<bool>> = Vec::with_capacity(d.len());
    for (i, di) in d.iter().enumerate() {
        let mut ch = Vec::with_capacity(basis.len());
        for &t in &basis {
            let img = di.galois(t as i64).map_err(|e| RingError::BadDimensions(e.to_string()))?;
            if &img == di {
                ch.push(false);
            } else if img == di.neg_ref() {
                ch.push(true);
            } else {
                return Err(RingError::NotAGroup(format!(
                    "the square of the dimension of {} is not in K0",
                    ring.label(i)
                )));
            }
        }
        chars.push(ch);
    }
    let mut ids: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
    let raw: Vec<usize> = chars
        .iter()
        .map(|c| {
            let next = ids.len();
            *ids.entry(c.clone()).or_insert(next)
        })
        .collect();
    let partition = from_assignment(ring, &raw, |mem| {
        let bits: Vec<&str> = chars[mem[0]].iter().map(|&b| if b { "1" } else { "0" }).collect();
        format!("({})", bits.join(","))
    })?;
    Ok(DimensionalGrading {
        partition,
        k0,
        k1,
        galois_basis: basis,
        modulus: m,
    })
}
