//! Enumeration of the C(g, k) whose K0 has small degree, grouped by K0.
//!
//! K0 comes from the closed forms away from the exception column and from
//! the hard-coded values on it. Classical series are reported as families
//! along lines of constant kappa, written out member by member when the
//! line has at most two admissible members.

use std::collections::BTreeMap;

use cyclotomic::ntheory::euler_phi;
use cyclotomic::{real_cyclotomic, SubfieldHandle};

use crate::fields::{e8_level5_field, exceptional_fields, f4_level4_field, field_row, is_exceptional_level};
use crate::lie::LieType;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TableEntry {
    sort: (LieType, usize, u8, i64, i64),
    pub label: String,
    pub bold: bool,
}

impl TableEntry {
    pub fn display(&self) -> String {
        if self.bold {
            format!("*{}*", self.label)
        } else {
            self.label.clone()
        }
    }
}

#[derive(Clone, Debug)]
pub struct FieldBlock {
    pub key: String,
    pub field: SubfieldHandle,
    pub degree: u64,
    pub entries: Vec<TableEntry>,
}

/// Degree of Q_N = Q(cos(2 pi / N)).
pub fn real_cyclotomic_degree(n: u64) -> u64 {
    if n <= 2 {
        1
    } else {
        euler_phi(n) / 2
    }
}

/// Short stable name of a field, matching the table's conventions.
pub fn field_key(f: &SubfieldHandle) -> String {
    if f.is_rational() {
        return "Q".into();
    }
    let c = f.conductor();
    if *f == real_cyclotomic(c) {
        return format!("Q_{c}");
    }
    if *f == f4_level4_field() {
        return "Q(cos(2pi/13)-cos(3pi/13))".into();
    }
    if *f == e8_level5_field() {
        return "Q(cos(2pi/35)+cos(12pi/35))".into();
    }
    if f.degree() == 2 {
        if let Some(d) = f.quadratic_subfields().first() {
            return format!("Q(sqrt{d})");
        }
    }
    f.name()
}

struct Builder {
    max_degree: u64,
    blocks: BTreeMap<String, FieldBlock>,
}

impl Builder {
    fn add(&mut self, field: SubfieldHandle, entry: TableEntry) {
        let degree = field.degree();
        if degree > self.max_degree {
            return;
        }
        let key = field_key(&field);
        self.blocks
            .entry(key.clone())
            .or_insert_with(|| FieldBlock { key, field, degree, entries: Vec::new() })
            .entries
            .push(entry);
    }
}

fn family_label(letter: LieType, kappa: i64) -> String {
    match letter {
        LieType::A => format!("A_{{n,{}-n}}", kappa - 1),
        LieType::B => format!("B_{{n,{}-2n}}", kappa + 1),
        LieType::C => format!("C_{{n,{}-n}}", kappa - 1),
        _ => format!("D_{{n,{}-2n}}", kappa + 2),
    }
}

/// (rank, level) pairs of a classical series on the line of fixed kappa.
fn line_members(letter: LieType, kappa: i64) -> Vec<(usize, i64)> {
    let (min_rank, h): (usize, fn(i64) -> i64) = match letter {
        LieType::A => (1, |n| n + 1),
        LieType::B => (3, |n| 2 * n - 1),
        LieType::C => (2, |n| n + 1),
        _ => (4, |n| 2 * n - 2),
    };
    let mut out = Vec::new();
    let mut n = min_rank as i64;
    while kappa - h(n) >= 1 {
        let k = kappa - h(n);
        if !is_exceptional_level(letter, n as usize, k, kappa) {
            out.push((n as usize, k));
        }
        n += 1;
    }
    out
}

pub fn figure_a_enumeration(max_degree: u64) -> Vec<FieldBlock> {
    let mut b = Builder { max_degree, blocks: BTreeMap::new() };
    // phi(N) >= sqrt(N/2), so degree <= d forces N <= 8 d^2
    let n_bound = (8 * max_degree * max_degree).max(8) as i64;
    let entry = |letter, rank, group, a, c, label: String, bold| TableEntry { sort: (letter, rank, group, a, c), label, bold };

    for letter in [LieType::A, LieType::B, LieType::C, LieType::D] {
        // closed forms along lines of constant kappa
        for kappa in 2..=n_bound {
            let row_mult = match letter {
                LieType::B | LieType::C => 2,
                _ => 1,
            };
            let members = line_members(letter, kappa);
            if members.is_empty() || real_cyclotomic_degree((row_mult * kappa) as u64) > max_degree {
                continue;
            }
            let field = real_cyclotomic((row_mult * kappa) as u64);
            if members.len() >= 3 {
                b.add(field, entry(letter, 0, 1, kappa, 0, family_label(letter, kappa), false));
            } else {
                for (n, k) in members {
                    b.add(field.clone(), entry(letter, 0, 1, kappa, n as i64, format!("{letter}_{{{n},{k}}}"), false));
                }
            }
        }
    }
    // exceptional columns of the classical series
    let q = SubfieldHandle::rationals();
    b.add(q.clone(), entry(LieType::A, 0, 0, 1, 0, "A_{n,1}".into(), true));
    b.add(q.clone(), entry(LieType::B, 0, 0, 1, 0, "B_{n,1}".into(), true));
    b.add(q.clone(), entry(LieType::B, 0, 0, 2, 0, "B_{n,2}".into(), true));
    b.add(q.clone(), entry(LieType::D, 0, 0, 1, 0, "D_{n,1}".into(), true));
    b.add(q, entry(LieType::D, 0, 0, 2, 0, "D_{n,2}".into(), true));
    for n in 2..=n_bound {
        let (k0, _) = exceptional_fields(LieType::C, n as usize, 1, n + 2).expect("C level 1 is exceptional");
        b.add(k0, entry(LieType::C, 0, 0, 1, n, format!("C_{{{n},1}}"), true));
    }
    // exceptional algebras, level by level
    for (letter, rank, h, mult) in [
        (LieType::E, 6usize, 12i64, 1i64),
        (LieType::E, 7, 18, 1),
        (LieType::E, 8, 30, 1),
        (LieType::F, 4, 9, 2),
        (LieType::G, 2, 4, 3),
    ] {
        for k in 1..=n_bound {
            let kappa = k + h;
            let label = format!("{letter}_{{{rank},{k}}}");
            if let Some((k0, _)) = exceptional_fields(letter, rank, k, kappa) {
                b.add(k0, entry(letter, rank, 0, k, 0, label, true));
            } else {
                debug_assert_eq!(field_row(letter, rank, kappa).k0_multiple, mult as u64);
                b.add(real_cyclotomic((mult * kappa) as u64), entry(letter, rank, 1, k, 0, label, false));
            }
        }
    }
    let mut blocks: Vec<FieldBlock> = b.blocks.into_values().collect();
    for blk in &mut blocks {
        blk.entries.sort();
    }
    blocks.sort_by_key(|blk| {
        let special = blk.field != real_cyclotomic(blk.field.conductor());
        (blk.degree, special, blk.field.conductor())
    });
    blocks
}
