//! Sweeps over (g, k) comparing computed dimension fields with the closed
//! forms, and checking which fields single quantum dimensions generate.

use std::collections::HashMap;

use cyclotomic::{CycElem, SubfieldHandle};

use crate::category::{alcove_size, CategoryHandle};
use crate::error::QgError;
use crate::fields::{dimensional_component, expected_fields, Expected};
use crate::lie::{build_algebra, is_valid_type, LieType};

/// Largest classical rank visited by the default sweeps.
pub const DEFAULT_SWEEP_RANK: usize = 8;

/// Every (type, rank, level) with alcove size at most `max_alcove`,
/// classical ranks up to `max_rank`.
pub fn sweep_cases(max_alcove: u64, max_rank: usize) -> Vec<(LieType, usize, i64)> {
    let mut types: Vec<(LieType, usize)> = Vec::new();
    for letter in [LieType::A, LieType::B, LieType::C, LieType::D] {
        for n in 1..=max_rank {
            if is_valid_type(letter, n) {
                types.push((letter, n));
            }
        }
    }
    types.extend([(LieType::E, 6), (LieType::E, 7), (LieType::E, 8), (LieType::F, 4), (LieType::G, 2)]);
    let mut out = Vec::new();
    for (letter, n) in types {
        let alg = build_algebra(letter, n).expect("valid type");
        let mut k = 1;
        while alcove_size(&alg, k) <= max_alcove {
            out.push((letter, n, k));
            k += 1;
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct FieldCheck {
    pub name: String,
    pub kappa: i64,
    pub expected: Expected,
    pub k0: SubfieldHandle,
    pub k1: SubfieldHandle,
}

impl FieldCheck {
    pub fn matches(&self) -> bool {
        let (e0, e1) = self.expected.fields();
        e0 == &self.k0 && e1 == &self.k1
    }
}

pub fn check_fields(c: &CategoryHandle) -> FieldCheck {
    FieldCheck {
        name: c.name(),
        kappa: c.kappa,
        expected: expected_fields(c),
        k0: c.k0_field(),
        k1: c.k1_field(),
    }
}

/// The fields generated by the individual quantum dimensions.
#[derive(Clone, Debug)]
pub struct LambdaFields {
    pub name: String,
    pub k0: SubfieldHandle,
    pub k1: SubfieldHandle,
    /// Distinct fields K_lambda, in order of first appearance.
    pub fields: Vec<SubfieldHandle>,
    /// Alcove weights whose parity bit disagrees with "K_lambda = K1 != K0".
    pub parity_mismatches: Vec<Vec<i64>>,
}

impl LambdaFields {
    /// Every K_lambda is one of Q, K0, K1.
    pub fn within_three(&self) -> bool {
        let q = SubfieldHandle::rationals();
        self.fields.len() <= 3 && self.fields.iter().all(|f| f == &q || f == &self.k0 || f == &self.k1)
    }
}

pub fn lambda_fields(c: &CategoryHandle) -> Result<LambdaFields, QgError> {
    let k0 = c.k0_field();
    let mut cache: HashMap<CycElem, SubfieldHandle> = HashMap::new();
    let mut fields: Vec<SubfieldHandle> = Vec::new();
    let mut per_weight = Vec::new();
    for l in c.weyl_alcove() {
        let d = c.qdim(&l)?;
        let f = cache.entry(d).or_insert_with_key(SubfieldHandle::generated_by).clone();
        if !fields.contains(&f) {
            fields.push(f.clone());
        }
        per_weight.push((l, f));
    }
    let k1 = fields.iter().fold(SubfieldHandle::rationals(), |acc, f| acc.join(f));
    let mut parity_mismatches = Vec::new();
    if k1 != k0 {
        for (l, f) in &per_weight {
            let bit = dimensional_component(c, l) == 1;
            if bit != (f == &k1) {
                parity_mismatches.push(l.clone());
            }
        }
    }
    Ok(LambdaFields { name: c.name(), k0, k1, fields, parity_mismatches })
}
