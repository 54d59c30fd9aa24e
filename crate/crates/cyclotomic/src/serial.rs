//! Serde forms: `{conductor, coeffs: ["num/den", ...]}` for elements and
//! `{conductor, stabilizer: [...]}` for subfields.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::elem::CycElem;
use crate::ntheory::{euler_phi, is_subgroup, unit_residue};
use crate::subfield::SubfieldHandle;

#[derive(Serialize, Deserialize)]
struct ElemRepr {
    conductor: u64,
    coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct FieldRepr {
    conductor: u64,
    stabilizer: Vec<u64>,
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let d: BigInt = d.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if d == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(n, d))
}

impl Serialize for CycElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let den = self.denominator();
        let coeffs = self
            .numerators()
            .iter()
            .map(|c| {
                let r = BigRational::new(c.clone(), den.clone());
                format!("{}/{}", r.numer(), r.denom())
            })
            .collect();
        ElemRepr {
            conductor: self.conductor(),
            coeffs,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ElemRepr::deserialize(d)?;
        if r.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        CycElem::from_power_basis(r.conductor, &coeffs).map_err(D::Error::custom)
    }
}

impl Serialize for SubfieldHandle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FieldRepr {
            conductor: self.conductor(),
            stabilizer: self.stabilizer().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SubfieldHandle {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = FieldRepr::deserialize(d)?;
        let n = r.conductor;
        if n == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let mut stab: Vec<u64> = r.stabilizer.iter().map(|&l| unit_residue(l % n, n)).collect();
        stab.sort_unstable();
        stab.dedup();
        if !is_subgroup(&stab, n) || euler_phi(n) % stab.len() as u64 != 0 {
            return Err(D::Error::custom("stabilizer is not a subgroup of the unit group"));
        }
        Ok(SubfieldHandle::from_stabilizer(n, &stab))
    }
}
