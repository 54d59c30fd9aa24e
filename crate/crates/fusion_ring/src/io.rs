//! The ring file format:
//! `{"rank": r, "labels": [...], "duality": [...], "constants": [...]}`
//! with constants flattened in i-major, j-middle, k-minor order.

use serde::{Deserialize, Serialize};

use crate::error::RingError;
use crate::ring::FusionRing;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingFile {
    rank: usize,
    labels: Vec<String>,
    duality: Vec<usize>,
    constants: Vec<u64>,
}

/// Parse a ring file. Shapes are checked; axioms are not.
pub fn from_json(text: &str) -> Result<FusionRing, RingError> {
    let f: RingFile = serde_json::from_str(text).map_err(|e| RingError::Parse(e.to_string()))?;
    if f.labels.len() != f.rank {
        return Err(RingError::Shape(format!(
            "rank is {} but {} labels are given",
            f.rank,
            f.labels.len()
        )));
    }
    FusionRing::new(f.labels, f.duality, f.constants)
}

/// Compact canonical serialization; `from_json` then `to_json` is the identity
/// on canonical text.
pub fn to_json(ring: &FusionRing) -> String {
    let f = RingFile {
        rank: ring.rank(),
        labels: ring.labels().to_vec(),
        duality: ring.duality().to_vec(),
        constants: ring.constants().to_vec(),
    };
    serde_json::to_string(&f).expect("plain data serializes")
}

/// Indented variant for human consumption.
pub fn to_json_pretty(ring: &FusionRing) -> String {
    let f = RingFile {
        rank: ring.rank(),
        labels: ring.labels().to_vec(),
        duality: ring.duality().to_vec(),
        constants: ring.constants().to_vec(),
    };
    serde_json::to_string_pretty(&f).expect("plain data serializes")
}
