//! Weyl groups, by enumerating the orbit of a regular weight.
//!
//! Each orbit point y != dominant has a unique parent s_j(y) with j the
//! first negative coordinate, which gives a spanning tree of the orbit and
//! lets large groups be walked without storing them.

use crate::error::QgError;
use crate::lie::{AlgebraData, Weight};

pub const DEFAULT_WEYL_CAP: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// Action on fundamental-weight coordinates (column convention).
    pub matrix: Vec<Vec<i64>>,
    /// det(w) = (-1)^length.
    pub sign: i8,
}

impl WeylElement {
    pub fn apply(&self, v: &[i64]) -> Weight {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

pub fn check_cap(algebra: &AlgebraData, cap: usize) -> Result<(), QgError> {
    if algebra.rank > cap {
        return Err(QgError::RankCap { rank: algebra.rank, cap });
    }
    Ok(())
}

/// Calls `visit(point, sign)` once for every point of the orbit of the
/// strictly dominant weight `v`.
pub fn walk_orbit(algebra: &AlgebraData, v: &[i64], mut visit: impl FnMut(&[i64], i8)) {
    debug_assert!(v.iter().all(|&c| c > 0), "orbit walk needs a regular dominant weight");
    let mut cur = v.to_vec();
    descend(algebra, &mut cur, 1, &mut visit);
}

fn descend(algebra: &AlgebraData, x: &mut Vec<i64>, sign: i8, visit: &mut impl FnMut(&[i64], i8)) {
    visit(x, sign);
    for i in 0..algebra.rank {
        if x[i] <= 0 {
            continue;
        }
        let mut y = x.clone();
        algebra.reflect(i, &mut y);
        if y.iter().position(|&c| c < 0) == Some(i) {
            descend(algebra, &mut y, -sign, visit);
        }
    }
}

/// The whole Weyl group with signs; refuses ranks above `cap`.
pub fn weyl_group(algebra: &AlgebraData, cap: usize) -> Result<Vec<WeylElement>, QgError> {
    check_cap(algebra, cap)?;
    let n = algebra.rank;
    let identity: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut out = Vec::new();
    let mut stack = vec![(algebra.rho.clone(), identity, 1i8)];
    while let Some((x, m, sign)) = stack.pop() {
        for i in 0..n {
            if x[i] <= 0 {
                continue;
            }
            let mut y = x.clone();
            algebra.reflect(i, &mut y);
            if y.iter().position(|&c| c < 0) == Some(i) {
                // s_i acts on coordinates as v -> v - v_i * alpha_i
                let mut m2 = m.clone();
                for col in 0..n {
                    let c = m[i][col];
                    for row in 0..n {
                        m2[row][col] -= c * algebra.cartan_matrix[row][i];
                    }
                }
                stack.push((y, m2, -sign));
            }
        }
        out.push(WeylElement { matrix: m, sign });
    }
    Ok(out)
}
