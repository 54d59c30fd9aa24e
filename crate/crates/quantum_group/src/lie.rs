//! Root systems of the simple Lie algebras in Bourbaki numbering.
//!
//! The invariant form is scaled so that short roots have squared length 2;
//! long roots then have squared length `2m` with `m` the lacing number.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::QgError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl LieType {
    pub fn parse(s: &str) -> Result<Self, QgError> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => LieType::A,
            "B" => LieType::B,
            "C" => LieType::C,
            "D" => LieType::D,
            "E" => LieType::E,
            "F" => LieType::F,
            "G" => LieType::G,
            other => return Err(QgError::InvalidType(format!("unknown type letter {other:?}"))),
        })
    }

    pub fn letter(self) -> char {
        match self {
            LieType::A => 'A',
            LieType::B => 'B',
            LieType::C => 'C',
            LieType::D => 'D',
            LieType::E => 'E',
            LieType::F => 'F',
            LieType::G => 'G',
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A weight in fundamental-weight coordinates.
pub type Weight = Vec<i64>;

#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub type_letter: LieType,
    pub rank: usize,
    /// `cartan_matrix[i][j] = <alpha_i^vee, alpha_j>`.
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Gram matrix of the simple roots.
    pub root_form: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, ordered by height.
    pub positive_roots_simple: Vec<Vec<i64>>,
    /// The same roots in fundamental-weight coordinates.
    pub positive_roots: Vec<Weight>,
    pub rho: Weight,
    /// Gram matrix of the fundamental weights.
    pub form_matrix: Vec<Vec<Rational64>>,
    /// Least common denominator of `form_matrix`.
    pub form_denominator: i64,
    pub h_dual: i64,
    pub lacing_m: i64,
    pub comarks: Vec<i64>,
    pub dim_g: i64,
    /// Half squared lengths of the simple roots.
    pub root_scale: Vec<i64>,
}

fn sym_form(letter: LieType, n: usize) -> Vec<Vec<i64>> {
    let mut b = vec![vec![0i64; n]; n];
    let link = |b: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        b[i][j] = v;
        b[j][i] = v;
    };
    match letter {
        LieType::A => {
            for i in 0..n {
                b[i][i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut b, i, i + 1, -1);
            }
        }
        LieType::B => {
            for i in 0..n {
                b[i][i] = if i + 1 == n { 2 } else { 4 };
            }
            for i in 0..n - 1 {
                link(&mut b, i, i + 1, -2);
            }
        }
        LieType::C => {
            for i in 0..n {
                b[i][i] = if i + 1 == n { 4 } else { 2 };
            }
            for i in 0..n - 1 {
                link(&mut b, i, i + 1, if i + 2 == n { -2 } else { -1 });
            }
        }
        LieType::D => {
            for i in 0..n {
                b[i][i] = 2;
            }
            for i in 0..n - 2 {
                link(&mut b, i, i + 1, -1);
            }
            link(&mut b, n - 3, n - 1, -1);
        }
        LieType::E => {
            for i in 0..n {
                b[i][i] = 2;
            }
            link(&mut b, 0, 2, -1);
            link(&mut b, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut b, i, i + 1, -1);
            }
        }
        LieType::F => {
            b[0][0] = 4;
            b[1][1] = 4;
            b[2][2] = 2;
            b[3][3] = 2;
            link(&mut b, 0, 1, -2);
            link(&mut b, 1, 2, -2);
            link(&mut b, 2, 3, -1);
        }
        LieType::G => {
            b[0][0] = 2;
            b[1][1] = 6;
            link(&mut b, 0, 1, -3);
        }
    }
    b
}

pub fn is_valid_type(letter: LieType, n: usize) -> bool {
    match letter {
        LieType::A => n >= 1,
        LieType::B => n >= 3,
        LieType::C => n >= 2,
        LieType::D => n >= 4,
        LieType::E => (6..=8).contains(&n),
        LieType::F => n == 4,
        LieType::G => n == 2,
    }
}

fn invert(m: &[Vec<Rational64>]) -> Vec<Vec<Rational64>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("nonsingular matrix");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Positive roots in simple-root coordinates via root strings, by height.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut known: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // p = how far the i-string extends downward
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots
}

pub fn build_algebra(letter: LieType, rank: usize) -> Result<AlgebraData, QgError> {
    if !is_valid_type(letter, rank) {
        return Err(QgError::InvalidType(format!("{letter}{rank} is not a simple type")));
    }
    let n = rank;
    let b = sym_form(letter, n);
    let scale: Vec<i64> = (0..n).map(|i| b[i][i] / 2).collect();
    let cartan: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| 2 * b[i][j] / b[i][i]).collect())
        .collect();
    let lacing = *scale.iter().max().unwrap();
    let simple = positive_roots(&cartan);
    let weight_coords: Vec<Weight> = simple
        .iter()
        .map(|c| (0..n).map(|j| (0..n).map(|i| c[i] * cartan[j][i]).sum()).collect())
        .collect();
    // alpha_i = sum_j cartan[j][i] Lambda_j and <alpha_i, Lambda_k> = d_i delta_ik
    let cmat: Vec<Vec<Rational64>> = (0..n)
        .map(|i| (0..n).map(|j| Rational64::from_integer(cartan[j][i])).collect())
        .collect();
    let cinv = invert(&cmat);
    let form: Vec<Vec<Rational64>> = (0..n)
        .map(|i| (0..n).map(|j| cinv[i][j] * Rational64::from_integer(scale[j])).collect())
        .collect();
    let form_den = form.iter().flatten().fold(1i64, |acc, r| acc.lcm(r.denom()));
    let highest = simple.last().unwrap();
    let comarks: Vec<i64> = (0..n).map(|i| highest[i] * scale[i] / lacing).collect();
    let h_dual = 1 + comarks.iter().sum::<i64>();
    let dim_g = n as i64 + 2 * simple.len() as i64;
    Ok(AlgebraData {
        type_letter: letter,
        rank: n,
        cartan_matrix: cartan,
        root_form: b,
        positive_roots_simple: simple,
        positive_roots: weight_coords,
        rho: vec![1; n],
        form_matrix: form,
        form_denominator: form_den,
        h_dual,
        lacing_m: lacing,
        comarks,
        dim_g,
        root_scale: scale,
    })
}

impl AlgebraData {
    pub fn name(&self) -> String {
        format!("{}{}", self.type_letter, self.rank)
    }

    /// `<alpha, lambda>` for the positive root with index `r`.
    pub fn root_pairing(&self, r: usize, lambda: &[i64]) -> i64 {
        let c = &self.positive_roots_simple[r];
        (0..self.rank).map(|i| c[i] * self.root_scale[i] * lambda[i]).sum()
    }

    /// `<x, y>` scaled by the form denominator, hence an integer.
    pub fn scaled_form(&self, x: &[i64], y: &[i64]) -> i64 {
        let den = self.form_denominator;
        let mut acc = 0i64;
        for i in 0..self.rank {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                let f = self.form_matrix[i][j];
                acc += x[i] * y[j] * (f.numer() * (den / f.denom()));
            }
        }
        acc
    }

    pub fn form(&self, x: &[i64], y: &[i64]) -> Rational64 {
        Rational64::new(self.scaled_form(x, y), self.form_denominator)
    }

    pub fn level_of(&self, lambda: &[i64]) -> i64 {
        lambda.iter().zip(&self.comarks).map(|(l, c)| l * c).sum()
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        (0..self.rank).map(|j| i64::from(i == j)).collect()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// The permutation of fundamental weights induced by `-w_0`.
    pub fn duality_permutation(&self) -> Vec<usize> {
        let n = self.rank;
        match self.type_letter {
            LieType::A => (0..n).rev().collect(),
            LieType::D if n % 2 == 1 => {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(n - 2, n - 1);
                p
            }
            LieType::E if n == 6 => vec![5, 1, 4, 3, 2, 0],
            _ => (0..n).collect(),
        }
    }

    pub fn dual_weight(&self, lambda: &[i64]) -> Weight {
        let p = self.duality_permutation();
        let mut out = vec![0; self.rank];
        for (i, &j) in p.iter().enumerate() {
            out[j] = lambda[i];
        }
        out
    }

    /// Simple reflection `s_i` on fundamental-weight coordinates.
    pub fn reflect(&self, i: usize, v: &mut [i64]) {
        let c = v[i];
        if c == 0 {
            return;
        }
        for j in 0..self.rank {
            v[j] -= c * self.cartan_matrix[j][i];
        }
    }

    /// Order of the Weyl group from the standard closed forms.
    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |m: u128| (1..=m).product::<u128>();
        match self.type_letter {
            LieType::A => fact(n + 1),
            LieType::B | LieType::C => (1u128 << n) * fact(n),
            LieType::D => (1u128 << (n - 1)) * fact(n),
            LieType::E => match n {
                6 => 51840,
                7 => 2903040,
                _ => 696729600,
            },
            LieType::F => 1152,
            LieType::G => 12,
        }
    }
}
