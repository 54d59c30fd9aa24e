//! S and T matrices of C(g, k) from the Kac-Peterson formula, twists,
//! Gauss sums, Verlinde fields and the extracted fusion ring.

use cyclotomic::{root_of_unity, sqrt_integer, to_float, CycElem, SubfieldHandle};
use fusion_ring::{attach_exact_dims, FusionRing};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::category::CategoryHandle;
use crate::error::QgError;
use crate::fields::expected_fields;
use crate::lie::{LieType, Weight};
use crate::unity::RootOfUnity;
use crate::weyl::{check_cap, walk_orbit};

#[derive(Clone, Debug)]
pub struct ModularData {
    pub weights: Vec<Weight>,
    /// Unnormalized Weyl sums sum_w det(w) exp(-2 pi i <w(l+rho), m+rho>/(m kappa)).
    pub s_tilde: Vec<Vec<CycElem>>,
    /// sum_m |s_tilde[0][m]|^2, a positive integer.
    pub norm: BigInt,
    pub s: Vec<Vec<CycElem>>,
    pub twists: Vec<RootOfUnity>,
    pub t_diag: Vec<RootOfUnity>,
    pub qdims: Vec<CycElem>,
    pub gauss_sum_p: CycElem,
    pub central_charge: RootOfUnity,
}

pub fn twist(c: &CategoryHandle, lambda: &[i64]) -> RootOfUnity {
    let a = &c.algebra;
    let shifted: Vec<i64> = lambda.iter().map(|l| l + 2).collect();
    RootOfUnity::new(a.scaled_form(lambda, &shifted), 2 * c.mk() * a.form_denominator)
}

/// exp(2 pi i k dim g / (8 kappa)).
pub fn central_charge_formula(c: &CategoryHandle) -> RootOfUnity {
    RootOfUnity::new(c.level * c.algebra.dim_g, 8 * c.kappa)
}

/// Twists rescaled by exp(-2 pi i c/24), c = k dim g / kappa.
pub fn t_matrix(c: &CategoryHandle) -> Vec<RootOfUnity> {
    let shift = RootOfUnity::new(-c.level * c.algebra.dim_g, 24 * c.kappa);
    c.weyl_alcove().iter().map(|l| twist(c, l) * shift).collect()
}

pub fn gauss_sum(c: &CategoryHandle) -> CycElem {
    c.weyl_alcove()
        .iter()
        .map(|l| twist(c, l).to_cyc().mul_ref(&c.weyl_dimension(l).square()))
        .sum()
}

/// The Weyl sums for all pairs of alcove weights.
pub fn s_tilde(c: &CategoryHandle, weights: &[Weight], cap: usize) -> Result<Vec<Vec<CycElem>>, QgError> {
    let a = &c.algebra;
    check_cap(a, cap)?;
    let n = a.rank;
    let den = a.form_denominator;
    let modulus = (c.mk() * den) as usize;
    let shifted: Vec<Weight> = weights.iter().map(|w| w.iter().map(|x| x + 1).collect()).collect();
    // rows of the scaled Gram matrix applied to each mu + rho
    let gram: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| a.form_matrix[i][j].numer() * (den / a.form_matrix[i][j].denom())).collect())
        .collect();
    let paired: Vec<Vec<i64>> = shifted
        .iter()
        .map(|m| (0..n).map(|i| (0..n).map(|j| gram[i][j] * m[j]).sum()).collect())
        .collect();
    let mut out = Vec::with_capacity(weights.len());
    for lam in &shifted {
        let mut acc = vec![vec![0i64; modulus]; weights.len()];
        walk_orbit(a, lam, |y, sign| {
            for (row, p) in acc.iter_mut().zip(&paired) {
                let e: i64 = y.iter().zip(p).map(|(u, v)| u * v).sum();
                let k = (-e).rem_euclid(modulus as i64) as usize;
                row[k] += sign as i64;
            }
        });
        out.push(
            acc.into_iter()
                .map(|row| CycElem::from_folded(modulus as u64, BigInt::from(1), row.into_iter().map(BigInt::from).collect()))
                .collect(),
        );
    }
    Ok(out)
}

impl ModularData {
    pub fn compute(c: &CategoryHandle, cap: usize) -> Result<Self, QgError> {
        let weights = c.weyl_alcove();
        let st = s_tilde(c, &weights, cap)?;
        let norm_elem: CycElem = st[0].iter().map(|x| x.mul_ref(&x.conj())).sum();
        let norm = norm_elem
            .to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
            .ok_or_else(|| QgError::NonIntegral("S normalization".into()))?;
        let root = sqrt_integer(norm.to_i64().ok_or_else(|| QgError::NonIntegral("S normalization too large".into()))?);
        let npos = c.algebra.num_positive_roots() as i64;
        let factor = root_of_unity(4, npos)
            .mul_ref(&root)
            .mul_ref(&CycElem::from_integer(1).scale_rational(&num_rational::BigRational::new(1.into(), norm.clone())));
        let s = st.iter().map(|row| row.iter().map(|x| x.mul_ref(&factor)).collect()).collect();
        let twists: Vec<RootOfUnity> = weights.iter().map(|l| twist(c, l)).collect();
        let qdims: Vec<CycElem> = weights.iter().map(|l| c.weyl_dimension(l)).collect();
        let gauss_sum_p = twists.iter().zip(&qdims).map(|(t, d)| t.to_cyc().mul_ref(&d.square())).sum();
        Ok(ModularData {
            t_diag: t_matrix(c),
            central_charge: central_charge_formula(c),
            weights,
            s_tilde: st,
            norm,
            s,
            twists,
            qdims,
            gauss_sum_p,
        })
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn index_of(&self, w: &[i64]) -> Option<usize> {
        self.weights.iter().position(|x| x.as_slice() == w)
    }

    pub fn is_symmetric(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| (0..i).all(|j| self.s_tilde[i][j] == self.s_tilde[j][i]))
    }

    /// Exact unitarity, checked on the Weyl sums: s s^* = norm * I.
    pub fn is_unitary(&self) -> bool {
        let r = self.rank();
        let norm = CycElem::from_integer(self.norm.clone());
        for i in 0..r {
            for j in i..r {
                let v: CycElem = (0..r).map(|k| self.s_tilde[i][k].mul_ref(&self.s_tilde[j][k].conj())).sum();
                let want = if i == j { norm.clone() } else { CycElem::zero() };
                if v != want {
                    return false;
                }
            }
        }
        true
    }

    /// The normalized first row is positive real.
    pub fn first_row_positive(&self) -> bool {
        self.s[0].iter().all(|x| x.is_real() && x.to_rational().map_or(true, |r| r > num_rational::BigRational::zero()) && to_float(x, 64).re_f64() > 0.0)
    }

    pub fn verlinde_eigenvalue(&self, l: usize, m: usize) -> Result<CycElem, QgError> {
        Ok(self.s_tilde[l][m].div_ref(&self.s_tilde[0][m])?)
    }

    /// Type A only: pairs (l, m) where the Verlinde eigenvalue times
    /// exp(-2 pi i t(l) t(m + rho) / ((n+1) kappa)) is not in Q(zeta_kappa),
    /// t being the congruence class sum_j j l_j. Expected to be empty.
    pub fn class_twist_failures(&self, c: &CategoryHandle) -> Result<Vec<(usize, usize)>, QgError> {
        let a = &c.algebra;
        if a.type_letter != LieType::A {
            return Err(QgError::InvalidType(format!("class twist check needs type A, got {}", a.name())));
        }
        let n1 = a.rank as i64 + 1;
        let order = (n1 * c.kappa) as u64;
        let class = |w: &[i64]| -> i64 { w.iter().enumerate().map(|(j, x)| (j as i64 + 1) * x).sum() };
        let target = SubfieldHandle::cyclotomic(c.kappa as u64);
        let mut bad = Vec::new();
        for (l, wl) in self.weights.iter().enumerate() {
            for (m, wm) in self.weights.iter().enumerate() {
                let shifted: Vec<i64> = wm.iter().map(|x| x + 1).collect();
                let e = self.verlinde_eigenvalue(l, m)?;
                let twisted = e.mul_ref(&root_of_unity(order, -class(wl) * class(&shifted)));
                if !target.contains(&twisted) {
                    bad.push((l, m));
                }
            }
        }
        Ok(bad)
    }

    /// Join of the fields of all ratios s[l][m] / s[0][m].
    pub fn verlinde_field(&self) -> Result<SubfieldHandle, QgError> {
        let r = self.rank();
        let mut acc = SubfieldHandle::rationals();
        for m in 0..r {
            let inv = self.s_tilde[0][m].inv()?;
            for l in 0..r {
                let x = self.s_tilde[l][m].mul_ref(&inv);
                if !acc.contains(&x) {
                    acc = acc.join(&SubfieldHandle::generated_by(&x));
                }
            }
        }
        Ok(acc)
    }

    /// Ratio of the Gauss sum to the positive square root of the global
    /// dimension, in floating point, and its distance from the formula.
    pub fn gauss_ratio_error(&self) -> f64 {
        let p = to_float(&self.gauss_sum_p, 64);
        let dim: f64 = self.qdims.iter().map(|d| to_float(d, 64).re_f64().powi(2)).sum();
        let (re, im) = (p.re_f64() / dim.sqrt(), p.im_f64() / dim.sqrt());
        let (xr, xi) = self.central_charge.to_f64();
        ((re - xr).powi(2) + (im - xi).powi(2)).sqrt()
    }

    /// |p|^2 - dim, in floating point.
    pub fn gauss_modulus_error(&self) -> f64 {
        let p = to_float(&self.gauss_sum_p, 64);
        let dim: f64 = self.qdims.iter().map(|d| to_float(d, 64).re_f64().powi(2)).sum();
        (p.re_f64().powi(2) + p.im_f64().powi(2) - dim).abs() / dim
    }

    /// Exact form of the Gauss-sum identity: p^2 = xi^2 dim and p / xi > 0.
    pub fn gauss_identity_exact(&self) -> bool {
        let dim: CycElem = self.qdims.iter().map(CycElem::square).sum();
        let xi = self.central_charge.to_cyc();
        if self.gauss_sum_p.square() != xi.square().mul_ref(&dim) {
            return false;
        }
        let ratio = self.gauss_sum_p.mul_ref(&xi.conj());
        ratio.is_real() && to_float(&ratio, 64).re_f64() > 0.0
    }

    /// Order of T: the lcm of the orders of its entries.
    pub fn t_order(&self) -> u64 {
        self.t_diag.iter().fold(1u64, |acc, t| num_integer::lcm(acc, t.order()))
    }

    /// Floating-point check of (ST)^3 = S^2 for the normalized matrices.
    pub fn sl2_relation_error(&self) -> f64 {
        let r = self.rank();
        let s: Vec<Vec<(f64, f64)>> = self
            .s
            .iter()
            .map(|row| row.iter().map(|x| {
                let f = to_float(x, 64);
                (f.re_f64(), f.im_f64())
            }).collect())
            .collect();
        let t: Vec<(f64, f64)> = self.t_diag.iter().map(RootOfUnity::to_f64).collect();
        let mul = |a: &Vec<Vec<(f64, f64)>>, b: &Vec<Vec<(f64, f64)>>| -> Vec<Vec<(f64, f64)>> {
            (0..r)
                .map(|i| {
                    (0..r)
                        .map(|j| {
                            (0..r).fold((0.0, 0.0), |acc, k| {
                                let (x, y) = (a[i][k], b[k][j]);
                                (acc.0 + x.0 * y.0 - x.1 * y.1, acc.1 + x.0 * y.1 + x.1 * y.0)
                            })
                        })
                        .collect()
                })
                .collect()
        };
        let st: Vec<Vec<(f64, f64)>> = (0..r)
            .map(|i| (0..r).map(|j| {
                let (x, y) = (s[i][j], t[j]);
                (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)
            }).collect())
            .collect();
        let st3 = mul(&mul(&st, &st), &st);
        let s2 = mul(&s, &s);
        let mut err: f64 = 0.0;
        for i in 0..r {
            for j in 0..r {
                err = err.max((st3[i][j].0 - s2[i][j].0).abs() + (st3[i][j].1 - s2[i][j].1).abs());
            }
        }
        err
    }

    /// Two rows of S differ somewhere, for every pair of distinct weights.
    pub fn rows_separate(&self) -> bool {
        let r = self.rank();
        (0..r).all(|x| (0..x).all(|y| (0..r).any(|z| self.s_tilde[x][z] != self.s_tilde[y][z])))
    }
}

fn weight_label(w: &[i64]) -> String {
    let parts: Vec<String> = w.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

/// Fusion rules from the Verlinde formula, rounded from floating point
/// with an explicit error bound, then validated exactly.
pub fn grothendieck_ring(c: &CategoryHandle, md: &ModularData) -> Result<FusionRing, QgError> {
    let r = md.rank();
    let s: Vec<Vec<(f64, f64, f64)>> = md
        .s
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let f = to_float(x, 64);
                    (f.re_f64(), f.im_f64(), f.error_bound())
                })
                .collect()
        })
        .collect();
    let duality: Vec<usize> = md
        .weights
        .iter()
        .map(|w| md.index_of(&c.algebra.dual_weight(w)).expect("dual weight lies in the alcove"))
        .collect();
    let mut constants = vec![0u64; r * r * r];
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let (mut re, mut im, mut bound) = (0.0f64, 0.0f64, 0.0f64);
                for sig in 0..r {
                    let (a, b, d, z) = (s[i][sig], s[j][sig], s[k][sig], s[0][sig]);
                    // a * b * conj(d) / z, z real positive
                    let pr = a.0 * b.0 - a.1 * b.1;
                    let pi = a.0 * b.1 + a.1 * b.0;
                    let qr = pr * d.0 + pi * d.1;
                    let qi = pi * d.0 - pr * d.1;
                    re += qr / z.0;
                    im += qi / z.0;
                    let mag = (a.0.hypot(a.1) + a.2) * (b.0.hypot(b.1) + b.2) * (d.0.hypot(d.1) + d.2);
                    let rel = (a.2 / a.0.hypot(a.1).max(f64::MIN_POSITIVE))
                        + (b.2 / b.0.hypot(b.1).max(f64::MIN_POSITIVE))
                        + (d.2 / d.0.hypot(d.1).max(f64::MIN_POSITIVE))
                        + 2.0 * z.2 / z.0
                        + 16.0 * f64::EPSILON;
                    bound += mag / (z.0 - z.2) * rel.min(1.0);
                }
                bound += 16.0 * f64::EPSILON * r as f64 * (re.abs() + 1.0);
                let n = re.round();
                if bound > 0.25 || (re - n).abs() > bound + 1e-9 || im.abs() > bound + 1e-9 || n < 0.0 {
                    return Err(QgError::NonIntegral(format!(
                        "N[{i}][{j}][{k}] = {re} + {im}i (bound {bound})"
                    )));
                }
                constants[(i * r + j) * r + k] = n as u64;
            }
        }
    }
    let labels = md.weights.iter().map(|w| weight_label(w)).collect();
    let ring = FusionRing::new(labels, duality, constants)?;
    let bad = ring.validate();
    if !bad.is_empty() {
        return Err(QgError::NonIntegral(format!("extracted rules fail validation: {}", bad[0])));
    }
    // exact check of the ring-hom law with the quantum dimensions
    attach_exact_dims(&ring, md.qdims.clone())?;
    Ok(ring)
}

/// What the Verlinde field is expected to be, with a note where the
/// stated and the argued values disagree. None where no claim is made.
pub fn verlinde_field_prediction(c: &CategoryHandle) -> Option<(SubfieldHandle, Option<&'static str>)> {
    let a = &c.algebra;
    let (k, n, kappa) = (c.level, a.rank, c.kappa as u64);
    match a.type_letter {
        LieType::A if n > 1 => (k > 2).then(|| (SubfieldHandle::cyclotomic((n as u64 + 1) * kappa), None)),
        LieType::D if n % 2 == 1 => (k > 2).then(|| {
            (SubfieldHandle::cyclotomic(4 * kappa), Some("statement gives the real subfield; the argument gives the full cyclotomic field"))
        }),
        LieType::E if n == 6 => Some(if k == 1 {
            (SubfieldHandle::cyclotomic(3), None)
        } else {
            (SubfieldHandle::cyclotomic(3 * kappa), Some("statement gives the real subfield; the argument gives the full cyclotomic field"))
        }),
        _ => match expected_fields(c) {
            crate::fields::Expected::Closed { k1, .. } => Some((k1, None)),
            crate::fields::Expected::Exception { .. } => None,
        },
    }
}
