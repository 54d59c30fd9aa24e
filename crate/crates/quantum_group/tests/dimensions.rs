use cyclotomic::{quadratic_field, quantum_integer, real_cyclotomic, sqrt_integer, CycElem, SubfieldHandle};
use quantum_group::sweep::{check_fields, lambda_fields, sweep_cases};
use quantum_group::*;

fn cat(t: LieType, n: usize, k: i64) -> CategoryHandle {
    CategoryHandle::new(t, n, k).unwrap()
}

#[test]
fn alcoves() {
    for k in 1..8 {
        assert_eq!(cat(LieType::A, 1, k).weyl_alcove().len(), k as usize + 1);
    }
    assert_eq!(cat(LieType::E, 8, 2).weyl_alcove().len(), 3);
    assert_eq!(cat(LieType::A, 2, 1).weyl_alcove(), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
    assert_eq!(cat(LieType::E, 7, 2).alcove_size(), 6);
    assert_eq!(cat(LieType::G, 2, 1).alcove_size(), 2);
    assert_eq!(cat(LieType::F, 4, 1).alcove_size(), 2);
    // number of alcove weights = C(n+k, n) for A_n
    assert_eq!(cat(LieType::A, 3, 4).alcove_size(), 35);
    for c in [cat(LieType::B, 4, 3), cat(LieType::D, 5, 2), cat(LieType::E, 6, 3)] {
        let w = c.weyl_alcove();
        assert_eq!(w.len() as u64, c.alcove_size());
        assert_eq!(w[0], vec![0; c.algebra.rank]);
        assert!(w.windows(2).all(|p| p[0] < p[1]));
        assert!(w.iter().all(|l| c.in_alcove(l)));
    }
    assert!(CategoryHandle::new(LieType::A, 1, 0).is_err());
}

#[test]
fn quantum_dimensions() {
    let c = cat(LieType::A, 1, 2);
    assert!(c.qdim(&[0]).unwrap().is_one());
    assert_eq!(c.qdim(&[1]).unwrap(), sqrt_integer(2));
    assert!(matches!(c.qdim(&[3]), Err(QgError::OutsideAlcove(_))));
    for k in 1..9 {
        let c = cat(LieType::A, 1, k);
        for j in 0..=k {
            assert_eq!(c.qdim(&[j]).unwrap(), quantum_integer(j + 1, (k + 2) as u64).unwrap());
        }
    }
    // Fibonacci dimension in (G2, 1) and (F4, 1)
    let golden = (sqrt_integer(5) + CycElem::one()).scale_rational(&num_rational::BigRational::new(1.into(), 2.into()));
    assert_eq!(cat(LieType::G, 2, 1).qdim(&[1, 0]).unwrap(), golden);
    assert_eq!(cat(LieType::F, 4, 1).qdim(&[0, 0, 0, 1]).unwrap(), golden);
    // pointed levels
    for l in cat(LieType::E, 6, 1).weyl_alcove() {
        assert!(cat(LieType::E, 6, 1).qdim(&l).unwrap().is_one());
    }
}

#[test]
fn classical_limit() {
    // at large level the quantum dimension tends to the Weyl dimension
    let c = cat(LieType::B, 3, 400);
    for (l, dim) in [(vec![1, 0, 0], 7.0), (vec![0, 0, 1], 8.0), (vec![0, 1, 0], 21.0)] {
        assert!((c.qdim_f64(&l) - dim).abs() < 0.05, "{l:?}");
    }
    let e8 = cat(LieType::E, 8, 5000);
    assert!((e8.qdim_f64(&e8.algebra.fundamental_weight(7)) - 248.0).abs() < 1.0);
}

#[test]
fn qdims_positive_and_dual_invariant() {
    for (t, n, k) in [(LieType::A, 3, 3), (LieType::C, 3, 2), (LieType::D, 5, 2), (LieType::G, 2, 3), (LieType::E, 6, 2)] {
        let c = cat(t, n, k);
        for l in c.weyl_alcove() {
            let d = c.qdim(&l).unwrap();
            assert!(d.is_real());
            assert!(c.qdim_f64(&l) > 0.0);
            assert_eq!(d, c.qdim(&c.algebra.dual_weight(&l)).unwrap());
        }
    }
}

#[test]
fn a1_field_tower() {
    let q = SubfieldHandle::rationals();
    let cases = [
        (1, q.clone(), q.clone()),
        (2, q.clone(), quadratic_field(2)),
        (3, quadratic_field(5), quadratic_field(5)),
        (6, quadratic_field(2), real_cyclotomic(16)),
    ];
    for (k, k0, k1) in cases {
        let c = cat(LieType::A, 1, k);
        assert_eq!(c.k0_field(), k0, "k={k}");
        assert_eq!(c.k1_field(), k1, "k={k}");
    }
}

#[test]
fn exceptional_level_fields() {
    let f44 = cat(LieType::F, 4, 4);
    assert_eq!(f44.k0_field(), fields::f4_level4_field());
    assert_eq!(f44.k0_field().degree(), 3);
    let e85 = cat(LieType::E, 8, 5);
    assert_eq!(e85.k0_field(), fields::e8_level5_field());
    assert_eq!(e85.k0_field().degree(), 6);
    assert_eq!(cat(LieType::F, 4, 3).k0_field(), quadratic_field(6));
    assert_eq!(cat(LieType::G, 2, 3).k1_field(), quadratic_field(21));
    assert_eq!(cat(LieType::E, 7, 3).k1_field(), quadratic_field(21));
    assert_eq!(cat(LieType::E, 8, 3).k0_field(), real_cyclotomic(11));
    assert!(matches!(figure_b_prediction(&f44), Err(QgError::Exceptional(_))));
    assert!(expected_fields(&f44).is_exception());
}

#[test]
fn closed_form_rows() {
    let c = cat(LieType::C, 3, 4);
    assert_eq!(figure_b_prediction(&c).unwrap(), (real_cyclotomic(16), real_cyclotomic(16)));
    assert_eq!((c.k0_field(), c.k1_field()), (real_cyclotomic(16), real_cyclotomic(16)));
    let g = cat(LieType::G, 2, 5);
    assert_eq!(figure_b_prediction(&g).unwrap().0, real_cyclotomic(27));
    assert_eq!(g.k0_field(), real_cyclotomic(27));
    let b = cat(LieType::B, 3, 3);
    assert_eq!(figure_b_prediction(&b).unwrap(), (real_cyclotomic(16), real_cyclotomic(32)));
    assert_eq!((b.k0_field(), b.k1_field()), (real_cyclotomic(16), real_cyclotomic(32)));
}

#[test]
fn closed_forms_disagree_at_three_levels() {
    // the computed fields, where the closed-form rows do not apply
    let c22 = cat(LieType::C, 2, 2);
    assert_eq!((c22.k0_field(), c22.k1_field()), (SubfieldHandle::rationals(), quadratic_field(5)));
    assert_eq!(figure_b_prediction(&c22).unwrap().0, real_cyclotomic(10));
    let g24 = cat(LieType::G, 2, 4);
    assert_eq!((g24.k0_field(), g24.k1_field()), (quadratic_field(6), quadratic_field(6)));
    assert_eq!(figure_b_prediction(&g24).unwrap().0, real_cyclotomic(24));
    let e82 = cat(LieType::E, 8, 2);
    assert_eq!((e82.k0_field(), e82.k1_field()), (SubfieldHandle::rationals(), quadratic_field(2)));
    assert_eq!(e82.fpdim_total_category().to_rational().unwrap(), num_rational::BigRational::from_integer(4.into()));
}

#[test]
fn small_sweep_against_closed_forms() {
    let mut off = Vec::new();
    let cases = sweep_cases(150, 6);
    assert!(cases.len() > 200);
    for (t, n, k) in cases {
        let c = cat(t, n, k);
        assert_eq!(c.k1_field(), c.k1_field_exhaustive(), "{}", c.name());
        let chk = check_fields(&c);
        if !chk.matches() {
            off.push(chk.name);
        }
    }
    assert_eq!(off, vec!["C(C2,2)", "C(E8,2)", "C(G2,4)"]);
}

#[test]
fn single_object_fields() {
    for (t, n, k) in sweep_cases(60, 5) {
        let c = cat(t, n, k);
        let lf = lambda_fields(&c).unwrap();
        if c.name() == "C(E7,2)" {
            assert_eq!(lf.fields.len(), 4);
            continue;
        }
        assert!(lf.within_three(), "{}", c.name());
        if c.name() != "C(E8,2)" {
            assert!(lf.parity_mismatches.is_empty(), "{} {:?}", c.name(), lf.parity_mismatches);
        }
    }
    let e72 = cat(LieType::E, 7, 2);
    let lf = lambda_fields(&e72).unwrap();
    let expect = [
        SubfieldHandle::rationals(),
        quadratic_field(5),
        quadratic_field(2),
        quadratic_field(2).join(&quadratic_field(5)),
    ];
    assert!(expect.iter().all(|f| lf.fields.contains(f)));
    assert_eq!(lf.k0, quadratic_field(5));
}

#[test]
fn parity_bits() {
    let b = cat(LieType::B, 4, 3);
    assert_eq!(dimensional_component(&b, &[0, 0, 0, 0]), 0);
    assert_eq!(dimensional_component(&b, &[0, 0, 0, 1]), 1);
    assert_eq!(dimensional_component(&cat(LieType::A, 1, 4), &[2]), 0);
    assert_eq!(dimensional_component(&cat(LieType::A, 1, 4), &[1]), 1);
    let e7 = cat(LieType::E, 7, 4);
    assert_eq!(dimensional_component(&e7, &e7.algebra.fundamental_weight(6)), 1);
    assert_eq!(dimensional_component(&e7, &e7.algebra.fundamental_weight(0)), 0);
    assert_eq!(dimensional_component(&cat(LieType::G, 2, 5), &[1, 1]), 0);
    // the parity bit is the K0-coset of the dimension
    let c = cat(LieType::A, 3, 4);
    let k0 = c.k0_field();
    for l in c.weyl_alcove() {
        let inside = k0.contains(&c.qdim(&l).unwrap());
        assert_eq!(inside, dimensional_component(&c, &l) == 0, "{l:?}");
    }
}

#[test]
fn named_test_weights() {
    let c = cat(LieType::E, 7, 3);
    let names: Vec<&str> = test_weights(&c).into_iter().map(|(n, _)| n).collect();
    assert_eq!(names, vec!["56-dimensional", "adjoint"]);
    let (_, w56) = &test_weights(&c)[0];
    let big = cat(LieType::E, 7, 5000);
    assert!((big.qdim_f64(w56) - 56.0).abs() < 0.1);
    let g = cat(LieType::G, 2, 5000);
    let (_, w7) = &test_weights(&g)[0];
    assert!((g.qdim_f64(w7) - 7.0).abs() < 0.01);
    // outside the alcove the formula still evaluates, here to zero
    let g1 = cat(LieType::G, 2, 1);
    assert!(g1.weyl_dimension(&[0, 1]).is_zero());
}
