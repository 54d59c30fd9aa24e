use cyclotomic::{quadratic_field, SubfieldHandle};
use fusion_ring::ring::{abelian_group_ring, ising_ring, product_ring, ring_s, ring_t};
use quantum_group::*;

fn cat(t: LieType, n: usize, k: i64) -> CategoryHandle {
    CategoryHandle::new(t, n, k).unwrap()
}

fn suite() -> Vec<CategoryHandle> {
    let mut v = Vec::new();
    for k in 1..=5 {
        v.push(cat(LieType::A, 1, k));
    }
    for k in 1..=3 {
        v.push(cat(LieType::A, 2, k));
        v.push(cat(LieType::C, 2, k));
        v.push(cat(LieType::G, 2, k));
    }
    for k in 1..=2 {
        v.push(cat(LieType::A, 3, k));
        v.push(cat(LieType::B, 3, k));
        v.push(cat(LieType::C, 3, k));
        v.push(cat(LieType::D, 4, k));
        v.push(cat(LieType::F, 4, k));
    }
    v
}

#[test]
fn modular_data_suite() {
    for c in suite() {
        let md = ModularData::compute(&c, DEFAULT_WEYL_CAP).unwrap();
        let name = c.name();
        assert_eq!(md.rank() as u64, c.alcove_size(), "{name}");
        assert!(md.is_symmetric(), "{name}");
        assert!(md.is_unitary(), "{name}");
        assert!(md.first_row_positive(), "{name}");
        assert!(md.rows_separate(), "{name}");
        assert!(md.gauss_identity_exact(), "{name}");
        assert!(md.gauss_ratio_error() < 1e-9, "{name}");
        assert!(md.gauss_modulus_error() < 1e-9, "{name}");
        assert!(md.sl2_relation_error() < 1e-9, "{name}");
        assert_eq!(md.central_charge, central_charge_formula(&c), "{name}");
        for (i, w) in md.weights.iter().enumerate() {
            assert_eq!(md.verlinde_eigenvalue(i, 0).unwrap(), c.qdim(w).unwrap(), "{name} {w:?}");
        }
        let ring = grothendieck_ring(&c, &md).unwrap();
        assert!(ring.is_valid(), "{name}");
        assert_eq!(ring.rank(), md.rank());
    }
}

#[test]
fn a1_s_matrix_is_a_sine_table() {
    for k in 1..=6 {
        let c = cat(LieType::A, 1, k);
        let md = ModularData::compute(&c, DEFAULT_WEYL_CAP).unwrap();
        let kappa = k + 2;
        let norm = (2.0 / kappa as f64).sqrt();
        for a in 0..=k as usize {
            for b in 0..=k as usize {
                let expect = norm * (std::f64::consts::PI * ((a + 1) * (b + 1)) as f64 / kappa as f64).sin();
                let got = cyclotomic::to_float(&md.s[a][b], 64);
                assert!((got.re_f64() - expect).abs() < 1e-12, "k={k} ({a},{b})");
                assert!(got.im_f64().abs() < 1e-12);
            }
        }
    }
}

#[test]
fn twists_and_charges() {
    let c = cat(LieType::A, 1, 2);
    assert_eq!(central_charge_formula(&c), RootOfUnity::new(3, 16));
    assert_eq!(central_charge_formula(&c).order(), 16);
    assert_eq!(central_charge_formula(&cat(LieType::A, 1, 1)).order(), 8);
    let product = central_charge_formula(&cat(LieType::A, 1, 6)) * central_charge_formula(&cat(LieType::A, 2, 7));
    assert_eq!(product, RootOfUnity::new(157, 160));
    let product = central_charge_formula(&cat(LieType::A, 1, 2)) * central_charge_formula(&cat(LieType::A, 1, 5));
    assert_eq!(product, RootOfUnity::new(51, 112));
    for k in 1..=6 {
        let c = cat(LieType::A, 1, k);
        assert_eq!(twist(&c, &[0]), RootOfUnity::one());
        // conformal weight j(j+2)/(4 kappa)
        assert_eq!(twist(&c, &[1]), RootOfUnity::new(3, 4 * (k + 2)));
    }
    let c = cat(LieType::E, 8, 2);
    let t = t_matrix(&c);
    assert_eq!(t.len(), 3);
    assert_eq!(twist(&c, &[0, 0, 0, 0, 0, 0, 0, 1]), RootOfUnity::new(15, 16));
}

#[test]
fn t_order_matches_conductor() {
    for c in [cat(LieType::A, 2, 2), cat(LieType::G, 2, 2), cat(LieType::B, 3, 1)] {
        let md = ModularData::compute(&c, DEFAULT_WEYL_CAP).unwrap();
        let lcm = md.t_diag.iter().fold(1u64, |acc, t| num_integer::lcm(acc, t.order()));
        assert_eq!(md.t_order(), lcm);
        let p = gauss_sum(&c);
        assert_eq!(p, md.gauss_sum_p);
    }
}

#[test]
fn extracted_rings() {
    let c = cat(LieType::A, 1, 1);
    let ring = grothendieck_ring(&c, &ModularData::compute(&c, 4).unwrap()).unwrap();
    assert!(ring.isomorphism_to(&abelian_group_ring(&[2])).is_some());
    let c = cat(LieType::A, 1, 2);
    let ring = grothendieck_ring(&c, &ModularData::compute(&c, 4).unwrap()).unwrap();
    assert!(ring.isomorphism_to(&ising_ring()).is_some());
    assert_eq!(ring.labels(), &["(0)".to_string(), "(1)".into(), "(2)".into()]);
    let c = cat(LieType::A, 2, 1);
    let ring = grothendieck_ring(&c, &ModularData::compute(&c, 4).unwrap()).unwrap();
    assert!(ring.isomorphism_to(&abelian_group_ring(&[3])).is_some());
    assert_eq!(ring.dual(1), 2);
    let c = cat(LieType::G, 2, 1);
    let ring = grothendieck_ring(&c, &ModularData::compute(&c, 4).unwrap()).unwrap();
    assert!(ring.isomorphism_to(&fusion_ring::ring::fibonacci_ring()).is_some());
}

#[test]
fn e7_level_two_is_a_product() {
    let c = cat(LieType::E, 7, 2);
    assert!(matches!(ModularData::compute(&c, DEFAULT_WEYL_CAP), Err(QgError::RankCap { .. })));
    let md = ModularData::compute(&c, 7).unwrap();
    assert!(md.is_unitary());
    let ring = grothendieck_ring(&c, &md).unwrap();
    assert!(ring.isomorphism_to(&product_ring(&ring_s(), &ring_t())).is_some());
    assert_eq!(md.verlinde_field().unwrap(), quadratic_field(2).join(&quadratic_field(5)));
}

#[test]
fn verlinde_fields() {
    let c = cat(LieType::A, 2, 1);
    let md = ModularData::compute(&c, 4).unwrap();
    assert_eq!(md.verlinde_field().unwrap(), SubfieldHandle::cyclotomic(3));
    for (t, n, k) in [(LieType::A, 1, 4), (LieType::A, 1, 5), (LieType::A, 2, 3), (LieType::A, 2, 4), (LieType::A, 3, 3), (LieType::C, 3, 2), (LieType::G, 2, 5)] {
        let c = cat(t, n, k);
        let md = ModularData::compute(&c, 4).unwrap();
        let (pred, note) = verlinde_field_prediction(&c).unwrap();
        assert!(note.is_none());
        assert_eq!(md.verlinde_field().unwrap(), pred, "{}", c.name());
    }
    // A_n beyond level 2: the full cyclotomic field of order (n+1) kappa
    assert_eq!(verlinde_field_prediction(&cat(LieType::A, 2, 3)).unwrap().0, SubfieldHandle::cyclotomic(9));
    // the odd D_n field is the full cyclotomic one
    let c = cat(LieType::D, 5, 3);
    let md = ModularData::compute(&c, 5).unwrap();
    assert_eq!(md.verlinde_field().unwrap(), SubfieldHandle::cyclotomic(44));
    assert_eq!(verlinde_field_prediction(&c).unwrap().0, SubfieldHandle::cyclotomic(44));
}

#[test]
fn verlinde_field_e6_low_levels() {
    // E6 at level 2 generates only an index-2 subfield of the predicted Q(zeta_42)
    let c = cat(LieType::E, 6, 2);
    let md = ModularData::compute(&c, 6).unwrap();
    let l = md.verlinde_field().unwrap();
    let (pred, _) = verlinde_field_prediction(&c).unwrap();
    assert!(l.is_subfield_of(&pred));
    assert_eq!(2 * l.degree(), pred.degree());
}

#[test]
fn class_twist_congruence() {
    for n in 2..=3 {
        for k in 1..=5 {
            let c = cat(LieType::A, n, k);
            let md = ModularData::compute(&c, DEFAULT_WEYL_CAP).unwrap();
            assert!(md.class_twist_failures(&c).unwrap().is_empty(), "{}", c.name());
        }
    }
    // the twist is needed: without it A2 level 1 eigenvalues leave Q(i)
    let c = cat(LieType::A, 2, 1);
    let md = ModularData::compute(&c, DEFAULT_WEYL_CAP).unwrap();
    let e = md.verlinde_eigenvalue(1, 1).unwrap();
    assert!(!SubfieldHandle::cyclotomic(4).contains(&e));
    assert!(md.class_twist_failures(&cat(LieType::B, 3, 1)).is_err());
}

#[test]
fn weyl_cap_errors() {
    let c = cat(LieType::D, 5, 1);
    assert!(matches!(ModularData::compute(&c, DEFAULT_WEYL_CAP), Err(QgError::RankCap { rank: 5, cap: 4 })));
}
