use cyclotomic::{quadratic_field, sqrt_integer, CycElem, SubfieldHandle};
use fusion_ring::analysis::{
    adjoint_subring, attach_cyclotomic_embedding, check_main_lemma, fpdim, fpdim_of_element, fpdim_total,
    is_multiplicatively_generated_by, is_subring, pointed_subring, subring_R_K, subring_generated_by,
};
use fusion_ring::grading::{dimensional_grading, universal_grading};
use fusion_ring::io::{from_json, to_json};
use fusion_ring::poly::IntPoly;
use fusion_ring::ring::*;
use fusion_ring::{ConductorChoice, Violation};
use num_rational::BigRational;

fn golden() -> CycElem {
    sqrt_integer(5).add_ref(&CycElem::one()).scale_rational(&BigRational::new(1.into(), 2.into()))
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[test]
fn validation() {
    assert!(abelian_group_ring(&[2]).validate().is_empty());
    assert!(fibonacci_ring().validate().is_empty());
    let bad = fibonacci_ring().with_constant(1, 1, 0, 2);
    let v = bad.validate();
    assert!(!v.is_empty());
    assert!(v.iter().any(|x| matches!(x, Violation::DualityPairing { .. })));
    assert!(v.iter().all(|x| x.to_string().contains("axiom") || x.to_string().contains("associativity") || x.to_string().contains("duality")));
    // breaking associativity alone
    let bad = ising_ring().with_constant(1, 1, 1, 1);
    assert!(bad.validate().iter().any(|x| matches!(x, Violation::Associativity { .. })));
}

#[test]
fn fusion_matrices() {
    let f = fibonacci_ring();
    assert_eq!(f.fusion_matrix(0), vec![vec![1, 0], vec![0, 1]]);
    assert_eq!(f.fusion_matrix(1), vec![vec![0, 1], vec![1, 1]]);
    let g = abelian_group_ring(&[3, 2]);
    for i in 0..g.rank() {
        let m = g.fusion_matrix(i);
        for row in &m {
            assert_eq!(row.iter().sum::<i64>(), 1);
        }
        for k in 0..g.rank() {
            assert_eq!(m.iter().map(|row| row[k]).sum::<i64>(), 1);
        }
    }
}

#[test]
fn frobenius_perron_dimensions() {
    let g = abelian_group_ring(&[4]);
    for i in 0..4 {
        assert!(fpdim(&g, i).is_one());
    }
    let phi = fpdim(&fibonacci_ring(), 1);
    assert_eq!(phi.minpoly(), &IntPoly::from_i64(&[-1, -1, 1]));
    let (lo, hi) = phi.interval();
    assert!(lo >= &q(1) && hi <= &q(2));
    let sigma = fpdim(&ising_ring(), 2);
    assert_eq!(sigma.minpoly(), &IntPoly::from_i64(&[-2, 0, 1]));
    assert!((sigma.to_f64() - 2f64.sqrt()).abs() < 1e-14);
}

#[test]
fn element_and_total_dimensions() {
    let f = fibonacci_ring();
    assert!(fpdim_of_element(&f, &[1, 0]).is_one());
    let total = fpdim_total(&f);
    assert_eq!(total.minpoly(), &IntPoly::from_i64(&[5, -5, 1]));
    assert!((total.to_f64() - (5.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
    assert_eq!(fpdim_total(&abelian_group_ring(&[7])).to_rational(), Some(q(7)));
    // 1 + 2X has dimension 1 + 2 phi = 2 + sqrt 5
    let x = fpdim_of_element(&f, &[1, 2]);
    assert_eq!(x.minpoly(), &IntPoly::from_i64(&[-1, -4, 1]));
}

#[test]
fn embeddings() {
    let f = fibonacci_ring();
    let dims = attach_cyclotomic_embedding(&f, ConductorChoice::Fixed(5));
    assert!(dims.is_exact());
    assert_eq!(dims.exact_at(1).unwrap(), &golden());

    let g = abelian_group_ring(&[2, 2]);
    let dims = attach_cyclotomic_embedding(&g, ConductorChoice::Fixed(1));
    assert!(dims.exact().unwrap().iter().all(CycElem::is_one));

    let p = product_ring(&ring_s(), &ring_t());
    let dims = attach_cyclotomic_embedding(&p, ConductorChoice::Fixed(40));
    let d = dims.exact().unwrap();
    let q25 = quadratic_field(2).join(&quadratic_field(5));
    assert!(d.iter().all(|x| q25.contains(x)));
    let idx = p.index_of("X_SX_T").unwrap();
    assert_eq!(SubfieldHandle::generated_by(&d[idx]), q25);
    assert_eq!(d[idx], sqrt_integer(2).mul_ref(&golden()));

    // Q(sqrt 2) is not inside Q(zeta_5)
    let dims = attach_cyclotomic_embedding(&ising_ring(), ConductorChoice::Fixed(5));
    assert_eq!(dims.failures(), vec![2]);
    assert!(dims.exact().is_err());
}

#[test]
fn conductor_search() {
    let r = su2_level_ring(5);
    let dims = attach_cyclotomic_embedding(&r, ConductorChoice::default());
    assert!(dims.is_exact());
    // d_1 = 2 cos(pi/7)
    let d1 = dims.exact_at(1).unwrap();
    assert_eq!(d1, &cyclotomic::cos_pi_frac(1, 7).scale_int(2));
}

#[test]
fn pointed_and_adjoint() {
    let g = abelian_group_ring(&[2, 3]);
    assert_eq!(pointed_subring(&g), (0..6).collect::<Vec<_>>());
    assert_eq!(adjoint_subring(&g), vec![0]);
    let f = fibonacci_ring();
    assert_eq!(pointed_subring(&f), vec![0]);
    assert_eq!(adjoint_subring(&f), vec![0, 1]);
    let s = ring_s();
    assert_eq!(pointed_subring(&s), vec![0, 2]);
    assert_eq!(adjoint_subring(&s), vec![0, 2]);
}

#[test]
fn generated_subrings() {
    assert_eq!(subring_generated_by(&trivial_ring(), &[0]), vec![0]);
    assert_eq!(subring_generated_by(&ising_ring(), &[0]), vec![0]);
    assert_eq!(subring_generated_by(&fibonacci_ring(), &[1]), vec![0, 1]);
    let z4 = abelian_group_ring(&[4]);
    assert_eq!(subring_generated_by(&z4, &[2]), vec![0, 2]);
    assert!(is_subring(&z4, &[0, 2]));
    assert!(!is_subring(&z4, &[0, 1]));
}

#[test]
fn universal_gradings() {
    let g = universal_grading(&abelian_group_ring(&[2, 4])).unwrap();
    assert_eq!(g.invariants, Some(vec![2, 4]));
    assert_eq!(g.order(), 8);
    let f = universal_grading(&fibonacci_ring()).unwrap();
    assert_eq!(f.order(), 1);
    let p = product_ring(&ring_s(), &ring_t());
    let u = universal_grading(&p).unwrap();
    assert_eq!(u.invariants, Some(vec![2]));
    assert!(u.check(&p).is_ok());
    assert_eq!(universal_grading(&su2_level_ring(4)).unwrap().invariants, Some(vec![2]));
}

#[test]
fn dimensional_gradings() {
    let p = product_ring(&ring_s(), &ring_t());
    let dims = attach_cyclotomic_embedding(&p, ConductorChoice::default());
    let dg = dimensional_grading(&p, &dims).unwrap();
    assert_eq!(dg.k0, quadratic_field(5));
    assert_eq!(dg.k1, quadratic_field(2).join(&quadratic_field(5)));
    assert_eq!(dg.partition.invariants, Some(vec![2]));
    let trivial: Vec<&str> = dg.partition.trivial_component().iter().map(|&i| p.label(i)).collect();
    assert_eq!(trivial, vec!["1_S1_T", "1_SX_T", "Y_S1_T", "Y_SX_T"]);
    let u = universal_grading(&p).unwrap();
    assert!(u.refines(&dg.partition));

    let ising = ising_ring();
    let dims = attach_cyclotomic_embedding(&ising, ConductorChoice::default());
    let dg = dimensional_grading(&ising, &dims).unwrap();
    assert!(dg.k0.is_rational());
    assert_eq!(dg.k1, quadratic_field(2));
    assert_eq!(dg.partition.components(), vec![vec![0, 1], vec![2]]);

    let g = abelian_group_ring(&[6]);
    let dims = attach_cyclotomic_embedding(&g, ConductorChoice::default());
    assert_eq!(dimensional_grading(&g, &dims).unwrap().partition.order(), 1);

    let missing = attach_cyclotomic_embedding(&ising, ConductorChoice::Fixed(3));
    assert!(dimensional_grading(&ising, &missing).is_err());
}

#[test]
fn main_lemma_instances() {
    let ising = ising_ring();
    let dims = attach_cyclotomic_embedding(&ising, ConductorChoice::default());
    assert!(check_main_lemma(&dims, &[q(1), q(0), q(0)], &[q(1), q(0), q(0)]).unwrap());
    assert!(check_main_lemma(&dims, &[q(1), q(1), q(0)], &[q(0), q(0), q(1)]).unwrap());
    let half = BigRational::new(1.into(), 2.into());
    assert!(check_main_lemma(&dims, &[half.clone(), q(0), q(3)], &[q(0), half, q(0)]).unwrap());
    assert!(check_main_lemma(&dims, &[q(-1), q(0), q(0)], &[q(1), q(0), q(0)]).is_err());

    let p = product_ring(&ring_s(), &ring_t());
    let dims = attach_cyclotomic_embedding(&p, ConductorChoice::default());
    // exhaustive sweep over coefficients in {0, 1} for both elements
    for a in 0u32..64 {
        for b in 0u32..64 {
            let x1: Vec<BigRational> = (0..6).map(|i| q(((a >> i) & 1) as i64)).collect();
            let x2: Vec<BigRational> = (0..6).map(|i| q(((b >> i) & 1) as i64)).collect();
            assert!(check_main_lemma(&dims, &x1, &x2).unwrap(), "{a} {b}");
        }
    }
}

#[test]
fn subrings_by_field() {
    let g = abelian_group_ring(&[5]);
    let dims = attach_cyclotomic_embedding(&g, ConductorChoice::default());
    assert_eq!(subring_R_K(&dims, &SubfieldHandle::rationals()).unwrap(), (0..5).collect::<Vec<_>>());
    let f = fibonacci_ring();
    let dims = attach_cyclotomic_embedding(&f, ConductorChoice::default());
    assert_eq!(subring_R_K(&dims, &SubfieldHandle::rationals()).unwrap(), vec![0]);
    let p = product_ring(&ring_s(), &ring_t());
    let dims = attach_cyclotomic_embedding(&p, ConductorChoice::default());
    let rk = subring_R_K(&dims, &quadratic_field(5)).unwrap();
    let names: Vec<&str> = rk.iter().map(|&i| p.label(i)).collect();
    assert_eq!(names, vec!["1_S1_T", "1_SX_T", "Y_S1_T", "Y_SX_T"]);
    assert!(is_subring(&p, &rk));
    let rk2 = subring_R_K(&dims, &quadratic_field(2)).unwrap();
    assert!(is_subring(&p, &rk2));
    assert_eq!(rk2.len(), 3);
}

#[test]
fn multiplicative_generation() {
    assert!(is_multiplicatively_generated_by(&abelian_group_ring(&[5]), 1));
    assert!(!is_multiplicatively_generated_by(&abelian_group_ring(&[6]), 2));
    assert!(is_multiplicatively_generated_by(&fibonacci_ring(), 1));
    assert!(!is_multiplicatively_generated_by(&ring_s(), 2));
    assert!(is_multiplicatively_generated_by(&su2_level_ring(3), 1));
}

#[test]
fn products() {
    let s = ring_s();
    let st = product_ring(&s, &trivial_ring());
    assert_eq!(st.constants(), s.constants());
    assert_eq!(st.duality(), s.duality());
    let p = product_ring(&s, &ring_t());
    assert_eq!(p.rank(), 6);
    assert!(p.is_valid());
    let ds = attach_cyclotomic_embedding(&s, ConductorChoice::default()).exact().unwrap();
    let dt = attach_cyclotomic_embedding(&ring_t(), ConductorChoice::default()).exact().unwrap();
    let dp = attach_cyclotomic_embedding(&p, ConductorChoice::default()).exact().unwrap();
    for i in 0..3 {
        for j in 0..2 {
            assert_eq!(dp[i * 2 + j], ds[i].mul_ref(&dt[j]));
        }
    }
}

#[test]
fn file_format() {
    let text = to_json(&fibonacci_ring());
    assert_eq!(text, r#"{"rank":2,"labels":["1","X"],"duality":[0,1],"constants":[1,0,0,1,0,1,1,1]}"#);
    let back = from_json(&text).unwrap();
    assert_eq!(back, fibonacci_ring());
    assert_eq!(to_json(&back), text);
    assert!(from_json(r#"{"rank":2,"labels":["1"],"duality":[0,1],"constants":[]}"#).is_err());
    assert!(from_json("not json").is_err());
}

#[test]
fn isomorphism_search() {
    // swapping the factors of a product is an isomorphism
    let st = product_ring(&ring_s(), &ring_t());
    let ts = product_ring(&ring_t(), &ring_s());
    let p = st.isomorphism_to(&ts).expect("factors commute");
    for i in 0..6 {
        for j in 0..6 {
            for k in 0..6 {
                assert_eq!(st.c(i, j, k), ts.c(p[i], p[j], p[k]));
            }
        }
    }
    assert_eq!(ising_ring().isomorphism_to(&ring_s()), Some(vec![0, 2, 1]));
    assert!(abelian_group_ring(&[4]).isomorphism_to(&abelian_group_ring(&[2, 2])).is_none());
    assert!(abelian_group_ring(&[2, 3]).isomorphism_to(&abelian_group_ring(&[6])).is_some());
    assert!(fibonacci_ring().isomorphism_to(&abelian_group_ring(&[2])).is_none());
    assert!(fibonacci_ring().isomorphism_to(&ising_ring()).is_none());
}
