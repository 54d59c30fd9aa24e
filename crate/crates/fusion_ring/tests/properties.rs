use cyclotomic::galois::is_totally_real;
use cyclotomic::{CycElem, SubfieldHandle};
use fusion_ring::analysis::{
    adjoint_subring, attach_cyclotomic_embedding, check_main_lemma, is_subring, pointed_subring, subring_R_K,
    subring_generated_by, Dimensions,
};
use fusion_ring::grading::{dimensional_grading, universal_grading};
use fusion_ring::io::{from_json, to_json};
use fusion_ring::ring::*;
use fusion_ring::ConductorChoice;
use num_rational::BigRational;
use proptest::prelude::*;

fn base_ring() -> impl Strategy<Value = FusionRing> {
    prop_oneof![
        Just(trivial_ring()),
        (2u64..7).prop_map(|n| abelian_group_ring(&[n])),
        (2u64..4).prop_map(|n| abelian_group_ring(&[2, 2 * n])),
        Just(fibonacci_ring()),
        Just(ising_ring()),
        (1usize..7).prop_map(su2_level_ring),
        (2u64..6).prop_map(|n| tambara_yamagami_ring(&[n])),
    ]
}

fn ring() -> impl Strategy<Value = FusionRing> {
    (base_ring(), base_ring(), any::<bool>()).prop_filter_map("rank cap", |(a, b, prod)| {
        if !prod {
            return Some(a);
        }
        (a.rank() * b.rank() <= 14).then(|| product_ring(&a, &b))
    })
}

fn embedded(r: &FusionRing) -> Dimensions {
    attach_cyclotomic_embedding(r, ConductorChoice::default())
}

fn subring_dim(d: &[CycElem], s: &[usize]) -> CycElem {
    s.iter().map(|&i| d[i].square()).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generated_rings_validate_and_round_trip(r in ring()) {
        prop_assert!(r.validate().is_empty());
        let text = to_json(&r);
        let back = from_json(&text).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(to_json(&back), text);
    }

    #[test]
    fn dimensions_form_a_positive_character(r in ring()) {
        let dims = embedded(&r);
        let d = dims.exact().unwrap();
        let pointed = pointed_subring(&r);
        for i in 0..r.rank() {
            prop_assert_eq!(&d[i], &d[r.dual(i)]);
            prop_assert!(dims.algebraic()[i].at_least(&BigRational::from_integer(1.into())));
            prop_assert_eq!(d[i].is_one(), pointed.contains(&i));
            prop_assert!(is_totally_real(&d[i]));
            for j in 0..r.rank() {
                let rhs: CycElem = r.product(i, j).into_iter().map(|(k, c)| d[k].scale_int(c as i64)).sum();
                prop_assert_eq!(d[i].mul_ref(&d[j]), rhs);
            }
        }
    }

    #[test]
    fn squares_and_subring_dimensions_lie_in_k0(r in ring(), seed in proptest::collection::vec(0usize..14, 0..3)) {
        let dims = embedded(&r);
        let d = dims.exact().unwrap();
        let k0 = dims.k0().unwrap();
        for x in &d {
            prop_assert!(k0.contains(&x.square()));
        }
        let seed: Vec<usize> = seed.into_iter().filter(|&i| i < r.rank()).collect();
        for s in [pointed_subring(&r), adjoint_subring(&r), subring_generated_by(&r, &seed)] {
            prop_assert!(is_subring(&r, &s));
            prop_assert!(k0.contains(&subring_dim(&d, &s)));
        }
    }

    #[test]
    fn field_subrings_are_subrings(r in ring(), pick in 0usize..14) {
        let dims = embedded(&r);
        let k0 = dims.k0().unwrap();
        let kd = dims.field_of(pick % r.rank()).unwrap();
        for k in [SubfieldHandle::rationals(), k0.clone(), kd.clone(), kd.join(&k0)] {
            let s = subring_R_K(&dims, &k).unwrap();
            prop_assert!(is_subring(&r, &s));
        }
    }

    #[test]
    fn dimensional_grading_is_an_elementary_abelian_grading(r in ring()) {
        let dims = embedded(&r);
        let dg = dimensional_grading(&r, &dims).unwrap();
        let g = &dg.partition;
        prop_assert!(g.check(&r).is_ok());
        prop_assert!((0..g.order()).all(|a| g.table[a][a] == 0));
        prop_assert_eq!(g.order() as u64, dg.k1.degree() / dg.k0.degree());
        let u = universal_grading(&r).unwrap();
        prop_assert!(u.check(&r).is_ok());
        prop_assert!(u.refines(g));
        // a cyclic universal group allows at most a quadratic extension,
        // an odd one none at all
        if u.is_cyclic() {
            prop_assert!(g.order() <= 2);
        }
        if u.order() % 2 == 1 {
            prop_assert_eq!(&dg.k0, &dg.k1);
        }
    }

    #[test]
    fn main_lemma_holds(r in ring(), a in proptest::collection::vec(0i64..3, 14), b in proptest::collection::vec(0i64..3, 14), den in 1i64..4) {
        let dims = embedded(&r);
        let n = r.rank();
        let x1: Vec<BigRational> = a[..n].iter().map(|&v| BigRational::new(v.into(), den.into())).collect();
        let x2: Vec<BigRational> = b[..n].iter().map(|&v| BigRational::from_integer(v.into())).collect();
        prop_assert!(check_main_lemma(&dims, &x1, &x2).unwrap());
    }
}
