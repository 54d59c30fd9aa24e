use cyclotomic::galois::stabilizer_exhaustive;
use cyclotomic::*;
use num_traits::Zero;

fn z(n: u64, k: i64) -> CycElem {
    root_of_unity(n, k)
}

#[test]
fn roots_of_unity() {
    assert_eq!(z(1, 0), CycElem::one());
    let i = z(4, 1);
    assert_eq!(i.square(), CycElem::from_integer(-1));
    let w = z(12, 2);
    assert_eq!(w, z(6, 1));
    assert_eq!(w.conductor(), 3);
    assert!(w.pow(6).unwrap().is_one());
    assert!(!w.pow(3).unwrap().is_one());
}

#[test]
fn basic_arithmetic() {
    assert_eq!(&z(3, 1) + &z(3, 2), CycElem::from_integer(-1));
    assert!((&z(8, 1) * &z(8, 7)).is_one());
    let a = &CycElem::one() + &z(5, 1);
    assert!((&a * &a.inv().unwrap()).is_one());
    assert_eq!(CycElem::zero().inv(), Err(CycError::DivisionByZero));
}

#[test]
fn galois_examples() {
    let conj = GaloisElement::new(7, -1).unwrap();
    assert_eq!(conj.apply(&z(7, 1)).unwrap(), z(7, -1));
    let r = CycElem::from_ratio(3, 7);
    for l in [1, 2, 3, 4, 5, 6] {
        let s = GaloisElement::new(7, l).unwrap();
        assert_eq!(s.apply(&r).unwrap(), r);
    }
    let s2 = GaloisElement::new(5, 2).unwrap();
    let once = s2.apply(&z(5, 1)).unwrap();
    assert_eq!(s2.apply(&once).unwrap(), z(5, 4));
    assert!(GaloisElement::new(10, 5).is_err());
    // modulus must be a multiple of the conductor
    assert!(GaloisElement::new(4, 1).unwrap().apply(&z(5, 1)).is_err());
}

#[test]
fn stabilizer_examples() {
    assert_eq!(stabilizer_of(&CycElem::from_integer(5)), vec![1]);
    assert_eq!(stabilizer_of(&z(9, 1)), vec![1]);
    let sqrt2 = &z(8, 1) + &z(8, 7);
    // brute force over the four units of (Z/8)^x
    let mut fixed = Vec::new();
    for l in [1i64, 3, 5, 7] {
        if sqrt2.galois(l).unwrap() == sqrt2 {
            fixed.push(l as u64);
        }
    }
    assert_eq!(stabilizer_of(&sqrt2), fixed);
    assert_eq!(fixed, vec![1, 7]);
}

#[test]
fn generated_fields() {
    assert_eq!(field_generated_by(&CycElem::one()).degree(), 1);
    let g = &z(5, 1) + &z(5, -1);
    let f = field_generated_by(&g);
    assert_eq!(f.degree(), 2);
    assert_eq!(f, quadratic_field(5));
    assert_eq!(f, real_cyclotomic(5));
    let x = &cos_two_pi_frac(1, 13) - &cos_pi_frac(3, 13);
    let stab = stabilizer_exhaustive(&x);
    assert_eq!(stab, stabilizer_of(&x));
    let fx = field_generated_by(&x);
    assert_eq!(fx.degree(), 3);
    assert_eq!(fx.degree() * stab.len() as u64, ntheory::euler_phi(x.conductor()));
}

#[test]
fn lattice_operations() {
    assert_eq!(real_cyclotomic(5), real_cyclotomic(10));
    assert!(subfield_leq(&quadratic_field(2), &real_cyclotomic(24)));
    assert!(!subfield_leq(&real_cyclotomic(24), &quadratic_field(2)));
    let j = field_join(&quadratic_field(2), &quadratic_field(5));
    assert_eq!(j.degree(), 4);
    assert_eq!(j.conductor(), 40);
    assert_eq!(field_meet(&j, &quadratic_field(10)), quadratic_field(10));
    assert_eq!(
        field_meet(&quadratic_field(2), &quadratic_field(5)),
        SubfieldHandle::rationals()
    );
    assert!(j.contains(&sqrt_integer(10)));
    assert!(!j.contains(&sqrt_integer(3)));
    assert!(!SubfieldHandle::rationals().contains(&sqrt_integer(2)));
}

#[test]
fn real_cyclotomic_fields() {
    assert_eq!(real_cyclotomic(4), SubfieldHandle::rationals());
    assert_eq!(real_cyclotomic(8), quadratic_field(2));
    assert_eq!(real_cyclotomic(12), quadratic_field(3));
    for n in 3..60u64 {
        assert_eq!(real_cyclotomic(n).degree(), ntheory::euler_phi(n) / 2, "n = {n}");
        assert_eq!(real_cyclotomic(n), field_generated_by(&cos_two_pi_frac(1, n)));
    }
}

#[test]
fn cosines() {
    assert_eq!(cos_pi_frac(0, 1), CycElem::one());
    assert_eq!(cos_pi_frac(1, 3), CycElem::from_ratio(1, 2));
    let c = cos_pi_frac(1, 4);
    assert_eq!(c.square(), CycElem::from_ratio(1, 2));
    assert!(c.is_real());
}

#[test]
fn quantum_integers() {
    for m in 2..=20u64 {
        assert!(quantum_integer(1, m).unwrap().is_one());
        for n in 1..m as i64 {
            let a = quantum_integer(n, m).unwrap();
            assert_eq!(a, quantum_integer(m as i64 - n, m).unwrap());
            assert!(a.is_real());
        }
    }
    assert_eq!(quantum_integer(2, 4).unwrap().square(), CycElem::from_integer(2));
    assert!(quantum_integer(0, 5).is_err());
    assert!(quantum_integer(5, 5).is_err());
    assert_eq!(quantum_integer_field(1, 7).unwrap(), SubfieldHandle::rationals());
    assert_eq!(quantum_integer_field(2, 9).unwrap(), real_cyclotomic(18));
    assert_eq!(quantum_integer_field(3, 9).unwrap(), real_cyclotomic(9));
}

#[test]
fn quantum_integer_field_matches_stabilizer() {
    for m in 2..=40u64 {
        for n in 1..m as i64 {
            let x = quantum_integer(n, m).unwrap();
            assert_eq!(
                quantum_integer_field(n, m).unwrap(),
                field_generated_by(&x),
                "[{n}]_{m}"
            );
        }
    }
}

#[test]
fn float_values() {
    let one = to_float(&z(1, 0), 64);
    assert_eq!(one.re_decimal(10), "1.0000000000");
    // sqrt 2 rounded to 50 digits, independent reference
    let s = to_float(&quantum_integer(2, 4).unwrap(), 200);
    assert_eq!(s.re_decimal(50), "1.41421356237309504880168872420969807856967187537695");
    // cos(2 pi / 5) = (sqrt 5 - 1) / 4
    let c = to_float(&cos_two_pi_frac(1, 5), 128);
    let oracle = (5f64.sqrt() - 1.0) / 4.0;
    assert!((c.re_f64() - oracle).abs() < 1e-15);
    assert_eq!(c.re_decimal(8), "0.30901699");
    assert!(c.error_bound() <= 2f64.powi(-127) * c.re_f64());
    let i = to_float(&z(4, 1), 64);
    assert!(i.re_lower() <= num_rational::BigRational::zero());
    assert_eq!(i.im_decimal(5), "1.00000");
}

#[test]
fn gauss_sums_and_square_roots() {
    for p in [3u64, 5, 7, 11, 13] {
        let g = gauss_sum_prime(p);
        let sign = if p % 4 == 1 { 1 } else { -1 };
        assert_eq!(g.square(), CycElem::from_integer(sign * p as i64));
    }
    for d in [2i64, 3, 5, 6, 21, -1, -3, 8, 12] {
        let s = sqrt_integer(d);
        assert_eq!(s.square(), CycElem::from_integer(d));
        if d > 0 {
            assert_eq!(real_sign(&s), std::cmp::Ordering::Greater);
        }
    }
}

