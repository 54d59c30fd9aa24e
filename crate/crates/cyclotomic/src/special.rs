//! Named elements: roots of unity, cosines, quantum integers and square roots.

use num_bigint::BigInt;

use crate::elem::CycElem;
use crate::error::CycError;
use crate::ntheory::{factorize, pow_mod};
use crate::subfield::{real_cyclotomic, SubfieldHandle};

/// zeta_n^k.
pub fn root_of_unity(n: u64, k: i64) -> CycElem {
    assert!(n >= 1, "order must be positive");
    CycElem::from_int_terms(n, &[(k, 1)])
}

/// cos(a pi / b).
pub fn cos_pi_frac(a: i64, b: u64) -> CycElem {
    assert!(b >= 1);
    CycElem::from_terms(2 * b, 2, [(a, BigInt::from(1)), (-a, BigInt::from(1))])
}

/// cos(2 pi a / n).
pub fn cos_two_pi_frac(a: i64, n: u64) -> CycElem {
    assert!(n >= 1);
    CycElem::from_terms(n, 2, [(a, BigInt::from(1)), (-a, BigInt::from(1))])
}

/// The quantum integer [n]_m = sin(n pi / m) / sin(pi / m), for 1 <= n < m.
pub fn quantum_integer(n: i64, m: u64) -> Result<CycElem, CycError> {
    if n < 1 || n as u64 >= m {
        return Err(CycError::OutOfRange { n, m });
    }
    let terms = (0..n).map(|j| (n - 1 - 2 * j, 1));
    Ok(CycElem::from_int_terms(2 * m, &terms.collect::<Vec<_>>()))
}

/// Closed form for the field generated by [n]_m.
pub fn quantum_integer_field(n: i64, m: u64) -> Result<SubfieldHandle, CycError> {
    if n < 1 || n as u64 >= m {
        return Err(CycError::OutOfRange { n, m });
    }
    let n = n as u64;
    Ok(if n == 1 || n == m - 1 {
        SubfieldHandle::rationals()
    } else if n % 2 == 0 {
        real_cyclotomic(2 * m)
    } else {
        real_cyclotomic(m)
    })
}

fn legendre(a: u64, p: u64) -> i64 {
    match pow_mod(a, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// The quadratic Gauss sum over an odd prime p; its square is
/// (-1)^((p-1)/2) p.
pub fn gauss_sum_prime(p: u64) -> CycElem {
    let terms: Vec<(i64, i64)> = (1..p).map(|a| (a as i64, legendre(a, p))).collect();
    CycElem::from_int_terms(p, &terms)
}

/// Positive square root of a nonnegative integer, or i times the root of
/// its absolute value for negative input.
pub fn sqrt_integer(d: i64) -> CycElem {
    if d == 0 {
        return CycElem::zero();
    }
    let mut acc = if d < 0 {
        root_of_unity(4, 1)
    } else {
        CycElem::one()
    };
    let mut square_part: i64 = 1;
    for (p, e) in factorize(d.unsigned_abs()) {
        square_part *= (p as i64).pow(e / 2);
        if e % 2 == 0 {
            continue;
        }
        let r = if p == 2 {
            CycElem::from_int_terms(8, &[(1, 1), (7, 1)])
        } else if p % 4 == 1 {
            gauss_sum_prime(p)
        } else {
            // the Gauss sum is i sqrt(p) here
            &gauss_sum_prime(p) * &root_of_unity(4, -1)
        };
        acc = &acc * &r;
    }
    acc.scale_int(square_part)
}
