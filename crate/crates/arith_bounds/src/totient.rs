use num_integer::{gcd, lcm};

use crate::factored::FactoredInteger;

pub fn euler_phi(n: u64) -> u64 {
    let f = FactoredInteger::new(n).expect("n >= 1");
    f.factors().iter().map(|&(p, e)| p.pow(e - 1) * (p - 1)).product()
}

fn lambda_prime_power(p: u64, e: u32) -> u64 {
    if p == 2 && e >= 3 {
        1 << (e - 2)
    } else {
        p.pow(e - 1) * (p - 1)
    }
}

/// Exponent of (Z/nZ)^x.
pub fn carmichael_lambda(n: u64) -> u64 {
    let f = FactoredInteger::new(n).expect("n >= 1");
    f.factors().iter().fold(1, |acc, &(p, e)| lcm(acc, lambda_prime_power(p, e)))
}

/// The same exponent from the group itself: walk the cyclic subgroup of
/// each unit not yet seen and take the lcm of the orders. Slow; for checking.
pub fn unit_group_exponent(n: u64) -> u64 {
    if n <= 2 {
        return 1;
    }
    let mut seen = vec![false; n as usize];
    let mut exp = 1u64;
    for a in 2..n {
        if seen[a as usize] || gcd(a, n) != 1 {
            continue;
        }
        let (mut x, mut k) = (a, 1u64);
        while x != 1 {
            seen[x as usize] = true;
            x = x * a % n;
            k += 1;
        }
        exp = lcm(exp, k);
    }
    exp
}
