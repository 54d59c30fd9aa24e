//! Which degrees [Q_n : Q] = phi(n)/2 occur, and levels with xi^8 = 1.

use std::collections::BTreeSet;

use num_prime::nt_funcs::is_prime64;

use crate::factored::FactoredInteger;

/// All values phi(x) <= limit. Since phi(x) >= sqrt(x/2), x <= 2 limit^2
/// suffices.
pub fn phi_image(limit: u64) -> BTreeSet<u64> {
    let top = (2 * limit * limit).max(2) as usize;
    let mut phi: Vec<u64> = (0..=top as u64).collect();
    for p in 2..=top {
        if phi[p] == p as u64 {
            for m in (p..=top).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
        }
    }
    phi.into_iter().skip(1).filter(|&v| v <= limit).collect()
}

/// Degrees m <= bound that are not phi(n)/2 for any n.
pub fn unrealized_degrees(bound: u64) -> Vec<u64> {
    let image = phi_image(2 * bound);
    (1..=bound).filter(|m| !image.contains(&(2 * m))).collect()
}

/// N = p^b with 2 p^a + 1 composite for all 1 <= a <= b; then 2N is not a
/// totient value.
pub fn prime_power_sixteen_check(n: &FactoredInteger) -> bool {
    let Some((p, b)) = n.prime_power() else {
        return false;
    };
    (1..=b).all(|a| match p.checked_pow(a).and_then(|x| x.checked_mul(2)).and_then(|x| x.checked_add(1)) {
        Some(q) => !is_prime64(q),
        None => false,
    })
}

/// Levels k >= 1 with k + h dividing h * dim, i.e. xi^8 = 1.
pub fn eight_root_levels(h_dual: u64, dim_g: u64) -> Vec<u64> {
    let f = FactoredInteger::new(h_dual * dim_g).expect("positive");
    f.divisors().into_iter().filter(|&d| d > h_dual).map(|d| d - h_dual).collect()
}
