//! Small-integer number theory used throughout: factorization, totients,
//! unit groups modulo N and the subgroups living inside them.

use std::collections::BTreeSet;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Residue of a signed integer modulo `m`, as used for Galois units.
pub fn residue(a: i64, m: u64) -> u64 {
    (a as i128).rem_euclid(m as i128) as u64
}

/// Prime factorization by trial division, sorted by prime.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn euler_phi(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    factorize(n)
        .into_iter()
        .fold(1, |acc, (p, e)| acc * (p - 1) * p.pow(e - 1))
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn is_prime_small(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Smallest primitive root modulo an odd prime power or 2, 4.
pub fn primitive_root_prime_power(p: u64, e: u32) -> u64 {
    let m = p.pow(e);
    if m <= 2 {
        return 1;
    }
    if m == 4 {
        return 3;
    }
    let phi = (p - 1) * p.pow(e - 1);
    let pf = prime_divisors(phi);
    (2..m)
        .find(|&g| gcd(g, m) == 1 && pf.iter().all(|&q| pow_mod(g, phi / q, m) != 1))
        .expect("odd prime powers have primitive roots")
}

/// Canonical residue of a unit; modulus 1 has the single unit written as 1.
pub fn unit_residue(l: u64, n: u64) -> u64 {
    if n == 1 {
        1
    } else {
        l % n
    }
}

/// The unit group (Z/NZ)^x as a sorted list of residues.
pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![1];
    }
    (1..n).filter(|&l| gcd(l, n) == 1).collect()
}

/// Chinese remaindering of `a mod m` with `b mod n` for coprime moduli.
pub fn crt(a: u64, m: u64, b: u64, n: u64) -> u64 {
    if m == 1 {
        return b % n.max(1);
    }
    if n == 1 {
        return a % m;
    }
    let mn = m * n;
    let inv = inv_mod(m % n, n).expect("coprime moduli");
    let t = mul_mod((b + n - a % n) % n, inv, n);
    (a + m * t) % mn
}

/// A generating set of (Z/NZ)^x built prime power by prime power.
pub fn unit_group_generators(n: u64) -> Vec<u64> {
    if n <= 2 {
        return vec![1];
    }
    let f = factorize(n);
    let mut gens = Vec::new();
    for &(p, e) in &f {
        let pe = p.pow(e);
        let rest = n / pe;
        let mut local = Vec::new();
        if p == 2 {
            if e >= 2 {
                local.push(pe - 1);
            }
            if e >= 3 {
                local.push(5);
            }
        } else {
            local.push(primitive_root_prime_power(p, e));
        }
        for g in local {
            gens.push(crt(g, pe, 1, rest));
        }
    }
    gens
}

/// Closure of a set of units under multiplication modulo `n`.
pub fn generated_subgroup(gens: &[u64], n: u64) -> Vec<u64> {
    let one = unit_residue(1, n);
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    seen.insert(one);
    let mut frontier = vec![one];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = unit_residue(mul_mod(x, g, n.max(1)), n);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// True if the sorted residue list is closed under multiplication.
pub fn is_subgroup(sorted: &[u64], n: u64) -> bool {
    if sorted.binary_search(&unit_residue(1, n)).is_err() {
        return false;
    }
    for &a in sorted {
        for &b in sorted {
            if sorted
                .binary_search(&unit_residue(mul_mod(a, b, n.max(1)), n))
                .is_err()
            {
                return false;
            }
        }
    }
    true
}

/// A small generating set of a subgroup given as a sorted list.
pub fn subgroup_generators(sorted: &[u64], n: u64) -> Vec<u64> {
    let mut gens = Vec::new();
    let mut span = vec![unit_residue(1, n)];
    for &x in sorted {
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = generated_subgroup(&gens, n);
        }
    }
    gens
}

/// Multiplicative order of a unit modulo `n`.
pub fn unit_order(l: u64, n: u64) -> u64 {
    if n <= 2 {
        return 1;
    }
    let mut x = l % n;
    let mut k = 1;
    while x != 1 {
        x = mul_mod(x, l, n);
        k += 1;
    }
    k
}
