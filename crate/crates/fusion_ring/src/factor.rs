//! Factorization of integer polynomials: modular factorization
//! (Cantor-Zassenhaus), Hensel lifting and factor recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::poly::IntPoly;

/// Polynomials over F_p, constant term first, trimmed.
pub(crate) mod modp {
    pub type P = Vec<u64>;

    pub fn trim(mut a: P) -> P {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn mulm(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    pub fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1 % p;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = mulm(r, b, p);
            }
            b = mulm(b, b, p);
            e >>= 1;
        }
        r
    }

    pub fn add(a: &P, b: &P, p: u64) -> P {
        let n = a.len().max(b.len());
        let mut out = vec![0; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out[i] = (x + y) % p;
        }
        trim(out)
    }

    pub fn sub(a: &P, b: &P, p: u64) -> P {
        let n = a.len().max(b.len());
        let mut out = vec![0; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out[i] = (x + p - y) % p;
        }
        trim(out)
    }

    pub fn mul(a: &P, b: &P, p: u64) -> P {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u128; a.len() + b.len() - 1];
        let pp = p as u128;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u128 * y as u128) % pp;
            }
        }
        trim(out.into_iter().map(|v| v as u64).collect())
    }

    pub fn scale(a: &P, c: u64, p: u64) -> P {
        trim(a.iter().map(|&x| mulm(x, c, p)).collect())
    }

    pub fn monic(a: &P, p: u64) -> P {
        match a.last() {
            None => vec![],
            Some(&lc) => scale(a, inv(lc, p), p),
        }
    }

    pub fn divrem(a: &P, b: &P, p: u64) -> (P, P) {
        assert!(!b.is_empty());
        let db = b.len() - 1;
        if a.len() <= db {
            return (vec![], a.clone());
        }
        let il = inv(b[db], p);
        let mut r = a.clone();
        let mut q = vec![0; a.len() - db];
        for i in (0..q.len()).rev() {
            let c = mulm(r[i + db], il, p);
            if c == 0 {
                continue;
            }
            q[i] = c;
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + p - mulm(c, y, p)) % p;
            }
        }
        (trim(q), trim(r))
    }

    pub fn rem(a: &P, b: &P, p: u64) -> P {
        divrem(a, b, p).1
    }

    pub fn gcd(a: &P, b: &P, p: u64) -> P {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        monic(&a, p)
    }

    /// (g, s, t) with s a + t b = g = gcd, g monic.
    pub fn xgcd(a: &P, b: &P, p: u64) -> (P, P, P) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1], vec![]);
        let (mut t0, mut t1) = (vec![], vec![1]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1, p);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = sub(&s0, &mul(&q, &s1, p), p);
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = sub(&t0, &mul(&q, &t1, p), p);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let lc = *r0.last().unwrap();
        let il = inv(lc, p);
        (scale(&r0, il, p), scale(&s0, il, p), scale(&t0, il, p))
    }

    pub fn powmod(base: &P, mut e: u128, m: &P, p: u64) -> P {
        let mut r: P = vec![1];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                r = rem(&mul(&r, &b, p), m, p);
            }
            b = rem(&mul(&b, &b, p), m, p);
            e >>= 1;
        }
        r
    }

    pub fn derivative(a: &P, p: u64) -> P {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulm(c, i as u64 % p, p))
                .collect(),
        )
    }
}

use modp::P;

fn reduce(f: &IntPoly, p: u64) -> P {
    let pb = BigInt::from(p);
    modp::trim(
        f.coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect(),
    )
}

fn distinct_degree(f: &P, p: u64) -> Vec<(P, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x: P = vec![0, 1];
    let mut h = x.clone();
    let mut d = 0;
    while f.len() > 1 {
        d += 1;
        if 2 * d > f.len() - 1 {
            out.push((f.clone(), f.len() - 1));
            break;
        }
        h = modp::powmod(&h, p as u128, &f, p);
        let g = modp::gcd(&f, &modp::sub(&h, &x, p), p);
        if g.len() > 1 {
            out.push((g.clone(), d));
            f = modp::divrem(&f, &g, p).0;
            h = modp::rem(&h, &f, p);
        }
    }
    out
}

fn equal_degree(f: &P, d: usize, p: u64, rng: &mut StdRng) -> Vec<P> {
    let n = f.len() - 1;
    if n == d {
        return vec![modp::monic(f, p)];
    }
    loop {
        let a: P = modp::trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let e = (num_traits::pow(p as u128, d) - 1) / 2;
        let b = modp::sub(&modp::powmod(&a, e, f, p), &vec![1], p);
        let g = modp::gcd(f, &b, p);
        if g.len() > 1 && g.len() < f.len() {
            let h = modp::divrem(f, &g, p).0;
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&h, d, p, rng));
            return out;
        }
    }
}

/// Monic irreducible factors of a square-free polynomial over F_p, p odd.
pub(crate) fn factor_mod_p(f: &P, p: u64) -> Vec<P> {
    let mut rng = StdRng::seed_from_u64(0x5eed ^ p);
    let f = modp::monic(f, p);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(&f, p) {
        out.extend(equal_degree(&g, d, p, &mut rng));
    }
    out
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn sym_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

type ZP = Vec<BigInt>;

fn zp_mul(a: &ZP, b: &ZP, m: &BigInt) -> ZP {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out.iter().map(|c| c.mod_floor(m)).collect()
}

fn to_zp(a: &P) -> ZP {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn from_zp_mod_p(a: &ZP, p: u64) -> P {
    let pb = BigInt::from(p);
    modp::trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

/// Lift f = lc * g * h (mod p), g, h monic and coprime mod p, to mod p^k.
fn hensel_two(f: &IntPoly, g: &P, h: &P, p: u64, k: u32) -> (ZP, ZP) {
    let (_, s, t) = modp::xgcd(g, h, p);
    let lc = f.lead();
    let lc_inv = modp::inv(lc.mod_floor(&BigInt::from(p)).to_u64().unwrap(), p);
    let mut gg = to_zp(g);
    let mut hh = to_zp(h);
    let pb = BigInt::from(p);
    let mut pj = pb.clone();
    for _ in 1..k {
        let next = &pj * &pb;
        // e = (f - lc * G * H) / p^j mod p
        let prod = zp_mul(&gg, &hh, &next);
        let mut e = vec![BigInt::zero(); f.coeffs().len().max(prod.len())];
        for (i, c) in f.coeffs().iter().enumerate() {
            e[i] += c;
        }
        for (i, c) in prod.iter().enumerate() {
            e[i] -= &lc * c;
        }
        let e: Vec<BigInt> = e.iter().map(|c| c.mod_floor(&next) / &pj).collect();
        let e = modp::scale(&from_zp_mod_p(&e, p), lc_inv, p);
        let (q, r) = modp::divrem(&modp::mul(&e, &t, p), g, p);
        let dg = r;
        let dh = modp::add(&modp::mul(&e, &s, p), &modp::mul(&q, h, p), p);
        for (i, &c) in dg.iter().enumerate() {
            gg[i] = (&gg[i] + &pj * c).mod_floor(&next);
        }
        if dh.len() > hh.len() {
            hh.resize(dh.len(), BigInt::zero());
        }
        for (i, &c) in dh.iter().enumerate() {
            hh[i] = (&hh[i] + &pj * c).mod_floor(&next);
        }
        pj = next;
    }
    (gg, hh)
}

fn product_mod_p(fs: &[P], p: u64) -> P {
    fs.iter().fold(vec![1], |acc, f| modp::mul(&acc, f, p))
}

/// Lift a full modular factorization of f (monic factors) to mod p^k.
fn hensel_multi(f: &IntPoly, factors: &[P], p: u64, k: u32) -> Vec<ZP> {
    if factors.len() == 1 {
        let m = num_traits::pow(BigInt::from(p), k as usize);
        let lc_inv = invert_mod(&f.lead(), &m);
        return vec![f
            .coeffs()
            .iter()
            .map(|c| (c * &lc_inv).mod_floor(&m))
            .collect()];
    }
    let mid = factors.len() / 2;
    let g = product_mod_p(&factors[..mid], p);
    let h = product_mod_p(&factors[mid..], p);
    let (gl, hl) = hensel_two(f, &g, &h, p, k);
    let mut out = hensel_multi(&IntPoly::new(gl), &factors[..mid], p, k);
    out.extend(hensel_multi(&IntPoly::new(hl), &factors[mid..], p, k));
    out
}

fn invert_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    e.x.mod_floor(m)
}

fn l2_norm_bound(f: &IntPoly) -> BigInt {
    let sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    sq.sqrt() + 1
}

/// Irreducible factors of a square-free primitive polynomial of degree >= 1.
fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    if f.degree() <= 1 {
        return vec![f.primitive()];
    }
    // pick the prime with the fewest modular factors among a few candidates
    let mut best: Option<(u64, Vec<P>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if p > (1 << 30) {
            break;
        }
        let lc_mod = f.lead().mod_floor(&BigInt::from(p));
        if lc_mod.is_zero() {
            continue;
        }
        let fp = reduce(f, p);
        let d = modp::derivative(&fp, p);
        if modp::gcd(&fp, &d, p).len() != 1 {
            continue;
        }
        let fs = factor_mod_p(&fp, p);
        if fs.len() == 1 {
            return vec![f.primitive()];
        }
        if best.as_ref().map_or(true, |(_, b)| fs.len() < b.len()) {
            best = Some((p, fs));
        }
        tried += 1;
        if tried >= 6 {
            break;
        }
    }
    let (p, fs) = best.expect("some prime keeps the polynomial square-free");
    let bound = BigInt::from(2) * f.lead().abs() * (BigInt::one() << f.degree()) * l2_norm_bound(f);
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_multi(f, &fs, p, k);
    recombine(f.primitive(), lifted, &pk)
}

fn recombine(mut f: IntPoly, mut pool: Vec<ZP>, pk: &BigInt) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= pool.len() {
        let mut found = false;
        for subset in combinations(pool.len(), s) {
            let lc = f.lead();
            let mut g: ZP = vec![lc.mod_floor(pk)];
            for &i in &subset {
                g = zp_mul(&g, &pool[i], pk);
            }
            let cand = IntPoly::new(g.iter().map(|c| sym_mod(c, pk)).collect()).primitive();
            if cand.degree() == 0 {
                continue;
            }
            if let Some(q) = f.div_exact(&cand) {
                out.push(cand);
                f = q.primitive();
                let mut idx = 0;
                pool.retain(|_| {
                    let keep = !subset.contains(&idx);
                    idx += 1;
                    keep
                });
                found = true;
                break;
            }
        }
        if !found {
            s += 1;
        }
    }
    if f.degree() > 0 {
        out.push(f.primitive());
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Distinct irreducible factors over Z of a nonzero polynomial, each primitive
/// with positive leading coefficient, sorted by degree then coefficients.
pub fn factor(f: &IntPoly) -> Vec<IntPoly> {
    if f.degree() == 0 {
        return vec![];
    }
    let sf = f.squarefree_part();
    // split off the factor x, which the modular stage handles poorly for tiny p
    let mut out = Vec::new();
    let mut rest = sf;
    if rest.coeffs()[0].is_zero() {
        out.push(IntPoly::x());
        rest = rest.div_exact(&IntPoly::x()).unwrap();
    }
    if rest.degree() > 0 {
        out.extend(factor_squarefree(&rest));
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    out
}
