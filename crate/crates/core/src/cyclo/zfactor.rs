//! Low-degree factors of squarefree integer polynomials (Berlekamp–Zassenhaus
//! style: Cantor–Zassenhaus modulo a small prime, Hensel lifting, subset
//! recombination).  Only factors of degree at most a caller-supplied bound are
//! produced.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

type ZPoly = Vec<BigInt>;
type FPoly = Vec<u64>;

fn ztrim(mut p: ZPoly) -> ZPoly {
    while p.last().is_some_and(|x| x.is_zero()) {
        p.pop();
    }
    p
}

/// Exact quotient `a / b` in `Z[x]`, or `None` if `b` does not divide `a`.
pub(crate) fn exact_div_int(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let b = ztrim(b.to_vec());
    let mut r = ztrim(a.to_vec());
    if b.is_empty() {
        return None;
    }
    if r.len() < b.len() {
        return if r.is_empty() { Some(Vec::new()) } else { None };
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let (c, rem) = r.last().unwrap().div_rem(&lead);
        if !rem.is_zero() {
            return None;
        }
        for (i, y) in b.iter().enumerate() {
            r[i + shift] -= &c * y;
        }
        q[shift] = c;
        r = ztrim(r);
    }
    if r.is_empty() {
        Some(ztrim(q))
    } else {
        None
    }
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(p: &[BigInt]) -> ZPoly {
    let p = ztrim(p.to_vec());
    if p.is_empty() {
        return p;
    }
    let mut c = content(&p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

// ---- arithmetic in F_p[x] ----

fn ftrim(mut p: FPoly) -> FPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn fpow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn finv(a: u64, p: u64) -> u64 {
    fpow(a, p - 2, p)
}

fn fsub(a: &[u64], b: &[u64], p: u64) -> FPoly {
    let n = a.len().max(b.len());
    ftrim((0..n).map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0)) % p).collect())
}

fn fmul(a: &[u64], b: &[u64], p: u64) -> FPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    ftrim(r)
}

fn fdivrem(a: &[u64], b: &[u64], p: u64) -> (FPoly, FPoly) {
    let b = ftrim(b.to_vec());
    let mut r = ftrim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let li = finv(*b.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * li % p;
        for (i, y) in b.iter().enumerate() {
            r[i + shift] = (r[i + shift] + p - c * y % p) % p;
        }
        q[shift] = c;
        r = ftrim(r);
    }
    (ftrim(q), r)
}

fn fmonic(a: &[u64], p: u64) -> FPoly {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let li = finv(l, p);
            a.iter().map(|x| x * li % p).collect()
        }
    }
}

fn fgcd(a: &[u64], b: &[u64], p: u64) -> FPoly {
    let mut x = ftrim(a.to_vec());
    let mut y = ftrim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = fdivrem(&x, &y, p);
        x = y;
        y = r;
    }
    fmonic(&x, p)
}

/// `(s, t)` with `s·a + t·b = 1` for coprime `a`, `b`.
fn fbezout(a: &[u64], b: &[u64], p: u64) -> (FPoly, FPoly) {
    let (mut r0, mut r1) = (ftrim(a.to_vec()), ftrim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fdivrem(&r0, &r1, p);
        let s = fsub(&s0, &fmul(&q, &s1, p), p);
        let t = fsub(&t0, &fmul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let c = finv(r0[0], p);
    (
        s0.iter().map(|x| x * c % p).collect(),
        t0.iter().map(|x| x * c % p).collect(),
    )
}

fn fderiv(a: &[u64], p: u64) -> FPoly {
    ftrim(a.iter().enumerate().skip(1).map(|(i, x)| (i as u64 % p) * x % p).collect())
}

fn fpowmod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> FPoly {
    let mut r = vec![1u64];
    let (_, mut b) = fdivrem(base, m, p);
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            r = fdivrem(&fmul(&r, &b, p), m, p).1;
        }
        b = fdivrem(&fmul(&b, &b, p), m, p).1;
    }
    r
}

fn to_fp(a: &[BigInt], p: u64) -> FPoly {
    let pb = BigInt::from(p);
    ftrim(a.iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect())
}

/// Distinct-degree factorization up to degree `max_deg`; returns the products
/// per degree and the leftover product of higher-degree factors.
fn ddf(f: &[u64], max_deg: usize, p: u64) -> (Vec<(usize, FPoly)>, FPoly) {
    let mut out = Vec::new();
    let mut f = fmonic(f, p);
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let pe = BigUint::from(p);
    for d in 1..=max_deg {
        if f.len() <= 1 {
            break;
        }
        h = fpowmod(&h, &pe, &f, p);
        let g = fgcd(&f, &fsub(&h, &x, p), p);
        if g.len() > 1 {
            f = fdivrem(&f, &g, p).0;
            h = fdivrem(&h, &f, p).1;
            out.push((d, g));
        }
    }
    (out, f)
}

/// Splits a monic product of distinct degree-`d` irreducibles.
fn edf(f: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<FPoly> {
    if f.len() - 1 == d {
        return vec![f.to_vec()];
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: FPoly = ftrim((0..f.len() - 1).map(|_| rng.gen_range(0..p)).collect());
        if a.len() <= 1 {
            continue;
        }
        let g = fgcd(&a, f, p);
        let g = if g.len() > 1 && g.len() < f.len() {
            g
        } else {
            let b = fsub(&fpowmod(&a, &e, f, p), &[1], p);
            fgcd(&b, f, p)
        };
        if g.len() > 1 && g.len() < f.len() {
            let q = fmonic(&fdivrem(f, &g, p).0, p);
            let mut r = edf(&g, d, p, rng);
            r.extend(edf(&q, d, p, rng));
            return r;
        }
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| !n.is_multiple_of(k))
}

fn smod(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn zmod(p: &[BigInt], m: &BigInt) -> ZPoly {
    ztrim(p.iter().map(|x| x.mod_floor(m)).collect())
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    ztrim(r)
}

fn from_fp(a: &[u64]) -> ZPoly {
    a.iter().map(|&x| BigInt::from(x)).collect()
}

/// Lifts `t ≡ g·h (mod p)` to `t ≡ G·H (mod p^k)` with `G` monic.
fn hensel(t: &[BigInt], g: &[u64], h: &[u64], p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (s, tt) = fbezout(g, h, p);
    let _ = s;
    let pb = BigInt::from(p);
    let mut gg = from_fp(g);
    let mut hh = from_fp(h);
    let mut q = pb.clone();
    for _ in 1..k {
        let diff: ZPoly = {
            let prod = zmul(&gg, &hh);
            let n = t.len().max(prod.len());
            let z = BigInt::zero();
            (0..n).map(|i| t.get(i).unwrap_or(&z) - prod.get(i).unwrap_or(&z)).collect()
        };
        let e: ZPoly = diff.iter().map(|x| x / &q).collect();
        let e = to_fp(&e, p);
        let dg = fdivrem(&fmul(&tt, &e, p), g, p).1;
        let dh = fdivrem(&fsub(&e, &fmul(h, &dg, p), p), g, p).0;
        for (i, c) in dg.iter().enumerate() {
            gg[i] += &q * c;
        }
        if hh.len() < dh.len() {
            hh.resize(dh.len(), BigInt::zero());
        }
        for (i, c) in dh.iter().enumerate() {
            hh[i] += &q * c;
        }
        q *= &pb;
        gg = zmod(&gg, &q);
        hh = zmod(&hh, &q);
    }
    (gg, hh)
}

/// Irreducible factors of degree `<= max_deg` of a squarefree integer
/// polynomial, each primitive with positive leading coefficient.
pub(crate) fn small_factors(f: &[BigInt], max_deg: usize, fuel: &mut u64) -> Result<Vec<ZPoly>> {
    let mut f = primitive(f);
    let mut found = Vec::new();
    if f.len() <= 1 {
        return Ok(found);
    }
    if f[0].is_zero() {
        found.push(vec![BigInt::zero(), BigInt::one()]);
        f = primitive(&f[1..]);
        if f.len() <= 1 {
            return Ok(found);
        }
    }
    if f.len() == 2 {
        if max_deg >= 1 {
            found.push(f);
        }
        return Ok(found);
    }

    // prime choice: fewest modular factors of low degree among a few candidates
    let lc = f.last().unwrap().clone();
    let mut best: Option<(usize, u64, Vec<(usize, FPoly)>, FPoly)> = None;
    let mut tried = 0;
    let mut p = 2u64;
    while tried < 6 {
        p += 1;
        if p > 1 << 20 {
            return Err(Error::FuelExhausted("no suitable prime".into()));
        }
        if !is_prime(p) || (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = to_fp(&f, p);
        if fgcd(&fp, &fderiv(&fp, p), p).len() != 1 {
            continue;
        }
        tried += 1;
        let (parts, rest) = ddf(&fp, max_deg, p);
        let count: usize = parts.iter().map(|(d, g)| (g.len() - 1) / d).sum();
        if best.as_ref().is_none_or(|b| count < b.0) {
            best = Some((count, p, parts, rest));
        }
    }
    let (count, p, parts, rest) = best.unwrap();
    if count == 0 {
        return Ok(found);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let mut modf: Vec<FPoly> = Vec::new();
    for (d, g) in &parts {
        modf.extend(edf(g, *d, p, &mut rng));
    }
    let nlow = modf.len();

    // coefficient bound for factors of degree <= max_deg
    let norm2: BigInt = f.iter().map(|x| x * x).sum();
    let norm = norm2.sqrt() + 1;
    let binom = {
        let d = max_deg as u64;
        let mut b = BigInt::one();
        for i in 0..d / 2 {
            b = b * BigInt::from(d - i) / BigInt::from(i + 1);
        }
        b
    };
    let bound = BigInt::from(2) * lc.abs() * binom * norm;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut q = pb.clone();
    while q <= bound {
        q *= &pb;
        k += 1;
    }

    // sequential lifting: f ≡ lc·g_1···g_r·rest
    let lcp = to_fp(std::slice::from_ref(&lc), p);
    let mut lifted: Vec<ZPoly> = Vec::with_capacity(nlow);
    let mut target = f.clone();
    for i in 0..nlow {
        let mut h = lcp.clone();
        for g in modf.iter().skip(i + 1) {
            h = fmul(&h, g, p);
        }
        if rest.len() > 1 {
            h = fmul(&h, &rest, p);
        }
        let (g, hh) = hensel(&target, &modf[i], &h, p, k);
        lifted.push(g);
        target = hh;
    }

    // recombination over subsets of the low-degree modular factors
    let mut remaining: Vec<usize> = (0..nlow).collect();
    let mut size = 1;
    while size <= remaining.len() {
        let mut hit = false;
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let deg: usize = idx.iter().map(|&i| lifted[remaining[i]].len() - 1).sum();
            if deg <= max_deg {
                if *fuel == 0 {
                    return Err(Error::FuelExhausted("factor recombination".into()));
                }
                *fuel -= 1;
                let lcf = f.last().unwrap().clone();
                let mut cand = vec![lcf];
                for &i in &idx {
                    cand = zmul(&cand, &lifted[remaining[i]]);
                    cand = zmod(&cand, &q);
                }
                let cand: ZPoly = cand.iter().map(|x| smod(x, &q)).collect();
                let cand = primitive(&cand);
                if let Some(quot) = exact_div_int(&f, &cand) {
                    found.push(cand);
                    f = quot;
                    let drop: Vec<usize> = idx.iter().map(|&i| remaining[i]).collect();
                    remaining.retain(|r| !drop.contains(r));
                    hit = true;
                    break;
                }
            }
            // next combination
            let mut i = size;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if idx[i] < remaining.len() - size + i {
                    idx[i] += 1;
                    for j in i + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    i = usize::MAX;
                    break;
                }
            }
            if i != usize::MAX {
                break;
            }
        }
        if !hit {
            size += 1;
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn splits_product_of_quadratics() {
        // (x^2+1)(x^2-2)(x-3) = x^5 - 3x^4 - x^3 + 3x^2 - 2x + 6
        let f = zmul(&zmul(&z(&[1, 0, 1]), &z(&[-2, 0, 1])), &z(&[-3, 1]));
        let mut fuel = 10_000;
        let mut got = small_factors(&f, 2, &mut fuel).unwrap();
        got.sort();
        let mut want = vec![z(&[1, 0, 1]), z(&[-2, 0, 1]), z(&[-3, 1])];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn irreducible_quartic_found_whole() {
        let f = z(&[1, 0, 0, 0, 1]);
        let mut fuel = 10_000;
        assert_eq!(small_factors(&f, 4, &mut fuel).unwrap(), vec![f.clone()]);
        assert!(small_factors(&f, 3, &mut fuel).unwrap().is_empty());
    }

    #[test]
    fn non_monic_linear_factors() {
        // (2x-1)(3x+2)(x^2+x+1)
        let f = zmul(&zmul(&z(&[-1, 2]), &z(&[2, 3])), &z(&[1, 1, 1]));
        let mut fuel = 10_000;
        let got = small_factors(&f, 1, &mut fuel).unwrap();
        assert_eq!(got.len(), 2);
        assert!(got.contains(&z(&[-1, 2])) && got.contains(&z(&[2, 3])));
    }
}
