//! Dense polynomials over `Q`, low degree first.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type QPoly = Vec<BigRational>;

pub(crate) fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(|x| x.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn sub(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(r)
}

pub(crate) fn divrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (i, y) in b.iter().enumerate() {
            r[i + shift] -= &c * y;
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

pub(crate) fn derivative(a: &[BigRational]) -> QPoly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, x)| x * BigRational::from_integer((i as i64).into()))
            .collect(),
    )
}

pub(crate) fn gcd(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in x.iter_mut() {
            *c = &*c / &l;
        }
    }
    x
}

/// Returns `u` with `u·a ≡ 1 (mod m)` when `gcd(a, m) = 1`.
pub(crate) fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<QPoly> {
    // invariant: r0 = s0·a (mod m), r1 = s1·a (mod m)
    let mut r0 = trim(m.to_vec());
    let mut r1 = trim(a.to_vec());
    let mut s0: QPoly = Vec::new();
    let mut s1: QPoly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let (_, s) = divrem(&s0, m);
    Some(trim(s.iter().map(|x| x / &c).collect()))
}
