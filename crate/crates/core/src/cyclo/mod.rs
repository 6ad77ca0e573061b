//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! An element is stored as rational coordinates over the power basis
//! `1, ζ, …, ζ^{φ(n)-1}`.  Trailing zero coordinates are trimmed, and a value
//! whose only coordinate is the constant one is stored with conductor 1, so
//! rationals never carry a field with them.  Binary operations on different
//! conductors embed both operands into the lcm first.

mod poly;
mod qpoly;
mod roots;
mod zfactor;

pub use poly::UniPoly;
pub use roots::{find_roots, RootSet};

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) struct Table {
    pub phi: usize,
    /// Coefficients of `Φ_n`, low degree first, monic.
    pub cyclotomic: Vec<BigInt>,
    /// `powers[k]` is `ζ^k` reduced, for `0 <= k < n`.
    powers: Vec<Vec<BigRational>>,
}

fn tables() -> &'static RwLock<HashMap<u32, Arc<Table>>> {
    static T: OnceLock<RwLock<HashMap<u32, Arc<Table>>>> = OnceLock::new();
    T.get_or_init(|| RwLock::new(HashMap::new()))
}

pub(crate) fn table(n: u32) -> Arc<Table> {
    if let Some(t) = tables().read().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(build_table(n));
    tables().write().unwrap().insert(n, t.clone());
    t
}

/// Integer coefficients of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    let n = n as usize;
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = -BigInt::one();
    p[n] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let q = cyclotomic_polynomial(d as u32);
            p = zfactor::exact_div_int(&p, &q).expect("cyclotomic divisibility");
        }
    }
    p
}

fn build_table(n: u32) -> Table {
    let cyclotomic = cyclotomic_polynomial(n);
    let phi = cyclotomic.len() - 1;
    let mut powers: Vec<Vec<BigRational>> = Vec::with_capacity(n as usize);
    let mut cur = vec![BigRational::zero(); phi];
    cur[0] = BigRational::one();
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by ζ and reduce with x^φ = -Σ a_i x^i
        let top = cur[phi - 1].clone();
        let mut next = vec![BigRational::zero(); phi];
        for i in (1..phi).rev() {
            next[i] = cur[i - 1].clone();
        }
        if !top.is_zero() {
            for (i, a) in cyclotomic.iter().take(phi).enumerate() {
                next[i] -= &top * BigRational::from_integer(a.clone());
            }
        }
        cur = next;
    }
    Table { phi, cyclotomic, powers }
}

/// Euler's totient.
pub fn phi(n: u32) -> usize {
    let mut m = n;
    let mut r = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if m > 1 {
        r -= r / m;
    }
    r as usize
}

/// An exact element of a cyclotomic field.
#[derive(Clone)]
pub struct Cyclo {
    n: u32,
    c: Vec<BigRational>,
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo { n: 1, c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let c = if r.is_zero() { Vec::new() } else { vec![r] };
        Cyclo { n: 1, c }
    }

    /// `ζ_n^k`.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as usize;
        let t = table(n);
        Self::normalized(n, t.powers[k].clone())
    }

    /// Builds an element of `Q(ζ_n)` from power-basis coordinates of any
    /// length; coordinates beyond `φ(n)` are reduced.
    pub fn from_coeffs(n: u32, coeffs: Vec<BigRational>) -> Self {
        let t = table(n);
        if coeffs.len() <= t.phi {
            return Self::normalized(n, coeffs);
        }
        let mut acc = vec![BigRational::zero(); t.phi];
        for (k, a) in coeffs.into_iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let p = &t.powers[k % n as usize];
            for (i, b) in p.iter().enumerate() {
                if !b.is_zero() {
                    acc[i] += &a * b;
                }
            }
        }
        Self::normalized(n, acc)
    }

    fn normalized(n: u32, mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        let n = if c.len() <= 1 { 1 } else { n };
        Cyclo { n, c }
    }

    /// Conductor of the field the coordinates are currently expressed in.
    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self.c.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    /// Power-basis coordinates in `Q(ζ_m)`, padded to length `φ(m)`.
    pub fn coeffs_in(&self, m: u32) -> Result<Vec<BigRational>> {
        let e = self.embed(m)?;
        let mut c = e.c;
        c.resize(phi(m), BigRational::zero());
        Ok(c)
    }

    /// Re-expresses the element in `Q(ζ_m)` using `ζ_n = ζ_m^{m/n}`.
    pub fn embed(&self, m: u32) -> Result<Self> {
        if m == 0 || !m.is_multiple_of(self.n) {
            return Err(Error::IncompatibleConductor { from: self.n, to: m });
        }
        if self.n == m || self.is_rational() {
            return Ok(self.clone());
        }
        let step = (m / self.n) as usize;
        let mut wide = vec![BigRational::zero(); step * (self.c.len() - 1) + 1];
        for (i, a) in self.c.iter().enumerate() {
            wide[i * step] = a.clone();
        }
        Ok(Self::from_coeffs(m, wide))
    }

    fn lift_pair(a: &Cyclo, b: &Cyclo) -> (u32, Cyclo, Cyclo) {
        if a.n == b.n || b.is_rational() || a.is_rational() {
            let n = a.n.max(b.n);
            return (n, a.clone(), b.clone());
        }
        let m = a.n.lcm(&b.n);
        (m, a.embed(m).unwrap(), b.embed(m).unwrap())
    }

    fn add_impl(a: &Cyclo, b: &Cyclo, negate_b: bool) -> Cyclo {
        if b.is_zero() {
            return a.clone();
        }
        if a.is_zero() {
            return if negate_b { -b } else { b.clone() };
        }
        let (n, a, b) = Self::lift_pair(a, b);
        let len = a.c.len().max(b.c.len());
        let mut c = Vec::with_capacity(len);
        for i in 0..len {
            let x = a.c.get(i);
            let y = b.c.get(i);
            let v = match (x, y) {
                (Some(x), Some(y)) => {
                    if negate_b {
                        x - y
                    } else {
                        x + y
                    }
                }
                (Some(x), None) => x.clone(),
                (None, Some(y)) => {
                    if negate_b {
                        -y.clone()
                    } else {
                        y.clone()
                    }
                }
                (None, None) => unreachable!(),
            };
            c.push(v);
        }
        Self::normalized(n, c)
    }

    fn mul_impl(a: &Cyclo, b: &Cyclo) -> Cyclo {
        if a.is_zero() || b.is_zero() {
            return Cyclo::zero();
        }
        if a.is_rational() {
            let r = &a.c[0];
            return Self::normalized(b.n, b.c.iter().map(|x| x * r).collect());
        }
        if b.is_rational() {
            let r = &b.c[0];
            return Self::normalized(a.n, a.c.iter().map(|x| x * r).collect());
        }
        let (n, a, b) = Self::lift_pair(a, b);
        let t = table(n);
        let mut conv = vec![BigRational::zero(); a.c.len() + b.c.len() - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        if conv.len() <= t.phi {
            return Self::normalized(n, conv);
        }
        let mut acc = vec![BigRational::zero(); t.phi];
        for (k, v) in conv.into_iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if k < t.phi {
                acc[k] += v;
            } else {
                for (i, p) in t.powers[k % n as usize].iter().enumerate() {
                    if !p.is_zero() {
                        acc[i] += &v * p;
                    }
                }
            }
        }
        Self::normalized(n, acc)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against `Φ_n`.
    pub fn inv(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Cyclo::from_rational(self.c[0].recip()));
        }
        let t = table(self.n);
        let modulus: Vec<BigRational> = t
            .cyclotomic
            .iter()
            .map(|a| BigRational::from_integer(a.clone()))
            .collect();
        let u = qpoly::inverse_mod(&self.c, &modulus).ok_or(Error::DivisionByZero)?;
        Ok(Self::normalized(self.n, u))
    }

    pub fn pow(&self, e: u32) -> Cyclo {
        let mut acc = Cyclo::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Galois automorphism `ζ_n ↦ ζ_n^k` applied in the field of conductor `n`.
    pub fn galois(&self, n: u32, k: u32) -> Result<Cyclo> {
        let e = self.embed(n)?;
        if e.is_rational() {
            return Ok(e);
        }
        let mut wide = vec![BigRational::zero(); n as usize];
        for (i, a) in e.c.iter().enumerate() {
            let j = (i as u64 * k as u64 % n as u64) as usize;
            wide[j] += a;
        }
        Ok(Self::from_coeffs(n, wide))
    }

    /// Total order used for canonical sorting (not a field order).
    pub fn canonical_cmp(&self, other: &Cyclo) -> Ordering {
        let (_, a, b) = Self::lift_pair(self, other);
        let len = a.c.len().max(b.c.len());
        let z = BigRational::zero();
        for i in 0..len {
            let x = a.c.get(i).unwrap_or(&z);
            let y = b.c.get(i).unwrap_or(&z);
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// ASCII rendering readable by the presentation parser.
    pub fn to_dsl(&self) -> String {
        if self.is_rational() {
            let r = self.to_rational().unwrap();
            return format!("({})", r);
        }
        let mut parts = Vec::new();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if i == 0 {
                parts.push(format!("{}", a));
            } else {
                parts.push(format!("{}*zeta{}^{}", a, self.n, i));
            }
        }
        format!("({})", parts.join(" + ").replace("+ -", "- "))
    }
}

fn fmt_root(n: u32, i: usize) -> String {
    let g = (i as u32).gcd(&n);
    let (m, e) = (n / g, i as u32 / g);
    match (m, e) {
        (2, _) => "-1".into(),
        (_, 1) => format!("ζ{}", m),
        _ => format!("ζ{}^{}", m, e),
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            let body = if i == 0 {
                format!("{}", mag)
            } else if mag.is_one() {
                fmt_root(self.n, i)
            } else {
                format!("{}{}", mag, fmt_root(self.n, i))
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        write!(f, "{}", out)
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Cyclo) -> bool {
        if self.c.len() != other.c.len() && (self.n == other.n) {
            return false;
        }
        if self.n == other.n {
            return self.c == other.c;
        }
        (self - other).is_zero()
    }
}
impl Eq for Cyclo {}

impl Default for Cyclo {
    fn default() -> Self {
        Cyclo::zero()
    }
}

impl From<i64> for Cyclo {
    fn from(v: i64) -> Self {
        Cyclo::from_int(v)
    }
}

impl From<BigRational> for Cyclo {
    fn from(r: BigRational) -> Self {
        Cyclo::from_rational(r)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b Cyclo> for &'a Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &'b Cyclo) -> Cyclo {
                $body(self, rhs)
            }
        }
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                $body(&self, &rhs)
            }
        }
        impl<'b> $tr<&'b Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &'b Cyclo) -> Cyclo {
                $body(&self, rhs)
            }
        }
        impl<'a> $tr<Cyclo> for &'a Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| Cyclo::add_impl(a, b, false));
binop!(Sub, sub, |a, b| Cyclo::add_impl(a, b, true));
binop!(Mul, mul, Cyclo::mul_impl);

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { n: self.n, c: self.c.iter().map(|x| -x.clone()).collect() }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: &Cyclo) {
        if rhs.is_zero() {
            return;
        }
        *self = Cyclo::add_impl(self, rhs, false);
    }
}

impl AddAssign<Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: Cyclo) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs;
            return;
        }
        *self = Cyclo::add_impl(self, &rhs, false);
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, rhs: &Cyclo) {
        if rhs.is_zero() {
            return;
        }
        *self = Cyclo::add_impl(self, rhs, true);
    }
}

/// Serialized form: `{"conductor": n, "coeffs": ["p/q", ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ScalarJson {
    pub conductor: u32,
    pub coeffs: Vec<String>,
}

impl Cyclo {
    pub fn to_json(&self, conductor: u32) -> Result<ScalarJson> {
        let coeffs = self.coeffs_in(conductor)?;
        Ok(ScalarJson { conductor, coeffs: coeffs.iter().map(|r| r.to_string()).collect() })
    }

    pub fn from_json(j: &ScalarJson) -> Result<Cyclo> {
        if j.conductor == 0 {
            return Err(Error::Invalid("conductor 0".into()));
        }
        if j.coeffs.len() != phi(j.conductor) {
            return Err(Error::Invalid(format!(
                "expected {} coefficients for conductor {}, got {}",
                phi(j.conductor),
                j.conductor,
                j.coeffs.len()
            )));
        }
        let mut c = Vec::with_capacity(j.coeffs.len());
        for s in &j.coeffs {
            c.push(parse_rational(s)?);
        }
        Ok(Cyclo::normalized(j.conductor, c))
    }
}

impl Serialize for Cyclo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json(self.n).map_err(serde::ser::Error::custom)?.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ScalarJson::deserialize(d)?;
        Cyclo::from_json(&j).map_err(serde::de::Error::custom)
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Invalid(format!("bad rational `{}`", s));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Fixed roots used throughout: `ζ₄ = ζ₈²`, `√2 = ζ₈ − ζ₈³`, `ω = ζ₈³`.
pub mod consts {
    use super::Cyclo;

    pub fn i() -> Cyclo {
        Cyclo::zeta(4, 1)
    }
    pub fn sqrt2() -> Cyclo {
        Cyclo::zeta(8, 1) - Cyclo::zeta(8, 3)
    }
    pub fn half() -> Cyclo {
        Cyclo::from_ratio(1, 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_arith() {
        let z = |k| Cyclo::zeta(8, k);
        assert_eq!(&z(1) * &z(3), Cyclo::from_int(-1));
        assert_eq!(z(2).inv().unwrap(), -z(2));
        let h = Cyclo::from_ratio(1, 2);
        let a = &h + &(&h * &z(1));
        let b = &h - &(&h * &z(1));
        assert!((&a + &b).is_one());
        assert!(Cyclo::zero().inv().is_err());
    }

    #[test]
    fn embedding() {
        assert_eq!(Cyclo::zeta(4, 1).embed(8).unwrap().coeffs_in(8).unwrap()[2], BigRational::one());
        assert_eq!(Cyclo::zeta(4, 1), Cyclo::zeta(8, 2));
        assert_eq!(Cyclo::from_ratio(3, 2).embed(8).unwrap(), Cyclo::from_ratio(3, 2));
        assert!(matches!(Cyclo::zeta(8, 1).embed(4), Err(Error::IncompatibleConductor { .. })));
    }

    #[test]
    fn cyclotomic_vanishes_at_zeta() {
        for n in 1..=30u32 {
            let p = cyclotomic_polynomial(n);
            assert_eq!(p.len() - 1, phi(n));
            let z = Cyclo::zeta(n, 1);
            let mut acc = Cyclo::zero();
            for (k, a) in p.iter().enumerate() {
                acc += &Cyclo::from_rational(BigRational::from_integer(a.clone())) * &z.pow(k as u32);
            }
            assert!(acc.is_zero(), "n = {}", n);
        }
    }

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(consts::sqrt2().pow(2), Cyclo::from_int(2));
        assert_eq!(Cyclo::zeta(8, 3).pow(2), -consts::i());
    }

    #[test]
    fn display() {
        assert_eq!(Cyclo::zeta(8, 2).to_string(), "ζ4");
        assert_eq!((-consts::sqrt2()).to_string(), "-ζ8 + ζ8^3");
        assert_eq!(Cyclo::from_ratio(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn json_roundtrip() {
        let a = &Cyclo::from_ratio(1, 3) + &Cyclo::zeta(8, 3);
        let j = serde_json::to_string(&a).unwrap();
        assert_eq!(j, r#"{"conductor":8,"coeffs":["1/3","0","0","1"]}"#);
        let b: Cyclo = serde_json::from_str(&j).unwrap();
        assert_eq!(a, b);
    }
}
