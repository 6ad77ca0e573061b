use std::fmt;

use super::Cyclo;
use crate::error::{Error, Result};

/// Univariate polynomial over a cyclotomic field, low degree first.
///
/// The coefficient list never ends in a zero; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    c: Vec<Cyclo>,
}

impl UniPoly {
    pub fn new(mut c: Vec<Cyclo>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn zero() -> Self {
        UniPoly { c: Vec::new() }
    }

    pub fn constant(a: Cyclo) -> Self {
        Self::new(vec![a])
    }

    /// `x - r`
    pub fn linear(r: &Cyclo) -> Self {
        Self::new(vec![-r, Cyclo::one()])
    }

    pub fn x() -> Self {
        Self::new(vec![Cyclo::zero(), Cyclo::one()])
    }

    pub fn coeffs(&self) -> &[Cyclo] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Cyclo> {
        self.c.last()
    }

    pub fn eval(&self, x: &Cyclo) -> Cyclo {
        let mut acc = Cyclo::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.c.len().max(o.c.len());
        let z = Cyclo::zero();
        Self::new((0..n).map(|i| self.c.get(i).unwrap_or(&z) + o.c.get(i).unwrap_or(&z)).collect())
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        let n = self.c.len().max(o.c.len());
        let z = Cyclo::zero();
        Self::new((0..n).map(|i| self.c.get(i).unwrap_or(&z) - o.c.get(i).unwrap_or(&z)).collect())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut r = vec![Cyclo::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    r[i + j] += &(a * b);
                }
            }
        }
        Self::new(r)
    }

    pub fn scale(&self, s: &Cyclo) -> UniPoly {
        Self::new(self.c.iter().map(|a| a * s).collect())
    }

    pub fn divrem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let lead = d.lead().ok_or(Error::DivisionByZero)?;
        let inv = lead.inv()?;
        let mut r = self.c.clone();
        if r.len() < d.c.len() {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![Cyclo::zero(); r.len() - d.c.len() + 1];
        while r.len() >= d.c.len() && !r.is_empty() {
            let shift = r.len() - d.c.len();
            let c = r.last().unwrap() * &inv;
            for (i, y) in d.c.iter().enumerate() {
                r[i + shift] -= &(&c * y);
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn monic(&self) -> UniPoly {
        match self.lead() {
            Some(l) => self.scale(&l.inv().unwrap()),
            None => Self::zero(),
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).unwrap();
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UniPoly {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * &Cyclo::from_int(i as i64))
                .collect(),
        )
    }

    /// `p(x + a)`
    pub fn shift(&self, a: &Cyclo) -> UniPoly {
        let lin = Self::new(vec![a.clone(), Cyclo::one()]);
        let mut acc = Self::zero();
        for c in self.c.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&Cyclo) -> Result<Cyclo>) -> Result<UniPoly> {
        Ok(Self::new(self.c.iter().map(f).collect::<Result<Vec<_>>>()?))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| format!("({})x^{}", a, i))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
