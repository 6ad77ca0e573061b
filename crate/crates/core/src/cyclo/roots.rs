//! Roots of univariate polynomials inside `Q(ζ_n)` via Trager norms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::{qpoly, zfactor, Cyclo, UniPoly};
use crate::error::{Error, Result};

/// Roots found in the field, listed with multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Cyclo>,
    /// True when every root of the polynomial lying in the field is listed.
    pub complete: bool,
    /// Degree of the cofactor without roots in the field.
    pub nonsplit_degree: usize,
}

const SHIFT_LIMIT: i64 = 64;

/// All roots of `f` in `Q(ζ_n)`.
pub fn find_roots(f: &UniPoly, n: u32, fuel: u64) -> Result<RootSet> {
    let deg = f.degree().ok_or_else(|| Error::Invalid("zero polynomial".into()))?;
    let f = f.map_coeffs(|c| c.embed(n))?.monic();
    if deg == 0 {
        return Ok(RootSet { roots: vec![], complete: true, nonsplit_degree: 0 });
    }
    let g = {
        let d = f.gcd(&f.derivative());
        f.divrem(&d)?.0.monic()
    };
    let mut fuel = fuel;
    let distinct = squarefree_roots(&g, n, &mut fuel)?;

    let mut roots = Vec::new();
    for r in distinct {
        let lin = UniPoly::linear(&r);
        let mut rest = f.clone();
        loop {
            let (q, rem) = rest.divrem(&lin)?;
            if !rem.is_zero() {
                break;
            }
            roots.push(r.clone());
            rest = q;
        }
    }
    roots.sort_by(|a, b| a.canonical_cmp(b));
    let nonsplit_degree = deg - roots.len();
    Ok(RootSet { roots, complete: true, nonsplit_degree })
}

fn squarefree_roots(g: &UniPoly, n: u32, fuel: &mut u64) -> Result<Vec<Cyclo>> {
    match g.degree() {
        Some(0) | None => return Ok(vec![]),
        Some(1) => return Ok(vec![-&g.coeffs()[0]]),
        _ => {}
    }
    let units: Vec<u32> = (1..=n.max(1)).filter(|k| k.gcd(&n) == 1).collect();
    let phi = units.len();
    let zeta = Cyclo::zeta(n, 1);
    for s in 0..SHIFT_LIMIT {
        // h(x) = g(x - sζ); a root r of h gives the root r - sζ of g
        let shift = &zeta * &Cyclo::from_int(s);
        let h = g.shift(&-&shift);
        let mut norm = UniPoly::constant(Cyclo::one());
        for &k in &units {
            norm = norm.mul(&h.map_coeffs(|c| c.galois(n, k))?);
        }
        let qn: Vec<BigRational> = norm
            .coeffs()
            .iter()
            .map(|c| c.to_rational().ok_or_else(|| Error::Invalid("norm not rational".into())))
            .collect::<Result<_>>()?;
        if qpoly::gcd(&qn, &qpoly::derivative(&qn)).len() != 1 {
            continue;
        }
        let den = qn.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let zn: Vec<BigInt> = qn.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
        let factors = zfactor::small_factors(&zn, phi, fuel)?;
        let mut out = Vec::new();
        for fac in factors {
            if fac.len() - 1 != phi {
                continue;
            }
            let fk = UniPoly::new(fac.iter().map(|a| Cyclo::from_rational(BigRational::from_integer(a.clone()))).collect());
            let q = h.gcd(&fk);
            if q.degree() == Some(1) {
                out.push(&(-&q.coeffs()[0]) - &shift);
            }
        }
        return Ok(out);
    }
    Err(Error::FuelExhausted("no squarefree norm shift".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[Cyclo]) -> UniPoly {
        UniPoly::new(c.to_vec())
    }

    #[test]
    fn x2_plus_1() {
        let f = poly(&[Cyclo::one(), Cyclo::zero(), Cyclo::one()]);
        let r = find_roots(&f, 8, 10_000).unwrap();
        assert!(r.complete);
        assert_eq!(r.roots.len(), 2);
        assert!(r.roots.contains(&Cyclo::zeta(8, 2)));
        assert!(r.roots.contains(&-Cyclo::zeta(8, 2)));
    }

    #[test]
    fn multiplicities() {
        // (x-1)^2 (x+ζ8)
        let a = UniPoly::linear(&Cyclo::one());
        let f = a.mul(&a).mul(&UniPoly::linear(&-Cyclo::zeta(8, 1)));
        let r = find_roots(&f, 8, 10_000).unwrap();
        assert_eq!(r.roots.len(), 3);
        assert_eq!(r.nonsplit_degree, 0);
    }

    #[test]
    fn rational_field() {
        let f = poly(&[Cyclo::from_int(-2), Cyclo::zero(), Cyclo::one()]);
        let r = find_roots(&f, 1, 10_000).unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.nonsplit_degree, 2);
        let r = find_roots(&f, 8, 10_000).unwrap();
        assert_eq!(r.roots.len(), 2);
    }
}
