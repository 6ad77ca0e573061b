use super::HopfSuperData;
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, Matrix, Vector};

/// `α⇀a = a₁ α(a₂)` for a covector `α`.
pub fn hit_left(h: &HopfSuperData, alpha: &[Cyclo], a: &[Cyclo]) -> Vector {
    let mut out = h.zero();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, k, c) in h.comult_basis(i) {
            if !alpha[*k].is_zero() {
                out[*j] += &(x * c * &alpha[*k]);
            }
        }
    }
    out
}

/// `a↼α = α(a₁) a₂`.
pub fn hit_right(h: &HopfSuperData, a: &[Cyclo], alpha: &[Cyclo]) -> Vector {
    let mut out = h.zero();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, k, c) in h.comult_basis(i) {
            if !alpha[*j].is_zero() {
                out[*k] += &(x * c * &alpha[*j]);
            }
        }
    }
    out
}

/// True when `a` commutes with every basis vector (ungraded center).
pub fn center_membership(h: &HopfSuperData, a: &[Cyclo]) -> bool {
    (0..h.dim).all(|j| is_zero_vec(&h.commutator(a, &h.basis(j))))
}

/// Kernel basis of `a ↦ ([a, e_j])_j`.
pub fn center_basis(h: &HopfSuperData) -> Vec<Vector> {
    let d = h.dim;
    let mut m = Matrix::zeros(d * d, d);
    for i in 0..d {
        let ei = h.basis(i);
        for j in 0..d {
            let c = h.commutator(&ei, &h.basis(j));
            for (k, x) in c.into_iter().enumerate() {
                if !x.is_zero() {
                    m.set(j * d + k, i, x);
                }
            }
        }
    }
    m.kernel()
}

pub fn is_grouplike(h: &HopfSuperData, g: &[Cyclo]) -> bool {
    h.eps(g).is_one() && h.comul(g) == super::Tensor::simple(g, g)
}

/// Homogeneous solution spaces of a linear problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    pub even: Vec<Vector>,
    pub odd: Vec<Vector>,
}

impl GradedBasis {
    pub fn dims(&self) -> (usize, usize) {
        (self.even.len(), self.odd.len())
    }

    pub fn all(&self) -> Vec<Vector> {
        self.even.iter().chain(self.odd.iter()).cloned().collect()
    }
}

/// Solutions of `Δz = g⊗z + z⊗1`, split by degree.
pub fn skew_primitives(h: &HopfSuperData, g: &[Cyclo]) -> Result<GradedBasis> {
    if !is_grouplike(h, g) {
        return Err(Error::NotGrouplike);
    }
    let d = h.dim;
    let part = |p: u8| {
        let idx: Vec<usize> = (0..d).filter(|&i| h.parity[i] == p).collect();
        let mut m = Matrix::zeros(d * d, idx.len());
        for (col, &i) in idx.iter().enumerate() {
            let ei = h.basis(i);
            let t = h
                .comul(&ei)
                .sub(&super::Tensor::simple(g, &ei))
                .sub(&super::Tensor::simple(&ei, &h.unit));
            for (a, b, c) in t.terms() {
                m.set(a * d + b, col, c);
            }
        }
        m.kernel()
            .into_iter()
            .map(|k| {
                let mut v = h.zero();
                for (col, &i) in idx.iter().enumerate() {
                    v[i] = k[col].clone();
                }
                v
            })
            .collect::<Vec<_>>()
    };
    let even = part(0);
    let odd = part(1);
    Ok(GradedBasis { even, odd })
}
