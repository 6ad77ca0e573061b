use num_integer::Integer;

use super::{verify_axioms, HopfSuperData};
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

pub(crate) fn certify(h: HopfSuperData) -> Result<HopfSuperData> {
    let r = verify_axioms(&h);
    if r.passed() {
        Ok(h)
    } else {
        Err(Error::AxiomFailure { name: h.name.clone(), failed: r.summary() })
    }
}

pub(crate) fn dual_unchecked(h: &HopfSuperData) -> HopfSuperData {
    let d = h.dim;
    let mut mult: Vec<Vec<(usize, Cyclo)>> = vec![Vec::new(); d * d];
    for k in 0..d {
        for (i, j, c) in h.comult_basis(k) {
            mult[i * d + j].push((k, c.clone()));
        }
    }
    for m in mult.iter_mut() {
        m.sort_by_key(|e| e.0);
    }
    let mut comult: Vec<Vec<(usize, usize, Cyclo)>> = vec![Vec::new(); d];
    for i in 0..d {
        for j in 0..d {
            for (k, c) in h.mult_basis(i, j) {
                comult[*k].push((i, j, c.clone()));
            }
        }
    }
    for c in comult.iter_mut() {
        c.sort_by_key(|e| (e.0, e.1));
    }
    let labels = h.labels.iter().map(|l| dual_label(l)).collect();
    HopfSuperData::from_sparse(
        format!("{}*", h.name),
        h.conductor,
        h.parity.clone(),
        labels,
        h.counit.clone(),
        h.unit.clone(),
        mult,
        comult,
        h.antipode.transpose(),
    )
}

fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(base) if !base.is_empty() && !base.ends_with('*') => base.to_string(),
        _ => {
            if l.chars().count() == 1 {
                format!("{}*", l)
            } else {
                format!("({})*", l)
            }
        }
    }
}

/// Dual Hopf superalgebra on the dual basis, with the unsigned evaluation
/// pairing.
pub fn dual(h: &HopfSuperData) -> Result<HopfSuperData> {
    certify(dual_unchecked(h))
}

/// Graded tensor product; the basis is ordered lexicographically by
/// `(left index, right index)`.
pub fn tensor_product(h: &HopfSuperData, k: &HopfSuperData) -> Result<HopfSuperData> {
    let (dh, dk) = (h.dim, k.dim);
    let d = dh * dk;
    let idx = |i: usize, j: usize| i * dk + j;
    let mut parity = vec![0u8; d];
    let mut labels = vec![String::new(); d];
    let mut unit = vec![Cyclo::zero(); d];
    let mut counit = vec![Cyclo::zero(); d];
    for i in 0..dh {
        for j in 0..dk {
            parity[idx(i, j)] = h.parity[i] ^ k.parity[j];
            labels[idx(i, j)] = format!("{}⊗{}", h.labels[i], k.labels[j]);
            unit[idx(i, j)] = &h.unit[i] * &k.unit[j];
            counit[idx(i, j)] = &h.counit[i] * &k.counit[j];
        }
    }
    let mut mult: Vec<Vec<(usize, Cyclo)>> = vec![Vec::new(); d * d];
    for i in 0..dh {
        for j in 0..dk {
            for a in 0..dh {
                for b in 0..dk {
                    let neg = k.parity[j] == 1 && h.parity[a] == 1;
                    let mut v = vec![Cyclo::zero(); d];
                    for (p, x) in h.mult_basis(i, a) {
                        for (q, y) in k.mult_basis(j, b) {
                            let c = x * y;
                            v[idx(*p, *q)] += &(if neg { -c } else { c });
                        }
                    }
                    mult[idx(i, j) * d + idx(a, b)] =
                        v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                }
            }
        }
    }
    let mut comult: Vec<Vec<(usize, usize, Cyclo)>> = vec![Vec::new(); d];
    for i in 0..dh {
        for j in 0..dk {
            let mut t = super::Tensor::zeros(d, d);
            for (a, b, x) in h.comult_basis(i) {
                for (c, e, y) in k.comult_basis(j) {
                    let mut coef = x * y;
                    if h.parity[*b] == 1 && k.parity[*c] == 1 {
                        coef = -coef;
                    }
                    t.add_at(idx(*a, *c), idx(*b, *e), &coef);
                }
            }
            comult[idx(i, j)] = t.terms();
        }
    }
    let mut s = Matrix::zeros(d, d);
    for i in 0..dh {
        for j in 0..dk {
            for p in 0..dh {
                let x = h.antipode.get(p, i);
                if x.is_zero() {
                    continue;
                }
                for q in 0..dk {
                    let y = k.antipode.get(q, j);
                    if !y.is_zero() {
                        s.set(idx(p, q), idx(i, j), x * y);
                    }
                }
            }
        }
    }
    certify(HopfSuperData::from_sparse(
        format!("{}⊗{}", h.name, k.name),
        h.conductor.lcm(&k.conductor),
        parity,
        labels,
        unit,
        counit,
        mult,
        comult,
        s,
    ))
}

/// The one-dimensional Hopf algebra.
pub fn trivial() -> HopfSuperData {
    HopfSuperData::from_sparse(
        "k".into(),
        1,
        vec![0],
        vec!["1".into()],
        vec![Cyclo::one()],
        vec![Cyclo::one()],
        vec![vec![(0, Cyclo::one())]],
        vec![vec![(0, 0, Cyclo::one())]],
        Matrix::identity(1),
    )
}
