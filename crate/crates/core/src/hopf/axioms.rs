use std::collections::BTreeMap;

use super::{add_sparse, HopfSuperData, Tensor};
use crate::cyclo::Cyclo;
use crate::linalg::{is_zero_vec, vec_sub};
use crate::report::Report;

type Tensor3 = BTreeMap<(usize, usize, usize), Cyclo>;

fn clean(t: Tensor3) -> Tensor3 {
    t.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Checks every Hopf superalgebra axiom on the basis.
pub fn verify_axioms(h: &HopfSuperData) -> Report {
    let d = h.dim;
    let mut r = Report::new(format!("axioms of {}", h.name));
    let lab = |i: usize| h.labels[i].clone();

    // parity
    let mut bad = None;
    if h.parity_of(&h.unit).is_some_and(|p| p != 0) {
        bad = Some("unit is not even".to_string());
    }
    'par: for i in 0..d {
        if h.parity[i] == 1 && !h.counit[i].is_zero() {
            bad = Some(format!("counit nonzero on odd {}", lab(i)));
            break;
        }
        for j in 0..d {
            for (k, _) in h.mult_basis(i, j) {
                if h.parity[*k] != (h.parity[i] ^ h.parity[j]) {
                    bad = Some(format!("{}·{} has a term {}", lab(i), lab(j), lab(*k)));
                    break 'par;
                }
            }
        }
        for (j, k, _) in h.comult_basis(i) {
            if h.parity[*j] ^ h.parity[*k] != h.parity[i] {
                bad = Some(format!("Δ({}) has a term {}⊗{}", lab(i), lab(*j), lab(*k)));
                break 'par;
            }
        }
        for k in 0..d {
            if !h.antipode.get(k, i).is_zero() && h.parity[k] != h.parity[i] {
                bad = Some(format!("S({}) has a term {}", lab(i), lab(k)));
                break 'par;
            }
        }
    }
    r.check("parity", bad.is_none(), bad);

    // associativity
    let mut bad = None;
    'assoc: for i in 0..d {
        for j in 0..d {
            let ij = h.mult_basis(i, j);
            for k in 0..d {
                let mut left = h.zero();
                for (l, c) in ij {
                    add_sparse(&mut left, c, h.mult_basis(*l, k));
                }
                let mut right = h.zero();
                for (l, c) in h.mult_basis(j, k) {
                    add_sparse(&mut right, c, h.mult_basis(i, *l));
                }
                if left != right {
                    bad = Some(format!("({}·{})·{}", lab(i), lab(j), lab(k)));
                    break 'assoc;
                }
            }
        }
    }
    r.check("associativity", bad.is_none(), bad);

    // unit
    let mut bad = None;
    for i in 0..d {
        let e = h.basis(i);
        if h.mul(&h.unit, &e) != e || h.mul(&e, &h.unit) != e {
            bad = Some(format!("1·{}", lab(i)));
            break;
        }
    }
    r.check("unit", bad.is_none(), bad);

    // coassociativity
    let mut bad = None;
    for i in 0..d {
        let mut left = Tensor3::new();
        let mut right = Tensor3::new();
        for (a, b, c) in h.comult_basis(i) {
            for (p, q, u) in h.comult_basis(*a) {
                *left.entry((*p, *q, *b)).or_default() += &(c * u);
            }
            for (p, q, u) in h.comult_basis(*b) {
                *right.entry((*a, *p, *q)).or_default() += &(c * u);
            }
        }
        if clean(left) != clean(right) {
            bad = Some(format!("Δ({})", lab(i)));
            break;
        }
    }
    r.check("coassociativity", bad.is_none(), bad);

    // counit
    let mut bad = None;
    if !h.eps(&h.unit).is_one() {
        bad = Some("ε(1) ≠ 1".into());
    }
    for i in 0..d {
        let mut left = h.zero();
        let mut right = h.zero();
        for (a, b, c) in h.comult_basis(i) {
            left[*b] += &(c * &h.counit[*a]);
            right[*a] += &(c * &h.counit[*b]);
        }
        let e = h.basis(i);
        if left != e || right != e {
            bad = Some(format!("(ε⊗id)Δ({})", lab(i)));
            break;
        }
    }
    r.check("counit", bad.is_none(), bad);

    // Δ is a superalgebra map
    let mut bad = None;
    let deltas: Vec<Tensor> = (0..d).map(|i| h.comul(&h.basis(i))).collect();
    if h.comul(&h.unit) != Tensor::simple(&h.unit, &h.unit) {
        bad = Some("Δ(1) ≠ 1⊗1".into());
    }
    'bialg: for i in 0..d {
        for j in 0..d {
            if bad.is_some() {
                break 'bialg;
            }
            let mut lhs = Tensor::zeros(d, d);
            for (k, c) in h.mult_basis(i, j) {
                lhs = lhs.add(&deltas[*k].scale(c));
            }
            let rhs = h.tensor_mul(&deltas[i], &deltas[j]);
            if lhs != rhs {
                bad = Some(format!("Δ({}·{})", lab(i), lab(j)));
            }
        }
    }
    r.check("comultiplication multiplicative", bad.is_none(), bad);

    // ε multiplicative
    let mut bad = None;
    'eps: for i in 0..d {
        for j in 0..d {
            let mut v = Cyclo::zero();
            for (k, c) in h.mult_basis(i, j) {
                v += &(c * &h.counit[*k]);
            }
            if v != &h.counit[i] * &h.counit[j] {
                bad = Some(format!("ε({}·{})", lab(i), lab(j)));
                break 'eps;
            }
        }
    }
    r.check("counit multiplicative", bad.is_none(), bad);

    // antipode laws
    let scols: Vec<_> = (0..d).map(|i| h.antipode.col(i)).collect();
    let mut bad = None;
    for i in 0..d {
        let mut left = h.zero();
        let mut right = h.zero();
        for (a, b, c) in h.comult_basis(i) {
            let sa_b = h.mul(&scols[*a], &h.basis(*b));
            let a_sb = h.mul(&h.basis(*a), &scols[*b]);
            crate::linalg::add_scaled(&mut left, c, &sa_b);
            crate::linalg::add_scaled(&mut right, c, &a_sb);
        }
        let target = crate::linalg::vec_scale(&h.counit[i], &h.unit);
        if left != target || right != target {
            bad = Some(format!("S({}₁){}₂", lab(i), lab(i)));
            break;
        }
    }
    r.check("antipode", bad.is_none(), bad);

    // derived: S(ab) = (−1)^{|a||b|} S(b)S(a)
    let mut bad = None;
    'anti: for i in 0..d {
        for j in 0..d {
            let mut lhs = h.zero();
            for (k, c) in h.mult_basis(i, j) {
                crate::linalg::add_scaled(&mut lhs, c, &scols[*k]);
            }
            let mut rhs = h.mul(&scols[j], &scols[i]);
            if h.parity[i] == 1 && h.parity[j] == 1 {
                rhs = rhs.iter().map(|x| -x).collect();
            }
            if !is_zero_vec(&vec_sub(&lhs, &rhs)) {
                bad = Some(format!("S({}·{})", lab(i), lab(j)));
                break 'anti;
            }
        }
    }
    r.check("antipode anti-multiplicative", bad.is_none(), bad);
    r
}
