//! Hopf superalgebras stored by structure constants.
//!
//! Basis vectors are homogeneous; `parity[i]` is the degree of `e_i`.
//! Products of tensors follow the Koszul rule
//! `(a⊗b)(c⊗d) = (−1)^{|b||c|} ac⊗bd`.

mod axioms;
mod calculus;
mod construct;
mod json;
mod morphism;

pub use axioms::verify_axioms;
pub use calculus::{
    center_basis, center_membership, hit_left, hit_right, is_grouplike, skew_primitives, GradedBasis,
};
pub use construct::{dual, tensor_product, trivial};
pub use json::HopfJson;
pub use morphism::{isomorphism_report, morphism_report};
pub(crate) use construct::certify;

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, unit_vec, zero_vec, Matrix, Vector};

/// Element of `A ⊗ B`, dense, indexed `(i, j) ↦ i·cols + j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Cyclo>,
}

impl Tensor {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Tensor { rows, cols, data: vec![Cyclo::zero(); rows * cols] }
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclo {
        &self.data[i * self.cols + j]
    }

    pub fn add_at(&mut self, i: usize, j: usize, c: &Cyclo) {
        if !c.is_zero() {
            self.data[i * self.cols + j] += c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn simple(a: &[Cyclo], b: &[Cyclo]) -> Self {
        let mut t = Tensor::zeros(a.len(), b.len());
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    t.data[i * t.cols + j] = x * y;
                }
            }
        }
        t
    }

    pub fn add(&self, o: &Tensor) -> Tensor {
        Tensor { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Tensor) -> Tensor {
        Tensor { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: &Cyclo) -> Tensor {
        Tensor { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    /// Nonzero entries `(i, j, c)` in index order.
    pub fn terms(&self) -> Vec<(usize, usize, Cyclo)> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let c = self.get(i, j);
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    /// `(L ⊗ R)(self)` for linear maps given as matrices.
    pub fn map(&self, l: &Matrix, r: &Matrix) -> Tensor {
        let mut out = Tensor::zeros(l.rows, r.rows);
        for (i, j, c) in self.terms() {
            let a = l.col(i);
            let b = r.col(j);
            for (p, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let xc = x * &c;
                for (q, y) in b.iter().enumerate() {
                    if !y.is_zero() {
                        out.add_at(p, q, &(&xc * y));
                    }
                }
            }
        }
        out
    }
}

/// A finite-dimensional Hopf superalgebra by structure constants.
#[derive(Clone, Debug)]
pub struct HopfSuperData {
    pub name: String,
    pub conductor: u32,
    pub dim: usize,
    pub parity: Vec<u8>,
    pub labels: Vec<String>,
    pub unit: Vector,
    pub counit: Vector,
    mult: Vec<Vec<(usize, Cyclo)>>,
    comult: Vec<Vec<(usize, usize, Cyclo)>>,
    /// Column `c` holds the coordinates of `S(e_c)`.
    pub antipode: Matrix,
}

fn sparse(v: &[Cyclo]) -> Vec<(usize, Cyclo)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

impl HopfSuperData {
    /// Assembles a value from dense pieces. `mult[i*d + j]` is `e_i e_j`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        name: impl Into<String>,
        conductor: u32,
        parity: Vec<u8>,
        labels: Vec<String>,
        unit: Vector,
        counit: Vector,
        mult: Vec<Vector>,
        comult: Vec<Tensor>,
        antipode: Matrix,
    ) -> Result<Self> {
        let d = parity.len();
        let bad = |what: &str| Err(Error::DimensionMismatch(what.to_string()));
        if labels.len() != d || unit.len() != d || counit.len() != d {
            return bad("labels/unit/counit");
        }
        if mult.len() != d * d || mult.iter().any(|v| v.len() != d) {
            return bad("mult");
        }
        if comult.len() != d || comult.iter().any(|t| t.rows != d || t.cols != d) {
            return bad("comult");
        }
        if antipode.rows != d || antipode.cols != d {
            return bad("antipode");
        }
        Ok(HopfSuperData {
            name: name.into(),
            conductor,
            dim: d,
            parity,
            labels,
            unit,
            counit,
            mult: mult.iter().map(|v| sparse(v)).collect(),
            comult: comult.iter().map(|t| t.terms()).collect(),
            antipode,
        })
    }

    pub(crate) fn from_sparse(
        name: String,
        conductor: u32,
        parity: Vec<u8>,
        labels: Vec<String>,
        unit: Vector,
        counit: Vector,
        mult: Vec<Vec<(usize, Cyclo)>>,
        comult: Vec<Vec<(usize, usize, Cyclo)>>,
        antipode: Matrix,
    ) -> Self {
        let dim = parity.len();
        HopfSuperData { name, conductor, dim, parity, labels, unit, counit, mult, comult, antipode }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vec(self.dim, i)
    }

    pub fn zero(&self) -> Vector {
        zero_vec(self.dim)
    }

    pub fn one(&self) -> Vector {
        self.unit.clone()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Basis vector by label; panics on an unknown label.
    pub fn e(&self, label: &str) -> Vector {
        let i = self.index_of(label).unwrap_or_else(|| panic!("no basis label `{}` in {}", label, self.name));
        self.basis(i)
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &[(usize, Cyclo)] {
        &self.mult[i * self.dim + j]
    }

    pub fn comult_basis(&self, i: usize) -> &[(usize, usize, Cyclo)] {
        &self.comult[i]
    }

    pub fn is_purely_even(&self) -> bool {
        self.parity.iter().all(|&p| p == 0)
    }

    pub fn odd_dim(&self) -> usize {
        self.parity.iter().filter(|&&p| p == 1).count()
    }

    pub fn mul(&self, a: &[Cyclo], b: &[Cyclo]) -> Vector {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.mult_basis(i, j) {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    pub fn mul_all(&self, xs: &[&Vector]) -> Vector {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn pow(&self, a: &[Cyclo], k: u32) -> Vector {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn comul(&self, a: &[Cyclo]) -> Tensor {
        let mut t = Tensor::zeros(self.dim, self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in self.comult_basis(i) {
                t.add_at(*j, *k, &(x * c));
            }
        }
        t
    }

    pub fn eps(&self, a: &[Cyclo]) -> Cyclo {
        crate::linalg::dot(&self.counit, a)
    }

    pub fn s(&self, a: &[Cyclo]) -> Vector {
        self.antipode.mul_vec(a)
    }

    /// Product in `H ⊗ H` with the Koszul sign.
    pub fn tensor_mul(&self, x: &Tensor, y: &Tensor) -> Tensor {
        let mut out = Tensor::zeros(self.dim, self.dim);
        let xt = x.terms();
        let yt = y.terms();
        for (a, b, c1) in &xt {
            for (c, d, c2) in &yt {
                let mut coef = c1 * c2;
                if self.parity[*b] == 1 && self.parity[*c] == 1 {
                    coef = -coef;
                }
                let left = self.mult_basis(*a, *c);
                let right = self.mult_basis(*b, *d);
                for (p, u) in left {
                    let cu = &coef * u;
                    for (q, v) in right {
                        out.add_at(*p, *q, &(&cu * v));
                    }
                }
            }
        }
        out
    }

    /// Degree of a homogeneous element; `None` for zero or mixed elements.
    pub fn parity_of(&self, a: &[Cyclo]) -> Option<u8> {
        let mut seen = None;
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match seen {
                None => seen = Some(self.parity[i]),
                Some(p) if p != self.parity[i] => return None,
                _ => {}
            }
        }
        seen
    }

    /// Component of `a` of the given degree.
    pub fn part(&self, a: &[Cyclo], p: u8) -> Vector {
        a.iter()
            .enumerate()
            .map(|(i, c)| if self.parity[i] == p { c.clone() } else { Cyclo::zero() })
            .collect()
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mult_matrix(&self, a: &[Cyclo]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_cols(&cols, self.dim)
    }

    /// Matrix of the full multiplication as a map on basis pairs, for kernels.
    pub fn commutator(&self, a: &[Cyclo], b: &[Cyclo]) -> Vector {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        crate::linalg::vec_sub(&ab, &ba)
    }

    /// Dense copy of the multiplication table.
    pub fn mult_dense(&self) -> Vec<Vector> {
        self.mult
            .iter()
            .map(|s| {
                let mut v = self.zero();
                for (k, c) in s {
                    v[*k] = c.clone();
                }
                v
            })
            .collect()
    }

    pub fn comult_dense(&self) -> Vec<Tensor> {
        (0..self.dim).map(|i| self.comul(&self.basis(i))).collect()
    }

    /// Structure constants equal entry by entry (names and labels ignored).
    pub fn same_structure(&self, o: &HopfSuperData) -> bool {
        self.dim == o.dim
            && self.parity == o.parity
            && self.unit == o.unit
            && self.counit == o.counit
            && self.mult == o.mult
            && self.comult == o.comult
            && self.antipode == o.antipode
    }

    /// Readable linear combination of basis labels.
    pub fn fmt_elem(&self, a: &[Cyclo]) -> String {
        fmt_lincomb(a, &self.labels)
    }

    /// Applies the linear map `m` (columns are images of basis vectors).
    pub fn apply(m: &Matrix, a: &[Cyclo]) -> Vector {
        m.mul_vec(a)
    }

    pub fn is_zero(a: &[Cyclo]) -> bool {
        is_zero_vec(a)
    }
}

pub fn fmt_tensor(t: &Tensor, left: &[String], right: &[String]) -> String {
    let terms = t.terms();
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (n, (i, j, c)) in terms.iter().enumerate() {
        let body = format!("{}⊗{}", left[*i], right[*j]);
        push_term(&mut s, n == 0, c, &body);
    }
    s
}

pub fn fmt_lincomb(a: &[Cyclo], labels: &[String]) -> String {
    let mut s = String::new();
    let mut first = true;
    for (i, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        push_term(&mut s, first, c, &labels[i]);
        first = false;
    }
    if first {
        "0".into()
    } else {
        s
    }
}

fn push_term(s: &mut String, first: bool, c: &Cyclo, body: &str) {
    let text = c.to_string();
    let simple = !text.chars().skip(1).any(|ch| ch == ' ');
    let (neg, mag) = if simple && text.starts_with('-') { (true, text[1..].to_string()) } else { (false, text.clone()) };
    if !first {
        s.push_str(if neg { " - " } else { " + " });
    } else if neg {
        s.push('-');
    }
    if mag == "1" {
        s.push_str(body);
    } else if simple {
        s.push_str(&format!("{}·{}", mag, body));
    } else {
        s.push_str(&format!("({})·{}", mag, body));
    }
}

/// Adds `s·v` into `acc` where `v` is sparse.
pub(crate) fn add_sparse(acc: &mut [Cyclo], s: &Cyclo, v: &[(usize, Cyclo)]) {
    for (k, c) in v {
        acc[*k] += &(s * c);
    }
}
