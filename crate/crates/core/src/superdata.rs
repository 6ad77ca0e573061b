//! Admissible data and super-data of a Hopf algebra, the split epimorphisms
//! they define, coinvariant Hopf superalgebras, bosonization and the AEG
//! construction.

use serde::Serialize;

use crate::characters::{complete_characters, convolve, grouplikes, vec_cmp, Character, GrouplikeMode};
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::hopf::{
    certify, center_membership, hit_left, hit_right, is_grouplike, isomorphism_report, morphism_report, HopfSuperData,
    Tensor,
};
use crate::linalg::{add_scaled, is_zero_vec, unit_vec, vec_add, vec_scale, vec_sub, Matrix, Vector};
use crate::presentation::builtin;
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificates {
    pub ord_g: u64,
    pub ord_alpha: u64,
    pub alpha_of_g: Cyclo,
    pub conjugation_identity: bool,
    pub g_noncentral: bool,
}

/// A pair `(g, α)` together with the certificates computed for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperDatum {
    pub g: Vector,
    pub alpha: Vector,
    pub certificates: Certificates,
}

fn half() -> Cyclo {
    Cyclo::from_ratio(1, 2)
}

fn grouplike_order(a: &HopfSuperData, g: &[Cyclo]) -> u64 {
    let mut p = g.to_vec();
    for k in 1..=(2 * a.dim as u64 + 1) {
        if p == a.unit {
            return k;
        }
        p = a.mul(&p, g);
    }
    0
}

fn character_order(a: &HopfSuperData, alpha: &[Cyclo]) -> u64 {
    let al = Character::new(alpha.to_vec());
    let mut p = al.clone();
    for k in 1..=(2 * a.dim as u64 + 1) {
        if p.values == a.counit {
            return k;
        }
        p = convolve(a, &p, &al);
    }
    0
}

/// `α⇀a↼α == g a g` on every basis vector.
pub fn conjugation_identity(a: &HopfSuperData, g: &[Cyclo], alpha: &[Cyclo]) -> Option<usize> {
    (0..a.dim).find(|&i| {
        let e = a.basis(i);
        let lhs = hit_right(a, &hit_left(a, alpha, &e), alpha);
        let rhs = a.mul(&a.mul(g, &e), g);
        lhs != rhs
    })
}

impl SuperDatum {
    /// Computes all certificates for `(g, α)` on `a`.
    pub fn certify(a: &HopfSuperData, g: Vector, alpha: Vector) -> Self {
        let certificates = Certificates {
            ord_g: grouplike_order(a, &g),
            ord_alpha: character_order(a, &alpha),
            alpha_of_g: crate::linalg::dot(&alpha, &g),
            conjugation_identity: conjugation_identity(a, &g, &alpha).is_none(),
            g_noncentral: !center_membership(a, &g),
        };
        SuperDatum { g, alpha, certificates }
    }

    pub fn is_admissible(&self) -> bool {
        let c = &self.certificates;
        c.ord_g == 2 && c.ord_alpha == 2 && c.alpha_of_g == -Cyclo::one()
    }

    pub fn is_super(&self) -> bool {
        self.is_admissible() && self.certificates.conjugation_identity && self.certificates.g_noncentral
    }

    /// `(φ(g), α∘φ⁻¹)`.
    pub fn transport(&self, a: &HopfSuperData, phi: &Matrix, phi_inv: &Matrix) -> SuperDatum {
        let alpha = phi_inv.transpose().mul_vec(&self.alpha);
        SuperDatum::certify(a, phi.mul_vec(&self.g), alpha)
    }

    pub fn describe(&self, a: &HopfSuperData) -> String {
        format!("({}, α = [{}])", a.fmt_elem(&self.g), fmt_values(&self.alpha))
    }
}

fn fmt_values(v: &[Cyclo]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

fn require_even(a: &HopfSuperData) -> Result<()> {
    if a.is_purely_even() {
        Ok(())
    } else {
        Err(Error::Invalid(format!("{} is not purely even", a.name)))
    }
}

/// All admissible data: group-likes in enumeration order (unit first), then
/// characters in enumeration order (counit first).
pub fn admissible_data(a: &HopfSuperData) -> Result<Vec<SuperDatum>> {
    require_even(a)?;
    let gs = grouplikes(a, GrouplikeMode::EvenHomogeneous)?;
    let chars = complete_characters(a)?;
    let mut out = Vec::new();
    for g in &gs.elements {
        if gs.order_of(g) != Some(2) {
            continue;
        }
        for al in &chars {
            if al.values == a.counit || crate::linalg::dot(&al.values, g) != -Cyclo::one() {
                continue;
            }
            let d = SuperDatum::certify(a, g.clone(), al.values.clone());
            if d.is_admissible() {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// Admissible data that also satisfy the conjugation identity with `g`
/// noncentral.
pub fn super_data(a: &HopfSuperData) -> Result<Vec<SuperDatum>> {
    Ok(admissible_data(a)?.into_iter().filter(|d| d.is_super()).collect())
}

/// `A` with a Hopf split epimorphism `π: A → kZ₂` and section `ι`.
#[derive(Clone, Debug)]
pub struct HopfTriple {
    pub a: HopfSuperData,
    pub kz2: HopfSuperData,
    pub pi: Matrix,
    pub iota: Matrix,
}

impl HopfTriple {
    pub fn report(&self) -> Report {
        let mut r = Report::new(format!("triple over {}", self.a.name));
        r.check("π∘ι = id", self.pi.mul(&self.iota).is_identity(), None);
        r.absorb("π: ", morphism_report(&self.a, &self.kz2, &self.pi));
        r.absorb("ι: ", morphism_report(&self.kz2, &self.a, &self.iota));
        r
    }
}

fn kz2() -> Result<HopfSuperData> {
    builtin("kZ2", &[])
}

/// `π(a) = ε(a)/2 (e+σ) + α(a)/2 (e−σ)`, `ι(σⁱ) = gⁱ`.
pub fn split_epi(a: &HopfSuperData, d: &SuperDatum) -> Result<HopfTriple> {
    require_even(a)?;
    let k = kz2()?;
    let mut pi = Matrix::zeros(2, a.dim);
    for i in 0..a.dim {
        let (e, al) = (&a.counit[i], &d.alpha[i]);
        pi.set(0, i, &(e + al) * &half());
        pi.set(1, i, &(e - al) * &half());
    }
    let iota = Matrix::from_cols(&[a.unit.clone(), d.g.clone()], a.dim);
    let t = HopfTriple { a: a.clone(), kz2: k, pi, iota };
    let r = t.report();
    if !r.passed() {
        return Err(Error::VerificationFailure(r.summary()));
    }
    Ok(t)
}

/// `E(a) = a₁ ιSπ(a₂) = ½(a + α⇀a) + ½(a − α⇀a) g`.
pub fn coinvariant_projector(a: &HopfSuperData, d: &SuperDatum) -> Matrix {
    let cols: Vec<Vector> = (0..a.dim)
        .map(|i| {
            let e = a.basis(i);
            let h = hit_left(a, &d.alpha, &e);
            let plus = vec_scale(&half(), &vec_add(&e, &h));
            let minus = vec_scale(&half(), &vec_sub(&e, &h));
            vec_add(&plus, &a.mul(&minus, &d.g))
        })
        .collect();
    Matrix::from_cols(&cols, a.dim)
}

/// `{b : α⇀b = b}` as an echelon basis.
pub fn coinvariant_space(a: &HopfSuperData, d: &SuperDatum) -> Vec<Vector> {
    let m = hit_matrix(a, &d.alpha);
    sub_identity(&m, &Cyclo::one()).kernel()
}

/// Checks `E² = E` and `image(E) = {b : α⇀b = b}`.
pub fn projector_report(a: &HopfSuperData, d: &SuperDatum) -> Report {
    let e = coinvariant_projector(a, d);
    let mut r = Report::new(format!("coinvariant projector on {}", a.name));
    r.check("idempotent", e.mul(&e) == e, None);
    let image = crate::linalg::Subspace::spanned_by(a.dim, &e.cols_vec());
    let fixed = crate::linalg::Subspace::spanned_by(a.dim, &coinvariant_space(a, d));
    let same = image.dim() == fixed.dim() && fixed.basis().iter().all(|v| image.contains(v));
    r.check("image = fixed points of α⇀", same, Some(format!("dims {} / {}", image.dim(), fixed.dim())));
    r
}

fn hit_matrix(a: &HopfSuperData, alpha: &[Cyclo]) -> Matrix {
    let cols: Vec<Vector> = (0..a.dim).map(|i| hit_left(a, alpha, &a.basis(i))).collect();
    Matrix::from_cols(&cols, a.dim)
}

fn conj_matrix(a: &HopfSuperData, g: &[Cyclo]) -> Matrix {
    let cols: Vec<Vector> = (0..a.dim).map(|i| a.mul(&a.mul(g, &a.basis(i)), g)).collect();
    Matrix::from_cols(&cols, a.dim)
}

fn sub_identity(m: &Matrix, s: &Cyclo) -> Matrix {
    let mut out = m.clone();
    for i in 0..m.rows {
        out.set(i, i, m.get(i, i) - s);
    }
    out
}

fn stack(a: &Matrix, b: &Matrix) -> Matrix {
    let mut rows: Vec<Vector> = (0..a.rows).map(|i| a.row(i)).collect();
    rows.extend((0..b.rows).map(|i| b.row(i)));
    Matrix::from_rows(&rows)
}

/// Coordinates with respect to a linearly independent family of vectors.
struct Coords {
    basis: Matrix,
    left: Matrix,
}

impl Coords {
    fn new(vs: &[Vector], ambient: usize) -> Result<Self> {
        let basis = Matrix::from_cols(vs, ambient);
        let (_, rows) = basis.transpose().rref();
        if rows.len() != vs.len() {
            return Err(Error::Invalid("dependent basis".into()));
        }
        let sub = Matrix::from_rows(&rows.iter().map(|&r| basis.row(r)).collect::<Vec<_>>());
        let inv = sub.inverse().ok_or_else(|| Error::Invalid("dependent basis".into()))?;
        let mut left = Matrix::zeros(vs.len(), ambient);
        for (c, &r) in rows.iter().enumerate() {
            for i in 0..vs.len() {
                left.set(i, r, inv.get(i, c).clone());
            }
        }
        Ok(Coords { basis, left })
    }

    fn of(&self, v: &[Cyclo]) -> Result<Vector> {
        let c = self.left.mul_vec(v);
        if self.basis.mul_vec(&c) != v {
            return Err(Error::NotClosed);
        }
        Ok(c)
    }

    fn of_tensor(&self, t: &Tensor) -> Result<Tensor> {
        let c = t.map(&self.left, &self.left);
        if c.map(&self.basis, &self.basis) != *t {
            return Err(Error::NotClosed);
        }
        Ok(c)
    }
}

/// Assembles a Hopf superalgebra on the span of `basis ⊂ A` with `A`'s
/// product and counit and the given comultiplication and antipode.
#[allow(clippy::too_many_arguments)]
fn restrict(
    a: &HopfSuperData,
    name: String,
    basis: &[Vector],
    parity: Vec<u8>,
    delta: impl Fn(&[Cyclo], u8) -> Tensor,
    antipode: impl Fn(&[Cyclo], u8) -> Vector,
) -> Result<HopfSuperData> {
    let co = Coords::new(basis, a.dim)?;
    let m = basis.len();
    let mut mult = Vec::with_capacity(m * m);
    for x in basis {
        for y in basis {
            mult.push(co.of(&a.mul(x, y))?);
        }
    }
    let mut comult = Vec::with_capacity(m);
    let mut s_cols = Vec::with_capacity(m);
    for (b, &p) in basis.iter().zip(&parity) {
        comult.push(co.of_tensor(&delta(b, p))?);
        s_cols.push(co.of(&antipode(b, p))?);
    }
    let labels = basis.iter().map(|b| a.fmt_elem(b)).collect();
    let unit = co.of(&a.unit)?;
    let counit = basis.iter().map(|b| a.eps(b)).collect();
    let h =
        HopfSuperData::from_parts(name, a.conductor, parity, labels, unit, counit, mult, comult, Matrix::from_cols(&s_cols, m))?;
    certify(h)
}

/// Homogeneous basis of the fixed space of `fixed` (if any) split by the
/// eigenspaces `±1` of `conj`, sorted by leading index.
fn graded_basis(conj: &Matrix, fixed: Option<&Matrix>) -> (Vec<Vector>, Vec<u8>) {
    let one = Cyclo::one();
    let mut tagged: Vec<(Vector, u8)> = Vec::new();
    for (p, s) in [(0u8, one.clone()), (1u8, -one.clone())] {
        let eig = sub_identity(conj, &s);
        let sys = match fixed {
            Some(f) => stack(&sub_identity(f, &one), &eig),
            None => eig,
        };
        tagged.extend(sys.kernel().into_iter().map(|v| (v, p)));
    }
    tagged.sort_by(|x, y| vec_cmp(&x.0, &y.0));
    tagged.into_iter().unzip()
}

fn pow_g(a: &HopfSuperData, g: &[Cyclo], k: u8) -> Vector {
    if k.is_multiple_of(2) {
        a.unit.clone()
    } else {
        g.to_vec()
    }
}

/// Columns are the basis of `A^{coinv(g,α)}` inside `A`, in the order used by
/// [`coinvariant_superalgebra`].
pub fn coinvariant_inclusion(a: &HopfSuperData, d: &SuperDatum) -> Matrix {
    let (basis, _) = graded_basis(&conj_matrix(a, &d.g), Some(&hit_matrix(a, &d.alpha)));
    Matrix::from_cols(&basis, a.dim)
}

/// The Hopf superalgebra `A^{coinv(g,α)}`.
pub fn coinvariant_superalgebra(a: &HopfSuperData, d: &SuperDatum) -> Result<HopfSuperData> {
    require_even(a)?;
    if !d.is_super() {
        return Err(Error::SuperCriteriaFailure(format!(
            "{} is not a super-datum (conjugation identity: {}, noncentral: {})",
            d.describe(a),
            d.certificates.conjugation_identity,
            d.certificates.g_noncentral
        )));
    }
    let (basis, parity) = graded_basis(&conj_matrix(a, &d.g), Some(&hit_matrix(a, &d.alpha)));
    let g = d.g.clone();
    let gt = Tensor::simple(&g, &a.unit);
    let delta = |b: &[Cyclo], p: u8| -> Tensor {
        // Δⁱ(b) = ½ b₁(1 + (−1)ⁱ g) ⊗ b₂
        let full = a.comul(b);
        let mut d0 = Tensor::zeros(a.dim, a.dim);
        let mut d1 = Tensor::zeros(a.dim, a.dim);
        for (i, j, c) in full.terms() {
            let x = a.basis(i);
            let xg = a.mul(&x, &g);
            let y = a.basis(j);
            let plus = vec_scale(&(&c * &half()), &vec_add(&x, &xg));
            let minus = vec_scale(&(&c * &half()), &vec_sub(&x, &xg));
            d0 = d0.add(&Tensor::simple(&plus, &y));
            d1 = d1.add(&Tensor::simple(&minus, &y));
        }
        let twisted = a.tensor_mul(&gt, &d1);
        if p == 0 {
            d0.sub(&twisted)
        } else {
            d0.add(&twisted)
        }
    };
    let antipode = |b: &[Cyclo], p: u8| a.mul(&pow_g(a, &g, p), &a.s(b));
    let name = format!("{}^coinv{}", a.name, d.describe(a));
    restrict(a, name, &basis, parity, delta, antipode)
}

/// Bosonization `H # kZ₂` with its canonical triple.
#[derive(Clone, Debug)]
pub struct Bosonization {
    pub hopf: HopfSuperData,
    pub triple: HopfTriple,
}

fn sigma_label(l: &str, i: usize) -> String {
    format!("{}#{}", l, if i == 0 { "e" } else { "σ" })
}

/// `H # kZ₂` on the basis `h_k # σⁱ` at index `i·dim H + k`.
pub fn bosonize(h: &HopfSuperData) -> Result<Bosonization> {
    let d = h.dim;
    let n = 2 * d;
    let idx = |k: usize, i: usize| i * d + k;
    let sign = |neg: bool, c: &Cyclo| if neg { -c } else { c.clone() };
    let mut mult = vec![vec![Cyclo::zero(); n]; n * n];
    for i in 0..2 {
        for k in 0..d {
            for j in 0..2 {
                for l in 0..d {
                    // (h#σⁱ)(h′#σʲ) = (−1)^{i|h′|} hh′ # σ^{i+j}
                    let neg = i == 1 && h.parity[l] == 1;
                    let v = &mut mult[idx(k, i) * n + idx(l, j)];
                    for (m, c) in h.mult_basis(k, l) {
                        v[idx(*m, (i + j) % 2)] = sign(neg, c);
                    }
                }
            }
        }
    }
    let mut comult = Vec::with_capacity(n);
    let mut s = Matrix::zeros(n, n);
    let parity = vec![0u8; n];
    let mut labels = vec![String::new(); n];
    let mut unit = vec![Cyclo::zero(); n];
    let mut counit = vec![Cyclo::zero(); n];
    for i in 0..2 {
        for k in 0..d {
            labels[idx(k, i)] = sigma_label(&h.labels[k], i);
            counit[idx(k, i)] = h.counit[k].clone();
            if i == 0 {
                unit[idx(k, 0)] = h.unit[k].clone();
            }
        }
    }
    for i in 0..2 {
        for k in 0..d {
            // Δ(h#σⁱ) = h₁#σ^{i+|h₂|} ⊗ h₂#σⁱ
            let mut t = Tensor::zeros(n, n);
            for (a, b, c) in h.comult_basis(k) {
                t.add_at(idx(*a, (i + h.parity[*b] as usize) % 2), idx(*b, i), c);
            }
            comult.push(t);
            // S(h#σⁱ) = (−1)^{|h|(1+i)} S(h) # σ^{i+|h|}
            let hp = h.parity[k] as usize;
            let neg = hp == 1 && i == 0;
            for m in 0..d {
                let c = h.antipode.get(m, k);
                if !c.is_zero() {
                    s.set(idx(m, (i + hp) % 2), idx(k, i), sign(neg, c));
                }
            }
        }
    }
    let a = certify(HopfSuperData::from_parts(
        format!("{}#kZ2", h.name),
        h.conductor,
        parity,
        labels,
        unit,
        counit,
        mult,
        comult,
        s,
    )?)?;
    let k = kz2()?;
    let mut pi = Matrix::zeros(2, n);
    let mut iota = Matrix::zeros(n, 2);
    for i in 0..2 {
        for kk in 0..d {
            pi.set(i, idx(kk, i), h.counit[kk].clone());
            iota.set(idx(kk, i), i, h.unit[kk].clone());
        }
    }
    let triple = HopfTriple { a: a.clone(), kz2: k, pi, iota };
    Ok(Bosonization { hopf: a, triple })
}

/// `(1#σ, ε⊗sign)` on `bosonize(h)`.
pub fn canonical_datum(h: &HopfSuperData, boson: &HopfSuperData) -> SuperDatum {
    let d = h.dim;
    let mut g = vec![Cyclo::zero(); 2 * d];
    let mut alpha = vec![Cyclo::zero(); 2 * d];
    for k in 0..d {
        g[d + k] = h.unit[k].clone();
        alpha[k] = h.counit[k].clone();
        alpha[d + k] = -&h.counit[k];
    }
    SuperDatum::certify(boson, g, alpha)
}

/// Map `b_k # σⁱ ↦ b_k gⁱ` from a bosonization of something with basis
/// `basis ⊂ A` back into `A`.
fn recombination(a: &HopfSuperData, basis: &[Vector], g: &[Cyclo]) -> Matrix {
    let mut cols: Vec<Vector> = basis.to_vec();
    cols.extend(basis.iter().map(|b| a.mul(b, g)));
    Matrix::from_cols(&cols, a.dim)
}

/// Checks `A ≅ A^{coinv} # kZ₂` via `b # σⁱ ↦ b gⁱ`, together with the
/// transport of `π` and `ι`. Super-data go through the super bosonization;
/// admissible data through the Yetter–Drinfeld biproduct.
pub fn verify_bosonization_roundtrip(a: &HopfSuperData, d: &SuperDatum) -> Result<Report> {
    let mut r = Report::new(format!("bosonization round trip for {} at {}", a.name, d.describe(a)));
    let triple = split_epi(a, d)?;
    let (boson, basis, kind) = if d.is_super() {
        let hs = coinvariant_superalgebra(a, d)?;
        let (basis, _) = graded_basis(&conj_matrix(a, &d.g), Some(&hit_matrix(a, &d.alpha)));
        r.check("coinvariant dimension", 2 * hs.dim == a.dim, Some(format!("{}", hs.dim)));
        r.check("odd part nonzero", hs.odd_dim() > 0, None);
        (bosonize(&hs)?, basis, "super")
    } else {
        let (b, basis) = biproduct(a, d)?;
        (b, basis, "Yetter–Drinfeld")
    };
    let m = recombination(a, &basis, &d.g);
    r.absorb(&format!("{} bosonization ≅ A: ", kind), isomorphism_report(&boson.hopf, a, &m));
    r.check("π transported", triple.pi.mul(&m) == boson.triple.pi, None);
    r.check("ι transported", m.mul(&boson.triple.iota) == triple.iota, None);
    Ok(r)
}

/// The Radford biproduct `B ⋊ kZ₂` for the coinvariant braided Hopf algebra
/// `B` of an admissible datum, with `B`'s basis inside `A`.
fn biproduct(a: &HopfSuperData, d: &SuperDatum) -> Result<(Bosonization, Vec<Vector>)> {
    let basis = coinvariant_space(a, d);
    let co = Coords::new(&basis, a.dim)?;
    let m = basis.len();
    let n = 2 * m;
    let g = &d.g;
    let idx = |k: usize, i: usize| i * m + k;
    let act = |i: usize, b: &[Cyclo]| if i == 0 { b.to_vec() } else { a.mul(&a.mul(g, b), g) };
    // b ↦ e⊗b⁺ + σ⊗b⁻ with b^± = ½(b ± b↼α)
    let coact = |b: &[Cyclo]| -> [Vector; 2] {
        let h = hit_right(a, b, &d.alpha);
        [vec_scale(&half(), &vec_add(b, &h)), vec_scale(&half(), &vec_sub(b, &h))]
    };
    // ιSπ = ιπ on kZ₂; ιπ(a) = ½(ε+α)(a)·1 + ½(ε−α)(a)·g
    let iota_pi = |x: &[Cyclo]| -> Vector {
        let e = a.eps(x);
        let al = crate::linalg::dot(&d.alpha, x);
        let mut v = vec_scale(&(&(&e + &al) * &half()), &a.unit);
        add_scaled(&mut v, &(&(&e - &al) * &half()), g);
        v
    };
    // Δ_B(b) = b₁ ιSπ(b₂) ⊗ b₃
    let delta_b = |b: &[Cyclo]| -> Tensor {
        let mut out = Tensor::zeros(a.dim, a.dim);
        for (i, j, c) in a.comul(b).terms() {
            for (p, q, c2) in a.comult_basis(j) {
                let left = a.mul(&a.basis(i), &iota_pi(&a.basis(*p)));
                out = out.add(&Tensor::simple(&vec_scale(&(&c * c2), &left), &a.basis(*q)));
            }
        }
        out
    };
    // S_B(b) = ιπ(b₁) S_A(b₂)
    let s_b = |b: &[Cyclo]| -> Vector {
        let mut out = a.zero();
        for (i, j, c) in a.comul(b).terms() {
            add_scaled(&mut out, &c, &a.mul(&iota_pi(&a.basis(i)), &a.s(&a.basis(j))));
        }
        out
    };
    let mut mult = vec![vec![Cyclo::zero(); n]; n * n];
    let mut comult = Vec::with_capacity(n);
    let mut s = Matrix::zeros(n, n);
    let mut labels = vec![String::new(); n];
    let mut unit = vec![Cyclo::zero(); n];
    let mut counit = vec![Cyclo::zero(); n];
    let bunit = co.of(&a.unit)?;
    for i in 0..2 {
        for k in 0..m {
            labels[idx(k, i)] = sigma_label(&a.fmt_elem(&basis[k]), i);
            counit[idx(k, i)] = a.eps(&basis[k]);
            if i == 0 {
                unit[idx(k, 0)] = bunit[k].clone();
            }
            for j in 0..2 {
                for l in 0..m {
                    let prod = co.of(&a.mul(&basis[k], &act(i, &basis[l])))?;
                    let v = &mut mult[idx(k, i) * n + idx(l, j)];
                    for (p, c) in prod.into_iter().enumerate() {
                        v[idx(p, (i + j) % 2)] = c;
                    }
                }
            }
        }
    }
    for i in 0..2 {
        for k in 0..m {
            // Δ(b#σⁱ) = b⁽¹⁾ # (b⁽²⁾)₍₋₁₎σⁱ ⊗ (b⁽²⁾)₍₀₎ # σⁱ
            let db = co.of_tensor(&delta_b(&basis[k]))?;
            let mut t = Tensor::zeros(n, n);
            for (x, y, c) in db.terms() {
                let parts = coact(&basis[y]);
                for (h, part) in parts.iter().enumerate() {
                    let pc = co.of(part)?;
                    for (q, c2) in pc.iter().enumerate() {
                        t.add_at(idx(x, (h + i) % 2), idx(q, i), &(&c * c2));
                    }
                }
            }
            comult.push(t);
            // S(b#σⁱ) = (1#σ^{i+h}) (S_B(b_h)#1) for b = Σ_h b_h, b_h ∈ coaction degree h
            let parts = coact(&basis[k]);
            let mut col = vec![Cyclo::zero(); n];
            for (h, part) in parts.iter().enumerate() {
                let e = (i + h) % 2;
                let img = co.of(&act(e, &s_b(part)))?;
                for (q, c) in img.into_iter().enumerate() {
                    col[idx(q, e)] += &c;
                }
            }
            for (row, c) in col.into_iter().enumerate() {
                s.set(row, idx(k, i), c);
            }
        }
    }
    let hopf = certify(HopfSuperData::from_parts(
        format!("{}^coinv ⋊ kZ2", a.name),
        a.conductor,
        vec![0; n],
        labels,
        unit,
        counit.clone(),
        mult,
        comult,
        s,
    )?)?;
    let mut pi = Matrix::zeros(2, n);
    let mut iota = Matrix::zeros(n, 2);
    for i in 0..2 {
        for k in 0..m {
            pi.set(i, idx(k, i), counit[idx(k, 0)].clone());
            iota.set(idx(k, i), i, bunit[k].clone());
        }
    }
    let triple = HopfTriple { a: hopf.clone(), kz2: kz2()?, pi, iota };
    Ok((Bosonization { hopf, triple }, basis))
}

/// The AEG superization of a Hopf algebra by an involutive group-like `c`.
pub fn aeg_superize(h: &HopfSuperData, c: &[Cyclo]) -> Result<HopfSuperData> {
    require_even(h)?;
    if !is_grouplike(h, c) {
        return Err(Error::NotGrouplike);
    }
    if h.mul(c, c) != h.unit {
        return Err(Error::NotInvolutiveGrouplike);
    }
    let conj = conj_matrix(h, c);
    let (basis, parity) = aeg_basis(h, &conj);
    let co = Coords::new(&basis, h.dim)?;
    let pb = |v: &[Cyclo]| -> Result<u8> {
        let cv = co.of(v)?;
        let mut seen = None;
        for (k, x) in cv.iter().enumerate() {
            if !x.is_zero() {
                match seen {
                    None => seen = Some(parity[k]),
                    Some(p) if p != parity[k] => return Err(Error::NotClosed),
                    _ => {}
                }
            }
        }
        Ok(seen.unwrap_or(0))
    };
    // split each Δ(b) by the parity of its right factor
    let mut halves = Vec::with_capacity(basis.len());
    for b in &basis {
        let mut t0 = Tensor::zeros(h.dim, h.dim);
        let mut t1 = Tensor::zeros(h.dim, h.dim);
        for (i, j, x) in h.comul(b).terms() {
            let right = h.basis(j);
            let plus = vec_scale(&half(), &vec_add(&right, &conj.mul_vec(&right)));
            let minus = vec_scale(&half(), &vec_sub(&right, &conj.mul_vec(&right)));
            let left = vec_scale(&x, &h.basis(i));
            t0 = t0.add(&Tensor::simple(&left, &plus));
            t1 = t1.add(&Tensor::simple(&left, &minus));
        }
        halves.push((t0, t1));
    }
    for b in &basis {
        pb(b)?;
    }
    let ct = Tensor::simple(c, &h.unit);
    let lookup = |b: &[Cyclo]| basis.iter().position(|x| x == b).unwrap();
    let delta = |b: &[Cyclo], p: u8| -> Tensor {
        let (t0, t1) = &halves[lookup(b)];
        let twisted = h.tensor_mul(&ct, t1);
        if p == 0 {
            t0.sub(&twisted)
        } else {
            t0.add(&twisted)
        }
    };
    let antipode = |b: &[Cyclo], p: u8| h.mul(&pow_g(h, c, p), &h.s(b));
    restrict(h, format!("{}^AEG({})", h.name, h.fmt_elem(c)), &basis, parity, delta, antipode)
}

/// Greedy homogeneous basis: `½(e_i ± c e_i c)` for each basis vector in
/// turn, even vectors first.
pub fn aeg_basis(h: &HopfSuperData, conj: &Matrix) -> (Vec<Vector>, Vec<u8>) {
    let mut out = Vec::new();
    let mut parity = Vec::new();
    for (p, s) in [(0u8, Cyclo::one()), (1u8, -Cyclo::one())] {
        let mut span = crate::linalg::Subspace::new(h.dim);
        for i in 0..h.dim {
            let e = unit_vec(h.dim, i);
            let v = vec_scale(&half(), &vec_add(&e, &vec_scale(&s, &conj.col(i))));
            if !is_zero_vec(&v) && span.insert(&v) {
                out.push(v);
                parity.push(p);
            }
        }
    }
    (out, parity)
}

/// True iff `m` is a Hopf algebra automorphism of `a`.
pub fn verify_automorphism(a: &HopfSuperData, m: &Matrix) -> bool {
    m.rows == a.dim && m.cols == a.dim && isomorphism_report(a, a, m).passed()
}

/// Orbits of `data` under the group generated by `autos`, as lists of
/// indices into `data` in ascending order.
pub fn orbit_classes(a: &HopfSuperData, data: &[SuperDatum], autos: &[Matrix]) -> Result<Vec<Vec<usize>>> {
    let mut inverses = Vec::with_capacity(autos.len());
    for m in autos {
        if !verify_automorphism(a, m) {
            return Err(Error::NotAutomorphism);
        }
        inverses.push(m.inverse().ok_or(Error::NotAutomorphism)?);
    }
    let n = data.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (i, d) in data.iter().enumerate() {
        for (m, mi) in autos.iter().zip(&inverses) {
            let t = d.transport(a, m, mi);
            let j = data
                .iter()
                .position(|e| e.g == t.g && e.alpha == t.alpha)
                .ok_or_else(|| Error::Invalid(format!("image of {} is not in the list", d.describe(a))))?;
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_of: Vec<usize> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match root_of.iter().position(|&x| x == r) {
            Some(k) => classes[k].push(i),
            None => {
                root_of.push(r);
                classes.push(vec![i]);
            }
        }
    }
    Ok(classes)
}
