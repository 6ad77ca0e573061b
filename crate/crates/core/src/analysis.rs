//! Structural predicates, invariants, pairings and morphism witnesses.

use std::collections::HashMap;

use serde::Serialize;

use crate::characters::{
    characters, grouplikes, hopf_characters, jacobson_radical, trace_form, AlgebraTable, GrouplikeMode,
};
use crate::cyclo::{find_roots, Cyclo, UniPoly};
use crate::error::{Error, Result};
use crate::hopf::{center_basis, dual, isomorphism_report, morphism_report, skew_primitives, HopfSuperData};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::hopf::Tensor;
use crate::presentation::{Compiled, Word};
use crate::report::Report;
use crate::superdata::bosonize;

/// Semisimplicity of the bosonization, by the regular trace form.
pub fn is_semisimple(h: &HopfSuperData) -> Result<bool> {
    let b = bosonize(h)?;
    Ok(!trace_form(&AlgebraTable::of(&b.hopf)).det().is_zero())
}

/// Pointedness of the bosonization: the semisimple quotient of its dual
/// algebra is commutative and split.
pub fn is_pointed(h: &HopfSuperData) -> Result<bool> {
    let b = bosonize(h)?;
    let dual_alg = AlgebraTable::dual_of(&b.hopf);
    let rad = jacobson_radical(&dual_alg);
    let ss = dual_alg.quotient(&Subspace::spanned_by(dual_alg.dim, &rad));
    if !ss.algebra.is_commutative() {
        return Ok(false);
    }
    let chars = characters(&dual_alg, h.conductor)?;
    Ok(chars.chars.len() == ss.algebra.dim)
}

fn sign(p: bool, c: Cyclo) -> Cyclo {
    if p {
        -c
    } else {
        c
    }
}

/// `ab = (−1)^{|a||b|} ba` on all basis pairs.
pub fn is_supercommutative(h: &HopfSuperData) -> bool {
    (0..h.dim).all(|i| {
        (i..h.dim).all(|j| {
            let ab = h.mul(&h.basis(i), &h.basis(j));
            let ba = h.mul(&h.basis(j), &h.basis(i));
            let odd = h.parity[i] == 1 && h.parity[j] == 1;
            ab == ba.into_iter().map(|c| sign(odd, c)).collect::<Vector>()
        })
    })
}

/// `Δ(c) = (−1)^{|c₁||c₂|} c₂ ⊗ c₁` on all basis vectors.
pub fn is_supercocommutative(h: &HopfSuperData) -> bool {
    (0..h.dim).all(|i| {
        let t = h.comul(&h.basis(i));
        t.terms().iter().all(|(a, b, c)| {
            let odd = h.parity[*a] == 1 && h.parity[*b] == 1;
            *t.get(*b, *a) == sign(odd, c.clone())
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntipodeSpectrum {
    /// Eigenvalues in the working field, with multiplicity, canonically sorted.
    pub eigenvalues: Vec<Cyclo>,
    pub nonsplit_degree: usize,
    /// Least `k ≥ 1` with `Sᵏ = id`, searched up to `4·dim`.
    pub order: Option<u64>,
}

pub fn antipode_spectrum(h: &HopfSuperData) -> Result<AntipodeSpectrum> {
    let cp = h.antipode.char_poly();
    let rs = find_roots(&cp, h.conductor.max(1), crate::characters::DEFAULT_FUEL)?;
    let mut p = h.antipode.clone();
    let mut order = None;
    for k in 1..=(4 * h.dim as u64) {
        if p.is_identity() {
            order = Some(k);
            break;
        }
        p = p.mul(&h.antipode);
    }
    Ok(AntipodeSpectrum { eigenvalues: rs.roots, nonsplit_degree: rs.nonsplit_degree, order })
}

/// Checks that `p` (`p[i][j] = ⟨k_i, h_j⟩`) is a Hopf pairing `K × H → k`.
pub fn verify_pairing(k: &HopfSuperData, h: &HopfSuperData, p: &Matrix) -> Report {
    let mut r = Report::new(format!("pairing {} × {}", k.name, h.name));
    if p.rows != k.dim || p.cols != h.dim {
        r.fail("shape", format!("{}×{}", p.rows, p.cols));
        return r;
    }
    let bad = (0..k.dim)
        .flat_map(|i| (0..h.dim).map(move |j| (i, j)))
        .find(|&(i, j)| k.parity[i] != h.parity[j] && !p.get(i, j).is_zero());
    r.check("parity", bad.is_none(), bad.map(|(i, j)| format!("⟨{}, {}⟩", k.labels[i], h.labels[j])));

    // ⟨k, hh′⟩ = ⟨k₁, h⟩⟨k₂, h′⟩
    let mut bad = None;
    'a: for i in 0..k.dim {
        let dk = k.comult_basis(i);
        for j in 0..h.dim {
            for jj in 0..h.dim {
                let lhs = crate::linalg::dot(&p.row(i), &h.mul(&h.basis(j), &h.basis(jj)));
                let mut rhs = Cyclo::zero();
                for (u, v, c) in dk {
                    rhs += &(c * p.get(*u, j) * p.get(*v, jj));
                }
                if lhs != rhs {
                    bad = Some(format!("⟨{}, {}·{}⟩", k.labels[i], h.labels[j], h.labels[jj]));
                    break 'a;
                }
            }
        }
    }
    r.check("⟨k, hh′⟩ = ⟨Δk, h⊗h′⟩", bad.is_none(), bad);

    let mut bad = None;
    'b: for j in 0..h.dim {
        let dh = h.comult_basis(j);
        for i in 0..k.dim {
            for ii in 0..k.dim {
                let lhs = crate::linalg::dot(&k.mul(&k.basis(i), &k.basis(ii)), &p.col(j));
                let mut rhs = Cyclo::zero();
                for (u, v, c) in dh {
                    rhs += &(c * p.get(i, *u) * p.get(ii, *v));
                }
                if lhs != rhs {
                    bad = Some(format!("⟨{}·{}, {}⟩", k.labels[i], k.labels[ii], h.labels[j]));
                    break 'b;
                }
            }
        }
    }
    r.check("⟨kk′, h⟩ = ⟨k⊗k′, Δh⟩", bad.is_none(), bad);

    r.check("⟨k, 1⟩ = ε(k)", p.mul_vec(&h.unit) == k.counit, None);
    r.check("⟨1, h⟩ = ε(h)", p.transpose().mul_vec(&k.unit) == h.counit, None);
    r.check("nondegenerate", p.rows == p.cols && !p.det().is_zero(), None);
    r.check("⟨k, S h⟩ = ⟨S k, h⟩", p.mul(&h.antipode) == k.antipode.transpose().mul(p), None);
    r
}

/// Extends generator-level values `gens[a][b] = ⟨x_a, y_b⟩` to the whole
/// bases of two compiled presentations by the Hopf pairing rules.
pub fn pairing_from_generators(k: &Compiled, h: &Compiled, gens: &Matrix) -> Result<Matrix> {
    let (kh, hh) = (&k.hopf, &h.hopf);
    let kg: Vec<Vector> = (0..k.presentation.generators.len()).map(|a| k.word_vector(&[a])).collect::<Result<_>>()?;
    let hg: Vec<Vector> = (0..h.presentation.generators.len()).map(|b| h.word_vector(&[b])).collect::<Result<_>>()?;
    if gens.rows != kg.len() || gens.cols != hg.len() {
        return Err(Error::DimensionMismatch("generator pairing table".into()));
    }
    let mut st = PairState { k, h, gens, memo: HashMap::new() };
    let mut p = Matrix::zeros(kh.dim, hh.dim);
    for i in 0..kh.dim {
        for j in 0..hh.dim {
            let v = st.pair(i, j)?;
            p.set(i, j, v);
        }
    }
    Ok(p)
}

struct PairState<'a> {
    k: &'a Compiled,
    h: &'a Compiled,
    gens: &'a Matrix,
    memo: HashMap<(usize, usize), Option<Cyclo>>,
}

impl PairState<'_> {
    fn pair_vec(&mut self, x: &[Cyclo], y: &[Cyclo]) -> Result<Cyclo> {
        let mut acc = Cyclo::zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    acc += &(a * b * &self.pair(i, j)?);
                }
            }
        }
        Ok(acc)
    }

    fn pair(&mut self, i: usize, j: usize) -> Result<Cyclo> {
        match self.memo.get(&(i, j)) {
            Some(Some(v)) => return Ok(v.clone()),
            Some(None) => return Err(Error::Invalid("pairing recursion does not terminate".into())),
            None => {}
        }
        self.memo.insert((i, j), None);
        let (kw, hw) = (self.k.basis_words[i].clone(), self.h.basis_words[j].clone());
        let v = if kw.is_empty() {
            self.h.hopf.counit[j].clone()
        } else if hw.is_empty() {
            self.k.hopf.counit[i].clone()
        } else if kw.len() == 1 && hw.len() == 1 {
            self.gens.get(kw[0], hw[0]).clone()
        } else if hw.len() >= 2 && kw.len() <= hw.len() {
            // ⟨k, b·rest⟩ = ⟨k₁, b⟩⟨k₂, rest⟩
            let b = self.h.word_vector(&hw[..1])?;
            let rest = self.h.word_vector(&hw[1..])?;
            let mut acc = Cyclo::zero();
            for (u, v, c) in self.k.hopf.comult_basis(i).to_vec() {
                let x = self.pair_vec(&crate::linalg::unit_vec(self.k.hopf.dim, u), &b)?;
                if x.is_zero() {
                    continue;
                }
                let y = self.pair_vec(&crate::linalg::unit_vec(self.k.hopf.dim, v), &rest)?;
                acc += &(&c * &x * y);
            }
            acc
        } else {
            // ⟨a·rest, h⟩ = ⟨a, h₁⟩⟨rest, h₂⟩
            let a = self.k.word_vector(&kw[..1])?;
            let rest = self.k.word_vector(&kw[1..])?;
            let mut acc = Cyclo::zero();
            for (u, v, c) in self.h.hopf.comult_basis(j).to_vec() {
                let x = self.pair_vec(&a, &crate::linalg::unit_vec(self.h.hopf.dim, u))?;
                if x.is_zero() {
                    continue;
                }
                let y = self.pair_vec(&rest, &crate::linalg::unit_vec(self.h.hopf.dim, v))?;
                acc += &(&c * &x * y);
            }
            acc
        };
        self.memo.insert((i, j), Some(v.clone()));
        Ok(v)
    }
}

/// The pairing `(f#σⁱ, h#σʲ) ↦ (−1)^{ij} f(h)` between `bosonize(dual(H))`
/// and `bosonize(H)`, returned with both bosonizations.
pub fn bosonization_pairing(h: &HopfSuperData) -> Result<(HopfSuperData, HopfSuperData, Matrix)> {
    let hd = dual(h)?;
    let bk = bosonize(&hd)?.hopf;
    let bh = bosonize(h)?.hopf;
    let d = h.dim;
    let mut p = Matrix::zeros(2 * d, 2 * d);
    for i in 0..2 {
        for j in 0..2 {
            for f in 0..d {
                let c = if i * j == 1 { -Cyclo::one() } else { Cyclo::one() };
                p.set(i * d + f, j * d + f, c);
            }
        }
    }
    Ok((bk, bh, p))
}

/// Morphism check for a matrix witness.
pub fn verify_morphism(src: &HopfSuperData, dst: &HopfSuperData, m: &Matrix) -> Report {
    morphism_report(src, dst, m)
}

pub fn verify_isomorphism(src: &HopfSuperData, dst: &HopfSuperData, m: &Matrix) -> Report {
    isomorphism_report(src, dst, m)
}

/// Extends generator images through the presentation of `src`, then checks.
pub fn verify_isomorphism_images(src: &Compiled, dst: &HopfSuperData, images: &[Vector]) -> Result<Report> {
    let m = src.extend_generator_images(dst, images)?;
    Ok(isomorphism_report(&src.hopf, dst, &m))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub dim_odd: usize,
    pub grouplikes: usize,
    pub group_abelian: bool,
    pub group_invariants: Option<Vec<u64>>,
    pub characters: usize,
    pub antipode_order: Option<u64>,
    pub antipode_spectrum: Vec<String>,
    pub antipode_nonsplit: usize,
    /// Eigenvalues of `S` restricted to the odd part.
    pub antipode_spectrum_odd: Vec<String>,
    /// `(even, odd)` dimensions of the `g`-skew-primitives, over `g ∈ G(H)`.
    pub skew_primitive_dims: Vec<(usize, usize)>,
    pub is_semisimple: bool,
    pub is_pointed: bool,
    pub is_supercommutative: bool,
    pub is_supercocommutative: bool,
    pub center_dim: usize,
    pub supercenter_dim: usize,
}

/// Dimension of `{a : ab = (−1)^{|a||b|} ba}` spanned by homogeneous `a`.
pub fn supercenter_dim(h: &HopfSuperData) -> usize {
    let d = h.dim;
    let mut total = 0;
    for p in 0..2u8 {
        let idx: Vec<usize> = (0..d).filter(|&i| h.parity[i] == p).collect();
        let mut m = Matrix::zeros(d * d, idx.len());
        for (col, &i) in idx.iter().enumerate() {
            for j in 0..d {
                let ab = h.mul(&h.basis(i), &h.basis(j));
                let ba = h.mul(&h.basis(j), &h.basis(i));
                let odd = p == 1 && h.parity[j] == 1;
                for k in 0..d {
                    let v = if odd { &ab[k] + &ba[k] } else { &ab[k] - &ba[k] };
                    m.set(j * d + k, col, v);
                }
            }
        }
        total += idx.len() - m.rank();
    }
    total
}

pub fn fingerprint(h: &HopfSuperData) -> Result<Fingerprint> {
    let gs = grouplikes(h, GrouplikeMode::EvenHomogeneous)?;
    let chars = hopf_characters(h)?;
    if !chars.complete {
        return Err(Error::IncompleteCharacters { missing: chars.missing, conductor: h.conductor });
    }
    let spec = antipode_spectrum(h)?;
    let odd: Vec<usize> = (0..h.dim).filter(|&i| h.parity[i] == 1).collect();
    let odd_spec = if odd.is_empty() {
        Vec::new()
    } else {
        let mut m = Matrix::zeros(odd.len(), odd.len());
        for (r, &i) in odd.iter().enumerate() {
            for (c, &j) in odd.iter().enumerate() {
                m.set(r, c, h.antipode.get(i, j).clone());
            }
        }
        let rs = find_roots(&m.char_poly(), h.conductor.max(1), crate::characters::DEFAULT_FUEL)?;
        rs.roots
    };
    let mut skew = Vec::with_capacity(gs.len());
    for g in &gs.elements {
        skew.push(skew_primitives(h, g)?.dims());
    }
    skew.sort();
    Ok(Fingerprint {
        dim: h.dim,
        dim_odd: h.odd_dim(),
        grouplikes: gs.len(),
        group_abelian: gs.group.as_ref().is_some_and(|g| g.is_abelian()),
        group_invariants: gs.group.as_ref().and_then(|g| g.invariant_factors()),
        characters: chars.chars.len(),
        antipode_order: spec.order,
        antipode_spectrum: spec.eigenvalues.iter().map(|c| c.to_string()).collect(),
        antipode_nonsplit: spec.nonsplit_degree,
        antipode_spectrum_odd: odd_spec.iter().map(|c| c.to_string()).collect(),
        skew_primitive_dims: skew,
        is_semisimple: is_semisimple(h)?,
        is_pointed: is_pointed(h)?,
        is_supercommutative: is_supercommutative(h),
        is_supercocommutative: is_supercocommutative(h),
        center_dim: center_basis(h).len(),
        supercenter_dim: supercenter_dim(h),
    })
}

/// First fingerprint field in which two objects differ, in a fixed order.
pub fn first_difference(a: &Fingerprint, b: &Fingerprint) -> Option<&'static str> {
    let fields: [(&'static str, bool); 17] = [
        ("dim", a.dim == b.dim),
        ("dim_odd", a.dim_odd == b.dim_odd),
        ("grouplikes", a.grouplikes == b.grouplikes),
        ("group_abelian", a.group_abelian == b.group_abelian),
        ("group_invariants", a.group_invariants == b.group_invariants),
        ("characters", a.characters == b.characters),
        ("antipode_spectrum", a.antipode_spectrum == b.antipode_spectrum),
        ("antipode_nonsplit", a.antipode_nonsplit == b.antipode_nonsplit),
        ("antipode_order", a.antipode_order == b.antipode_order),
        ("antipode_spectrum_odd", a.antipode_spectrum_odd == b.antipode_spectrum_odd),
        ("skew_primitive_dims", a.skew_primitive_dims == b.skew_primitive_dims),
        ("is_semisimple", a.is_semisimple == b.is_semisimple),
        ("is_pointed", a.is_pointed == b.is_pointed),
        ("is_supercommutative", a.is_supercommutative == b.is_supercommutative),
        ("is_supercocommutative", a.is_supercocommutative == b.is_supercocommutative),
        ("center_dim", a.center_dim == b.center_dim),
        ("supercenter_dim", a.supercenter_dim == b.supercenter_dim),
    ];
    fields.iter().find(|(_, same)| !same).map(|(n, _)| *n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Distinction {
    DistinctBy(&'static str),
    Inconclusive,
}

pub fn distinguish(a: &HopfSuperData, b: &HopfSuperData) -> Result<Distinction> {
    let (fa, fb) = (fingerprint(a)?, fingerprint(b)?);
    Ok(match first_difference(&fa, &fb) {
        Some(f) => Distinction::DistinctBy(f),
        None => Distinction::Inconclusive,
    })
}

/// Outcome of [`search_isomorphism`].
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub witness: Option<Matrix>,
    pub nodes: u64,
    pub fuel_exhausted: bool,
}

#[derive(Clone, Debug)]
pub enum IsoVerdict {
    ProvedDistinct(&'static str),
    ProvedIsomorphic(Matrix),
    Undecided,
}

impl IsoVerdict {
    pub fn describe(&self) -> String {
        match self {
            IsoVerdict::ProvedDistinct(f) => format!("proved distinct ({})", f),
            IsoVerdict::ProvedIsomorphic(_) => "proved isomorphic (witness)".into(),
            IsoVerdict::Undecided => "undecided".into(),
        }
    }
}

pub const SEARCH_FUEL: u64 = 50_000;

enum GenKind {
    Grouplike,
    Skew,
    Other,
}

struct Check {
    level: usize,
    kind: CheckKind,
}

enum CheckKind {
    Rule(usize),
    Delta(usize),
    Antipode(usize),
}

struct Search<'a> {
    src: &'a Compiled,
    dst: &'a HopfSuperData,
    order: Vec<usize>,
    pos: Vec<usize>,
    coeffs: Vec<Cyclo>,
    pools: Vec<Option<Vec<Vector>>>,
    checks: Vec<Check>,
    gen_vecs: Vec<Vector>,
    images: Vec<Option<Vector>>,
    nodes: u64,
    fuel: u64,
}

impl Search<'_> {
    fn word_image(&self, w: &[usize]) -> Vector {
        let mut acc = self.dst.one();
        for &g in w {
            acc = self.dst.mul(&acc, self.images[g].as_ref().expect("assigned"));
        }
        acc
    }

    fn vec_image(&self, v: &[Cyclo]) -> Vector {
        let mut acc = self.dst.zero();
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                crate::linalg::add_scaled(&mut acc, c, &self.word_image(&self.src.basis_words[k]));
            }
        }
        acc
    }

    fn holds(&self, c: &CheckKind) -> bool {
        let p = &self.src.presentation;
        match c {
            CheckKind::Rule(r) => {
                let rule = &p.rules[*r];
                let mut rhs = self.dst.zero();
                for (w, c) in &rule.rhs {
                    crate::linalg::add_scaled(&mut rhs, c, &self.word_image(w));
                }
                self.word_image(&rule.lhs) == rhs
            }
            CheckKind::Delta(g) => {
                let t = self.src.hopf.comul(&self.gen_vecs[*g]);
                let mut want = Tensor::zeros(self.dst.dim, self.dst.dim);
                for (a, b, c) in t.terms() {
                    let l = self.word_image(&self.src.basis_words[a]);
                    let r = self.word_image(&self.src.basis_words[b]);
                    want = want.add(&Tensor::simple(&l, &r).scale(&c));
                }
                self.dst.comul(self.images[*g].as_ref().expect("assigned")) == want
            }
            CheckKind::Antipode(g) => {
                let s = self.src.hopf.s(&self.gen_vecs[*g]);
                self.dst.s(self.images[*g].as_ref().expect("assigned")) == self.vec_image(&s)
            }
        }
    }

    fn run(&mut self, level: usize) -> Result<Option<Matrix>> {
        if level == self.order.len() {
            let imgs: Vec<Vector> = self.images.iter().map(|v| v.clone().expect("assigned")).collect();
            let m = match self.src.extend_generator_images(self.dst, &imgs) {
                Ok(m) => m,
                Err(_) => return Ok(None),
            };
            return Ok(isomorphism_report(&self.src.hopf, self.dst, &m).passed().then_some(m));
        }
        let g = self.order[level];
        let pool = match &self.pools[level] {
            Some(p) => p.clone(),
            None => self.affine_pool(level),
        };
        for u in pool {
            if self.nodes >= self.fuel {
                return Ok(None);
            }
            self.nodes += 1;
            self.images[g] = Some(u);
            if self.checks.iter().filter(|c| c.level == level).all(|c| self.holds(&c.kind)) {
                if let Some(m) = self.run(level + 1)? {
                    return Ok(Some(m));
                }
            }
        }
        self.images[g] = None;
        Ok(None)
    }
}

impl Search<'_> {
    /// Candidates for a generator constrained only through relations: the
    /// affine space cut out by the counit and by every rule that is linear
    /// in the generator once earlier images are fixed, enumerated with
    /// coefficients from `0`, the roots of unity and their halves.
    fn affine_pool(&mut self, level: usize) -> Vec<Vector> {
        let g = self.order[level];
        let p = &self.src.presentation;
        let par = p.generators[g].parity;
        let idx: Vec<usize> = (0..self.dst.dim).filter(|&k| self.dst.parity[k] == par).collect();
        let earlier = |w: &Word| w.iter().all(|&x| x == g || self.pos[x] < level);
        let mut rows_a: Vec<Vec<Cyclo>> = Vec::new();
        let mut rhs: Vec<Cyclo> = Vec::new();
        let eps_row: Vec<Cyclo> = idx.iter().map(|&k| self.dst.counit[k].clone()).collect();
        rows_a.push(eps_row);
        rhs.push(self.src.hopf.eps(&self.gen_vecs[g]));
        for rule in &p.rules {
            let mut terms: Vec<(Word, Cyclo)> = rule.rhs.iter().map(|(w, c)| (w.clone(), -c.clone())).collect();
            terms.push((rule.lhs.clone(), Cyclo::one()));
            let linear = terms.iter().all(|(w, _)| earlier(w) && w.iter().filter(|&&x| x == g).count() <= 1);
            if !linear || !terms.iter().any(|(w, _)| w.contains(&g)) {
                continue;
            }
            let saved = self.images[g].take();
            let mut cols: Vec<Vector> = Vec::with_capacity(idx.len());
            for &k in &idx {
                self.images[g] = Some(crate::linalg::unit_vec(self.dst.dim, k));
                let mut v = self.dst.zero();
                for (w, c) in &terms {
                    if w.contains(&g) {
                        crate::linalg::add_scaled(&mut v, c, &self.word_image(w));
                    }
                }
                cols.push(v);
            }
            let mut constant = self.dst.zero();
            for (w, c) in &terms {
                if !w.contains(&g) {
                    crate::linalg::add_scaled(&mut constant, c, &self.word_image(w));
                }
            }
            self.images[g] = saved;
            for r in 0..self.dst.dim {
                rows_a.push(cols.iter().map(|c| c[r].clone()).collect());
                rhs.push(-constant[r].clone());
            }
        }
        let a = Matrix::from_rows(&rows_a);
        let Some(u0) = a.solve(&rhs) else { return Vec::new() };
        let free = a.kernel();
        let lift = |v: &[Cyclo]| -> Vector {
            let mut out = self.dst.zero();
            for (t, &k) in idx.iter().enumerate() {
                out[k] = v[t].clone();
            }
            out
        };
        let base = lift(&u0);
        let dirs: Vec<Vector> = free.iter().map(|v| lift(v)).collect();
        if dirs.len() == 1 {
            if let Some(roots) = self.quadratic_roots(g, &base, &dirs[0]) {
                let mut out: Vec<Vector> = roots
                    .iter()
                    .map(|c| {
                        let mut w = base.clone();
                        crate::linalg::add_scaled(&mut w, c, &dirs[0]);
                        w
                    })
                    .collect();
                out.retain(|u| !u.iter().all(|c| c.is_zero()));
                return out;
            }
        }
        let mut out = vec![base];
        for d in &dirs {
            let mut next = Vec::with_capacity(out.len() * self.coeffs.len());
            for u in &out {
                for c in &self.coeffs {
                    let mut w = u.clone();
                    crate::linalg::add_scaled(&mut w, c, d);
                    next.push(w);
                }
            }
            out = next;
            if out.len() as u64 > self.fuel {
                break;
            }
        }
        out.retain(|u| !u.iter().all(|c| c.is_zero()));
        out
    }
}

impl Search<'_> {
    /// For `u = base + c·dir`, the common roots in `c` of every rule that is
    /// at most quadratic in the generator and otherwise fully assigned;
    /// `None` when no such rule constrains `c`.
    fn quadratic_roots(&mut self, g: usize, base: &[Cyclo], dir: &[Cyclo]) -> Option<Vec<Cyclo>> {
        let src = self.src;
        let p = &src.presentation;
        let pos = self.pos.clone();
        let level = pos[g];
        let ready = |w: &Word| w.iter().all(|&x| x == g || pos[x] < level);
        let mut acc: Option<UniPoly> = None;
        let saved = self.images[g].take();
        for rule in &p.rules {
            let words: Vec<&Word> = std::iter::once(&rule.lhs).chain(rule.rhs.keys()).collect();
            let deg = words.iter().map(|w| w.iter().filter(|&&x| x == g).count()).max().unwrap_or(0);
            if deg != 2 || !words.iter().all(|w| ready(w)) {
                continue;
            }
            let at = |s: &mut Self, c: i64| -> Vector {
                let mut u = base.to_vec();
                crate::linalg::add_scaled(&mut u, &Cyclo::from_int(c), dir);
                s.images[g] = Some(u);
                let mut v = s.word_image(&rule.lhs);
                for (w, k) in &rule.rhs {
                    crate::linalg::add_scaled(&mut v, &-k.clone(), &s.word_image(w));
                }
                v
            };
            let (f0, f1, f2) = (at(self, 0), at(self, 1), at(self, 2));
            let half = Cyclo::from_ratio(1, 2);
            for k in 0..self.dst.dim {
                let c2 = &(&(&f2[k] - &(&f1[k] * &Cyclo::from_int(2))) + &f0[k]) * &half;
                let c1 = &(&f1[k] - &f0[k]) - &c2;
                let q = UniPoly::new(vec![f0[k].clone(), c1, c2]);
                if q.is_zero() {
                    continue;
                }
                acc = Some(match acc {
                    None => q,
                    Some(a) => a.gcd(&q),
                });
            }
        }
        self.images[g] = saved;
        let f = acc?;
        if f.degree() == Some(0) {
            return Some(Vec::new());
        }
        let mut roots = find_roots(&f, self.dst.conductor.max(1), crate::characters::DEFAULT_FUEL).ok()?.roots;
        roots.dedup();
        Some(roots)
    }
}

fn coefficient_set(conductor: u32) -> Vec<Cyclo> {
    let n = conductor.max(2);
    let roots: Vec<Cyclo> = (0..n as i64).map(|k| Cyclo::zeta(n, k)).collect();
    let half = Cyclo::from_ratio(1, 2);
    std::iter::once(Cyclo::zero()).chain(roots.iter().cloned()).chain(roots.iter().map(|r| r * &half)).collect()
}

fn order_of(h: &HopfSuperData, g: &[Cyclo]) -> Option<u64> {
    let mut p = g.to_vec();
    for k in 1..=64 {
        if p == h.unit {
            return Some(k);
        }
        p = h.mul(&p, g);
    }
    None
}

/// Bounded search for a Hopf superalgebra isomorphism `src → dst` given by
/// generator images. Group-like generators go to group-likes of the same
/// order, skew-primitive generators to small combinations of skew-primitive
/// bases, and the remaining generators to the affine solution space of their
/// linear constraints. A one-parameter space is cut down to the roots of the
/// quadratic relations; larger ones are enumerated with coefficients from
/// `0`, the roots of unity and their halves.
pub fn search_isomorphism(src: &Compiled, dst: &HopfSuperData, fuel: u64) -> Result<SearchOutcome> {
    let p = &src.presentation;
    let h = &src.hopf;
    let ngen = p.generators.len();
    if h.dim != dst.dim || h.odd_dim() != dst.odd_dim() {
        return Ok(SearchOutcome { witness: None, nodes: 0, fuel_exhausted: false });
    }
    let gen_vecs: Vec<Vector> = (0..ngen).map(|i| src.word_vector(&[i])).collect::<Result<_>>()?;
    let src_g = grouplikes(h, GrouplikeMode::EvenHomogeneous)?;
    let dst_g = grouplikes(dst, GrouplikeMode::EvenHomogeneous)?;
    let coeffs: Vec<Cyclo> = coefficient_set(dst.conductor).into_iter().filter(|c| !c.is_zero()).collect();

    let kinds: Vec<GenKind> = gen_vecs
        .iter()
        .map(|x| {
            let dx = h.comul(x);
            if dx == Tensor::simple(x, x) {
                GenKind::Grouplike
            } else if src_g.elements.iter().any(|a| dx == Tensor::simple(a, x).add(&Tensor::simple(x, &h.unit))) {
                GenKind::Skew
            } else {
                GenKind::Other
            }
        })
        .collect();
    let rank = |k: &GenKind| match k {
        GenKind::Grouplike => 0,
        GenKind::Skew => 1,
        GenKind::Other => 2,
    };
    let mut order: Vec<usize> = (0..ngen).collect();
    order.sort_by_key(|&i| (rank(&kinds[i]), i));

    let mut pools = Vec::with_capacity(ngen);
    for &i in &order {
        let x = &gen_vecs[i];
        let par = p.generators[i].parity;
        let eps = h.eps(x);
        let mut pool: Vec<Vector> = match kinds[i] {
            GenKind::Grouplike => {
                let ord = order_of(h, x);
                dst_g.elements.iter().filter(|g| order_of(dst, g) == ord).cloned().collect()
            }
            GenKind::Skew => {
                let mut out = Vec::new();
                for g in &dst_g.elements {
                    let sp = skew_primitives(dst, g)?;
                    let basis: Vec<Vector> = sp.all().into_iter().filter(|b| dst.parity_of(b) == Some(par)).collect();
                    match basis.len() {
                        0 => {}
                        1 => out.extend(coeffs.iter().map(|c| crate::linalg::vec_scale(c, &basis[0]))),
                        m if m <= 4 => {
                            let signs = [Cyclo::zero(), Cyclo::one(), -Cyclo::one()];
                            let total = 3usize.pow(m as u32);
                            for code in 1..total {
                                let mut v = dst.zero();
                                let mut c = code;
                                for b in &basis {
                                    crate::linalg::add_scaled(&mut v, &signs[c % 3], b);
                                    c /= 3;
                                }
                                out.push(v);
                            }
                        }
                        _ => out.extend(basis),
                    }
                }
                out
            }
            GenKind::Other => {
                pools.push(None);
                continue;
            }
        };
        pool.retain(|u| dst.eps(u) == eps && !u.iter().all(|c| c.is_zero()));
        pool.dedup();
        pools.push(Some(pool));
    }

    let pos: Vec<usize> = {
        let mut pos = vec![0; ngen];
        for (l, &g) in order.iter().enumerate() {
            pos[g] = l;
        }
        pos
    };
    let level_of_words = |ws: &mut dyn Iterator<Item = &Word>, start: usize| -> usize {
        ws.flat_map(|w| w.iter()).map(|&g| pos[g]).fold(start, usize::max)
    };
    let support_words = |v: &[Cyclo]| -> Vec<Word> {
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, _)| src.basis_words[k].clone()).collect()
    };
    let mut checks = Vec::new();
    for (r, rule) in p.rules.iter().enumerate() {
        let mut ws = std::iter::once(&rule.lhs).chain(rule.rhs.keys());
        checks.push(Check { level: level_of_words(&mut ws, 0), kind: CheckKind::Rule(r) });
    }
    for g in 0..ngen {
        let t = h.comul(&gen_vecs[g]);
        let words: Vec<Word> = t
            .terms()
            .into_iter()
            .flat_map(|(a, b, _)| [src.basis_words[a].clone(), src.basis_words[b].clone()])
            .collect();
        checks.push(Check { level: level_of_words(&mut words.iter(), pos[g]), kind: CheckKind::Delta(g) });
        let words = support_words(&h.s(&gen_vecs[g]));
        checks.push(Check { level: level_of_words(&mut words.iter(), pos[g]), kind: CheckKind::Antipode(g) });
    }

    let mut s = Search {
        src,
        dst,
        order,
        pos,
        coeffs: coefficient_set(dst.conductor),
        pools,
        checks,
        gen_vecs,
        images: vec![None; ngen],
        nodes: 0,
        fuel,
    };
    let witness = s.run(0)?;
    Ok(SearchOutcome { fuel_exhausted: witness.is_none() && s.nodes >= fuel, witness, nodes: s.nodes })
}

/// Fingerprint comparison, escalating to [`search_isomorphism`] when the
/// fingerprints agree.
pub fn decide_isomorphism(src: &Compiled, dst: &HopfSuperData, fuel: u64) -> Result<IsoVerdict> {
    if let Some(f) = first_difference(&fingerprint(&src.hopf)?, &fingerprint(dst)?) {
        return Ok(IsoVerdict::ProvedDistinct(f));
    }
    Ok(match search_isomorphism(src, dst, fuel)?.witness {
        Some(m) => IsoVerdict::ProvedIsomorphic(m),
        None => IsoVerdict::Undecided,
    })
}
