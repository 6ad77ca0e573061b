use std::collections::HashMap;

use super::{parse, Poly, Presentation, Word};
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::hopf::{verify_axioms, HopfSuperData, Tensor};
use crate::linalg::{Matrix, Vector};

pub const REWRITE_FUEL: u64 = 10_000;

/// Output of [`compile`]: the certified structure constants together with
/// the presentation they came from.
#[derive(Clone, Debug)]
pub struct Compiled {
    pub hopf: HopfSuperData,
    pub presentation: Presentation,
    pub basis_words: Vec<Word>,
}

struct Rewriter<'a> {
    p: &'a Presentation,
    index: HashMap<Word, usize>,
    memo: HashMap<Word, Vector>,
    unit: Option<Vector>,
}

impl<'a> Rewriter<'a> {
    fn new(p: &'a Presentation) -> Result<Self> {
        let index = p.basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let mut r = Rewriter { p, index, memo: HashMap::new(), unit: None };
        for w in &p.basis {
            if r.redex(w).is_some() {
                return Err(Error::BasisNotClosed(format!("basis word {} is reducible", p.word_label(w))));
            }
        }
        if let Some(u) = &p.unit {
            r.unit = Some(r.normal_poly(u)?);
        }
        Ok(r)
    }

    fn dim(&self) -> usize {
        self.p.basis.len()
    }

    /// Leftmost position with a matching rule, rules tried in source order.
    fn redex(&self, w: &[usize]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            for (ri, rule) in self.p.rules.iter().enumerate() {
                if w[start..].starts_with(&rule.lhs) {
                    return Some((start, ri));
                }
            }
        }
        None
    }

    fn normal_word(&mut self, w: &[usize], fuel: &mut u64) -> Result<Vector> {
        if let Some(v) = self.memo.get(w) {
            return Ok(v.clone());
        }
        let d = self.dim();
        let out = match self.redex(w) {
            None => {
                if let Some(&i) = self.index.get(w) {
                    crate::linalg::unit_vec(d, i)
                } else if w.is_empty() && self.unit.is_some() {
                    self.unit.clone().unwrap()
                } else if let (Some(u), true) = (self.p.unit.clone(), *fuel > 0) {
                    // w = 1·w with 1 written through the declared unit
                    *fuel -= 1;
                    let mut acc = vec![Cyclo::zero(); d];
                    for (m, c) in u {
                        let mut next = m.clone();
                        next.extend_from_slice(w);
                        let v = self.normal_word(&next, fuel)?;
                        crate::linalg::add_scaled(&mut acc, &c, &v);
                    }
                    acc
                } else {
                    return Err(Error::BasisNotClosed(format!(
                        "normal form {} is not a basis word",
                        self.p.word_label(w)
                    )));
                }
            }
            Some((start, ri)) => {
                if *fuel == 0 {
                    return Err(Error::FuelExhausted(format!("rewriting {}", self.p.word_label(w))));
                }
                *fuel -= 1;
                let rule = &self.p.rules[ri];
                let mut acc = vec![Cyclo::zero(); d];
                for (m, c) in rule.rhs.clone() {
                    let mut next = w[..start].to_vec();
                    next.extend_from_slice(&m);
                    next.extend_from_slice(&w[start + rule.lhs.len()..]);
                    let v = self.normal_word(&next, fuel)?;
                    crate::linalg::add_scaled(&mut acc, &c, &v);
                }
                acc
            }
        };
        self.memo.insert(w.to_vec(), out.clone());
        Ok(out)
    }

    fn normal(&mut self, w: &[usize]) -> Result<Vector> {
        let mut fuel = REWRITE_FUEL;
        self.normal_word(w, &mut fuel)
    }

    fn normal_poly(&mut self, p: &Poly) -> Result<Vector> {
        let mut acc = vec![Cyclo::zero(); self.dim()];
        for (w, c) in p {
            let v = self.normal(w)?;
            crate::linalg::add_scaled(&mut acc, c, &v);
        }
        Ok(acc)
    }
}

/// Compiles a presentation to certified structure constants.
pub fn compile(p: &Presentation) -> Result<Compiled> {
    let mut rw = Rewriter::new(p)?;
    let d = p.basis.len();
    if d == 0 {
        return Err(Error::MissingStructure("empty basis".into()));
    }
    let parity: Vec<u8> = p.basis.iter().map(|w| p.word_parity(w)).collect();
    let labels: Vec<String> =
        p.basis.iter().map(|w| p.labels.get(w).cloned().unwrap_or_else(|| p.word_label(w))).collect();
    let unit = if let Some(&i) = rw.index.get(&Vec::new()) {
        crate::linalg::unit_vec(d, i)
    } else {
        rw.unit.clone().ok_or_else(|| Error::MissingStructure("unit".into()))?
    };
    let mut mult = Vec::with_capacity(d * d);
    for a in &p.basis {
        for b in &p.basis {
            let mut w = a.clone();
            w.extend_from_slice(b);
            mult.push(rw.normal(&w)?);
        }
    }
    let mul = |x: &[Cyclo], y: &[Cyclo]| -> Vector {
        let mut out = vec![Cyclo::zero(); d];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    crate::linalg::add_scaled(&mut out, &(a * b), &mult[i * d + j]);
                }
            }
        }
        out
    };
    let tmul = |x: &Tensor, y: &Tensor| -> Tensor {
        let mut out = Tensor::zeros(d, d);
        for (a, b, c1) in x.terms() {
            for (c, e, c2) in y.terms() {
                let mut coef = &c1 * &c2;
                if parity[b] == 1 && parity[c] == 1 {
                    coef = -coef;
                }
                let l = &mult[a * d + c];
                let r = &mult[b * d + e];
                for (p_, u) in l.iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    let cu = &coef * u;
                    for (q, v) in r.iter().enumerate() {
                        if !v.is_zero() {
                            out.add_at(p_, q, &(&cu * v));
                        }
                    }
                }
            }
        }
        out
    };

    let ngen = p.generators.len();
    let mut gen_delta = Vec::with_capacity(ngen);
    let mut gen_eps = Vec::with_capacity(ngen);
    let mut gen_s = Vec::with_capacity(ngen);
    for g in 0..ngen {
        let name = &p.generators[g].name;
        let t = p.delta.get(&g).ok_or_else(|| Error::MissingStructure(format!("delta {}", name)))?;
        let mut dt = Tensor::zeros(d, d);
        for ((u, v), c) in t {
            let a = rw.normal(u)?;
            let b = rw.normal(v)?;
            dt = dt.add(&Tensor::simple(&a, &b).scale(c));
        }
        gen_delta.push(dt);
        gen_eps.push(p.counit.get(&g).cloned().ok_or_else(|| Error::MissingStructure(format!("counit {}", name)))?);
        let s = p.antipode.get(&g).ok_or_else(|| Error::MissingStructure(format!("antipode {}", name)))?;
        gen_s.push(rw.normal_poly(s)?);
    }

    let one_t = Tensor::simple(&unit, &unit);
    let mut comult = Vec::with_capacity(d);
    let mut counit = Vec::with_capacity(d);
    let mut s_cols = Vec::with_capacity(d);
    for w in &p.basis {
        let mut t = one_t.clone();
        let mut e = Cyclo::one();
        for &g in w {
            t = tmul(&t, &gen_delta[g]);
            e = &e * &gen_eps[g];
        }
        comult.push(t);
        counit.push(e);
        // S(g w') = (−1)^{|g||w'|} S(w') S(g), built from the right end.
        let mut s = unit.clone();
        let mut tail_parity = 0u8;
        for &g in w.iter().rev() {
            s = mul(&s, &gen_s[g]);
            let gp = p.generators[g].parity;
            if gp == 1 && tail_parity == 1 {
                s = s.iter().map(|x| -x).collect();
            }
            tail_parity ^= gp;
        }
        s_cols.push(s);
    }
    let antipode = Matrix::from_cols(&s_cols, d);
    let hopf = HopfSuperData::from_parts(
        p.name.clone(),
        p.conductor,
        parity,
        labels,
        unit,
        counit,
        mult,
        comult,
        antipode,
    )?;
    let r = verify_axioms(&hopf);
    if !r.passed() {
        return Err(Error::AxiomFailure { name: hopf.name.clone(), failed: r.summary() });
    }
    Ok(Compiled { hopf, presentation: p.clone(), basis_words: p.basis.clone() })
}

impl Compiled {
    pub fn from_source(src: &str) -> Result<Self> {
        compile(&parse(src)?)
    }

    /// Compiles over `Q(ζ_n)` in place of the field named in the source.
    /// `n` must be a multiple of that field's conductor.
    pub fn from_source_over(src: &str, n: u32) -> Result<Self> {
        let mut p = parse(src)?;
        if n == 0 || !n.is_multiple_of(p.conductor.max(1)) {
            return Err(Error::IncompatibleConductor { from: p.conductor, to: n });
        }
        p.conductor = n;
        compile(&p)
    }

    /// Coordinates of an element written in the presentation's notation.
    pub fn element(&self, expr: &str) -> Result<Vector> {
        let p = super::parser::parse_element(&self.presentation, expr)?;
        let mut rw = Rewriter::new(&self.presentation)?;
        rw.normal_poly(&p)
    }

    /// Coordinates of a word in the generators.
    pub fn word_vector(&self, w: &[usize]) -> Result<Vector> {
        let mut rw = Rewriter::new(&self.presentation)?;
        rw.normal(w)
    }

    /// Linear map determined by generator images in `target`; fails when the
    /// images violate a relation.
    pub fn extend_generator_images(&self, target: &HopfSuperData, images: &[Vector]) -> Result<Matrix> {
        let p = &self.presentation;
        if images.len() != p.generators.len() {
            return Err(Error::ExtensionFailure(format!(
                "{} images for {} generators",
                images.len(),
                p.generators.len()
            )));
        }
        let image_of = |w: &[usize]| -> Vector {
            let mut acc = target.one();
            for &g in w {
                acc = target.mul(&acc, &images[g]);
            }
            acc
        };
        let image_poly = |q: &Poly| -> Vector {
            let mut acc = target.zero();
            for (w, c) in q {
                crate::linalg::add_scaled(&mut acc, c, &image_of(w));
            }
            acc
        };
        for rule in &p.rules {
            if image_of(&rule.lhs) != image_poly(&rule.rhs) {
                return Err(Error::ExtensionFailure(format!("relation at {}", p.word_label(&rule.lhs))));
            }
        }
        let cols: Vec<Vector> = self.basis_words.iter().map(|w| image_of(w)).collect();
        let m = Matrix::from_cols(&cols, target.dim);
        if m.mul_vec(&self.hopf.unit) != target.unit {
            return Err(Error::ExtensionFailure("unit".into()));
        }
        Ok(m)
    }
}
