//! Characters (algebra maps to the base field) and group-likes.
//!
//! The pipeline is abelianization, then the trace-form radical quotient,
//! then splitting of the resulting commutative semisimple algebra by roots
//! of minimal polynomials.

use std::cmp::Ordering;

use serde::Serialize;

use crate::cyclo::{find_roots, Cyclo, UniPoly};
use crate::error::{Error, Result};
use crate::hopf::HopfSuperData;
use crate::linalg::{dot, is_zero_vec, unit_vec, vec_sub, Matrix, Subspace, Vector};

pub const DEFAULT_FUEL: u64 = 2_000_000;

/// A finite-dimensional unital algebra by dense structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraTable {
    pub dim: usize,
    /// `mult[i*dim + j]` is `e_i e_j`.
    pub mult: Vec<Vector>,
    pub unit: Vector,
}

impl AlgebraTable {
    pub fn of(h: &HopfSuperData) -> Self {
        AlgebraTable { dim: h.dim, mult: h.mult_dense(), unit: h.unit.clone() }
    }

    /// Algebra structure of `H*` on the dual basis.
    pub fn dual_of(h: &HopfSuperData) -> Self {
        let d = h.dim;
        let mut mult = vec![vec![Cyclo::zero(); d]; d * d];
        for k in 0..d {
            for (i, j, c) in h.comult_basis(k) {
                mult[i * d + j][k] += c;
            }
        }
        AlgebraTable { dim: d, mult, unit: h.counit.clone() }
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vec(self.dim, i)
    }

    pub fn mul(&self, a: &[Cyclo], b: &[Cyclo]) -> Vector {
        let d = self.dim;
        let mut out = vec![Cyclo::zero(); d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.mult[i * d + j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&xy * c);
                    }
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (i + 1..d).all(|j| self.mult[i * d + j] == self.mult[j * d + i]))
    }

    fn left_mult(&self, a: &[Cyclo]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_cols(&cols, self.dim)
    }

    /// Quotient by a two-sided ideal, on the non-pivot coordinates.
    pub fn quotient(&self, ideal: &Subspace) -> Quotient {
        let free = ideal.free_columns();
        let m = free.len();
        let proj_cols: Vec<Vector> = (0..self.dim).map(|i| ideal.quotient_coords(&self.basis(i))).collect();
        let projection = Matrix::from_cols(&proj_cols, m);
        let mut mult = Vec::with_capacity(m * m);
        for &a in &free {
            for &b in &free {
                mult.push(ideal.quotient_coords(&self.mult[a * self.dim + b]));
            }
        }
        let unit = ideal.quotient_coords(&self.unit);
        Quotient { algebra: AlgebraTable { dim: m, mult, unit }, projection }
    }

    /// Smallest two-sided ideal containing `gens`.
    pub fn ideal_closure(&self, gens: &[Vector]) -> Subspace {
        let mut s = Subspace::new(self.dim);
        let mut queue: Vec<Vector> = Vec::new();
        for g in gens {
            if s.insert(g) {
                queue.push(g.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for k in 0..self.dim {
                let ek = self.basis(k);
                for w in [self.mul(&ek, &v), self.mul(&v, &ek)] {
                    if s.insert(&w) {
                        queue.push(w);
                    }
                }
            }
        }
        s
    }

    /// Minimal polynomial of `b` by Krylov iteration.
    pub fn minimal_polynomial(&self, b: &[Cyclo]) -> UniPoly {
        let mut powers = vec![self.unit.clone()];
        let mut span = Subspace::new(self.dim);
        span.insert(&self.unit);
        loop {
            let next = self.mul(powers.last().unwrap(), b);
            if !span.insert(&next) {
                let m = Matrix::from_cols(&powers, self.dim);
                let c = m.solve(&next).expect("dependent power lies in the span");
                let mut coeffs: Vec<Cyclo> = c.into_iter().map(|x| -x).collect();
                coeffs.push(Cyclo::one());
                return UniPoly::new(coeffs);
            }
            powers.push(next);
        }
    }
}

/// A quotient algebra with the projection from its parent.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: AlgebraTable,
    pub projection: Matrix,
}

/// Quotient by the ideal generated by all commutators of basis elements.
pub fn abelianization(a: &AlgebraTable) -> Quotient {
    let mut comms = Vec::new();
    for i in 0..a.dim {
        for j in i + 1..a.dim {
            let c = vec_sub(&a.mult[i * a.dim + j], &a.mult[j * a.dim + i]);
            if !is_zero_vec(&c) {
                comms.push(c);
            }
        }
    }
    let ideal = a.ideal_closure(&comms);
    a.quotient(&ideal)
}

/// Gram matrix of the regular trace form `(a, b) ↦ tr(L_{ab})`.
pub fn trace_form(a: &AlgebraTable) -> Matrix {
    let d = a.dim;
    let traces: Vec<Cyclo> = (0..d).map(|k| a.left_mult(&a.basis(k)).trace()).collect();
    let mut gram = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            gram.set(i, j, dot(&a.mult[i * d + j], &traces));
        }
    }
    gram
}

/// Kernel of the regular trace form.
pub fn jacobson_radical(a: &AlgebraTable) -> Vec<Vector> {
    trace_form(a).kernel()
}

/// An algebra map to the base field, stored by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Character {
    pub values: Vector,
}

impl Character {
    pub fn new(values: Vector) -> Self {
        Character { values }
    }

    pub fn eval(&self, a: &[Cyclo]) -> Cyclo {
        dot(&self.values, a)
    }

    pub fn is_multiplicative(&self, a: &AlgebraTable) -> bool {
        let d = a.dim;
        self.eval(&a.unit).is_one()
            && (0..d).all(|i| {
                (0..d).all(|j| self.eval(&a.mult[i * d + j]) == &self.values[i] * &self.values[j])
            })
    }

    /// Vanishes on the odd part.
    pub fn is_even(&self, h: &HopfSuperData) -> bool {
        (0..h.dim).all(|i| h.parity[i] == 0 || self.values[i].is_zero())
    }
}

#[derive(Clone, Debug)]
pub struct CharacterSet {
    pub chars: Vec<Character>,
    pub complete: bool,
    /// Characters defined only over an extension of the working field.
    pub missing: usize,
}

/// All algebra maps into `Q(ζ_n)`.
pub fn characters(a: &AlgebraTable, conductor: u32) -> Result<CharacterSet> {
    characters_with_fuel(a, conductor, DEFAULT_FUEL)
}

pub fn characters_with_fuel(a: &AlgebraTable, conductor: u32, fuel: u64) -> Result<CharacterSet> {
    let ab = abelianization(a);
    let rad = jacobson_radical(&ab.algebra);
    let ss = ab.algebra.quotient(&Subspace::spanned_by(ab.algebra.dim, &rad));
    let proj = ss.projection.mul(&ab.projection);
    let total = ss.algebra.dim;
    let mut fuel = fuel;
    let mut found = Vec::new();
    split(&ss.algebra, &proj, conductor, &mut fuel, &mut found)?;
    let missing = total - found.len();
    let mut chars: Vec<Character> = found.into_iter().map(Character::new).collect();
    chars.sort_by(|x, y| vec_cmp(&x.values, &y.values));
    Ok(CharacterSet { chars, complete: missing == 0, missing })
}

fn split(b: &AlgebraTable, proj: &Matrix, n: u32, fuel: &mut u64, out: &mut Vec<Vector>) -> Result<()> {
    if b.dim == 0 {
        return Ok(());
    }
    if b.dim == 1 {
        let v = b.unit[0].inv()?;
        out.push(proj.row(0).iter().map(|x| x * &v).collect());
        return Ok(());
    }
    for i in 0..b.dim {
        let e = b.basis(i);
        let mp = b.minimal_polynomial(&e);
        if mp.degree() <= Some(1) {
            continue;
        }
        let mut roots = find_roots(&mp, n, *fuel)?.roots;
        roots.dedup();
        for r in roots {
            let shifted = vec_sub(&e, &b.unit.iter().map(|u| u * &r).collect::<Vector>());
            let image: Vec<Vector> = (0..b.dim).map(|j| b.mul(&shifted, &b.basis(j))).collect();
            let q = b.quotient(&Subspace::spanned_by(b.dim, &image));
            let p = q.projection.mul(proj);
            split(&q.algebra, &p, n, fuel, out)?;
        }
        return Ok(());
    }
    Err(Error::Invalid("semisimple commutative algebra with only scalar basis elements".into()))
}

pub(crate) fn vec_cmp(a: &[Cyclo], b: &[Cyclo]) -> Ordering {
    let first = |v: &[Cyclo]| v.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX);
    first(a).cmp(&first(b)).then_with(|| {
        for (x, y) in a.iter().zip(b) {
            let o = x.canonical_cmp(y);
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    })
}

/// Characters of a Hopf superalgebra vanishing on its odd part, counit first.
pub fn hopf_characters(h: &HopfSuperData) -> Result<CharacterSet> {
    let mut set = characters(&AlgebraTable::of(h), h.conductor)?;
    set.chars.retain(|c| c.is_even(h));
    if let Some(p) = set.chars.iter().position(|c| c.values == h.counit) {
        let e = set.chars.remove(p);
        set.chars.insert(0, e);
    }
    Ok(set)
}

/// Same as [`hopf_characters`] but failing on an incomplete enumeration.
pub fn complete_characters(h: &HopfSuperData) -> Result<Vec<Character>> {
    let set = hopf_characters(h)?;
    if !set.complete {
        return Err(Error::IncompleteCharacters { missing: set.missing, conductor: h.conductor });
    }
    Ok(set.chars)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrouplikeMode {
    EvenHomogeneous,
    Unrestricted,
}

/// A finite group by multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteGroup {
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub orders: Vec<u64>,
}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<usize>>, identity: usize) -> Self {
        let n = table.len();
        let orders = (0..n)
            .map(|g| {
                let mut x = g;
                let mut k = 1u64;
                while x != identity {
                    x = table[x][g];
                    k += 1;
                }
                k
            })
            .collect();
        FiniteGroup { table, identity, orders }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Invariant factors `d_1 | d_2 | …` of an abelian group, `None` otherwise.
    pub fn invariant_factors(&self) -> Option<Vec<u64>> {
        if !self.is_abelian() {
            return None;
        }
        let n = self.order() as u64;
        let mut primes = Vec::new();
        let mut m = n;
        let mut p = 2;
        while m > 1 {
            if m.is_multiple_of(p) {
                primes.push(p);
                while m.is_multiple_of(p) {
                    m /= p;
                }
            }
            p += 1;
        }
        // Per prime, the elementary divisors from counts of p^k-torsion.
        let mut parts: Vec<Vec<u32>> = Vec::new();
        for &p in &primes {
            let mut val = 0;
            let mut m = n;
            while m.is_multiple_of(p) {
                m /= p;
                val += 1;
            }
            let log_torsion = |k: u32| {
                let pk = p.pow(k);
                let mut c = self.orders.iter().filter(|&&o| pk % o == 0).count() as u64;
                let mut l = 0i64;
                while c > 1 {
                    c /= p;
                    l += 1;
                }
                l
            };
            // at_least[k-1] = number of cyclic factors of order ≥ p^k
            let at_least: Vec<i64> = (1..=val).map(|k| log_torsion(k) - log_torsion(k - 1)).collect();
            let mut exps = Vec::new();
            for k in 0..at_least.len() {
                let here = at_least[k] - at_least.get(k + 1).copied().unwrap_or(0);
                for _ in 0..here {
                    exps.push(k as u32 + 1);
                }
            }
            exps.sort_unstable_by(|a, b| b.cmp(a));
            parts.push(exps);
        }
        let len = parts.iter().map(|e| e.len()).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for (pi, &p) in primes.iter().enumerate() {
            for (i, &e) in parts[pi].iter().enumerate() {
                factors[i] *= p.pow(e);
            }
        }
        factors.reverse();
        Some(factors)
    }
}

#[derive(Clone, Debug)]
pub struct GrouplikeSet {
    pub elements: Vec<Vector>,
    /// `None` when the elements are not closed under multiplication, which
    /// only happens for non-homogeneous solutions.
    pub group: Option<FiniteGroup>,
}

impl GrouplikeSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, g: &[Cyclo]) -> Option<usize> {
        self.elements.iter().position(|x| x == g)
    }

    pub fn order_of(&self, g: &[Cyclo]) -> Option<u64> {
        let i = self.index_of(g)?;
        self.group.as_ref().map(|gr| gr.orders[i])
    }
}

/// Group-likes of `H`, found as characters of the dual algebra.
pub fn grouplikes(h: &HopfSuperData, mode: GrouplikeMode) -> Result<GrouplikeSet> {
    let set = characters(&AlgebraTable::dual_of(h), h.conductor)?;
    if !set.complete {
        return Err(Error::IncompleteCharacters { missing: set.missing, conductor: h.conductor });
    }
    let mut elements: Vec<Vector> = set.chars.into_iter().map(|c| c.values).collect();
    if mode == GrouplikeMode::EvenHomogeneous {
        elements.retain(|g| h.parity_of(g) == Some(0));
    }
    if let Some(p) = elements.iter().position(|g| *g == h.unit) {
        let one = elements.remove(p);
        elements.insert(0, one);
    }
    let n = elements.len();
    let mut table = vec![vec![0; n]; n];
    let mut closed = true;
    'rows: for i in 0..n {
        for j in 0..n {
            let p = h.mul(&elements[i], &elements[j]);
            match elements.iter().position(|x| *x == p) {
                Some(k) => table[i][j] = k,
                None => {
                    closed = false;
                    break 'rows;
                }
            }
        }
    }
    let group = closed.then(|| FiniteGroup::from_table(table, 0));
    Ok(GrouplikeSet { elements, group })
}

/// `(α*β)(a) = α(a₁)β(a₂)`.
pub fn convolve(h: &HopfSuperData, a: &Character, b: &Character) -> Character {
    let mut v = h.zero();
    for (i, vi) in v.iter_mut().enumerate() {
        for (j, k, c) in h.comult_basis(i) {
            *vi += &(c * &a.values[*j] * &b.values[*k]);
        }
    }
    Character::new(v)
}

/// Group structure of a set of characters under convolution.
pub fn convolution_group(h: &HopfSuperData, chars: &[Character]) -> Result<FiniteGroup> {
    let n = chars.len();
    let identity = chars.iter().position(|c| c.values == h.counit).ok_or(Error::NotClosed)?;
    let mut table = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let p = convolve(h, &chars[i], &chars[j]);
            table[i][j] = chars.iter().position(|c| *c == p).ok_or(Error::NotClosed)?;
        }
    }
    Ok(FiniteGroup::from_table(table, identity))
}
