//! Dense exact linear algebra over cyclotomic fields.

use crate::cyclo::{Cyclo, UniPoly};

pub type Vector = Vec<Cyclo>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Cyclo::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Cyclo::one();
    v
}

pub fn is_zero_vec(v: &[Cyclo]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn add_scaled(acc: &mut [Cyclo], s: &Cyclo, v: &[Cyclo]) {
    if s.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += &(s * b);
        }
    }
}

pub fn vec_add(a: &[Cyclo], b: &[Cyclo]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Cyclo], b: &[Cyclo]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(s: &Cyclo, v: &[Cyclo]) -> Vector {
    v.iter().map(|x| s * x).collect()
}

pub fn dot(a: &[Cyclo], b: &[Cyclo]) -> Cyclo {
    let mut acc = Cyclo::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Cyclo>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Cyclo::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Cyclo::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vector]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vector], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &Cyclo {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Cyclo) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vector {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn cols_vec(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows);
        let mut m = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = m.get(i, j) + &(a * b);
                        m.set(i, j, v);
                    }
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Cyclo]) -> Vector {
        assert_eq!(self.cols, v.len());
        let mut out = zero_vec(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| {
                let x = self.get(r, c);
                if r == c {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            }))
    }

    pub fn trace(&self) -> Cyclo {
        let mut t = Cyclo::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().unwrap();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let b = m.get(r, j);
                    if !b.is_zero() {
                        let v = m.get(i, j) - &(&f * b);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel basis: one vector per free column, with a 1 in that column.
    pub fn kernel(&self) -> Vec<Vector> {
        let (m, pivots) = self.rref();
        let mut out = Vec::new();
        let mut pi = 0;
        for f in 0..self.cols {
            if pi < pivots.len() && pivots[pi] == f {
                pi += 1;
                continue;
            }
            let mut v = zero_vec(self.cols);
            v[f] = Cyclo::one();
            for (r, &p) in pivots.iter().enumerate() {
                let x = m.get(r, f);
                if !x.is_zero() {
                    v[p] = -x;
                }
            }
            out.push(v);
        }
        out
    }

    pub fn det(&self) -> Cyclo {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Cyclo::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Cyclo::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            let inv = piv.inv().unwrap();
            for i in c + 1..n {
                let f = m.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let b = m.get(c, j);
                    if !b.is_zero() {
                        let v = m.get(i, j) - &(&f * b);
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Cyclo::one());
        }
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Some solution of `self · x = b`.
    pub fn solve(&self, b: &[Cyclo]) -> Option<Vector> {
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.cols);
        for (i, &p) in piv.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// Characteristic polynomial `det(xI - A)` by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> UniPoly {
        let n = self.rows;
        let mut c = vec![Cyclo::zero(); n + 1];
        c[n] = Cyclo::one();
        let mut mk = Matrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&mk);
            for i in 0..n {
                let v = next.get(i, i) + &c[n - k + 1];
                next.set(i, i, v);
            }
            mk = next;
            let tr = self.mul(&mk).trace();
            c[n - k] = -(&tr * &Cyclo::from_ratio(1, k as i64));
        }
        UniPoly::new(c)
    }
}

/// A subspace kept as a reduced echelon basis, for incremental span tests.
#[derive(Clone, Debug)]
pub struct Subspace {
    dim: usize,
    /// Basis rows, each with a leading 1 at `pivots[i]` and zeros at the other pivots.
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(dim: usize) -> Self {
        Subspace { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by(dim: usize, vs: &[Vector]) -> Self {
        let mut s = Self::new(dim);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after eliminating against the basis.
    pub fn reduce(&self, v: &[Cyclo]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = r[p].clone();
            if !f.is_zero() {
                for (a, b) in r.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *a -= &(&f * b);
                    }
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Cyclo]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[Cyclo]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().unwrap();
        for x in r.iter_mut() {
            *x = &*x * &inv;
        }
        for row in self.rows.iter_mut() {
            let f = row[p].clone();
            if !f.is_zero() {
                for (a, b) in row.iter_mut().zip(&r) {
                    if !b.is_zero() {
                        *a -= &(&f * b);
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    /// Coordinates of the residue class of `v` in the quotient, indexed by the
    /// non-pivot columns in increasing order.
    pub fn quotient_coords(&self, v: &[Cyclo]) -> Vector {
        let r = self.reduce(v);
        (0..self.dim).filter(|c| !self.pivots.contains(c)).map(|c| r[c].clone()).collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.dim).filter(|c| !self.pivots.contains(c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(&rows.iter().map(|r| r.iter().map(|&x| Cyclo::from_int(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(is_zero_vec(&a.mul_vec(&v)));
        }
    }

    #[test]
    fn det_inverse_charpoly() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.det(), Cyclo::one());
        assert!(a.mul(&a.inverse().unwrap()).is_identity());
        let p = a.char_poly();
        assert_eq!(p.coeffs(), &[Cyclo::one(), Cyclo::from_int(-3), Cyclo::one()]);
    }

    #[test]
    fn subspace_quotient() {
        let mut s = Subspace::new(3);
        assert!(s.insert(&[Cyclo::one(), Cyclo::one(), Cyclo::zero()]));
        assert!(!s.insert(&[Cyclo::from_int(2), Cyclo::from_int(2), Cyclo::zero()]));
        assert_eq!(s.free_columns(), vec![1, 2]);
        let q = s.quotient_coords(&[Cyclo::one(), Cyclo::zero(), Cyclo::zero()]);
        assert_eq!(q, vec![-Cyclo::one(), Cyclo::zero()]);
    }
}
