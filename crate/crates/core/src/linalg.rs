//! Dense matrices and exact sparse elimination.
//!
//! Large kernels go through [`kernel_sparse`]: rows are first screened over
//! 𝔽_p to pick an independent subset (or to certify full column rank), then the
//! subset is eliminated exactly and the resulting basis is checked against every
//! original row. A failed check falls back to exact elimination of all rows.

use std::ops::{Index, IndexMut};

use crate::error::{EtapError, Result};
use crate::scalar::{Field, Fp, Rational, Scalar};

/// Sparse row: strictly increasing column indices with nonzero values.
pub type SparseRow<F> = Vec<(usize, F)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(EtapError::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(dim: usize, cols: &[Vec<F>]) -> Self {
        Self::from_fn(dim, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn diagonal(entries: &[F]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self[(i, i)].clone();
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut s = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += a.clone() * b.clone();
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F) -> Self {
        let data = self.data.iter().map(|a| a.clone() * c.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| -a.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Kronecker product; index of `(i, k)` is `i * other.rows + k`.
    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self[(i / other.rows, j / other.cols)].clone() * other[(i % other.rows, j % other.cols)].clone()
        })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    pub fn to_sparse_rows(&self) -> Vec<SparseRow<F>> {
        (0..self.rows).map(|i| sparse_from_dense(self.row(i))).collect()
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<F: Field> Matrix<F> {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let v = rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect();
        Self::from_rows(v).expect("rectangular literal")
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for r in self.to_sparse_rows() {
            e.insert(&r);
        }
        e.rank()
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[(r, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = a[(c, c)].clone();
            det *= piv.clone();
            let inv = piv.inv();
            for r in c + 1..n {
                if a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone() * inv.clone();
                for j in c..n {
                    let t = a[(c, j)].clone();
                    if !t.is_zero() {
                        a[(r, j)] -= f.clone() * t;
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut b = Self::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a[(r, c)].is_zero())?;
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                    b.data.swap(p * n + j, c * n + j);
                }
            }
            let inv = a[(c, c)].inv();
            for j in 0..n {
                a[(c, j)] *= inv.clone();
                b[(c, j)] *= inv.clone();
            }
            for r in 0..n {
                if r == c || a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone();
                for j in 0..n {
                    let (x, y) = (a[(c, j)].clone(), b[(c, j)].clone());
                    if !x.is_zero() {
                        a[(r, j)] -= f.clone() * x;
                    }
                    if !y.is_zero() {
                        b[(r, j)] -= f.clone() * y;
                    }
                }
            }
        }
        Some(b)
    }
}

pub fn sparse_from_dense<F: Scalar>(v: &[F]) -> SparseRow<F> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect()
}

pub fn dot<F: Scalar>(a: &[F], b: &[F]) -> F {
    let mut s = F::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x.clone() * y.clone();
        }
    }
    s
}

fn sparse_dot<F: Scalar>(row: &SparseRow<F>, v: &[F]) -> F {
    let mut s = F::zero();
    for (j, x) in row {
        if !v[*j].is_zero() {
            s += x.clone() * v[*j].clone();
        }
    }
    s
}

/// Incremental row echelon form. Each stored row has leading entry 1 at its
/// pivot column and no entries to the left of it.
pub struct Echelon<F> {
    ncols: usize,
    pivot_of_col: Vec<Option<usize>>,
    rows: Vec<(usize, SparseRow<F>)>,
    acc: Vec<F>,
}

impl<F: Scalar> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivot_of_col: vec![None; ncols], rows: Vec::new(), acc: vec![F::zero(); ncols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_of_col[c].is_some()).collect()
    }

    /// Reduces `row` against the stored rows. Returns the new pivot column if
    /// the row was independent of the rows inserted so far.
    pub fn insert(&mut self, row: &SparseRow<F>) -> Option<usize> {
        let start = row.first()?.0;
        for (j, v) in row {
            self.acc[*j] += v.clone();
        }
        let mut c = start;
        while c < self.ncols {
            if self.acc[c].is_zero() {
                c += 1;
                continue;
            }
            match self.pivot_of_col[c] {
                Some(r) => {
                    let f = std::mem::replace(&mut self.acc[c], F::zero());
                    for (j, v) in self.rows[r].1.iter().skip(1) {
                        self.acc[*j] -= f.clone() * v.clone();
                    }
                    c += 1;
                }
                None => {
                    let inv = self.acc[c].inv();
                    let mut out = Vec::new();
                    for j in c..self.ncols {
                        if !self.acc[j].is_zero() {
                            let v = std::mem::replace(&mut self.acc[j], F::zero());
                            out.push((j, if j == c { F::one() } else { v * inv.clone() }));
                        }
                    }
                    self.pivot_of_col[c] = Some(self.rows.len());
                    self.rows.push((c, out));
                    return Some(c);
                }
            }
        }
        None
    }

    /// Basis of the null space: one vector per free column, equal to 1 there
    /// and 0 at the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let mut order: Vec<usize> = self.pivot_columns();
        order.reverse();
        (0..self.ncols)
            .filter(|&c| self.pivot_of_col[c].is_none())
            .map(|free| {
                let mut x = vec![F::zero(); self.ncols];
                x[free] = F::one();
                for &pc in &order {
                    if pc > free {
                        continue;
                    }
                    let row = &self.rows[self.pivot_of_col[pc].unwrap()].1;
                    let mut s = F::zero();
                    for (j, v) in row.iter().skip(1) {
                        if !x[*j].is_zero() {
                            s += v.clone() * x[*j].clone();
                        }
                    }
                    x[pc] = -s;
                }
                x
            })
            .collect()
    }

    /// Free columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_of_col[c].is_none()).collect()
    }
}

/// Null space of `m`, as vectors. Deterministic: the basis is the one read off
/// the reduced row echelon form, which depends only on `m`.
pub fn kernel<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    kernel_sparse(m.cols(), &m.to_sparse_rows())
}

/// Null space of the system given by sparse rows over `ncols` unknowns.
pub fn kernel_sparse<F: Field>(ncols: usize, rows: &[SparseRow<F>]) -> Vec<Vec<F>> {
    let selected = match screen_mod_p(ncols, rows) {
        Screen::FullRank => return Vec::new(),
        Screen::Independent(sel) => sel,
        Screen::Unavailable => (0..rows.len()).collect(),
    };
    let mut e = Echelon::new(ncols);
    let mut used = vec![false; rows.len()];
    for &i in &selected {
        e.insert(&rows[i]);
        used[i] = true;
    }
    let basis = e.kernel_basis();
    let ok = rows
        .iter()
        .zip(&used)
        .filter(|(_, &u)| !u)
        .all(|(r, _)| basis.iter().all(|v| sparse_dot(r, v).is_zero()));
    if ok {
        return basis;
    }
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.kernel_basis()
}

enum Screen {
    FullRank,
    Independent(Vec<usize>),
    Unavailable,
}

fn screen_mod_p<F: Field>(ncols: usize, rows: &[SparseRow<F>]) -> Screen {
    let mut e: Echelon<Fp> = Echelon::new(ncols);
    let mut sel = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut fr = Vec::with_capacity(r.len());
        for (j, v) in r {
            match v.to_fp() {
                Some(x) if !x.is_zero() => fr.push((*j, x)),
                Some(_) => {}
                None => return Screen::Unavailable,
            }
        }
        if e.insert(&fr).is_some() {
            sel.push(i);
            if e.rank() == ncols {
                return Screen::FullRank;
            }
        }
    }
    Screen::Independent(sel)
}

/// Some solution of `m x = rhs`, or `None` when the system is inconsistent.
pub fn solve<F: Field>(m: &Matrix<F>, rhs: &[F]) -> Result<Option<Vec<F>>> {
    if rhs.len() != m.rows() {
        return Err(EtapError::Dimension(format!("rhs has length {}, expected {}", rhs.len(), m.rows())));
    }
    let n = m.cols();
    let mut e = Echelon::new(n + 1);
    for i in 0..m.rows() {
        let mut r = sparse_from_dense(m.row(i));
        if !rhs[i].is_zero() {
            r.push((n, rhs[i].clone()));
        }
        e.insert(&r);
    }
    if e.pivot_of_col[n].is_some() {
        return Ok(None);
    }
    let mut x = vec![F::zero(); n];
    for pc in e.pivot_columns().into_iter().rev() {
        let row = &e.rows[e.pivot_of_col[pc].unwrap()].1;
        let mut s = F::zero();
        for (j, v) in row.iter().skip(1) {
            if *j == n {
                s += v.clone();
            } else if !x[*j].is_zero() {
                s -= v.clone() * x[*j].clone();
            }
        }
        x[pc] = s;
    }
    Ok(Some(x))
}

/// Inertia `(n₊, n₋, n₀)` of a rational symmetric matrix, by congruence
/// diagonalization.
pub fn symmetric_signature(m: &Matrix<Rational>) -> Result<(usize, usize, usize)> {
    if !m.is_symmetric() {
        return Err(EtapError::NotSymmetric);
    }
    let n = m.rows();
    let mut a = m.clone();
    let (mut pos, mut neg) = (0, 0);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                swap_sym(&mut a, k, j);
            } else if let Some((i, j)) =
                (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[(i, j)].is_zero())
            {
                // e_i ← e_i + e_j makes the diagonal entry 2·a_ij ≠ 0.
                for r in 0..n {
                    let t = a[(r, j)].clone();
                    a[(r, i)] += t;
                }
                for c in 0..n {
                    let t = a[(j, c)].clone();
                    a[(i, c)] += t;
                }
                swap_sym(&mut a, k, i);
            } else {
                break;
            }
        }
        let d = a[(k, k)].clone();
        if d.signum() > 0 {
            pos += 1;
        } else {
            neg += 1;
        }
        let inv = d.inv();
        for r in k + 1..n {
            if a[(r, k)].is_zero() {
                continue;
            }
            let f = a[(r, k)].clone() * inv.clone();
            for c in k..n {
                let t = a[(k, c)].clone();
                if !t.is_zero() {
                    a[(r, c)] -= f.clone() * t;
                }
            }
        }
    }
    Ok((pos, neg, n - pos - neg))
}

fn swap_sym<F: Scalar>(a: &mut Matrix<F>, i: usize, j: usize) {
    if i == j {
        return;
    }
    let n = a.rows;
    for c in 0..n {
        a.data.swap(i * n + c, j * n + c);
    }
    for r in 0..n {
        a.data.swap(r * n + i, r * n + j);
    }
}

/// Dimension of the span of the given vectors.
pub fn span_rank<F: Field>(vectors: &[Vec<F>]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let mut e = Echelon::new(first.len());
    for v in vectors {
        e.insert(&sparse_from_dense(v));
    }
    e.rank()
}

/// Coordinates with respect to a fixed linearly independent family.
pub struct BasisSolver<F> {
    dim: usize,
    basis: Vec<Vec<F>>,
    rows: Vec<usize>,
    inv: Matrix<F>,
}

impl<F: Field> BasisSolver<F> {
    pub fn new(dim: usize, basis: Vec<Vec<F>>) -> Result<Self> {
        let k = basis.len();
        let mut e = Echelon::new(k);
        let mut rows = Vec::new();
        for i in 0..dim {
            let r: SparseRow<F> =
                (0..k).filter(|&j| !basis[j][i].is_zero()).map(|j| (j, basis[j][i].clone())).collect();
            if e.insert(&r).is_some() {
                rows.push(i);
                if rows.len() == k {
                    break;
                }
            }
        }
        if rows.len() != k {
            return Err(EtapError::Consistency("basis vectors are linearly dependent".into()));
        }
        let sub = Matrix::from_fn(k, k, |a, b| basis[b][rows[a]].clone());
        let inv = sub.inverse().expect("selected rows are independent");
        Ok(BasisSolver { dim, basis, rows, inv })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        let c = self.coords_unchecked(v);
        let back = self.combine(&c);
        (back.as_slice() == v).then_some(c)
    }

    /// Coordinates of `v` assuming it lies in the span.
    pub fn coords_unchecked(&self, v: &[F]) -> Vec<F> {
        let picked: Vec<F> = self.rows.iter().map(|&i| v[i].clone()).collect();
        self.inv.mul_vec(&picked)
    }

    pub fn combine(&self, c: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (b, x) in self.basis.iter().zip(c) {
            if x.is_zero() {
                continue;
            }
            for (o, y) in out.iter_mut().zip(b) {
                if !y.is_zero() {
                    *o += x.clone() * y.clone();
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gaussian;

    type M = Matrix<Rational>;

    fn q(v: i64) -> Rational {
        Rational::integer(v)
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&M::identity(3)).is_empty());
        assert_eq!(kernel(&M::zeros(2, 3)).len(), 3);
        let k = kernel(&M::from_i64_rows(&[&[1, 1], &[2, 2]]));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0].clone() + k[0][1].clone(), q(0));
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn solve_examples() {
        let x = solve(&M::identity(2), &[q(1), q(2)]).unwrap().unwrap();
        assert_eq!(x, vec![q(1), q(2)]);
        let x = solve(&M::from_i64_rows(&[&[1, 1]]), &[q(3)]).unwrap().unwrap();
        assert_eq!(x[0].clone() + x[1].clone(), q(3));
        assert!(solve(&M::from_i64_rows(&[&[1], &[1]]), &[q(0), q(1)]).unwrap().is_none());
        assert!(solve(&M::identity(2), &[q(1)]).is_err());
    }

    #[test]
    fn signature_examples() {
        assert_eq!(symmetric_signature(&M::from_i64_rows(&[&[1, 0], &[0, -1]])).unwrap(), (1, 1, 0));
        assert_eq!(symmetric_signature(&M::zeros(2, 2)).unwrap(), (0, 0, 2));
        assert_eq!(symmetric_signature(&M::from_i64_rows(&[&[0, 1], &[1, 0]])).unwrap(), (1, 1, 0));
        assert!(symmetric_signature(&M::from_i64_rows(&[&[0, 1], &[0, 0]])).is_err());
    }

    #[test]
    fn gaussian_kernel_and_inverse() {
        let i = Gaussian::i();
        let one = Gaussian::one();
        let m = Matrix::from_rows(vec![vec![one.clone(), i.clone()], vec![i.clone(), -one.clone()]]).unwrap();
        let k = kernel(&m);
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(Scalar::is_zero));
        let a = Matrix::from_rows(vec![vec![one.clone(), i.clone()], vec![Gaussian::zero(), one.clone()]]).unwrap();
        assert_eq!(a.mul(&a.inverse().unwrap()), Matrix::identity(2));
        assert_eq!(a.determinant(), one);
    }

    #[test]
    fn basis_solver_round_trip() {
        let b = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]];
        let s = BasisSolver::new(3, b).unwrap();
        let v = vec![q(2), q(5), q(3)];
        assert_eq!(s.coords(&v).unwrap(), vec![q(2), q(3)]);
        assert!(s.coords(&[q(1), q(0), q(0)]).is_none());
    }
}
