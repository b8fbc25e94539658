//! Exact rational linear algebra: scalars, sparse vectors and dense matrices.
//!
//! Everything here works over `BigRational`; there is no floating point
//! anywhere in the crate.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `p` or `p/q`, the form used in every emitted document.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Returns the value as an `i64` if it is an integer that fits.
pub fn to_i64(x: &Q) -> Option<i64> {
    use num_traits::ToPrimitive;
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Sparse vector with exact coefficients, keyed by basis index.
///
/// Zero coefficients are never stored, so equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec(BTreeMap<usize, Q>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(BTreeMap::new())
    }

    pub fn unit(i: usize) -> Self {
        let mut v = SparseVec::new();
        v.0.insert(i, Q::one());
        v
    }

    pub fn single(i: usize, c: Q) -> Self {
        let mut v = SparseVec::new();
        v.add_term(i, c);
        v
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Q)>>(pairs: I) -> Self {
        let mut v = SparseVec::new();
        for (i, c) in pairs {
            v.add_term(i, c);
        }
        v
    }

    pub fn from_dense(d: &[Q]) -> Self {
        SparseVec::from_pairs(d.iter().cloned().enumerate())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize) -> Q {
        self.0.get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff(&self, i: usize) -> Option<&Q> {
        self.0.get(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.0.iter().map(|(i, c)| (*i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    pub fn add_term(&mut self, i: usize, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&i) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.0.remove(&i);
                }
            }
            None => {
                self.0.insert(i, c);
            }
        }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &Q, other: &SparseVec) {
        if s.is_zero() {
            return;
        }
        for (i, c) in other.iter() {
            self.add_term(i, s * c);
        }
    }

    pub fn add(&mut self, other: &SparseVec) {
        for (i, c) in other.iter() {
            self.add_term(i, c.clone());
        }
    }

    pub fn sub(&mut self, other: &SparseVec) {
        for (i, c) in other.iter() {
            self.add_term(i, -c);
        }
    }

    pub fn scaled(&self, s: &Q) -> SparseVec {
        if s.is_zero() {
            return SparseVec::new();
        }
        SparseVec(self.0.iter().map(|(i, c)| (*i, c * s)).collect())
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec(self.0.iter().map(|(i, c)| (*i, -c)).collect())
    }

    pub fn minus(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.sub(other);
        out
    }

    pub fn plus(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add(other);
        out
    }

    /// Keeps only the coordinates for which `keep` is true.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> SparseVec {
        SparseVec(
            self.0
                .iter()
                .filter(|(i, _)| keep(**i))
                .map(|(i, c)| (*i, c.clone()))
                .collect(),
        )
    }

    pub fn dot_dense(&self, d: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (i, c) in self.iter() {
            if !d[i].is_zero() {
                acc += c * &d[i];
            }
        }
        acc
    }

    pub fn to_dense(&self, n: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); n];
        for (i, c) in self.iter() {
            out[i] = c.clone();
        }
        out
    }

    /// Deterministic textual form, e.g. `{0: 1, 3: -1/2}`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .iter()
            .map(|(i, c)| format!("{}: {}", i, fmt_q(c)))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    /// Builds the matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(n_rows: usize, cols: &[SparseVec]) -> Self {
        let mut m = Matrix::zeros(n_rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col.iter() {
                m[(i, j)] = c.clone();
            }
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

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> SparseVec {
        SparseVec::from_pairs((0..self.rows).map(|i| (i, self[(i, j)].clone())))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (k, c) in v.iter() {
            for i in 0..self.rows {
                let a = &self[(i, k)];
                if !a.is_zero() {
                    out.add_term(i, a * c);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// First nonzero entry, used as a failure witness.
    pub fn first_nonzero(&self) -> Option<(usize, usize, Q)> {
        self.data
            .iter()
            .position(|x| !x.is_zero())
            .map(|p| (p / self.cols, p % self.cols, self.data[p].clone()))
    }

    /// `x^T M y` for sparse vectors.
    pub fn bilinear(&self, x: &SparseVec, y: &SparseVec) -> Q {
        let mut acc = Q::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let m = &self[(i, j)];
                if !m.is_zero() {
                    acc += a * m * b;
                }
            }
        }
        acc
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            let Some(piv) = (rank..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(rank, piv);
            let inv = a[(rank, col)].recip();
            for r in 0..a.rows {
                if r != rank && !a[(r, col)].is_zero() {
                    let f = &a[(r, col)] * &inv;
                    a.row_axpy(r, rank, &f, col);
                }
            }
            rank += 1;
            if rank == a.rows {
                break;
            }
        }
        rank
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            a.swap_rows(col, piv);
            inv.swap_rows(col, piv);
            let p = a[(col, col)].recip();
            for j in 0..n {
                if !a[(col, j)].is_zero() {
                    a[(col, j)] *= &p;
                }
                if !inv[(col, j)].is_zero() {
                    inv[(col, j)] *= &p;
                }
            }
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    a.row_axpy(r, col, &f, 0);
                    inv.row_axpy(r, col, &f, 0);
                }
            }
        }
        Some(inv)
    }

    /// Pivots of the symmetric (LDLᵀ) elimination without row exchanges.
    /// Returns `None` if a zero pivot appears before the end.
    pub fn ldl_pivots(&self) -> Option<Vec<Q>> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut pivots = Vec::with_capacity(n);
        for k in 0..n {
            let p = a[(k, k)].clone();
            if p.is_zero() {
                return None;
            }
            let inv = p.recip();
            for r in (k + 1)..n {
                if !a[(r, k)].is_zero() {
                    let f = &a[(r, k)] * &inv;
                    a.row_axpy(r, k, &f, k);
                }
            }
            pivots.push(p);
        }
        Some(pivots)
    }

    /// Sylvester's criterion through the LDLᵀ pivots.
    pub fn is_negative_definite(&self) -> bool {
        self.is_symmetric()
            && self
                .ldl_pivots()
                .is_some_and(|p| p.iter().all(Signed::is_negative))
    }

    pub fn is_positive_definite(&self) -> bool {
        self.is_symmetric()
            && self
                .ldl_pivots()
                .is_some_and(|p| p.iter().all(Signed::is_positive))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[target] -= f * row[source]`, touching columns `from..`.
    fn row_axpy(&mut self, target: usize, source: usize, f: &Q, from: usize) {
        for j in from..self.cols {
            let s = &self.data[source * self.cols + j];
            if !s.is_zero() {
                let d = f * s;
                self.data[target * self.cols + j] -= d;
            }
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sparse_cancellation_drops_entries() {
        let mut v = SparseVec::single(2, q(3));
        v.add_term(2, q(-3));
        assert!(v.is_zero());
        assert_eq!(v, SparseVec::new());
    }

    #[test]
    fn inverse_and_rank() {
        let m = Matrix::from_i64(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert_eq!(inv[(0, 0)], frac(3, 4));
        assert_eq!(m.rank(), 3);
        let s = Matrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(s.rank(), 1);
        assert!(s.inverse().is_none());
    }

    #[test]
    fn definiteness() {
        let m = Matrix::from_i64(&[vec![2, -1], vec![-1, 2]]);
        assert!(m.is_positive_definite());
        assert!(m.scale(&q(-1)).is_negative_definite());
        let indefinite = Matrix::from_i64(&[vec![1, 2], vec![2, 1]]);
        assert!(!indefinite.is_positive_definite());
        assert!(!indefinite.is_negative_definite());
    }

    #[test]
    fn fraction_rendering() {
        assert_eq!(fmt_q(&frac(-6, 4)), "-3/2");
        assert_eq!(fmt_q(&q(7)), "7");
    }
}
