//! Dense exact matrices, row reduction and incremental span bases.

use std::fmt;

use thiserror::Error;

use super::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.data[r * self.cols..(r + 1) * self.cols]
                .iter()
                .map(|x| format!("{x:?}"))
                .collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors; `cols` is needed when there are no rows.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    /// The matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(columns: &[Vec<F>], rows: usize) -> Self {
        Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<F> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    /// Matrix product; panics on incompatible shapes.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matrix product {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    /// Sum; panics on incompatible shapes.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "vector length");
        (0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc + a.clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Result<F, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).fold(F::zero(), |acc, i| acc + self.get(i, i).clone()))
    }

    /// Kronecker product; the left factor indexes the most significant digit.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        Self::from_fn(rows, cols, |r, c| {
            let a = self.get(r / other.rows, c / other.cols);
            if a.is_zero() {
                return F::zero();
            }
            a.clone() * other.get(r % other.rows, c % other.cols).clone()
        })
    }

    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(LinalgError::Singular)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a.get(col, col).inverse().expect("nonzero pivot");
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let factor = a.get(r, col).clone();
                    a.add_row_multiple(r, col, &factor);
                    inv.add_row_multiple(r, col, &factor);
                }
            }
        }
        Ok(inv)
    }

    pub fn rank(&self) -> usize {
        let mut basis = SpanBasis::new(self.cols);
        for r in 0..self.rows {
            basis.insert(self.row(r));
        }
        basis.dim()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &F) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.data[idx] = self.data[idx].clone() * s.clone();
        }
    }

    /// row[target] -= factor * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &F) {
        for c in 0..self.cols {
            let v = self.get(source, c).clone();
            if v.is_zero() {
                continue;
            }
            let idx = target * self.cols + c;
            self.data[idx] = self.data[idx].clone() - factor.clone() * v;
        }
    }
}

/// Matrix of the copairing dual to a nondegenerate pairing: `pairing * dual = I`.
pub fn dual_basis<F: Scalar>(pairing: &Matrix<F>) -> Result<Matrix<F>, LinalgError> {
    pairing.inverse()
}

/// A subspace of `F^n` kept in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct SpanBasis<F> {
    ambient: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> SpanBasis<F> {
    pub fn new(ambient: usize) -> Self {
        SpanBasis {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }

    /// Pivot columns, ascending.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot; the standard vectors there span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| self.pivots.binary_search(c).is_err())
            .collect()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the span,
    /// and always vanishes on pivot columns.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span; returns true if the dimension grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut w = self.reduce(&v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inverse().expect("nonzero");
        for x in w.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&w) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }
}

/// One solution of `a x = b` with free variables set to zero, or `None` if inconsistent.
pub fn solve<F: Scalar>(a: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    assert_eq!(a.rows(), b.len());
    let n = a.cols();
    let mut aug = SpanBasis::new(n + 1);
    for r in 0..a.rows() {
        let mut row = a.row(r);
        row.push(b[r].clone());
        aug.insert(row);
    }
    if aug.pivots().contains(&n) {
        return None;
    }
    let mut x = vec![F::zero(); n];
    for (row, &p) in aug.basis().iter().zip(aug.pivots()) {
        x[p] = row[n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
            cols,
        )
        .unwrap()
    }

    #[test]
    fn trace_of_identity() {
        assert_eq!(Matrix::<Rational>::identity(3).trace().unwrap(), q(3));
    }

    #[test]
    fn scalar_inverse() {
        let inv = m(&[&[2]]).inverse().unwrap();
        assert_eq!(*inv.get(0, 0), Rational::parse_scalar("1/2").unwrap());
    }

    #[test]
    fn unipotent_inverse() {
        // adjugate of [[a,b],[c,d]] is [[d,-b],[-c,a]] / (ad - bc)
        let a = m(&[&[1, 1], &[0, 1]]);
        assert_eq!(a.inverse().unwrap(), m(&[&[1, -1], &[0, 1]]));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn dual_of_hyperbolic_pairing() {
        let p = m(&[&[0, 1], &[1, 0]]);
        let d = dual_basis(&p).unwrap();
        assert_eq!(d, p);
        assert_eq!(p.mul(&d), Matrix::identity(2));
    }

    #[test]
    fn kron_ordering() {
        let a = m(&[&[1, 2]]);
        let b = m(&[&[1], &[10]]);
        assert_eq!(a.kron(&b), m(&[&[1, 2], &[10, 20]]));
    }

    #[test]
    fn span_basis_reduces_fully() {
        let mut s = SpanBasis::new(3);
        assert!(s.insert(vec![q(1), q(1), q(0)]));
        assert!(s.insert(vec![q(0), q(1), q(1)]));
        assert!(!s.insert(vec![q(1), q(2), q(1)]));
        assert_eq!(s.pivots(), &[0, 1]);
        assert_eq!(s.free_columns(), vec![2]);
        assert_eq!(s.reduce(&[q(0), q(0), q(1)]), vec![q(0), q(0), q(1)]);
        assert_eq!(s.reduce(&[q(1), q(0), q(0)]), vec![q(0), q(0), q(1)]);
    }

    #[test]
    fn solve_picks_zero_free_variables() {
        let a = m(&[&[1, 1]]);
        assert_eq!(solve(&a, &[q(3)]), Some(vec![q(3), q(0)]));
        let b = m(&[&[1], &[1]]);
        assert_eq!(solve(&b, &[q(1), q(2)]), None);
    }
}
