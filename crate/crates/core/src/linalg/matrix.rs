//! Dense matrices over exact rationals.
//!
//! Storage is row-major. Most of the crate works with square matrices, but
//! the elimination routines accept rectangular shapes since kernels of
//! stacked systems come up everywhere (subspace intersections, vectorized
//! intertwiner equations).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::scalar::{self, Scalar};

pub type Vector = Vec<Scalar>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix must be nonempty");
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        assert!(!rows.is_empty(), "matrix must have at least one row");
        let cols = rows[0].len();
        assert!(cols >= 1, "matrix must have at least one column");
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "ragged rows in matrix literal"
        );
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Build from an i64 literal grid; test and example helper.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| scalar::int(x)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length of a square matrix.
    pub fn dim(&self) -> usize {
        assert!(self.is_square(), "dim() on a {}x{} matrix", self.rows, self.cols);
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square(), "trace of a nonsquare matrix");
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn matvec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matvec dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum::<Scalar>()
            })
            .collect()
    }

    pub fn pow(&self, mut k: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Kronecker product; dimensions multiply.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (p, q) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * p, self.cols * q, |i, j| {
            self.get(i / p, j / q) * other.get(i % p, j % q)
        })
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// Flatten row by row into a single vector of length rows*cols.
    pub fn vectorize(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_vectorized(v: &[Scalar], rows: usize, cols: usize) -> Matrix {
        assert_eq!(v.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: v.to_vec(),
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for pc in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(nz) = (pr..self.rows).find(|&r| !self.get(r, pc).is_zero()) else {
                continue;
            };
            self.swap_rows(pr, nz);
            let inv = Scalar::one() / self.get(pr, pc).clone();
            for j in pc..self.cols {
                let v = self.get(pr, j) * &inv;
                self.set(pr, j, v);
            }
            for r in 0..self.rows {
                if r != pr && !self.get(r, pc).is_zero() {
                    let factor = self.get(r, pc).clone();
                    for j in pc..self.cols {
                        let v = self.get(r, j) - &(self.get(pr, j) * &factor);
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data
                .swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the null space `{v : M v = 0}`; empty for full column rank.
    ///
    /// The basis is in the standard free-column form: each vector has a 1 in
    /// one free column and zeros in the other free columns, so the list is
    /// canonical for a given matrix.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_set: Vec<Option<usize>> = {
            let mut map = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                map[c] = Some(r);
            }
            map
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (c, pr) in pivot_set.iter().enumerate() {
                if let Some(r) = pr {
                    v[c] = -m.get(*r, free).clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Exact inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// True when `other = c * self` for some scalar `c` (not both zero-scaled:
    /// the zero matrix is proportional to everything).
    pub fn proportional_to(&self, other: &Matrix) -> bool {
        if self.rows != other.rows || self.cols != other.cols {
            return false;
        }
        match self.data.iter().position(|x| !x.is_zero()) {
            None => true,
            Some(k) => {
                let c = &other.data[k] / &self.data[k];
                self.data
                    .iter()
                    .zip(&other.data)
                    .all(|(a, b)| &(a * &c) == b)
            }
        }
    }

    /// Rescale so the first nonzero entry in row-major order becomes 1.
    /// Identity on the zero matrix.
    pub fn normalize_leading(&self) -> Matrix {
        match self.data.iter().find(|x| !x.is_zero()) {
            None => self.clone(),
            Some(lead) => {
                let inv = Scalar::one() / lead.clone();
                self.scale(&inv)
            }
        }
    }

    /// Stack two matrices with equal column counts on top of each other.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector]) -> Matrix {
        assert!(!cols.is_empty());
        let n = cols[0].len();
        assert!(cols.iter().all(|c| c.len() == n));
        Matrix::from_fn(n, cols.len(), |i, j| cols[j][i].clone())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(scalar::format).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| -self.get(i, j).clone())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

// Vector helpers shared across the crate.

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| x * c).collect()
}

/// If `w = c * v` with `v` nonzero, return `c`.
pub fn proportionality_factor(v: &[Scalar], w: &[Scalar]) -> Option<Scalar> {
    let k = v.iter().position(|x| !x.is_zero())?;
    let c = &w[k] / &v[k];
    let ok = v.iter().zip(w).all(|(a, b)| &(a * &c) == b);
    ok.then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let z = Matrix::zero(2, 2);
        assert_eq!(z.kernel_basis().len(), 2);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert!(Matrix::identity(2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        // [[1,1],[1,1]] has null space spanned by (1,-1).
        let m = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 1);
        assert!(proportionality_factor(&[int(1), int(-1)], &basis[0]).is_some());
        assert!(vec_is_zero(&m.matvec(&basis[0])));
    }

    #[test]
    fn kron_identity() {
        let i2 = Matrix::identity(2);
        assert_eq!(i2.kron(&i2), Matrix::identity(4));
    }

    #[test]
    fn kron_diagonal() {
        let d = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        let got = d.kron(&Matrix::identity(2));
        let want = Matrix::from_rows(vec![
            vec![int(1), int(0), int(0), int(0)],
            vec![int(0), int(1), int(0), int(0)],
            vec![int(0), int(0), int(-1), int(0)],
            vec![int(0), int(0), int(0), int(-1)],
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(vec![vec![int(1), frac(1, 2)], vec![int(0), int(2)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        prop::collection::vec(
            prop::collection::vec((-6i64..=6, 1i64..=3).prop_map(|(p, q)| frac(p, q)), n),
            n,
        )
        .prop_map(Matrix::from_rows)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_plus_nullity(m in small_matrix(4)) {
            let kernel = m.kernel_basis();
            prop_assert_eq!(m.rank() + kernel.len(), 4);
            for v in &kernel {
                prop_assert!(vec_is_zero(&m.matvec(v)));
            }
        }

        #[test]
        fn kron_mixed_product(a in small_matrix(2), b in small_matrix(2),
                              c in small_matrix(2), d in small_matrix(2)) {
            let lhs = &a.kron(&b) * &c.kron(&d);
            let rhs = (&a * &c).kron(&(&b * &d));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
