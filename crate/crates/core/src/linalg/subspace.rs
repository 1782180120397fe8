//! Subspaces of Q^n as canonical row-echelon bases, plus exact linear solves.

use num::{One, Zero};

use super::matrix::{vec_is_zero, Matrix, Vector};
use super::scalar::Scalar;

/// A growing subspace kept in reduced row echelon form. Inserting a vector
/// reports whether the dimension grew, which is the workhorse for span
/// stabilization and independence tests.
#[derive(Clone, Debug)]
pub struct RowSpan {
    ncols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl RowSpan {
    pub fn new(ncols: usize) -> Self {
        RowSpan {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    fn reduce(&self, v: &mut Vector) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for j in p..self.ncols {
                    v[j] -= &c * &row[j];
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        vec_is_zero(&w)
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.ncols);
        let mut w = v;
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Scalar::one() / w[p].clone();
        for x in w.iter_mut() {
            *x = &*x * &inv;
        }
        // Back-substitute into existing rows to stay in reduced form.
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for j in 0..self.ncols {
                    row[j] -= &c * &w[j];
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, w);
        self.pivots.insert(at, p);
        true
    }
}

/// Canonical basis (reduced echelon rows) of the span of the given vectors.
pub fn span_basis(vectors: &[Vector]) -> Vec<Vector> {
    let Some(first) = vectors.first() else {
        return Vec::new();
    };
    let mut span = RowSpan::new(first.len());
    for v in vectors {
        span.insert(v.clone());
    }
    span.rows
}

pub fn dim(basis: &[Vector]) -> usize {
    span_basis(basis).len()
}

/// Basis of `U + W`.
pub fn sum(u: &[Vector], w: &[Vector]) -> Vec<Vector> {
    let all: Vec<Vector> = u.iter().chain(w).cloned().collect();
    span_basis(&all)
}

/// Basis of `U ∩ W` by the kernel-of-stacked-basis method: null vectors of
/// the matrix whose columns are the `u_i` followed by the `-w_j` encode the
/// coincidences `Σ α_i u_i = Σ β_j w_j`.
pub fn intersection(u: &[Vector], w: &[Vector]) -> Vec<Vector> {
    if u.is_empty() || w.is_empty() {
        return Vec::new();
    }
    let n = u[0].len();
    let cols: Vec<Vector> = u
        .iter()
        .cloned()
        .chain(w.iter().map(|v| v.iter().map(|x| -x.clone()).collect()))
        .collect();
    let stacked = Matrix::from_columns(&cols);
    let mut members = Vec::new();
    for coeffs in stacked.kernel_basis() {
        let mut vec = vec![Scalar::zero(); n];
        for (alpha, basis_vec) in coeffs[..u.len()].iter().zip(u) {
            for (slot, x) in vec.iter_mut().zip(basis_vec) {
                *slot += alpha * x;
            }
        }
        members.push(vec);
    }
    span_basis(&members)
}

/// Set equality of subspaces given by arbitrary bases.
pub fn equal(u: &[Vector], w: &[Vector]) -> bool {
    span_basis(u) == span_basis(w)
}

/// Does the span of `basis` contain `v`?
pub fn contains(basis: &[Vector], v: &[Scalar]) -> bool {
    if vec_is_zero(v) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let mut span = RowSpan::new(v.len());
    for b in basis {
        span.insert(b.clone());
    }
    span.contains(v)
}

/// Solve `C x = t` for the matrix with the given columns; `None` when
/// inconsistent. Free variables are set to zero.
pub fn solve_columns(columns: &[Vector], target: &[Scalar]) -> Option<Vector> {
    if columns.is_empty() {
        return vec_is_zero(target).then(Vec::new);
    }
    let mut aug_cols: Vec<Vector> = columns.to_vec();
    aug_cols.push(target.to_vec());
    let mut aug = Matrix::from_columns(&aug_cols);
    let pivots = aug.rref_in_place();
    let k = columns.len();
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Scalar::zero(); k];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = aug.get(row, k).clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn intersection_of_planes_in_q3() {
        // span{e1,e2} ∩ span{e2,e3} = span{e2}
        let u = vec![v(&[1, 0, 0]), v(&[0, 1, 0])];
        let w = vec![v(&[0, 1, 0]), v(&[0, 0, 1])];
        let i = intersection(&u, &w);
        assert_eq!(i, vec![v(&[0, 1, 0])]);
    }

    #[test]
    fn intersection_can_be_zero() {
        let u = vec![v(&[1, 0])];
        let w = vec![v(&[0, 1])];
        assert!(intersection(&u, &w).is_empty());
    }

    #[test]
    fn sum_and_equality() {
        let u = vec![v(&[1, 1])];
        let w = vec![v(&[1, -1])];
        let s = sum(&u, &w);
        assert_eq!(dim(&s), 2);
        assert!(equal(&s, &[v(&[1, 0]), v(&[0, 1])]));
    }

    #[test]
    fn solve_columns_consistent_and_not() {
        let cols = vec![v(&[1, 0]), v(&[1, 1])];
        let x = solve_columns(&cols, &v(&[3, 2])).unwrap();
        assert_eq!(x, vec![int(1), int(2)]);
        let cols2 = vec![v(&[1, 0])];
        assert!(solve_columns(&cols2, &v(&[0, 1])).is_none());
    }

    #[test]
    fn rowspan_insert_reports_growth() {
        let mut s = RowSpan::new(3);
        assert!(s.insert(v(&[1, 2, 3])));
        assert!(s.insert(v(&[0, 1, 1])));
        assert!(!s.insert(v(&[1, 3, 4])));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(&[2, 5, 7])));
        assert!(!s.contains(&v(&[0, 0, 1])));
    }
}
