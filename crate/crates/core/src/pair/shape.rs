//! Shape vectors and their factorizations into geometric sums.

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::poly::Poly;
use crate::linalg::scalar::Scalar;

/// Eigenspace dimension sequence ρ_0..ρ_d along a standard ordering.
/// Always symmetric and unimodal for a verified pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    rho: Vec<usize>,
}

impl Shape {
    pub fn new(rho: Vec<usize>) -> Result<Shape> {
        if rho.is_empty() || rho.contains(&0) {
            return Err(Error::InternalInvariantViolation(
                "shape entries must be positive".into(),
            ));
        }
        let d = rho.len() - 1;
        for i in 0..=d {
            if rho[i] != rho[d - i] {
                return Err(Error::InternalInvariantViolation(format!(
                    "shape {rho:?} is not symmetric"
                )));
            }
        }
        for i in 1..=d / 2 {
            if rho[i - 1] > rho[i] {
                return Err(Error::InternalInvariantViolation(format!(
                    "shape {rho:?} is not unimodal"
                )));
            }
        }
        Ok(Shape { rho })
    }

    pub fn rho(&self) -> &[usize] {
        &self.rho
    }

    pub fn diameter(&self) -> usize {
        self.rho.len() - 1
    }

    pub fn total_dim(&self) -> usize {
        self.rho.iter().sum()
    }

    /// Σ ρ_i λ^i.
    pub fn generating_poly(&self) -> Poly {
        Poly::from_coeffs(
            self.rho
                .iter()
                .map(|&r| Scalar::from_integer(BigInt::from(r)))
                .collect(),
        )
    }
}

/// 1 + λ + ··· + λ^d.
pub fn geometric_sum(d: usize) -> Poly {
    Poly::from_coeffs(vec![Scalar::from_integer(BigInt::from(1)); d + 1])
}

/// All multisets {d_j} of positive integers with
/// Σ ρ_i λ^i = Π_j (1 + λ + ··· + λ^{d_j}), by exhaustive exact division.
/// Each multiset is returned sorted ascending; the empty multiset covers the
/// one-dimensional shape (1). An empty result means no such factorization
/// exists.
pub fn shape_factorization(shape: &Shape) -> Vec<Vec<usize>> {
    let mut results = Vec::new();
    let mut acc = Vec::new();
    search(&shape.generating_poly(), 1, &mut acc, &mut results);
    results
}

fn search(poly: &Poly, min_d: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if poly == &Poly::one() {
        out.push(acc.clone());
        return;
    }
    let Some(deg) = poly.degree() else {
        return;
    };
    // Candidates are tried in ascending order with a non-decreasing
    // constraint, so each multiset is produced exactly once.
    for d in min_d..=deg {
        if let Some(quotient) = poly.div_exact(&geometric_sum(d)) {
            acc.push(d);
            search(&quotient, d, acc, out);
            acc.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorize(rho: &[usize]) -> Vec<Vec<usize>> {
        shape_factorization(&Shape::new(rho.to_vec()).unwrap())
    }

    #[test]
    fn point_shape_has_the_empty_factorization() {
        assert_eq!(factorize(&[1]), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn two_line_factors() {
        // 1 + 2λ + λ² = (1+λ)²
        assert_eq!(factorize(&[1, 2, 1]), vec![vec![1, 1]]);
    }

    #[test]
    fn path_shape_is_a_single_factor() {
        // 1 + λ + λ² + λ³
        assert_eq!(factorize(&[1, 1, 1, 1]), vec![vec![3]]);
    }

    #[test]
    fn mixed_shape() {
        // (1+λ)(1+λ+λ²) = 1 + 2λ + 2λ² + λ³
        assert_eq!(factorize(&[1, 2, 2, 1]), vec![vec![1, 2]]);
    }

    #[test]
    fn shape_validation_rejects_asymmetry() {
        assert!(Shape::new(vec![1, 2]).is_err());
        assert!(Shape::new(vec![2, 3, 2]).is_ok());
        assert!(Shape::new(vec![2, 1, 2]).is_err());
        assert!(Shape::new(vec![1, 0, 1]).is_err());
    }

    #[test]
    fn no_factorization_when_constant_term_exceeds_one() {
        // Shape (2,2): generating polynomial 2 + 2λ has constant term 2.
        assert!(factorize(&[2, 2]).is_empty());
    }
}
