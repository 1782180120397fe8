//! Generators for tridiagonal pairs of Krawtchouk type, and the derived
//! pairs (affine transform, swap, negate, dual).
//!
//! The basic block acts on a basis w_0..w_d by
//!   e·w_i = i(d−i+1)·w_{i−1},      f·w_i = w_{i+1},
//! and a factor with evaluation parameter a contributes e+f to A and
//! a·e + a⁻¹·f to A*. Tensoring factors with kron sums these actions
//! slotwise. Correctness of every generated pair is enforced a posteriori:
//! the axiom verifier is the oracle, not an assumption.

use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::matrix::Matrix;
use crate::linalg::scalar::{self, Scalar};
use crate::pair::{geometric_sum, TdPair};

/// Blueprint for a tensor-product pair: one (d_j, a_j) per factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    factors: Vec<(usize, Scalar)>,
}

impl ConstructionSpec {
    /// Validates the parameter constraints: every a_j outside {0, 1, −1},
    /// and for distinct factors a_i ≠ a_j and a_i·a_j ≠ 1 (the classes
    /// {a, a⁻¹} must be distinct, otherwise the pair action is reducible).
    pub fn new(factors: Vec<(usize, Scalar)>) -> Result<ConstructionSpec> {
        for (d, a) in &factors {
            if *d == 0 {
                return Err(Error::BadParameter(
                    "factor degrees must be positive".into(),
                ));
            }
            check_parameter(a)?;
        }
        for i in 0..factors.len() {
            for j in 0..i {
                let (ai, aj) = (&factors[i].1, &factors[j].1);
                if ai == aj {
                    return Err(Error::BadParameter(format!(
                        "repeated evaluation parameter {}",
                        scalar::format(ai)
                    )));
                }
                if (ai * aj).is_one() {
                    return Err(Error::BadParameter(format!(
                        "evaluation parameters {} and {} are mutually inverse",
                        scalar::format(ai),
                        scalar::format(aj)
                    )));
                }
            }
        }
        Ok(ConstructionSpec { factors })
    }

    /// Parse the compact form `d1:a1,d2:a2,…` with each a an integer or p/q.
    pub fn parse(s: &str) -> Result<ConstructionSpec> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::BadParameter("empty construction spec".into()));
        }
        let mut factors = Vec::new();
        for token in s.split(',') {
            let (d_str, a_str) = token.split_once(':').ok_or_else(|| {
                Error::BadParameter(format!("token {token:?} is not of the form d:a"))
            })?;
            let d: usize = d_str.trim().parse().map_err(|_| {
                Error::BadParameter(format!("invalid factor degree {d_str:?}"))
            })?;
            let a = scalar::parse(a_str.trim())?;
            factors.push((d, a));
        }
        ConstructionSpec::new(factors)
    }

    pub fn factors(&self) -> &[(usize, Scalar)] {
        &self.factors
    }

    pub fn diameter(&self) -> usize {
        self.factors.iter().map(|(d, _)| d).sum()
    }

    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(|(d, _)| d + 1).product()
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(d, a)| format!("{}:{}", d, scalar::format(a)))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

fn check_parameter(a: &Scalar) -> Result<()> {
    if a.is_zero() || a.is_one() || (-a.clone()).is_one() {
        return Err(Error::BadParameter(format!(
            "evaluation parameter must avoid 0, 1, -1 (got {})",
            scalar::format(a)
        )));
    }
    Ok(())
}

/// Lowering matrix: e·w_i = i(d−i+1)·w_{i−1}.
fn lowering(d: usize) -> Matrix {
    let n = d + 1;
    let mut e = Matrix::zero(n, n);
    for i in 1..n {
        e.set(i - 1, i, scalar::int((i * (d - i + 1)) as i64));
    }
    e
}

/// Raising matrix: f·w_i = w_{i+1}.
fn raising(d: usize) -> Matrix {
    let n = d + 1;
    let mut f = Matrix::zero(n, n);
    for i in 0..d {
        f.set(i + 1, i, Scalar::one());
    }
    f
}

/// The unvalidated single-factor matrices (e+f, a·e + a⁻¹·f). Useful for
/// feeding the verifier instances that are known to violate the parameter
/// constraints.
pub fn leonard_matrices(d: usize, a: &Scalar) -> (Matrix, Matrix) {
    let e = lowering(d);
    let f = raising(d);
    let a_inv = Scalar::one() / a.clone();
    (&e + &f, &e.scale(a) + &f.scale(&a_inv))
}

/// Pair with shape (1,1,…,1): d+1 eigenvalues, all eigenspaces lines.
pub fn leonard_krawtchouk(d: usize, a: &Scalar) -> Result<TdPair> {
    check_parameter(a)?;
    let (m, mstar) = leonard_matrices(d, a);
    accept(m, mstar)
}

/// The unvalidated tensor matrices of a factor list: slotwise Kronecker
/// sums of the single-factor actions.
pub fn tensor_matrices(factors: &[(usize, Scalar)]) -> (Matrix, Matrix) {
    if factors.is_empty() {
        return (Matrix::zero(1, 1), Matrix::zero(1, 1));
    }
    let dims: Vec<usize> = factors.iter().map(|(d, _)| d + 1).collect();
    let n: usize = dims.iter().product();
    let mut a = Matrix::zero(n, n);
    let mut astar = Matrix::zero(n, n);
    for (slot, (d, param)) in factors.iter().enumerate() {
        let (m, mstar) = leonard_matrices(*d, param);
        a = &a + &embed(&m, &dims, slot);
        astar = &astar + &embed(&mstar, &dims, slot);
    }
    (a, astar)
}

/// I ⊗ ··· ⊗ m ⊗ ··· ⊗ I with `m` in the given slot.
fn embed(m: &Matrix, dims: &[usize], slot: usize) -> Matrix {
    let mut acc = Matrix::identity(1);
    for (j, &dim) in dims.iter().enumerate() {
        let block = if j == slot {
            m.clone()
        } else {
            Matrix::identity(dim)
        };
        acc = acc.kron(&block);
    }
    acc
}

/// Tensor-product pair of Krawtchouk type with diameter Σ d_j and shape
/// generating polynomial Π (1+λ+···+λ^{d_j}). The verifier and the shape
/// contract are checked a posteriori; a failing instance is rejected with
/// its report, never silently accepted.
pub fn onsager_tensor(spec: &ConstructionSpec) -> Result<TdPair> {
    let (a, astar) = tensor_matrices(&spec.factors);
    let pair = accept(a, astar)?;
    let d = spec.diameter();
    if pair.diameter() != d {
        return Err(Error::InternalInvariantViolation(format!(
            "generated pair has diameter {} instead of {}",
            pair.diameter(),
            d
        )));
    }
    let expected_shape = spec
        .factors
        .iter()
        .fold(crate::linalg::Poly::one(), |acc, (dj, _)| {
            acc.mul(&geometric_sum(*dj))
        });
    if pair.shape().generating_poly() != expected_shape {
        return Err(Error::InternalInvariantViolation(format!(
            "generated pair has shape {:?}, which does not match the factor degrees",
            pair.shape().rho()
        )));
    }
    Ok(pair)
}

fn accept(a: Matrix, astar: Matrix) -> Result<TdPair> {
    match TdPair::new(a, astar) {
        Ok(pair) => {
            if pair.krawtchouk_orderings().is_none() {
                return Err(Error::InternalInvariantViolation(
                    "generated pair is not of Krawtchouk type".into(),
                ));
            }
            Ok(pair)
        }
        Err(Error::NotATdPair(report)) => Err(Error::ConstructionRejected(report)),
        Err(e) => Err(e),
    }
}

/// Affine change (αA+βI, α*A*+β*I); eigenspaces are untouched, so the
/// axioms survive any α, α* ≠ 0.
pub fn transform(
    pair: &TdPair,
    alpha: &Scalar,
    beta: &Scalar,
    alpha_star: &Scalar,
    beta_star: &Scalar,
) -> Result<TdPair> {
    if alpha.is_zero() || alpha_star.is_zero() {
        return Err(Error::BadParameter(
            "affine transform needs nonzero leading scalars".into(),
        ));
    }
    let n = pair.dim();
    let identity = Matrix::identity(n);
    let a = &pair.a().scale(alpha) + &identity.scale(beta);
    let astar = &pair.astar().scale(alpha_star) + &identity.scale(beta_star);
    Ok(TdPair::new(a, astar).expect("affine transforms preserve the axioms"))
}

/// The pair (A*, A).
pub fn swap(pair: &TdPair) -> TdPair {
    TdPair::new(pair.astar().clone(), pair.a().clone())
        .expect("swapping the members preserves the axioms")
}

/// The pair (−A, −A*).
pub fn negate(pair: &TdPair) -> TdPair {
    TdPair::new(-pair.a(), -pair.astar()).expect("negation preserves the axioms")
}

/// The pair induced on the dual space: matrices of the adjoint maps on the
/// dual basis, i.e. the entrywise transposes.
pub fn dual(pair: &TdPair) -> TdPair {
    TdPair::new(pair.a().transpose(), pair.astar().transpose())
        .expect("the dual pair satisfies the axioms")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{frac, int};

    #[test]
    fn k12_matrices_are_the_expected_literals() {
        let pair = leonard_krawtchouk(1, &int(2)).unwrap();
        assert_eq!(pair.a(), &Matrix::from_i64(&[&[0, 1], &[1, 0]]));
        let expected = Matrix::from_rows(vec![
            vec![int(0), int(2)],
            vec![frac(1, 2), int(0)],
        ]);
        assert_eq!(pair.astar(), &expected);
    }

    #[test]
    fn zero_diameter_pair() {
        let pair = leonard_krawtchouk(0, &int(5)).unwrap();
        assert_eq!(pair.a(), &Matrix::zero(1, 1));
        assert_eq!(pair.astar(), &Matrix::zero(1, 1));
    }

    #[test]
    fn unit_parameter_is_rejected() {
        for a in [int(0), int(1), int(-1)] {
            assert!(matches!(
                leonard_krawtchouk(1, &a),
                Err(Error::BadParameter(_))
            ));
        }
    }

    #[test]
    fn spec_parsing_and_validation() {
        let spec = ConstructionSpec::parse("1:2,1:3").unwrap();
        assert_eq!(spec.factors(), &[(1, int(2)), (1, int(3))]);
        assert_eq!(spec.to_string(), "1:2,1:3");
        let spec = ConstructionSpec::parse("2:2, 1:-5/3").unwrap();
        assert_eq!(spec.factors(), &[(2, int(2)), (1, frac(-5, 3))]);
        assert_eq!(spec.to_string(), "2:2,1:-5/3");

        assert!(ConstructionSpec::parse("1:1").is_err());
        assert!(ConstructionSpec::parse("0:2").is_err());
        assert!(ConstructionSpec::parse("1:2,1:1/2").is_err());
        assert!(ConstructionSpec::parse("1:2,1:2").is_err());
        assert!(ConstructionSpec::parse("").is_err());
        assert!(ConstructionSpec::parse("nonsense").is_err());
    }

    #[test]
    fn tensor_of_two_lines() {
        let pair = onsager_tensor(&ConstructionSpec::parse("1:2,1:3").unwrap()).unwrap();
        assert_eq!(pair.dim(), 4);
        assert_eq!(pair.diameter(), 2);
        assert_eq!(pair.shape().rho(), &[1, 2, 1]);
        assert!(pair.is_krawtchouk());
    }

    #[test]
    fn single_factor_tensor_equals_the_leonard_pair() {
        let spec = ConstructionSpec::parse("1:2").unwrap();
        let t = onsager_tensor(&spec).unwrap();
        let l = leonard_krawtchouk(1, &int(2)).unwrap();
        assert_eq!(t.a(), l.a());
        assert_eq!(t.astar(), l.astar());
    }

    #[test]
    fn transform_validates_and_round_trips() {
        let pair = leonard_krawtchouk(1, &int(2)).unwrap();
        assert!(matches!(
            transform(&pair, &int(0), &int(1), &int(1), &int(0)),
            Err(Error::BadParameter(_))
        ));
        let moved = transform(&pair, &int(3), &frac(1, 2), &int(-2), &int(5)).unwrap();
        let back = transform(
            &moved,
            &frac(1, 3),
            &frac(-1, 6),
            &frac(-1, 2),
            &frac(5, 2),
        )
        .unwrap();
        assert_eq!(back.a(), pair.a());
        assert_eq!(back.astar(), pair.astar());
        let identity = transform(&pair, &int(1), &int(0), &int(1), &int(0)).unwrap();
        assert_eq!(identity.a(), pair.a());
    }

    #[test]
    fn negation_preserves_krawtchouk_type() {
        let pair = leonard_krawtchouk(1, &int(2)).unwrap();
        let neg = negate(&pair);
        assert!(neg.is_krawtchouk());
        assert_eq!(neg.a(), &-pair.a());
        let point = leonard_krawtchouk(0, &int(2)).unwrap();
        let neg0 = negate(&point);
        assert_eq!(neg0.a(), point.a());
    }

    #[test]
    fn swap_and_dual_literals() {
        let pair = leonard_krawtchouk(1, &int(2)).unwrap();
        let swapped = swap(&pair);
        assert_eq!(swapped.a(), pair.astar());
        assert_eq!(swapped.astar(), pair.a());

        let dualized = dual(&pair);
        assert_eq!(dualized.a(), &Matrix::from_i64(&[&[0, 1], &[1, 0]]));
        let expected = Matrix::from_rows(vec![
            vec![int(0), frac(1, 2)],
            vec![int(2), int(0)],
        ]);
        assert_eq!(dualized.astar(), &expected);

        let twice = dual(&dualized);
        assert_eq!(twice.a(), pair.a());
        assert_eq!(twice.astar(), pair.astar());
    }
}
