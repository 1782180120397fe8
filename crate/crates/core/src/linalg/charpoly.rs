//! Characteristic and minimal polynomials, computed exactly.

use num::bigint::BigInt;
use num::Zero;

use super::matrix::Matrix;
use super::poly::Poly;
use super::scalar::Scalar;
use super::subspace::{solve_columns, RowSpan};

/// Monic characteristic polynomial by the Faddeev–LeVerrier recurrence.
/// Divisions are by integers only, so everything stays exact over Q.
pub fn char_poly(m: &Matrix) -> Poly {
    let n = m.dim();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::from_integer(BigInt::from(1));
    let mut acc = m.clone();
    for k in 1..=n {
        let c = -acc.trace() / Scalar::from_integer(BigInt::from(k));
        coeffs[n - k] = c.clone();
        if k < n {
            acc = &(&acc + &Matrix::identity(n).scale(&c)) * m;
        }
    }
    Poly::from_coeffs(coeffs)
}

/// Monic minimal polynomial: the first linear dependence among the
/// vectorized powers I, M, M², … gives its coefficients directly.
pub fn min_poly(m: &Matrix) -> Poly {
    let n = m.dim();
    let mut powers: Vec<Matrix> = vec![Matrix::identity(n)];
    let mut vectorized = vec![powers[0].vectorize()];
    let mut span = RowSpan::new(n * n);
    span.insert(vectorized[0].clone());
    loop {
        let next = &powers[powers.len() - 1] * m;
        let v = next.vectorize();
        if !span.insert(v.clone()) {
            let k = powers.len();
            let x = solve_columns(&vectorized, &v)
                .expect("dependent power must lie in the span of earlier powers");
            let mut coeffs: Vec<Scalar> = x.into_iter().map(|c| -c).collect();
            coeffs.push(Scalar::from_integer(BigInt::from(1)));
            debug_assert_eq!(coeffs.len(), k + 1);
            return Poly::from_coeffs(coeffs);
        }
        powers.push(next);
        vectorized.push(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn char_poly_of_identity() {
        // (λ-1)² = λ² - 2λ + 1
        let p = char_poly(&Matrix::identity(2));
        assert_eq!(p, Poly::from_coeffs(vec![int(1), int(-2), int(1)]));
    }

    #[test]
    fn char_poly_of_exchange_matrix() {
        let a = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(char_poly(&a), Poly::from_coeffs(vec![int(-1), int(0), int(1)]));
    }

    #[test]
    fn min_poly_of_identity_and_exchange() {
        assert_eq!(
            min_poly(&Matrix::identity(3)),
            Poly::from_coeffs(vec![int(-1), int(1)])
        );
        // The exchange matrix squares to I.
        let a = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(min_poly(&a), Poly::from_coeffs(vec![int(-1), int(0), int(1)]));
    }

    #[test]
    fn min_poly_of_nilpotent_block() {
        let a = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let p = min_poly(&a);
        assert_eq!(p, Poly::from_coeffs(vec![int(0), int(0), int(1)]));
        assert!(!p.is_squarefree());
    }

    #[test]
    fn char_and_min_poly_of_a_kronecker_sum() {
        // X (x) I + I (x) X for the exchange matrix X has eigenvalues
        // {2, 0, 0, -2}: characteristic polynomial lambda^4 - 4 lambda^2,
        // minimal polynomial lambda^3 - 4 lambda.
        let x = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let i2 = Matrix::identity(2);
        let m = &x.kron(&i2) + &i2.kron(&x);
        assert_eq!(
            char_poly(&m),
            Poly::from_coeffs(vec![int(0), int(0), int(-4), int(0), int(1)])
        );
        assert_eq!(
            min_poly(&m),
            Poly::from_coeffs(vec![int(0), int(-4), int(0), int(1)])
        );
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        prop::collection::vec(
            prop::collection::vec((-5i64..=5, 1i64..=2).prop_map(|(p, q)| frac(p, q)), n),
            n,
        )
        .prop_map(Matrix::from_rows)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn cayley_hamilton(m in small_matrix(3)) {
            prop_assert!(char_poly(&m).eval_matrix(&m).is_zero());
        }

        #[test]
        fn min_poly_divides_char_poly(m in small_matrix(3)) {
            let c = char_poly(&m);
            let p = min_poly(&m);
            prop_assert!(p.eval_matrix(&m).is_zero());
            prop_assert!(c.div_exact(&p).is_some());
        }
    }
}
