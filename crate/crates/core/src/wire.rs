//! Canonical string forms for exchanging exact data: rationals as "p/q"
//! (or "p" when the denominator is 1), matrices as row-major grids of such
//! strings. Round trips are bit-exact.

use crate::error::{Error, Result};
use crate::linalg::matrix::{Matrix, Vector};
use crate::linalg::scalar::{self, Scalar};

pub fn scalar_to_string(x: &Scalar) -> String {
    scalar::format(x)
}

pub fn string_to_scalar(s: &str) -> Result<Scalar> {
    scalar::parse(s)
}

pub fn scalars_to_strings(xs: &[Scalar]) -> Vec<String> {
    xs.iter().map(scalar::format).collect()
}

pub fn matrix_to_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.nrows())
        .map(|i| m.row(i).iter().map(scalar::format).collect())
        .collect()
}

pub fn rows_to_matrix(rows: &[Vec<String>]) -> Result<Matrix> {
    if rows.is_empty() || rows[0].is_empty() {
        return Err(Error::BadParameter("empty matrix".into()));
    }
    let cols = rows[0].len();
    let mut parsed = Vec::with_capacity(rows.len());
    for row in rows {
        if row.len() != cols {
            return Err(Error::BadParameter("ragged matrix rows".into()));
        }
        parsed.push(
            row.iter()
                .map(|s| scalar::parse(s))
                .collect::<Result<Vec<Scalar>>>()?,
        );
    }
    Ok(Matrix::from_rows(parsed))
}

pub fn vectors_to_rows(vs: &[Vector]) -> Vec<Vec<String>> {
    vs.iter().map(|v| scalars_to_strings(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{frac, int};

    #[test]
    fn matrix_round_trip_is_bit_exact() {
        let m = Matrix::from_rows(vec![
            vec![int(0), frac(-9, 2)],
            vec![frac(1, 3), int(7)],
        ]);
        let rows = matrix_to_rows(&m);
        assert_eq!(rows, vec![vec!["0", "-9/2"], vec!["1/3", "7"]]);
        assert_eq!(rows_to_matrix(&rows).unwrap(), m);
    }

    #[test]
    fn malformed_grids_are_rejected() {
        assert!(rows_to_matrix(&[]).is_err());
        assert!(rows_to_matrix(&[vec!["1".into()], vec![]]).is_err());
        assert!(rows_to_matrix(&[vec!["1/x".into()]]).is_err());
    }
}
