//! Split decomposition, split sequence, and parameter arrays.
//!
//! For standard orderings θ_0..θ_d of A and θ*_0..θ*_d of A*, the split
//! subspaces are U_i = (V*_0+···+V*_i) ∩ (V_i+···+V_d). When U_0 is a line,
//! the operator string
//!   (A*−θ*_1)···(A*−θ*_i)(A−θ_{i−1})···(A−θ_0)
//! preserves it; ζ_i is the scalar by which it acts.

use num::One;

use crate::error::{Error, Result};
use crate::linalg::matrix::{proportionality_factor, vec_is_zero, Matrix, Vector};
use crate::linalg::scalar::{self, Scalar};
use crate::linalg::subspace;

use super::TdPair;

/// Split decomposition data for one choice of standard orderings.
#[derive(Clone, Debug)]
pub struct SplitData {
    pub theta: Vec<Scalar>,
    pub theta_star: Vec<Scalar>,
    /// Canonical bases of U_0..U_d.
    pub u_bases: Vec<Vec<Vector>>,
}

impl SplitData {
    pub fn u_dims(&self) -> Vec<usize> {
        self.u_bases.iter().map(|b| b.len()).collect()
    }
}

/// Parameter array (θ_i; θ*_i; ζ_i) of a pair whose shape starts at 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterArray {
    pub theta: Vec<Scalar>,
    pub theta_star: Vec<Scalar>,
    pub zeta: Vec<Scalar>,
}

impl ParameterArray {
    pub fn diameter(&self) -> usize {
        self.theta.len() - 1
    }
}

fn check_orderings(pair: &TdPair, theta: &[Scalar], theta_star: &[Scalar]) -> Result<()> {
    if !pair.standard_orderings().theta_is_standard(theta) {
        return Err(Error::BadParameter(format!(
            "{:?} is not a standard ordering of the eigenvalues of A",
            theta.iter().map(scalar::format).collect::<Vec<_>>()
        )));
    }
    if !pair.standard_orderings().theta_star_is_standard(theta_star) {
        return Err(Error::BadParameter(format!(
            "{:?} is not a standard ordering of the eigenvalues of A*",
            theta_star.iter().map(scalar::format).collect::<Vec<_>>()
        )));
    }
    Ok(())
}

/// Compute U_0..U_d by exact subspace intersection and check the defining
/// inclusions, the dimension count, and directness on the spot.
pub fn split_decomposition(
    pair: &TdPair,
    theta: &[Scalar],
    theta_star: &[Scalar],
) -> Result<SplitData> {
    check_orderings(pair, theta, theta_star)?;
    let n = pair.dim();
    let d = pair.diameter();
    let identity = Matrix::identity(n);

    let v_bases: Vec<&[Vector]> = theta
        .iter()
        .map(|t| pair.eigen_a().eigenspace_for(t).expect("standard ordering"))
        .collect();
    let vstar_bases: Vec<&[Vector]> = theta_star
        .iter()
        .map(|t| pair.eigen_astar().eigenspace_for(t).expect("standard ordering"))
        .collect();

    // Prefix sums of the V* flag and suffix sums of the V flag.
    let mut star_prefix: Vec<Vec<Vector>> = Vec::with_capacity(d + 1);
    let mut acc: Vec<Vector> = Vec::new();
    for basis in &vstar_bases {
        acc.extend(basis.iter().cloned());
        star_prefix.push(subspace::span_basis(&acc));
    }
    let mut suffix: Vec<Vec<Vector>> = vec![Vec::new(); d + 1];
    let mut acc: Vec<Vector> = Vec::new();
    for i in (0..=d).rev() {
        acc.extend(v_bases[i].iter().cloned());
        suffix[i] = subspace::span_basis(&acc);
    }

    let u_bases: Vec<Vec<Vector>> = (0..=d)
        .map(|i| subspace::intersection(&star_prefix[i], &suffix[i]))
        .collect();

    // dim U_i = ρ_i, and the U_i sum directly to the whole space.
    let rho = pair.shape().rho();
    for (i, basis) in u_bases.iter().enumerate() {
        if basis.len() != rho[i] {
            return Err(Error::InternalInvariantViolation(format!(
                "dim U_{i} = {} but the shape entry is {}",
                basis.len(),
                rho[i]
            )));
        }
    }
    let all: Vec<Vector> = u_bases.iter().flatten().cloned().collect();
    if subspace::dim(&all) != n {
        return Err(Error::InternalInvariantViolation(
            "split subspaces do not sum directly to the whole space".into(),
        ));
    }

    // (A − θ_i I) U_i ⊆ U_{i+1} and (A* − θ*_i I) U_i ⊆ U_{i−1}.
    for i in 0..=d {
        let raise = pair.a() - &identity.scale(&theta[i]);
        let lower = pair.astar() - &identity.scale(&theta_star[i]);
        for u in &u_bases[i] {
            let up = raise.matvec(u);
            let ok_up = if i == d {
                vec_is_zero(&up)
            } else {
                subspace::contains(&u_bases[i + 1], &up)
            };
            if !ok_up {
                return Err(Error::InternalInvariantViolation(format!(
                    "(A - θ_{i}) U_{i} not contained in U_{}",
                    i + 1
                )));
            }
            let down = lower.matvec(u);
            let ok_down = if i == 0 {
                vec_is_zero(&down)
            } else {
                subspace::contains(&u_bases[i - 1], &down)
            };
            if !ok_down {
                return Err(Error::InternalInvariantViolation(format!(
                    "(A* - θ*_{i}) U_{i} not contained in U_{}",
                    i.wrapping_sub(1)
                )));
            }
        }
    }

    Ok(SplitData {
        theta: theta.to_vec(),
        theta_star: theta_star.to_vec(),
        u_bases,
    })
}

/// The split sequence ζ_0..ζ_d; requires dim U_0 = 1.
pub fn split_sequence(
    pair: &TdPair,
    theta: &[Scalar],
    theta_star: &[Scalar],
) -> Result<Vec<Scalar>> {
    let split = split_decomposition(pair, theta, theta_star)?;
    split_sequence_from(pair, &split)
}

fn split_sequence_from(pair: &TdPair, split: &SplitData) -> Result<Vec<Scalar>> {
    if split.u_bases[0].len() != 1 {
        return Err(Error::Rho0NotOne {
            dim: split.u_bases[0].len(),
        });
    }
    let d = pair.diameter();
    let n = pair.dim();
    let identity = Matrix::identity(n);
    let u0 = &split.u_bases[0][0];
    let mut zeta = vec![Scalar::one()];
    // Lowering-phase images (A−θ_{i−1})···(A−θ_0) u0 built incrementally.
    let mut raised = u0.clone();
    for i in 1..=d {
        raised = (pair.a() - &identity.scale(&split.theta[i - 1])).matvec(&raised);
        let mut v = raised.clone();
        for j in (1..=i).rev() {
            v = (pair.astar() - &identity.scale(&split.theta_star[j])).matvec(&v);
        }
        let factor = proportionality_factor(u0, &v).ok_or_else(|| {
            Error::InternalInvariantViolation(format!(
                "operator string did not preserve the line U_0 at step {i}"
            ))
        })?;
        zeta.push(factor);
    }
    Ok(zeta)
}

/// Parameter array for an explicit choice of standard orderings.
pub fn parameter_array_for(
    pair: &TdPair,
    theta: &[Scalar],
    theta_star: &[Scalar],
) -> Result<ParameterArray> {
    let zeta = split_sequence(pair, theta, theta_star)?;
    Ok(ParameterArray {
        theta: theta.to_vec(),
        theta_star: theta_star.to_vec(),
        zeta,
    })
}

/// Parameter array for the canonical ordering choice: the first standard
/// ordering of A and the reversal of the first standard ordering of A*.
/// For a Krawtchouk-type pair this is exactly the convention d−2i / 2i−d
/// fixed by the Drinfel'd polynomial.
pub fn parameter_array(pair: &TdPair) -> Result<ParameterArray> {
    let theta = pair.standard_orderings().theta[0].clone();
    let theta_star = pair.standard_orderings().theta_star[1].clone();
    parameter_array_for(pair, &theta, &theta_star)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{leonard_krawtchouk, onsager_tensor, ConstructionSpec};
    use crate::linalg::scalar::{frac, int};
    use crate::linalg::subspace;

    fn k1a(a: i64) -> TdPair {
        leonard_krawtchouk(1, &int(a)).unwrap()
    }

    #[test]
    fn split_subspaces_of_k12() {
        let pair = k1a(2);
        let split = split_decomposition(&pair, &[int(1), int(-1)], &[int(-1), int(1)]).unwrap();
        assert!(subspace::equal(&split.u_bases[0], &[vec![int(-2), int(1)]]));
        assert!(subspace::equal(&split.u_bases[1], &[vec![int(1), int(-1)]]));
    }

    #[test]
    fn split_of_point_pair_is_the_whole_space() {
        let pair = leonard_krawtchouk(0, &int(2)).unwrap();
        let split = split_decomposition(&pair, &[int(0)], &[int(0)]).unwrap();
        assert_eq!(split.u_dims(), vec![1]);
    }

    #[test]
    fn split_dims_of_tensor_pair() {
        let pair = onsager_tensor(&ConstructionSpec::parse("1:2,1:3").unwrap()).unwrap();
        let kr = pair.krawtchouk_orderings().unwrap();
        let split = split_decomposition(&pair, &kr.theta, &kr.theta_star).unwrap();
        assert_eq!(split.u_dims(), vec![1, 2, 1]);
    }

    #[test]
    fn split_partial_sums_interpolate_the_flags() {
        // U_0+···+U_i = V*_0+···+V*_i and U_i+···+U_d = V_i+···+V_d.
        let pair = onsager_tensor(&ConstructionSpec::parse("1:2,1:3").unwrap()).unwrap();
        let kr = pair.krawtchouk_orderings().unwrap();
        let split = split_decomposition(&pair, &kr.theta, &kr.theta_star).unwrap();
        let d = pair.diameter();
        for i in 0..=d {
            let u_prefix: Vec<_> = split.u_bases[..=i].iter().flatten().cloned().collect();
            let vstar_prefix: Vec<_> = kr.theta_star[..=i]
                .iter()
                .flat_map(|t| pair.eigen_astar().eigenspace_for(t).unwrap().to_vec())
                .collect();
            assert!(subspace::equal(&u_prefix, &vstar_prefix));
            let u_suffix: Vec<_> = split.u_bases[i..].iter().flatten().cloned().collect();
            let v_suffix: Vec<_> = kr.theta[i..]
                .iter()
                .flat_map(|t| pair.eigen_a().eigenspace_for(t).unwrap().to_vec())
                .collect();
            assert!(subspace::equal(&u_suffix, &v_suffix));
        }
    }

    #[test]
    fn split_sequence_of_k12_and_k13() {
        let zeta = split_sequence(&k1a(2), &[int(1), int(-1)], &[int(-1), int(1)]).unwrap();
        assert_eq!(zeta, vec![int(1), frac(9, 2)]);
        let zeta = split_sequence(&k1a(3), &[int(1), int(-1)], &[int(-1), int(1)]).unwrap();
        assert_eq!(zeta, vec![int(1), frac(16, 3)]);
    }

    #[test]
    fn split_sequence_starts_at_one_for_any_orderings() {
        let pair = onsager_tensor(&ConstructionSpec::parse("1:2,1:3").unwrap()).unwrap();
        let ord = pair.standard_orderings().clone();
        for theta in &ord.theta {
            for theta_star in &ord.theta_star {
                let zeta = split_sequence(&pair, theta, theta_star).unwrap();
                assert_eq!(zeta[0], int(1));
            }
        }
    }

    #[test]
    fn parameter_array_of_k12() {
        let pa = parameter_array(&k1a(2)).unwrap();
        assert_eq!(pa.theta, vec![int(1), int(-1)]);
        assert_eq!(pa.theta_star, vec![int(-1), int(1)]);
        assert_eq!(pa.zeta, vec![int(1), frac(9, 2)]);
    }

    #[test]
    fn parameter_array_of_point_pair() {
        let pa = parameter_array(&leonard_krawtchouk(0, &int(2)).unwrap()).unwrap();
        assert_eq!(pa.theta, vec![int(0)]);
        assert_eq!(pa.theta_star, vec![int(0)]);
        assert_eq!(pa.zeta, vec![int(1)]);
    }

    #[test]
    fn non_standard_ordering_is_rejected() {
        let pair = onsager_tensor(&ConstructionSpec::parse("1:2,1:3").unwrap()).unwrap();
        let bad = vec![int(0), int(2), int(-2)];
        assert!(matches!(
            split_decomposition(&pair, &bad, &[int(-2), int(0), int(2)]),
            Err(Error::BadParameter(_))
        ));
    }
}
