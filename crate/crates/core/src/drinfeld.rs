//! Drinfel'd polynomials of Krawtchouk-type pairs.
//!
//! With the fixed orderings θ_i = d−2i and θ*_i = 2i−d, the split sequence
//! ζ_0..ζ_d determines
//!     P(λ) = Σ_i (−1)^i ζ_i λ^i / ((i!)² 4^i).
//! P has constant coefficient 1 and is nonzero at λ = 1, and two
//! Krawtchouk-type pairs are isomorphic exactly when their P coincide.

use num::One;

use crate::constructions::{leonard_krawtchouk, ConstructionSpec};
use crate::error::{Error, Result};
use crate::linalg::poly::Poly;
use crate::linalg::scalar::{self, Scalar};
use crate::pair::{parameter_array_for, TdPair};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldPoly {
    poly: Poly,
}

impl DrinfeldPoly {
    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn at_one(&self) -> Scalar {
        self.poly.eval(&Scalar::one())
    }
}

/// Compute P from the split sequence under the fixed ordering convention.
pub fn drinfeld_poly(pair: &TdPair) -> Result<DrinfeldPoly> {
    let orderings = pair.krawtchouk_orderings().ok_or_else(|| {
        Error::BadParameter("Drinfel'd polynomial requires a Krawtchouk-type pair".into())
    })?;
    let pa = parameter_array_for(pair, &orderings.theta, &orderings.theta_star)?;
    let coeffs: Vec<Scalar> = pa
        .zeta
        .iter()
        .enumerate()
        .map(|(i, zeta)| {
            let sign = if i % 2 == 0 {
                Scalar::one()
            } else {
                -Scalar::one()
            };
            let fact = scalar::factorial(i);
            sign * zeta / (&fact * &fact * scalar::pow(&scalar::int(4), i))
        })
        .collect();
    Ok(DrinfeldPoly {
        poly: Poly::from_coeffs(coeffs),
    })
}

/// Consequences checked per instance: P(0) = 1 and P(1) ≠ 0 always; for a
/// pair generated from a factor list, P is additionally compared against
/// the product of the single-factor polynomials. That product identity is
/// recorded as a tested hypothesis, not assumed.
#[derive(Clone, Debug)]
pub struct DrinfeldReport {
    pub poly: DrinfeldPoly,
    pub constant_term_is_one: bool,
    pub value_at_one: Scalar,
    pub nonzero_at_one: bool,
    /// When provenance is known: does P equal the product of the factors'
    /// polynomials?
    pub matches_factor_product: Option<bool>,
}

impl DrinfeldReport {
    pub fn passes(&self) -> bool {
        self.constant_term_is_one && self.nonzero_at_one
    }
}

pub fn drinfeld_checks(
    pair: &TdPair,
    provenance: Option<&ConstructionSpec>,
) -> Result<DrinfeldReport> {
    let poly = drinfeld_poly(pair)?;
    let constant_term_is_one = poly.poly().coeff(0).is_one();
    let value_at_one = poly.at_one();
    let nonzero_at_one = !scalar::is_zero(&value_at_one);
    let matches_factor_product = match provenance {
        None => None,
        Some(spec) => {
            let mut product = Poly::one();
            for (d, a) in spec.factors() {
                let factor_pair = leonard_krawtchouk(*d, a)?;
                product = product.mul(drinfeld_poly(&factor_pair)?.poly());
            }
            Some(&product == poly.poly())
        }
    };
    Ok(DrinfeldReport {
        poly,
        constant_term_is_one,
        value_at_one,
        nonzero_at_one,
        matches_factor_product,
    })
}
