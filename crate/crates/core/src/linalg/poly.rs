//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored in ascending degree order. The representation is
//! canonical: empty vector for the zero polynomial, nonzero leading
//! coefficient otherwise.

use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, Zero};

use super::matrix::Matrix;
use super::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `λ`.
    pub fn lambda() -> Self {
        Poly::from_coeffs(vec![Scalar::zero(), Scalar::one()])
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) => {
                let inv = Scalar::one() / lead.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.degree().unwrap();
        let lead_inv = Scalar::one() / divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = rem[k].clone() * &lead_inv;
            if !c.is_zero() {
                quot[k - dd] = c.clone();
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k - dd + j] -= &c * b;
                }
            }
            rem.pop();
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Scalar::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Squarefree iff coprime with its derivative.
    pub fn is_squarefree(&self) -> bool {
        let g = self.gcd(&self.derivative());
        g.degree() == Some(0)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.dim();
        let mut acc = Matrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(n).scale(c);
        }
        acc
    }

    /// `(λ - r_0)(λ - r_1)···`; the empty product is 1.
    pub fn from_roots(roots: &[Scalar]) -> Poly {
        let mut acc = Poly::one();
        for r in roots {
            acc = acc.mul(&Poly::from_coeffs(vec![-r.clone(), Scalar::one()]));
        }
        acc
    }

    /// Clear denominators and divide by integer content; sign such that the
    /// leading coefficient is positive.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm_den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm_den / c.denom()))
            .collect();
        let content = ints
            .iter()
            .fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if !content.is_zero() {
            for x in ints.iter_mut() {
                *x = &*x / &content;
            }
        }
        if ints.last().unwrap().is_negative() {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
        ints
    }

    /// All rational roots with multiplicity, found by the rational-root
    /// theorem on the primitive integer form, deflating as roots are found.
    /// The second component is the (monic) rational-root-free cofactor; it is
    /// constant exactly when the polynomial splits over the rationals.
    pub fn rational_roots(&self) -> (Vec<Scalar>, Poly) {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let mut roots = Vec::new();
        let mut rem = self.monic();
        // Strip powers of λ first: root 0.
        while rem.degree().unwrap_or(0) >= 1 && rem.coeff(0).is_zero() {
            rem = rem.div_exact(&Poly::lambda()).unwrap();
            roots.push(Scalar::zero());
        }
        'outer: while rem.degree().unwrap_or(0) >= 1 {
            let ints = rem.primitive_integer_coeffs();
            let a0 = ints.first().unwrap().clone();
            let an = ints.last().unwrap().clone();
            let mut candidates = Vec::new();
            for p in divisors(&a0) {
                for q in divisors(&an) {
                    let c = Scalar::new(p.clone(), q.clone());
                    candidates.push(c.clone());
                    candidates.push(-c);
                }
            }
            candidates.sort();
            candidates.dedup();
            // Smallest in absolute value first keeps deflated coefficients small.
            candidates.sort_by_key(|a| a.abs());
            for c in candidates {
                if rem.eval(&c).is_zero() {
                    rem = rem
                        .div_exact(&Poly::from_roots(std::slice::from_ref(&c)))
                        .unwrap();
                    roots.push(c);
                    continue 'outer;
                }
            }
            break;
        }
        (roots, rem.monic())
    }
}

/// Positive divisors by trial division. Exact-arithmetic tool aimed at
/// desk-scale spectra; enormous prime constant terms will be slow, not wrong.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero(), "divisors of zero requested");
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        if (&m % &p).is_zero() {
            let mut e = 0u32;
            while (&m % &p).is_zero() {
                m /= &p;
                e += 1;
            }
            factors.push((p.clone(), e));
        }
        p += 1;
    }
    if m > BigInt::one() {
        factors.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pe = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pe);
                pe *= &p;
            }
        }
        divs = next;
    }
    divs
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl fmt::Display for Poly {
    /// Human form in the variable λ, e.g. `1 - 9/8 λ + λ^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}λ", if unit_coeff { "" } else { " " })?,
                _ => write!(f, "{}λ^{}", if unit_coeff { "" } else { " " }, i)?,
            }
        }
        Ok(())
    }
}
