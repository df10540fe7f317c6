//! Integer polynomials and rational generating functions.
//!
//! The three growth functions of PMod(0,4) with respect to `{t_a, t_b}`:
//!
//! * all elements: `h(x) = (1 + x) / (1 − 3x)`
//! * reducible elements: `r(x) = (4x + 8x²) / (1 − 3x²)`
//! * pseudo-Anosov elements: `p(x) = 4x²(1 + 3x) / ((1 − 3x)(1 − 3x²))`

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::SeriesError;

/// Dense polynomial with arbitrary-precision integer coefficients, index =
/// degree. Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial(Vec<BigInt>);

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial(Vec::new())
    }

    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        IntPolynomial(coefficients)
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coefficient(&self, degree: usize) -> BigInt {
        self.0.get(degree).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(BigInt, BigInt) -> BigInt) -> Self {
        let len = self.0.len().max(other.0.len());
        Self::new(
            (0..len)
                .map(|i| f(self.coefficient(i), other.coefficient(i)))
                .collect(),
        )
    }
}

pub fn poly_add(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    a.zip_with(b, |x, y| x + y)
}

pub fn poly_sub(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    a.zip_with(b, |x, y| x - y)
}

pub fn poly_mul(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() || b.is_zero() {
        return IntPolynomial::zero();
    }
    let mut out = vec![BigInt::zero(); a.0.len() + b.0.len() - 1];
    for (i, x) in a.0.iter().enumerate() {
        for (j, y) in b.0.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    IntPolynomial::new(out)
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        poly_add(self, rhs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        poly_sub(self, rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        poly_mul(self, rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match d {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}")?,
            }
            match d {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

/// `numerator / denominator` as a formal power series in `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
}

impl RationalGF {
    /// Panics if the denominator has a zero constant term.
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Self {
        assert!(
            !denominator.coefficient(0).is_zero(),
            "denominator must have a nonzero constant term"
        );
        RationalGF {
            numerator,
            denominator,
        }
    }

    pub fn expand(&self, terms: usize) -> Result<Vec<BigInt>, SeriesError> {
        expand(self, terms)
    }
}

/// Growth function of the whole group.
pub fn gf_h() -> RationalGF {
    RationalGF::new(IntPolynomial::from_i64(&[1, 1]), IntPolynomial::from_i64(&[1, -3]))
}

/// Growth function of the reducible elements.
pub fn gf_r() -> RationalGF {
    RationalGF::new(
        IntPolynomial::from_i64(&[0, 4, 8]),
        IntPolynomial::from_i64(&[1, 0, -3]),
    )
}

/// Growth function of the pseudo-Anosov elements.
pub fn gf_p() -> RationalGF {
    RationalGF::new(
        IntPolynomial::from_i64(&[0, 0, 4, 12]),
        poly_mul(
            &IntPolynomial::from_i64(&[1, -3]),
            &IntPolynomial::from_i64(&[1, 0, -3]),
        ),
    )
}

/// Coefficients `c_0 ..= c_terms` of the power series of `gf`.
///
/// With `D = Σ d_i x^i`, `d_0 = ±1`, the coefficients obey
/// `c_n = d_0 · (a_n − Σ_{i≥1} d_i c_{n−i})`.
pub fn expand(gf: &RationalGF, terms: usize) -> Result<Vec<BigInt>, SeriesError> {
    let d = gf.denominator.coefficients();
    let d0 = d.first().cloned().unwrap_or_default();
    if d0.abs() != BigInt::one() {
        return Err(SeriesError::NonUnitConstant(d0.to_string()));
    }
    let mut c: Vec<BigInt> = Vec::with_capacity(terms + 1);
    for n in 0..=terms {
        let mut acc = gf.numerator.coefficient(n);
        for (i, di) in d.iter().enumerate().skip(1).take(n) {
            acc -= di * &c[n - i];
        }
        // d0 is its own inverse
        c.push(acc * &d0);
    }
    Ok(c)
}

/// Outcome of checking `p = h − 1 − r` as an identity of rational functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub passed: bool,
    /// `p_num · (h_den r_den) − p_den · (h_num r_den − h_den r_den − r_num h_den)`
    pub residual: IntPolynomial,
}

pub fn gf_identity_check() -> IdentityReport {
    identity_check_with(&gf_h(), &gf_r(), &gf_p())
}

/// Cross-multiplied check of `p = h − 1 − r`; no series truncation.
pub fn identity_check_with(h: &RationalGF, r: &RationalGF, p: &RationalGF) -> IdentityReport {
    let common = &h.denominator * &r.denominator;
    let rhs_num = &(&(&h.numerator * &r.denominator) - &common) - &(&r.numerator * &h.denominator);
    let residual = &(&p.numerator * &common) - &(&p.denominator * &rhs_num);
    IdentityReport {
        passed: residual.is_zero(),
        residual,
    }
}
