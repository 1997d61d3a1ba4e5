//! Dense polynomials in `q` with unbounded integer coefficients.
//!
//! Every polynomial produced by this crate has nonnegative degree; Laurent
//! polynomials are not representable. The single `q^{-1}` shift needed by the
//! stalk-polynomial formula goes through [`QPolynomial::divide_by_q`], which
//! checks that the constant term vanishes.
//!
//! Canonical form: the coefficient vector never stores trailing zeros, and
//! the zero polynomial is the empty vector. All operations preserve this.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial in `q`; index `n` of the coefficient vector holds the
/// coefficient of `q^n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        QPolynomial::monomial(0)
    }

    /// `q^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        QPolynomial { coeffs }
    }

    /// Builds a polynomial from raw coefficients (index = exponent),
    /// normalizing to canonical form.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of the polynomial, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest exponent with nonzero coefficient, or `None` for zero.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Coefficient of `q^n` (zero beyond the stored degree).
    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Borrowed view of the coefficient vector (canonical, no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exponents whose coefficient is nonzero, in increasing order.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, _)| n)
    }

    /// Adds `c·q^n` in place.
    pub fn add_term(&mut self, n: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= n {
            self.coeffs.resize(n + 1, BigInt::zero());
        }
        self.coeffs[n] += c;
        self.trim();
    }

    /// Substitutes `q ↦ q²`: the coefficient of `q^n` moves to `q^{2n}`.
    pub fn substitute_q_squared(&self) -> QPolynomial {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); 2 * (self.coeffs.len() - 1) + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * n] = c.clone();
        }
        QPolynomial::from_coeffs(coeffs)
    }

    /// Multiplies by `q^k` (exponent shift up).
    pub fn shift_up(&self, k: usize) -> QPolynomial {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Divides by `q` (exponent shift down). Fails when the constant term is
    /// nonzero, since the result would not be a polynomial.
    pub fn divide_by_q(&self) -> Result<QPolynomial> {
        if self.is_zero() {
            return Ok(QPolynomial::zero());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm(self.coeffs[0].to_string()));
        }
        Ok(QPolynomial {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Evaluates at `q = 1`, i.e. sums the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for n in 0..len {
            coeffs.push(self.coeff(n) + rhs.coeff(n));
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "q")?,
                1 => write!(f, "{c}*q")?,
                _ if c.is_one() => write!(f, "q^{n}")?,
                _ => write!(f, "{c}*q^{n}")?,
            }
        }
        Ok(())
    }
}

// On the wire a polynomial is an array of decimal strings, index = exponent,
// so that coefficients survive arbitrary magnitude.
impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in &strings {
            let c: BigInt = s
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid integer coefficient `{s}`")))?;
            coeffs.push(c);
        }
        Ok(QPolynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_ints(coeffs)
    }

    #[test]
    fn add_basic() {
        // (1+q) + q = 1 + 2q
        assert_eq!(&p(&[1, 1]) + &p(&[0, 1]), p(&[1, 2]));
        // 0 + p = p
        assert_eq!(&QPolynomial::zero() + &p(&[3, 0, 5]), p(&[3, 0, 5]));
        // q + 0 = q
        assert_eq!(&p(&[0, 1]) + &QPolynomial::zero(), p(&[0, 1]));
    }

    #[test]
    fn add_cancellation_is_canonical() {
        let diff = &p(&[0, 1]) + &p(&[0, -1]);
        assert!(diff.is_zero());
        assert_eq!(diff.coeffs().len(), 0);
    }

    #[test]
    fn mul_basic() {
        // q * q = q^2
        assert_eq!(&p(&[0, 1]) * &p(&[0, 1]), p(&[0, 0, 1]));
        // 1 * p = p
        assert_eq!(&QPolynomial::one() * &p(&[2, 3]), p(&[2, 3]));
        // (q + q^3) * q = q^2 + q^4
        assert_eq!(&p(&[0, 1, 0, 1]) * &p(&[0, 1]), p(&[0, 0, 1, 0, 1]));
    }

    #[test]
    fn mul_degree_law() {
        let a = p(&[1, 2, 3]);
        let b = p(&[0, 0, 7, 5]);
        assert_eq!(
            (&a * &b).degree(),
            Some(a.degree().unwrap() + b.degree().unwrap())
        );
        assert!((&a * &QPolynomial::zero()).is_zero());
    }

    #[test]
    fn substitute_q_squared_examples() {
        assert_eq!(p(&[0, 1, 1]).substitute_q_squared(), p(&[0, 0, 1, 0, 1]));
        assert_eq!(QPolynomial::one().substitute_q_squared(), QPolynomial::one());
        assert_eq!(p(&[0, 0, 0, 1]).substitute_q_squared(), QPolynomial::monomial(6));
    }

    #[test]
    fn divide_by_q_examples() {
        assert_eq!(p(&[0, 0, 1, 0, 1]).divide_by_q().unwrap(), p(&[0, 1, 0, 1]));
        assert_eq!(p(&[0, 1]).divide_by_q().unwrap(), QPolynomial::one());
        assert!(matches!(
            p(&[1, 1]).divide_by_q(),
            Err(Error::NonzeroConstantTerm(_))
        ));
        assert!(QPolynomial::zero().divide_by_q().unwrap().is_zero());
    }

    #[test]
    fn serde_decimal_strings() {
        let q = p(&[0, 1, 1]);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"["0","1","1"]"#);
        let back: QPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
        // Trailing zeros on the wire are normalized away.
        let padded: QPolynomial = serde_json::from_str(r#"["1","0","0"]"#).unwrap();
        assert_eq!(padded, QPolynomial::one());
    }

    #[test]
    fn display_form() {
        assert_eq!(p(&[0, 1, 0, 1]).to_string(), "q + q^3");
        assert_eq!(p(&[2]).to_string(), "2");
        assert_eq!(QPolynomial::zero().to_string(), "0");
        assert_eq!(p(&[0, 3]).to_string(), "3*q");
    }
}
