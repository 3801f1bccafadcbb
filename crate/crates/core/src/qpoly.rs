//! Polynomials in a single variable `q` with integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// `coeffs[d]` is the coefficient of `q^d`. Trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct QPolynomial {
    coeffs: Vec<i64>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn one() -> Self {
        QPolynomial::new(vec![1])
    }

    /// `c q^d`.
    pub fn monomial(c: i64, d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        QPolynomial::new(coeffs)
    }

    /// `[n]_q! = prod_{i=1..n} (1 + q + ... + q^(i-1))`.
    pub fn q_factorial(n: usize) -> Self {
        (1..=n).fold(QPolynomial::one(), |acc, i| acc * QPolynomial::new(vec![1; i]))
    }

    /// Builds `sum q^d` over the given degrees.
    pub fn from_degrees<I: IntoIterator<Item = usize>>(degrees: I) -> Self {
        let mut coeffs = Vec::new();
        for d in degrees {
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] += 1;
        }
        QPolynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `q^d`, zero past the degree.
    pub fn coeff(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    pub fn scale(&self, c: i64) -> Self {
        QPolynomial::new(self.coeffs.iter().map(|&x| x * c).collect())
    }
}

impl From<Vec<i64>> for QPolynomial {
    fn from(v: Vec<i64>) -> Self {
        QPolynomial::new(v)
    }
}

impl From<QPolynomial> for Vec<i64> {
    fn from(p: QPolynomial) -> Self {
        p.coeffs
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), 0);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        *self = QPolynomial::new(std::mem::take(&mut self.coeffs));
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(mut self, rhs: QPolynomial) -> QPolynomial {
        self += &rhs;
        self
    }
}

impl Neg for QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        self.scale(-1)
    }
}

impl Sub for QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: QPolynomial) -> QPolynomial {
        self + (-rhs)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(out)
    }
}

impl std::iter::Sum for QPolynomial {
    fn sum<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::zero(), |acc, p| acc + p)
    }
}

/// Renders as `1 + 3q + 5q^2 - q^4`.
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (d, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}")?,
            }
            match d {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = QPolynomial::new(vec![1, 1]);
        assert_eq!(&a * &a, QPolynomial::new(vec![1, 2, 1]));
        assert_eq!(a.clone() - a.clone(), QPolynomial::zero());
        assert_eq!(QPolynomial::new(vec![0, 0]).degree(), None);
        assert_eq!(QPolynomial::monomial(3, 2).coeffs(), &[0, 0, 3]);
        assert_eq!(QPolynomial::q_factorial(3).coeffs(), &[1, 2, 2, 1]);
        assert_eq!(QPolynomial::q_factorial(4).eval(1), 24);
        assert_eq!(QPolynomial::from_degrees([0, 2, 2]).coeffs(), &[1, 0, 2]);
    }

    #[test]
    fn display() {
        assert_eq!(QPolynomial::new(vec![1, 3, 5, 3]).to_string(), "1 + 3q + 5q^2 + 3q^3");
        assert_eq!(QPolynomial::new(vec![0, -1, 0, 2]).to_string(), "-q + 2q^3");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn serde_trims() {
        let p: QPolynomial = serde_json::from_str("[0,1,0]").unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[0,1]");
    }
}
