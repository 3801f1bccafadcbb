//! Sparse multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponents of `x1..xn`.
pub type Monomial = Vec<u32>;

/// Term orders with variable priority `x_n > ... > x_1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Grevlex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                // With x1 the smallest variable, a smaller x1 exponent wins first.
                da.cmp(&db)
                    .then_with(|| a.iter().zip(b).find(|(x, y)| x != y).map_or(Ordering::Equal, |(x, y)| y.cmp(x)))
            }
            MonomialOrder::Lex => a.iter().rev().cmp(b.iter().rev()),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => Err(Error::Parse(format!("unknown monomial order {s:?}; expected grevlex or lex"))),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
        })
    }
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// `b / a`, assuming `a` divides `b`.
pub fn quotient(b: &[u32], a: &[u32]) -> Monomial {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

pub fn degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

/// A polynomial in `x1..xn`. Terms are kept strictly decreasing in the
/// polynomial's order, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MVPolynomial {
    n: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, BigRational)>,
}

impl MVPolynomial {
    pub fn zero(n: usize, order: MonomialOrder) -> Self {
        MVPolynomial { n, order, terms: Vec::new() }
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(
        n: usize,
        order: MonomialOrder,
        terms: I,
    ) -> Self {
        let mut v: Vec<(Monomial, BigRational)> = terms.into_iter().collect();
        assert!(v.iter().all(|(m, _)| m.len() == n), "monomial length must equal the variable count");
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, BigRational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        MVPolynomial { n, order, terms: out }
    }

    /// `x^exps` with coefficient 1.
    pub fn monomial(exps: &[usize], order: MonomialOrder) -> Self {
        let m = exps.iter().map(|&e| e as u32).collect();
        MVPolynomial { n: exps.len(), order, terms: vec![(m, BigRational::one())] }
    }

    pub fn constant(n: usize, order: MonomialOrder, c: BigRational) -> Self {
        MVPolynomial::from_terms(n, order, [(vec![0; n], c)])
    }

    /// `x_i`, 1-based.
    pub fn variable(n: usize, order: MonomialOrder, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        MVPolynomial::monomial(&e, order)
    }

    /// `e_d` in the variables of `subset` (1-based indices).
    pub fn elementary(n: usize, order: MonomialOrder, d: usize, subset: &[usize]) -> Self {
        fn rec(subset: &[usize], d: usize, cur: &mut Monomial, out: &mut Vec<(Monomial, BigRational)>) {
            if d == 0 {
                out.push((cur.clone(), BigRational::one()));
                return;
            }
            if subset.len() < d {
                return;
            }
            cur[subset[0] - 1] += 1;
            rec(&subset[1..], d - 1, cur, out);
            cur[subset[0] - 1] -= 1;
            rec(&subset[1..], d, cur, out);
        }
        let mut out = Vec::new();
        rec(subset, d, &mut vec![0; n], &mut out);
        MVPolynomial::from_terms(n, order, out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Terms in decreasing order.
    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn coeff(&self, m: &[u32]) -> BigRational {
        self.terms
            .binary_search_by(|(x, _)| self.order.cmp(m, x))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| BigRational::zero())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| degree(&w[0].0) == degree(&w[1].0))
    }

    /// The same polynomial with terms ordered by `order`.
    pub fn reorder(&self, order: MonomialOrder) -> Self {
        MVPolynomial::from_terms(self.n, order, self.terms.iter().cloned())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return MVPolynomial::zero(self.n, self.order);
        }
        MVPolynomial {
            n: self.n,
            order: self.order,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// `self - c * m * g`, merging in one pass.
    pub fn sub_scaled_shifted(&self, c: &BigRational, m: &[u32], g: &MVPolynomial) -> Self {
        let order = self.order;
        let shifted = g.terms.iter().map(|(gm, gc)| {
            let e: Monomial = gm.iter().zip(m).map(|(a, b)| a + b).collect();
            (e, -(gc * c))
        });
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().cloned().peekable();
        let mut b = shifted.peekable();
        loop {
            let next = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => a.next().expect("peeked"),
                (None, Some(_)) => b.next().expect("peeked"),
                (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                    Ordering::Greater => a.next().expect("peeked"),
                    Ordering::Less => b.next().expect("peeked"),
                    Ordering::Equal => {
                        let (m, x) = a.next().expect("peeked");
                        let (_, y) = b.next().expect("peeked");
                        let s = x + y;
                        if s.is_zero() {
                            continue;
                        }
                        (m, s)
                    }
                },
            };
            out.push(next);
        }
        MVPolynomial { n: self.n, order, terms: out }
    }

    pub fn add(&self, other: &MVPolynomial) -> Self {
        self.sub_scaled_shifted(&-BigRational::one(), &vec![0; self.n], other)
    }

    pub fn sub(&self, other: &MVPolynomial) -> Self {
        self.sub_scaled_shifted(&BigRational::one(), &vec![0; self.n], other)
    }

    pub fn mul(&self, other: &MVPolynomial) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                terms.push((a.iter().zip(b).map(|(i, j)| i + j).collect(), x * y));
            }
        }
        MVPolynomial::from_terms(self.n, self.order, terms)
    }

    /// Substitutes `x_i -> x_{sigma(i)}`; `sigma` lists 0-based images.
    pub fn act(&self, sigma: &[usize]) -> Self {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; self.n];
            for (i, &x) in m.iter().enumerate() {
                e[sigma[i]] = x;
            }
            (e, c.clone())
        });
        MVPolynomial::from_terms(self.n, self.order, terms)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &[u32]) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

/// Renders as `x2*x4^2 - 3/2*x1 + 1`, terms in decreasing order.
impl fmt::Display for MVPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let is_const = m.iter().all(|&e| e == 0);
            if is_const {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}
