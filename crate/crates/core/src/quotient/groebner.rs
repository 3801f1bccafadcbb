//! Buchberger's algorithm and normal forms over the rationals.

use std::time::{Duration, Instant};

use super::mvpoly::{degree, divides, lcm, quotient, MVPolynomial, Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// A reduced Gröbner basis: monic, sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    n: usize,
    order: MonomialOrder,
    polys: Vec<MVPolynomial>,
}

/// Fully reduces `p` by `basis`: no term of the result is divisible by a
/// leading monomial of `basis`.
fn reduce(p: &MVPolynomial, basis: &[MVPolynomial]) -> MVPolynomial {
    let mut rem = p.clone();
    // Terms of `rem` strictly above `cursor` are already irreducible.
    let mut cursor = 0;
    while cursor < rem.len() {
        let (m, c) = rem.terms()[cursor].clone();
        let divisor = basis.iter().find(|g| divides(g.leading_monomial().expect("nonzero"), &m));
        match divisor {
            Some(g) => {
                let (lm, lc) = g.leading().expect("nonzero");
                rem = rem.sub_scaled_shifted(&(c / lc), &quotient(&m, lm), g);
            }
            None => cursor += 1,
        }
    }
    rem
}

/// `(l / lt(f)) f - (l / lt(g)) g` with `l` the lcm of the leading monomials.
fn s_polynomial(f: &MVPolynomial, g: &MVPolynomial) -> MVPolynomial {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = lcm(fm, gm);
    let zero = MVPolynomial::zero(f.n(), f.order());
    zero.sub_scaled_shifted(&-fc.recip(), &quotient(&l, fm), f).sub_scaled_shifted(&gc.recip(), &quotient(&l, gm), g)
}

impl GroebnerBasis {
    /// Buchberger's algorithm with the coprime and chain criteria, treating
    /// pairs in order of increasing lcm. Fails once `budget` is exhausted.
    pub fn compute(gens: &[MVPolynomial], order: MonomialOrder, budget: Option<Duration>) -> Result<GroebnerBasis> {
        let start = Instant::now();
        let n = gens.first().map_or(0, MVPolynomial::n);
        let mut g: Vec<MVPolynomial> = Vec::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut inputs: Vec<MVPolynomial> = gens.iter().map(|p| p.reorder(order)).filter(|p| !p.is_zero()).collect();
        // Low degrees first keeps intermediate results small for homogeneous input.
        inputs
            .sort_by(|a, b| order.cmp(a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero")));
        let mut pending_inputs = inputs.into_iter();

        loop {
            if let Some(limit) = budget {
                if start.elapsed() > limit {
                    return Err(Error::TimeBudgetExceeded { millis: limit.as_millis() as u64 });
                }
            }
            // Treat the pair with the smallest lcm; inputs are fed once no pairs remain.
            let best = pairs
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| {
                    let la =
                        lcm(g[a.0].leading_monomial().expect("nonzero"), g[a.1].leading_monomial().expect("nonzero"));
                    let lb =
                        lcm(g[b.0].leading_monomial().expect("nonzero"), g[b.1].leading_monomial().expect("nonzero"));
                    order.cmp(&la, &lb).then(a.cmp(b))
                })
                .map(|(k, &p)| (k, p));
            let candidate = match best {
                Some((k, (i, j))) => {
                    pairs.swap_remove(k);
                    let (li, lj) =
                        (g[i].leading_monomial().expect("nonzero"), g[j].leading_monomial().expect("nonzero"));
                    if li.iter().zip(lj).all(|(a, b)| *a == 0 || *b == 0) {
                        continue;
                    }
                    let l = lcm(li, lj);
                    let chain = (0..g.len()).any(|k| {
                        k != i
                            && k != j
                            && divides(g[k].leading_monomial().expect("nonzero"), &l)
                            && !pairs.contains(&(i.min(k), i.max(k)))
                            && !pairs.contains(&(j.min(k), j.max(k)))
                    });
                    if chain {
                        continue;
                    }
                    s_polynomial(&g[i], &g[j])
                }
                None => match pending_inputs.next() {
                    Some(p) => p,
                    None => break,
                },
            };
            let r = reduce(&candidate, &g);
            if r.is_zero() {
                continue;
            }
            let idx = g.len();
            g.push(r.monic());
            pairs.extend((0..idx).map(|k| (k, idx)));
        }

        Ok(GroebnerBasis::interreduce(n, order, g))
    }

    fn interreduce(n: usize, order: MonomialOrder, g: Vec<MVPolynomial>) -> GroebnerBasis {
        // Drop elements whose leading monomial is divisible by another's.
        let mut minimal: Vec<MVPolynomial> = Vec::new();
        for (i, p) in g.iter().enumerate() {
            let lm = p.leading_monomial().expect("nonzero");
            let redundant = g.iter().enumerate().any(|(j, q)| {
                let lq = q.leading_monomial().expect("nonzero");
                j != i && divides(lq, lm) && (lq != lm || j < i)
            });
            if !redundant {
                minimal.push(p.clone());
            }
        }
        let reduced: Vec<MVPolynomial> = (0..minimal.len())
            .map(|i| {
                let others: Vec<MVPolynomial> =
                    minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| q.clone()).collect();
                let p = &minimal[i];
                let (lm, lc) = p.leading().expect("nonzero").clone();
                // Keep the leading term and reduce the tail.
                let tail = MVPolynomial::from_terms(n, order, p.terms()[1..].iter().cloned());
                let head = MVPolynomial::from_terms(n, order, [(lm, lc)]);
                head.add(&reduce(&tail, &others)).monic()
            })
            .collect();
        let mut polys = reduced;
        polys.sort_by(|a, b| order.cmp(a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero")));
        GroebnerBasis { n, order, polys }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn polys(&self) -> &[MVPolynomial] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.leading_monomial().expect("nonzero").clone()).collect()
    }

    /// The remainder of `p`, supported on standard monomials.
    pub fn normal_form(&self, p: &MVPolynomial) -> MVPolynomial {
        let p = if p.order() == self.order { p.clone() } else { p.reorder(self.order) };
        reduce(&p, &self.polys)
    }

    pub fn contains(&self, p: &MVPolynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Whether every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        (0..self.polys.len()).all(|i| {
            (i + 1..self.polys.len())
                .all(|j| reduce(&s_polynomial(&self.polys[i], &self.polys[j]), &self.polys).is_zero())
        })
    }

    /// Monomials divisible by no leading monomial, sorted by degree and then
    /// the term order. Fails when the quotient is infinite-dimensional.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        let lms = self.leading_monomials();
        let mut bound = vec![0u32; self.n];
        for i in 0..self.n {
            let pure = lms.iter().filter(|m| m.iter().enumerate().all(|(k, &e)| k == i || e == 0)).map(|m| m[i]).min();
            bound[i] =
                pure.ok_or_else(|| Error::Precondition(format!("quotient is infinite: no pure power of x{}", i + 1)))?;
        }
        let mut out = Vec::new();
        let mut m = vec![0u32; self.n];
        loop {
            if !lms.iter().any(|l| divides(l, &m)) {
                out.push(m.clone());
            }
            let Some(i) = (0..self.n).find(|&i| m[i] + 1 < bound[i]) else { break };
            m[i] += 1;
            m[..i].iter_mut().for_each(|x| *x = 0);
        }
        out.sort_by(|a, b| self.order.cmp(a, b));
        out.sort_by_key(|m| degree(m));
        Ok(out)
    }

    /// `counts[d]` is the number of standard monomials of degree `d`.
    pub fn graded_standard_counts(&self) -> Result<Vec<usize>> {
        let mut counts = Vec::new();
        for m in self.standard_monomials()? {
            let d = degree(&m) as usize;
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        Ok(counts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    const G: MonomialOrder = MonomialOrder::Grevlex;

    fn r(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn two_variable_coinvariants() {
        let gens = [MVPolynomial::elementary(2, G, 1, &[1, 2]), MVPolynomial::elementary(2, G, 2, &[1, 2])];
        let gb = GroebnerBasis::compute(&gens, G, None).unwrap();
        assert_eq!(gb.leading_monomials(), vec![vec![0, 1], vec![2, 0]]);
        assert_eq!(gb.standard_monomials().unwrap(), vec![vec![0, 0], vec![1, 0]]);
        let x2 = MVPolynomial::variable(2, G, 2);
        assert_eq!(gb.normal_form(&x2), MVPolynomial::variable(2, G, 1).scale(&r(-1)));
        assert!(gb.is_groebner());
        for g in &gens {
            assert!(gb.contains(g));
        }
    }

    #[test]
    fn single_generator_and_zero_ideal() {
        let x1 = MVPolynomial::variable(2, G, 1);
        let gb = GroebnerBasis::compute(std::slice::from_ref(&x1), G, None).unwrap();
        assert_eq!(gb.polys(), std::slice::from_ref(&x1));
        assert!(gb.standard_monomials().is_err());
        let empty = GroebnerBasis::compute(&[MVPolynomial::zero(2, G)], G, None).unwrap();
        assert!(empty.polys().is_empty());
        let one = MVPolynomial::monomial(&[0, 0], G);
        assert_eq!(empty.normal_form(&one), one);
    }

    #[test]
    fn full_coinvariants_have_staircase_standard_monomials() {
        for n in 1..=4 {
            for order in [G, MonomialOrder::Lex] {
                let all: Vec<usize> = (1..=n).collect();
                let gens: Vec<_> = (1..=n).map(|d| MVPolynomial::elementary(n, order, d, &all)).collect();
                let gb = GroebnerBasis::compute(&gens, order, None).unwrap();
                assert!(gb.is_groebner());
                let std = gb.standard_monomials().unwrap();
                assert_eq!(std.len(), (1..=n).product::<usize>());
                // With x_n largest, lex leading terms are x_n, x_(n-1)^2, ..., x_1^n.
                if order == MonomialOrder::Lex {
                    assert!(std.iter().all(|m| m.iter().enumerate().all(|(i, &e)| (e as usize) < n - i)));
                }
            }
        }
    }

    #[test]
    fn normal_form_is_linear_and_idempotent() {
        let all = [1, 2, 3];
        let gens: Vec<_> = (1..=3).map(|d| MVPolynomial::elementary(3, G, d, &all)).collect();
        let gb = GroebnerBasis::compute(&gens, G, None).unwrap();
        let p = MVPolynomial::from_terms(3, G, [(vec![2, 1, 0], r(3)), (vec![0, 0, 2], r(-1)), (vec![1, 0, 0], r(1))]);
        let q = MVPolynomial::from_terms(3, G, [(vec![0, 3, 0], r(2)), (vec![0, 1, 1], r(5))]);
        let np = gb.normal_form(&p);
        assert_eq!(gb.normal_form(&np), np);
        assert_eq!(gb.normal_form(&p.add(&q.scale(&r(7)))), np.add(&gb.normal_form(&q).scale(&r(7))));
    }

    #[test]
    fn budget_is_enforced() {
        let all = [1, 2, 3, 4];
        let gens: Vec<_> = (1..=4).map(|d| MVPolynomial::elementary(4, G, d, &all)).collect();
        assert!(matches!(
            GroebnerBasis::compute(&gens, G, Some(Duration::ZERO)),
            Err(Error::TimeBudgetExceeded { .. })
        ));
    }
}
