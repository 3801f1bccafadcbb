//! Rank certification of candidate bases in `R_λ = Q[x] / I_λ`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};
use std::time::Duration;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::antisym::apply_antisymmetrizer;
use super::groebner::GroebnerBasis;
use super::mvpoly::{degree, MVPolynomial, Monomial, MonomialOrder};
use super::tanisaki::tanisaki_groebner;
use crate::basis::{antisym_index_set, BasisKind, MonomialSet};
use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};
use crate::symfun::{e_coeff_combinatorial, hall_inner_product, SymBasis, SymmetricFunction};

/// Largest `n` for which Gröbner computations run without opting in.
pub const DEFAULT_GROEBNER_MAX_N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyOptions {
    pub order: MonomialOrder,
    /// Allows `n = 6`.
    pub groebner_n6: bool,
    /// Wall-clock limit for each Gröbner basis computation.
    pub budget: Option<Duration>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { order: MonomialOrder::Grevlex, groebner_n6: false, budget: None }
    }
}

impl CertifyOptions {
    pub fn check_size(&self, n: usize) -> Result<()> {
        let max = if self.groebner_n6 { 6 } else { DEFAULT_GROEBNER_MAX_N };
        if n > max {
            let hint = if n == 6 { " (pass the n = 6 opt-in to allow it)" } else { "" };
            return Err(Error::Precondition(format!("Gröbner path is limited to n <= {max}, got n = {n}{hint}")));
        }
        Ok(())
    }
}

/// `R_λ` with its Gröbner basis and standard monomials.
#[derive(Debug)]
pub struct QuotientRing {
    pub ideal: Partition,
    pub gb: GroebnerBasis,
    standard: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl QuotientRing {
    pub fn new(ideal: &Partition, opts: &CertifyOptions) -> Result<QuotientRing> {
        opts.check_size(ideal.size())?;
        let gb = tanisaki_groebner(ideal, opts.order, opts.budget)?;
        let standard = gb.standard_monomials()?;
        let index = standard.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(QuotientRing { ideal: ideal.clone(), gb, standard, index })
    }

    /// Shared instance per `(λ, order)`.
    pub fn cached(ideal: &Partition, opts: &CertifyOptions) -> Result<Arc<QuotientRing>> {
        type Cache = RwLock<HashMap<(Partition, MonomialOrder), Arc<QuotientRing>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        opts.check_size(ideal.size())?;
        let cache = CACHE.get_or_init(Default::default);
        let key = (ideal.clone(), opts.order);
        if let Some(r) = cache.read().expect("cache lock").get(&key) {
            return Ok(Arc::clone(r));
        }
        let ring = Arc::new(QuotientRing::new(ideal, opts)?);
        Ok(Arc::clone(cache.write().expect("cache lock").entry(key).or_insert(ring)))
    }

    pub fn n(&self) -> usize {
        self.ideal.size()
    }

    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.standard
    }

    pub fn dimension(&self) -> usize {
        self.standard.len()
    }

    /// Standard monomial counts by degree.
    pub fn graded_dimension(&self) -> Vec<usize> {
        graded_counts(self.standard.iter().map(|m| degree(m) as usize))
    }

    /// Coordinates of the normal form of `p` over the standard monomials.
    pub fn coordinates(&self, p: &MVPolynomial) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.standard.len()];
        for (m, c) in self.gb.normal_form(p).terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    /// Exact rank of the images of homogeneous polynomials, per degree.
    pub fn graded_ranks(&self, polys: &[MVPolynomial]) -> Vec<usize> {
        let mut by_degree: Vec<Vec<Vec<BigRational>>> = Vec::new();
        let coords: Vec<(usize, Vec<BigRational>)> = polys
            .par_iter()
            .filter(|p| !p.is_zero())
            .map(|p| {
                assert!(p.is_homogeneous(), "graded rank needs homogeneous input");
                (degree(p.leading_monomial().expect("nonzero")) as usize, self.coordinates(p))
            })
            .collect();
        for (d, v) in coords {
            if by_degree.len() <= d {
                by_degree.resize(d + 1, Vec::new());
            }
            by_degree[d].push(v);
        }
        let mut ranks: Vec<usize> = by_degree.par_iter().map(|rows| exact_rank(rows)).collect();
        while ranks.last() == Some(&0) {
            ranks.pop();
        }
        ranks
    }
}

fn graded_counts<I: IntoIterator<Item = usize>>(degrees: I) -> Vec<usize> {
    let mut counts = Vec::new();
    for d in degrees {
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    counts
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn exact_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            for j in col + 1..cols {
                let v = (&m[i][j] * &m[rank][col] - &m[i][col] * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub kind: BasisKind,
    /// The candidate set is tested as a basis of `R_ideal`.
    pub ideal: Partition,
    pub candidates: usize,
    pub dimension: usize,
    pub rank: usize,
    pub graded_ranks: Vec<usize>,
    pub graded_dimension: Vec<usize>,
    pub pass: bool,
}

/// Tests `monomials` as a basis of `R_{μᵗ}`: pass iff the rank equals both
/// the number of candidates and the quotient dimension.
pub fn certify_basis(monomials: &MonomialSet, mu: &Partition, opts: &CertifyOptions) -> Result<BasisReport> {
    if monomials.n != mu.size() {
        return Err(Error::SizeMismatch { left: monomials.n, right: mu.size() });
    }
    certify_monomials_in(monomials, &mu.transpose(), opts)
}

/// Tests `monomials` as a basis of `R_ideal`.
pub fn certify_monomials_in(monomials: &MonomialSet, ideal: &Partition, opts: &CertifyOptions) -> Result<BasisReport> {
    let ring = QuotientRing::cached(ideal, opts)?;
    let polys: Vec<MVPolynomial> =
        monomials.monomials().iter().map(|m| MVPolynomial::monomial(m, opts.order)).collect();
    let graded_ranks = ring.graded_ranks(&polys);
    let rank = graded_ranks.iter().sum();
    let dimension = ring.dimension();
    Ok(BasisReport {
        kind: monomials.kind,
        ideal: ideal.clone(),
        candidates: monomials.len(),
        dimension,
        rank,
        graded_ranks,
        graded_dimension: ring.graded_dimension(),
        pass: rank == monomials.len() && rank == dimension,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntisymReport {
    pub mu: Partition,
    pub gamma: Composition,
    pub ideal: Partition,
    /// `N_γ x^{cw(w)}` for each index permutation `w`, as text.
    pub polynomials: Vec<String>,
    pub words: Vec<String>,
    pub candidates: usize,
    pub rank: usize,
    pub graded_ranks: Vec<usize>,
    /// `⟨e_γ, h_{μᵗ}⟩`.
    pub expected_dimension: usize,
    /// Coefficients of the combinatorial `⟨e_γ, H̃_{μᵗ}⟩`.
    pub expected_graded: Vec<usize>,
    /// Rank of `N_γ` applied to every standard monomial: the true dimension of `N_γ R_{μᵗ}`.
    pub ambient_rank: usize,
    pub ambient_graded: Vec<usize>,
    pub pass: bool,
}

pub fn antisymmetrized_basis(
    mu: &Partition,
    gamma: &Composition,
    order: MonomialOrder,
) -> Result<Vec<(String, MVPolynomial)>> {
    let set = antisym_index_set(mu, gamma)?;
    set.entries
        .iter()
        .map(|e| {
            let x = MVPolynomial::monomial(&e.charge_word, order);
            Ok((e.w.to_string(), apply_antisymmetrizer(&x, gamma)?))
        })
        .collect()
}

/// Tests `{N_γ x^{cw(w)}}` as a basis of `N_γ R_{μᵗ}`.
pub fn certify_antisym_basis(mu: &Partition, gamma: &Composition, opts: &CertifyOptions) -> Result<AntisymReport> {
    if mu.size() != gamma.size() {
        return Err(Error::SizeMismatch { left: mu.size(), right: gamma.size() });
    }
    let ideal = mu.transpose();
    let ring = QuotientRing::cached(&ideal, opts)?;
    let basis = antisymmetrized_basis(mu, gamma, opts.order)?;
    let polys: Vec<MVPolynomial> = basis.iter().map(|(_, p)| p.clone()).collect();
    let graded_ranks = ring.graded_ranks(&polys);
    let rank = graded_ranks.iter().sum();

    let ambient: Vec<MVPolynomial> = ring
        .standard_monomials()
        .iter()
        .map(|m| {
            let exps: Vec<usize> = m.iter().map(|&e| e as usize).collect();
            apply_antisymmetrizer(&MVPolynomial::monomial(&exps, opts.order), gamma)
        })
        .collect::<Result<_>>()?;
    let ambient_graded = ring.graded_ranks(&ambient);
    let ambient_rank = ambient_graded.iter().sum();

    let e = SymmetricFunction::basis_element(SymBasis::E, &gamma.sorted());
    let h = SymmetricFunction::basis_element(SymBasis::H, &ideal);
    let expected_dimension = hall_inner_product(&e, &h)?.eval(1) as usize;
    let expected_graded: Vec<usize> = e_coeff_combinatorial(mu, gamma)?.coeffs().iter().map(|&c| c as usize).collect();

    let pass = rank == polys.len()
        && rank == expected_dimension
        && rank == ambient_rank
        && graded_ranks == expected_graded
        && ambient_graded == expected_graded;
    Ok(AntisymReport {
        mu: mu.clone(),
        gamma: gamma.clone(),
        ideal,
        polynomials: basis.iter().map(|(_, p)| p.to_string()).collect(),
        words: basis.into_iter().map(|(w, _)| w).collect(),
        candidates: polys.len(),
        rank,
        graded_ranks,
        expected_dimension,
        expected_graded,
        ambient_rank,
        ambient_graded,
        pass,
    })
}
