//! Generators of the Tanisaki ideal `I_μ`.
//!
//! `I_μ` is generated by the partial elementary symmetric functions `e_d(S)`
//! for nonempty `S ⊆ {x1..xn}` and `|S| - p_{n-|S|}(μ) < d ≤ |S|`. Two
//! readings of `p_k` are in circulation; see `docs/tanisaki.md`.

use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::groebner::GroebnerBasis;
use super::mvpoly::{MVPolynomial, MonomialOrder};
use crate::error::Result;
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TanisakiConvention {
    /// `p_k = μᵗ_{k+1} + μᵗ_{k+2} + ...`, the boxes outside the first `k` columns.
    #[default]
    OutsideFirstK,
    /// `p_k` = the boxes outside the first `n-k` columns.
    OutsideFirstNMinusK,
}

pub fn p_k(mu: &Partition, k: usize, convention: TanisakiConvention) -> usize {
    match convention {
        TanisakiConvention::OutsideFirstK => mu.boxes_outside_columns(k),
        TanisakiConvention::OutsideFirstNMinusK => mu.boxes_outside_columns(mu.size().saturating_sub(k)),
    }
}

/// A generator `e_d(S)`; `subset` holds 1-based variable indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorIndex {
    pub subset: Vec<usize>,
    pub d: usize,
}

fn subset_of_mask(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

fn is_generator(n: usize, size: usize, d: usize, mu: &Partition, convention: TanisakiConvention) -> bool {
    // d > |S| - p_{n-|S|}, written without underflow.
    (1..=size).contains(&d) && d + p_k(mu, n - size, convention) > size
}

/// All `(S, d)` pairs of the definition, ordered by `d`, then `|S|`, then `S`.
pub fn generator_indices(mu: &Partition, convention: TanisakiConvention) -> Vec<GeneratorIndex> {
    let n = mu.size();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        for d in 1..=size {
            if is_generator(n, size, d, mu, convention) {
                out.push(GeneratorIndex { subset: subset_of_mask(mask, n), d });
            }
        }
    }
    out.sort_by(|a, b| (a.d, a.subset.len(), &a.subset).cmp(&(b.d, b.subset.len(), &b.subset)));
    out
}

/// Drops `(S, d)` when both `(S ∪ {x}, d)` and `(S, d-1)` with `d-1 ≥ 1` are
/// generators, since `e_d(S) = e_d(S ∪ {x}) - x e_{d-1}(S)`.
pub fn pruned_generator_indices(mu: &Partition, convention: TanisakiConvention) -> Vec<GeneratorIndex> {
    let n = mu.size();
    generator_indices(mu, convention)
        .into_iter()
        .filter(|g| {
            let size = g.subset.len();
            let implied = size < n
                && g.d >= 2
                && is_generator(n, size + 1, g.d, mu, convention)
                && is_generator(n, size, g.d - 1, mu, convention);
            !implied
        })
        .collect()
}

pub fn generators_from_indices(n: usize, order: MonomialOrder, indices: &[GeneratorIndex]) -> Vec<MVPolynomial> {
    indices.iter().map(|g| MVPolynomial::elementary(n, order, g.d, &g.subset)).collect()
}

/// Pruned generators of `I_μ` under the adopted convention.
pub fn tanisaki_generators(mu: &Partition, order: MonomialOrder) -> Vec<MVPolynomial> {
    generators_from_indices(mu.size(), order, &pruned_generator_indices(mu, TanisakiConvention::OutsideFirstK))
}

/// Gröbner basis of `I_μ`.
pub fn tanisaki_groebner(mu: &Partition, order: MonomialOrder, budget: Option<Duration>) -> Result<GroebnerBasis> {
    let gens = tanisaki_generators(mu, order);
    if gens.is_empty() {
        return GroebnerBasis::compute(&[MVPolynomial::zero(mu.size(), order)], order, budget);
    }
    GroebnerBasis::compute(&gens, order, budget)
}
