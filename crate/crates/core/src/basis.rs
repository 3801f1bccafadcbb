//! Monomial bases of coinvariant-type quotients: the Artin and descent bases,
//! the charge-monomial set `C_μ`, the shuffle set `D_μ`, and the index set
//! of the antisymmetrized bases.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catabolism::ctype;
use crate::charge::{charge, charge_word, descent_word, ExponentVector};
use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};
use crate::perm::{all_permutations, rsk_inverse, Permutation};
use crate::qpoly::QPolynomial;
use crate::tableau::{enumerate_all_syt, enumerate_syt, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Artin,
    Descent,
    Charge,
    Shuffle,
}

/// A deduplicated set of exponent vectors of a fixed length, kept in
/// increasing [`descent_compare`] order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialSet {
    pub kind: BasisKind,
    pub n: usize,
    monomials: Vec<ExponentVector>,
    /// `degree_counts[d]` is the number of members of total degree `d`.
    degree_counts: Vec<usize>,
}

impl MonomialSet {
    pub fn new<I: IntoIterator<Item = ExponentVector>>(kind: BasisKind, n: usize, members: I) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut monomials = Vec::new();
        for m in members {
            if m.len() != n {
                return Err(Error::SizeMismatch { left: m.len(), right: n });
            }
            if seen.insert(m.clone()) {
                monomials.push(m);
            }
        }
        monomials.sort_by(|a, b| descent_cmp(a, b));
        let mut degree_counts = Vec::new();
        for m in &monomials {
            let d: usize = m.iter().sum();
            if degree_counts.len() <= d {
                degree_counts.resize(d + 1, 0);
            }
            degree_counts[d] += 1;
        }
        Ok(MonomialSet { kind, n, monomials, degree_counts })
    }

    pub fn monomials(&self) -> &[ExponentVector] {
        &self.monomials
    }

    pub fn degree_counts(&self) -> &[usize] {
        &self.degree_counts
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, m: &[usize]) -> bool {
        self.monomials.binary_search_by(|x| descent_cmp(x, m)).is_ok()
    }

    pub fn to_set(&self) -> BTreeSet<ExponentVector> {
        self.monomials.iter().cloned().collect()
    }
}

/// Exponent vectors with `a_i < i`; `n!` of them.
pub fn artin_basis(n: usize) -> MonomialSet {
    let mut out = Vec::new();
    let mut a = vec![0; n];
    loop {
        out.push(a.clone());
        // Odometer with digit i running over 0..=i (0-based).
        let Some(i) = (0..n).rev().find(|&i| a[i] < i) else { break };
        a[i] += 1;
        a[i + 1..].iter_mut().for_each(|x| *x = 0);
    }
    MonomialSet::new(BasisKind::Artin, n, out).expect("fixed length")
}

/// The descent monomials `g_w`, one per permutation.
pub fn descent_basis(n: usize) -> MonomialSet {
    MonomialSet::new(BasisKind::Descent, n, all_permutations(n).iter().map(descent_word)).expect("fixed length")
}

/// All interleavings of `a` and `b`, deduplicated.
fn shuffle_pair(a: &[usize], b: &[usize], out: &mut BTreeSet<Vec<usize>>) {
    fn rec(a: &[usize], b: &[usize], prefix: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if a.is_empty() || b.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(a);
            w.extend_from_slice(b);
            out.insert(w);
            return;
        }
        prefix.push(a[0]);
        rec(&a[1..], b, prefix, out);
        prefix.pop();
        prefix.push(b[0]);
        rec(a, &b[1..], prefix, out);
        prefix.pop();
    }
    rec(a, b, &mut Vec::new(), out);
}

/// `Sh(z1, ..., zl)`: the set of all interleavings of the words.
pub fn shuffle_set(words: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let mut acc: BTreeSet<Vec<usize>> = BTreeSet::from([Vec::new()]);
    for z in words {
        let mut next = BTreeSet::new();
        for a in &acc {
            shuffle_pair(a, z, &mut next);
        }
        acc = next;
    }
    acc
}

/// `Sh'(z1, ..., zl) = Sh(rev z1, ..., rev zl)`.
pub fn reverse_shuffle_set(words: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let rev: Vec<Vec<usize>> = words.iter().map(|z| z.iter().rev().copied().collect()).collect();
    shuffle_set(&rev)
}

/// `D_μ`: the union of `Sh(z1, ..., zl)` over all tuples with `z_i` in `D_{μ_i}`.
pub fn cc_shuffle_basis(mu: &Partition) -> MonomialSet {
    let mut acc: BTreeSet<Vec<usize>> = BTreeSet::from([Vec::new()]);
    for &part in mu.parts() {
        let block = descent_basis(part);
        let next: BTreeSet<Vec<usize>> = acc
            .par_iter()
            .map(|a| {
                let mut local = BTreeSet::new();
                for z in block.monomials() {
                    shuffle_pair(a, z, &mut local);
                }
                local
            })
            .reduce(BTreeSet::new, |mut x, y| {
                x.extend(y);
                x
            });
        acc = next;
    }
    MonomialSet::new(BasisKind::Shuffle, mu.size(), acc).expect("fixed length")
}

/// Standard tableaux `P` of size `n` with `ctype(Pᵗ) ⊵ μᵗ`, in enumeration order.
pub fn qualifying_tableaux(mu: &Partition) -> Vec<Tableau> {
    let target = mu.transpose();
    enumerate_all_syt(mu.size())
        .into_par_iter()
        .filter(|p| {
            let c = ctype(&p.transpose()).expect("SYT");
            c.dominates(&target).expect("same size")
        })
        .collect()
}

/// `C_μ = {cw(w) : ctype(P(w)ᵗ) ⊵ μᵗ}`, materialized per insertion tableau.
pub fn charge_basis(mu: &Partition) -> MonomialSet {
    let n = mu.size();
    let qualifying = qualifying_tableaux(mu);
    let expected: u128 = qualifying.iter().map(|p| p.shape().count_syt()).sum();
    let words: Vec<Vec<ExponentVector>> = qualifying
        .par_iter()
        .map(|p| {
            enumerate_syt(&p.shape()).iter().map(|q| charge_word(&rsk_inverse(p, q).expect("same shape"))).collect()
        })
        .collect();
    let set = MonomialSet::new(BasisKind::Charge, n, words.into_iter().flatten()).expect("fixed length");
    assert_eq!(set.len() as u128, expected, "charge words of distinct permutations collided");
    set
}

/// `sum q^deg` over the members.
pub fn hilbert_series(s: &MonomialSet) -> QPolynomial {
    QPolynomial::new(s.degree_counts().iter().map(|&c| c as i64).collect())
}

fn descent_cmp(a: &[usize], b: &[usize]) -> Ordering {
    let sort_desc = |v: &[usize]| {
        let mut s = v.to_vec();
        s.sort_unstable_by(|x, y| y.cmp(x));
        s
    };
    sort_desc(a).cmp(&sort_desc(b)).then_with(|| a.cmp(b))
}

/// Descent order: compare the decreasing rearrangements lexicographically,
/// then the vectors themselves.
pub fn descent_compare(a: &[usize], b: &[usize]) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch { left: a.len(), right: b.len() });
    }
    Ok(descent_cmp(a, b))
}

/// Whether every γ-block of `cw(w)` has pairwise distinct labels, i.e. the
/// antisymmetrizer does not kill `x^{cw(w)}`.
pub fn survives_antisymmetrizer(w: &Permutation, gamma: &Composition) -> bool {
    let cw = charge_word(w);
    let mut start = 0;
    gamma.parts().iter().all(|&len| {
        let block = &cw[start..start + len];
        start += len;
        let distinct: HashSet<_> = block.iter().collect();
        distinct.len() == len
    })
}

/// Sorts each γ-block of `w` into increasing order by adjacent swaps that keep
/// every value's charge label.
pub fn sort_gamma(w: &Permutation, gamma: &Composition) -> Result<Permutation> {
    if gamma.size() != w.len() {
        return Err(Error::SizeMismatch { left: w.len(), right: gamma.size() });
    }
    if !survives_antisymmetrizer(w, gamma) {
        return Err(Error::VanishingAntisymmetrization(format!("cw({w}) repeats a label inside a block of {gamma}")));
    }
    let block = gamma.block_of_positions();
    let mut cur = w.clone();
    loop {
        let v = cur.as_slice();
        let swap = (1..v.len()).find(|&i| block[i - 1] == block[i] && v[i - 1] > v[i]);
        let Some(i) = swap else { break };
        // Distinct labels rule out v[i-1] == v[i] + 1, which would share a label.
        debug_assert_ne!(v[i - 1], v[i] + 1);
        cur = cur.swap_adjacent(i);
    }
    Ok(cur)
}

/// One element of the antisymmetric index set, with its RSK witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntisymEntry {
    pub w: Permutation,
    pub p: Tableau,
    pub q: Tableau,
    pub charge: usize,
    pub charge_word: ExponentVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntisymIndexSet {
    pub mu: Partition,
    pub gamma: Composition,
    /// Sorted by `w`.
    pub entries: Vec<AntisymEntry>,
}

impl AntisymIndexSet {
    pub fn permutations(&self) -> Vec<Permutation> {
        self.entries.iter().map(|e| e.w.clone()).collect()
    }

    /// `sum q^charge(w)`.
    pub fn graded_count(&self) -> QPolynomial {
        QPolynomial::from_degrees(self.entries.iter().map(|e| e.charge))
    }
}

/// All `w` with `ctype(P(w)ᵗ) ⊵ μᵗ` and `des(Q(w))` inside the partial sums of γ.
pub fn antisym_index_set(mu: &Partition, gamma: &Composition) -> Result<AntisymIndexSet> {
    if mu.size() != gamma.size() {
        return Err(Error::SizeMismatch { left: mu.size(), right: gamma.size() });
    }
    let allowed: BTreeSet<usize> = gamma.partial_sums().into_iter().collect();
    let mut entries = Vec::new();
    for p in qualifying_tableaux(mu) {
        for q in enumerate_syt(&p.shape()) {
            if !q.descent_set().expect("SYT").is_subset(&allowed) {
                continue;
            }
            let w = rsk_inverse(&p, &q).expect("same shape");
            entries.push(AntisymEntry { charge: charge(&w), charge_word: charge_word(&w), w, p: p.clone(), q });
        }
    }
    entries.sort_by(|a, b| a.w.cmp(&b.w));
    Ok(AntisymIndexSet { mu: mu.clone(), gamma: gamma.clone(), entries })
}
