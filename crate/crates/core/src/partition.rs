//! Integer partitions and compositions.
//!
//! Partitions are stored without trailing zeros. Operations that need a
//! fixed length (dominance, box counts outside leading columns) pad with
//! zeros on the fly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Sorts and drops zeros; any finite multiset of sizes is a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, or the empty partition when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `result[j] = #{i : self[i] > j}` (0-based columns).
    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Dominance order: every prefix sum of `self` is at least the
    /// corresponding prefix sum of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.size(), right: other.size() });
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Number of boxes outside the first `k` columns.
    pub fn boxes_outside_columns(&self, k: usize) -> usize {
        self.0.iter().map(|&p| p.saturating_sub(k)).sum()
    }

    /// Partwise sum, padding the shorter partition with zeros.
    pub fn partwise_sum(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition((0..len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Whether adding one box in row `row` (0-based) keeps a partition.
    pub fn can_add_box(&self, row: usize) -> bool {
        match row {
            0 => true,
            r if r <= self.len() => self.0[r - 1] > self.part(r),
            _ => false,
        }
    }

    pub(crate) fn add_box(&mut self, row: usize) {
        debug_assert!(self.can_add_box(row));
        if row == self.0.len() {
            self.0.push(1);
        } else {
            self.0[row] += 1;
        }
    }

    /// Number of standard Young tableaux of this shape (hook length formula).
    pub fn count_syt(&self) -> u128 {
        let n = self.size() as u128;
        let conj = self.transpose();
        let mut num: u128 = (1..=n).product();
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.part(j) - i - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        num /= hooks;
        num
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

/// A finite sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().all(|&p| p > 0) {
            Ok(Composition(parts))
        } else {
            Err(Error::InvalidComposition(parts))
        }
    }

    /// `(1, 1, ..., 1)` of length `n`.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `{γ1, γ1+γ2, ..., γ1+...+γ(l-1)}`: the allowed descent positions.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for &p in &self.0[..self.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Block index (0-based) of each position 1..=n.
    pub fn block_of_positions(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(b, &len)| std::iter::repeat_n(b, len)).collect()
    }

    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Vec<usize> {
        c.0
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// Parses `"3,1"` (parentheses and whitespace tolerated).
fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let trimmed = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if trimmed.trim().is_empty() {
        return Ok(Vec::new());
    }
    trimmed.split(',').map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}")))).collect()
}

/// All partitions of `n`, in lexicographically increasing order of their part
/// sequences: `(1,1,1,1) < (2,1,1) < (2,2) < (3,1) < (4)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in 1..=max.min(remaining) {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n`, in lexicographically increasing order.
pub fn enumerate_compositions(n: usize) -> Vec<Composition> {
    fn rec(remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for p in 1..=remaining {
            prefix.push(p);
            rec(remaining - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(p(&[1, 1, 1]).transpose(), p(&[3]));
        assert_eq!(p(&[3, 3]).transpose(), p(&[2, 2, 2]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])).unwrap());
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])).unwrap());
        let sum = p(&[1, 1, 1]).partwise_sum(&p(&[1, 1, 1]));
        assert_eq!(sum, p(&[2, 2, 2]));
        assert!(p(&[2, 2, 2]).dominates(&sum).unwrap());
        assert!(matches!(p(&[2]).dominates(&p(&[1])), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Composition::new(vec![2, 0, 1]).is_err());
        assert!("3,x".parse::<Partition>().is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("(2, 2)".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert_eq!(p(&[3, 1]).to_string(), "(3,1)");
        let c: Composition = "1,2".parse().unwrap();
        assert_eq!(c.partial_sums(), vec![1]);
        assert_eq!(c.block_of_positions(), vec![0, 1, 1]);
    }

    #[test]
    fn enumeration_counts_and_order() {
        let counts: Vec<usize> = (0..=10).map(|n| enumerate_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let four = enumerate_partitions(4);
        assert_eq!(four.first().unwrap(), &p(&[1, 1, 1, 1]));
        assert_eq!(four.last().unwrap(), &p(&[4]));
        assert!(four.windows(2).all(|w| w[0] < w[1]));
        for n in 1..=8 {
            assert_eq!(enumerate_compositions(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn dominance_is_a_partial_order_and_reversed_by_transpose() {
        for n in 1..=10 {
            let parts = enumerate_partitions(n);
            for a in &parts {
                assert!(a.dominates(a).unwrap());
                for b in &parts {
                    let ab = a.dominates(b).unwrap();
                    let ba = b.dominates(a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    assert_eq!(ab, b.transpose().dominates(&a.transpose()).unwrap());
                    if n <= 7 {
                        for c in &parts {
                            if ab && b.dominates(c).unwrap() {
                                assert!(a.dominates(c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(p(&[2, 1]).count_syt(), 2);
        assert_eq!(p(&[3, 2, 1]).count_syt(), 16);
        assert_eq!(p(&[4, 4]).count_syt(), 14);
    }

    #[test]
    fn box_counts() {
        let mu = p(&[3, 1]);
        assert_eq!(mu.n_statistic(), 1);
        assert_eq!(p(&[2, 1]).n_statistic(), 1);
        assert_eq!(mu.boxes_outside_columns(0), 4);
        assert_eq!(mu.boxes_outside_columns(1), 2);
        assert_eq!(mu.boxes_outside_columns(3), 0);
    }
}
