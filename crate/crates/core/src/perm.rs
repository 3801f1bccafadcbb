//! Permutations in one-line notation and the RSK correspondence (row insertion).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::Tableau;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &x in &letters {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(letters));
            }
            seen[x] = true;
        }
        Ok(Permutation(letters))
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<usize>) -> Self {
        Permutation(letters)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// `n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// 1-based access.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    pub fn reverse(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// 0-based position of each value; index 0 unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len() + 1];
        for (i, &x) in self.0.iter().enumerate() {
            pos[x] = i;
        }
        pos
    }

    /// `{i : w_i > w_(i+1)}`, 1-based.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        (1..self.len()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    pub fn inv(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&y| y < w[i]).count()).sum()
    }

    /// `(P(w), Q(w))` by row insertion.
    pub fn rsk(&self) -> (Tableau, Tableau) {
        let mut p = Tableau::empty();
        let mut q_rows: Vec<Vec<usize>> = Vec::new();
        for (step, &x) in self.0.iter().enumerate() {
            let (r, _) = p.row_insert(x);
            if r == q_rows.len() {
                q_rows.push(Vec::new());
            }
            q_rows[r].push(step + 1);
        }
        (p, Tableau::from_rows_unchecked(q_rows))
    }

    pub fn insertion_tableau(&self) -> Tableau {
        crate::tableau::insertion_tableau(&self.0)
    }

    /// Swaps the letters at 1-based positions `i` and `i+1`.
    pub fn swap_adjacent(&self, i: usize) -> Permutation {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Permutation(v)
    }
}

/// Inverse RSK: the permutation whose insertion and recording tableaux are `p` and `q`.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<Permutation> {
    if !p.is_standard() || !q.is_standard() {
        return Err(Error::NotStandard);
    }
    if p.shape() != q.shape() {
        return Err(Error::InvalidTableau(format!("shapes differ: {} vs {}", p.shape(), q.shape())));
    }
    let n = p.size();
    let mut rows = p.rows().to_vec();
    let q_rows = q.rows_of_values();
    let mut out = vec![0; n];
    for step in (1..=n).rev() {
        let r = q_rows[step];
        // The recorded cell is the end of row r; reverse-bump downward.
        let mut x = rows[r].pop().expect("recorded cell present");
        for below in (0..r).rev() {
            let row = &mut rows[below];
            let c = row.iter().rposition(|&y| y < x).expect("reverse bump target exists");
            std::mem::swap(&mut row[c], &mut x);
        }
        if rows[r].is_empty() {
            rows.pop();
        }
        out[step - 1] = x;
    }
    Ok(Permutation(out))
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![Permutation(cur.clone())];
    while next_permutation(&mut cur) {
        out.push(Permutation(cur.clone()));
    }
    out
}

/// Advances `v` to the next permutation in lexicographic order; false at the last.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Parses a word: comma-separated if a comma is present, otherwise one digit per letter.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',').map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}")))).collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad letter {c:?} in {s:?}")))
            })
            .collect()
    }
}

/// Formats a word without separators when every letter is a single digit.
pub fn format_word(w: &[usize]) -> String {
    if w.iter().all(|&x| x < 10) {
        w.iter().map(|x| x.to_string()).collect()
    } else {
        w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_word(s)?)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.0))
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::enumerate_syt;

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn basic_statistics() {
        assert_eq!(w("3516247").reverse(), w("7426153"));
        assert_eq!(w("1234").inverse(), w("1234"));
        assert_eq!(w("21").inverse(), w("21"));
        assert_eq!(w("312").maj(), 1);
        assert_eq!(w("312").inv(), 2);
        assert_eq!(w("2413").descent_set(), BTreeSet::from([2]));
    }

    #[test]
    fn maj_is_mahonian_on_s4() {
        let mut counts = vec![0; 7];
        for p in all_permutations(4) {
            counts[p.maj()] += 1;
        }
        assert_eq!(counts, vec![1, 3, 5, 6, 5, 3, 1]);
    }

    #[test]
    fn rsk_examples() {
        let (p, q) = w("2134").rsk();
        assert_eq!(p, t(&[&[1, 3, 4], &[2]]));
        assert_eq!(q, t(&[&[1, 3, 4], &[2]]));
        let (p, q) = w("1234").rsk();
        assert_eq!((p.rows().len(), q.rows().len()), (1, 1));
        let (p, q) = w("4321").rsk();
        assert_eq!(p, t(&[&[1], &[2], &[3], &[4]]));
        assert_eq!(q, t(&[&[1], &[2], &[3], &[4]]));
    }

    #[test]
    fn rsk_inverse_examples() {
        assert_eq!(rsk_inverse(&t(&[&[1, 3, 4], &[2]]), &t(&[&[1, 3, 4], &[2]])).unwrap(), w("2134"));
        assert_eq!(rsk_inverse(&t(&[&[1, 2, 3]]), &t(&[&[1, 2, 3]])).unwrap(), w("123"));
        assert!(rsk_inverse(&t(&[&[1, 2, 3]]), &t(&[&[1, 2], &[3]])).is_err());
        assert!(rsk_inverse(&t(&[&[1, 3], &[2]]), &Tableau::new(vec![vec![2, 1], vec![3]]).unwrap()).is_err());
    }

    #[test]
    fn rsk_facts_exhaustive() {
        for n in 0..=6 {
            let mut fibre: std::collections::HashMap<Tableau, usize> = Default::default();
            for p in all_permutations(n) {
                let (ptab, qtab) = p.rsk();
                assert!(ptab.is_standard() && qtab.is_standard());
                assert_eq!(rsk_inverse(&ptab, &qtab).unwrap(), p);
                assert_eq!(qtab.descent_set().unwrap(), p.descent_set());
                assert_eq!(p.reverse().insertion_tableau(), ptab.transpose());
                *fibre.entry(ptab).or_default() += 1;
            }
            for (tab, count) in fibre {
                assert_eq!(count as u128, tab.shape().count_syt());
            }
        }
    }

    #[test]
    fn q_tableau_descents_cover_all_syt() {
        for shape in crate::partition::enumerate_partitions(5) {
            for tab in enumerate_syt(&shape) {
                let p = rsk_inverse(&tab, &tab).unwrap();
                assert_eq!(p.rsk().1, tab);
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(parse_word("211001").unwrap(), vec![2, 1, 1, 0, 0, 1]);
        assert_eq!(parse_word("10,2,1").unwrap(), vec![10, 2, 1]);
        assert!(parse_word("1x").is_err());
        assert!("1,1".parse::<Permutation>().is_err());
        assert_eq!(Permutation::new((1..=10).collect()).unwrap().to_string(), "1,2,3,4,5,6,7,8,9,10");
        assert_eq!(w("312").to_string(), "312");
    }

    #[test]
    fn lexicographic_enumeration() {
        let all = all_permutations(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
    }
}
