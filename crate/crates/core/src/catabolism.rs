//! Catabolism, m-catabolism, catabolizability type, and Blasiak's insertion
//! algorithm on cocharge words.

use crate::charge::{cocharge_word, is_cocharge_word};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::tableau::{insertion_tableau, SkewTableau, Tableau};

/// `K(T) = P(w' w)` where `rw(T) = w w'` and `w'` is the bottom row.
pub fn catabolize(t: &Tableau) -> Tableau {
    let Some((bottom, upper)) = t.rows().split_first() else {
        return Tableau::empty();
    };
    let mut word = bottom.clone();
    word.extend(upper.iter().rev().flatten().copied());
    insertion_tableau(&word)
}

/// Catabolism by jeu de taquin: the bottom row goes to the top-left, the
/// upper rows shift right past it, and the skew filling is rectified.
pub fn catabolize_jdt(t: &Tableau) -> Tableau {
    let Some((bottom, upper)) = t.rows().split_first() else {
        return Tableau::empty();
    };
    let shift = bottom.len();
    let mut offsets = vec![shift; upper.len()];
    offsets.push(0);
    let mut rows = upper.to_vec();
    rows.push(bottom.clone());
    SkewTableau::new(offsets, rows).expect("shifted pieces form a skew tableau").rectify()
}

/// Largest `m` such that the first `m` bottom-row entries are the `m`
/// smallest entries of `t`. For a standard tableau this is the largest `m`
/// with `1..=m` in the bottom row.
pub fn d(t: &Tableau) -> usize {
    let Some(bottom) = t.rows().first() else {
        return 0;
    };
    let mut all: Vec<usize> = t.rows().iter().flatten().copied().collect();
    all.sort_unstable();
    bottom.iter().zip(&all).take_while(|(a, b)| a == b).count()
}

/// `Cat_m(T)`: drop the first `m` bottom-row entries, then insert the rest
/// of the bottom row followed by the reading word of the upper rows.
pub fn m_catabolize(t: &Tableau, m: usize) -> Result<Tableau> {
    let lambda1 = t.rows().first().map_or(0, Vec::len);
    if m > lambda1 {
        return Err(Error::Precondition(format!("m = {m} exceeds the bottom row length {lambda1}")));
    }
    if d(t) < m {
        return Err(Error::Precondition(format!("bottom row does not hold the {m} smallest entries")));
    }
    Ok(m_catabolize_unchecked(t, m))
}

fn m_catabolize_unchecked(t: &Tableau, m: usize) -> Tableau {
    let Some((bottom, upper)) = t.rows().split_first() else {
        return Tableau::empty();
    };
    let mut word = bottom[m..].to_vec();
    word.extend(upper.iter().rev().flatten().copied());
    insertion_tableau(&word)
}

fn check_standard(t: &Tableau) -> Result<()> {
    if t.is_standard() {
        Ok(())
    } else {
        Err(Error::NotStandard)
    }
}

/// `ctype(T)` from the definition: the increments of `d` along `T, K(T), K(K(T)), ...`.
pub fn ctype_direct(t: &Tableau) -> Result<Partition> {
    check_standard(t)?;
    let n = t.size();
    let mut parts = Vec::new();
    let mut current = t.clone();
    let mut prev = 0;
    while prev < n {
        let dv = d(&current);
        parts.push(dv - prev);
        prev = dv;
        if prev < n {
            current = catabolize(&current);
        }
    }
    Partition::new(parts)
}

/// `ctype(T)` by iterating maximal m-catabolisms.
pub fn ctype_cat(t: &Tableau) -> Result<Partition> {
    check_standard(t)?;
    let mut parts = Vec::new();
    let mut current = t.clone();
    while !current.is_empty() {
        let m = d(&current);
        parts.push(m);
        current = m_catabolize_unchecked(&current, m);
    }
    Partition::new(parts)
}

/// `ctype(T)`; computed by maximal m-catabolism.
pub fn ctype(t: &Tableau) -> Result<Partition> {
    ctype_cat(t)
}

/// `ctype(w) := ctype(P(w))`, computed by Blasiak insertion on `cc(w)`.
pub fn ctype_of_permutation(w: &Permutation) -> Partition {
    blasiak_unchecked(&cocharge_word(w)).expect("cocharge words terminate").shape
}

/// Outcome of Blasiak insertion on a cocharge word of length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlasiakOutput {
    pub shape: Partition,
    /// `T_w`: the 1-based position read when each box was created, rows bottom to top.
    pub filling: Tableau,
    /// `passes[i-1]` is the number of times position `i` was read, including the final read.
    pub passes: Vec<usize>,
    /// `rows[i-1]` is the 1-based row receiving position `i`.
    pub rows: Vec<usize>,
}

/// Blasiak's catabolism insertion with recording filling.
///
/// The word is read right to left cyclically with deleted letters skipped.
/// Reading letter `a` adds a box in row `a+1` (1-based) when that keeps a
/// partition, deleting the letter; otherwise the letter is incremented.
pub fn blasiak_ctype(z: &[usize]) -> Result<BlasiakOutput> {
    if !is_cocharge_word(z) {
        // Run anyway so that a terminating non-cocharge input still fails loudly.
        blasiak_unchecked(z)?;
        return Err(Error::NotCochargeWord(z.to_vec()));
    }
    blasiak_unchecked(z)
}

pub(crate) fn blasiak_unchecked(z: &[usize]) -> Result<BlasiakOutput> {
    let n = z.len();
    let max = z.iter().copied().max().unwrap_or(0);
    let bound = n * (max + n);
    let mut letters: Vec<Option<usize>> = z.iter().copied().map(Some).collect();
    let mut passes = vec![0; n];
    let mut rows_of = vec![0; n];
    let mut shape = Partition::empty();
    let mut filling: Vec<Vec<usize>> = Vec::new();
    let mut remaining = n;
    let mut reads = 0;
    let mut p = n;
    while remaining > 0 {
        if reads >= bound {
            return Err(Error::NonTermination(bound));
        }
        p = if p == 0 { n - 1 } else { p - 1 };
        let Some(a) = letters[p] else { continue };
        reads += 1;
        passes[p] += 1;
        if shape.can_add_box(a) {
            shape.add_box(a);
            if a == filling.len() {
                filling.push(Vec::new());
            }
            filling[a].push(p + 1);
            rows_of[p] = a + 1;
            letters[p] = None;
            remaining -= 1;
        } else {
            letters[p] = Some(a + 1);
        }
    }
    Ok(BlasiakOutput { shape, filling: Tableau::from_rows_unchecked(filling), passes, rows: rows_of })
}

/// Subword of `z` at the positions in column `j`, rows `1..=r` of `filling`
/// (all 1-based), taken in increasing position order.
pub fn column_subword(filling: &Tableau, z: &[usize], j: usize, r: usize) -> Result<Vec<usize>> {
    let width = filling.rows().first().map_or(0, Vec::len);
    if j == 0 || j > width {
        return Err(Error::OutOfRange(format!("column {j} not in 1..={width}")));
    }
    let height = filling.column(j - 1).count();
    if r == 0 || r > height {
        return Err(Error::OutOfRange(format!("row {r} not in 1..={height}")));
    }
    let mut idx: Vec<usize> = filling.column(j - 1).take(r).copied().collect();
    idx.sort_unstable();
    idx.iter()
        .map(|&i| z.get(i - 1).copied().ok_or_else(|| Error::OutOfRange(format!("index {i} beyond word"))))
        .collect()
}

/// Swaps positions `i, i+1` of `w` (requires `w_i + 1 < w_(i+1)`) and reports
/// whether the catabolizability type weakly increased in dominance.
pub fn adjacent_swap_check(w: &Permutation, i: usize) -> Result<(Permutation, bool)> {
    if i == 0 || i >= w.len() {
        return Err(Error::OutOfRange(format!("swap position {i} for length {}", w.len())));
    }
    if w.at(i) + 1 >= w.at(i + 1) {
        return Err(Error::Precondition(format!("need w_{i} + 1 < w_{}", i + 1)));
    }
    let swapped = w.swap_adjacent(i);
    let up = ctype_of_permutation(&swapped).dominates(&ctype_of_permutation(w))?;
    Ok((swapped, up))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;
    use crate::tableau::enumerate_all_syt;

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn word(s: &str) -> Vec<usize> {
        crate::perm::parse_word(s).unwrap()
    }

    #[test]
    fn catabolism_example() {
        let tab = t(&[&[1, 3, 4], &[2, 5], &[6]]);
        let k = catabolize(&tab);
        assert_eq!(k, t(&[&[1, 2, 4, 5], &[3, 6]]));
        assert_eq!(catabolize_jdt(&tab), k);
        assert_eq!(crate::charge::tableau_cocharge(&tab), 8);
        assert_eq!(crate::charge::tableau_cocharge(&k), 5);
        let row = t(&[&[1, 2, 3]]);
        assert_eq!(catabolize(&row), row);
    }

    #[test]
    fn m_catabolism_example() {
        let tab = t(&[&[1, 2, 3, 7], &[4, 5], &[6, 8]]);
        assert_eq!(m_catabolize(&tab, 3).unwrap(), t(&[&[4, 5], &[6, 8], &[7]]));
        assert!(m_catabolize(&tab, 4).is_err());
        assert!(m_catabolize(&tab, 5).is_err());
        assert_eq!(m_catabolize(&t(&[&[1, 2, 3]]), 3).unwrap(), Tableau::empty());
    }

    #[test]
    fn ctype_examples() {
        let tab = t(&[&[1, 2, 3, 7], &[4, 5], &[6, 8]]);
        assert_eq!(ctype_direct(&tab).unwrap(), p(&[3, 2, 1, 1, 1]));
        assert_eq!(ctype_cat(&tab).unwrap(), p(&[3, 2, 1, 1, 1]));
        assert_eq!(ctype(&t(&[&[1, 2, 3, 4]])).unwrap(), p(&[4]));
        assert_eq!(ctype(&t(&[&[1], &[2], &[3]])).unwrap(), p(&[1, 1, 1]));
        assert_eq!(ctype(&Tableau::new(vec![vec![2, 1]]).unwrap()), Err(Error::NotStandard));
    }

    #[test]
    fn blasiak_example() {
        let out = blasiak_ctype(&word("211001")).unwrap();
        assert_eq!(out.shape, p(&[2, 2, 2]));
        assert_eq!(out.filling, Tableau::from_rows_unchecked(vec![vec![5, 4], vec![3, 2], vec![1, 6]]));
        let zeros = blasiak_ctype(&[0, 0, 0, 0]).unwrap();
        assert_eq!(zeros.shape, p(&[4]));
        assert_eq!(zeros.filling.rows(), &[vec![4, 3, 2, 1]]);
    }

    #[test]
    fn blasiak_guards() {
        assert_eq!(blasiak_ctype(&word("02")), Err(Error::NonTermination(2 * (2 + 2))));
        assert!(blasiak_ctype(&word("1")).is_err());
    }

    #[test]
    fn column_subword_examples() {
        let z = word("211001");
        let out = blasiak_ctype(&z).unwrap();
        assert_eq!(column_subword(&out.filling, &z, 1, 3).unwrap(), word("210"));
        assert_eq!(column_subword(&out.filling, &z, 2, 3).unwrap(), word("101"));
        assert_eq!(column_subword(&out.filling, &z, 1, 1).unwrap(), word("0"));
        assert!(column_subword(&out.filling, &z, 3, 1).is_err());
        assert!(column_subword(&out.filling, &z, 1, 4).is_err());
    }

    #[test]
    fn swap_check_preconditions() {
        let w: Permutation = "2431".parse().unwrap();
        assert!(adjacent_swap_check(&w, 3).is_err());
        let w: Permutation = "1324".parse().unwrap();
        assert!(adjacent_swap_check(&w, 2).is_err());
        let w: Permutation = "1324".parse().unwrap();
        assert!(adjacent_swap_check(&w, 1).unwrap().1);
    }

    #[test]
    fn three_routes_agree_small() {
        for n in 1..=6 {
            for tab in enumerate_all_syt(n) {
                let direct = ctype_direct(&tab).unwrap();
                assert_eq!(ctype_cat(&tab).unwrap(), direct);
                let w = Permutation::new(tab.reading_word()).unwrap();
                assert_eq!(ctype_of_permutation(&w), direct);
                assert_eq!(catabolize_jdt(&tab), catabolize(&tab));
            }
        }
    }

    #[test]
    fn blasiak_row_lemma_small() {
        for w in all_permutations(6) {
            let z = cocharge_word(&w);
            let out = blasiak_ctype(&z).unwrap();
            for i in 0..z.len() {
                assert_eq!(out.passes[i] + z[i], out.rows[i]);
            }
        }
    }
}
