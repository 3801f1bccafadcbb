//! Cocharge and charge words, their statistics, and the Lascoux-Schützenberger
//! charge on words with partition content.
//!
//! Words are plain `Vec<usize>`. An exponent vector of length `n` holds the
//! exponents of `x1..xn`.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::tableau::Tableau;

/// Exponents of `x1..xn`.
pub type ExponentVector = Vec<usize>;

/// `cc(w)`: 1 gets label 0, and `i+1` gets label(i) + 1 when it sits left of `i`,
/// label(i) otherwise. The word lists labels by position.
pub fn cocharge_word(w: &Permutation) -> Vec<usize> {
    let n = w.len();
    let pos = w.positions();
    let mut out = vec![0; n];
    let mut label = 0;
    for v in 1..=n {
        if v > 1 && pos[v] < pos[v - 1] {
            label += 1;
        }
        out[pos[v]] = label;
    }
    out
}

/// `cw(w) = rev(cc(rev(w)))`.
pub fn charge_word(w: &Permutation) -> Vec<usize> {
    let mut cw = cocharge_word(&w.reverse());
    cw.reverse();
    cw
}

pub fn charge(w: &Permutation) -> usize {
    charge_word(w).iter().sum()
}

pub fn cocharge(w: &Permutation) -> usize {
    cocharge_word(w).iter().sum()
}

/// Charge of a standard tableau, computed on its reading word.
pub fn tableau_charge(t: &Tableau) -> usize {
    charge(&Permutation::from_vec_unchecked(t.reading_word()))
}

pub fn tableau_cocharge(t: &Tableau) -> usize {
    cocharge(&Permutation::from_vec_unchecked(t.reading_word()))
}

/// Whether `z` is `cc(w)` for some permutation `w`: it contains a 0 and
/// every letter has an equal letter to its right, or a letter one larger
/// to its left, or is a maximum.
pub fn is_cocharge_word(z: &[usize]) -> bool {
    let Some(&max) = z.iter().max() else {
        return false;
    };
    if !z.contains(&0) {
        return false;
    }
    (0..z.len()).all(|i| {
        let x = z[i];
        x == max || z[i + 1..].contains(&x) || z[..i].contains(&(x + 1))
    })
}

/// The canonical permutation with cocharge word `z`: positions labelled `k`
/// receive the next `c_k` values, increasing left to right.
pub fn cocharge_word_inverse(z: &[usize]) -> Result<Permutation> {
    if !is_cocharge_word(z) {
        return Err(Error::NotCochargeWord(z.to_vec()));
    }
    let max = *z.iter().max().expect("nonempty");
    let mut next = vec![0; max + 2];
    for &x in z {
        next[x + 1] += 1;
    }
    for k in 1..next.len() {
        next[k] += next[k - 1];
    }
    let mut out = Vec::with_capacity(z.len());
    for &x in z {
        next[x] += 1;
        out.push(next[x]);
    }
    Ok(Permutation::from_vec_unchecked(out))
}

/// Exponent vector of `g_w = prod over descents i of x_(w1) ... x_(wi)`.
pub fn descent_word(w: &Permutation) -> ExponentVector {
    let n = w.len();
    let mut exps = vec![0; n];
    let mut suffix_descents = 0;
    // Letter at position p is counted once for each descent at or after p.
    for p in (0..n).rev() {
        if p + 1 < n && w.as_slice()[p] > w.as_slice()[p + 1] {
            suffix_descents += 1;
        }
        exps[w.as_slice()[p] - 1] = suffix_descents;
    }
    exps
}

/// Content of a word over `1..`: `content[i]` counts letter `i+1`.
fn content(word: &[usize]) -> Result<Vec<usize>> {
    let max = word.iter().copied().max().unwrap_or(0);
    if word.contains(&0) {
        return Err(Error::NonPartitionContent(Vec::new()));
    }
    let mut c = vec![0; max];
    for &x in word {
        c[x - 1] += 1;
    }
    if c.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::NonPartitionContent(c));
    }
    Ok(c)
}

/// Lascoux-Schützenberger charge of a word over `1..` whose content is the
/// partition `weight`. Standard subwords are extracted by scanning right to
/// left (cyclically) for 1, 2, 3, ...; within a subword, index(i+1) is
/// index(i) + 1 when i+1 lies to the right of i.
pub fn charge_on_content_word(word: &[usize], weight: &Partition) -> Result<usize> {
    let c = content(word)?;
    if c != weight.parts() {
        return Err(Error::NonPartitionContent(c));
    }
    let mut alive: Vec<Option<usize>> = word.iter().copied().map(Some).collect();
    let n = word.len();
    let mut total = 0;
    let mut remaining = n;
    while remaining > 0 {
        let top = alive.iter().flatten().copied().max().expect("letters remain");
        // Position of the rightmost 1.
        let mut p = (0..n).rev().find(|&i| alive[i] == Some(1)).expect("content is a partition");
        alive[p] = None;
        let mut index = 0;
        for letter in 2..=top {
            // Continue leftward from p, wrapping around at the left end.
            let mut q = p;
            let mut wrapped = false;
            loop {
                if q == 0 {
                    q = n - 1;
                    wrapped = true;
                } else {
                    q -= 1;
                }
                if alive[q] == Some(letter) {
                    break;
                }
            }
            // Having wrapped means the letter lies to the right of its predecessor.
            if wrapped {
                index += 1;
            }
            total += index;
            alive[q] = None;
            p = q;
        }
        remaining -= top;
    }
    Ok(total)
}

/// `n(weight) - charge`.
pub fn cocharge_on_content_word(word: &[usize], weight: &Partition) -> Result<usize> {
    Ok(weight.n_statistic() - charge_on_content_word(word, weight)?)
}
