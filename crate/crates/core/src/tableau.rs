//! Young tableaux in French convention: `rows[0]` is the bottom row, and
//! columns grow upward.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};

/// A filling of a (possibly transient, non-partition) diagram, stored
/// bottom-to-top. Serialized as an array of rows, bottom row first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau<T = usize> {
    rows: Vec<Vec<T>>,
}

impl<T> Tableau<T> {
    /// Builds a tableau and checks that row lengths form a partition.
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let t = Tableau { rows };
        if t.has_partition_shape() {
            Ok(t)
        } else {
            Err(Error::InvalidTableau("row lengths must weakly decrease bottom-to-top".into()))
        }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<T>>) -> Self {
        Tableau { rows }
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<T>> {
        self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn has_partition_shape(&self) -> bool {
        self.rows.iter().all(|r| !r.is_empty()) && self.rows.windows(2).all(|w| w[0].len() >= w[1].len())
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&T> {
        self.rows.get(row).and_then(|r| r.get(col))
    }

    /// Entries of column `col`, bottom to top.
    pub fn column(&self, col: usize) -> impl Iterator<Item = &T> {
        self.rows.iter().map_while(move |r| r.get(col))
    }
}

impl<T: Clone> Tableau<T> {
    /// Row words concatenated from the top row down to the bottom row.
    pub fn reading_word(&self) -> Vec<T> {
        self.rows.iter().rev().flat_map(|r| r.iter().cloned()).collect()
    }

    /// Swaps rows and columns: the entry at `(r, c)` moves to `(c, r)`.
    pub fn transpose(&self) -> Tableau<T> {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width).map(|c| self.column(c).cloned().collect()).collect();
        Tableau { rows }
    }
}

impl<T: Ord> Tableau<T> {
    /// Rows weakly increase to the right, columns strictly increase upward.
    pub fn is_semistandard(&self) -> bool {
        if !self.has_partition_shape() {
            return false;
        }
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(above, below)| below < above));
        rows_ok && cols_ok
    }

    /// Row-inserts `x` (RSK bumping), returning the cell `(row, col)` that
    /// was added to the shape.
    pub fn row_insert(&mut self, mut x: T) -> (usize, usize) {
        let mut r = 0;
        loop {
            if r == self.rows.len() {
                self.rows.push(vec![x]);
                return (r, 0);
            }
            let row = &mut self.rows[r];
            match row.iter().position(|y| *y > x) {
                Some(c) => {
                    std::mem::swap(&mut row[c], &mut x);
                    r += 1;
                }
                None => {
                    row.push(x);
                    return (r, row.len() - 1);
                }
            }
        }
    }
}

impl Tableau<usize> {
    /// Semistandard with entries exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        if !self.is_semistandard() {
            return false;
        }
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &x in self.rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    /// Row (0-based, bottom row is 0) containing each value `1..=n`; index 0 unused.
    pub fn rows_of_values(&self) -> Vec<usize> {
        let n = self.size();
        let mut pos = vec![0; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &x in row {
                if x <= n {
                    pos[x] = r;
                }
            }
        }
        pos
    }

    /// `{i : i appears in a lower row than i+1}`.
    pub fn descent_set(&self) -> Result<BTreeSet<usize>> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        let rows = self.rows_of_values();
        Ok((1..self.size()).filter(|&i| rows[i] < rows[i + 1]).collect())
    }
}

impl<T: fmt::Display> fmt::Display for Tableau<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate().rev() {
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            if i > 0 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Insertion tableau of a word by repeated row insertion.
pub fn insertion_tableau<T: Ord + Clone>(word: &[T]) -> Tableau<T> {
    let mut t = Tableau::empty();
    for x in word {
        t.row_insert(x.clone());
    }
    t
}

/// All standard Young tableaux of shape `shape`, sorted by reading word.
pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    fn rec(remaining: &mut Vec<usize>, value: usize, acc: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        // Fill with the largest value first: place `value` in an outer corner.
        if value == 0 {
            let rows = acc.iter().map(|r| r.iter().rev().copied().collect()).collect();
            out.push(Tableau { rows });
            return;
        }
        for r in 0..remaining.len() {
            let len = remaining[r];
            if len == 0 || remaining.get(r + 1).copied().unwrap_or(0) >= len {
                continue;
            }
            remaining[r] -= 1;
            acc[r].push(value);
            rec(remaining, value - 1, acc, out);
            acc[r].pop();
            remaining[r] += 1;
        }
    }
    let mut remaining = shape.parts().to_vec();
    let mut acc = vec![Vec::new(); remaining.len()];
    let mut out = Vec::new();
    rec(&mut remaining, shape.size(), &mut acc, &mut out);
    out.sort_by_cached_key(Tableau::reading_word);
    out
}

/// All standard Young tableaux with `n` boxes, any shape, sorted by shape then reading word.
pub fn enumerate_all_syt(n: usize) -> Vec<Tableau> {
    crate::partition::enumerate_partitions(n).iter().flat_map(enumerate_syt).collect()
}

/// All semistandard tableaux of shape `shape` and content `weight`
/// (`weight[i]` copies of `i+1`), sorted by reading word.
pub fn enumerate_ssyt(shape: &Partition, weight: &Composition) -> Vec<Tableau> {
    if shape.size() != weight.size() {
        return Vec::new();
    }
    // Add the letters of each value as a horizontal strip.
    fn rec(shape: &[usize], weight: &[usize], letter: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if letter == weight.len() {
            if rows.iter().map(Vec::len).eq(shape.iter().copied()) {
                out.push(Tableau { rows: rows.clone() });
            }
            return;
        }
        let current: Vec<usize> = rows.iter().map(Vec::len).collect();
        let mut added = vec![0; shape.len()];
        strip(shape, weight, letter, &current, 0, weight[letter], &mut added, rows, out);
    }

    #[allow(clippy::too_many_arguments)]
    fn strip(
        shape: &[usize],
        weight: &[usize],
        letter: usize,
        current: &[usize],
        r: usize,
        left: usize,
        added: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if left == 0 {
            for (row, &a) in rows.iter_mut().zip(added.iter()) {
                row.extend(std::iter::repeat_n(letter + 1, a));
            }
            rec(shape, weight, letter + 1, rows, out);
            for (row, &a) in rows.iter_mut().zip(added.iter()) {
                row.truncate(row.len() - a);
            }
            return;
        }
        if r == shape.len() {
            return;
        }
        // Horizontal strip: new boxes in row r must sit above old boxes of row r-1.
        let cap_below = if r == 0 { shape[0] } else { current[r - 1] };
        let max_here = shape[r].min(cap_below) - current[r].min(shape[r].min(cap_below));
        for a in (0..=max_here.min(left)).rev() {
            added[r] = a;
            strip(shape, weight, letter, current, r + 1, left - a, added, rows, out);
        }
        added[r] = 0;
    }

    let mut rows = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    rec(shape.parts(), weight.parts(), 0, &mut rows, &mut out);
    for t in &mut out {
        t.rows.retain(|r| !r.is_empty());
    }
    out.sort_by_cached_key(Tableau::reading_word);
    out
}

/// A skew semistandard filling of `outer / inner`: row `r` occupies columns
/// `offsets[r] .. offsets[r] + rows[r].len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewTableau<T = usize> {
    pub offsets: Vec<usize>,
    pub rows: Vec<Vec<T>>,
}

impl<T: Ord + Clone> SkewTableau<T> {
    pub fn new(offsets: Vec<usize>, rows: Vec<Vec<T>>) -> Result<Self> {
        let s = SkewTableau { offsets, rows };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        if self.offsets.len() != self.rows.len() {
            return Err(Error::InvalidTableau("offsets and rows differ in length".into()));
        }
        let ends: Vec<usize> = self.offsets.iter().zip(&self.rows).map(|(o, r)| o + r.len()).collect();
        let shape_ok = self.offsets.windows(2).all(|w| w[0] >= w[1]) && ends.windows(2).all(|w| w[0] >= w[1]);
        if !shape_ok {
            return Err(Error::InvalidTableau("not a skew shape".into()));
        }
        for row in &self.rows {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau("skew rows must weakly increase".into()));
            }
        }
        for r in 1..self.rows.len() {
            for (j, above) in self.rows[r].iter().enumerate() {
                let col = self.offsets[r] + j;
                if col >= self.offsets[r - 1] && col < ends[r - 1] {
                    let below = &self.rows[r - 1][col - self.offsets[r - 1]];
                    if below >= above {
                        return Err(Error::InvalidTableau("skew columns must strictly increase".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Skew reading word: rows from top to bottom.
    pub fn reading_word(&self) -> Vec<T> {
        self.rows.iter().rev().flat_map(|r| r.iter().cloned()).collect()
    }

    /// Jeu-de-taquin rectification: repeatedly slide into an inner corner
    /// until the shape is straight.
    pub fn rectify(&self) -> Tableau<T> {
        let mut grid: Vec<Vec<Option<T>>> = self
            .offsets
            .iter()
            .zip(&self.rows)
            .map(|(&o, r)| std::iter::repeat_with(|| None).take(o).chain(r.iter().cloned().map(Some)).collect())
            .collect();
        let mut inner: Vec<usize> = self.offsets.clone();
        loop {
            // An inner corner is the last inner cell of a row whose inner part
            // strictly exceeds the one above.
            let corner =
                (0..inner.len()).rev().find(|&r| inner[r] > 0 && inner.get(r + 1).copied().unwrap_or(0) < inner[r]);
            let Some(r0) = corner else { break };
            let c0 = inner[r0] - 1;
            inner[r0] -= 1;
            let (mut r, mut c) = (r0, c0);
            loop {
                let right = grid[r].get(c + 1).and_then(|x| x.as_ref());
                let above = grid.get(r + 1).and_then(|row| row.get(c)).and_then(|x| x.as_ref());
                let take_above = match (right, above) {
                    (None, None) => break,
                    (Some(_), None) => false,
                    (None, Some(_)) => true,
                    (Some(x), Some(y)) => y <= x,
                };
                if take_above {
                    grid[r][c] = grid[r + 1][c].take();
                    r += 1;
                } else {
                    grid[r][c] = grid[r][c + 1].take();
                    c += 1;
                }
            }
            // The hole is now an outer corner: drop it.
            grid[r].truncate(c);
        }
        let rows: Vec<Vec<T>> = grid
            .into_iter()
            .map(|row| row.into_iter().map(|x| x.expect("rectified rows are filled")).collect::<Vec<T>>())
            .filter(|row| !row.is_empty())
            .collect();
        Tableau { rows }
    }
}

/// Validating wrapper around [`SkewTableau::rectify`].
pub fn jdt_rectify<T: Ord + Clone>(offsets: Vec<usize>, rows: Vec<Vec<T>>) -> Result<Tableau<T>> {
    Ok(SkewTableau::new(offsets, rows)?.rectify())
}
