//! Index-pair fillings, modified row insertion, and the chains extension of
//! Blasiak insertion that tracks a lower bound for the catabolizability type
//! of a shuffle of cocharge words.
//!
//! Pairs are `(k, i)`: the letter at 1-based position `n - i + 1` of the
//! word, read for the `k`-th time. Pairs compare lexicographically.

use serde::{Deserialize, Serialize};

use crate::catabolism::blasiak_unchecked;
use crate::charge::is_cocharge_word;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::Tableau;

pub type Pair = (usize, usize);

/// A tableau filled with index pairs, rows bottom to top.
pub type PairFilling = Tableau<Pair>;

type Cell = Option<Pair>;

/// Inserts `t` into `row` above `below`. Returns the entry that pops out, if any.
///
/// The target is the leftmost cell `c` with `below[c] <= t` that is either
/// filled with an entry `>= t` or empty (a gap left by a deleted column
/// segment, or the slot just past the end of the row). Replacing a filled
/// cell re-inserts the displaced entry further right; filling an empty cell
/// ends the insertion.
fn insert_into_row(row: &mut Vec<Cell>, below: Option<&[Cell]>, t: Pair) -> Option<Pair> {
    let fits_below = |c: usize, x: Pair| match below {
        None => true,
        Some(b) => matches!(b.get(c), Some(Some(e)) if *e <= x),
    };
    let mut cur = t;
    let mut start = 0;
    loop {
        let found =
            (start..=row.len()).find(|&c| fits_below(c, cur) && row.get(c).copied().flatten().is_none_or(|e| cur <= e));
        match found {
            Some(c) if c == row.len() => {
                row.push(Some(cur));
                return None;
            }
            Some(c) => {
                let displaced = row[c].replace(cur)?;
                cur = displaced;
                start = c + 1;
            }
            None => return Some(cur),
        }
    }
}

/// Inserts `t` into row `r` (1-based, `r >= 2`) of `filling` without
/// touching other rows. Returns the new filling and the popped entry.
pub fn modified_row_insert(filling: &PairFilling, r: usize, t: Pair) -> Result<(PairFilling, Option<Pair>)> {
    let rows = filling.rows();
    if r < 2 || r > rows.len() {
        return Err(Error::OutOfRange(format!("row {r} not in 2..={}", rows.len())));
    }
    let below: Vec<Cell> = rows[r - 2].iter().copied().map(Some).collect();
    let mut row: Vec<Cell> = rows[r - 1].iter().copied().map(Some).collect();
    let popped = insert_into_row(&mut row, Some(&below), t);
    let mut out = rows.to_vec();
    out[r - 1] = row.into_iter().map(|c| c.expect("no gaps")).collect();
    Ok((Tableau::from_rows_unchecked(out), popped))
}

/// Builds the seed filling for a shuffle: Blasiak insertion on each block's
/// subword, pairs `(passes, n - position + 1)`, rows concatenated across
/// blocks and then sorted. `blocks` lists 1-based positions of `z`.
pub fn build_seed_filling(z: &[usize], blocks: &[Vec<usize>]) -> Result<PairFilling> {
    let n = z.len();
    let mut seen = vec![false; n + 1];
    for &p in blocks.iter().flatten() {
        if p == 0 || p > n || seen[p] {
            return Err(Error::Precondition(format!("blocks must partition 1..={n}")));
        }
        seen[p] = true;
    }
    if seen[1..].iter().any(|s| !s) {
        return Err(Error::Precondition(format!("blocks must partition 1..={n}")));
    }
    let mut rows: Vec<Vec<Pair>> = Vec::new();
    for block in blocks {
        let mut positions = block.clone();
        positions.sort_unstable();
        let sub: Vec<usize> = positions.iter().map(|&p| z[p - 1]).collect();
        if !is_cocharge_word(&sub) {
            return Err(Error::NotCochargeWord(sub));
        }
        let out = blasiak_unchecked(&sub)?;
        for (r, local_row) in out.filling.rows().iter().enumerate() {
            if r == rows.len() {
                rows.push(Vec::new());
            }
            for &q in local_row {
                let pos = positions[q - 1];
                rows[r].push((out.passes[q - 1], n - pos + 1));
            }
        }
    }
    for row in &mut rows {
        row.sort_unstable();
    }
    let seed = Tableau::from_rows_unchecked(rows);
    check_static_conditions(z, &seed)?;
    Ok(seed)
}

fn violation(condition: u8, detail: impl Into<String>) -> Error {
    Error::ChainsCondition { condition, detail: detail.into() }
}

/// Conditions (1), (2), (4) and partition shape.
fn check_static_conditions(z: &[usize], t: &PairFilling) -> Result<()> {
    let n = z.len();
    if !t.has_partition_shape() && !t.is_empty() {
        return Err(violation(2, "filling is not of partition shape"));
    }
    let mut seen = vec![false; n + 1];
    for &(_, i) in t.rows().iter().flatten() {
        if i == 0 || i > n || seen[i] {
            return Err(violation(1, format!("index {i} repeated or out of range")));
        }
        seen[i] = true;
    }
    if t.size() != n {
        return Err(violation(1, format!("{} entries for {n} indices", t.size())));
    }
    if !t.rows().iter().all(|r| r.windows(2).all(|w| w[0] < w[1])) {
        return Err(violation(2, "row not increasing"));
    }
    for r in 1..t.rows().len() {
        if t.rows()[r].iter().zip(&t.rows()[r - 1]).any(|(above, below)| below >= above) {
            return Err(violation(2, format!("column not increasing at row {}", r + 1)));
        }
    }
    for (r, row) in t.rows().iter().enumerate() {
        for &(k, i) in row {
            if k + z[n - i] != r + 1 {
                return Err(violation(4, format!("({k},{i}) in row {}", r + 1)));
            }
        }
    }
    Ok(())
}

/// One box addition of the chains algorithm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainsStep {
    /// The pair read at this step.
    pub read: Pair,
    /// 1-based row of the box added to the partition.
    pub row: usize,
    /// 1-based row the pending pair was found in, when it sat higher.
    pub moved_from: Option<usize>,
    /// Entries that popped out during the chain of insertions (before shifting).
    pub popped: Vec<Pair>,
    pub shape: Partition,
    pub filling: PairFilling,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainsOutput {
    pub ctype: Partition,
    pub filling: PairFilling,
    /// Shape of the filling: the seed shape, then one entry per box addition.
    pub shape_trace: Vec<Partition>,
    pub steps: Vec<ChainsStep>,
}

/// Runs Blasiak insertion on `z` while maintaining a pair filling that starts
/// at `seed`. Each box addition whose pair sits in a higher row triggers a
/// chain of modified row insertions. Conditions (1)-(6) are checked after
/// every step.
pub fn chains_run(z: &[usize], seed: &PairFilling) -> Result<ChainsOutput> {
    if !is_cocharge_word(z) {
        return Err(Error::NotCochargeWord(z.to_vec()));
    }
    check_static_conditions(z, seed)?;
    let n = z.len();
    let seed_shape = seed.shape();
    let mut grid: Vec<Vec<Cell>> = seed.rows().iter().map(|r| r.iter().copied().map(Some).collect()).collect();
    let mut letters: Vec<Option<usize>> = z.iter().copied().map(Some).collect();
    let mut passes = vec![0; n];
    let mut nu = Partition::empty();
    let mut remaining = n;
    let mut p = n;
    let bound = n * (z.iter().copied().max().unwrap_or(0) + n);
    let mut reads = 0;
    let mut trace = vec![seed_shape.clone()];
    let mut steps = Vec::new();
    while remaining > 0 {
        if reads >= bound {
            return Err(Error::NonTermination(bound));
        }
        p = if p == 0 { n - 1 } else { p - 1 };
        let Some(a) = letters[p] else { continue };
        reads += 1;
        passes[p] += 1;
        if !nu.can_add_box(a) {
            letters[p] = Some(a + 1);
            continue;
        }
        nu.add_box(a);
        letters[p] = None;
        remaining -= 1;
        let k = passes[p];
        let i = n - p;
        let (rho, col) = locate(&grid, i).ok_or_else(|| violation(1, format!("index {i} missing")))?;
        let m = grid[rho][col].expect("located cell").0;
        let mut popped = Vec::new();
        let mut moved_from = None;
        if rho < a {
            return Err(violation(6, format!("pair ({m},{i}) sits below the row it is read into")));
        }
        if rho == a {
            if m != k {
                return Err(violation(4, format!("read ({k},{i}) but found ({m},{i})")));
            }
        } else {
            moved_from = Some(rho + 1);
            popped = chain_step(&mut grid, a, rho, col);
        }
        let filling = Tableau::from_rows_unchecked(
            grid.iter().map(|r| r.iter().map(|c| c.expect("compacted")).collect()).collect(),
        );
        check_static_conditions(z, &filling)?;
        check_dynamic_conditions(&filling, &nu, &letters, &passes, &seed_shape)?;
        let shape = filling.shape();
        if !shape.dominates(trace.last().expect("seeded"))? {
            return Err(violation(3, format!("shape {shape} does not dominate the previous shape")));
        }
        trace.push(shape.clone());
        steps.push(ChainsStep { read: (k, i), row: a + 1, moved_from, popped, shape, filling });
    }
    let filling = steps.last().map_or_else(|| seed.clone(), |s| s.filling.clone());
    Ok(ChainsOutput { ctype: nu, filling, shape_trace: trace, steps })
}

/// Chains run certifying `ctype(w~) >= ctype(w)` for `w~ = w` with positions
/// `i, i+1` swapped (`w_i + 1 < w_(i+1)`): the seed is the pair filling of
/// `cc(w)` with the two swapped indices exchanged.
pub fn adjacent_swap_chains(w: &crate::perm::Permutation, i: usize) -> Result<ChainsOutput> {
    let n = w.len();
    if i == 0 || i >= n || w.at(i) + 1 >= w.at(i + 1) {
        return Err(Error::Precondition(format!("need w_i + 1 < w_(i+1) at position {i}")));
    }
    let z = crate::charge::cocharge_word(w);
    let seed = build_seed_filling(&z, &[(1..=n).collect()])?;
    let (a, b) = (n - i + 1, n - i);
    let rows = seed
        .rows()
        .iter()
        .map(|row| {
            let mut row: Vec<Pair> = row
                .iter()
                .map(|&(k, j)| {
                    (
                        k,
                        if j == a {
                            b
                        } else if j == b {
                            a
                        } else {
                            j
                        },
                    )
                })
                .collect();
            row.sort_unstable();
            row
        })
        .collect();
    chains_run(&crate::charge::cocharge_word(&w.swap_adjacent(i)), &Tableau::from_rows_unchecked(rows))
}

fn locate(grid: &[Vec<Cell>], i: usize) -> Option<(usize, usize)> {
    grid.iter()
        .enumerate()
        .find_map(|(r, row)| row.iter().position(|c| matches!(c, Some((_, j)) if *j == i)).map(|c| (r, c)))
}

/// Moves the column segment starting at `(rho, col)` down to row `a`, by
/// insertion, and refills the vacated cells with popped entries. Returns the
/// popped entries (unshifted).
fn chain_step(grid: &mut Vec<Vec<Cell>>, a: usize, rho: usize, col: usize) -> Vec<Pair> {
    let d = rho - a;
    let mut segment = Vec::new();
    let mut r = rho;
    while let Some(cell) = grid.get_mut(r).and_then(|row| row.get_mut(col)) {
        match cell.take() {
            Some(e) => segment.push(e),
            None => break,
        }
        r += 1;
    }
    // A popped entry refills the vacated cell `t` rows above `rho` at once, so
    // later insertions into overlapping rows see it.
    let mut popped = Vec::new();
    for (t, &(m, idx)) in segment.iter().enumerate() {
        let target = a + t;
        let (lower, upper) = grid.split_at_mut(target);
        let below = lower.last().map(|v| v.as_slice());
        if let Some((x, y)) = insert_into_row(&mut upper[0], below, (m - d, idx)) {
            popped.push((x, y));
            let row = &mut grid[rho + t];
            match row.get_mut(col) {
                Some(cell @ None) => *cell = Some((x + d, y)),
                _ => row.push(Some((x + d, y))),
            }
        }
    }
    for row in grid.iter_mut().skip(rho) {
        row.retain(Option::is_some);
        row.sort_unstable();
    }
    while grid.last().is_some_and(Vec::is_empty) {
        grid.pop();
    }
    popped
}

/// Conditions (3), (5), (6).
fn check_dynamic_conditions(
    t: &PairFilling,
    nu: &Partition,
    letters: &[Option<usize>],
    passes: &[usize],
    seed_shape: &Partition,
) -> Result<()> {
    let n = letters.len();
    if !t.shape().dominates(seed_shape)? {
        return Err(violation(3, format!("shape {} does not dominate the seed shape {seed_shape}", t.shape())));
    }
    for (r, row) in t.rows().iter().enumerate() {
        for (c, &(k, i)) in row.iter().enumerate() {
            let in_nu = c < nu.part(r);
            let deleted = letters[n - i].is_none();
            if in_nu != deleted {
                return Err(violation(
                    5,
                    format!("({k},{i}) at row {} col {}: in shape {in_nu}, read {deleted}", r + 1, c + 1),
                ));
            }
            if deleted && passes[n - i] != k {
                return Err(violation(6, format!("({k},{i}) was read {} times", passes[n - i])));
            }
        }
    }
    Ok(())
}


#[cfg(test)]
mod worked_example {
    use super::*;

    fn z() -> Vec<usize> {
        crate::perm::parse_word("1200112010").unwrap()
    }

    fn seed() -> PairFilling {
        let blue = vec![1, 2, 3, 4, 6, 7];
        let red = vec![5, 8, 9, 10];
        build_seed_filling(&z(), &[blue, red]).unwrap()
    }

    #[test]
    fn seed_matches() {
        let expect = vec![
            vec![(1, 1), (1, 3), (1, 7), (1, 8)],
            vec![(1, 2), (1, 6), (1, 10)],
            vec![(2, 5)],
            vec![(2, 9)],
            vec![(3, 4)],
        ];
        assert_eq!(seed().rows(), expect.as_slice());
        assert_eq!(seed().shape(), Partition::new(vec![4, 3, 1, 1, 1]).unwrap());
    }

    #[test]
    fn trace_matches() {
        let out = chains_run(&z(), &seed()).unwrap();
        assert_eq!(out.ctype, Partition::new(vec![4, 3, 3]).unwrap());
        let expect =
            vec![vec![(1, 1), (1, 3), (1, 7), (1, 8)], vec![(1, 2), (1, 5), (1, 10)], vec![(1, 4), (1, 9), (2, 6)]];
        assert_eq!(out.filling.rows(), expect.as_slice());
        let reads: Vec<Pair> = out.steps.iter().map(|s| s.read).collect();
        assert_eq!(&reads[..5], &[(1, 1), (1, 2), (1, 3), (1, 4), (1, 5)]);
        let fourth = &out.steps[3];
        assert_eq!((fourth.row, fourth.moved_from), (3, Some(5)));
        assert!(fourth.popped.is_empty());
        assert_eq!(
            fourth.filling.rows(),
            &[vec![(1, 1), (1, 3), (1, 7), (1, 8)], vec![(1, 2), (1, 6), (1, 10)], vec![(1, 4), (2, 5)], vec![(2, 9)],]
        );
        let fifth = &out.steps[4];
        assert_eq!((fifth.row, fifth.moved_from, fifth.popped.clone()), (2, Some(3), vec![(1, 6)]));
        assert_eq!(
            fifth.filling.rows(),
            &[vec![(1, 1), (1, 3), (1, 7), (1, 8)], vec![(1, 2), (1, 5), (1, 10)], vec![(1, 4), (2, 6)], vec![(2, 9)],]
        );
        let ninth = out.steps.iter().find(|s| s.read == (1, 9)).unwrap();
        assert_eq!((ninth.row, ninth.moved_from), (3, Some(4)));
        assert_eq!(ninth.filling.rows()[2], vec![(1, 4), (1, 9), (2, 6)]);
        assert!(out.shape_trace.windows(2).all(|w| w[1].dominates(&w[0]).unwrap()));
    }

    #[test]
    fn plain_seed_never_moves() {
        let z = z();
        let seed = build_seed_filling(&z, &[(1..=10).collect()]).unwrap();
        let out = chains_run(&z, &seed).unwrap();
        assert!(out.steps.iter().all(|s| s.moved_from.is_none()));
        assert_eq!(out.ctype, seed.shape());
    }
}

#[cfg(test)]
mod exhaustive {
    use super::*;
    use crate::catabolism::ctype_of_permutation;
    use crate::charge::cocharge_word;
    use crate::perm::all_permutations;

    #[test]
    fn swap_seeds_run_clean() {
        for n in 2..=6 {
            for w in all_permutations(n) {
                for i in 1..n {
                    if w.at(i) + 1 >= w.at(i + 1) {
                        assert!(adjacent_swap_chains(&w, i).is_err());
                        continue;
                    }
                    let out = adjacent_swap_chains(&w, i).unwrap();
                    assert_eq!(out.shape_trace[0], ctype_of_permutation(&w));
                    assert_eq!(out.ctype, ctype_of_permutation(&w.swap_adjacent(i)));
                }
            }
        }
    }

    /// Every shuffle of two cocharge words of total length up to `max`.
    #[test]
    fn shuffles_of_pairs_small() {
        for total in 2..=6 {
            for a in 1..total {
                let b = total - a;
                for u in all_permutations(a) {
                    for v in all_permutations(b) {
                        let (x, y) = (cocharge_word(&u), cocharge_word(&v));
                        let floor = ctype_of_permutation(&u).partwise_sum(&ctype_of_permutation(&v));
                        for mask in 0u32..(1 << total) {
                            if mask.count_ones() as usize != a {
                                continue;
                            }
                            let (mut z, mut first, mut second) = (Vec::new(), Vec::new(), Vec::new());
                            let (mut xi, mut yi) = (0, 0);
                            for pos in 0..total {
                                if mask >> pos & 1 == 1 {
                                    z.push(x[xi]);
                                    xi += 1;
                                    first.push(pos + 1);
                                } else {
                                    z.push(y[yi]);
                                    yi += 1;
                                    second.push(pos + 1);
                                }
                            }
                            let seed = build_seed_filling(&z, &[first, second]).unwrap();
                            assert_eq!(seed.shape(), floor);
                            let out = chains_run(&z, &seed).unwrap_or_else(|e| panic!("{z:?} {mask:b}: {e}"));
                            let w = crate::charge::cocharge_word_inverse(&z).unwrap();
                            assert_eq!(out.ctype, ctype_of_permutation(&w));
                            assert_eq!(out.filling.shape(), out.ctype);
                        }
                    }
                }
            }
        }
    }
}
