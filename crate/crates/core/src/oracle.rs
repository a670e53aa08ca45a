//! Brute-force ground truth.
//!
//! Permutation statistics by full enumeration, and power sums by direct
//! term-by-term summation. Nothing here uses the recurrences or closed forms it
//! is meant to check.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Poly, Rat, Var};
use crate::general::Progression;

/// Default enumeration bound (8! = 40320 permutations).
pub const DEFAULT_BOUND: usize = 8;
/// Bound used by the opt-in slow tier.
pub const SLOW_BOUND: usize = 10;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n];
        for &e in &entries {
            if e == 0 || e > n || seen[e - 1] {
                return Err(Error::argument(format!(
                    "{entries:?} is not a permutation of 1..={n}"
                )));
            }
            seen[e - 1] = true;
        }
        Ok(Perm(entries))
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn reverse(&self) -> Perm {
        Perm(self.0.iter().rev().copied().collect())
    }

    /// Positions `j` (1-based) with `p_j < p_{j+1}`.
    pub fn ascent_count(&self) -> usize {
        ascents(&self.0)
    }

    pub fn descent_count(&self) -> usize {
        self.len().saturating_sub(1) - self.ascent_count()
    }

    /// Sum of the 1-based positions `j` with `p_j > p_{j+1}`.
    pub fn major_index(&self) -> usize {
        major_index(&self.0)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 && self.0.len() > 9 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

fn ascents(p: &[usize]) -> usize {
    p.windows(2).filter(|w| w[0] < w[1]).count()
}

fn major_index(p: &[usize]) -> usize {
    p.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(j, _)| j + 1)
        .sum()
}

/// Rearranges `p` into its lexicographic successor; false when `p` is the last.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).expect("pivot has a successor");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Perm> {
    let mut state = Some((1..=n).collect::<Vec<_>>());
    std::iter::from_fn(move || {
        let current = state.take()?;
        let mut next = current.clone();
        if next_permutation(&mut next) {
            state = Some(next);
        }
        Some(Perm(current))
    })
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::Resource { requested: n, bound });
    }
    if n == 0 {
        return Err(Error::argument("enumeration needs n >= 1"));
    }
    Ok(())
}

/// Visits every permutation whose first entry is `first`, lexicographically.
fn for_each_with_prefix(n: usize, first: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = std::iter::once(first)
        .chain((1..=n).filter(|&x| x != first))
        .collect();
    loop {
        f(&p);
        if !next_permutation(&mut p[1..]) {
            break;
        }
    }
}

/// Folds `block(first)` over the `n` prefix blocks and merges the results.
fn fold_blocks<T, B, M>(n: usize, block: B, merge: M) -> T
where
    T: Send,
    B: Fn(usize) -> T + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (1..=n)
            .into_par_iter()
            .map(block)
            .reduce_with(merge)
            .expect("n >= 1")
    }
    #[cfg(not(feature = "parallel"))]
    {
        fold_blocks_sequential(n, block, merge)
    }
}

fn fold_blocks_sequential<T, B, M>(n: usize, block: B, merge: M) -> T
where
    B: Fn(usize) -> T,
    M: Fn(T, T) -> T,
{
    (1..=n).map(block).reduce(merge).expect("n >= 1")
}

fn ascent_block(n: usize, first: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n];
    for_each_with_prefix(n, first, |p| counts[ascents(p)] += 1);
    counts
}

fn add_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
    a
}

/// Counts of permutations of `1..=n` by number of ascents.
pub fn eulerian_by_enumeration(n: usize, bound: usize) -> Result<Vec<u64>> {
    check_bound(n, bound)?;
    Ok(fold_blocks(n, |first| ascent_block(n, first), add_counts))
}

/// Single-threaded [`eulerian_by_enumeration`], available regardless of features.
pub fn eulerian_by_enumeration_sequential(n: usize, bound: usize) -> Result<Vec<u64>> {
    check_bound(n, bound)?;
    Ok(fold_blocks_sequential(n, |first| ascent_block(n, first), add_counts))
}

/// `a(n, k, i)`: keyed by `(ascents k, major index i)`.
pub type MajAscentTable = BTreeMap<(usize, usize), u64>;

fn maj_block(n: usize, first: usize) -> MajAscentTable {
    let mut table = MajAscentTable::new();
    for_each_with_prefix(n, first, |p| {
        *table.entry((ascents(p), major_index(p))).or_default() += 1;
    });
    table
}

fn merge_tables(mut a: MajAscentTable, b: MajAscentTable) -> MajAscentTable {
    for (key, count) in b {
        *a.entry(key).or_default() += count;
    }
    a
}

/// Joint distribution of (ascent count, major index) over all permutations of `1..=n`.
pub fn maj_ascent_table(n: usize, bound: usize) -> Result<MajAscentTable> {
    check_bound(n, bound)?;
    Ok(fold_blocks(n, |first| maj_block(n, first), merge_tables))
}

pub fn maj_ascent_table_sequential(n: usize, bound: usize) -> Result<MajAscentTable> {
    check_bound(n, bound)?;
    Ok(fold_blocks_sequential(n, |first| maj_block(n, first), merge_tables))
}

/// `sum_{i=start}^{m} t^i (a + (i-1) d)^n`, zero when the range is empty.
pub fn direct_weighted_sum(prog: &Progression, n: u32, m: u64, start: u64) -> Poly {
    let mut coeffs = vec![Rat::zero(); m as usize + 1];
    for i in start..=m {
        coeffs[i as usize] = prog.term(i).pow(n);
    }
    Poly::new(coeffs, Var::T)
}

/// `sum_{i=1}^{m} (a + (i-1) d)^n`.
pub fn direct_power_sum(prog: &Progression, n: u32, m: u64) -> Rat {
    (1..=m).map(|i| prog.term(i).pow(n)).sum()
}
