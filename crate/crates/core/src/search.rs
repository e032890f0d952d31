//! Exhaustive search for complementary sets at small sizes.
//!
//! Rows are filled from both ends towards the middle. After positions `k` and
//! `N-1-k` of every row are fixed, the correlation sum at shift `N-1-k`
//! depends only on assigned entries, so any nonzero value prunes the branch.
//! The remaining short shifts are checked at the leaves.
//!
//! Equivalences quotiented out: each row is scaled so its first exponent is
//! 0, rows are kept in nondecreasing order, and results are deduplicated under
//! simultaneous reversal and conjugation of all rows.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::algebra::{Alphabet, Cyclotomic, Sequence};
use crate::error::{Error, Result};
use crate::verify::ComplementarySet;

pub const DEFAULT_WORK_BOUND: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of results returned (after sorting).
    pub limit: Option<usize>,
    /// Maximum number of search-tree nodes visited.
    pub work_bound: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            limit: None,
            work_bound: DEFAULT_WORK_BOUND,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Canonical representatives, sorted.
    pub results: Vec<ComplementarySet>,
    /// Number of inequivalent sets found before truncation.
    pub total: usize,
    /// True when `limit` cut the list.
    pub incomplete: bool,
    pub nodes: u64,
}

/// Canonical key: the lexicographic minimum over the four reversal and
/// conjugation variants of the row-normalized, row-sorted exponent matrix.
pub fn canonical_key(alphabet: Alphabet, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let normalize = |rows: Vec<Vec<u32>>| {
        let mut out: Vec<Vec<u32>> = rows
            .into_iter()
            .map(|r| {
                let first = r[0];
                r.iter().map(|&t| alphabet.sub(t, first)).collect()
            })
            .collect();
        out.sort();
        out
    };
    let reversed = |rows: &[Vec<u32>]| -> Vec<Vec<u32>> {
        rows.iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect()
    };
    let conjugated = |rows: &[Vec<u32>]| -> Vec<Vec<u32>> {
        rows.iter()
            .map(|r| r.iter().map(|&t| alphabet.neg(t)).collect())
            .collect()
    };
    let rev = reversed(rows);
    [
        normalize(rows.to_vec()),
        normalize(conjugated(rows)),
        normalize(conjugated(&rev)),
        normalize(rev),
    ]
    .into_iter()
    .min()
    .expect("four candidates")
}

/// Canonical representative of a set (unverified).
pub fn canonicalize(set: &ComplementarySet) -> ComplementarySet {
    let rows: Vec<Vec<u32>> = set.rows().iter().map(|r| r.exponents().to_vec()).collect();
    from_key(set.alphabet(), canonical_key(set.alphabet(), &rows))
}

fn from_key(alphabet: Alphabet, key: Vec<Vec<u32>>) -> ComplementarySet {
    let rows = key
        .into_iter()
        .map(|r| Sequence::new(alphabet, r).expect("exponents stay in range"))
        .collect();
    ComplementarySet::new(rows).expect("rows share length")
}

struct Problem {
    alphabet: Alphabet,
    size: usize,
    length: usize,
    ring: Cyclotomic,
    work_bound: u64,
}

struct Shared {
    nodes: AtomicU64,
    exceeded: AtomicBool,
}

struct Walker<'a> {
    problem: &'a Problem,
    shared: &'a Shared,
    grid: Vec<Vec<u32>>,
    coords: Vec<i64>,
    local_nodes: u64,
    found: Vec<Vec<Vec<u32>>>,
}

const FLUSH: u64 = 4096;

impl<'a> Walker<'a> {
    fn new(problem: &'a Problem, shared: &'a Shared) -> Self {
        Walker {
            problem,
            shared,
            grid: vec![vec![0; problem.length]; problem.size],
            coords: vec![0; problem.ring.degree()],
            local_nodes: 0,
            found: Vec::new(),
        }
    }

    fn last_level(&self) -> usize {
        (self.problem.length - 1) / 2
    }

    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes == FLUSH {
            let total = self.shared.nodes.fetch_add(FLUSH, Ordering::Relaxed) + FLUSH;
            self.local_nodes = 0;
            if total > self.problem.work_bound {
                self.shared.exceeded.store(true, Ordering::Relaxed);
            }
        }
        !self.shared.exceeded.load(Ordering::Relaxed)
    }

    fn finish(&mut self) {
        let total = self
            .shared
            .nodes
            .fetch_add(self.local_nodes, Ordering::Relaxed)
            + self.local_nodes;
        self.local_nodes = 0;
        if total > self.problem.work_bound {
            self.shared.exceeded.store(true, Ordering::Relaxed);
        }
    }

    /// Sum over rows of `ρ(τ)`, restricted to `k in 0..count`.
    fn shift_vanishes(&mut self, tau: usize, count: usize) -> bool {
        let alpha = self.problem.alphabet;
        self.coords.iter_mut().for_each(|c| *c = 0);
        for row in &self.grid {
            for k in 0..count {
                let e = alpha.sub(row[k], row[k + tau]);
                for (c, b) in self.coords.iter_mut().zip(self.problem.ring.basis(e)) {
                    *c += b;
                }
            }
        }
        self.coords.iter().all(|&c| c == 0)
    }

    fn prefix_ordered(&self, row: usize, level: usize) -> bool {
        row == 0 || self.grid[row - 1][..=level] <= self.grid[row][..=level]
    }

    /// Assigns positions `level` and `N-1-level` of `row`, then recurses.
    fn descend(&mut self, level: usize, row: usize) {
        let n = self.problem.length;
        if row == self.problem.size {
            let hi = n - 1 - level;
            if hi >= 1 && !self.shift_vanishes(hi, level + 1) {
                return;
            }
            if level == self.last_level() {
                self.leaf();
            } else {
                self.descend(level + 1, 0);
            }
            return;
        }
        let q = self.problem.alphabet.q();
        let hi = n - 1 - level;
        let lo_range = if level == 0 { 0..1 } else { 0..q };
        for lo in lo_range {
            self.grid[row][level] = lo;
            let hi_range = if hi == level { 0..1 } else { 0..q };
            for hv in hi_range {
                if hi != level {
                    self.grid[row][hi] = hv;
                }
                if !self.tick() {
                    return;
                }
                if self.prefix_ordered(row, level) {
                    self.descend(level, row + 1);
                }
            }
        }
    }

    fn leaf(&mut self) {
        let n = self.problem.length;
        let first_checked = n - 1 - self.last_level();
        for tau in 1..first_checked {
            if !self.shift_vanishes(tau, n - tau) {
                return;
            }
        }
        self.found
            .push(canonical_key(self.problem.alphabet, &self.grid));
    }
}

/// All complementary sets of `size` rows of `length` over `alphabet`, up to
/// equivalence.
pub fn search_cs(
    alphabet: Alphabet,
    size: usize,
    length: usize,
    opts: SearchOptions,
) -> Result<SearchOutcome> {
    if size == 0 {
        return Err(Error::EmptySet);
    }
    if length == 0 {
        return Err(Error::EmptySequence);
    }
    let problem = Problem {
        alphabet,
        size,
        length,
        ring: Cyclotomic::new(alphabet),
        work_bound: opts.work_bound,
    };
    let shared = Shared {
        nodes: AtomicU64::new(0),
        exceeded: AtomicBool::new(false),
    };

    // Split on the last exponent of the first row; every other choice happens
    // inside the branch, so the merged result does not depend on scheduling.
    let top: Vec<u32> = if length == 1 {
        vec![0]
    } else {
        (0..alphabet.q()).collect()
    };
    let branches: Vec<Vec<Vec<Vec<u32>>>> = top
        .par_iter()
        .map(|&last| {
            let mut w = Walker::new(&problem, &shared);
            w.grid[0][length - 1] = last;
            if w.tick() {
                w.descend_first_row_fixed();
            }
            w.finish();
            w.found
        })
        .collect();

    let nodes = shared.nodes.load(Ordering::Relaxed);
    if shared.exceeded.load(Ordering::Relaxed) {
        return Err(Error::WorkBound {
            limit: opts.work_bound,
        });
    }
    let unique: BTreeSet<Vec<Vec<u32>>> = branches.into_iter().flatten().collect();
    let total = unique.len();
    let keep = opts.limit.unwrap_or(usize::MAX);
    let results = unique
        .into_iter()
        .take(keep)
        .map(|key| {
            from_key(alphabet, key)
                .into_verified()
                .expect("search results satisfy every shift")
        })
        .collect();
    Ok(SearchOutcome {
        results,
        total,
        incomplete: total > keep,
        nodes,
    })
}

impl Walker<'_> {
    /// Level 0 with row 0 already pinned by the caller.
    fn descend_first_row_fixed(&mut self) {
        self.descend(0, 1);
    }
}

pub fn search_gcp(alphabet: Alphabet, length: usize, opts: SearchOptions) -> Result<SearchOutcome> {
    search_cs(alphabet, 2, length, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify;

    fn exps(set: &ComplementarySet) -> Vec<Vec<u32>> {
        set.rows().iter().map(|r| r.exponents().to_vec()).collect()
    }

    #[test]
    fn no_binary_pair_of_length_three() {
        let out = search_gcp(Alphabet::BINARY, 3, SearchOptions::default()).unwrap();
        assert!(out.results.is_empty());
        assert!(!out.incomplete);
    }

    #[test]
    fn binary_pair_of_length_two() {
        let out = search_gcp(Alphabet::BINARY, 2, SearchOptions::default()).unwrap();
        assert_eq!(out.results.len(), 1);
        assert_eq!(exps(&out.results[0]), vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn quaternary_pair_of_length_three() {
        let out = search_gcp(Alphabet::QUATERNARY, 3, SearchOptions::default()).unwrap();
        assert!(!out.results.is_empty());
        let want = canonical_key(Alphabet::QUATERNARY, &[vec![0, 0, 2], vec![0, 1, 0]]);
        assert!(out.results.iter().any(|s| exps(s) == want));
        assert!(out.results.iter().all(|s| verify(s).is_cs));
    }

    #[test]
    fn small_binary_sets() {
        let two = search_cs(Alphabet::BINARY, 4, 2, SearchOptions::default()).unwrap();
        let want = canonical_key(
            Alphabet::BINARY,
            &[vec![0, 0], vec![0, 0], vec![0, 1], vec![0, 1]],
        );
        assert!(two.results.iter().any(|s| exps(s) == want));
        let three = search_cs(Alphabet::BINARY, 4, 3, SearchOptions::default()).unwrap();
        assert!(!three.results.is_empty());
    }

    #[test]
    fn limit_truncates() {
        let all = search_cs(Alphabet::BINARY, 4, 3, SearchOptions::default()).unwrap();
        assert!(all.total > 1);
        let one = search_cs(
            Alphabet::BINARY,
            4,
            3,
            SearchOptions {
                limit: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(one.incomplete);
        assert_eq!(one.results, all.results[..1]);
        assert_eq!(one.total, all.total);
    }

    #[test]
    fn work_bound_is_enforced() {
        let r = search_gcp(
            Alphabet::QUATERNARY,
            6,
            SearchOptions {
                limit: None,
                work_bound: 100,
            },
        );
        assert_eq!(r, Err(Error::WorkBound { limit: 100 }));
    }

    #[test]
    fn canonical_key_is_class_invariant() {
        let a = Alphabet::QUATERNARY;
        let rows = vec![vec![1, 3, 2], vec![2, 2, 0]];
        let k = canonical_key(a, &rows);
        let rev: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        let swapped = vec![rows[1].clone(), rows[0].clone()];
        let conj: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| r.iter().map(|&t| a.neg(t)).collect())
            .collect();
        let scaled: Vec<Vec<u32>> = vec![
            rows[0].iter().map(|&t| a.add(t, 1)).collect(),
            rows[1].clone(),
        ];
        for variant in [rev, swapped, conj, scaled] {
            assert_eq!(canonical_key(a, &variant), k);
        }
        assert!(k.iter().all(|r| r[0] == 0));
    }
}
