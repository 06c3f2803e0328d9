//! Canonical minimum-set search.
//!
//! Candidates are `forced ∪ X` for `X ⊆ free`, visited by increasing
//! cardinality and lexicographically (by sorted member list) within a
//! cardinality. The first passing candidate in that order is the witness,
//! whether or not the level is evaluated in parallel.

use rayon::prelude::*;

use crate::graph::bits;

/// Knobs for the exact searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Refuse graphs (or candidate pools) larger than this.
    pub max_order: usize,
    /// Evaluate each cardinality level across the rayon pool.
    pub parallel: bool,
}

impl SearchOptions {
    pub const DEFAULT_GEODETIC_CAP: usize = 20;
    pub const DEFAULT_STEINER_CAP: usize = 16;

    pub fn geodetic() -> Self {
        SearchOptions {
            max_order: Self::DEFAULT_GEODETIC_CAP,
            parallel: false,
        }
    }

    pub fn steiner() -> Self {
        SearchOptions {
            max_order: Self::DEFAULT_STEINER_CAP,
            parallel: false,
        }
    }

    pub fn with_cap(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Hit {
    pub mask: u64,
    /// Candidates visited in canonical order, the witness included.
    pub explored: u64,
}

/// Lexicographic `k`-combinations of `items`, as masks.
pub(crate) struct Combinations<'a> {
    items: &'a [usize],
    idx: Vec<usize>,
    done: bool,
}

impl<'a> Combinations<'a> {
    pub(crate) fn new(items: &'a [usize], k: usize) -> Self {
        Combinations {
            items,
            idx: (0..k).collect(),
            done: k > items.len(),
        }
    }
}

impl Iterator for Combinations<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self.idx.iter().fold(0u64, |m, &i| m | 1 << self.items[i]);
        let k = self.idx.len();
        let m = self.items.len();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < m - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    }
}

const CHUNK: usize = 1 << 14;

/// Runs the canonical search. `prepare(state, size)` is called once before
/// each cardinality level is tested (with the total candidate size), which
/// lets callers grow lazily built tables; `pred` then only reads `state`.
pub(crate) fn first_passing<S, P>(
    forced: u64,
    free: u64,
    parallel: bool,
    state: &mut S,
    mut prepare: impl FnMut(&mut S, usize),
    pred: P,
) -> Option<Hit>
where
    S: Sync,
    P: Fn(&S, u64) -> bool + Sync,
{
    debug_assert_eq!(forced & free, 0);
    let free_list: Vec<usize> = bits(free).collect();
    let base = forced.count_ones() as usize;
    let mut explored = 0u64;
    let start = usize::from(forced == 0);
    for k in start..=free_list.len() {
        prepare(state, base + k);
        let state = &*state;
        let mut combos = Combinations::new(&free_list, k).map(|x| x | forced);
        if parallel {
            let mut chunk = Vec::with_capacity(CHUNK);
            loop {
                chunk.clear();
                chunk.extend(combos.by_ref().take(CHUNK));
                if chunk.is_empty() {
                    break;
                }
                if let Some(pos) = chunk.par_iter().position_first(|&m| pred(state, m)) {
                    return Some(Hit {
                        mask: chunk[pos],
                        explored: explored + pos as u64 + 1,
                    });
                }
                explored += chunk.len() as u64;
            }
        } else {
            for m in combos {
                explored += 1;
                if pred(state, m) {
                    return Some(Hit { mask: m, explored });
                }
            }
        }
    }
    None
}
