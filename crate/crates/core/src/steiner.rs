//! Steiner distance, Steiner hull, Steiner sets and the Steiner number.
//!
//! All Steiner quantities come from one Dreyfus–Wagner table per terminal
//! pool: `dp[T][v]` is the fewest edges of a tree spanning `T ∪ {v}`. Then
//! `d(W) = dp[W][w]` for any `w ∈ W`, and `v ∈ S[W]` exactly when
//! `dp[W][v] = d(W)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, low_mask, CoronaLayout, DistanceMatrix, Graph, Vertex, VertexSet};
use crate::search::{first_passing, SearchOptions};

/// Largest terminal set accepted by [`steiner_distance`] and friends.
pub const DEFAULT_TERMINAL_CAP: usize = 16;
/// Largest graph accepted by [`oracle_steiner_trees`].
pub const ORACLE_MAX_ORDER: usize = 10;

const INF: u16 = u16::MAX / 2;

/// Outcome of an exact Steiner-number search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteinerResult {
    pub value: usize,
    pub witness: VertexSet,
    pub explored: u64,
}

/// Dreyfus–Wagner table over a pool of terminals, filled lazily by
/// subset cardinality.
#[derive(Debug, Clone)]
pub struct SteinerTable {
    n: usize,
    terminals: Vec<Vertex>,
    terminal_mask: u64,
    dist: DistanceMatrix,
    dp: Vec<u16>,
    filled: usize,
}

impl SteinerTable {
    /// `g` must be connected; at most `cap` terminals.
    pub fn new(g: &Graph, terminals: &VertexSet, cap: usize) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::domain("Steiner distance needs a connected graph"));
        }
        if terminals.universe() != g.order() {
            return Err(Error::domain("terminal set belongs to a graph of another order"));
        }
        let t = terminals.len();
        if t > cap {
            return Err(Error::CapExceeded {
                what: "Steiner terminal",
                limit: cap,
                actual: t,
            });
        }
        let n = g.order();
        let dist = g.distances();
        let list = terminals.to_vec();
        let mut dp = vec![INF; (1usize << t) * n];
        for (i, &ti) in list.iter().enumerate() {
            let row = &mut dp[(1 << i) * n..((1 << i) + 1) * n];
            for (v, slot) in row.iter_mut().enumerate() {
                *slot = dist.raw(ti, v) as u16;
            }
        }
        Ok(SteinerTable {
            n,
            terminals: list,
            terminal_mask: terminals.mask(),
            dist,
            dp,
            filled: 1,
        })
    }

    pub fn terminals(&self) -> &[Vertex] {
        &self.terminals
    }

    #[inline]
    fn row(&self, sub: usize) -> &[u16] {
        &self.dp[sub * self.n..(sub + 1) * self.n]
    }

    /// Fills every subset of up to `k` terminals.
    pub fn fill_to(&mut self, k: usize) {
        let t = self.terminals.len();
        let k = k.min(t);
        let n = self.n;
        let mut merged = vec![INF; n];
        for level in self.filled + 1..=k {
            // Gosper's hack over all `level`-subsets of the t positions.
            let mut sub: usize = (1 << level) - 1;
            while sub < 1 << t {
                merged.fill(INF);
                let low = sub & sub.wrapping_neg();
                let rest = sub ^ low;
                // proper splits with `low` on the left side
                let mut part = rest;
                loop {
                    let left = part | low;
                    if left != sub {
                        let right = sub ^ left;
                        let (a, b) = (self.row(left), self.row(right));
                        for v in 0..n {
                            let s = a[v] + b[v];
                            if s < merged[v] {
                                merged[v] = s;
                            }
                        }
                    }
                    if part == 0 {
                        break;
                    }
                    part = (part - 1) & rest;
                }
                let offset = sub * n;
                for v in 0..n {
                    let mut best = merged[v];
                    for u in 0..n {
                        let c = merged[u] + self.dist.raw(u, v) as u16;
                        if c < best {
                            best = c;
                        }
                    }
                    self.dp[offset + v] = best;
                }
                let c = sub & sub.wrapping_neg();
                let r = sub + c;
                sub = (((r ^ sub) >> 2) / c) | r;
            }
        }
        self.filled = self.filled.max(k);
    }

    pub fn fill_all(&mut self) {
        self.fill_to(self.terminals.len());
    }

    /// Vertex mask (subset of the pool) to position mask.
    fn positions(&self, w: u64) -> usize {
        debug_assert_eq!(w & !self.terminal_mask, 0, "set outside the terminal pool");
        if self.terminal_mask == low_mask(self.n) {
            return w as usize;
        }
        self.terminals
            .iter()
            .enumerate()
            .filter(|(_, &v)| w >> v & 1 == 1)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    /// Fewest edges of a tree containing `w ∪ {v}`. `w` must be a nonempty
    /// subset of the pool whose level has been filled.
    pub fn tree_size(&self, w: u64, v: Vertex) -> u32 {
        debug_assert!(w.count_ones() as usize <= self.filled);
        self.row(self.positions(w))[v] as u32
    }

    /// `d(W)`.
    pub fn distance_mask(&self, w: u64) -> u32 {
        self.tree_size(w, w.trailing_zeros() as usize)
    }

    /// `S[W]` as a mask.
    pub fn hull_mask(&self, w: u64) -> u64 {
        let row = self.row(self.positions(w));
        let d = row[w.trailing_zeros() as usize];
        row.iter()
            .enumerate()
            .filter(|(_, &x)| x == d)
            .fold(0, |m, (v, _)| m | 1 << v)
    }

    pub fn is_steiner_mask(&self, w: u64) -> bool {
        w != 0 && self.hull_mask(w) == low_mask(self.n)
    }
}

fn check_terminals(g: &Graph, w: &VertexSet) -> Result<()> {
    if w.is_empty() {
        return Err(Error::domain("Steiner distance of the empty set"));
    }
    if w.universe() != g.order() {
        return Err(Error::domain("vertex set belongs to a graph of another order"));
    }
    Ok(())
}

fn full_table(g: &Graph, w: &VertexSet) -> Result<SteinerTable> {
    check_terminals(g, w)?;
    let mut table = SteinerTable::new(g, w, DEFAULT_TERMINAL_CAP)?;
    table.fill_all();
    Ok(table)
}

/// `d(W)`: fewest edges of a connected subgraph containing `W`.
pub fn steiner_distance(g: &Graph, w: &VertexSet) -> Result<u32> {
    Ok(full_table(g, w)?.distance_mask(w.mask()))
}

/// `S[W]`: vertices lying on at least one Steiner `W`-tree.
pub fn steiner_hull(g: &Graph, w: &VertexSet) -> Result<VertexSet> {
    let table = full_table(g, w)?;
    Ok(VertexSet::from_mask(g.order(), table.hull_mask(w.mask())))
}

/// `S[W] = V`.
pub fn is_steiner_set(g: &Graph, w: &VertexSet) -> Result<bool> {
    Ok(full_table(g, w)?.is_steiner_mask(w.mask()))
}

/// Smallest Steiner set among the subsets of `pool`, canonical order.
/// `None` if no subset of the pool is a Steiner set.
pub fn steiner_number_among(
    g: &Graph,
    pool: &VertexSet,
    opts: &SearchOptions,
) -> Result<Option<SteinerResult>> {
    if pool.len() > opts.max_order {
        return Err(Error::CapExceeded {
            what: "Steiner search pool",
            limit: opts.max_order,
            actual: pool.len(),
        });
    }
    let mut table = SteinerTable::new(g, pool, opts.max_order)?;
    let hit = first_passing(
        0,
        pool.mask(),
        opts.parallel,
        &mut table,
        |t, k| t.fill_to(k),
        |t, m| t.is_steiner_mask(m),
    );
    Ok(hit.map(|h| SteinerResult {
        value: h.mask.count_ones() as usize,
        witness: VertexSet::from_mask(g.order(), h.mask),
        explored: h.explored,
    }))
}

/// Exact `s(G)` over every vertex subset.
pub fn steiner_number(g: &Graph, opts: &SearchOptions) -> Result<SteinerResult> {
    if g.order() > opts.max_order {
        return Err(Error::CapExceeded {
            what: "Steiner search order",
            limit: opts.max_order,
            actual: g.order(),
        });
    }
    Ok(steiner_number_among(g, &g.vertices(), opts)?.expect("V is always a Steiner set"))
}

/// `s(G ⊙ H)` searching only subsets of the copies `∪ V_i`.
///
/// When `n1 >= 2`, or `n1 = 1` and `H` is not complete, a minimum Steiner
/// set of a corona avoids `V(G)`, so the restricted search is exact.
/// `K1 ⊙ K_m` is the complete graph `K_{m+1}` and is searched in full.
pub fn steiner_number_corona(
    product: &Graph,
    layout: &CoronaLayout,
    opts: &SearchOptions,
) -> Result<SteinerResult> {
    if product.order() != layout.order() {
        return Err(Error::domain("layout does not describe this graph"));
    }
    let copy = layout.copy_set(0);
    let copy_is_clique = copy.iter().all(|v| product.neighbors_in(&copy, v).len() + 1 == copy.len());
    if layout.n1 < 2 && copy_is_clique {
        return steiner_number(product, opts);
    }
    steiner_number_among(product, &layout.copies_set(), opts)?
        .ok_or_else(|| Error::domain("no Steiner set inside the copies"))
}

/// Every Steiner set of `g`, in canonical order. Needs `n <= cap`.
pub fn all_steiner_sets(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    let n = g.order();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "Steiner enumeration order",
            limit: cap,
            actual: n,
        });
    }
    let mut table = SteinerTable::new(g, &g.vertices(), cap)?;
    table.fill_all();
    let mut out: Vec<VertexSet> = (1..1u64 << n)
        .filter(|&m| table.is_steiner_mask(m))
        .map(|m| VertexSet::from_mask(n, m))
        .collect();
    out.sort_by_key(|s| (s.len(), s.to_vec()));
    Ok(out)
}

/// Vertex supports of all Steiner `W`-trees, by exhaustive search over the
/// supersets of `W` that induce a connected subgraph. Independent of the DP.
pub fn oracle_steiner_trees(g: &Graph, w: &VertexSet) -> Result<Vec<VertexSet>> {
    check_terminals(g, w)?;
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "Steiner tree oracle order",
            limit: ORACLE_MAX_ORDER,
            actual: n,
        });
    }
    if !g.is_connected() {
        return Err(Error::domain("Steiner trees need a connected graph"));
    }
    let others: Vec<Vertex> = bits(!w.mask() & low_mask(n)).collect();
    let mut best = usize::MAX;
    let mut supports = Vec::new();
    for pick in 0u64..1 << others.len() {
        let extra = bits(pick).fold(0u64, |m, i| m | 1 << others[i]);
        let u = w.mask() | extra;
        let size = u.count_ones() as usize;
        if size > best || !g.mask_connected(u) {
            continue;
        }
        if size < best {
            best = size;
            supports.clear();
        }
        supports.push(VertexSet::from_mask(n, u));
    }
    supports.sort_by_key(|s| s.to_vec());
    Ok(supports)
}
