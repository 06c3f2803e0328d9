//! Brute-force reference implementations. They only read adjacency through
//! `Graph::has_edge` and share no code with the engines.

#![allow(dead_code)]

use corona_invariants::harness::{census_graphs, CensusKind};
use corona_invariants::Graph;

pub const INF: u32 = u32::MAX;

pub fn connected_census(orders: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    orders
        .flat_map(|n| census_graphs(CensusKind::Connected, n).unwrap())
        .collect()
}

pub fn all_census(orders: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    orders
        .flat_map(|n| census_graphs(CensusKind::All, n).unwrap())
        .collect()
}

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != INF && d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every simple `u`–`v` path, as vertex lists.
pub fn simple_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, at: usize, v: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == v {
            out.push(path.clone());
            return;
        }
        for w in 0..g.order() {
            if g.has_edge(at, w) && !path.contains(&w) {
                path.push(w);
                go(g, w, v, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, u, v, &mut vec![u], &mut out);
    out
}

/// `I[u,v]` from the shortest of all simple paths, as a sorted list.
pub fn interval_by_paths(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    let paths = simple_paths(g, u, v);
    let Some(best) = paths.iter().map(Vec::len).min() else {
        return Vec::new();
    };
    let mut on: Vec<usize> = paths
        .iter()
        .filter(|p| p.len() == best)
        .flatten()
        .copied()
        .collect();
    on.sort_unstable();
    on.dedup();
    on
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

/// Covered vertices per pair, `None` for `k = 0` meaning any distance.
fn cover(g: &Graph, d: &[Vec<u32>], s: &[usize], k: Option<u32>) -> Vec<bool> {
    let n = g.order();
    let mut covered = vec![false; n];
    for &x in s {
        covered[x] = true;
    }
    for (i, &x) in s.iter().enumerate() {
        for &y in &s[i + 1..] {
            if d[x][y] == INF || k.is_some_and(|k| d[x][y] != k) {
                continue;
            }
            for w in 0..n {
                if d[x][w] != INF && d[w][y] != INF && d[x][w] + d[w][y] == d[x][y] {
                    covered[w] = true;
                }
            }
        }
    }
    covered
}

pub fn is_geodetic(g: &Graph, d: &[Vec<u32>], s: &[usize]) -> bool {
    !s.is_empty() && cover(g, d, s, None).into_iter().all(|c| c)
}

/// Minimum over the whole subset lattice.
pub fn geodetic_number(g: &Graph) -> usize {
    let d = floyd_warshall(g);
    subsets(g.order())
        .filter(|s| is_geodetic(g, &d, s))
        .map(|s| s.len())
        .min()
        .unwrap()
}

pub fn k_geodetic_number(g: &Graph, k: u32) -> usize {
    let d = floyd_warshall(g);
    subsets(g.order())
        .filter(|s| !s.is_empty() && cover(g, &d, s, Some(k)).into_iter().all(|c| c))
        .map(|s| s.len())
        .min()
        .unwrap()
}

fn induces_connected(g: &Graph, m: u64) -> bool {
    let Some(start) = (0..g.order()).find(|&i| m >> i & 1 == 1) else {
        return false;
    };
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for y in 0..g.order() {
            if m >> y & 1 == 1 && seen >> y & 1 == 0 && g.has_edge(x, y) {
                seen |= 1 << y;
                stack.push(y);
            }
        }
    }
    seen == m
}

/// `(d(W), S[W])` from the connected vertex supersets of `W` of minimum size.
pub fn steiner(g: &Graph, w: &[usize]) -> (u32, Vec<usize>) {
    let n = g.order();
    let wm = w.iter().fold(0u64, |m, &x| m | 1 << x);
    let mut best = usize::MAX;
    let mut hull = 0u64;
    for m in 0u64..1 << n {
        if m & wm != wm || !induces_connected(g, m) {
            continue;
        }
        let size = m.count_ones() as usize;
        if size < best {
            best = size;
            hull = m;
        } else if size == best {
            hull |= m;
        }
    }
    (best as u32 - 1, (0..n).filter(|&i| hull >> i & 1 == 1).collect())
}

pub fn is_steiner_set(g: &Graph, w: &[usize]) -> bool {
    !w.is_empty() && steiner(g, w).1.len() == g.order()
}

pub fn steiner_number(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|w| is_steiner_set(g, w))
        .map(|w| w.len())
        .min()
        .unwrap()
}

pub fn diameter(g: &Graph) -> u32 {
    floyd_warshall(g).into_iter().flatten().max().unwrap()
}
