//! Geodesic intervals, geodetic sets, and the geodetic and k-geodetic numbers.
//!
//! Membership `w ∈ I[u,v]` is decided by `d(u,w) + d(w,v) = d(u,v)`; paths
//! are never enumerated.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, low_mask, DistanceMatrix, Graph, Vertex, VertexSet};
use crate::search::{first_passing, SearchOptions};

/// Outcome of an exact minimum search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeodeticResult {
    pub value: usize,
    /// First passing set in canonical order.
    pub witness: VertexSet,
    /// Candidates examined up to and including the witness.
    pub explored: u64,
}

/// `v` lies on some `x`–`y` geodesic.
pub fn is_geodominated(d: &DistanceMatrix, v: Vertex, x: Vertex, y: Vertex) -> bool {
    d.raw(x, v) + d.raw(v, y) == d.raw(x, y)
}

fn interval_mask(d: &DistanceMatrix, u: Vertex, v: Vertex) -> u64 {
    let duv = d.raw(u, v);
    (0..d.order())
        .filter(|&w| d.raw(u, w) + d.raw(w, v) == duv)
        .fold(0, |m, w| m | 1 << w)
}

/// `I[u,v]`: vertices on at least one `u`–`v` geodesic.
pub fn interval(d: &DistanceMatrix, u: Vertex, v: Vertex) -> Result<VertexSet> {
    let n = d.order();
    if u >= n || v >= n {
        return Err(Error::domain(format!("vertex out of range 0..{n}")));
    }
    if !d.reachable(u, v) {
        return Err(Error::domain(format!("{u} and {v} lie in different components")));
    }
    Ok(VertexSet::from_mask(n, interval_mask(d, u, v)))
}

/// `I[S]`: union of `I[u,v]` over pairs of `S`.
pub fn interval_closure(d: &DistanceMatrix, s: &VertexSet) -> Result<VertexSet> {
    if s.is_empty() {
        return Err(Error::domain("interval closure of the empty set"));
    }
    let members = s.to_vec();
    let mut out = s.mask();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if !d.reachable(u, v) {
                return Err(Error::domain(format!(
                    "{u} and {v} lie in different components"
                )));
            }
            out |= interval_mask(d, u, v);
        }
    }
    Ok(VertexSet::from_mask(d.order(), out))
}

/// Precomputed intervals of a connected graph, for repeated closure tests.
#[derive(Debug, Clone)]
pub struct GeodesicIndex {
    n: usize,
    dist: DistanceMatrix,
    intervals: Vec<u64>,
}

impl GeodesicIndex {
    pub fn new(g: &Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::domain("geodetic sets need a connected graph"));
        }
        let dist = g.distances();
        let n = g.order();
        let mut intervals = vec![0; n * n];
        for u in 0..n {
            for v in u..n {
                let m = interval_mask(&dist, u, v);
                intervals[u * n + v] = m;
                intervals[v * n + u] = m;
            }
        }
        Ok(GeodesicIndex { n, dist, intervals })
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    #[inline]
    pub fn interval_mask(&self, u: Vertex, v: Vertex) -> u64 {
        self.intervals[u * self.n + v]
    }

    pub fn closure_mask(&self, s: u64) -> u64 {
        let mut out = s;
        let mut rest = s;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            for v in bits(rest) {
                out |= self.interval_mask(u, v);
            }
        }
        out
    }

    pub fn is_geodetic_mask(&self, s: u64) -> bool {
        s != 0 && self.closure_mask(s) == low_mask(self.n)
    }

    /// `S` together with every vertex k-geodominated by a pair of `S`.
    pub fn k_cover_mask(&self, s: u64, k: u32) -> u64 {
        let mut out = s;
        let mut rest = s;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            for v in bits(rest) {
                if self.dist.raw(u, v) == k {
                    out |= self.interval_mask(u, v);
                }
            }
        }
        out
    }

    pub fn is_k_geodetic_mask(&self, s: u64, k: u32) -> bool {
        s != 0 && self.k_cover_mask(s, k) == low_mask(self.n)
    }
}

fn check_vertex_set(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.universe() != g.order() {
        return Err(Error::domain("vertex set belongs to a graph of another order"));
    }
    if s.is_empty() {
        return Err(Error::domain("empty vertex set"));
    }
    Ok(())
}

/// `I[S] = V`. `G` must be connected.
pub fn is_geodetic(g: &Graph, s: &VertexSet) -> Result<bool> {
    check_vertex_set(g, s)?;
    Ok(GeodesicIndex::new(g)?.is_geodetic_mask(s.mask()))
}

/// Every vertex outside `S` is k-geodominated by a pair of `S`.
pub fn is_k_geodetic(g: &Graph, s: &VertexSet, k: u32) -> Result<bool> {
    check_vertex_set(g, s)?;
    Ok(GeodesicIndex::new(g)?.is_k_geodetic_mask(s.mask(), k))
}

fn check_cap(g: &Graph, opts: &SearchOptions) -> Result<()> {
    if g.order() > opts.max_order {
        return Err(Error::CapExceeded {
            what: "geodetic search order",
            limit: opts.max_order,
            actual: g.order(),
        });
    }
    Ok(())
}

fn search<P>(g: &Graph, forced: u64, opts: &SearchOptions, pred: P) -> Result<GeodeticResult>
where
    P: Fn(u64) -> bool + Sync,
{
    let n = g.order();
    let free = low_mask(n) & !forced;
    let hit = first_passing(forced, free, opts.parallel, &mut (), |_, _| {}, |_, m| pred(m))
        .expect("the full vertex set always passes");
    Ok(GeodeticResult {
        value: hit.mask.count_ones() as usize,
        witness: VertexSet::from_mask(n, hit.mask),
        explored: hit.explored,
    })
}

/// Exact `g(G)`.
///
/// Every geodetic set contains the extreme vertices, so only their supersets
/// are searched.
pub fn geodetic_number(g: &Graph, opts: &SearchOptions) -> Result<GeodeticResult> {
    check_cap(g, opts)?;
    let index = GeodesicIndex::new(g)?;
    let forced = g.extreme_vertices().mask();
    search(g, forced, opts, |m| index.is_geodetic_mask(m))
}

/// `g(G)` over the full subset lattice, without the extreme-vertex restriction.
pub fn geodetic_number_unpruned(g: &Graph, opts: &SearchOptions) -> Result<GeodeticResult> {
    check_cap(g, opts)?;
    let index = GeodesicIndex::new(g)?;
    search(g, 0, opts, |m| index.is_geodetic_mask(m))
}

/// Exact `g_k(G)`, `k >= 2`.
///
/// Vertices inside the set need no cover, so `V` itself always qualifies
/// and the search never comes back empty: when no pair lies at distance `k`
/// the value is `n`. A k-geodetic set is geodetic, so extreme vertices are
/// forced here as well.
pub fn k_geodetic_number(g: &Graph, k: u32, opts: &SearchOptions) -> Result<GeodeticResult> {
    if k < 2 {
        return Err(Error::domain(format!("k-geodetic number needs k >= 2, got {k}")));
    }
    check_cap(g, opts)?;
    let index = GeodesicIndex::new(g)?;
    let forced = g.extreme_vertices().mask();
    search(g, forced, opts, |m| index.is_k_geodetic_mask(m, k))
}
