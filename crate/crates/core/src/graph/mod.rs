//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Every adjacency row is a single `u64` bitmask, so vertex subsets of a
//! graph are plain words as well ([`VertexSet`]).

mod corona;
mod distance;
mod edgelist;
mod generators;
mod graph6;
mod random;

pub use corona::{corona, CoronaLayout};
pub use distance::{DistanceMatrix, UNREACHABLE};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use generators::{complete, cycle, empty, fan, path, star, wheel};
pub use graph6::{encode_graph6, parse_graph6, parse_graph6_lines};
pub use random::random_connected_gnp;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported order (graph6 short form, one machine word per row).
pub const MAX_ORDER: usize = 62;

pub type Vertex = usize;

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a word, ascending.
#[derive(Debug, Clone)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = Vertex;

    #[inline]
    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn bits(mask: u64) -> Bits {
    Bits(mask)
}

/// A subset of the vertices `0..n` of some graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    mask: u64,
    n: usize,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { mask: 0, n }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            mask: low_mask(n),
            n,
        }
    }

    /// Builds a set from a raw mask; bits at or above `n` are discarded.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        VertexSet {
            mask: mask & low_mask(n),
            n,
        }
    }

    /// Builds a set from vertex indices, rejecting any index `>= n`.
    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(n: usize, vertices: I) -> Result<Self> {
        let mut set = VertexSet::empty(n);
        for v in vertices {
            if v >= n {
                return Err(Error::domain(format!("vertex {v} out of range 0..{n}")));
            }
            set.mask |= 1 << v;
        }
        Ok(set)
    }

    pub fn singleton(n: usize, v: Vertex) -> Self {
        debug_assert!(v < n);
        VertexSet { mask: 1 << v, n }
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Order of the graph this set belongs to.
    #[inline]
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.mask == low_mask(self.n)
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        v < self.n && self.mask >> v & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.mask |= 1 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        if v < self.n {
            self.mask &= !(1 << v);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet {
            mask: self.mask | other.mask,
            n: self.n,
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet {
            mask: self.mask & other.mask,
            n: self.n,
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet {
            mask: self.mask & !other.mask,
            n: self.n,
        }
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            mask: !self.mask & low_mask(self.n),
            n: self.n,
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.mask & other.mask == 0
    }

    pub fn iter(&self) -> Bits {
        bits(self.mask)
    }

    /// Members in ascending order.
    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = Bits;

    fn into_iter(self) -> Bits {
        self.iter()
    }
}

/// Undirected simple graph with vertices `0..n`.
///
/// Adjacency is symmetric and loop-free; connectivity is not required.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn with_order(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("graphs need at least one vertex"));
        }
        if n > MAX_ORDER {
            return Err(Error::Unsupported(format!(
                "order {n} exceeds the maximum of {MAX_ORDER}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::with_order(n).map_err(|e| match e {
            Error::Domain(m) => Error::parse(0, m),
            other => other,
        })?;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::parse(
                    i,
                    format!("edge ({u},{v}) has an endpoint outside 0..{n}"),
                ));
            }
            if u == v {
                return Err(Error::parse(i, format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Adjacency row of `v` as a raw mask.
    #[inline]
    pub fn row(&self, v: Vertex) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        VertexSet::from_mask(self.n, self.adj[v])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.adj[v] == low_mask(self.n) & !(1 << v))
    }

    /// Vertices reachable from `start` inside `within` (a raw mask containing `start`).
    pub(crate) fn reach_within(&self, start: Vertex, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced by `mask` is connected (the empty set is not).
    pub(crate) fn mask_connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        self.reach_within(mask.trailing_zeros() as usize, mask) == mask
    }

    pub fn is_connected(&self) -> bool {
        self.mask_connected(low_mask(self.n))
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = low_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let comp = self.reach_within(left.trailing_zeros() as usize, left);
            out.push(VertexSet::from_mask(self.n, comp));
            left &= !comp;
        }
        out
    }

    /// Vertices whose neighbourhood induces a complete subgraph. Isolated and
    /// pendant vertices qualify.
    pub fn extreme_vertices(&self) -> VertexSet {
        let mut out = 0u64;
        for v in 0..self.n {
            let nb = self.adj[v];
            if bits(nb).all(|u| nb & !(1 << u) & !self.adj[u] == 0) {
                out |= 1 << v;
            }
        }
        VertexSet::from_mask(self.n, out)
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` preserving vertex order:
    /// the i-th smallest member of `s` becomes vertex i.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::domain("induced subgraph of the empty set"));
        }
        let members = s.to_vec();
        let mut g = Graph::with_order(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// `N_W(v)`: neighbours of `v` that lie in `w`.
    pub fn neighbors_in(&self, w: &VertexSet, v: Vertex) -> VertexSet {
        VertexSet::from_mask(self.n, self.adj[v] & w.mask())
    }

    /// Whether every component is a complete graph.
    pub fn is_union_of_cliques(&self) -> bool {
        self.components().iter().all(|c| {
            c.iter()
                .all(|v| self.adj[v] & c.mask() == c.mask() & !(1 << v))
        })
    }

    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::bfs(self)
    }

    /// Largest finite distance, or `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        self.distances().diameter()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
