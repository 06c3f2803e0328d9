use serde::Serialize;

use super::{low_mask, Graph, Vertex, VertexSet, MAX_ORDER};
use crate::error::{Error, Result};

/// Index bookkeeping for a corona product `G ⊙ H`.
///
/// Vertex `v_i` of `G` keeps index `i`; copy `H_i` occupies the block
/// `n1 + i*n2 .. n1 + (i+1)*n2`, with `H`'s own labelling inside the block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoronaLayout {
    pub n1: usize,
    pub n2: usize,
}

impl CoronaLayout {
    pub fn order(&self) -> usize {
        self.n1 * (1 + self.n2)
    }

    /// Index of `v_i` in the product.
    pub fn g_index(&self, i: usize) -> Vertex {
        debug_assert!(i < self.n1);
        i
    }

    /// Indices of the copy `H_i`, ascending.
    pub fn copy_indices(&self, i: usize) -> std::ops::Range<Vertex> {
        debug_assert!(i < self.n1);
        let start = self.n1 + i * self.n2;
        start..start + self.n2
    }

    /// Index of vertex `x` of `H` inside copy `H_i`.
    pub fn copy_vertex(&self, i: usize, x: Vertex) -> Vertex {
        debug_assert!(x < self.n2);
        self.n1 + i * self.n2 + x
    }

    /// `V(G)` as a vertex set of the product.
    pub fn g_set(&self) -> VertexSet {
        VertexSet::from_mask(self.order(), low_mask(self.n1))
    }

    /// `V_i` as a vertex set of the product.
    pub fn copy_set(&self, i: usize) -> VertexSet {
        let r = self.copy_indices(i);
        VertexSet::from_mask(self.order(), low_mask(r.end) & !low_mask(r.start))
    }

    /// Union of all copies.
    pub fn copies_set(&self) -> VertexSet {
        self.g_set().complement()
    }

    /// Which part a product vertex belongs to: `Ok(i)` for `v_i`, `Err(i)`
    /// for a member of `V_i`.
    pub fn locate(&self, v: Vertex) -> std::result::Result<usize, usize> {
        if v < self.n1 {
            Ok(v)
        } else {
            Err((v - self.n1) / self.n2)
        }
    }
}

/// Corona product `G ⊙ H`. `G` must be connected; `H` may be anything.
pub fn corona(g: &Graph, h: &Graph) -> Result<(Graph, CoronaLayout)> {
    if !g.is_connected() {
        return Err(Error::domain("corona product needs a connected first factor"));
    }
    let layout = CoronaLayout {
        n1: g.order(),
        n2: h.order(),
    };
    if layout.order() > MAX_ORDER {
        return Err(Error::Unsupported(format!(
            "corona product of order {} exceeds {MAX_ORDER}",
            layout.order()
        )));
    }
    let mut p = Graph::with_order(layout.order())?;
    for (u, v) in g.edges() {
        p.add_edge(u, v);
    }
    for i in 0..layout.n1 {
        for (x, y) in h.edges() {
            p.add_edge(layout.copy_vertex(i, x), layout.copy_vertex(i, y));
        }
        for x in layout.copy_indices(i) {
            p.add_edge(i, x);
        }
    }
    Ok((p, layout))
}
