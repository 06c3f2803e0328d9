use super::{bits, Graph, Vertex};

/// Distance between vertices in different components. Larger than any real
/// distance, and twice it still fits in a `u32`.
pub const UNREACHABLE: u32 = u32::MAX / 4;

/// All-pairs hop distances, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// One BFS per source over the bitmask rows.
    pub fn bfs(g: &Graph) -> Self {
        let n = g.order();
        let mut d = vec![UNREACHABLE; n * n];
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            let mut seen = 1u64 << s;
            let mut frontier = seen;
            let mut level = 0;
            while frontier != 0 {
                for v in bits(frontier) {
                    row[v] = level;
                }
                let mut next = 0;
                for v in bits(frontier) {
                    next |= g.row(v);
                }
                next &= !seen;
                seen |= next;
                frontier = next;
                level += 1;
            }
        }
        DistanceMatrix { n, d }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Raw entry; [`UNREACHABLE`] across components.
    #[inline]
    pub fn raw(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        let x = self.raw(u, v);
        (x != UNREACHABLE).then_some(x)
    }

    pub fn reachable(&self, u: Vertex, v: Vertex) -> bool {
        self.raw(u, v) != UNREACHABLE
    }

    /// Largest distance, or `None` if some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for &x in &self.d {
            if x == UNREACHABLE {
                return None;
            }
            best = best.max(x);
        }
        Some(best)
    }
}
