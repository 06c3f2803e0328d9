use rand::Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Rejection attempts per requested graph before giving up.
const MAX_ATTEMPTS: usize = 100_000;

/// Erdős–Rényi `G(n, p)` conditioned on connectivity by rejection.
///
/// Edges are drawn in lexicographic pair order, so a given RNG state always
/// yields the same graph.
pub fn random_connected_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("edge probability {p} outside [0,1]")));
    }
    for _ in 0..MAX_ATTEMPTS {
        let mut g = Graph::with_order(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::domain(format!(
        "no connected G({n}, {p}) sample after {MAX_ATTEMPTS} attempts"
    )))
}
