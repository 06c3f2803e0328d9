//! Standard families with fixed labelings.
//!
//! `star(n)`, `wheel(n)` and `fan(n)` have `n + 1` vertices with the hub at
//! index 0, and are labelled exactly as `corona(K1, N_n)`, `corona(K1, C_n)`
//! and `corona(K1, P_n)`: rim/spine vertex `i` of the factor becomes `i + 1`.

use super::{corona, Graph};
use crate::error::{Error, Result};

fn at_least(name: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::domain(format!("{name}({n}) needs n >= {min}")));
    }
    Ok(())
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    at_least("path", n, 1)?;
    let mut g = Graph::with_order(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    Ok(g)
}

/// Cycle `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", n, 3)?;
    let mut g = path(n)?;
    g.add_edge(n - 1, 0);
    Ok(g)
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete", n, 1)?;
    let mut g = Graph::with_order(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Edgeless graph `N_n`.
pub fn empty(n: usize) -> Result<Graph> {
    at_least("empty", n, 1)?;
    Graph::with_order(n)
}

/// `K_{1,n}`.
pub fn star(n: usize) -> Result<Graph> {
    at_least("star", n, 1)?;
    Ok(corona(&complete(1)?, &empty(n)?)?.0)
}

/// `W_{1,n} = K1 ⊙ C_n`.
pub fn wheel(n: usize) -> Result<Graph> {
    at_least("wheel", n, 3)?;
    Ok(corona(&complete(1)?, &cycle(n)?)?.0)
}

/// `F_{1,n} = K1 ⊙ P_n`.
pub fn fan(n: usize) -> Result<Graph> {
    at_least("fan", n, 2)?;
    Ok(corona(&complete(1)?, &path(n)?)?.0)
}
