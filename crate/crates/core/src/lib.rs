//! Exact geodetic, k-geodetic and Steiner invariants of small simple graphs,
//! corona products, and a harness that checks the closed-form corona results
//! on graph corpora.
//!
//! Graphs have at most 62 vertices; vertex subsets are single `u64` words.

pub mod cli;
pub mod error;
pub mod geodesic;
pub mod graph;
pub mod harness;
mod search;
pub mod steiner;

pub use error::{Error, Result};
pub use geodesic::{
    geodetic_number, geodetic_number_unpruned, interval, interval_closure, is_geodetic,
    is_geodominated, is_k_geodetic, k_geodetic_number, GeodesicIndex, GeodeticResult,
};
pub use graph::{corona, CoronaLayout, DistanceMatrix, Graph, Vertex, VertexSet};
pub use search::SearchOptions;
pub use steiner::{
    all_steiner_sets, is_steiner_set, oracle_steiner_trees, steiner_distance, steiner_hull,
    steiner_number, steiner_number_among, steiner_number_corona, SteinerResult, SteinerTable,
};
