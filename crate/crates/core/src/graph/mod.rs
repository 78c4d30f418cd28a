//! The superspecial (2,2)-isogeny graph: construction by breadth-first
//! closure, automorphism-orbit weights, the type census, induced subgraphs
//! and export.

pub mod build;
pub mod census;
pub mod checks;
mod digraph;
pub mod export;
pub mod reroute;
pub mod subgraph;

pub use build::{
    build_graph, expand_vertex, kernel_permutations, BuildStats, EdgeRecord, SuperspecialGraph, VertexKind,
    VertexModel, VertexRecord,
};
pub use census::{census, expected_count, generic_j_count, CensusReport, Epsilons};
pub use digraph::{bfs_distances, Edge, WeightedDigraph};
pub use export::{to_dot, write_edges_csv, GraphFile};
pub use reroute::{product_interior_paths, reroute_path, reroute_path_within};
pub use subgraph::{subgraph, Subgraph};
