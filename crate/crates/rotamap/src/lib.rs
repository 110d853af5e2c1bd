//! Arc-transitive coset graphs with arbitrary finite edge-multiplicity and
//! their vertex-rotary embeddings.
//!
//! The crate builds coset graphs Cos(G,H,J) from explicit permutation groups,
//! computes their base graphs and extenders, constructs the three map
//! embeddings carried by a rotary pair or flag-regular triple (rotary,
//! bi-rotary, flag-regular), and verifies the combinatorial surface
//! certificates (two faces per edge, umbrellas, Euler characteristic,
//! orientability). The `verify` module bundles the named check suites behind
//! the CLI and the acceptance tests.

pub mod catalog;
pub mod coset;
pub mod cosetgraph;
pub mod error;
pub mod exec;
pub mod export;
pub mod graph;
pub mod group;
pub mod maps;
pub mod perm;
pub mod rotary;
pub mod verify;

pub use coset::{action_kernel, core, CosetSpace};
pub use cosetgraph::{
    base_graph, build_coset_graph, mu_extenders, quotient_core, recover_coset_rep, simp_cos,
    CosetGraph, GraphParams,
};
pub use error::{CatalogError, GraphError, GroupError, MapError, RotaryError, TripleError};
pub use graph::{graph_isomorphic, MultiGraph};
pub use group::{closure, Group, DEFAULT_CAP};
pub use perm::Perm;
