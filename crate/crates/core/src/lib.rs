//! Rainbow broom toolkit: constructions, proper edge-colorings, rainbow
//! `B_{k,l}` detection and exhaustive verifiers for rainbow-free colorings.

pub mod broom;
pub mod colored;
pub mod colorings;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;

#[cfg(test)]
mod testutil;

pub use broom::{
    build_broom, find_rainbow_broom, find_rainbow_broom2, find_rainbow_tree, verify_certificate,
    BroomSpec, RainbowCertificate, TreeEmbedding,
};
pub use colored::{
    color_classes, delete_color_class, disjoint_union_colored, is_proper, Color,
    ColorClassPartition, ColoredGraph, EdgeColoring,
};
pub use colorings::{
    k_edge_color, k_edge_color_randomized, near_one_factorization, one_factorization,
    FactorizationKind,
};
pub use constructions::{
    construct_even_large, construct_even_small, construct_for, construct_jr, construct_odd,
    enumerate_good_subgraphs, good_subgraph, theorem_slope, GoodSubgraph, Regime,
};
pub use error::{Error, Result};
pub use graph::{complement, complete_graph, disjoint_union, Edge, Graph};
pub use num_rational::Ratio;
