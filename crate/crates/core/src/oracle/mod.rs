//! Brute-force ground truth.
//!
//! Everything here is exhaustive at desk scale: rainbow-free coloring search,
//! exact rainbow Turán numbers for tiny `n`, and finite verification of the
//! structural facts the constructions depend on.

mod claims;
mod exstar;
mod report;
pub(crate) mod search;

use std::ops::ControlFlow;

pub use claims::{
    verify_claim_no_k_minus_1, verify_construction, verify_good_subgraphs, verify_plantholt,
    ClaimMode,
};
pub use exstar::{ex_star_bruteforce, ExStarMode, FULL_MODE_MAX_N, PRUNED_MODE_MAX_N};
pub use report::{Counters, SearchReport, Verdict, Witness};

use crate::broom::{build_broom, BroomSpec};
use crate::colored::ColoredGraph;
use crate::error::Result;
use crate::graph::Graph;
use search::{PartialColoring, Probe};

pub(crate) fn probe_for(spec: BroomSpec) -> Probe {
    if spec.handle_len() == 2 {
        Probe::Broom2(spec.k())
    } else {
        Probe::Tree(build_broom(spec))
    }
}

/// Search outcome plus the effort it took.
pub(crate) struct Found {
    pub coloring: Option<ColoredGraph>,
    pub nodes: u64,
    pub leaves: u64,
}

pub(crate) fn search_rainbow_free(
    g: &Graph,
    spec: BroomSpec,
    color_budget: Option<usize>,
) -> Result<Found> {
    let budget = color_budget.unwrap_or(g.edge_count()).min(g.edge_count());
    let mut pc = PartialColoring::new(g, budget)?;
    let probe = probe_for(spec);
    let mut witness = None;
    let _ = pc.enumerate(&probe, &mut |p| {
        witness = Some(p.to_colored());
        ControlFlow::Break(())
    });
    Ok(Found {
        coloring: witness,
        nodes: pc.nodes,
        leaves: pc.leaves,
    })
}

/// A proper coloring of `g` with at most `color_budget` colors (default
/// `|E(g)|`) under which `g` has no rainbow copy of the broom, if any exists.
pub fn exists_rainbow_free_coloring(
    g: &Graph,
    spec: BroomSpec,
    color_budget: Option<usize>,
) -> Result<Option<ColoredGraph>> {
    Ok(search_rainbow_free(g, spec, color_budget)?.coloring)
}
