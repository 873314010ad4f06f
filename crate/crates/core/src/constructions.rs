//! Extremal and near-extremal colored graphs for rainbow `B_{k,2}`-freeness.
//!
//! Three regimes by `k`:
//! * odd `k`: disjoint 1-factorized copies of `K_{k+1}`, slope `k/2`;
//! * `k` in `{2, 4}`: disjoint `(k-1)`-colored copies of `K_k`, slope `(k-1)/2`;
//! * even `k >= 6`: disjoint `k`-colored good subgraphs of `K_{k+1}`, slope
//!   `k^2 / (2(k+1))`.
//!
//! [`construct_jr`] builds the other candidate for even `k`, `K_{k+1}` minus one
//! class of a proper `(k+1)`-coloring. It has the right edge count but always
//! contains a rainbow `B_{k,2}`; it is kept as a negative control.

use itertools::Itertools;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::colored::{delete_color_class, disjoint_union_colored, ColoredGraph, EdgeColoring};
use crate::colorings::{factorize_complete, k_edge_color, near_one_factorization, one_factorization};
use crate::error::{Error, Result};
use crate::graph::{complement, complete_graph, cycle_on, is_isomorphic, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    OddK,
    EvenSmall,
    EvenLarge,
}

impl Regime {
    pub fn for_k(k: usize) -> Result<Self> {
        match k {
            0 | 1 => Err(Error::InvalidParameter(format!("broom size k={k} must be >= 2"))),
            2 | 4 => Ok(Regime::EvenSmall),
            _ if k % 2 == 1 => Ok(Regime::OddK),
            _ => Ok(Regime::EvenLarge),
        }
    }
}

/// Linear coefficient of the rainbow Turán number of `B_{k,2}` in `n`.
pub fn theorem_slope(k: usize) -> Result<Ratio<u64>> {
    let k64 = k as u64;
    Ok(match Regime::for_k(k)? {
        Regime::OddK => Ratio::new(k64, 2),
        Regime::EvenSmall => Ratio::new(k64 - 1, 2),
        Regime::EvenLarge => Ratio::new(k64 * k64, 2 * (k64 + 1)),
    })
}

fn empty_colored(n: usize) -> ColoredGraph {
    ColoredGraph::new(Graph::empty(n), EdgeColoring::new(Vec::new())).expect("edgeless")
}

fn copies(block: &ColoredGraph, count: usize) -> ColoredGraph {
    (0..count).fold(empty_colored(0), |acc, _| disjoint_union_colored(&acc, block))
}

/// `floor(n/(k+1))` one-factorized `K_{k+1}` plus a properly colored `K_r`
/// on the `r = n mod (k+1)` leftover vertices.
pub fn construct_odd(n: usize, k: usize) -> Result<ColoredGraph> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "odd regime needs odd k >= 3, got {k}"
        )));
    }
    let block = one_factorization(k + 1)?;
    let body = copies(&block, n / (k + 1));
    Ok(disjoint_union_colored(&body, &factorize_complete(n % (k + 1))))
}

/// `floor(n/k)` copies of `K_k` colored with `k - 1` colors plus a properly
/// colored `K_r` on the leftover vertices.
pub fn construct_even_small(n: usize, k: usize) -> Result<ColoredGraph> {
    if k != 2 && k != 4 {
        return Err(Error::InvalidParameter(format!(
            "small even regime needs k in {{2, 4}}, got {k}"
        )));
    }
    let block = one_factorization(k)?;
    let body = copies(&block, n / k);
    Ok(disjoint_union_colored(&body, &factorize_complete(n % k)))
}

/// A `k^2/2`-edge subgraph of `K_{k+1}` with no vertex of degree `k - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GoodSubgraph {
    k: usize,
    graph: Graph,
}

impl GoodSubgraph {
    pub fn new(k: usize, graph: Graph) -> Result<Self> {
        let fail = |why: &str| Err(Error::InvalidParameter(format!("not a good subgraph: {why}")));
        if k < 2 || !k.is_multiple_of(2) {
            return fail("k must be even");
        }
        if graph.vertex_count() != k + 1 {
            return fail("host must have k+1 vertices");
        }
        if graph.edge_count() != k * k / 2 {
            return fail("edge count must be k^2/2");
        }
        if graph.degrees().contains(&(k - 1)) {
            return fail("has a vertex of degree k-1");
        }
        Ok(GoodSubgraph { k, graph })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn host_order(&self) -> usize {
        self.k + 1
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

/// Complement of a `k/2`-cycle on `0..k/2` inside `K_{k+1}`.
pub fn good_subgraph(k: usize) -> Result<GoodSubgraph> {
    if k < 6 || !k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "good subgraph construction needs even k >= 6, got {k}"
        )));
    }
    GoodSubgraph::new(k, complement(&cycle_on(k + 1, k / 2)?))
}

/// `floor(n/(k+1))` copies of a `k`-colored good subgraph; leftovers isolated.
pub fn construct_even_large(n: usize, k: usize) -> Result<ColoredGraph> {
    let good = good_subgraph(k)?;
    let block = k_edge_color(good.graph(), k).ok_or_else(|| {
        Error::Internal(format!("no {k}-edge-coloring of the good subgraph found"))
    })?;
    let body = copies(&block, n / (k + 1));
    Ok(disjoint_union_colored(&body, &empty_colored(n % (k + 1))))
}

/// `K_{k+1}` with its circle-method near-1-factorization, minus class 0.
pub fn construct_jr(k: usize) -> Result<ColoredGraph> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "this construction needs even k, got {k}"
        )));
    }
    delete_color_class(&near_one_factorization(k + 1)?, 0)
}

/// All good subgraphs of `K_{k+1}`, generated from complements with `k/2`
/// edges and no degree-1 vertex, in lexicographic order of the complement's
/// edge indices. With `up_to_isomorphism`, keeps the first of each class.
pub fn enumerate_good_subgraphs(k: usize, up_to_isomorphism: bool) -> Result<Vec<GoodSubgraph>> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("k must be even, got {k}")));
    }
    if k > 10 {
        return Err(Error::TooLarge(format!("enumerating K_{} subgraphs", k + 1)));
    }
    let host = complete_graph(k + 1);
    let mut out: Vec<GoodSubgraph> = Vec::new();
    let mut reps: Vec<Graph> = Vec::new();
    for removed in (0..host.edge_count()).combinations(k / 2) {
        let mut deg = vec![0usize; k + 1];
        for &i in &removed {
            let e = host.edges()[i];
            deg[e.lo()] += 1;
            deg[e.hi()] += 1;
        }
        if deg.contains(&1) {
            continue;
        }
        let comp = Graph::from_edges(k + 1, removed.iter().map(|&i| host.edges()[i].into()))?;
        if up_to_isomorphism {
            if reps.iter().any(|r| is_isomorphic(r, &comp)) {
                continue;
            }
            reps.push(comp.clone());
        }
        out.push(GoodSubgraph::new(k, complement(&comp))?);
    }
    Ok(out)
}

/// Closed-form edge count of each regime's construction on `n` vertices.
pub fn construction_edge_count(regime: Regime, n: usize, k: usize) -> usize {
    let choose2 = |r: usize| r * r.saturating_sub(1) / 2;
    match regime {
        Regime::OddK => (n / (k + 1)) * k * (k + 1) / 2 + choose2(n % (k + 1)),
        Regime::EvenSmall => (n / k) * k * (k - 1) / 2 + choose2(n % k),
        Regime::EvenLarge => (n / (k + 1)) * k * k / 2,
    }
}

/// The regime's rainbow-free construction for `(n, k)`.
pub fn construct_for(n: usize, k: usize) -> Result<ColoredGraph> {
    match Regime::for_k(k)? {
        Regime::OddK => construct_odd(n, k),
        Regime::EvenSmall => construct_even_small(n, k),
        Regime::EvenLarge => construct_even_large(n, k),
    }
}
