//! Exact rainbow Turán numbers `ex*(n, F)` by exhaustive search.
//!
//! Full mode walks every graph on `n` labeled vertices, from the most edges
//! down, and stops at the first edge count where some graph admits a
//! rainbow-free proper coloring. Pruned mode (brooms with handle 2 only)
//! uses two facts instead: a graph is rainbow-free colorable iff each of its
//! components is, and every component of a rainbow-`B_{k,2}`-free graph is a
//! star, has at most `k+1` vertices, or has maximum degree at most `k-1`.
//! It finds the best admissible connected graph for each order and combines
//! orders by a partition DP.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{Counters, SearchReport, Verdict, Witness};
use super::search_rainbow_free;
use crate::broom::BroomSpec;
use crate::colored::{disjoint_union_colored, ColoredGraph, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{complete_graph, Graph};

pub const FULL_MODE_MAX_N: usize = 6;
pub const PRUNED_MODE_MAX_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExStarMode {
    Full,
    Pruned,
}

/// Masks over `bits` positions with exactly `ones` bits set, ascending.
fn masks_with_popcount(bits: usize, ones: usize) -> Vec<u64> {
    if ones > bits {
        return Vec::new();
    }
    if ones == 0 {
        return vec![0];
    }
    let limit: u64 = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
    let mut out = Vec::new();
    let mut v: u64 = (1u64 << ones) - 1;
    loop {
        out.push(v);
        if v == limit << (bits - ones) & limit {
            break;
        }
        // Gosper's hack: next larger integer with the same popcount.
        let c = v & v.wrapping_neg();
        let r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
        if v > limit {
            break;
        }
    }
    out
}

/// Evaluates every candidate (no short-circuit, so counters are reproducible)
/// and returns the smallest-mask success.
fn eval_level(
    host: &Graph,
    masks: &[u64],
    spec: BroomSpec,
    counters: &mut Counters,
) -> Result<Option<(u64, ColoredGraph)>> {
    let results: Vec<(u64, super::Found)> = masks
        .par_iter()
        .map(|&mask| search_rainbow_free(&host.edge_subgraph_mask(mask), spec, None).map(|f| (mask, f)))
        .collect::<Result<_>>()?;
    let mut best = None;
    for (mask, found) in results {
        counters.graphs_examined += 1;
        counters.nodes_explored += found.nodes;
        counters.colorings_enumerated += found.leaves;
        if best.is_none() {
            if let Some(cg) = found.coloring {
                best = Some((mask, cg));
            }
        }
    }
    Ok(best)
}

pub fn ex_star_bruteforce(n: usize, spec: BroomSpec, mode: ExStarMode) -> Result<SearchReport> {
    let start = Instant::now();
    let mut report = match mode {
        ExStarMode::Full => full(n, spec)?,
        ExStarMode::Pruned => pruned(n, spec)?,
    };
    report.instance = format!("ex*({n}, {spec}) [{}]", format!("{mode:?}").to_lowercase());
    Ok(report.timed(start.elapsed()))
}

fn full(n: usize, spec: BroomSpec) -> Result<SearchReport> {
    if n > FULL_MODE_MAX_N {
        return Err(Error::TooLarge(format!(
            "full mode enumerates all 2^C(n,2) graphs; n={n} exceeds {FULL_MODE_MAX_N}"
        )));
    }
    let host = complete_graph(n);
    let mut counters = Counters::default();
    for m in (0..=host.edge_count()).rev() {
        let masks = masks_with_popcount(host.edge_count(), m);
        if let Some((mask, cg)) = eval_level(&host, &masks, spec, &mut counters)? {
            let mut report = SearchReport::new("", Verdict::Holds);
            report.value = Some(m);
            report.witness = Some(Witness::Coloring { graph: cg });
            report.counters = counters;
            report.notes.push(format!("witness edge mask {mask:#x} over K_{n} edges"));
            return Ok(report);
        }
    }
    Err(Error::Internal("the edgeless graph is always rainbow-free".into()))
}

fn is_star(g: &Graph) -> bool {
    g.edge_count() + 1 == g.vertex_count() && g.max_degree() == g.edge_count()
}

/// Connected graphs on `s` vertices with `m` edges whose components may appear
/// in a rainbow-`B_{k,2}`-free graph, as ascending masks over `K_s` edges.
fn admissible_connected(host: &Graph, m: usize, k: usize) -> Vec<u64> {
    let s = host.vertex_count();
    let mut masks: Vec<u64> = if s <= k + 1 {
        masks_with_popcount(host.edge_count(), m)
    } else {
        let mut out = Vec::new();
        bounded_degree(host, 0, m, k - 1, &mut vec![0; s], 0, &mut out);
        if m + 1 == s {
            for c in 0..s {
                let mask = host
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.contains(c))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i);
                out.push(mask);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    };
    masks.retain(|&mask| {
        let g = host.edge_subgraph_mask(mask);
        g.is_connected() && (s <= k + 1 || g.max_degree() < k || is_star(&g))
    });
    masks
}

/// All edge subsets of `host` with `need` more edges from index `from` on,
/// keeping every degree at most `cap`.
fn bounded_degree(
    host: &Graph,
    from: usize,
    need: usize,
    cap: usize,
    deg: &mut Vec<usize>,
    mask: u64,
    out: &mut Vec<u64>,
) {
    if need == 0 {
        out.push(mask);
        return;
    }
    let edges = host.edges();
    if edges.len() - from < need {
        return;
    }
    let spare: usize = deg.iter().map(|&d| cap - d).sum();
    if spare < 2 * need {
        return;
    }
    for i in from..edges.len() {
        if edges.len() - i < need {
            break;
        }
        let (a, b) = (edges[i].lo(), edges[i].hi());
        if deg[a] == cap || deg[b] == cap {
            continue;
        }
        deg[a] += 1;
        deg[b] += 1;
        bounded_degree(host, i + 1, need - 1, cap, deg, mask | 1 << i, out);
        deg[a] -= 1;
        deg[b] -= 1;
    }
}

fn pruned(n: usize, spec: BroomSpec) -> Result<SearchReport> {
    if spec.handle_len() != 2 {
        return Err(Error::InvalidParameter(
            "pruned mode is only justified for brooms with handle length 2".into(),
        ));
    }
    if n > PRUNED_MODE_MAX_N {
        return Err(Error::TooLarge(format!(
            "pruned mode supports n <= {PRUNED_MODE_MAX_N}, got {n}"
        )));
    }
    let k = spec.k();
    let mut counters = Counters::default();
    // best[s]: most edges of an admissible, rainbow-free-colorable connected graph on s vertices.
    let mut best: Vec<Option<(usize, ColoredGraph)>> = vec![None; n + 1];
    if n >= 1 {
        best[1] = Some((0, ColoredGraph::new(Graph::empty(1), EdgeColoring::new(vec![])).expect("edgeless")));
    }
    for s in 2..=n {
        let host = complete_graph(s);
        let top = if s <= k + 1 {
            host.edge_count()
        } else {
            ((k - 1) * s / 2).max(s - 1)
        };
        for m in (s - 1..=top).rev() {
            let masks = admissible_connected(&host, m, k);
            if let Some((_, cg)) = eval_level(&host, &masks, spec, &mut counters)? {
                counters.bump(&format!("best_connected_{s}"), m as u64);
                best[s] = Some((m, cg));
                break;
            }
        }
    }

    // value[t] over vertex budgets; choice[t] is the last component order.
    let mut value = vec![0usize; n + 1];
    let mut choice = vec![0usize; n + 1];
    for t in 1..=n {
        let mut top: Option<(usize, usize)> = None;
        for s in 1..=t {
            if let Some((edges, _)) = &best[s] {
                let cand = value[t - s] + edges;
                if top.is_none_or(|(v, _)| cand > v) {
                    top = Some((cand, s));
                }
            }
        }
        let (v, s) = top.expect("isolated vertices are always admissible");
        value[t] = v;
        choice[t] = s;
    }

    let mut parts = Vec::new();
    let mut t = n;
    while t > 0 {
        parts.push(choice[t]);
        t -= choice[t];
    }
    parts.reverse();
    let mut witness = ColoredGraph::new(Graph::empty(0), EdgeColoring::new(vec![])).expect("edgeless");
    for &s in &parts {
        let (_, cg) = best[s].as_ref().expect("chosen order has a witness");
        witness = disjoint_union_colored(&witness, cg);
    }

    let mut report = SearchReport::new("", Verdict::Holds);
    report.value = Some(value[n]);
    report.witness = Some(Witness::Coloring { graph: witness });
    report.counters = counters;
    report.notes.push(format!("component orders {parts:?}"));
    report.notes.push(format!(
        "components restricted to stars, graphs on <= {} vertices, or max degree <= {}",
        k + 1,
        k.saturating_sub(1)
    ));
    Ok(report)
}
