//! Finite verification of the structural statements behind the constructions.

use std::ops::ControlFlow;
use std::time::Instant;

use itertools::Itertools;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{Counters, SearchReport, Verdict, Witness};
use super::search::{PartialColoring, Probe};
use crate::broom::{build_broom, find_rainbow_broom, find_rainbow_tree, BroomSpec};
use crate::colored::ColoredGraph;
use crate::colorings::{k_edge_color, k_edge_color_randomized};
use crate::constructions::{enumerate_good_subgraphs, good_subgraph};
use crate::error::{Error, Result};
use crate::graph::{complete_graph, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum ClaimMode {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

fn check_even(k: usize) -> Result<()> {
    if k < 2 || !k.is_multiple_of(2) {
        Err(Error::InvalidParameter(format!("k must be even and >= 2, got {k}")))
    } else {
        Ok(())
    }
}

/// `K_{k+1}` minus the listed host edges.
fn host_minus(host: &Graph, removed: &[usize]) -> Graph {
    let all = if host.edge_count() == 64 { u64::MAX } else { (1u64 << host.edge_count()) - 1 };
    let mask = removed.iter().fold(all, |acc, &i| acc & !(1u64 << i));
    host.edge_subgraph_mask(mask)
}

struct InstanceOutcome {
    counters: Counters,
    counterexample: Option<Witness>,
}

/// Checks the biconditional on every exactly-`k`-colored proper coloring of `h`.
fn check_all_colorings(h: &Graph, k: usize) -> Result<InstanceOutcome> {
    let has_low = h.degrees().contains(&(k - 1));
    let mut counters = Counters::default();
    let mut counterexample = None;
    let mut failure = None;
    let mut first = true;
    let mut pc = PartialColoring::new(h, k)?;
    let _ = pc.enumerate(&Probe::Off, &mut |p| {
        if p.colors_used() != k {
            return ControlFlow::Continue(());
        }
        counters.colorings_enumerated += 1;
        if p.class_sizes().iter().any(|&s| s != k / 2) {
            failure = Some(Error::Internal(format!(
                "a {k}-coloring of a k^2/2-edge subgraph has a class of size != k/2"
            )));
            return ControlFlow::Break(());
        }
        let rainbow = p.has_rainbow_broom2(k);
        if first {
            first = false;
            let public = find_rainbow_broom(&p.to_colored(), BroomSpec::handle2(k).expect("k >= 2"));
            if public.is_some() != rainbow {
                failure = Some(Error::Internal("coloring search and detector disagree".into()));
                return ControlFlow::Break(());
            }
        }
        if rainbow {
            counters.bump("colorings_with_rainbow_copy", 1);
        }
        if rainbow != has_low {
            counterexample = Some(witness_for(p.to_colored(), k));
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    if let Some(err) = failure {
        return Err(err);
    }
    counters.nodes_explored = pc.nodes;
    counters.graphs_examined = 1;
    if has_low {
        counters.bump("subgraphs_with_degree_k_minus_1", 1);
    }
    Ok(InstanceOutcome {
        counters,
        counterexample,
    })
}

fn witness_for(cg: ColoredGraph, k: usize) -> Witness {
    match find_rainbow_broom(&cg, BroomSpec::handle2(k).expect("k >= 2")) {
        Some(certificate) => Witness::Certificate {
            graph: cg,
            certificate,
        },
        None => Witness::Coloring { graph: cg },
    }
}

/// For `k`-edge-colored `k^2/2`-edge subgraphs `H` of `K_{k+1}`: `H` has a
/// rainbow `B_{k,2}` iff `H` has a vertex of degree `k - 1`.
pub fn verify_claim_no_k_minus_1(k: usize, mode: ClaimMode) -> Result<SearchReport> {
    check_even(k)?;
    let start = Instant::now();
    let host = complete_graph(k + 1);
    let mut report = SearchReport::new(
        format!("rainbow B_{{{k},2}} iff degree {} vertex, k^2/2-edge subgraphs of K_{}", k - 1, k + 1),
        Verdict::Holds,
    );
    let mut counters = Counters::default();
    let mut counterexample = None;

    match mode {
        ClaimMode::Exhaustive => {
            let complements: Vec<Vec<usize>> = (0..host.edge_count()).combinations(k / 2).collect();
            let outcomes: Vec<InstanceOutcome> = complements
                .par_iter()
                .map(|removed| check_all_colorings(&host_minus(&host, removed), k))
                .collect::<Result<_>>()?;
            for out in outcomes {
                counters.absorb(&out.counters);
                if counterexample.is_none() {
                    counterexample = out.counterexample;
                }
            }
            report
                .notes
                .push("every canonical proper coloring with exactly k colors; class sizes k/2 asserted".into());
        }
        ClaimMode::Sampled { count, seed } => {
            report.seed = Some(seed);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let spec = BroomSpec::handle2(k)?;
            for _ in 0..count {
                let removed = sample(&mut rng, host.edge_count(), k / 2).into_vec();
                let h = host_minus(&host, &removed);
                let cg = k_edge_color_randomized(&h, k, &mut rng).ok_or_else(|| {
                    Error::Internal(format!("no {k}-edge-coloring of a k^2/2-edge subgraph"))
                })?;
                counters.graphs_examined += 1;
                counters.colorings_enumerated += 1;
                if cg.color_classes().sizes().iter().any(|&s| s != k / 2) {
                    return Err(Error::Internal("class of size != k/2".into()));
                }
                let has_low = h.degrees().contains(&(k - 1));
                let rainbow = find_rainbow_broom(&cg, spec).is_some();
                if has_low {
                    counters.bump("subgraphs_with_degree_k_minus_1", 1);
                }
                if rainbow {
                    counters.bump("colorings_with_rainbow_copy", 1);
                }
                if rainbow != has_low {
                    counterexample = Some(witness_for(cg, k));
                    break;
                }
            }
            report
                .notes
                .push(format!("sampled {count} random subgraphs with one random {k}-coloring each"));
        }
    }
    if let Some(w) = counterexample {
        report.verdict = Verdict::Fails;
        report.witness = Some(w);
    }
    report.counters = counters;
    Ok(report.timed(start.elapsed()))
}

/// Every `k^2/2`-edge subgraph of `K_{k+1}` is `k`-edge-colorable.
pub fn verify_plantholt(k: usize) -> Result<SearchReport> {
    check_even(k)?;
    let start = Instant::now();
    let host = complete_graph(k + 1);
    let complements: Vec<Vec<usize>> = (0..host.edge_count()).combinations(k / 2).collect();
    let failures: Vec<Option<Graph>> = complements
        .par_iter()
        .map(|removed| {
            let h = host_minus(&host, removed);
            match k_edge_color(&h, k) {
                Some(cg) if cg.color_count() <= k => None,
                _ => Some(h),
            }
        })
        .collect();
    let mut report = SearchReport::new(
        format!("every {}-edge subgraph of K_{} is {k}-edge-colorable", k * k / 2, k + 1),
        Verdict::Holds,
    );
    report.counters.graphs_examined = complements.len() as u64;
    if let Some(bad) = failures.into_iter().flatten().next() {
        report.verdict = Verdict::Fails;
        report.notes.push(format!("no {k}-coloring found for {}", serde_json::to_string(&bad).unwrap_or_default()));
    }
    Ok(report.timed(start.elapsed()))
}

/// Good subgraphs of `K_{k+1}` exist iff `k >= 6`, the cycle-complement one is
/// among them, and its `k`-colorings found by the colorer are rainbow-free.
pub fn verify_good_subgraphs(k: usize) -> Result<SearchReport> {
    check_even(k)?;
    let start = Instant::now();
    let all = enumerate_good_subgraphs(k, false)?;
    let mut report = SearchReport::new(format!("good subgraphs of K_{}", k + 1), Verdict::Holds);
    report.counters.graphs_examined = all.len() as u64;
    report.counters.bump("good_subgraphs", all.len() as u64);
    report
        .counters
        .bump("isomorphism_classes", enumerate_good_subgraphs(k, true)?.len() as u64);
    if k < 6 {
        if !all.is_empty() {
            report.verdict = Verdict::Fails;
            report.notes.push(format!("found a good subgraph for k={k}"));
        }
    } else {
        let target = good_subgraph(k)?;
        if !all.contains(&target) {
            report.verdict = Verdict::Fails;
            report.notes.push("cycle-complement subgraph missing from enumeration".into());
        } else if let Some(cg) = k_edge_color(target.graph(), k) {
            let check = verify_construction(&cg, BroomSpec::handle2(k)?)?;
            if !check.holds() {
                report.verdict = Verdict::Fails;
                report.witness = check.witness;
            }
        } else {
            report.verdict = Verdict::Fails;
            report.notes.push("good subgraph not k-edge-colorable".into());
        }
    }
    Ok(report.timed(start.elapsed()))
}

/// Runs both detectors on `cg`; they must agree.
pub fn verify_construction(cg: &ColoredGraph, spec: BroomSpec) -> Result<SearchReport> {
    let start = Instant::now();
    let fast = find_rainbow_broom(cg, spec);
    let tree = build_broom(spec);
    let slow = find_rainbow_tree(cg, &tree)?;
    if fast.is_some() != slow.is_some() {
        return Err(Error::Internal(format!(
            "detectors disagree on {spec}: fast={} tree={}",
            fast.is_some(),
            slow.is_some()
        )));
    }
    let mut report = SearchReport::new(
        format!("rainbow {spec} in a colored graph with {} vertices and {} edges", cg.vertex_count(), cg.edge_count()),
        Verdict::Holds,
    );
    report.counters.graphs_examined = 1;
    match fast {
        Some(certificate) => {
            report.verdict = Verdict::Fails;
            report.witness = Some(Witness::Certificate {
                graph: cg.clone(),
                certificate,
            });
        }
        None => report.notes.push("rainbow-free".into()),
    }
    Ok(report.timed(start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct_even_large, construct_jr, construct_odd};

    #[test]
    fn claim_holds_for_k4_and_every_instance_is_rainbow() {
        let r = verify_claim_no_k_minus_1(4, ClaimMode::Exhaustive).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.counters.graphs_examined, 45);
        assert_eq!(r.counters.extra["subgraphs_with_degree_k_minus_1"], 45);
        assert_eq!(
            r.counters.extra["colorings_with_rainbow_copy"],
            r.counters.colorings_enumerated
        );
    }

    #[test]
    fn good_k6_subgraph_colorings_are_rainbow_free() {
        let h = good_subgraph(6).unwrap();
        let out = check_all_colorings(h.graph(), 6).unwrap();
        assert!(out.counterexample.is_none());
        assert!(out.counters.colorings_enumerated > 0);
        assert!(!out.counters.extra.contains_key("colorings_with_rainbow_copy"));
    }

    #[test]
    fn jr_k6_graph_colorings_all_have_rainbow_copies() {
        let jr = construct_jr(6).unwrap();
        let out = check_all_colorings(jr.graph(), 6).unwrap();
        assert!(out.counterexample.is_none());
        assert_eq!(
            out.counters.extra["colorings_with_rainbow_copy"],
            out.counters.colorings_enumerated
        );
    }

    #[test]
    fn sampled_mode_is_reproducible() {
        let mode = ClaimMode::Sampled { count: 20, seed: 3 };
        let a = verify_claim_no_k_minus_1(6, mode).unwrap();
        let b = verify_claim_no_k_minus_1(6, mode).unwrap();
        assert!(a.holds());
        assert_eq!(a.counters, b.counters);
        assert_eq!(a.seed, Some(3));
    }

    #[test]
    fn plantholt_small() {
        assert!(verify_plantholt(2).unwrap().holds());
        assert!(verify_plantholt(4).unwrap().holds());
    }

    #[test]
    fn good_subgraph_report() {
        assert!(verify_good_subgraphs(4).unwrap().holds());
        let r = verify_good_subgraphs(6).unwrap();
        assert!(r.holds());
        assert_eq!(r.counters.extra["good_subgraphs"], 35);
        assert!(verify_good_subgraphs(3).is_err());
    }

    #[test]
    fn construction_reports() {
        let b32 = BroomSpec::handle2(3).unwrap();
        assert!(verify_construction(&construct_odd(8, 3).unwrap(), b32).unwrap().holds());
        let b42 = BroomSpec::handle2(4).unwrap();
        let r = verify_construction(&construct_jr(4).unwrap(), b42).unwrap();
        assert_eq!(r.verdict, Verdict::Fails);
        assert!(matches!(r.witness, Some(Witness::Certificate { .. })));
        let b62 = BroomSpec::handle2(6).unwrap();
        assert!(verify_construction(&construct_even_large(7, 6).unwrap(), b62).unwrap().holds());
    }
}
