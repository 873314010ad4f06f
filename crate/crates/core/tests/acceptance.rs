//! Acceptance suite: nine end-to-end criteria with wall-clock limits.
//!
//! Runs as a plain binary (`harness = false`) so each criterion prints one
//! PASS/FAIL line. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use broomkit_core::constructions::{construction_edge_count, Regime};
use broomkit_core::oracle::{
    ex_star_bruteforce, verify_claim_no_k_minus_1, verify_plantholt, ClaimMode, ExStarMode, SearchReport, Verdict,
};
use broomkit_core::{
    build_broom, construct_even_large, construct_jr, construct_odd, enumerate_good_subgraphs, find_rainbow_broom2,
    find_rainbow_tree, good_subgraph, is_proper, verify_certificate, BroomSpec, ColoredGraph, Edge, EdgeColoring,
    Graph,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn both_detectors_clear(cg: &ColoredGraph, k: usize) -> Result<(), String> {
    let spec = ok(BroomSpec::handle2(k))?;
    ensure!(find_rainbow_broom2(cg, k).is_none(), "fast detector found a rainbow B_{{{k},2}}");
    let tree = ok(find_rainbow_tree(cg, &build_broom(spec)))?;
    ensure!(tree.is_none(), "tree detector found a rainbow B_{{{k},2}}");
    Ok(())
}

fn exstar(n: usize, k: usize, mode: ExStarMode) -> Result<usize, String> {
    let spec = ok(BroomSpec::handle2(k))?;
    let report: SearchReport = ok(ex_star_bruteforce(n, spec, mode))?;
    ensure!(report.verdict == Verdict::Holds, "ex*({n}, B_{{{k},2}}) verdict {:?}", report.verdict);
    report.value.ok_or_else(|| format!("ex*({n}, B_{{{k},2}}) has no value"))
}

fn odd_regime() -> Outcome {
    for k in [3, 5, 7] {
        let cg = ok(construct_odd(k + 1, k))?;
        ensure!(cg.edge_count() == k * (k + 1) / 2, "k={k}: {} edges", cg.edge_count());
        both_detectors_clear(&cg, k)?;
    }
    Ok("k in {3,5,7}: K_{k+1} with k(k+1)/2 edges, rainbow-free".into())
}

fn correction() -> Outcome {
    for k in [4, 6, 8] {
        let cg = ok(construct_jr(k))?;
        let cert = find_rainbow_broom2(&cg, k).ok_or(format!("k={k}: no rainbow copy found"))?;
        ensure!(verify_certificate(&cg, &cert, k), "k={k}: certificate rejected");
        if k == 4 {
            let center = cert.center().ok_or("certificate has no center")?;
            ensure!(cg.degree(center) == k - 1, "k=4: center {center} has degree {}", cg.degree(center));
        }
    }
    Ok("k in {4,6,8}: verified rainbow B_{k,2} certificates".into())
}

fn claim_exhaustive() -> Outcome {
    let mut detail = Vec::new();
    for (k, graphs) in [(4usize, 45u64), (6, 1330)] {
        let start = Instant::now();
        let r = ok(verify_claim_no_k_minus_1(k, ClaimMode::Exhaustive))?;
        ensure!(r.verdict == Verdict::Holds, "k={k}: verdict {:?}", r.verdict);
        ensure!(r.counters.graphs_examined == graphs, "k={k}: {} subgraphs", r.counters.graphs_examined);
        let limit = if k == 4 { 60 } else { 1800 };
        ensure!(start.elapsed() < Duration::from_secs(limit), "k={k}: over {limit}s");
        detail.push(format!("k={k}: {graphs} subgraphs, {} colorings", r.counters.colorings_enumerated));
    }
    Ok(detail.join("; "))
}

fn good_subgraphs() -> Outcome {
    for k in [2, 4] {
        let found = ok(enumerate_good_subgraphs(k, false))?;
        ensure!(found.is_empty(), "k={k}: {} good subgraphs", found.len());
    }
    let mut counts = Vec::new();
    for k in [6, 8] {
        let found = ok(enumerate_good_subgraphs(k, false))?;
        let canonical = ok(good_subgraph(k))?;
        ensure!(
            found.iter().any(|g| g.graph() == canonical.graph()),
            "k={k}: cycle-complement subgraph missing"
        );
        counts.push(format!("k={k}: {}", found.len()));
    }
    Ok(format!("none for k in {{2,4}}; {}", counts.join(", ")))
}

fn plantholt() -> Outcome {
    for (k, graphs) in [(4usize, 45u64), (6, 1330)] {
        let r = ok(verify_plantholt(k))?;
        ensure!(r.verdict == Verdict::Holds, "k={k}: verdict {:?}", r.verdict);
        ensure!(r.counters.graphs_examined == graphs, "k={k}: {} subgraphs", r.counters.graphs_examined);
    }
    Ok("k=4: 45/45, k=6: 1330/1330 colorable".into())
}

fn degenerate() -> Outcome {
    let mut values = Vec::new();
    for n in 2..=7 {
        let pruned = exstar(n, 2, ExStarMode::Pruned)?;
        if n <= 6 {
            let full = exstar(n, 2, ExStarMode::Full)?;
            ensure!(full == pruned, "n={n}: full {full} vs pruned {pruned}");
        }
        ensure!(pruned == n / 2, "n={n}: {pruned} != {}", n / 2);
        values.push(pruned.to_string());
    }
    Ok(format!("n=2..7: [{}]", values.join(", ")))
}

fn small_values() -> Outcome {
    ensure!(exstar(4, 3, ExStarMode::Full)? == 6, "ex*(4, B_{{3,2}}) != 6");
    let full_start = Instant::now();
    let mut full = Vec::new();
    for n in [5, 6] {
        for k in [3, 4] {
            full.push((n, k, exstar(n, k, ExStarMode::Full)?));
        }
    }
    ensure!(full_start.elapsed() < Duration::from_secs(1800), "full mode over 30 min");
    let pruned_start = Instant::now();
    let mut detail = Vec::new();
    for &(n, k, value) in &full {
        let lower = construction_edge_count(ok(Regime::for_k(k))?, n, k);
        ensure!(lower <= value && 2 * value <= k * n, "n={n} k={k}: {lower} <= {value} <= {}", k * n / 2);
        let pruned = exstar(n, k, ExStarMode::Pruned)?;
        ensure!(pruned == value, "n={n} k={k}: pruned {pruned} vs full {value}");
        detail.push(format!("({n},{k})={value}"));
    }
    ensure!(pruned_start.elapsed() < Duration::from_secs(60), "pruned mode over 1 min");
    let pinned = full.iter().find(|&&(n, k, _)| (n, k) == (5, 4)).map(|t| t.2);
    ensure!(pinned == Some(7), "ex*(5, B_{{4,2}}) = {pinned:?}, expected 7");
    Ok(format!("ex*(4,B_3,2)=6; {}", detail.join(" ")))
}

/// Random graph on `n` vertices colored greedily in random edge order, each
/// edge drawing from a small random palette and opening a new color only when
/// every palette color is blocked.
fn random_colored(rng: &mut ChaCha8Rng) -> ColoredGraph {
    let n = rng.gen_range(2..=8);
    let density = rng.gen_range(0.3..=1.0);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                pairs.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, pairs).expect("valid pairs");
    let palette = g.max_degree() + rng.gen_range(0..=3);
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.shuffle(rng);
    let mut colors = vec![u32::MAX; g.edge_count()];
    let mut next = palette as u32;
    for i in order {
        let e: Edge = g.edges()[i];
        let blocked: Vec<u32> = g
            .edges()
            .iter()
            .zip(&colors)
            .filter(|(f, &c)| c != u32::MAX && f.shares_vertex(e))
            .map(|(_, &c)| c)
            .collect();
        let free: Vec<u32> = (0..palette as u32).filter(|c| !blocked.contains(c)).collect();
        colors[i] = match free.choose(rng) {
            Some(&c) => c,
            None => {
                next += 1;
                next - 1
            }
        };
    }
    let coloring = EdgeColoring::new(colors);
    debug_assert!(is_proper(&g, &coloring).unwrap());
    ColoredGraph::new(g, coloring).expect("greedy coloring is proper")
}

fn detector_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let trees: Vec<(usize, Graph)> =
        (3..=7).map(|k| (k, build_broom(BroomSpec::handle2(k).unwrap()))).collect();
    let (mut present, mut absent, mut disagreements) = (0usize, 0usize, 0usize);
    for _ in 0..1000 {
        let cg = random_colored(&mut rng);
        for (k, tree) in &trees {
            let fast = find_rainbow_broom2(&cg, *k);
            let slow = ok(find_rainbow_tree(&cg, tree))?;
            if let Some(cert) = &fast {
                ensure!(verify_certificate(&cg, cert, *k), "fast detector produced a bad certificate");
            }
            if let Some(emb) = &slow {
                ensure!(emb.is_valid(&cg, tree), "tree detector produced a bad embedding");
            }
            match (fast.is_some(), slow.is_some()) {
                (true, true) => present += 1,
                (false, false) => absent += 1,
                _ => disagreements += 1,
            }
        }
    }
    ensure!(disagreements == 0, "{disagreements} disagreements");
    Ok(format!("1000 graphs x k=3..7: {present} with a copy, {absent} without, 0 disagreements"))
}

fn even_large() -> Outcome {
    let cg = ok(construct_even_large(7, 6))?;
    ensure!(cg.edge_count() == 18, "{} edges", cg.edge_count());
    both_detectors_clear(&cg, 6)?;
    Ok("18 edges, rainbow-B_{6,2}-free".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 9] = [
        ("odd-regime soundness", 5, odd_regime),
        ("deleted-class coloring has a rainbow copy", 5, correction),
        ("no k-1 claim exhaustive", 1860, claim_exhaustive),
        ("good subgraphs", 60, good_subgraphs),
        ("Plantholt completeness", 300, plantholt),
        ("degenerate B_{2,2}", 60, degenerate),
        ("exact small values", 1860, small_values),
        ("detector equivalence", 120, detector_equivalence),
        ("even-large regime", 10, even_large),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let outcome = match outcome {
            Ok(_) if secs >= limit as f64 => Err(format!("took {secs:.2}s, limit {limit}s")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({secs:.2}s) {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({secs:.2}s) {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
