use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use broomkit_core::constructions::Regime;
use broomkit_core::io::{graph_to_dot, parse_graph_json, to_dot, GraphInput};
use broomkit_core::oracle::{
    ex_star_bruteforce, verify_claim_no_k_minus_1, verify_good_subgraphs, verify_plantholt,
    ClaimMode, ExStarMode, SearchReport,
};
use broomkit_core::{
    construct_even_large, construct_even_small, construct_jr, construct_odd, enumerate_good_subgraphs,
    find_rainbow_broom, k_edge_color, theorem_slope, BroomSpec, ColoredGraph, Ratio,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{CheckArgs, Claim, ColorArgs, ConstructArgs, EnumerateGoodArgs, ExstarArgs, Mode, Output, VerifyArgs};

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn emit(out: Option<&Output>, text: &str) -> Result<()> {
    match out.and_then(|o| o.output.as_deref()) {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn emit_json<T: Serialize>(out: Option<&Output>, value: &T) -> Result<()> {
    emit(out, &serde_json::to_string(value)?)
}

fn ratio_json(r: Ratio<u64>) -> Value {
    if *r.denom() == 1 {
        json!(r.numer())
    } else {
        json!(format!("{}/{}", r.numer(), r.denom()))
    }
}

fn emit_report(mut report: SearchReport, timing: bool) -> Result<u8> {
    if !timing {
        report.wall_time_ms = None;
    }
    emit_json(None, &report)?;
    Ok(report.exit_code() as u8)
}

pub(crate) fn construct(args: ConstructArgs) -> Result<u8> {
    let k = args.k;
    let spec = BroomSpec::handle2(k)?;
    if args.jr {
        let cg = construct_jr(k)?;
        let cert = find_rainbow_broom(&cg, spec).context("construction lost its rainbow copy")?;
        let summary = json!({
            "regime": "jr",
            "n": cg.vertex_count(),
            "k": k,
            "edges": cg.edge_count(),
            "rainbow_free": false,
            "warning": format!("this coloring is NOT rainbow-free: it contains a rainbow {spec}"),
            "certificate": cert,
        });
        return write_construction(&args.out, summary, &cg);
    }

    let n = args.n.expect("clap requires -n outside --jr");
    let expected = Regime::for_k(k)?;
    let (requested, cg) = if args.odd {
        (Regime::OddK, construct_odd(n, k))
    } else if args.even_small {
        (Regime::EvenSmall, construct_even_small(n, k))
    } else {
        (Regime::EvenLarge, construct_even_large(n, k))
    };
    if requested != expected {
        bail!("k={k} belongs to the {expected:?} regime, not {requested:?}");
    }
    let cg = cg?;
    let slope = theorem_slope(k)?;
    let target = slope * Ratio::from_integer(n as u64);
    let edges = Ratio::from_integer(cg.edge_count() as u64);
    let summary = json!({
        "regime": requested,
        "n": n,
        "k": k,
        "edges": cg.edge_count(),
        "slope": ratio_json(slope),
        "slope_times_n": ratio_json(target),
        "meets_slope": edges >= target,
        "rainbow_free": find_rainbow_broom(&cg, spec).is_none(),
    });
    write_construction(&args.out, summary, &cg)
}

fn write_construction(out: &Output, summary: Value, cg: &ColoredGraph) -> Result<u8> {
    if out.dot {
        emit(Some(out), &to_dot(cg))?;
    } else {
        emit_json(Some(out), &json!({ "summary": summary, "graph": cg }))?;
    }
    Ok(0)
}

pub(crate) fn check(args: CheckArgs) -> Result<u8> {
    let spec = BroomSpec::new(args.k, args.handle)?;
    let GraphInput::Colored(cg) = parse_graph_json(&read_input(&args.file)?)? else {
        bail!("check needs a colored graph (a \"colors\" array aligned with \"edges\")");
    };
    match find_rainbow_broom(&cg, spec) {
        Some(cert) => {
            emit_json(None, &json!({ "broom": spec.to_string(), "rainbow_free": false, "certificate": cert }))?;
            Ok(1)
        }
        None => {
            emit_json(None, &json!({ "broom": spec.to_string(), "rainbow_free": true }))?;
            Ok(0)
        }
    }
}

pub(crate) fn color(args: ColorArgs) -> Result<u8> {
    let input = parse_graph_json(&read_input(&args.file)?)?;
    let g = input.graph();
    match k_edge_color(g, args.k) {
        Some(cg) => {
            if args.out.dot {
                emit(Some(&args.out), &to_dot(&cg))?;
            } else {
                emit_json(Some(&args.out), &cg)?;
            }
            Ok(0)
        }
        None => {
            if args.out.dot {
                emit(Some(&args.out), &graph_to_dot(g))?;
            } else {
                emit_json(Some(&args.out), &json!({ "colorable": false, "colors": args.k }))?;
            }
            Ok(1)
        }
    }
}

pub(crate) fn verify(args: VerifyArgs, timing: bool) -> Result<u8> {
    let mode = match args.sampled {
        Some(count) => ClaimMode::Sampled { count, seed: args.seed },
        None => ClaimMode::Exhaustive,
    };
    let report = match (args.claim, mode) {
        (Claim::NoKMinus1, mode) => verify_claim_no_k_minus_1(args.k, mode)?,
        (Claim::Plantholt, ClaimMode::Exhaustive) => verify_plantholt(args.k)?,
        (Claim::GoodSubgraphs, ClaimMode::Exhaustive) => verify_good_subgraphs(args.k)?,
        (_, ClaimMode::Sampled { .. }) => bail!("only no-k-minus-1 supports --sampled"),
    };
    emit_report(report, timing)
}

pub(crate) fn exstar(args: ExstarArgs, timing: bool) -> Result<u8> {
    let spec = BroomSpec::new(args.k, args.handle)?;
    let mode = match args.mode {
        Mode::Full => ExStarMode::Full,
        Mode::Pruned => ExStarMode::Pruned,
    };
    emit_report(ex_star_bruteforce(args.n, spec, mode)?, timing)
}

pub(crate) fn enumerate_good(args: EnumerateGoodArgs) -> Result<u8> {
    let found = enumerate_good_subgraphs(args.k, args.up_to_iso)?;
    let graphs: Vec<_> = found.iter().map(|g| g.graph()).collect();
    emit_json(
        None,
        &json!({ "k": args.k, "up_to_isomorphism": args.up_to_iso, "count": graphs.len(), "graphs": graphs }),
    )?;
    Ok(0)
}
