use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use partcolor::graph::dimacs::{parse_dimacs, write_dimacs};
use partcolor::graph::{Graph, PartialColoring};
use partcolor::oddcycle::{color_no_short_odd_cycles, independence_guarantee, OddCycleError};
use partcolor::oracle;
use partcolor::rounding::{
    partial_2_color, partial_3_color, threshold_divisor, PipelineParams, RoundingError,
};
use partcolor::sdp::SdpError;
use partcolor::semirandom::{
    generate as sample, neighborhood_cycle_sets, neighborhood_matchings, p2c_random, p3c_random,
    wigderson_color, AdversarySpec, BadPolicy, CrossPolicy, GoodGraph, P2cOutput, P2cResult,
    P3cOutput,
};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::report::{emit, sha256_hex, to_json, write_file, Check, Report};
use crate::{
    CliError, GenerateArgs, OddfreeArgs, OracleArgs, PipelineArgs, Query, RandomArgs, ReportOpts,
    VerifyArgs,
};

/// Values of eps tried by `--sweep`.
pub const EPS_GRID: [f64; 6] = [0.005, 0.01, 0.02, 0.05, 0.1, 0.2];

/// Ground truth written next to a generated graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Truth {
    pub schema: u32,
    pub n: usize,
    pub k: usize,
    pub good: Vec<usize>,
    pub bad: Vec<usize>,
    pub planted_coloring: BTreeMap<usize, usize>,
    pub p: f64,
    pub eps: f64,
    pub seed: u64,
    pub adversary: AdversarySpec,
    pub extra_cross: Vec<(usize, usize)>,
}

fn read_bytes(path: &Path) -> Result<Vec<u8>, CliError> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        return Ok(buf);
    }
    std::fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn parse_graph(bytes: &[u8], path: &Path) -> Result<Graph, CliError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| CliError::Param(format!("{}: {e}", path.display())))?;
    parse_dimacs(text).map_err(|e| CliError::Param(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path, report: &mut Report) -> Result<Graph, CliError> {
    let bytes = read_bytes(path)?;
    report.input_sha256 = Some(sha256_hex(&bytes));
    parse_graph(&bytes, path)
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let bytes = read_bytes(path)?;
    serde_json::from_slice(&bytes).map_err(|e| CliError::Param(format!("{}: {e}", path.display())))
}

fn read_truth(path: &Option<PathBuf>, g: &Graph) -> Result<Option<Truth>, CliError> {
    let Some(path) = path else { return Ok(None) };
    let truth: Truth = read_json(path)?;
    if truth.n != g.n() || truth.good.len() + truth.bad.len() != g.n() {
        return Err(CliError::Param(format!(
            "{}: ground truth is for {} vertices, graph has {}",
            path.display(),
            truth.n,
            g.n()
        )));
    }
    Ok(Some(truth))
}

fn finish(mut report: Report, opts: &ReportOpts, start: Instant) -> Result<bool, CliError> {
    if opts.timings {
        report.timings = Some(BTreeMap::from([(
            "total_s".to_string(),
            start.elapsed().as_secs_f64(),
        )]));
    }
    emit(opts.out.as_deref(), &to_json(&report)?)?;
    Ok(report.pass)
}

fn write_artifact(
    report: &mut Report,
    path: &Option<PathBuf>,
    contents: &str,
) -> Result<(), CliError> {
    if let Some(path) = path {
        write_file(path, contents)?;
        report.outputs.push(path.display().to_string());
    }
    Ok(())
}

fn proper_check(g: &Graph, c: &PartialColoring, discarded: &[usize]) -> Check {
    let same_discard = c.discarded().iter().copied().eq(discarded.iter().copied());
    match c.is_proper(g) {
        Ok(true) if same_discard => {
            Check::new("proper", true, format!("{} colors", c.num_colors()))
        }
        Ok(true) => Check::new("proper", false, "discarded set differs from S"),
        Ok(false) => Check::new(
            "proper",
            false,
            format!("monochromatic edge {:?}", c.conflict(g)),
        ),
        Err(e) => Check::new("proper", false, e.to_string()),
    }
}

fn split_spec(s: &str) -> (&str, Option<&str>) {
    match s.split_once(':') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    }
}

fn parse_f64(what: &str, v: Option<&str>) -> Result<f64, CliError> {
    v.and_then(|v| v.parse().ok()).ok_or_else(|| {
        CliError::Param(format!("{what} needs a numeric argument, as in {what}:0.5"))
    })
}

fn adversary(a: &GenerateArgs) -> Result<AdversarySpec, CliError> {
    let (kind, arg) = split_spec(&a.adv);
    if kind == "file" {
        let path =
            arg.ok_or_else(|| CliError::Param("file needs a path, as in file:adv.json".into()))?;
        return read_json(Path::new(path));
    }
    let bad = match kind {
        "empty" => BadPolicy::Empty,
        "clique" => BadPolicy::Clique,
        "gnp" => BadPolicy::Gnp {
            q: parse_f64("gnp", arg)?,
        },
        other => return Err(CliError::Param(format!("unknown bad policy {other:?}"))),
    };
    let (kind, arg) = split_spec(&a.good);
    let good = match kind {
        "partite" => GoodGraph::Partite {
            q: parse_f64("partite", arg)?,
        },
        "stars" => GoodGraph::StarForest {
            stars: arg
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| CliError::Param("stars needs a count, as in stars:5".into()))?,
        },
        other => return Err(CliError::Param(format!("unknown good preset {other:?}"))),
    };
    let (kind, arg) = split_spec(&a.extra);
    let extra = match kind {
        "none" => CrossPolicy::None,
        "random" => CrossPolicy::Random {
            q: parse_f64("random", arg)?,
        },
        other => {
            return Err(CliError::Param(format!(
                "unknown extra-edge policy {other:?}"
            )))
        }
    };
    Ok(AdversarySpec { good, bad, extra })
}

pub fn generate(argv: Vec<String>, a: GenerateArgs) -> Result<bool, CliError> {
    let start = Instant::now();
    let mut report = Report::new(argv);
    report.seed = Some(a.seed);
    let adv = adversary(&a)?;
    let inst =
        sample(a.n, a.eps, a.p, a.k, &adv, a.seed).map_err(|e| CliError::Param(e.to_string()))?;

    let truth = Truth {
        schema: crate::report::SCHEMA,
        n: a.n,
        k: a.k,
        good: inst.good.clone(),
        bad: inst.bad.clone(),
        planted_coloring: inst.planted_coloring.clone(),
        p: a.p,
        eps: a.eps,
        seed: a.seed,
        adversary: adv,
        extra_cross: inst.extra_cross.clone(),
    };
    let truth_path = a.truth_out.clone().unwrap_or_else(|| {
        let mut p = a.graph_out.clone().into_os_string();
        p.push(".truth.json");
        PathBuf::from(p)
    });
    write_artifact(
        &mut report,
        &Some(a.graph_out.clone()),
        &write_dimacs(&inst.graph),
    )?;
    write_artifact(&mut report, &Some(truth_path), &to_json(&truth)?)?;

    let (good, _) = inst.graph.induced_subgraph(&inst.good);
    let table: Vec<_> = (0..good.n())
        .map(|v| Some(inst.planted_coloring[&v]))
        .collect();
    let planted = PartialColoring::from_dense(&table);
    report.check(Check::new(
        "planted_coloring_proper",
        planted.is_proper(&good) == Ok(true),
        format!(
            "{} colors on {} good vertices",
            planted.num_colors(),
            good.n()
        ),
    ));
    report.set_result(&json!({
        "n": inst.graph.n(),
        "m": inst.graph.edge_count(),
        "bad": inst.bad.len(),
        "random_cross": inst.random_cross.len(),
        "extra_cross": inst.extra_cross.len(),
    }))?;
    finish(report, &a.report, start)
}

pub fn pipeline(argv: Vec<String>, a: PipelineArgs, k: usize) -> Result<bool, CliError> {
    let start = Instant::now();
    let mut report = Report::new(argv);
    report.seed = Some(a.seed);
    let g = read_graph(&a.graph, &mut report)?;

    let mut params = PipelineParams::new(a.eps, a.gamma, a.seed);
    params.delta = a.delta;
    params.solver.dim = a.solver.dim;
    params.solver.feas_tol = a.solver.feas_tol;
    params.solver.max_iters = a.solver.max_iters;
    let run = if k == 3 {
        partial_3_color(&g, &params)
    } else {
        partial_2_color(&g, &params)
    };
    let out = match run {
        Ok(out) => out,
        Err(RoundingError::Sdp(e @ SdpError::Stall { .. })) => {
            return Err(CliError::Stall(e.to_string()))
        }
        Err(RoundingError::Certificate { stage, apex, cycle }) => {
            report.check(Check::new(
                "vector_coloring",
                false,
                format!("{stage}: short odd cycle contradicts the relaxation"),
            ));
            report.set_result(
                &json!({ "certificate": { "stage": stage, "apex": apex, "cycle": cycle } }),
            )?;
            return finish(report, &a.report, start);
        }
        Err(e) => return Err(CliError::Param(e.to_string())),
    };

    let stats = &out.stats;
    report.check(proper_check(&g, &out.coloring, &out.s));
    let bound = threshold_divisor(k) as f64 * stats.sdp_objective / a.gamma;
    report.check(Check::new(
        "threshold_bound",
        out.s.len() as f64 <= bound,
        format!("|S| = {} <= {bound}", out.s.len()),
    ));
    let worst = stats.residuals.max();
    report.check(Check::new(
        "sdp_feasible",
        worst <= a.solver.feas_tol,
        format!("max residual {worst:e}"),
    ));
    if k == 3 && g.n() > 0 {
        let delta = stats.delta;
        let max_passes = g.n().div_ceil(delta.max(1));
        report.check(Check::new(
            "degree_passes",
            stats.degree_passes <= max_passes,
            format!(
                "{} <= ceil(n / {delta}) = {max_passes}",
                stats.degree_passes
            ),
        ));
        report.check(Check::new(
            "residual_degree",
            stats.residual_max_degree < delta || stats.residual_vertices == 0,
            format!("{} < {delta}", stats.residual_max_degree),
        ));
    }
    write_artifact(&mut report, &a.coloring_out, &to_json(&out.coloring)?)?;
    report.set_result(&json!({
        "S": out.s,
        "coloring": out.coloring,
        "num_colors": out.coloring.num_colors(),
        "stage_stats": out.stats,
    }))?;
    finish(report, &a.report, start)
}

fn eps_values(a: &RandomArgs) -> Vec<f64> {
    match a.eps {
        Some(e) => vec![e],
        None => EPS_GRID.to_vec(),
    }
}

/// Index of the run keeping the most vertices; the first wins ties.
fn best_of(kept: &[usize]) -> usize {
    let mut best = 0;
    for (i, &k) in kept.iter().enumerate() {
        if k > kept[best] {
            best = i;
        }
    }
    best
}

fn merge(value: &mut serde_json::Value, extra: serde_json::Value) {
    if let (Some(obj), serde_json::Value::Object(more)) = (value.as_object_mut(), extra) {
        obj.extend(more);
    }
}

pub fn random3(argv: Vec<String>, a: RandomArgs) -> Result<bool, CliError> {
    let start = Instant::now();
    let mut report = Report::new(argv);
    let g = read_graph(&a.graph, &mut report)?;
    let truth = read_truth(&a.truth, &g)?;

    let colorer = |h: &Graph| wigderson_color(h).map_err(|e| e.to_string());
    let mut runs: Vec<(f64, P3cOutput)> = Vec::new();
    for eps in eps_values(&a) {
        let out =
            p3c_random(&g, eps, a.theta, colorer).map_err(|e| CliError::Param(e.to_string()))?;
        runs.push((eps, out));
    }
    let kept: Vec<usize> = runs.iter().map(|(_, o)| g.n() - o.s.len()).collect();
    let sweep = a.sweep.then(|| {
        runs.iter()
            .map(|(eps, o)| {
                json!({ "eps": eps, "branch": o.branch, "discarded": o.s.len(), "colors": o.coloring.num_colors() })
            })
            .collect::<serde_json::Value>()
    });
    let (eps, out) = runs.swap_remove(best_of(&kept));

    report.check(proper_check(&g, &out.coloring, &out.s));
    let mut truth_summary = serde_json::Value::Null;
    if let Some(t) = &truth {
        let mut is_bad = vec![false; g.n()];
        for &b in &t.bad {
            is_bad[b] = true;
        }
        let sets = neighborhood_cycle_sets(&g, out.ell);
        let offender = t.good.iter().find_map(|&v| {
            sets[v]
                .cycles
                .iter()
                .find(|c| !c.iter().any(|&u| is_bad[u]))
                .map(|c| (v, c.clone()))
        });
        report.check(Check::new(
            "good_cycles_hit_bad",
            offender.is_none(),
            match &offender {
                None => "every neighborhood cycle of a good vertex has a bad vertex".to_string(),
                Some((v, c)) => format!("good vertex {v} sees the all-good cycle {c:?}"),
            },
        ));
        truth_summary = json!({ "bad": t.bad.len(), "recovered": out.s == t.bad });
    }

    write_artifact(&mut report, &a.coloring_out, &to_json(&out.coloring)?)?;
    let mut result = serde_json::to_value(&out).map_err(|e| CliError::Io(e.to_string()))?;
    merge(
        &mut result,
        json!({
            "eps": eps,
            "num_colors": out.coloring.num_colors(),
            "sweep": sweep,
            "truth": truth_summary,
        }),
    );
    report.result = result;
    finish(report, &a.report, start)
}

/// The bipartite remainder as a 2-coloring, or the independent set as a
/// single class; everything else is discarded.
fn p2c_coloring(n: usize, out: &P2cOutput) -> PartialColoring {
    let mut table = vec![None; n];
    match &out.result {
        P2cResult::Bipartite { remainder, sides } => {
            for (&v, &side) in remainder.iter().zip(sides) {
                table[v] = Some(side as usize);
            }
        }
        P2cResult::IndependentSet { set, .. } => {
            for &v in set {
                table[v] = Some(0);
            }
        }
    }
    PartialColoring::from_dense(&table)
}

pub fn random2(argv: Vec<String>, a: RandomArgs) -> Result<bool, CliError> {
    let start = Instant::now();
    let mut report = Report::new(argv);
    let g = read_graph(&a.graph, &mut report)?;
    let truth = read_truth(&a.truth, &g)?;

    let mut runs: Vec<(f64, P2cOutput)> = Vec::new();
    for eps in eps_values(&a) {
        runs.push((
            eps,
            p2c_random(&g, eps).map_err(|e| CliError::Param(e.to_string()))?,
        ));
    }
    let kept: Vec<usize> = runs.iter().map(|(_, o)| o.kept().len()).collect();
    let sweep = a.sweep.then(|| {
        runs.iter()
            .map(|(eps, o)| json!({ "eps": eps, "discarded": o.s.len(), "kept": o.kept().len() }))
            .collect::<serde_json::Value>()
    });
    let (eps, out) = runs.swap_remove(best_of(&kept));
    let coloring = p2c_coloring(g.n(), &out);

    match &out.result {
        P2cResult::Bipartite { remainder, .. } => {
            let discarded: Vec<usize> = (0..g.n())
                .filter(|v| remainder.binary_search(v).is_err())
                .collect();
            report.check(proper_check(&g, &coloring, &discarded));
        }
        P2cResult::IndependentSet { set, cover } => {
            report.check(Check::new(
                "independent",
                g.is_independent(set),
                format!("{} vertices", set.len()),
            ));
            report.check(Check::new(
                "vertex_cover",
                g.is_vertex_cover(cover),
                format!("{} vertices", cover.len()),
            ));
        }
    }
    let mut truth_summary = serde_json::Value::Null;
    if let Some(t) = &truth {
        let mut is_bad = vec![false; g.n()];
        for &b in &t.bad {
            is_bad[b] = true;
        }
        let matchings = neighborhood_matchings(&g);
        let offender = t.good.iter().find_map(|&v| {
            matchings[v]
                .edges
                .iter()
                .find(|&&(x, y)| !is_bad[x] && !is_bad[y])
                .map(|&e| (v, e))
        });
        report.check(Check::new(
            "good_matchings_hit_bad",
            offender.is_none(),
            match offender {
                None => "every neighborhood matching edge of a good vertex has a bad endpoint"
                    .to_string(),
                Some((v, e)) => format!("good vertex {v} sees the all-good edge {e:?}"),
            },
        ));
        truth_summary = json!({ "bad": t.bad.len(), "recovered": out.s == t.bad });
    }

    write_artifact(&mut report, &a.coloring_out, &to_json(&coloring)?)?;
    let mut result = serde_json::to_value(&out).map_err(|e| CliError::Io(e.to_string()))?;
    merge(
        &mut result,
        json!({ "eps": eps, "coloring": coloring, "sweep": sweep, "truth": truth_summary }),
    );
    report.result = result;
    finish(report, &a.report, start)
}

pub fn color_oddfree(argv: Vec<String>, a: OddfreeArgs) -> Result<bool, CliError> {
    let start = Instant::now();
    let mut report = Report::new(argv);
    let g = read_graph(&a.graph, &mut report)?;
    match color_no_short_odd_cycles(&g, a.ell) {
        Ok(c) => {
            report.check(proper_check(&g, &c, &[]));
            let guarantee = independence_guarantee(g.n(), a.ell);
            let first = c.colors().values().filter(|&&col| col == 0).count();
            report.check(Check::new(
                "first_class_size",
                g.n() == 0 || first >= guarantee,
                format!("{first} >= {guarantee}"),
            ));
            write_artifact(&mut report, &a.coloring_out, &to_json(&c)?)?;
            report.set_result(
                &json!({ "coloring": c, "num_colors": c.num_colors(), "guarantee": guarantee }),
            )?;
        }
        Err(OddCycleError::ShortOddCycle { cycle, ell }) => {
            report.check(Check::new(
                "odd_girth",
                false,
                format!("odd cycle of length {} <= {ell}", cycle.len()),
            ));
            report.set_result(&json!({ "certificate": { "cycle": cycle } }))?;
        }
        Err(e) => return Err(CliError::Param(e.to_string())),
    }
    finish(report, &a.report, start)
}

pub fn oracle(argv: Vec<String>, a: OracleArgs) -> Result<bool, CliError> {
    let start = Instant::now();
    let mut report = Report::new(argv);
    let g = read_graph(&a.graph, &mut report)?;
    let p = |e: oracle::OracleError| CliError::Param(e.to_string());
    let result = match a.query {
        Query::Chromatic => {
            let coloring = oracle::optimal_coloring(&g).map_err(p)?;
            let chi = coloring.iter().max().map_or(0, |&c| c + 1);
            json!({ "chromatic_number": chi, "coloring": coloring })
        }
        Query::InducedColorable => {
            let r = oracle::max_induced_k_colorable(&g, a.k).map_err(p)?;
            json!({ "k": a.k, "alpha": r.alpha(), "best": r })
        }
        Query::OddGirth => json!({ "odd_girth": oracle::odd_girth(&g).map_err(p)? }),
        Query::DisjointOddCycles => json!({
            "ell": a.ell,
            "max_disjoint_odd_cycles": oracle::max_disjoint_odd_cycles(&g, a.ell).map_err(p)?,
        }),
        Query::Mis => {
            let set = oracle::max_independent_set(&g).map_err(p)?;
            report.check(Check::new(
                "independent",
                g.is_independent(&set),
                format!("{} vertices", set.len()),
            ));
            json!({ "size": set.len(), "set": set })
        }
        Query::VertexCover => {
            let cover = oracle::min_vertex_cover(&g).map_err(p)?;
            report.check(Check::new(
                "vertex_cover",
                g.is_vertex_cover(&cover),
                format!("{} vertices", cover.len()),
            ));
            json!({ "size": cover.len(), "cover": cover })
        }
        Query::Matching => json!({ "max_matching": oracle::max_matching_size(&g).map_err(p)? }),
    };
    report.result = result;
    finish(report, &a.report, start)
}

pub fn verify(argv: Vec<String>, a: VerifyArgs) -> Result<bool, CliError> {
    let start = Instant::now();
    let mut report = Report::new(argv);
    let graph_bytes = read_bytes(&a.graph)?;
    let coloring_bytes = read_bytes(&a.coloring)?;
    report.input_sha256 = Some(sha256_hex(
        &[graph_bytes.as_slice(), &coloring_bytes].concat(),
    ));
    let g = parse_graph(&graph_bytes, &a.graph)?;
    let c: PartialColoring = serde_json::from_slice(&coloring_bytes)
        .map_err(|e| CliError::Param(format!("{}: {e}", a.coloring.display())))?;

    match c.to_dense(g.n()) {
        Ok(_) => report.check(Check::new(
            "domain",
            true,
            format!("covers all {} vertices", g.n()),
        )),
        Err(e) => report.check(Check::new("domain", false, e.to_string())),
    }
    let discarded: Vec<usize> = c.discarded().iter().copied().collect();
    report.check(proper_check(&g, &c, &discarded));
    if let Some(max) = a.max_colors {
        report.check(Check::new(
            "max_colors",
            c.num_colors() <= max,
            format!("{} <= {max}", c.num_colors()),
        ));
    }
    if let Some(max) = a.max_discarded {
        report.check(Check::new(
            "max_discarded",
            discarded.len() <= max,
            format!("{} <= {max}", discarded.len()),
        ));
    }
    report.set_result(&json!({ "num_colors": c.num_colors(), "discarded": discarded.len() }))?;
    finish(report, &a.report, start)
}
