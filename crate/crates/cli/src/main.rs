//! `trivis`: generate triangulations, draw them, and check the results.
//!
//! Every command writes exactly one JSON document to stdout. Exit codes:
//! 0 success, 1 validation failure, 2 usage error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use trivis::generators::{self, GenKind, GenSpec};
use trivis::layout::{
    best_drawing_with, best_of_three, draw_with, to_svg, validate_drawing, width_bound_for,
    DrawOptions, LayoutError, OrderingChoice, Segment, VisibilityDrawing,
};
use trivis::metrics::{compute_metrics, verify_identities, Check};
use trivis::plane_graph::GraphFile;
use trivis::realizer::{canonical_ordering, four_canonical_ordering};
use trivis::{compute_realizer, validate_realizer, PlaneTriangulation, Realizer};

#[derive(Parser)]
#[command(
    name = "trivis",
    version,
    about = "Compact visibility drawings of plane triangulations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a triangulation.
    Gen(GenArgs),
    /// Draw a triangulation as a visibility representation.
    Draw(DrawArgs),
    /// Realizer metrics and identity checks.
    Stats(StatsArgs),
    /// Check a drawing against its graph.
    Verify(VerifyArgs),
    /// Time best-of-three drawing on random instances.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    kind: GenKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random diagonal flips after stacking (random kind only).
    #[arg(long, default_value_t = 0)]
    flips: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DrawArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// `best`, a realizer tree `1`..`3`, or `4` for the four-connected ordering.
    #[arg(long, default_value = "best")]
    ordering: String,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Write the computed realizer here.
    #[arg(long)]
    dump_realizer: Option<PathBuf>,
    /// Check this realizer instead of computing one.
    #[arg(long)]
    realizer: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    drawing: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated sizes; scientific notation such as `1e5` is accepted.
    #[arg(long, default_value = "1e4,1e5")]
    sizes: String,
    /// Random instances per size.
    #[arg(long, default_value_t = 1)]
    seeds: u64,
    /// Timed runs per instance.
    #[arg(long, default_value_t = 3)]
    reps: usize,
    /// Flips per node applied by the generator.
    #[arg(long, default_value_t = 3)]
    flips_per_node: usize,
}

/// A command outcome: the stdout document plus its exit code.
struct Outcome {
    code: u8,
    body: Value,
}

impl Outcome {
    fn ok(body: Value) -> Self {
        Outcome { code: 0, body }
    }
}

enum Failure {
    Usage(String),
    Invalid { code: String, detail: String },
}

impl Failure {
    fn invalid(code: impl Into<String>, detail: impl ToString) -> Self {
        Failure::Invalid {
            code: code.into(),
            detail: detail.to_string(),
        }
    }
}

impl From<LayoutError> for Failure {
    fn from(e: LayoutError) -> Self {
        Failure::invalid(variant_name(&e), e)
    }
}

type CmdResult = Result<Outcome, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{e}");
            println!(
                "{}",
                json!({"error": "usage", "detail": e.kind().to_string()})
            );
            return ExitCode::from(2);
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Draw(a) => cmd_draw(a),
        Command::Stats(a) => cmd_stats(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(out) => {
            println!("{}", out.body);
            ExitCode::from(out.code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            println!("{}", json!({"error": "usage", "detail": msg}));
            ExitCode::from(2)
        }
        Err(Failure::Invalid { code, detail }) => {
            eprintln!("invalid: {detail}");
            println!(
                "{}",
                json!({"error": "invalid", "code": code, "detail": detail})
            );
            ExitCode::from(1)
        }
    }
}

/// `Debug` name of an enum variant without its payload.
fn variant_name(e: &impl std::fmt::Debug) -> String {
    let s = format!("{e:?}");
    s.split(|c: char| !c.is_alphanumeric() && c != '_')
        .next()
        .unwrap_or_default()
        .to_string()
}

fn debug_enabled() -> bool {
    std::env::var("TRIVIS_DEBUG").is_ok_and(|v| v == "1")
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<PlaneTriangulation, Failure> {
    let file: GraphFile = serde_json::from_str(&read_text(path)?)
        .map_err(|e| Failure::invalid("MalformedJson", e))?;
    PlaneTriangulation::try_from(file).map_err(|e| Failure::invalid(variant_name(&e), e))
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn cmd_gen(a: GenArgs) -> CmdResult {
    let spec = GenSpec {
        kind: a.kind,
        n: a.n,
        seed: a.seed,
        flips: a.flips,
    };
    let g = generators::generate(&spec).map_err(|e| Failure::Usage(e.to_string()))?;
    let graph = to_json(&g);
    match a.out {
        Some(path) => {
            write_text(&path, &graph.to_string())?;
            Ok(Outcome::ok(json!({
                "written": path.display().to_string(),
                "n": g.n(),
                "kind": a.kind,
                "seed": a.seed,
            })))
        }
        None => Ok(Outcome::ok(graph)),
    }
}

#[derive(Serialize)]
struct DrawOutput<'a> {
    width: u32,
    height: u32,
    bound: u32,
    within_bound: bool,
    chosen_ordering: u8,
    candidate_widths: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    segments: Option<&'a [Segment]>,
}

fn cmd_draw(a: DrawArgs) -> CmdResult {
    let g = read_graph(&a.input)?;
    let debug = debug_enabled();
    let opts = DrawOptions {
        debug_validate: debug,
    };
    let (drawing, chosen, candidates): (VisibilityDrawing, u8, Value) = match a.ordering.as_str() {
        "best" => {
            let b = best_drawing_with(&g, opts)?;
            let cands = json!({
                "realizer": b.realizer_widths,
                "four_connected": b.four_connected_width,
            });
            (b.drawing, b.chosen.code(), cands)
        }
        "1" | "2" | "3" => {
            let tree = a.ordering.parse::<usize>().expect("digit") - 1;
            let r = compute_realizer(&g);
            let ord = canonical_ordering(&g, &r, tree);
            let (d, _) = draw_with(&g, &ord, opts)?;
            let w = d.width;
            (
                d,
                OrderingChoice::Tree(tree).code(),
                json!({ "requested": w }),
            )
        }
        "4" => {
            let ord = four_canonical_ordering(&g).ok_or_else(|| {
                Failure::invalid(
                    "NotFourConnected",
                    "no four-connected ordering for this graph",
                )
            })?;
            let (d, _) = draw_with(&g, &ord, opts)?;
            let w = d.width;
            (
                d,
                OrderingChoice::FourConnected.code(),
                json!({ "requested": w }),
            )
        }
        other => {
            return Err(Failure::Usage(format!(
                "--ordering must be best, 1, 2, 3 or 4, got {other:?}"
            )))
        }
    };

    if debug {
        let report = validate_drawing(&g, &drawing);
        if !report.ok() {
            return Err(Failure::invalid(
                "DrawingInvalid",
                to_json(&report.violations),
            ));
        }
    }

    let bound = width_bound_for(&g);
    let within_bound = drawing.width <= bound;
    let full = DrawOutput {
        width: drawing.width,
        height: drawing.height,
        bound,
        within_bound,
        chosen_ordering: chosen,
        candidate_widths: candidates,
        segments: Some(&drawing.segments),
    };
    if let Some(path) = &a.svg {
        write_text(path, &to_svg(&g, &drawing))?;
    }
    let body = match &a.out {
        Some(path) => {
            write_text(path, &serde_json::to_string(&full).expect("serializable"))?;
            to_json(&DrawOutput {
                segments: None,
                ..full
            })
        }
        None => to_json(&full),
    };
    let code = if a.ordering == "best" && !within_bound {
        eprintln!("width {} exceeds the bound {bound}", drawing.width);
        1
    } else {
        0
    };
    Ok(Outcome { code, body })
}

fn cmd_stats(a: StatsArgs) -> CmdResult {
    let g = read_graph(&a.input)?;
    let r = match &a.realizer {
        Some(path) => serde_json::from_str::<Realizer>(&read_text(path)?)
            .map_err(|e| Failure::invalid("MalformedJson", e))?,
        None => compute_realizer(&g),
    };
    if let Some(path) = &a.dump_realizer {
        write_text(path, &serde_json::to_string(&r).expect("serializable"))?;
    }

    let validity = validate_realizer(&g, &r);
    let valid_check = Check {
        name: "realizer_valid",
        lhs: f64::from(u8::from(validity.is_ok())),
        rhs: 1.0,
        pass: validity.is_ok(),
        applicable: true,
    };
    if let Err(e) = validity {
        eprintln!("realizer invalid: {e}");
        return Ok(Outcome {
            code: 1,
            body: json!({
                "n": g.n(),
                "realizer_violation": e.to_string(),
                "checks": [valid_check],
            }),
        });
    }

    let m = compute_metrics(&g, &r);
    let report = verify_identities(&g, &r, &m);
    let mut checks = vec![valid_check];
    checks.extend(report.checks.iter().cloned());
    let all_pass = checks.iter().all(|c| c.pass);
    let leaf_counts: Vec<usize> = m.leaves.iter().map(Vec::len).collect();
    let body = json!({
        "n": m.n,
        "c": m.c,
        "lambda_sum": m.lambda_sum,
        "leaf_counts": leaf_counts,
        "leaf_total": m.leaf_total(),
        "score_sums": m.score_sums,
        "score_total": m.score_total(),
        "b_size": m.b.len(),
        "b_components": m.b_components,
        "cyclic_faces": m.cyclic_faces,
        "all_pass": all_pass,
        "checks": checks,
        "nodes": m.nodes,
    });
    Ok(Outcome {
        code: if all_pass { 0 } else { 1 },
        body,
    })
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let g = read_graph(&a.input)?;
    let d: VisibilityDrawing = serde_json::from_str(&read_text(&a.drawing)?)
        .map_err(|e| Failure::invalid("MalformedJson", e))?;
    let report = validate_drawing(&g, &d);
    Ok(Outcome {
        code: if report.ok() { 0 } else { 1 },
        body: json!({
            "ok": report.ok(),
            "width": d.width,
            "height": d.height,
            "violations": report.violations,
        }),
    })
}

fn parse_size(s: &str) -> Result<usize, Failure> {
    let s = s.trim();
    let bad = || Failure::Usage(format!("bad size {s:?}"));
    let n = match s.parse::<usize>() {
        Ok(n) => n,
        Err(_) => {
            let x: f64 = s.parse().map_err(|_| bad())?;
            if !(x.is_finite() && x.fract() == 0.0 && x >= 0.0 && x <= u32::MAX as f64) {
                return Err(bad());
            }
            x as usize
        }
    };
    if n < 4 {
        return Err(Failure::Usage(format!(
            "bench sizes must be at least 4, got {n}"
        )));
    }
    Ok(n)
}

#[derive(Serialize)]
struct BenchRow {
    n: usize,
    mean_seconds: f64,
    median_seconds: f64,
    widths: Vec<u32>,
    bounds: Vec<u32>,
    max_ratio: f64,
}

fn cmd_bench(a: BenchArgs) -> CmdResult {
    if a.reps == 0 {
        return Err(Failure::Usage("--reps must be positive".into()));
    }
    if a.seeds == 0 {
        return Err(Failure::Usage("--seeds must be positive".into()));
    }
    let sizes = a
        .sizes
        .split(',')
        .map(parse_size)
        .collect::<Result<Vec<_>, _>>()?;

    let mut rows = Vec::new();
    for &n in &sizes {
        let mut times = Vec::new();
        let mut widths = Vec::new();
        let mut bounds = Vec::new();
        let mut max_ratio = 0f64;
        for seed in 0..a.seeds {
            let g = generators::random(n, seed, a.flips_per_node * n)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let mut width = 0;
            for _ in 0..a.reps {
                let t = Instant::now();
                let b = best_of_three(&g)?;
                times.push(t.elapsed().as_secs_f64());
                width = b.drawing.width;
            }
            let bound = width_bound_for(&g);
            // Only four-connected inputs can need the extra ordering.
            if width > bound {
                width = best_drawing_with(&g, DrawOptions::default())?.drawing.width;
            }
            max_ratio = max_ratio.max(f64::from(width) / f64::from(bound));
            widths.push(width);
            bounds.push(bound);
        }
        let mean = times.iter().sum::<f64>() / times.len() as f64;
        times.sort_by(f64::total_cmp);
        rows.push(BenchRow {
            n,
            mean_seconds: mean,
            median_seconds: times[times.len() / 2],
            widths,
            bounds,
            max_ratio,
        });
    }

    let time_ratios: Vec<Value> = rows
        .windows(2)
        .map(|w| {
            json!({
                "from": w[0].n,
                "to": w[1].n,
                "size_ratio": w[1].n as f64 / w[0].n as f64,
                "time_ratio": w[1].mean_seconds / w[0].mean_seconds,
            })
        })
        .collect();
    let max_ratio = rows.iter().map(|r| r.max_ratio).fold(0f64, f64::max);
    let within_bound = max_ratio <= 1.0;
    Ok(Outcome {
        code: if within_bound { 0 } else { 1 },
        body: json!({
            "seeds": a.seeds,
            "reps": a.reps,
            "flips_per_node": a.flips_per_node,
            "rows": rows,
            "time_ratios": time_ratios,
            "max_ratio": max_ratio,
            "within_bound": within_bound,
        }),
    })
}
