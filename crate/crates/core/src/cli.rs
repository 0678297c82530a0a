//! Command-line front end: `solve` runs the full pipeline for one equation,
//! `trace` dumps every amplitude snapshot, `sweep` emits the iteration-cost
//! table suitable for log-scale plotting.
//!
//! The constants `a` and `b` are decimal by default; a `0b` prefix gives the
//! binary spelling the circuits are usually drawn with (`--a 0b10` is the
//! same as `--a 2`).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::grover::{run_grover, RunReport};
use crate::oracle::{EquationProblem, Oracle};
use crate::statevector::{index_to_label, StateVector};
use crate::verify::compare_costs;

#[derive(Debug, Parser)]
#[command(name = "groveq", version, about = "Grover search over x + a = b equation oracles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve (x + a) mod 2^bits = b with the full Grover pipeline.
    Solve(SolveArgs),
    /// Print every amplitude snapshot of a run, including post-oracle states.
    Trace(TraceArgs),
    /// Tabulate N, N_G and the speedup N_delta per register width.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

fn parse_constant(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0b") {
        Some(bits) => u64::from_str_radix(bits, 2),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("not a decimal or 0b-binary integer: {e}"))
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Left-hand constant a (decimal or 0b binary).
    #[arg(long, value_parser = parse_constant)]
    pub a: u64,
    /// Right-hand constant b (decimal or 0b binary).
    #[arg(long, value_parser = parse_constant)]
    pub b: u64,
    /// Register width in qubits (1..=24).
    #[arg(long)]
    pub bits: usize,
    /// Expected solution count.
    #[arg(long, default_value_t = 1)]
    pub l: u64,
    /// Override the planned iteration count N_G.
    #[arg(long)]
    pub iterations: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Also sample this many measurements into a histogram.
    #[arg(long)]
    pub shots: Option<u64>,
    /// RNG seed for --shots.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[arg(long, value_parser = parse_constant)]
    pub a: u64,
    #[arg(long, value_parser = parse_constant)]
    pub b: u64,
    #[arg(long)]
    pub bits: usize,
    #[arg(long)]
    pub iterations: Option<u64>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Largest register width to tabulate (2..=62; formula only).
    #[arg(long = "max-bits")]
    pub max_bits: usize,
    #[arg(long, default_value_t = 1)]
    pub l: u64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

/// Exit code 2 for bad inputs, 1 for internal failures.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Internal(m) => m,
        }
    }
}

// -- serialized output record ----------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanRecord {
    pub n: usize,
    #[serde(rename = "N")]
    pub state_count: u64,
    pub l: u64,
    #[serde(rename = "N_G")]
    pub iterations: u64,
    #[serde(rename = "N_delta")]
    pub speedup: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AmpRecord {
    pub label: String,
    pub re: f64,
    pub im: f64,
    pub prob: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    pub plan: PlanRecord,
    pub snapshots: Vec<Vec<AmpRecord>>,
    pub argmax: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub histogram: Option<BTreeMap<String, u64>>,
}

fn amp_records(amps: &[num_complex::Complex64], probs: &[f64], n: usize) -> Vec<AmpRecord> {
    amps.iter()
        .zip(probs)
        .enumerate()
        .map(|(i, (a, p))| AmpRecord {
            label: index_to_label(i as u64, n),
            re: a.re,
            im: a.im,
            prob: *p,
        })
        .collect()
}

impl OutputRecord {
    pub fn from_report(command: String, report: &RunReport, histogram: Option<BTreeMap<String, u64>>) -> Self {
        let plan = PlanRecord {
            n: report.plan.n,
            state_count: report.plan.state_count,
            l: report.plan.solutions,
            iterations: report.plan.iterations,
            speedup: report.plan.speedup,
        };
        let snapshots = report
            .snapshots
            .iter()
            .map(|s| amp_records(&s.amps, &s.probs, report.plan.n))
            .collect();
        OutputRecord {
            schema_version: "1".to_string(),
            command,
            plan,
            snapshots,
            argmax: report.argmax_label.clone(),
            histogram,
        }
    }
}

// -- command implementations ------------------------------------------------

/// Runs one parsed subcommand and returns what should go to stdout.
pub fn execute(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Solve(args) => cmd_solve(args),
        Command::Trace(args) => cmd_trace(args),
        Command::Sweep(args) => cmd_sweep(args),
    }
}

fn build_report(a: u64, b: u64, bits: usize, l: u64, iterations: Option<u64>) -> Result<RunReport, CliError> {
    let problem = EquationProblem::new(bits, a, b).map_err(|e| CliError::Usage(e.to_string()))?;
    let oracle = Oracle::for_equation(problem);
    run_grover(bits, &oracle, l, iterations).map_err(|e| CliError::Usage(e.to_string()))
}

fn cmd_solve(args: &SolveArgs) -> Result<String, CliError> {
    let report = build_report(args.a, args.b, args.bits, args.l, args.iterations)?;
    let histogram = args.shots.map(|shots| {
        let last = report.snapshots.last().expect("at least the initial snapshot");
        let state = StateVector::from_amplitudes(last.amps.clone()).expect("snapshot is a valid state");
        state.sample(shots, args.seed)
    });
    let mut command = format!("solve --a {} --b {} --bits {} --l {}", args.a, args.b, args.bits, args.l);
    if let Some(k) = args.iterations {
        write!(command, " --iterations {k}").unwrap();
    }
    if let Some(shots) = args.shots {
        write!(command, " --shots {shots} --seed {}", args.seed).unwrap();
    }
    let record = OutputRecord::from_report(command, &report, histogram);

    match args.format {
        Format::Json => serde_json::to_string_pretty(&record)
            .map(|mut s| {
                s.push('\n');
                s
            })
            .map_err(|e| CliError::Internal(e.to_string())),
        Format::Csv => Ok(render_csv(&record)),
        Format::Table => Ok(render_solve_table(&record)),
    }
}

fn cmd_trace(args: &TraceArgs) -> Result<String, CliError> {
    let report = build_report(args.a, args.b, args.bits, 1, args.iterations)?;
    let problem = EquationProblem::new(args.bits, args.a, args.b).expect("validated above");
    let marked = problem.solution();

    let mut out = String::new();
    let render = |out: &mut String, title: &str, amps: &[num_complex::Complex64], probs: &[f64]| {
        writeln!(out, "{title}").unwrap();
        writeln!(out, "  {:<8} {:>14} {:>14} {:>14}", "label", "re", "im", "prob").unwrap();
        for (i, (a, p)) in amps.iter().zip(probs).enumerate() {
            let flag = if i as u64 == marked { " *" } else { "" };
            writeln!(
                out,
                "  {:<8} {:>14.9} {:>14.9} {:>14.9}{flag}",
                index_to_label(i as u64, args.bits),
                a.re,
                a.im,
                p
            )
            .unwrap();
        }
    };

    render(&mut out, "snapshot 0 (uniform superposition)", &report.snapshots[0].amps, &report.snapshots[0].probs);
    for (post, snap) in report.post_oracle.iter().zip(&report.snapshots[1..]) {
        render(
            &mut out,
            &format!("iteration {} after oracle", post.iteration),
            &post.amps,
            &post.probs,
        );
        render(
            &mut out,
            &format!("iteration {} after diffusion", snap.iteration),
            &snap.amps,
            &snap.probs,
        );
    }
    writeln!(out, "result: {} (marked state flagged *)", report.argmax_label).unwrap();
    Ok(out)
}

fn cmd_sweep(args: &SweepArgs) -> Result<String, CliError> {
    if args.max_bits < 2 || args.max_bits > 62 {
        return Err(CliError::Usage(format!(
            "--max-bits must be between 2 and 62, got {}",
            args.max_bits
        )));
    }
    #[derive(Serialize)]
    struct Row {
        n: usize,
        #[serde(rename = "N")]
        state_count: u64,
        #[serde(rename = "N_G")]
        iterations: u64,
        #[serde(rename = "N_delta")]
        speedup: f64,
    }
    let mut rows = Vec::new();
    for n in 2..=args.max_bits {
        // small widths with large l can have N_G = 0; skip those rows
        match compare_costs(n, args.l) {
            Ok(c) => rows.push(Row {
                n,
                state_count: c.classical_iterations,
                iterations: c.grover_iterations,
                speedup: c.speedup,
            }),
            Err(crate::Error::UndefinedRatio) => continue,
            Err(e) => return Err(CliError::Usage(e.to_string())),
        }
    }
    match args.format {
        Format::Json => serde_json::to_string_pretty(&rows)
            .map(|mut s| {
                s.push('\n');
                s
            })
            .map_err(|e| CliError::Internal(e.to_string())),
        Format::Csv => {
            let mut out = String::from("n,N,N_G,N_delta\n");
            for r in &rows {
                writeln!(out, "{},{},{},{}", r.n, r.state_count, r.iterations, r.speedup).unwrap();
            }
            Ok(out)
        }
        Format::Table => {
            let mut out = String::new();
            writeln!(out, "{:>4} {:>12} {:>8} {:>14}", "n", "N", "N_G", "N_delta").unwrap();
            for r in &rows {
                writeln!(
                    out,
                    "{:>4} {:>12} {:>8} {:>14.4}",
                    r.n, r.state_count, r.iterations, r.speedup
                )
                .unwrap();
            }
            Ok(out)
        }
    }
}

// -- renderers ---------------------------------------------------------------

/// One row per (snapshot, basis state); numbers use the shortest
/// round-trippable float form, matching the JSON encoder.
fn render_csv(record: &OutputRecord) -> String {
    let mut out = String::from("snapshot,label,re,im,prob\n");
    for (k, snap) in record.snapshots.iter().enumerate() {
        for r in snap {
            writeln!(out, "{},{},{},{},{}", k, r.label, r.re, r.im, r.prob).unwrap();
        }
    }
    out
}

fn render_solve_table(record: &OutputRecord) -> String {
    let mut out = String::new();
    let plan = &record.plan;
    writeln!(out, "n = {}  N = {}  l = {}  N_G = {}", plan.n, plan.state_count, plan.l, plan.iterations).unwrap();
    if let Some(speedup) = plan.speedup {
        writeln!(out, "speedup N_delta = {speedup:.4}").unwrap();
    }
    for (k, snap) in record.snapshots.iter().enumerate() {
        let title = if k == 0 { "snapshot 0 (uniform superposition)".to_string() } else { format!("snapshot {k} (after iteration {k})") };
        writeln!(out, "{title}").unwrap();
        writeln!(out, "  {:<8} {:>14} {:>14} {:>14}", "label", "re", "im", "prob").unwrap();
        for r in snap {
            writeln!(out, "  {:<8} {:>14.9} {:>14.9} {:>14.9}", r.label, r.re, r.im, r.prob).unwrap();
        }
    }
    let final_snapshot = record.snapshots.last().expect("non-empty");
    let prob = final_snapshot
        .iter()
        .find(|r| r.label == record.argmax)
        .map(|r| r.prob)
        .unwrap_or(0.0);
    writeln!(out, "solution X = {}  probability = {prob:.9}", record.argmax).unwrap();
    if let Some(hist) = &record.histogram {
        writeln!(out, "histogram:").unwrap();
        for (label, count) in hist {
            writeln!(out, "  {label} {count}").unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve_args(a: u64, b: u64, bits: usize) -> SolveArgs {
        SolveArgs { a, b, bits, l: 1, iterations: None, format: Format::Json, shots: None, seed: 0 }
    }

    #[test]
    fn json_round_trips() {
        let out = cmd_solve(&solve_args(2, 3, 2)).unwrap();
        let record: OutputRecord = serde_json::from_str(&out).unwrap();
        assert_eq!(record.schema_version, "1");
        assert_eq!(record.argmax, "01");
        assert_eq!(record.plan.iterations, 1);
        assert_eq!(serde_json::to_string(&record).unwrap(), serde_json::to_string(&serde_json::from_str::<OutputRecord>(&out).unwrap()).unwrap());
    }

    #[test]
    fn json_field_names_match_schema() {
        let out = cmd_solve(&solve_args(2, 3, 2)).unwrap();
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        for key in ["schema_version", "command", "plan", "snapshots", "argmax"] {
            assert!(value.get(key).is_some(), "missing {key}");
        }
        let plan = value.get("plan").unwrap();
        for key in ["n", "N", "l", "N_G", "N_delta"] {
            assert!(plan.get(key).is_some(), "missing plan.{key}");
        }
        let first = &value["snapshots"][0][0];
        for key in ["label", "re", "im", "prob"] {
            assert!(first.get(key).is_some(), "missing snapshot field {key}");
        }
    }

    #[test]
    fn csv_and_json_carry_identical_values() {
        let mut args = solve_args(5, 6, 3);
        let json: OutputRecord = serde_json::from_str(&cmd_solve(&args).unwrap()).unwrap();
        args.format = Format::Csv;
        let csv = cmd_solve(&args).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("snapshot,label,re,im,prob"));
        let mut rows = 0;
        for (k, snap) in json.snapshots.iter().enumerate() {
            for r in snap {
                let line = lines.next().unwrap();
                assert_eq!(line, format!("{},{},{},{},{}", k, r.label, r.re, r.im, r.prob));
                rows += 1;
            }
        }
        assert_eq!(rows, 3 * 8); // N_G=2 -> 3 snapshots of 8 states
    }

    #[test]
    fn deterministic_output() {
        let mut args = solve_args(2, 3, 2);
        args.shots = Some(256);
        args.seed = 9;
        let a = cmd_solve(&args).unwrap();
        let args2 = SolveArgs { shots: Some(256), seed: 9, ..solve_args(2, 3, 2) };
        let b = cmd_solve(&args2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn usage_errors_for_bad_constants() {
        let err = cmd_solve(&solve_args(4, 0, 2)).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = cmd_sweep(&SweepArgs { max_bits: 63, l: 1, format: Format::Table }).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn binary_prefix_parsing() {
        assert_eq!(parse_constant("0b10").unwrap(), 2);
        assert_eq!(parse_constant("10").unwrap(), 10);
        assert!(parse_constant("0b102").is_err());
        assert!(parse_constant("x").is_err());
    }

    #[test]
    fn sweep_rows() {
        let out = cmd_sweep(&SweepArgs { max_bits: 20, l: 1, format: Format::Csv }).unwrap();
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("n,N,N_G,N_delta"));
        assert_eq!(lines.next(), Some("2,4,1,4"));
        let row10 = out.lines().find(|l| l.starts_with("10,")).unwrap();
        assert_eq!(row10, "10,1024,25,40.96");
        let row20 = out.lines().find(|l| l.starts_with("20,")).unwrap();
        assert!(row20.starts_with("20,1048576,804,1304.19"));
    }

    #[test]
    fn trace_shows_oracle_sign_flip() {
        let out = cmd_trace(&TraceArgs { a: 2, b: 3, bits: 2, iterations: None }).unwrap();
        assert!(out.contains("after oracle"));
        assert!(out.contains("-0.500000000"));
        assert!(out.contains("result: 01"));
    }
}
