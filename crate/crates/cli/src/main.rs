//! Command-line front end: hook tables, diagram and tableau enumeration,
//! tableau counting, verification runs, insertion traces, and benchmarks.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{ensure, Context, Result};
use clap::{Parser, Subcommand};
use hooklab_core::{
    enumerate_bicolored, enumerate_excited, f_backtrack, f_naruse, f_recursive,
    geometric_assignment, parse_skew, repeated_insert_with, verify_bijection, verify_complexity,
    verify_cover_identity, verify_sieve, verify_weighted_recursion, verify_z_identity,
    BicoloredTableau, BigInt, BigRational, DiagramKind, SparsePoly, StrictPartition,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const SCHEMA: &str = "hooklab/1";

fn skew_label(lambda: &StrictPartition, mu: &StrictPartition) -> String {
    if mu.is_empty() {
        lambda.to_string()
    } else {
        format!("{lambda}/{mu}")
    }
}

fn parse_contained_skew(s: &str) -> Result<(StrictPartition, StrictPartition)> {
    let (lambda, mu) = parse_skew(s)?;
    ensure!(lambda.contains(&mu), "{mu} is not contained in {lambda}");
    Ok((lambda, mu))
}

#[derive(Parser)]
#[command(
    name = "hooklab",
    version,
    about = "Hook lengths, excited diagrams, and bumping insertion for shifted shapes"
)]
struct Cli {
    /// Emit machine-readable JSON on stdout
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized verifications
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Trace detail: 0 round summaries, 1 bump steps, 2 steps and tableaux
    #[arg(long, global = true, default_value_t = 1)]
    trace_verbosity: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug)]
enum KindArg {
    B,
    D,
    Both,
}

impl KindArg {
    fn kinds(self) -> Vec<DiagramKind> {
        match self {
            KindArg::B => vec![DiagramKind::B],
            KindArg::D => vec![DiagramKind::D],
            KindArg::Both => DiagramKind::BOTH.to_vec(),
        }
    }
}

fn parse_kind(s: &str) -> Result<KindArg, String> {
    match s {
        "B" | "b" => Ok(KindArg::B),
        "D" | "d" => Ok(KindArg::D),
        _ if s.eq_ignore_ascii_case("both") => Ok(KindArg::Both),
        _ => Err(format!("expected B, D, or both, got {s}")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print hook data for every cell of a shifted shape
    Hooks {
        shape: String,
        #[arg(long, value_parser = parse_kind, default_value = "both")]
        kind: KindArg,
    },
    /// List the excited diagrams of a skew shape
    Excited {
        skew: String,
        #[arg(long, value_parser = parse_kind, default_value = "both")]
        kind: KindArg,
    },
    /// List the bicolored tableaux of a skew shape with their weights
    Bicolored {
        skew: String,
        #[arg(long, value_parser = parse_kind, default_value = "both")]
        kind: KindArg,
        /// Print only the counts
        #[arg(long)]
        count_only: bool,
    },
    /// Count standard tableaux of a skew shape by four routes
    Count { skew: String },
    /// Run a verification; the exit status reports the outcome
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Replay repeated insertion of a variable into a tableau loaded from JSON
    Trace {
        /// Outer shape the repeated insertion grows toward
        outer: String,
        /// Variable index to insert
        #[arg(short, long)]
        k: u32,
        /// Path to a JSON bicolored tableau
        #[arg(long)]
        file: PathBuf,
    },
    /// Time the worst-case insertion family
    Bench {
        #[arg(long, default_value_t = 1)]
        min: u32,
        #[arg(long, default_value_t = 12)]
        max: u32,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Cover recursion as an exact polynomial identity
    Theorem1 {
        skew: String,
        #[arg(long, value_parser = parse_kind, default_value = "both")]
        kind: KindArg,
    },
    /// Skew size equals the sum of the w-set variables
    Lemw {
        skew: String,
        #[arg(long, value_parser = parse_kind, default_value = "both")]
        kind: KindArg,
    },
    /// Repeated insertion is a weight-preserving bijection
    Bijection {
        skew: String,
        #[arg(long, value_parser = parse_kind, default_value = "both")]
        kind: KindArg,
    },
    /// Single-insertion sieve: non-member outputs trim onto non-grow pairs
    Sieve {
        skew: String,
        #[arg(long, value_parser = parse_kind, default_value = "both")]
        kind: KindArg,
    },
    /// Weighted cover recursion as an exact identity
    Weighted {
        skew: String,
        #[arg(long, value_parser = parse_kind, default_value = "both")]
        kind: KindArg,
    },
    /// Weighted hook identity at geometric and sampled assignments
    Zidentity {
        skew: String,
        #[arg(long, value_parser = parse_kind, default_value = "both")]
        kind: KindArg,
        /// Number of random positive assignments per kind
        #[arg(long, default_value_t = 5)]
        samples: u32,
    },
    /// Worst-case family needs exactly 2^m insertions
    Complexity {
        #[arg(long, default_value_t = 1)]
        min: u32,
        #[arg(long, default_value_t = 10)]
        max: u32,
    },
}

fn main() -> ExitCode {
    // Die quietly when the consumer of a pipe closes early, as cat and grep do.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    if let Ok(v) = std::env::var("HOOKLAB_THREADS") {
        let n: usize = v
            .parse()
            .context("HOOKLAB_THREADS must be a positive integer")?;
        ensure!(n > 0, "HOOKLAB_THREADS must be a positive integer");
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .ok();
    }
    match &cli.command {
        Command::Hooks { shape, kind } => cmd_hooks(cli, shape, *kind),
        Command::Excited { skew, kind } => cmd_excited(cli, skew, *kind),
        Command::Bicolored {
            skew,
            kind,
            count_only,
        } => cmd_bicolored(cli, skew, *kind, *count_only),
        Command::Count { skew } => cmd_count(cli, skew),
        Command::Verify { check } => cmd_verify(cli, check),
        Command::Trace { outer, k, file } => cmd_trace(cli, outer, *k, file),
        Command::Bench { min, max } => cmd_bench(cli, *min, *max),
    }
}

fn cmd_hooks(cli: &Cli, shape: &str, kind: KindArg) -> Result<bool> {
    let lambda: StrictPartition = shape.parse()?;
    let mut sections = Vec::new();
    for kind in kind.kinds() {
        let mut cells = Vec::new();
        for cell in lambda.diagram(kind) {
            let hook = lambda.hook_length(kind, cell)?;
            let weighted = hooklab_core::weighted_hook(&lambda, kind, cell)?;
            cells.push((cell, hook, weighted));
        }
        sections.push((kind, cells));
    }
    if cli.json {
        let payload = json!({
            "schema": SCHEMA,
            "command": "hooks",
            "shape": lambda,
            "kinds": sections.iter().map(|(kind, cells)| json!({
                "kind": kind.to_string(),
                "cells": cells.iter().map(|(cell, hook, weighted)| json!({
                    "cell": cell,
                    "hook": hook,
                    "weighted": weighted.to_string(),
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
        println!("{payload}");
    } else {
        for (kind, cells) in &sections {
            println!("kind {kind} shape {lambda}");
            for (cell, hook, weighted) in cells {
                println!("({},{}) hook {hook} weighted {weighted}", cell.row, cell.col);
            }
        }
    }
    Ok(true)
}

fn cmd_excited(cli: &Cli, skew: &str, kind: KindArg) -> Result<bool> {
    let (lambda, mu) = parse_contained_skew(skew)?;
    let mut sections = Vec::new();
    for kind in kind.kinds() {
        sections.push((kind, enumerate_excited(&lambda, &mu, kind)));
    }
    if cli.json {
        let payload = json!({
            "schema": SCHEMA,
            "command": "excited",
            "lambda": lambda,
            "mu": mu,
            "kinds": sections.iter().map(|(kind, diagrams)| json!({
                "kind": kind.to_string(),
                "count": diagrams.len(),
                "diagrams": diagrams.iter().map(|d| json!({
                    "cells": d.cells(),
                    "hook_product": d.hook_product().to_string(),
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
        println!("{payload}");
    } else {
        for (kind, diagrams) in &sections {
            println!("kind {kind} skew {} count {}", skew_label(&lambda, &mu), diagrams.len());
            for d in diagrams {
                let cells: Vec<String> = d
                    .cells()
                    .iter()
                    .map(|c| format!("({},{})", c.row, c.col))
                    .collect();
                println!("cells {} product {}", cells.join(" "), d.hook_product());
            }
        }
    }
    Ok(true)
}

fn cmd_bicolored(cli: &Cli, skew: &str, kind: KindArg, count_only: bool) -> Result<bool> {
    let (lambda, mu) = parse_contained_skew(skew)?;
    let mut sections = Vec::new();
    for kind in kind.kinds() {
        sections.push((kind, enumerate_bicolored(&mu, &lambda, kind)));
    }
    if cli.json {
        let payload = json!({
            "schema": SCHEMA,
            "command": "bicolored",
            "lambda": lambda,
            "mu": mu,
            "kinds": sections.iter().map(|(kind, tableaux)| json!({
                "kind": kind.to_string(),
                "count": tableaux.len(),
                "tableaux": if count_only { Value::Null } else {
                    tableaux.iter().map(|t| json!({
                        "tableau": t.to_string(),
                        "weight": SparsePoly::from_monomial(t.weight()).to_string(),
                    })).collect::<Vec<_>>().into()
                },
            })).collect::<Vec<_>>(),
        });
        println!("{payload}");
    } else {
        for (kind, tableaux) in &sections {
            println!("kind {kind} skew {} count {}", skew_label(&lambda, &mu), tableaux.len());
            if !count_only {
                for t in tableaux {
                    println!("{t}  weight {}", SparsePoly::from_monomial(t.weight()));
                }
            }
        }
    }
    Ok(true)
}

fn cmd_count(cli: &Cli, skew: &str) -> Result<bool> {
    let (lambda, mu) = parse_contained_skew(skew)?;
    let enumeration = f_backtrack(&lambda, &mu);
    let recursion = f_recursive(&lambda, &mu);
    let hook_b = f_naruse(&lambda, &mu, DiagramKind::B)?;
    let hook_d = f_naruse(&lambda, &mu, DiagramKind::D)?;
    let agree = enumeration == recursion && enumeration == hook_b && enumeration == hook_d;
    if cli.json {
        let payload = json!({
            "schema": SCHEMA,
            "command": "count",
            "lambda": lambda,
            "mu": mu,
            "enumeration": enumeration.to_string(),
            "recursion": recursion.to_string(),
            "hook_b": hook_b.to_string(),
            "hook_d": hook_d.to_string(),
            "agree": agree,
        });
        println!("{payload}");
    } else {
        println!("skew {}", skew_label(&lambda, &mu));
        println!("enumeration {enumeration}");
        println!("recursion {recursion}");
        println!("hook-formula-B {hook_b}");
        println!("hook-formula-D {hook_d}");
        println!("agree {agree}");
    }
    Ok(agree)
}

struct VerifyOutput {
    check: &'static str,
    target: String,
    results: Vec<(String, bool, Value)>,
}

impl VerifyOutput {
    fn finish(self, cli: &Cli) -> Result<bool> {
        let ok = self.results.iter().all(|(_, ok, _)| *ok);
        if cli.json {
            let payload = json!({
                "schema": SCHEMA,
                "command": "verify",
                "check": self.check,
                "target": self.target,
                "results": self.results.iter().map(|(label, ok, detail)| json!({
                    "label": label,
                    "ok": ok,
                    "detail": detail,
                })).collect::<Vec<_>>(),
                "ok": ok,
            });
            println!("{payload}");
        } else {
            for (label, ok, detail) in &self.results {
                let status = if *ok { "pass" } else { "FAIL" };
                if detail.is_null() {
                    println!("{} {label}: {status}", self.check);
                } else {
                    println!("{} {label}: {status} {detail}", self.check);
                }
            }
            println!("verify {} {}: {}", self.check, self.target, if ok { "pass" } else { "FAIL" });
        }
        Ok(ok)
    }
}

fn cmd_verify(cli: &Cli, check: &Check) -> Result<bool> {
    let out = match check {
        Check::Theorem1 { skew, kind } => {
            let (lambda, mu) = parse_contained_skew(skew)?;
            let mut results = Vec::new();
            for kind in kind.kinds() {
                let ok = verify_cover_identity(&mu, &lambda, kind);
                results.push((format!("kind {kind}"), ok, Value::Null));
            }
            VerifyOutput { check: "theorem1", target: skew.to_string(), results }
        }
        Check::Lemw { skew, kind } => {
            let (lambda, mu) = parse_contained_skew(skew)?;
            let want = lambda.size() as i64 - mu.size() as i64;
            let mut results = Vec::new();
            for kind in kind.kinds() {
                let w = lambda.w_set(kind, &mu);
                let sum: i64 = w.iter().map(|&k| lambda.x_var(kind, k)).sum();
                let detail = json!({ "w": w, "sum": sum, "skew_size": want });
                results.push((format!("kind {kind}"), sum == want, detail));
            }
            VerifyOutput { check: "lemw", target: skew.to_string(), results }
        }
        Check::Bijection { skew, kind } => {
            let (lambda, mu) = parse_contained_skew(skew)?;
            let mut results = Vec::new();
            for kind in kind.kinds() {
                let report = verify_bijection(&mu, &lambda, kind)?;
                results.push((
                    format!("kind {kind}"),
                    report.ok(),
                    serde_json::to_value(&report)?,
                ));
            }
            VerifyOutput { check: "bijection", target: skew.to_string(), results }
        }
        Check::Sieve { skew, kind } => {
            let (lambda, mu) = parse_contained_skew(skew)?;
            let mut results = Vec::new();
            for kind in kind.kinds() {
                let report = verify_sieve(&mu, &lambda, kind)?;
                results.push((
                    format!("kind {kind}"),
                    report.ok(),
                    serde_json::to_value(&report)?,
                ));
            }
            VerifyOutput { check: "sieve", target: skew.to_string(), results }
        }
        Check::Weighted { skew, kind } => {
            let (lambda, mu) = parse_contained_skew(skew)?;
            let mut results = Vec::new();
            for kind in kind.kinds() {
                let ok = verify_weighted_recursion(&mu, &lambda, kind);
                results.push((format!("kind {kind}"), ok, Value::Null));
            }
            VerifyOutput { check: "weighted", target: skew.to_string(), results }
        }
        Check::Zidentity { skew, kind, samples } => {
            let (lambda, mu) = parse_contained_skew(skew)?;
            let mut results = Vec::new();
            for kind in kind.kinds() {
                let mut ok = true;
                for q in [2i64, 3] {
                    let vals = geometric_assignment(&lambda, &BigRational::from(BigInt::from(q)));
                    ok &= verify_z_identity(&lambda, &mu, kind, &vals)?;
                }
                let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                for _ in 0..*samples {
                    let mut vals = BTreeMap::new();
                    for c in 0..=lambda.first() + 1 {
                        let num: i64 = rng.gen_range(1..=9);
                        let den: i64 = rng.gen_range(1..=9);
                        vals.insert(c, BigRational::new(BigInt::from(num), BigInt::from(den)));
                    }
                    ok &= verify_z_identity(&lambda, &mu, kind, &vals)?;
                }
                let detail = json!({ "geometric_q": [2, 3], "samples": samples });
                results.push((format!("kind {kind}"), ok, detail));
            }
            VerifyOutput { check: "zidentity", target: skew.to_string(), results }
        }
        Check::Complexity { min, max } => {
            ensure!(*min >= 1 && min <= max, "need 1 <= min <= max");
            let mut results = Vec::new();
            for m in *min..=*max {
                let report = verify_complexity(m, m <= 8)?;
                results.push((
                    format!("m={m}"),
                    report.ok,
                    json!({ "insertions": report.insertions, "expected": report.expected }),
                ));
            }
            VerifyOutput {
                check: "complexity",
                target: format!("{min}..={max}"),
                results,
            }
        }
    };
    out.finish(cli)
}

fn cmd_trace(cli: &Cli, outer: &str, k: u32, file: &PathBuf) -> Result<bool> {
    let lambda: StrictPartition = outer.parse()?;
    let text = fs::read_to_string(file)
        .with_context(|| format!("cannot read tableau file {}", file.display()))?;
    let tableau: BicoloredTableau =
        serde_json::from_str(&text).context("tableau file is not a valid JSON tableau")?;

    let mut rounds = Vec::new();
    let run = repeated_insert_with(&tableau, k, &lambda, |n, res, next| {
        rounds.push((
            n,
            res.steps.clone(),
            res.added,
            res.tableau.to_string(),
            next.map(|(_, nk)| nk),
        ));
    })?;

    if cli.json {
        let payload = json!({
            "schema": SCHEMA,
            "command": "trace",
            "outer": lambda,
            "k": k,
            "input": tableau,
            "rounds": rounds.iter().map(|(n, steps, added, after, next_k)| json!({
                "round": n,
                "steps": steps,
                "added": added,
                "tableau": after,
                "member": next_k.is_none(),
                "next_k": next_k,
            })).collect::<Vec<_>>(),
            "insertions": run.insertions,
            "final": run.tableau,
        });
        println!("{payload}");
    } else {
        println!("input {tableau} shape {} kind {}", tableau.shape, tableau.kind);
        for (n, steps, added, after, next_k) in &rounds {
            let idx = steps.first().map(|s| s.k).unwrap_or(k);
            println!("round {n} insert x{idx}");
            if cli.trace_verbosity >= 1 {
                for s in steps {
                    println!(
                        "step cell=({},{}) dir={} k={} pot={}",
                        s.cell.row, s.cell.col, s.dir, s.k, s.potential
                    );
                }
            }
            match next_k {
                Some(nk) => println!("added ({},{}) outside {lambda}; expel x{nk}", added.row, added.col),
                None => println!("added ({},{}) inside {lambda}; stop", added.row, added.col),
            }
            if cli.trace_verbosity >= 2 {
                println!("tableau {after}");
            }
        }
        println!("insertions {}", run.insertions);
        println!("final {}", run.tableau);
    }
    Ok(true)
}

fn cmd_bench(cli: &Cli, min: u32, max: u32) -> Result<bool> {
    ensure!(min >= 1 && min <= max, "need 1 <= min <= max");
    let mut rows = Vec::new();
    let mut all_ok = true;
    for m in min..=max {
        let start = Instant::now();
        let report = verify_complexity(m, false)?;
        let elapsed = start.elapsed();
        eprintln!("m={m} elapsed {:.3}ms", elapsed.as_secs_f64() * 1e3);
        all_ok &= report.ok;
        rows.push((m, report.insertions, report.expected, report.ok));
    }
    if cli.json {
        let payload = json!({
            "schema": SCHEMA,
            "command": "bench",
            "rows": rows.iter().map(|(m, insertions, expected, ok)| json!({
                "m": m,
                "insertions": insertions,
                "expected": expected,
                "ok": ok,
            })).collect::<Vec<_>>(),
            "ok": all_ok,
        });
        println!("{payload}");
    } else {
        for (m, insertions, expected, ok) in &rows {
            println!("m={m} insertions={insertions} expected={expected} ok={ok}");
        }
    }
    Ok(all_ok)
}
