use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use galfix::suites::{query, run_suite, RunReport, SuiteOptions, QUERY_KINDS, SUITES};

#[derive(Parser)]
#[command(name = "galfix", version, about = "Exact verification suites for Galois actions on characters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and report pass/fail.
    Run(RunArgs),
    /// One-shot computation, e.g. `galfix query 2-core "(3,1)"`.
    Query(QueryArgs),
    /// List suite names and query kinds.
    List,
}

#[derive(Args)]
struct RunArgs {
    /// Suite name, repeatable or comma separated; `all` for every suite (the default).
    #[arg(long = "suite", value_delimiter = ',')]
    suites: Vec<String>,
    /// Parameter overrides `key=value,...`; only with a single suite.
    #[arg(long)]
    params: Option<String>,
    /// Write the JSON report here (`-` for stdout).
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write a CSV summary here (`-` for stdout).
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Curated table file, overriding the embedded copy and GALFIX_TABLE1.
    #[arg(long)]
    data: Option<PathBuf>,
    /// Accepted for interface stability; every check is deterministic.
    #[arg(long)]
    seed: Option<u64>,
    /// Include wall times in reports.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct QueryArgs {
    /// One of: d-core, 2-core, symbol-core, conductor, generic-degree, weyl, field.
    kind: String,
    /// Arguments as `key=value` tokens, or a single bare value.
    args: Vec<String>,
    /// Print the result as JSON.
    #[arg(long)]
    json: bool,
}

fn write_out(path: &PathBuf, text: &str) -> Result<()> {
    if path.as_os_str() == "-" {
        print!("{text}");
        Ok(())
    } else {
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }
}

fn run(args: RunArgs) -> Result<bool> {
    if let Some(n) = args.jobs {
        if n == 0 {
            bail!("--jobs must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let _ = args.seed;
    let mut names: Vec<String> = Vec::new();
    for s in &args.suites {
        if s == "all" {
            names.extend(SUITES.iter().map(|s| s.to_string()));
        } else {
            names.push(s.clone());
        }
    }
    if names.is_empty() {
        names.extend(SUITES.iter().map(|s| s.to_string()));
    }
    if args.params.is_some() && names.len() != 1 {
        bail!("--params needs exactly one --suite");
    }
    let opts = SuiteOptions { data: args.data, timings: args.timings };
    let params = args.params.unwrap_or_default();
    let to_stdout = |p: &Option<PathBuf>| p.as_ref().is_some_and(|p| p.as_os_str() == "-");
    let quiet = to_stdout(&args.json) || to_stdout(&args.csv);
    let mut reports = Vec::new();
    for name in &names {
        let r = run_suite(name, &params, &opts)?;
        if !quiet {
            let time = r.wall_time_ms.map(|t| format!(" in {t} ms")).unwrap_or_default();
            println!(
                "{} {} checked {} counterexamples {}{}",
                if r.passed() { "PASS" } else { "FAIL" },
                r.check,
                r.checked,
                r.counterexample_count,
                time
            );
        }
        reports.push(r);
    }
    let report = RunReport::new(reports);
    if let Some(p) = &args.json {
        write_out(p, &report.to_json())?;
    }
    if let Some(p) = &args.csv {
        write_out(p, &report.to_csv()?)?;
    }
    Ok(report.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => run(args),
        Command::Query(q) => query(&q.kind, &q.args.join(" ")).map_err(Into::into).map(|r| {
            if q.json {
                println!("{}", serde_json::to_string_pretty(&r).expect("serializable"));
            } else {
                println!("{}", r.text);
            }
            true
        }),
        Command::List => {
            println!("suites: {}", SUITES.join(", "));
            println!("queries: {}", QUERY_KINDS.join(", "));
            Ok(true)
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
