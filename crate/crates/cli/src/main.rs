//! `distpoly` — distinguishing polynomials of finite simple graphs.
//!
//! Subcommands:
//! * `compute` — polynomial report for graphs read from a file (edge list
//!   or graph6, one report per graph);
//! * `family`  — closed-form report for a named family (path, cycle,
//!   complete, star, multipartite) without building the graph;
//! * `verify`  — run the cross-check suites and print a pass/fail table.
//!
//! Exit codes: 0 success, 1 failing verification suite, 2 parse or argument
//! error, 3 resource budget exceeded, 4 internal assertion failure.

use clap::{Parser, Subcommand, ValueEnum};
use distpoly::closed_forms::FamilySpec;
use distpoly::error::Error;
use distpoly::group::DEFAULT_AUT_CAP;
use distpoly::oracle::DEFAULT_BUDGET;
use distpoly::report::Report;
use distpoly::verify::{run_suites, VerifyConfig};
use distpoly::Graph;
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "distpoly", version, about = "Exact distinguishing polynomials of graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Report for each graph in a file ("-" reads standard input).
    Compute {
        input: String,
        /// Input encoding.
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        /// Report rendering (json emits one object per line).
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
        /// Skip family recognizers and composition; pure enumeration.
        #[arg(long)]
        force_oracle: bool,
        /// Ceiling on coloring tests per enumeration call.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Closed-form report for a graph family, e.g. `family cycle 6` or
    /// `family multipartite 2:3`.
    Family {
        name: String,
        #[arg(required = true)]
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Run verification suites (oracle vs closed forms, cycle identities,
    /// complement invariance, Φ/φ, multiplicity, distinguishing numbers).
    Verify {
        /// Largest vertex count for enumeration-backed suites.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Largest color count for per-k identity checks.
        #[arg(long, default_value_t = 3)]
        max_k: u32,
        /// Comma-separated suite names; default runs all.
        #[arg(long, value_delimiter = ',')]
        suites: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } | Error::InvalidArg(_) => 2,
        Error::BudgetExceeded { .. } | Error::GroupTooLarge { .. } => 3,
        Error::Internal(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidArg(format!("cannot read stdin: {e}")))?;
        return Ok(buf);
    }
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArg(format!("cannot read '{path}': {e}")))
}

fn print_report(report: &Report, output: Output, first: bool) {
    match output {
        Output::Text => {
            if !first {
                println!();
            }
            println!("{report}");
        }
        Output::Json => {
            println!("{}", report.to_json_line());
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Compute {
            input,
            format,
            output,
            force_oracle,
            budget,
        } => {
            let text = read_input(&input)?;
            let graphs: Vec<(String, Graph)> = match format {
                Format::Edgelist => {
                    let g = Graph::parse_edge_list(&text)?;
                    vec![(format!("{input} (edge list, n={})", g.n()), g)]
                }
                Format::Graph6 => Graph::parse_graph6_file(&text)?
                    .into_iter()
                    .enumerate()
                    .map(|(i, g)| (format!("{input}:{} ({})", i + 1, g.to_graph6()), g))
                    .collect(),
            };
            for (i, (descriptor, g)) in graphs.iter().enumerate() {
                let report =
                    Report::for_graph(g, descriptor.clone(), force_oracle, budget, DEFAULT_AUT_CAP)?;
                print_report(&report, output, i == 0);
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Family {
            name,
            params,
            output,
        } => {
            let spec = FamilySpec::parse(&name, &params)?;
            let report = Report::for_family(&spec)?;
            print_report(&report, output, true);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            max_n,
            max_k,
            suites,
            budget,
        } => {
            let cfg = VerifyConfig {
                max_n,
                max_k,
                budget,
                aut_cap: DEFAULT_AUT_CAP,
            };
            let reports = run_suites(&suites, &cfg)?;
            println!("{:<20} {:>7}  result", "suite", "cases");
            let mut all_passed = true;
            for r in &reports {
                println!(
                    "{:<20} {:>7}  {}",
                    r.name,
                    r.cases,
                    if r.passed() { "PASS" } else { "FAIL" }
                );
                if !r.passed() {
                    all_passed = false;
                    for failure in r.failures.iter().take(10) {
                        println!("    failed: {failure}");
                    }
                    if r.failures.len() > 10 {
                        println!("    ... and {} more", r.failures.len() - 10);
                    }
                }
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
