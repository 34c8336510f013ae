use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use enhanced_adjoint::invariants::{evaluate_invariants, word_invariants};
use enhanced_adjoint::nullcone::{
    adapted_certificate, component_interval, enumerate_maximal_unstable, nullcone_summary,
    sample_component,
};
use enhanced_adjoint::orbits::reconstruct_fiber_point;
use enhanced_adjoint::verify::{run_suite, Suite};
use enhanced_adjoint::{wire, Error};

/// Exact invariant theory of the enhanced adjoint action, JSON in and out.
#[derive(Parser)]
#[command(name = "eadj", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate tau and Gamma (r = 1) or the word invariants of a point.
    Invariants {
        /// Point JSON file; standard input when omitted.
        input: Option<PathBuf>,
        /// Longest word to evaluate; forces word output. Default 2n-1.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Build a point with prescribed invariants from {"t", "gamma"}.
    Reconstruct {
        input: Option<PathBuf>,
        /// Reject rank-zero blocks of X = D(t)^-1 Gamma.
        #[arg(long)]
        strict_rank1: bool,
    },
    /// Report the interval of components C_k containing a point.
    Classify { input: Option<PathBuf> },
    /// Produce g and lambda with g·w in U_k.
    Certify {
        input: Option<PathBuf>,
        #[arg(long)]
        k: usize,
    },
    /// Dimensions of the null cone and its components.
    Dims {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Also enumerate maximal unstable weight sets with this box bound.
        #[arg(long = "box")]
        box_bound: Option<i64>,
    },
    /// Random point of C_k.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a property suite (or all of them).
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of cells; defaults to one pass over the suite's grid.
        #[arg(long)]
        trials: Option<usize>,
    },
}

enum Failure {
    Domain(Error),
    Input(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Malformed(_) => Failure::Input(e),
            e => Failure::Domain(e),
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    let res = match path {
        Some(p) => std::fs::read_to_string(p).map(|t| text = t),
        None => std::io::stdin().read_to_string(&mut text).map(|_| ()),
    };
    res.map_err(|e| Failure::Input(Error::Malformed(format!("cannot read input: {e}"))))?;
    Ok(text)
}

fn bad_option(msg: String) -> Failure {
    Failure::Input(Error::InvalidArgument(msg))
}

fn check_sizes(n: usize, p: usize, q: usize) -> Result<(), Failure> {
    if n == 0 || p == 0 || q == 0 {
        return Err(bad_option("n, p and q must be positive".into()));
    }
    Ok(())
}

fn run(command: Command) -> Result<(String, bool), Failure> {
    Ok(match command {
        Command::Invariants { input, max_len } => {
            let w = wire::point_from_json(&read_input(&input)?)?;
            match (max_len, w.r()) {
                (None, 1) => (wire::invariants_to_json(&evaluate_invariants(&w)?), true),
                (len, _) => {
                    let len = len.unwrap_or(2 * w.n() - 1);
                    (wire::word_invariants_to_json(&word_invariants(&w, len)), true)
                }
            }
        }
        Command::Reconstruct {
            input,
            strict_rank1,
        } => {
            let data = wire::reconstruction_input_from_json(&read_input(&input)?)?;
            let rec = reconstruct_fiber_point(&data.t, &data.gamma, strict_rank1)?;
            (wire::point_to_json(&rec.point), true)
        }
        Command::Classify { input } => {
            let w = wire::point_from_json(&read_input(&input)?)?;
            (wire::interval_to_json(&component_interval(&w)?), true)
        }
        Command::Certify { input, k } => {
            let w = wire::point_from_json(&read_input(&input)?)?;
            if k > w.n() {
                return Err(bad_option(format!("k = {k} exceeds n = {}", w.n())));
            }
            (wire::certificate_to_json(&adapted_certificate(&w, k)?), true)
        }
        Command::Dims { n, p, q, box_bound } => {
            check_sizes(n, p, q)?;
            let summary = wire::summary_to_json(&nullcone_summary(n, p, q));
            match box_bound {
                None => (summary, true),
                Some(b) => {
                    if b < n as i64 {
                        return Err(bad_option(format!("box must be at least n = {n}")));
                    }
                    let mut v: serde_json::Value =
                        serde_json::from_str(&summary).expect("valid json");
                    let classes: Vec<_> = enumerate_maximal_unstable(n, p, q, b)
                        .into_iter()
                        .map(|c| json!({"k": c.k, "weights": c.weights}))
                        .collect();
                    v["maximal_unstable"] = json!(classes);
                    (v.to_string(), true)
                }
            }
        }
        Command::Sample { n, p, q, k, seed } => {
            check_sizes(n, p, q)?;
            if k > n {
                return Err(bad_option(format!("k = {k} exceeds n = {n}")));
            }
            (wire::point_to_json(&sample_component(n, p, q, k, seed)), true)
        }
        Command::Verify {
            suite,
            seed,
            trials,
        } => {
            if suite == "all" {
                let reports: Vec<_> = Suite::ALL
                    .iter()
                    .map(|&s| {
                        let r = run_suite(s, seed, trials.unwrap_or(s.default_trials()));
                        eprintln!("{}: {:.1?}", r.suite, r.wall_time);
                        r
                    })
                    .collect();
                let ok = reports.iter().all(|r| r.ok);
                let out = json!({"suite": "all", "seed": seed, "ok": ok, "reports": reports});
                (out.to_string(), ok)
            } else {
                let s: Suite = suite.parse().map_err(Failure::Input)?;
                let r = run_suite(s, seed, trials.unwrap_or(s.default_trials()));
                eprintln!("{}: {:.1?}", r.suite, r.wall_time);
                (serde_json::to_string(&r).expect("serializable"), r.ok)
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, ok)) => {
            println!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Domain(e)) => {
            println!("{}", wire::error_to_json(&e));
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            println!("{}", wire::error_to_json(&e));
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}
