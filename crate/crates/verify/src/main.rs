use std::process::ExitCode;

use clap::{Parser, Subcommand};
use schub_core::influence::{essential_set, is_influential, is_tight};
use schub_core::neighbor::critical_set;
use schub_core::reduction::crit_red;
use schub_core::{PermPair, Permutation, PointSet};
use schub_verify::{
    enumerate_pairs, enumerate_smooth_pairs, render_diagram, verify_with, VerifyOptions,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "schub",
    version,
    about = "Smooth pairs of permutations: checks, sweeps and diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariants of one pair.
    CheckPair {
        #[arg(long)]
        w: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        json: bool,
    },
    /// Run an exhaustive verification campaign (`--claim all` runs everything).
    Verify {
        #[arg(long)]
        claim: String,
        #[arg(long)]
        n: usize,
        /// Worker threads (default: all cores).
        #[arg(long)]
        parallel: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Lift the default cap on slow claims.
        #[arg(long)]
        allow_slow: bool,
        /// Report elapsed_ms = 0 for byte-identical output.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print the essential set of a permutation.
    Essential {
        #[arg(long)]
        w: String,
    },
    /// Draw the diagram of a pair.
    Render {
        #[arg(long)]
        w: String,
        #[arg(long)]
        x: String,
    },
    /// List all pairs of a degree, one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        smooth_only: bool,
    },
    /// List the registered claims.
    Claims,
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    s.parse().map_err(|e| format!("bad permutation `{s}`: {e}"))
}

fn parse_pair(w: &str, x: &str) -> Result<PermPair, String> {
    PermPair::new(parse_perm(w)?, parse_perm(x)?).map_err(|e| e.to_string())
}

fn check_pair(pair: &PermPair, as_json: bool) -> String {
    let smooth = pair.is_smooth();
    let level = pair
        .level_set()
        .intersection(&PointSet::restricted(pair.degree()));
    let red = if smooth {
        crit_red(pair).ok().map(|c| c.to_string())
    } else {
        None
    };
    let fields = json!({
        "w": pair.w().to_string(),
        "x": pair.x().to_string(),
        "length": pair.length(),
        "smooth": smooth,
        "tight": is_tight(pair),
        "influential": is_influential(pair),
        "R": pair.r_set().to_string(),
        "R*": pair.rs_set().to_string(),
        "ess(w)": essential_set(pair.w()).to_string(),
        "X": level.to_string(),
        "crit": critical_set(pair).to_string(),
        "crit_red": red,
    });
    if as_json {
        return serde_json::to_string_pretty(&fields).expect("serializable");
    }
    let order = [
        "w",
        "x",
        "length",
        "smooth",
        "tight",
        "influential",
        "R",
        "R*",
        "ess(w)",
        "X",
        "crit",
        "crit_red",
    ];
    order
        .iter()
        .map(|k| match &fields[k] {
            serde_json::Value::String(s) => format!("{k:<12}{s}"),
            serde_json::Value::Null => format!("{k:<12}(pair not smooth)"),
            v => format!("{k:<12}{v}"),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::CheckPair { w, x, json } => {
            println!("{}", check_pair(&parse_pair(&w, &x)?, json));
        }
        Command::Verify {
            claim,
            n,
            parallel,
            json,
            allow_slow,
            no_timing,
        } => {
            let opts = VerifyOptions {
                parallelism: parallel,
                allow_slow,
                no_timing,
            };
            let report = verify_with(&claim, n, opts).map_err(|e| e.to_string())?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Essential { w } => {
            println!("{}", essential_set(&parse_perm(&w)?));
        }
        Command::Render { w, x } => {
            print!("{}", render_diagram(&parse_pair(&w, &x)?));
        }
        Command::Enumerate { n, smooth_only } => {
            let pairs: Box<dyn Iterator<Item = PermPair>> = if smooth_only {
                Box::new(enumerate_smooth_pairs(n).map_err(|e| e.to_string())?)
            } else {
                Box::new(enumerate_pairs(n).map_err(|e| e.to_string())?)
            };
            for pair in pairs {
                println!("{} {}", pair.w(), pair.x());
            }
        }
        Command::Claims => {
            for c in schub_verify::catalog() {
                println!("{:<28}{}", c.id, c.statement);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
