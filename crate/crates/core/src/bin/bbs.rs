use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use crystal_bbs::cli::{
    run, run_batch, ConservedSpec, EvolveSpec, ExperimentSpec, PlstepSpec, Report, RmatrixSpec, ScatterSpec,
    TauSpec, VerifySpec, EXIT_USAGE,
};
use crystal_bbs::profile::Profile;
use crystal_bbs::tau::{TauSolitonParams, Window};
use crystal_bbs::{AutomatonState, Kappa};

#[derive(Parser)]
#[command(name = "bbs", version, about = "Generalized box-ball systems from combinatorial R")]
struct Cli {
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Rank {
    /// Number of ball colours M (letters 1..=M+1).
    #[arg(long, short = 'M', visible_alias = "M", default_value_t = 3)]
    rank: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the automaton and print one row per time step.
    Evolve {
        #[command(flatten)]
        rank: Rank,
        /// Initial row, e.g. 111142113 or 14·3·123.
        #[arg(long, required_unless_present = "input")]
        row: Option<String>,
        /// Initial state as JSON.
        #[arg(long = "in", conflicts_with = "row")]
        input: Option<PathBuf>,
        /// ascii or json.
        #[arg(long, default_value = "ascii")]
        render: String,
        /// Carrier capacities per step, e.g. "inf" or "5*4,2*5".
        #[arg(long, alias = "kappas", default_value = "inf")]
        kappa: String,
        /// Number of steps; defaults to the number of listed κ values, or 5 for a single one.
        #[arg(long)]
        steps: Option<usize>,
        /// Capacity of boxes outside the row.
        #[arg(long, default_value_t = 1)]
        capacity: u32,
        #[arg(long, default_value = "auto")]
        dialect: String,
        /// Also print the carrier row after each step.
        #[arg(long)]
        carriers: bool,
    },
    /// Collide two solitons and compare with R'.
    Scatter {
        #[command(flatten)]
        rank: Rank,
        /// Label of the soliton starting on the left.
        #[arg(long, alias = "l-label")]
        left: String,
        #[arg(long, alias = "k-label")]
        right: String,
        /// Box capacity profile, e.g. "2" or "1,2,1,2*".
        #[arg(long, default_value = "1")]
        theta: String,
        #[arg(long, default_value = "inf")]
        kappa: String,
        #[arg(long)]
        gap: Option<u32>,
        #[arg(long)]
        max_steps: Option<usize>,
        #[arg(long)]
        trace: bool,
    },
    /// Apply R to a pair, or check it against the crystal-graph oracle or Yang-Baxter.
    Rmatrix {
        #[command(flatten)]
        rank: Rank,
        /// A pair such as "13⊗2".
        pair: Option<String>,
        /// K L (or K,L): compare with the crystal-graph oracle on B_K⊗B_L.
        #[arg(long, num_args = 1..=2, value_delimiter = ',')]
        oracle: Option<Vec<u32>>,
        /// K L M (or K,L,M)
        #[arg(long, num_args = 1..=3, value_delimiter = ',')]
        check_yb: Option<Vec<u32>>,
    },
    /// One tropical carrier step on a single box.
    Plstep {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        carrier: String,
        #[arg(long = "box")]
        box_word: String,
        /// Expected box capacity.
        #[arg(long)]
        theta: Option<u32>,
        /// Expected carrier capacity.
        #[arg(long)]
        kappa: Option<u32>,
    },
    /// Energies E_κ and the RSK tableau of a row.
    Conserved {
        #[command(flatten)]
        rank: Rank,
        #[arg(long, required_unless_present = "input")]
        row: Option<String>,
        #[arg(long = "in", conflicts_with = "row")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        capacity: u32,
        /// e.g. 1,2,3,inf
        #[arg(long, value_delimiter = ',', conflicts_with = "kappa_max")]
        kappas: Option<Vec<Kappa>>,
        /// E_1..E_K; defaults to one more than the number of balls.
        #[arg(long)]
        kappa_max: Option<u32>,
    },
    /// Evaluate the tau-function N-soliton solution on a window.
    Tau {
        /// Parameter file (JSON).
        #[arg(long)]
        params: PathBuf,
        /// "t0:t1,n0:n1", half-open.
        #[arg(long, default_value = "0:10,0:40")]
        window: Window,
        /// fields, ascii or residual.
        #[arg(long, default_value = "ascii")]
        emit: String,
    },
    /// Run the built-in checks.
    Verify {
        /// paper-examples or full.
        #[arg(long, default_value = "paper-examples")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a JSONL file of experiment specs ("-" for stdin).
    Batch { file: PathBuf },
}

fn exact<const N: usize>(v: Option<Vec<u32>>, what: &str) -> Result<Option<[u32; N]>, String> {
    v.map(|v| <[u32; N]>::try_from(v).map_err(|_| format!("--{what} expects {N} capacities"))).transpose()
}

fn read_state(path: &PathBuf) -> Result<AutomatonState, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("bbs: {msg}");
    ExitCode::from(EXIT_USAGE as u8)
}

fn emit(report: &Report, json: bool) {
    if json {
        println!("{}", report.json);
    } else {
        print!("{}", report.text);
    }
}

/// A state file carries its own rank.
fn input_rank(input: &Option<PathBuf>, rank: usize) -> Result<usize, String> {
    Ok(match input {
        Some(p) => read_state(p)?.rank(),
        None => rank,
    })
}

fn build(cmd: Cmd) -> Result<ExperimentSpec, String> {
    Ok(match cmd {
        Cmd::Evolve { rank, row, input, render, kappa, steps, capacity, dialect, carriers } => {
            if !matches!(render.as_str(), "ascii" | "json") {
                return Err(format!("unknown render mode {render:?} (ascii, json)"));
            }
            let profile: Profile<Kappa> = kappa.parse().map_err(|e| format!("{e}"))?;
            let steps = steps.unwrap_or(if profile.values.len() <= 1 { 5 } else { profile.values.len() });
            ExperimentSpec::Evolve(EvolveSpec {
                rank: input_rank(&input, rank.rank)?,
                row: row.unwrap_or_default(),
                state: input.as_ref().map(read_state).transpose()?,
                window_start: 0,
                default_capacity: capacity,
                kappas: (0..steps as i64).map(|t| profile.at(t)).collect(),
                carriers,
                dialect,
            })
        }
        Cmd::Scatter { rank, left, right, theta, kappa, gap, max_steps, trace } => {
            ExperimentSpec::Scatter(ScatterSpec {
                rank: rank.rank,
                left,
                right,
                theta,
                kappa,
                gap,
                threshold: None,
                max_steps,
                trace,
            })
        }
        Cmd::Rmatrix { rank, pair, oracle, check_yb } => ExperimentSpec::Rmatrix(RmatrixSpec {
            rank: rank.rank,
            pair,
            oracle: exact::<2>(oracle, "oracle")?.map(|[k, l]| (k, l)),
            check_yb: exact::<3>(check_yb, "check-yb")?.map(|[k, l, m]| (k, l, m)),
        }),
        Cmd::Plstep { rank, carrier, box_word, theta, kappa } => {
            let caps = |w: &str| w.trim().chars().count() as u32;
            if theta.is_some_and(|t| t != caps(&box_word)) || kappa.is_some_and(|k| k != caps(&carrier)) {
                return Err("--theta/--kappa disagree with the box and carrier words".into());
            }
            ExperimentSpec::Plstep(PlstepSpec { rank: rank.rank, carrier, box_word })
        }
        Cmd::Conserved { rank, row, input, capacity, kappas, kappa_max } => ExperimentSpec::Conserved(ConservedSpec {
            rank: input_rank(&input, rank.rank)?,
            row: row.unwrap_or_default(),
            state: input.as_ref().map(read_state).transpose()?,
            default_capacity: capacity,
            kappas,
            kappa_max,
        }),
        Cmd::Tau { params, window, emit } => {
            let text = std::fs::read_to_string(&params).map_err(|e| format!("{}: {e}", params.display()))?;
            let params: TauSolitonParams = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", params.display()))?;
            ExperimentSpec::Tau(TauSpec { params, window, emit })
        }
        Cmd::Verify { suite, seed } => ExperimentSpec::Verify(VerifySpec { suite, seed }),
        Cmd::Batch { .. } => unreachable!(),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    if let Cmd::Batch { file } = &cli.cmd {
        let mut input = String::new();
        let read = if file.as_os_str() == "-" {
            std::io::stdin().read_to_string(&mut input).map(|_| ())
        } else {
            std::fs::read_to_string(file).map(|s| input = s)
        };
        if let Err(e) = read {
            return usage(format!("{}: {e}", file.display()));
        }
        let reports = run_batch(&input);
        for r in &reports {
            // one JSON object per line either way
            println!("{}", serde_json::json!({ "exit_code": r.exit_code, "report": r.json }));
        }
        let worst = reports.iter().map(|r| r.exit_code).max().unwrap_or(0);
        return ExitCode::from(worst as u8);
    }
    let json = cli.json || matches!(&cli.cmd, Cmd::Evolve { render, .. } if render == "json");
    let spec = match build(cli.cmd) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let report = run(&spec);
    if report.exit_code == EXIT_USAGE {
        eprintln!("bbs: {}", report.text.trim_start_matches("error: "));
    } else {
        emit(&report, json);
    }
    ExitCode::from(report.exit_code as u8)
}
