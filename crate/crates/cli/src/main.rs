use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use dehnforge::filling::alg5_fill;
use dehnforge::group::{is_balanced, is_null_homotopic};
use dehnforge::harness::{check_lemmas, fit_records, run_survey, HarnessError};
use dehnforge::metrics::metrics;
use dehnforge::oracle::brute_area;
use dehnforge::rewriting::{alg1_preferred, alg3_alternate, alg4_balanced_to_preferred};
use dehnforge::trace::Trace;
use dehnforge::Word;

const SEED_ENV: &str = "DEHNFORGE_SEED";

#[derive(Parser)]
#[command(name = "dehnforge", version, about = "Certified word rewriting in Stallings' group S")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Stage {
    /// Fill a null-homotopic word down to the empty word.
    Full,
    /// Rewrite a zero-sum s-free word into preferred alternating form.
    Alg1,
    /// Make a zero-sum s-free word alternating, left to right.
    Alg3,
    /// Rewrite a balanced word into preferred alternating form.
    Alg4,
}

#[derive(Subcommand)]
enum Command {
    /// Freely reduce a word.
    Reduce { word: String },
    /// Print exponent sum, balance and null-homotopy of a word.
    Check {
        word: String,
        /// Also print the metrics P, Q and R.
        #[arg(long)]
        metrics: bool,
    },
    /// Run the rewriting procedures and report the certified cost.
    Fill {
        word: String,
        #[arg(long)]
        k: Option<usize>,
        /// Write the trace to this file.
        #[arg(long)]
        emit_trace: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "full")]
        stage: Stage,
    },
    /// Replay a trace file and print its end word and cost.
    TraceVerify {
        path: PathBuf,
        /// Fail unless the trace ends at this word.
        #[arg(long)]
        expect_end: Option<String>,
    },
    /// Brute-force Dehn area of a short word.
    Oracle {
        word: String,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, default_value_t = 8)]
        max_cost: u64,
    },
    /// Sweep a word family over a geometric grid of lengths and write CSV.
    Survey {
        #[arg(long, default_value = "hnn")]
        family: String,
        #[arg(long, default_value_t = 8)]
        n_min: usize,
        #[arg(long, default_value_t = 256)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        samples: usize,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "survey.csv")]
        out: PathBuf,
    },
    /// Run the seeded lemma property suites.
    Lemmas {
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, env = SEED_ENV, default_value_t = 7)]
        seed: u64,
    },
}

fn parse(text: &str) -> Result<Word> {
    Word::parse(text).with_context(|| format!("cannot parse word {text:?}"))
}

fn emit(trace: &Trace, path: Option<&PathBuf>) -> Result<()> {
    if let Some(path) = path {
        fs::write(path, trace.to_text()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn flag(b: bool) -> u8 {
    b as u8
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Reduce { word } => println!("{}", parse(&word)?.free_reduce()),
        Command::Check { word, metrics: show } => {
            let w = parse(&word)?;
            println!(
                "exponent_sum={} balanced={} null_homotopic={}",
                w.exponent_sum(),
                flag(is_balanced(&w)),
                flag(is_null_homotopic(&w))
            );
            if show {
                let (p, q, r) = metrics(&w);
                let p = p.map_or_else(|| "undefined".to_string(), |p| p.to_string());
                println!("P={p} Q={q} R={r}");
            }
        }
        Command::Fill {
            word,
            k,
            emit_trace,
            stage,
        } => {
            let w = parse(&word)?;
            match stage {
                Stage::Full => {
                    let report = alg5_fill(&w, k)?;
                    println!(
                        "n={} k={} cost={} bound={} rounds={}",
                        report.n, report.k, report.cost, report.bound, report.rounds
                    );
                    emit(&report.trace, emit_trace.as_ref())?;
                }
                Stage::Alg1 => {
                    let out = alg1_preferred(&w)?;
                    println!("v={} cost={}", out.v, out.trace.cost());
                    emit(&out.trace, emit_trace.as_ref())?;
                }
                Stage::Alg3 => {
                    let out = alg3_alternate(&w)?;
                    println!("v={} cost={}", out.word, out.trace.cost());
                    emit(&out.trace, emit_trace.as_ref())?;
                }
                Stage::Alg4 => {
                    let out = alg4_balanced_to_preferred(&w, &[])?;
                    println!(
                        "v={} cost={} bound={} pinches={}",
                        out.v, out.stats.cost, out.stats.bound, out.stats.pinches
                    );
                    emit(&out.trace, emit_trace.as_ref())?;
                }
            }
        }
        Command::TraceVerify { path, expect_end } => {
            let text = fs::read_to_string(&path)
                .with_context(|| format!("reading {}", path.display()))?;
            let trace = Trace::from_text(&text).with_context(|| path.display().to_string())?;
            let replay = trace.validate()?;
            println!("valid end={} cost={}", replay.end, replay.cost);
            if let Some(expected) = expect_end {
                if replay.end != parse(&expected)? {
                    bail!("trace ends at {:?}, expected {expected:?}", replay.end.to_string());
                }
            }
        }
        Command::Oracle {
            word,
            max_len,
            max_cost,
        } => {
            let r = brute_area(&parse(&word)?, max_len, max_cost);
            let area = r.area.map_or_else(|| "unknown".to_string(), |a| a.to_string());
            println!(
                "area={area} exhausted={} states={}",
                flag(r.exhausted),
                r.states_explored
            );
        }
        Command::Survey {
            family,
            n_min,
            n_max,
            samples,
            seed,
            out,
        } => {
            let rows = run_survey(&family, n_min, n_max, samples, seed, &out)?;
            println!("rows={} out={}", rows.len(), out.display());
            match fit_records(&rows) {
                Ok(fit) => println!("slope={:.4} intercept={:.4}", fit.slope, fit.intercept),
                Err(HarnessError::InsufficientData(_)) => println!("slope=unknown"),
                Err(e) => return Err(e.into()),
            }
        }
        Command::Lemmas { trials, seed } => {
            if trials == 0 {
                bail!("--trials must be at least 1");
            }
            let report = check_lemmas(trials, seed);
            print!("{report}");
            if !report.all_passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
