//! Channel simulation: random message, `t` random symbol errors, decode.
//!
//! Trial `i` draws from ChaCha8 seeded with `seed_from_u64(seed)` on stream
//! `i`, so every trial is reproducible on its own and the output does not
//! depend on the thread count. Per trial the draws are, in order: the `k`
//! message symbols, the `t` error positions (`rand::seq::index::sample`),
//! then one nonzero delta per position.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use colondec::{decode, LinearCode, Status};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{CliError, Outcome, EXIT_OK};

#[derive(Debug, Args)]
pub struct SimulateArgs {
    pub code: PathBuf,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    /// Number of symbol errors injected per trial.
    #[arg(long, default_value_t = 1)]
    pub errors: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trial {
    pub trial: u64,
    pub d_w: Option<usize>,
    pub status: Status,
    pub correct: bool,
    pub micros: u128,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Summary {
    pub trials: u64,
    pub successes: u64,
    pub in_code: u64,
    pub corrected: u64,
    pub ambiguous: u64,
    pub uncorrectable: u64,
    pub mean_micros: f64,
}

impl Summary {
    pub fn of(trials: &[Trial]) -> Self {
        let mut s = Summary {
            trials: trials.len() as u64,
            ..Default::default()
        };
        let mut total = 0u128;
        for t in trials {
            s.successes += u64::from(t.correct);
            match t.status {
                Status::InCode => s.in_code += 1,
                Status::Corrected => s.corrected += 1,
                Status::Ambiguous => s.ambiguous += 1,
                Status::Uncorrectable => s.uncorrectable += 1,
            }
            total += t.micros;
        }
        if !trials.is_empty() {
            s.mean_micros = total as f64 / trials.len() as f64;
        }
        s
    }

    pub fn success_rate(&self) -> f64 {
        if self.trials == 0 {
            return 0.0;
        }
        self.successes as f64 / self.trials as f64
    }

    pub fn line(&self) -> String {
        format!(
            "trials={} successes={} in_code={} corrected={} ambiguous={} uncorrectable={} success_rate={:.6} mean_decode_us={:.1}",
            self.trials,
            self.successes,
            self.in_code,
            self.corrected,
            self.ambiguous,
            self.uncorrectable,
            self.success_rate(),
            self.mean_micros
        )
    }
}

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn run_trial(code: &LinearCode, errors: usize, seed: u64, trial: u64) -> colondec::Result<Trial> {
    let mut rng = trial_rng(seed, trial);
    let f = code.field();
    let p = f.modulus();
    let message: Vec<u32> = (0..code.k()).map(|_| rng.gen_range(0..p)).collect();
    let sent = code.encode(&message)?.v;
    let mut received = sent.clone();
    for pos in rand::seq::index::sample(&mut rng, code.n(), errors) {
        received[pos] = f.add(received[pos], rng.gen_range(1..p));
    }
    let start = Instant::now();
    let result = decode(code, &received)?;
    let micros = start.elapsed().as_micros();
    let correct = matches!(result.status, Status::InCode | Status::Corrected)
        && result.nearest.as_ref().is_some_and(|c| c.v == sent);
    Ok(Trial {
        trial,
        d_w: result.d_w,
        status: result.status,
        correct,
        micros,
    })
}

/// Runs `trials` independent trials on `threads` worker threads; results
/// come back in trial order.
pub fn simulate(
    code: &LinearCode,
    trials: u64,
    errors: usize,
    seed: u64,
    threads: usize,
) -> Result<Vec<Trial>, CliError> {
    if threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    if errors > code.n() {
        return Err(CliError::Usage(format!(
            "--errors {errors} exceeds the length {}",
            code.n()
        )));
    }
    // Computed once up front so no trial pays for it.
    code.min_distance()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let results: colondec::Result<Vec<Trial>> = pool.install(|| {
        (0..trials)
            .into_par_iter()
            .map(|i| run_trial(code, errors, seed, i))
            .collect()
    });
    Ok(results?)
}

/// CSV with header `trial,d_w,status,correct,micros`. With `timing` off the
/// `micros` column is left empty, which makes runs byte-comparable.
pub fn csv(trials: &[Trial], timing: bool) -> String {
    let mut out = String::from("trial,d_w,status,correct,micros\n");
    for t in trials {
        let d_w = t.d_w.map(|d| d.to_string()).unwrap_or_default();
        let micros = if timing {
            t.micros.to_string()
        } else {
            String::new()
        };
        writeln!(
            out,
            "{},{},{},{},{}",
            t.trial, d_w, t.status, t.correct, micros
        )
        .expect("writing to a String");
    }
    out
}

pub fn run(code: &LinearCode, args: &SimulateArgs) -> Result<Outcome, CliError> {
    let trials = simulate(code, args.trials, args.errors, args.seed, args.threads)?;
    let table = csv(&trials, true);
    let mut summary = Summary::of(&trials).line();
    summary.push('\n');
    let stdout = match &args.out {
        Some(path) => {
            fs::write(path, table).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            String::new()
        }
        None => table,
    };
    Ok(Outcome {
        stdout,
        stderr: summary,
        code: EXIT_OK,
    })
}
