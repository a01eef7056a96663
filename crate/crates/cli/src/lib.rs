//! Command implementations behind the `colondec` binary.
//!
//! Every command returns an [`Outcome`]: the text for stdout and stderr plus
//! the process exit code. Exit codes follow the decoder statuses: 0 for
//! `in_code`/`corrected` (and plain success), 1 when a cross-check or
//! identity fails, 2 for `ambiguous`, 3 for `uncorrectable`, 4 for invalid
//! input.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use colondec::format::{parse_code, parse_word};
use colondec::oracle::DEFAULT_THRESHOLD;
use colondec::{decode_with, ideal, DecodeOptions, DecodeResult, LinearCode, Oracle, Status};

pub mod report;
pub mod simulate;

use report::{CheckRegJson, CountDiffJson, CountMinJson, MinDistJson, ResultJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_AMBIGUOUS: i32 = 2;
pub const EXIT_UNCORRECTABLE: i32 = 3;
pub const EXIT_INVALID: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        source: colondec::Error,
    },
    #[error(transparent)]
    Core(#[from] colondec::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "colondec",
    version,
    about = "Decode linear codes over prime fields through colon ideals"
)]
pub struct Cli {
    /// Re-verify that every nonzero residue of the code's field is invertible.
    #[arg(long, global = true)]
    pub field_check: bool,
    /// Largest message count the brute-force oracle will enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_THRESHOLD)]
    pub oracle_threshold: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum distance from the rank criterion.
    Mindist {
        code: PathBuf,
        #[arg(long)]
        oracle: bool,
    },
    /// Decode a received word.
    Decode(DecodeArgs),
    /// Number of projective minimum-weight codewords.
    CountMin {
        code: PathBuf,
        #[arg(long)]
        oracle: bool,
    },
    /// Compare the count for C with the count after removing a row.
    CountDiff {
        code: PathBuf,
        /// Row to remove, 1-based.
        #[arg(long)]
        row: usize,
    },
    /// Check the colon-piece identities on a received word.
    CheckReg { code: PathBuf, word: PathBuf },
    /// Encode, corrupt and decode random messages.
    Simulate(simulate::SimulateArgs),
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    pub code: PathBuf,
    pub word: PathBuf,
    /// Colon by `T^u` with this `u` instead of the default.
    #[arg(long)]
    pub colon_power: Option<usize>,
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn json<T: serde::Serialize>(value: &T, code: i32) -> Self {
        let mut stdout = serde_json::to_string(value).expect("report types serialize");
        stdout.push('\n');
        Self {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    pub fn from_error(err: &CliError) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code: EXIT_INVALID,
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(out) => out,
        Err(err) => Outcome::from_error(&err),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let ctx = Context {
        field_check: cli.field_check,
        oracle: Oracle::new(cli.oracle_threshold),
    };
    match &cli.command {
        Command::Mindist { code, oracle } => ctx.mindist(code, *oracle),
        Command::Decode(args) => ctx.decode(args),
        Command::CountMin { code, oracle } => ctx.count_min(code, *oracle),
        Command::CountDiff { code, row } => ctx.count_diff(code, *row),
        Command::CheckReg { code, word } => ctx.check_reg(code, word),
        Command::Simulate(args) => {
            let code = ctx.load_code(&args.code)?;
            simulate::run(&code, args)
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

struct Context {
    field_check: bool,
    oracle: Oracle,
}

impl Context {
    fn load_code(&self, path: &Path) -> Result<LinearCode, CliError> {
        let code = parse_code(&read(path)?).map_err(|source| CliError::Input {
            path: path.to_owned(),
            source,
        })?;
        if self.field_check && !code.field().verify_exhaustive() {
            return Err(CliError::Input {
                path: path.to_owned(),
                source: colondec::Error::NotPrime(code.field().modulus()),
            });
        }
        Ok(code)
    }

    fn load_word(&self, path: &Path, code: &LinearCode) -> Result<Vec<u32>, CliError> {
        parse_word(&read(path)?, code).map_err(|source| CliError::Input {
            path: path.to_owned(),
            source,
        })
    }

    fn mindist(&self, path: &Path, oracle: bool) -> Result<Outcome, CliError> {
        let code = self.load_code(path)?;
        let d = code.min_distance()?;
        let agrees = if oracle {
            Some(self.oracle.min_distance(&code)? == d)
        } else {
            None
        };
        let report = MinDistJson {
            p: code.field().modulus(),
            n: code.n(),
            k: code.k(),
            d,
            oracle_agrees: agrees,
        };
        Ok(Outcome::json(&report, mismatch_code(agrees)))
    }

    fn decode(&self, args: &DecodeArgs) -> Result<Outcome, CliError> {
        let code = self.load_code(&args.code)?;
        let w = self.load_word(&args.word, &code)?;
        let opts = DecodeOptions {
            colon_power: args.colon_power,
        };
        let start = Instant::now();
        let result = decode_with(&code, &w, &opts)?;
        let elapsed = start.elapsed();
        let agrees = if args.oracle {
            Some(oracle_agrees(&code, &w, &result, &self.oracle)?)
        } else {
            None
        };
        let report = ResultJson::new(&code, &result, elapsed, agrees);
        let exit = if agrees == Some(false) {
            EXIT_MISMATCH
        } else {
            status_exit_code(result.status)
        };
        Ok(Outcome::json(&report, exit))
    }

    fn count_min(&self, path: &Path, oracle: bool) -> Result<Outcome, CliError> {
        let code = self.load_code(path)?;
        let count = ideal::min_weight_count(&code)? as u64;
        let agrees = if oracle {
            Some(self.oracle.projective_min_weight_count(&code)? == count)
        } else {
            None
        };
        let report = CountMinJson {
            p: code.field().modulus(),
            n: code.n(),
            k: code.k(),
            d: code.min_distance()?,
            count,
            oracle_agrees: agrees,
        };
        Ok(Outcome::json(&report, mismatch_code(agrees)))
    }

    fn count_diff(&self, path: &Path, row: usize) -> Result<Outcome, CliError> {
        let code = self.load_code(path)?;
        if code.k() < 2 {
            return Err(CliError::Usage("row removal needs k >= 2".into()));
        }
        if row == 0 || row > code.k() {
            return Err(CliError::Usage(format!(
                "--row must lie in 1..={}",
                code.k()
            )));
        }
        let j = row - 1;
        let d = code.min_distance()?;
        let reduced = code.remove_row(j)?;
        let count = ideal::min_weight_count(&code)? as u64;
        let count_reduced = if reduced.min_distance()? == d {
            ideal::min_weight_count(&reduced)? as u64
        } else {
            0
        };
        let colon = ideal::colon_degree(&ideal::build_ideal(&code, d + 1)?, j)? as u64;
        let nn = self.oracle.nearest_neighbors(&reduced, code.row(j))?;
        let neighbors = nn.neighbors.len() as u64;
        let report = CountDiffJson::new(&code, row, count, count_reduced, colon, neighbors, nn.d_w);
        let exit = if report.consistent() {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        };
        Ok(Outcome::json(&report, exit))
    }

    fn check_reg(&self, code_path: &Path, word_path: &Path) -> Result<Outcome, CliError> {
        let code = self.load_code(code_path)?;
        let w = self.load_word(word_path, &code)?;
        let d = code.min_distance()?;
        let radius = (d - 1) / 2;
        let mut report = CheckRegJson::new(&code, d);
        if d < 3 || code.contains(&w)?.is_some() {
            return Ok(Outcome::json(&report, EXIT_OK));
        }
        let augmented = code.augment(&w)?;
        let d_w = ideal::min_distance_capped(&augmented, radius + 1)?;
        if d_w > radius {
            return Ok(Outcome::json(&report, EXIT_OK));
        }
        let ideal = ideal::build_ideal(&augmented, d_w + 1)?;
        let prime = ideal::colon_linear_piece(&ideal, code.k(), d_w)?;
        let saturation = ideal::verify_saturation_identity(&ideal, &prime)?;
        let containment = ideal::verify_claim_containment(&ideal, &prime)?;
        report.record(d_w, saturation, containment);
        let exit = if saturation && containment {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        };
        Ok(Outcome::json(&report, exit))
    }
}

fn mismatch_code(agrees: Option<bool>) -> i32 {
    if agrees == Some(false) {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

pub fn status_exit_code(status: Status) -> i32 {
    match status {
        Status::InCode | Status::Corrected => EXIT_OK,
        Status::Ambiguous => EXIT_AMBIGUOUS,
        Status::Uncorrectable => EXIT_UNCORRECTABLE,
    }
}

/// Whether a decoding result matches exhaustive search.
pub fn oracle_agrees(
    code: &LinearCode,
    w: &[u32],
    result: &DecodeResult,
    oracle: &Oracle,
) -> colondec::Result<bool> {
    let nn = oracle.nearest_neighbors(code, w)?;
    Ok(match result.status {
        Status::InCode => nn.d_w == 0,
        Status::Corrected => {
            nn.neighbors.len() == 1
                && result.d_w == Some(nn.d_w)
                && result.nearest.as_ref() == Some(&nn.neighbors[0])
        }
        Status::Ambiguous => {
            nn.neighbors.len() > 1
                && result.d_w == Some(nn.d_w)
                && result.neighbor_count == Some(nn.neighbors.len() as u64)
        }
        Status::Uncorrectable => nn.d_w >= result.d,
    })
}
