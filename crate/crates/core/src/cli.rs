//! Command-line front end.
//!
//! [`run`] does all the work and returns the exit code together with the
//! captured stdout and stderr, so the binary is a thin wrapper and the
//! exit-code contract can be tested in-process:
//!
//! | code | meaning                                                     |
//! |------|-------------------------------------------------------------|
//! | 0    | success, or the certificate passed                          |
//! | 1    | domain failure: certificate failed, predicate not satisfied |
//! | 2    | usage or parse error                                        |
//!
//! Stdout always carries a single artifact, either a text file in one of
//! the formats of [`crate::format`] or a JSON [`ReportEnvelope`].

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::exact::{
    certify_drt_spectrum, certify_skew_hadamard, certify_thm1_spectrum, certify_thm3_adjacency,
};
use crate::hadamard::{drt_to_skew_hadamard, skew_hadamard_to_drt, SkewHadamard};
use crate::numeric::{seidel_eigen, DEFAULT_GROUPING_TOL};
use crate::report::{Payload, ReportEnvelope, Status};
use crate::search::{census, random_tournament, search_thm1, SearchMode, TournamentCode};
use crate::tournament::{Tournament, MAX_VERTICES};

pub const WORKERS_ENV: &str = "SEIDEL_SKEW_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "seidel-skew",
    version,
    about = "Doubly regular tournaments, skew Hadamard matrices and Seidel spectra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a tournament file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run an exact certificate and print a JSON report.
    Certify {
        which: CertifyKind,
        /// Input file, or `-` for stdin.
        input: String,
    },
    /// Print the numeric Seidel spectrum with main angles.
    Spectrum {
        input: String,
        #[arg(long, default_value_t = DEFAULT_GROUPING_TOL)]
        tol: f64,
    },
    /// Convert between tournaments and skew Hadamard matrices.
    Convert {
        direction: Direction,
        input: String,
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Search for tournaments passing the Seidel-spectrum certificate.
    Search {
        n: usize,
        #[arg(long, value_enum, default_value_t = SearchMode::Exhaustive)]
        mode: SearchMode,
        /// Number of random samples.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write one tournament file per hit into this directory.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
        /// 0 means one per available core.
        #[arg(long, env = WORKERS_ENV, default_value_t = 0)]
        workers: usize,
    },
    /// Count predicates over all labeled tournaments of one size.
    Census {
        n: usize,
        #[arg(long, env = WORKERS_ENV, default_value_t = 0)]
        workers: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Quadratic-residue tournament of prime order q ≡ 3 (mod 4).
    Paley { q: u64 },
    /// Uniformly random labeled tournament.
    Random {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CertifyKind {
    Drt,
    Thm1,
    Thm3,
    Hadamard,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    DrtToHadamard,
    HadamardToDrt,
    DeleteVertex,
    Extend,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: message.into() + "\n",
        }
    }

    fn with_note(mut self, note: String) -> Self {
        self.stderr.push_str(&note);
        self.stderr.push('\n');
        self
    }
}

/// Exit code for a library error: 2 for bad input or arguments, 1 for a
/// well-formed input that fails a predicate.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::NotATournament(_)
        | Error::BadModulus(_)
        | Error::IndexOutOfRange { .. }
        | Error::DimensionMismatch { .. }
        | Error::InvalidTolerance(_)
        | Error::TooLarge { .. }
        | Error::InvalidArgument(_) => 2,
        _ => 1,
    }
}

fn failure(e: &Error) -> Outcome {
    Outcome {
        code: exit_code(e),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

/// Parses `args` (including the program name) and executes the command.
/// `stdin` is read only when an input argument is `-`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text.trim_end())
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::Gen { kind } => gen(kind),
        Command::Certify { which, input } => {
            with_input(&input, stdin, |bytes| certify(which, bytes))
        }
        Command::Spectrum { input, tol } => with_input(&input, stdin, |bytes| spectrum(bytes, tol)),
        Command::Convert {
            direction,
            input,
            vertex,
        } => with_input(&input, stdin, |bytes| convert(direction, bytes, vertex)),
        Command::Search {
            n,
            mode,
            budget,
            seed,
            dump_dir,
            workers,
        } => search(n, mode, budget, seed, dump_dir, workers),
        Command::Census { n, workers } => run_census(n, workers),
    }
}

fn with_input(path: &str, stdin: &mut dyn Read, f: impl FnOnce(&[u8]) -> Outcome) -> Outcome {
    let mut bytes = Vec::new();
    let read = if path == "-" {
        stdin.read_to_end(&mut bytes).map(|_| ())
    } else {
        std::fs::read(path).map(|b| bytes = b)
    };
    match read {
        Ok(()) => f(&bytes),
        Err(e) => Outcome::usage(format!("error: cannot read {path}: {e}")),
    }
}

fn parse<T: std::str::FromStr<Err = Error>>(bytes: &[u8]) -> Result<T, Error> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
        line: 1,
        message: e.to_string(),
    })?;
    text.parse()
}

fn gen(kind: GenKind) -> Outcome {
    match kind {
        GenKind::Paley { q } => match Tournament::paley(q) {
            Ok(t) => Outcome::ok(t.to_string()),
            Err(e) => failure(&e),
        },
        GenKind::Random { n, seed } => {
            if n == 0 || n > MAX_VERTICES {
                return Outcome::usage(format!("error: size must be between 1 and {MAX_VERTICES}"));
            }
            Outcome::ok(random_tournament(n, seed).to_string())
        }
    }
}

fn envelope(envelope: ReportEnvelope) -> Outcome {
    let code = match envelope.status {
        Status::Pass => 0,
        Status::Fail | Status::Error => 1,
    };
    Outcome {
        code,
        stdout: envelope.to_json() + "\n",
        stderr: String::new(),
    }
}

fn certify(which: CertifyKind, bytes: &[u8]) -> Outcome {
    let command = format!(
        "certify {}",
        which
            .to_possible_value()
            .expect("no skipped variants")
            .get_name()
    );
    let report = if which == CertifyKind::Hadamard {
        match parse::<SkewHadamard>(bytes) {
            Ok(h) => certify_skew_hadamard(&h),
            Err(e) => return failure(&e),
        }
    } else {
        let t = match parse::<Tournament>(bytes) {
            Ok(t) => t,
            Err(e) => return failure(&e),
        };
        match which {
            CertifyKind::Drt => certify_drt_spectrum(&t),
            CertifyKind::Thm1 => certify_thm1_spectrum(&t),
            _ => certify_thm3_adjacency(&t),
        }
    };
    let status = if report.pass {
        Status::Pass
    } else {
        Status::Fail
    };
    let note = report.failure_reason.clone();
    let out = envelope(ReportEnvelope::new(
        &command,
        bytes,
        status,
        Payload::Certificate(report),
    ));
    match note {
        Some(reason) => out.with_note(format!("fail: {reason}")),
        None => out,
    }
}

fn spectrum(bytes: &[u8], tol: f64) -> Outcome {
    let t = match parse::<Tournament>(bytes) {
        Ok(t) => t,
        Err(e) => return failure(&e),
    };
    match seidel_eigen(&t, tol) {
        Ok(sd) => envelope(ReportEnvelope::new(
            "spectrum",
            bytes,
            Status::Pass,
            Payload::Spectrum(sd),
        )),
        Err(e) if exit_code(&e) == 2 => failure(&e),
        Err(e) => envelope(ReportEnvelope::error("spectrum", bytes, e.to_string()))
            .with_note(format!("error: {e}")),
    }
}

fn convert(direction: Direction, bytes: &[u8], vertex: Option<usize>) -> Outcome {
    let result = match direction {
        Direction::HadamardToDrt => parse::<SkewHadamard>(bytes)
            .and_then(|h| skew_hadamard_to_drt(&h))
            .map(|t| t.to_string()),
        _ => parse::<Tournament>(bytes).and_then(|t| match direction {
            Direction::DrtToHadamard => drt_to_skew_hadamard(&t).map(|h| h.to_string()),
            Direction::DeleteVertex => match vertex {
                Some(v) => t.delete_vertex(v).map(|d| d.to_string()),
                None => Err(Error::InvalidArgument(
                    "delete-vertex needs --vertex".into(),
                )),
            },
            _ => t.extend_to_regular().map(|e| e.to_string()),
        }),
    };
    match result {
        Ok(text) => Outcome::ok(text),
        Err(e) => failure(&e),
    }
}

fn search(
    n: usize,
    mode: SearchMode,
    budget: Option<u64>,
    seed: u64,
    dump_dir: Option<PathBuf>,
    workers: usize,
) -> Outcome {
    if mode == SearchMode::Random && budget.is_none() {
        return Outcome::usage("error: random search needs --budget");
    }
    let started = std::time::Instant::now();
    let report = match search_thm1(n, mode, budget.unwrap_or(0), seed, workers) {
        Ok(r) => r,
        Err(e) => return failure(&e),
    };
    if let Some(dir) = dump_dir {
        if let Err(e) = dump_hits(&dir, n, &report.hits) {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", dir.display()),
            };
        }
    }
    let note = format!(
        "examined {} tournaments of size {n}, {} hits, {:.3}s",
        report.examined,
        report.hit_count,
        started.elapsed().as_secs_f64()
    );
    // The digest covers the parameters that determine the result, not the worker count.
    let params = format!("n={n} mode={mode:?} budget={budget:?} seed={seed}");
    envelope(ReportEnvelope::new(
        "search",
        params.as_bytes(),
        Status::Pass,
        Payload::Search(report),
    ))
    .with_note(note)
}

fn dump_hits(dir: &std::path::Path, n: usize, hits: &[u64]) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    for &code in hits {
        let t = TournamentCode { n, code }.decode();
        std::fs::write(
            dir.join(format!("tournament-{n}-{code}.txt")),
            t.to_string(),
        )?;
    }
    Ok(())
}

fn run_census(n: usize, workers: usize) -> Outcome {
    match census(n, workers) {
        Ok(report) => {
            let note = format!(
                "{:.3}s on {} workers",
                report.elapsed.as_secs_f64(),
                report.workers
            );
            let params = format!("n={n}");
            envelope(ReportEnvelope::new(
                "census",
                params.as_bytes(),
                Status::Pass,
                Payload::Census(report),
            ))
            .with_note(note)
        }
        Err(e) => failure(&e),
    }
}
