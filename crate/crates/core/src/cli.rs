//! The `vbraid` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain
//! error, 4 precondition failure, 10 unknown (from `equal`).

use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::braidword::{
    bfs_equal, presentation_for, Flavor, GroupWord, SearchConfig, SearchOutcome, WordError,
    DEFAULT_DEPTH,
};
use crate::gauss::{closure_code, parse_gauss, GaussError};
use crate::reps::{abelianize, aut_rep, burau, perm_proj, RepError};
use crate::verify::{verify, Representation, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;
pub const EXIT_UNKNOWN: i32 = 10;

pub const DEPTH_ENV: &str = "VBRAID_BFS_DEPTH";

#[derive(Debug, Parser)]
#[command(name = "vbraid", version, about = "Virtual braid group toolkit")]
pub struct Cli {
    /// Print results in their JSON encodings.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    #[arg(long, default_value = "vb")]
    pub flavor: String,
    /// Number of strands.
    #[arg(short = 'n', long = "strands")]
    pub n: usize,
    /// Whitespace-separated letters such as "s1 s2^-1 z1".
    pub word: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cancel adjacent inverse pairs.
    Reduce(WordArgs),
    /// Burau matrix of a word.
    Burau(WordArgs),
    /// Image permutation of a word.
    Perm(WordArgs),
    /// Automorphism of the free group induced by a word.
    Aut(WordArgs),
    /// Image in Z/2 + Z.
    Abelianize(WordArgs),
    /// Determinant of the Burau matrix.
    Det(WordArgs),
    /// Check every relator under every applicable representation.
    Verify {
        #[arg(long, default_value = "vb")]
        flavor: String,
        /// Strand counts: "a..b" (inclusive) or a single number.
        #[arg(short = 'n', long = "strands", default_value = "2..7")]
        range: String,
        /// Comma-separated subset of burau, aut, perm, exp_sum, abelianize.
        #[arg(long, value_delimiter = ',')]
        reps: Vec<String>,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Search for a derivation between two words.
    Equal {
        #[arg(long, default_value = "vb")]
        flavor: String,
        #[arg(short = 'n', long = "strands")]
        n: usize,
        /// Maximum number of moves; defaults to $VBRAID_BFS_DEPTH or 6.
        #[arg(long)]
        depth: Option<usize>,
        /// Maximum intermediate word length.
        #[arg(long)]
        length_cap: Option<usize>,
        first: String,
        second: String,
    },
    /// Gauss code of the closure of a word.
    ClosureGauss(WordArgs),
    /// Validate a Gauss code and print it canonically relabeled.
    Gauss { code: String },
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self::with_code(EXIT_OK, stdout)
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: i32, message: impl std::fmt::Display) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<WordError> for Failure {
    fn from(e: WordError) -> Self {
        let code = if e.is_parse_error() {
            EXIT_PARSE
        } else {
            EXIT_DOMAIN
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<RepError> for Failure {
    fn from(e: RepError) -> Self {
        Failure {
            code: EXIT_DOMAIN,
            message: e.to_string(),
        }
    }
}

impl From<GaussError> for Failure {
    fn from(e: GaussError) -> Self {
        let code = match e {
            GaussError::Syntax { .. } | GaussError::LabelCount { .. } => EXIT_PARSE,
            GaussError::NotAKnot { .. } => EXIT_PRECONDITION,
            GaussError::Rep(_) => EXIT_DOMAIN,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Word(w) => w.into(),
            other => Failure {
                code: EXIT_PARSE,
                message: other.to_string(),
            },
        }
    }
}

fn parse_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_PARSE,
        message: message.into(),
    }
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn json_line(v: &impl serde::Serialize) -> String {
    line(serde_json::to_string(v).expect("values serialize"))
}

impl WordArgs {
    fn word(&self) -> Result<GroupWord, Failure> {
        let flavor: Flavor = self.flavor.parse()?;
        Ok(GroupWord::parse(&self.word, flavor, self.n)?)
    }
}

/// Parses `a..b`, `a..=b` or `a`; both bounds are inclusive.
pub fn parse_range(text: &str) -> Option<RangeInclusive<usize>> {
    let text = text.trim();
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (text, text),
    };
    let lo: usize = lo.trim().parse().ok()?;
    let hi: usize = hi.trim().parse().ok()?;
    (lo <= hi).then_some(lo..=hi)
}

fn search_depth(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(d) = flag {
        return Ok(d);
    }
    match std::env::var(DEPTH_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| parse_error(format!("{DEPTH_ENV}={v:?} is not a depth"))),
        Err(_) => Ok(DEFAULT_DEPTH),
    }
}

fn execute(command: &Command, as_json: bool) -> Result<Outcome, Failure> {
    match command {
        Command::Reduce(args) => {
            let w = args.word()?.free_reduce();
            Ok(Outcome::ok(if as_json {
                json_line(&json!({
                    "flavor": w.flavor(),
                    "n": w.strands(),
                    "word": w.to_string(),
                }))
            } else {
                line(&w)
            }))
        }
        Command::Burau(args) => {
            let m = burau(&args.word()?)?;
            Ok(Outcome::ok(if as_json { json_line(&m) } else { line(&m) }))
        }
        Command::Perm(args) => {
            let p = perm_proj(&args.word()?)?;
            Ok(Outcome::ok(if as_json { json_line(&p) } else { line(&p) }))
        }
        Command::Aut(args) => {
            let a = aut_rep(&args.word()?)?;
            Ok(Outcome::ok(if as_json {
                let images: Vec<String> = a.images().iter().map(|w| w.to_string()).collect();
                json_line(&json!({ "rank": a.rank(), "images": images }))
            } else {
                line(&a)
            }))
        }
        Command::Abelianize(args) => {
            let image = abelianize(&args.word()?)?;
            Ok(Outcome::ok(json_line(&image)))
        }
        Command::Det(args) => {
            let d = burau(&args.word()?)?.det();
            Ok(Outcome::ok(if as_json { json_line(&d) } else { line(&d) }))
        }
        Command::Verify {
            flavor,
            range,
            reps,
            inject_fault,
        } => {
            let flavor: Flavor = flavor.parse()?;
            let ns = parse_range(range)
                .ok_or_else(|| parse_error(format!("bad strand range {range:?}")))?;
            let reps: Vec<Representation> = if reps.is_empty() {
                Representation::ALL.to_vec()
            } else {
                reps.iter()
                    .map(|r| r.parse())
                    .collect::<Result<_, VerifyError>>()?
            };
            let report = verify(flavor, ns, &reps, inject_fault.as_deref())?;
            let code = if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
            let text = if as_json {
                json_line(&report)
            } else {
                report.to_text()
            };
            Ok(Outcome::with_code(code, text))
        }
        Command::Equal {
            flavor,
            n,
            depth,
            length_cap,
            first,
            second,
        } => {
            let flavor: Flavor = flavor.parse()?;
            let w1 = GroupWord::parse(first, flavor, *n)?;
            let w2 = GroupWord::parse(second, flavor, *n)?;
            let config = SearchConfig {
                depth: search_depth(*depth)?,
                length_cap: *length_cap,
            };
            let outcome = bfs_equal(&w1, &w2, &config)?;
            let pres = presentation_for(&w1);
            let (code, steps) = match &outcome {
                SearchOutcome::Equal(witness) => (
                    EXIT_OK,
                    witness.steps.iter().map(|s| s.describe(&pres)).collect(),
                ),
                SearchOutcome::Unknown => (EXIT_UNKNOWN, Vec::new()),
            };
            let text = if as_json {
                json_line(&json!({ "result": outcome.to_string(), "steps": steps }))
            } else {
                let mut out = line(&outcome);
                for (i, s) in steps.iter().enumerate() {
                    out.push_str(&format!("{}. {s}\n", i + 1));
                }
                out
            };
            Ok(Outcome::with_code(code, text))
        }
        Command::ClosureGauss(args) => {
            let code = closure_code(&args.word()?)?;
            Ok(Outcome::ok(if as_json {
                json_line(&json!({ "code": code.to_string(), "crossings": code.crossings() }))
            } else {
                line(&code)
            }))
        }
        Command::Gauss { code } => {
            let code = parse_gauss(code)?;
            Ok(Outcome::ok(if as_json {
                json_line(&json!({ "code": code.to_string(), "crossings": code.crossings() }))
            } else {
                line(&code)
            }))
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_PARSE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    match execute(&cli.command, cli.json) {
        Ok(outcome) => outcome,
        Err(f) => Outcome::error(f.code, f.message),
    }
}
