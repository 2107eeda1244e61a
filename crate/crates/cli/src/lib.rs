//! Command-line front end for braid normal forms.
//!
//! Commands run in-process through [`run`], which returns what the binary
//! would print and its exit code.

pub mod svg;
pub mod text;

use std::path::PathBuf;

use braidnf_core::artin::{normalize_a, ArtinWord};
use braidnf_core::gathering::{nf_to_word, normal_form_with, GatherOptions};
use braidnf_core::randbraid::{random_braid, RandomParams};
use braidnf_core::rewriting::{residue_with, RewriteOptions, Strategy};
use braidnf_core::{crossings_to_word, equal_a, word_to_crossings, Error};
use clap::{Parser, Subcommand};
use thiserror::Error as ThisError;

use text::{format_crossings, parse_crossings, parse_word, render_word};

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::StepBudgetExceeded { .. }) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "braidnf", version, about = "Normal forms of braid words")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form x1^m w3 ... wN of a word.
    Normalize {
        #[arg(long)]
        strands: usize,
        /// Also print m and each block.
        #[arg(long)]
        report: bool,
        #[arg(long)]
        pretty: bool,
        #[arg(long)]
        max_steps: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Word to crossing sequence.
    Crossings {
        #[arg(long)]
        strands: usize,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Crossing sequence to word.
    FromCrossings {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        pretty: bool,
        #[arg(allow_hyphen_values = true)]
        crossings: String,
    },
    /// Residue of a crossing sequence under the rewriting system.
    Residue {
        #[arg(long)]
        strands: usize,
        /// leftmost, rightmost or random:SEED
        #[arg(long, default_value = "leftmost", value_parser = parse_strategy)]
        strategy: Strategy,
        #[arg(long)]
        max_steps: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        crossings: String,
    },
    /// Random braid in normal form.
    Random {
        #[arg(long)]
        strands: usize,
        /// s2,...,sN, or a single value used for every step
        #[arg(long, value_delimiter = ',')]
        stop: Vec<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        pretty: bool,
    },
    /// Whether two words are the same braid.
    Equal {
        #[arg(long)]
        strands: usize,
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// The group <a, b | abab = baba>, letters a A b B.
    Artin {
        #[command(subcommand)]
        command: ArtinCommand,
    },
    /// SVG diagram of a word.
    Diagram {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Draw this strand thicker.
        #[arg(long)]
        bold: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ArtinCommand {
    Normalize {
        #[arg(long)]
        report: bool,
        word: String,
    },
    Equal {
        first: String,
        second: String,
    },
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    match s {
        "leftmost" => Ok(Strategy::Leftmost),
        "rightmost" => Ok(Strategy::Rightmost),
        _ => s
            .strip_prefix("random:")
            .and_then(|seed| seed.parse().ok())
            .map(Strategy::SeededRandom)
            .ok_or_else(|| format!("unknown strategy {s:?}; expected leftmost, rightmost or random:SEED")),
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli.command),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (rendered, String::new()) } else { (String::new(), rendered) };
            Output { stdout, stderr, code }
        }
    }
}

pub fn run(cmd: &Command) -> Output {
    match execute(cmd) {
        Ok(stdout) => Output {
            stdout,
            stderr: String::new(),
            code: 0,
        },
        Err(e) => Output {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

fn line(s: impl AsRef<str>) -> String {
    format!("{}\n", s.as_ref())
}

fn execute(cmd: &Command) -> Result<String, CliError> {
    match cmd {
        Command::Normalize {
            strands,
            report,
            pretty,
            max_steps,
            word,
        } => {
            let w = parse_word(*strands, word)?;
            let mut opts = GatherOptions::default();
            if let Some(m) = max_steps {
                opts.max_steps = *m;
            }
            let nf = normal_form_with(&w, &opts)?;
            let mut out = line(render_word(&nf_to_word(&nf), *pretty));
            if *report {
                out += &line(format!("m = {}", nf.m()));
                for (i, b) in nf.blocks().iter().enumerate() {
                    out += &line(format!("w{} = {}", i + 3, render_word(b, *pretty)).trim_end());
                }
            }
            Ok(out)
        }
        Command::Crossings { strands, word } => {
            let w = parse_word(*strands, word)?;
            Ok(line(format_crossings(&word_to_crossings(&w))))
        }
        Command::FromCrossings {
            strands,
            pretty,
            crossings,
        } => {
            let c = parse_crossings(*strands, crossings)?;
            Ok(line(render_word(&crossings_to_word(&c)?, *pretty)))
        }
        Command::Residue {
            strands,
            strategy,
            max_steps,
            crossings,
        } => {
            let c = parse_crossings(*strands, crossings)?;
            crossings_to_word(&c)?;
            let mut opts = RewriteOptions::default();
            if let Some(m) = max_steps {
                opts.max_steps = *m;
            }
            Ok(line(format_crossings(&residue_with(&c, *strategy, &opts)?)))
        }
        Command::Random {
            strands,
            stop,
            seed,
            pretty,
        } => {
            let stop = match stop.as_slice() {
                [s] => vec![*s; strands.saturating_sub(1)],
                _ => stop.clone(),
            };
            let nf = random_braid(&RandomParams::new(*strands, stop, *seed)?)?;
            Ok(line(render_word(&nf_to_word(&nf), *pretty)))
        }
        Command::Equal {
            strands,
            first,
            second,
        } => {
            let (u, v) = (parse_word(*strands, first)?, parse_word(*strands, second)?);
            let opts = GatherOptions::default();
            let same = normal_form_with(&u, &opts)? == normal_form_with(&v, &opts)?;
            Ok(line(if same { "equal" } else { "not-equal" }))
        }
        Command::Artin { command } => match command {
            ArtinCommand::Normalize { report, word } => {
                let w: ArtinWord = word.parse().map_err(CliError::Parse)?;
                let nf = normalize_a(&w)?;
                let mut out = line(nf.to_word().to_string());
                if *report {
                    out += &line(format!("m = {}", nf.m));
                    out += &line(format!("w1 = {}", nf.w1));
                }
                Ok(out)
            }
            ArtinCommand::Equal { first, second } => {
                let u: ArtinWord = first.parse().map_err(CliError::Parse)?;
                let v: ArtinWord = second.parse().map_err(CliError::Parse)?;
                Ok(line(if equal_a(&u, &v)? { "equal" } else { "not-equal" }))
            }
        },
        Command::Diagram {
            strands,
            out,
            bold,
            word,
        } => {
            let w = parse_word(*strands, word)?;
            if let Some(k) = bold {
                if *k == 0 || k > strands {
                    return Err(CliError::Parse(format!("--bold {k} is not a strand of {strands}")));
                }
            }
            let svg = svg::render(&w, *bold);
            match out {
                Some(path) => {
                    std::fs::write(path, svg).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(svg),
            }
        }
    }
}
