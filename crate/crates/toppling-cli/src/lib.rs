//! Command-line front end: graph files in, Betti tables, matrices and DOT out.

pub mod error;
pub mod input;
pub mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use toppling::{Field, PointedGraph, Variant};

pub use error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "toppling", version, about = "Toppling ideals, flags and minimal free resolutions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Args)]
pub struct Options {
    /// Graph file, text or JSON.
    #[arg(long, global = true)]
    pub graph: Option<PathBuf>,
    /// Distinguished vertex (1-based); overrides the file's `q` line.
    #[arg(long, global = true)]
    pub q: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "z", ignore_case = true)]
    pub grading: Grading,
    #[arg(long, global = true, value_enum, default_value = "binomial")]
    pub variant: VariantArg,
    /// `rational`, `prime(p)` or `prime` (p = 32003).
    #[arg(long, global = true, default_value = "rational", value_parser = parse_field)]
    pub field: Field,
    /// Write here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graded Betti numbers of R/I.
    Betti,
    /// The differentials of the minimal free resolution.
    Resolution,
    /// Gröbner basis of the toppling ideal.
    Groebner,
    /// Minimal representatives of the connected flag classes.
    Flags {
        /// Only flags of this length.
        #[arg(long)]
        k: Option<usize>,
    },
    /// q-reduced form of a divisor.
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
    },
    /// Linear equivalence of two divisors, or equivalence of two flags.
    Equiv {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "flag")]
        divisor: Vec<String>,
        #[arg(long)]
        flag: Vec<String>,
    },
    /// Effective divisors linearly equivalent to a divisor.
    Linsys {
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
    },
    /// Acyclic orientations with unique source q, keyed by their maximal reduced divisor.
    Orientations,
    /// Run the consistency checks and oracles.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        oracle: Oracle,
    },
    /// DOT figure of the orientation of a flag or of a maximal reduced divisor.
    ExportDot {
        #[arg(long, conflicts_with = "divisor")]
        flag: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        divisor: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Grading {
    Z,
    Pic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Binomial,
    Monomial,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Binomial => Variant::Binomial,
            VariantArg::Monomial => Variant::Monomial,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    All,
    Complex,
    Hilbert,
    Schreyer,
    Hochster,
    Flags,
}

pub fn parse_field(s: &str) -> std::result::Result<Field, String> {
    let s = s.trim().to_ascii_lowercase();
    let field = match s.as_str() {
        "rational" | "q" => Field::Rational,
        "prime" => Field::default(),
        _ => {
            let p = s
                .strip_prefix("prime(")
                .and_then(|t| t.strip_suffix(')'))
                .and_then(|t| t.trim().parse::<u32>().ok())
                .ok_or_else(|| format!("expected `rational` or `prime(p)`, found `{}`", s))?;
            Field::Prime(p)
        }
    };
    if !field.is_valid() {
        return Err(format!("{} is not a prime", s));
    }
    Ok(field)
}

/// What a command produced. `ok` is false when a verification failed.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

pub fn load(opts: &Options) -> Result<PointedGraph> {
    let path = opts.graph.as_ref().ok_or_else(|| CliError::Syntax("--graph is required".into()))?;
    let g = input::load_graph(path)?;
    match opts.q {
        None => Ok(g),
        Some(0) => Err(CliError::Syntax("vertices are numbered from 1".into())),
        Some(q) => Ok(g.with_q(q - 1)?),
    }
}

fn format_or(opts: &Options, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = opts.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(CliError::Syntax(format!("format {:?} is not available for this command", f).to_lowercase()))
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    use Format::*;
    let opts = &cli.opts;
    let g = load(opts)?;
    let text = match &cli.command {
        Command::Betti => {
            let res = toppling::build_resolution(&g, opts.variant.into(), opts.field)?;
            render::betti(&res.betti_table(), opts.grading, format_or(opts, Tsv, &[Tsv, Text, Json])?)
        }
        Command::Resolution => {
            let res = toppling::build_resolution(&g, opts.variant.into(), opts.field)?;
            render::resolution(&g, &res, format_or(opts, Text, &[Text, Json])?)
        }
        Command::Groebner => render::groebner(&g, &toppling::groebner_basis(&g)?, format_or(opts, Text, &[Text, Json])?),
        Command::Flags { k } => {
            let ks: Vec<usize> = match k {
                Some(k) => vec![*k],
                None => (1..=g.n()).collect(),
            };
            let bases = ks.iter().map(|&k| toppling::enumerate_minimal_flags(&g, k)).collect::<toppling::Result<Vec<_>>>()?;
            render::flags(&g, &bases, format_or(opts, Tsv, &[Tsv, Text, Json])?)
        }
        Command::Reduce { divisor } => {
            let d = input::parse_divisor(divisor, g.n())?;
            render::divisors(&[toppling::q_reduce(&g, &d)], format_or(opts, Text, &[Text, Tsv, Json])?)
        }
        Command::Equiv { divisor, flag } => {
            let same = if flag.len() == 2 {
                let u = input::parse_flag_literal(&flag[0], &g)?;
                let v = input::parse_flag_literal(&flag[1], &g)?;
                toppling::flags::flags_equivalent(&g, &u, &v)?
            } else if divisor.len() == 2 {
                let a = input::parse_divisor(&divisor[0], g.n())?;
                let b = input::parse_divisor(&divisor[1], g.n())?;
                toppling::divisor::linearly_equivalent(&g, &a, &b)
            } else {
                return Err(CliError::Syntax("equiv needs two --divisor or two --flag values".into()));
            };
            match format_or(opts, Text, &[Text, Json])? {
                Json => format!("{}\n", serde_json::json!({ "equivalent": same })),
                _ => format!("{}\n", same),
            }
        }
        Command::Linsys { divisor } => {
            let d = input::parse_divisor(divisor, g.n())?;
            let mut system = toppling::linear_system(&g, &d);
            system.sort();
            render::divisors(&system, format_or(opts, Text, &[Text, Tsv, Json])?)
        }
        Command::Orientations => {
            let es = toppling::divisor::maximal_reduced_divisors(&g);
            let f = format_or(opts, Text, &[Text, Tsv, Json, Dot])?;
            render::orientations(&g, &es, f)
        }
        Command::Verify { oracle } => {
            let report = render::verify(&g, opts, *oracle)?;
            return Ok(report);
        }
        Command::ExportDot { flag, divisor } => {
            format_or(opts, Dot, &[Dot])?;
            let o = match (flag, divisor) {
                (Some(f), _) => input::parse_flag_literal(f, &g)?.orientation(&g),
                (None, Some(d)) => {
                    let e = input::parse_divisor(d, g.n())?;
                    toppling::divisor::orientation_of_maximal_reduced(&g, &e)
                        .ok_or_else(|| CliError::Syntax(format!("`{}` is not a maximal q-reduced divisor", e)))?
                }
                (None, None) => return Err(CliError::Syntax("export-dot needs --flag or --divisor".into())),
            };
            o.to_dot()
        }
    };
    Ok(Output::ok(text))
}

/// Writes the whole artifact in one go, to `--output` or stdout.
pub fn write_output(cli: &Cli, out: &Output) -> Result<()> {
    match &cli.opts.output {
        Some(path) => std::fs::write(path, &out.text)
            .map_err(|source| CliError::Write { path: path.display().to_string(), source }),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(out.text.as_bytes())
                .map_err(|source| CliError::Write { path: "<stdout>".into(), source })
        }
    }
}
