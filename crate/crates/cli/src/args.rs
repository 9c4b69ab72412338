use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "srep",
    version,
    about = "Tangential degeneracy of orbits of s-representations, in exact arithmetic"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Md)]
    pub format: OutputFormat,

    /// Pair database to use instead of the built-in one.
    #[arg(long, global = true, value_name = "PATH")]
    pub pairs: Option<PathBuf>,

    /// Compare against the expected table and exit with status 2 on any
    /// difference.
    #[arg(long, global = true)]
    pub check: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Md,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degenerate orbits through long roots, per pair family.
    Table1(Table1Args),
    /// Classify one orbit.
    Classify(ClassifyArgs),
    /// Ferus numbers, equality scans and identity checks.
    Ferus(FerusArgs),
    /// Strongly orthogonal roots and the projected root system of an
    /// exceptional algebra.
    Appendix(AppendixArgs),
    /// Inspect the pair database.
    Pairs {
        #[command(subcommand)]
        action: PairsAction,
    },
}

#[derive(Debug, Args)]
pub struct Table1Args {
    /// Range of p, as `2..6` or a single value; implies numeric rows.
    #[arg(long, value_parser = parse_range)]
    pub p: Option<RangeInclusive<i64>>,

    /// Range of n, as `1..4` or a single value; implies numeric rows.
    #[arg(long, value_parser = parse_range)]
    pub n: Option<RangeInclusive<i64>>,

    /// Numeric rows over the default grid (p in 2..6, n in 1..4).
    #[arg(long)]
    pub numeric: bool,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Pair key such as `e7|su(2)+so(12)`, `so(2p+n)|so(p)+so(p+n)` or an
    /// instance such as `so(7)|so(2)+so(5)`.
    #[arg(long)]
    pub pair: String,

    #[arg(long)]
    pub p: Option<i64>,

    #[arg(long)]
    pub n: Option<i64>,

    /// `highest`, `long`, `short`, `middle`, or a vector like `1,-1/2,0`.
    #[arg(long, allow_hyphen_values = true)]
    pub root: String,

    /// Normal direction for the principal curvature spectrum.
    #[arg(long, allow_hyphen_values = true)]
    pub xi: Option<String>,
}

#[derive(Debug, Args)]
pub struct FerusArgs {
    /// Certificate for F(l).
    #[arg(long)]
    pub l: Option<u64>,

    /// Scan the pair database for orbits with F(l) = r.
    #[arg(long)]
    pub scan: bool,

    /// Only list scan rows attaining equality.
    #[arg(long, requires = "scan")]
    pub only_equal: bool,

    #[arg(long, default_value_t = 16, requires = "scan")]
    pub p_max: i64,

    #[arg(long, default_value_t = 16, requires = "scan")]
    pub n_max: i64,

    /// Check monotonicity, F(2^q) = 2^q and the range identity.
    #[arg(long)]
    pub verify_identities: bool,

    #[arg(long, default_value_t = 9, requires = "verify_identities")]
    pub qmax: u32,
}

#[derive(Debug, Args)]
pub struct AppendixArgs {
    #[arg(long, value_enum)]
    pub algebra: Algebra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    F4,
    E6,
    E7,
    E8,
    G2,
}

#[derive(Debug, Subcommand)]
pub enum PairsAction {
    /// List every pair with its restricted type and multiplicities.
    List,
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let bad = || format!("expected `a..b` or an integer, got `{s}`");
    let r = match s.split_once("..") {
        Some((a, b)) => {
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b
                .trim()
                .trim_start_matches('=')
                .parse()
                .map_err(|_| bad())?;
            a..=b
        }
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            v..=v
        }
    };
    if r.is_empty() {
        return Err(format!("empty range `{s}`"));
    }
    Ok(r)
}
