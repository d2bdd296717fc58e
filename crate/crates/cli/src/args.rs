use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "colorkit",
    version,
    about = "Coloring channels: simulate, count, bound and decode"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Leave wall time out of JSON output so identical runs are byte-identical.
    #[arg(long, global = true)]
    pub deterministic: bool,

    /// Size of the worker pool used by enumeration, the exponent grid and
    /// the double sum.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pass a sequence through each coloring of a profile.
    Apply(ApplyArgs),
    /// Exact number of distinct channel outputs.
    Count(CountArgs),
    /// Information rate log_q(count)/n, or a CSV series of it.
    Rate(RateArgs),
    /// Closed-form capacity.
    Capacity(CapacityArgs),
    /// Pair-coverage checks, bounds, search and T_min.
    #[command(subcommand)]
    Cover(CoverCommand),
    /// Recover the input from its colored streams.
    Reconstruct(ReconstructArgs),
    /// Time enumeration, cover search and decoding.
    #[command(hide = true)]
    Bench(BenchArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct ApplyArgs {
    #[arg(long)]
    pub q: u32,
    /// Input sequence, e.g. `1,2,0`.
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    /// Colorings separated by `;`, e.g. `0,1;1,2`.
    #[arg(long)]
    pub profile: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Lemma1,
    Prop2,
    Thm4,
    Auto,
}

#[derive(Debug, Args, Serialize)]
pub struct CountSpec {
    #[arg(long)]
    pub q: u32,
    /// Coloring size; implied by `--profile` when given.
    #[arg(long)]
    pub c: Option<usize>,
    /// Number of colorings; implied by `--profile` when given.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    /// Explicit profile. Closed forms only depend on its shape; brute force
    /// and `auto` need it unless a canonical profile follows from the method.
    #[arg(long)]
    pub profile: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct CountArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub spec: CountSpec,
    /// Cross-check the count against brute-force enumeration.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct RateArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub spec: CountSpec,
    /// Emit `n,R_n` for every n from 1 to `--n` instead of a single rate.
    #[arg(long)]
    pub series: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CapacityMode {
    Single,
    TwoQminus1,
    Disjoint,
}

#[derive(Debug, Args, Serialize)]
pub struct CapacityArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long, value_enum)]
    pub mode: CapacityMode,
    #[arg(long)]
    pub c: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// For `two-qminus1`: also maximize the exponent on a grid of this step.
    #[arg(long)]
    pub grid: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum CoverCommand {
    /// Whether a profile covers every pair, and which pairs it misses.
    Check(CoverCheckArgs),
    /// Smallest cover by branch and bound.
    Search(CoverSearchArgs),
    /// Schönheim lower bound and its tightness condition.
    Bound(CoverBoundArgs),
    /// Size at which every profile is a cover.
    #[command(name = "Tmin", visible_aliases = ["tmin", "tmin-formula"])]
    Tmin(TminArgs),
    /// Certify T_min by exhaustive scan.
    #[command(name = "Tmin-verify", visible_alias = "tmin-verify")]
    TminVerify(QcArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct CoverCheckArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub profile: String,
}

#[derive(Debug, Args, Serialize)]
pub struct CoverSearchArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub c: usize,
    /// Node budget for the search.
    #[arg(long, default_value_t = colorkit::covering::DEFAULT_NODE_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct CoverBoundArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub c: u64,
    #[arg(long, default_value_t = 2)]
    pub tau: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct QcArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub c: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct TminArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub qc: QcArgs,
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args, Serialize)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["streams", "input", "roundtrip"])))]
pub struct ReconstructArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub profile: String,
    /// Streams separated by `;`, in profile order.
    #[arg(long)]
    pub streams: Option<String>,
    /// File with one stream per line.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Apply the profile to this sequence, decode, and compare.
    #[arg(long, allow_hyphen_values = true)]
    pub roundtrip: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 1)]
    pub repeat: u32,
}
