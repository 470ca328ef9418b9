use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "conekit", version, about = "Resolvent and Riesz kernels on metric cones")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate the cross-section spectrum.
    Spectrum(SpectrumArgs),
    /// Lp boundedness intervals over a (d, c), (d, mu0) or (d, mu1) grid.
    Thresholds(ThresholdArgs),
    /// Resolvent kernel sweep.
    Kernel(KernelArgs),
    /// Riesz kernel sweep, or an off-diagonal bound check with --region.
    Riesz(RieszArgs),
    /// Run a verification suite; exits 2 if any check fails.
    Verify(VerifyArgs),
    /// Lp norm probe of a Riesz piece or a model kernel.
    Probe(ProbeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CrossKind {
    Sphere,
    Torus,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Seed for randomized grids.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct SpectrumSource {
    /// Cone dimension.
    #[arg(long, default_value_t = 3)]
    pub d: usize,
    /// Constant potential V0 = c.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub c: f64,
    #[arg(long, value_enum, default_value = "sphere")]
    pub cross_section: CrossKind,
    /// Sphere radius, or comma-separated torus radii.
    #[arg(long, value_delimiter = ',')]
    pub radii: Vec<f64>,
    /// Largest mu kept in the mode table.
    #[arg(long)]
    pub mu_cutoff: Option<f64>,
    /// Spectrum JSON file; overrides --d, --c and --cross-section.
    #[arg(long)]
    pub spectrum_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub source: SpectrumSource,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    /// Cone dimensions.
    #[arg(long, value_delimiter = ',', default_value = "3")]
    pub d: Vec<usize>,
    /// Constant potentials (c = 0 uses the zero-potential form).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub c: Vec<f64>,
    /// Bottom exponents for the general-potential form.
    #[arg(long, value_delimiter = ',')]
    pub mu0: Vec<f64>,
    /// Second exponents for the zero-potential form.
    #[arg(long, value_delimiter = ',')]
    pub mu1: Vec<f64>,
    /// Interval of a spectrum file (from its mu0).
    #[arg(long)]
    pub spectrum_file: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GaugeArg {
    Riemannian,
    BHalf,
}

#[derive(Debug, Args)]
pub struct PointGrid {
    /// Radii of z.
    #[arg(long, value_delimiter = ',', required = true)]
    pub r: Vec<f64>,
    /// Radii of z'.
    #[arg(long, value_delimiter = ',', required = true)]
    pub rp: Vec<f64>,
    /// Cross-section separations of z from z'.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub gamma: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    #[command(flatten)]
    pub source: SpectrumSource,
    #[command(flatten)]
    pub points: PointGrid,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub lambda: Vec<f64>,
    #[arg(long, default_value_t = 1e-10)]
    pub rel_tol: f64,
    #[arg(long, value_enum, default_value = "riemannian")]
    pub gauge: GaugeArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionArg {
    T2,
    T3,
}

#[derive(Debug, Args)]
pub struct RieszArgs {
    #[command(flatten)]
    pub source: SpectrumSource,
    #[arg(long, value_delimiter = ',')]
    pub r: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    pub rp: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub gamma: Vec<f64>,
    #[arg(long, default_value_t = 1e-8)]
    pub rel_tol: f64,
    /// Run the off-diagonal model-bound check on this region instead of a sweep.
    #[arg(long, value_enum)]
    pub region: Option<RegionArg>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Euclid,
    Bessel,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProbeKernel {
    T2,
    T3,
    Lower,
    Upper,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    #[command(flatten)]
    pub source: SpectrumSource,
    #[arg(long, value_enum, default_value = "t2")]
    pub kernel: ProbeKernel,
    /// Homogeneity exponent of the model kernel (lower/upper only).
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub p: Vec<f64>,
    /// Domain exponents k for [2^-k, 2^k].
    #[arg(long, value_delimiter = ',', default_value = "16,24,32")]
    pub k: Vec<u32>,
    #[arg(long, default_value_t = 10)]
    pub per_decade: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}
