use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "bellforge", version, about = "Bell states from coherent-state integrals over projective spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form and integrated Bell states
    #[command(subcommand)]
    Bell(BellCommand),
    /// Run numerical identity checks and print a report
    Verify(VerifyArgs),
    /// Export a Fourier, clock or shift matrix as JSON
    Matrix(MatrixArgs),
}

#[derive(Debug, Subcommand)]
pub enum BellCommand {
    /// Write the closed-form state of a flat map
    Make(MakeArgs),
    /// Evaluate the coherent-state integral and compare it with the closed form
    Integrate(IntegrateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    Cp1,
    Cp2,
    Cpn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Quadrature,
    Mc,
}

/// Selects the parameter space and the flat map.
#[derive(Debug, Clone, Args, Serialize)]
pub struct SpaceArgs {
    /// Parameter space [default: inferred from --flat, else cp1]
    #[arg(long, value_enum)]
    pub space: Option<SpaceKind>,

    /// Twice the spin, for cp1
    #[arg(long = "two-j", default_value_t = 1)]
    pub two_j: u32,

    /// Qudit dimension for cpn; the parameter space is CP^(n-1) [default: 4]
    #[arg(long)]
    pub n: Option<usize>,

    /// Flat map id: cp1:1..cp1:4, cp2:a1..cp2:c3 or cpn:<n>:<p>:<q> (on CP^n)
    #[arg(long)]
    pub flat: Option<String>,

    /// Clock power for cp2/cpn [default: 0]
    #[arg(long)]
    pub p: Option<usize>,

    /// Shift power for cp2/cpn [default: 0]
    #[arg(long)]
    pub q: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct IntegratorArgs {
    #[arg(long, value_enum, default_value_t = Method::Quadrature)]
    pub method: Method,

    /// Gauss-Legendre nodes in |z|²/(1+|z|²), cp1 only [default: 2j+2]
    #[arg(long)]
    pub radial_nodes: Option<usize>,

    /// Nodes per angle [default: 4j+3 on cp1, 7 otherwise]
    #[arg(long)]
    pub angular_nodes: Option<usize>,

    /// Gauss-Legendre nodes per simplex axis, cp2/cpn only [default: 4]
    #[arg(long)]
    pub simplex_nodes: Option<usize>,

    #[arg(long, default_value_t = 1_000_000)]
    pub mc_samples: usize,

    /// Seed for Monte Carlo and for sampled test points
    #[arg(long, env = "BELLFORGE_SEED", default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct MakeArgs {
    #[command(flatten)]
    pub space: SpaceArgs,

    /// State file to write
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct IntegrateArgs {
    #[command(flatten)]
    pub space: SpaceArgs,

    #[command(flatten)]
    pub integrator: IntegratorArgs,

    /// Pass threshold [default: 1e-10 for quadrature, 5e-3 for mc]
    #[arg(long)]
    pub tolerance: Option<f64>,

    /// State file to write
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    /// ∫ dμ |Z⟩⟨Z| = I and total measure = dim V
    Unity,
    /// total measure = dim V
    Measure,
    /// ⟨Z♭|W♭⟩ = ⟨W|Z⟩ on sampled pairs
    Antimap,
    /// ∫ dμ |z|^{2k}/(1+|z|²)^{2j} = 1/C(2j,k)
    Moment,
    /// the Fourier matrix diagonalizes the cyclic shift
    Shift,
    /// numerical rank of a Bell family
    Rank,
    /// Schmidt values, entropy and norm of the Bell states
    Entanglement,
    /// state-level and projector-level flat maps agree
    Projector,
    /// the built-in battery of every check
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// the four spin-1 states, expected rank 3
    Spin1,
    /// the four two-qubit states, expected rank 4
    Qubit,
    /// the nine qutrit states, expected rank 9
    Qutrit,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub check: Check,

    #[command(flatten)]
    pub space: SpaceArgs,

    #[command(flatten)]
    pub integrator: IntegratorArgs,

    /// Number of sampled pairs for antimap
    #[arg(long, default_value_t = 1000)]
    pub pairs: usize,

    /// Number of sampled points for projector
    #[arg(long, default_value_t = 1000)]
    pub points: usize,

    #[arg(long, value_enum, default_value_t = Family::Spin1)]
    pub family: Family,

    /// Override the pass threshold of every check (for rank: the singular-value cutoff)
    #[arg(long)]
    pub tolerance: Option<f64>,

    /// Also write the checks as CSV
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    /// generalized Walsh-Hadamard (discrete Fourier) matrix
    Walsh,
    Clock,
    Shift,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct MatrixArgs {
    #[arg(value_enum)]
    pub kind: MatrixKind,

    #[arg(long)]
    pub n: usize,

    #[arg(long)]
    pub out: Option<PathBuf>,
}
