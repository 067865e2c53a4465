use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use speclap::kway::{InitCandidate, InitStrategy, Mode, PodrScaling, Rescale};

#[derive(Debug, Parser)]
#[command(
    name = "speclap",
    version,
    about = "Spectral drawing, clustering and balance checks for weighted graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lay out a graph with Laplacian eigenvectors.
    Draw(DrawArgs),
    /// Partition a graph into K blocks.
    Cluster(ClusterArgs),
    /// Check whether a signed graph is balanced.
    Balance(BalanceArgs),
}

#[derive(Debug, Args)]
pub struct DrawArgs {
    /// Edge-list file.
    pub file: PathBuf,
    /// Number of coordinates per node.
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Use the signed Laplacian.
    #[arg(long)]
    pub signed: bool,
    /// Draw a balanced signed graph with its two sides apart (needs --dim 2).
    #[arg(long, requires = "signed")]
    pub bipartite: bool,
    /// Write an SVG projection onto the first two coordinates.
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Write node coordinates as CSV.
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Ncut,
    Rcut,
    Sncut,
    Srcut,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Ncut => Mode::Ncut,
            ModeArg::Rcut => Mode::Rcut,
            ModeArg::Sncut => Mode::SignedNcut,
            ModeArg::Srcut => Mode::SignedRcut,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RescaleArg {
    None,
    Rowsum,
    RownormLs,
    Rownorm,
}

impl From<RescaleArg> for Rescale {
    fn from(r: RescaleArg) -> Rescale {
        match r {
            RescaleArg::None => Rescale::None,
            RescaleArg::Rowsum => Rescale::RowSum,
            RescaleArg::RownormLs => Rescale::RowNormLs,
            RescaleArg::Rownorm => Rescale::RowNormalize,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum InitArg {
    /// Try every starting point and keep the closest to an indicator.
    Best,
    Relaxed,
    RelaxedGreedy,
    Diagonalized,
    DiagonalizedGreedy,
}

impl From<InitArg> for InitStrategy {
    fn from(i: InitArg) -> InitStrategy {
        match i {
            InitArg::Best => InitStrategy::Best,
            InitArg::Relaxed => InitStrategy::Only(InitCandidate::Relaxed),
            InitArg::RelaxedGreedy => InitStrategy::Only(InitCandidate::RelaxedGreedy),
            InitArg::Diagonalized => InitStrategy::Only(InitCandidate::Diagonalized),
            InitArg::DiagonalizedGreedy => InitStrategy::Only(InitCandidate::DiagonalizedGreedy),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PodrArg {
    /// Rotation followed by a fitted diagonal scaling.
    Diagonal,
    Rotation,
}

impl From<PodrArg> for PodrScaling {
    fn from(p: PodrArg) -> PodrScaling {
        match p {
            PodrArg::Diagonal => PodrScaling::Diagonal,
            PodrArg::Rotation => PodrScaling::RotationOnly,
        }
    }
}

#[derive(Debug, Args)]
pub struct ClusterArgs {
    /// Edge-list file.
    pub file: PathBuf,
    /// Number of blocks.
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value = "ncut")]
    pub mode: ModeArg,
    /// Deformation of the relaxed solution before the first rounding.
    #[arg(long, value_enum, default_value = "rownorm")]
    pub rescale: RescaleArg,
    #[arg(long, value_enum, default_value = "best")]
    pub init: InitArg,
    /// Do not try negating negative-mean columns of the start.
    #[arg(long)]
    pub no_flip: bool,
    #[arg(long, value_enum, default_value = "diagonal")]
    pub podr: PodrArg,
    /// First row used by the greedy starting rotation (1-based).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub first_row: u64,
    #[arg(long, default_value_t = 100)]
    pub max_iters: usize,
    /// Also write the report to this file.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BalanceArgs {
    /// Edge-list file.
    pub file: PathBuf,
}
