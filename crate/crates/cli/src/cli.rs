use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_CODES: &str = "\
Exit status:
  0  success
  1  other failure (I/O, failed verification, numerical mismatch)
  2  malformed input file or invalid arguments
  3  dimension mismatch
  4  vectors do not form a frame
  5  operator or coefficient map is not bijective";

#[derive(Debug, Parser)]
#[command(name = "framerep", version, about = "Represent and invert operators through finite frames")]
#[command(after_help = EXIT_CODES)]
pub struct Cli {
    #[command(flatten)]
    pub tolerance: ToleranceArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ToleranceArgs {
    /// Relative singular-value cutoff for rank decisions.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub rank_rel: f64,
    /// Relative Frobenius tolerance for equality decisions.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub eq_rel: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Kind {
    Onb,
    Random,
    Harmonic,
    Gabor,
    Mercedes,
    UnionOnb,
    PerturbedRiesz,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Ambient dimension (not used by mercedes).
    #[arg(long)]
    pub dim: Option<usize>,
    /// Number of vectors (random, harmonic).
    #[arg(long)]
    pub len: Option<usize>,
    /// Gabor translation step.
    #[arg(long, default_value_t = 1)]
    pub time_step: usize,
    /// Gabor modulation step.
    #[arg(long, default_value_t = 1)]
    pub freq_step: usize,
    /// Number of stacked bases (union_onb).
    #[arg(long, default_value_t = 2)]
    pub bases: usize,
    /// Perturbation size (perturbed_riesz).
    #[arg(long, default_value_t = 0.1)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FramePair {
    /// Frame of the codomain.
    #[arg(long)]
    pub row: PathBuf,
    /// Frame of the domain.
    #[arg(long)]
    pub col: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a frame file.
    Gen(GenArgs),
    /// Print the optimal frame bounds.
    Bounds { frame: PathBuf },
    /// Write the canonical dual frame.
    Dual {
        frame: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the cross-Gram matrix with entries ⟨right_m, left_j⟩.
    Gram {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the coefficient matrix C_row · O · D_col of an operator.
    Represent {
        #[arg(long)]
        op: PathBuf,
        #[command(flatten)]
        frames: FramePair,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the operator D_row · M · C_col of a coefficient matrix.
    Synth {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        frames: FramePair,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report whether a coefficient matrix represents an operator.
    CheckRepresentable {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        frames: FramePair,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the inverse of the operator synthesized from a coefficient matrix.
    Invert {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        frames: FramePair,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve O f = g through the coefficient domain.
    Solve {
        #[arg(long)]
        op: PathBuf,
        /// Right-hand side as an array of [re, im] pairs.
        #[arg(long)]
        rhs: PathBuf,
        #[command(flatten)]
        frames: FramePair,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Minimum random instances per check.
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the JSON report instead of the table.
        #[arg(long)]
        json: bool,
    },
}
