//! Command-line front end for `framerep-core`: JSON file formats and a thin
//! dispatcher mapping each subcommand onto one library call.

pub mod cli;
pub mod error;
pub mod io;

use std::path::Path;

use framerep_core::oprep::{invert_from_matrix, is_representable, matrix_rep, operator_synth};
use framerep_core::verify::{run_suite, SuiteConfig};
use framerep_core::{frames, solver, Frame, FrameSpec, Tolerance};

use cli::{Cli, Command, FramePair, GenArgs, Kind};
pub use error::CliError;
use io::{emit, read_frame, read_matrix, read_vector, FrameFile};

fn frame_pair(frames: &FramePair, tol: Tolerance) -> Result<(Frame, Frame), CliError> {
    Ok((read_frame(&frames.row, tol)?, read_frame(&frames.col, tol)?))
}

pub fn frame_spec(args: &GenArgs) -> Result<FrameSpec, CliError> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for this kind")))
    };
    let dim = || need(args.dim, "dim");
    let len = || need(args.len, "len");
    Ok(match args.kind {
        Kind::Onb => FrameSpec::Onb { dim: dim()? },
        Kind::Random => FrameSpec::Random { dim: dim()?, len: len()? },
        Kind::Harmonic => FrameSpec::Harmonic { dim: dim()?, len: len()? },
        Kind::Gabor => FrameSpec::Gabor {
            dim: dim()?,
            time_step: args.time_step,
            freq_step: args.freq_step,
        },
        Kind::Mercedes => FrameSpec::Mercedes,
        Kind::UnionOnb => FrameSpec::UnionOnb {
            dim: dim()?,
            bases: args.bases,
        },
        Kind::PerturbedRiesz => FrameSpec::PerturbedRiesz {
            dim: dim()?,
            epsilon: args.epsilon,
        },
    })
}

/// Rounds to ten decimals so tight bounds print as `1.5` rather than
/// `1.4999999999999998`.
pub fn format_bound(x: f64) -> String {
    let rounded = (x * 1e10).round() / 1e10;
    format!("{}", rounded + 0.0)
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let tol = Tolerance::new(cli.tolerance.rank_rel, cli.tolerance.eq_rel)?;
    match cli.command {
        Command::Gen(args) => {
            let frame = frame_spec(&args)?.generate(args.seed)?;
            emit(&FrameFile::from_frame(&frame), args.out.as_deref())
        }
        Command::Bounds { frame } => {
            let b = read_frame(&frame, tol)?.bounds();
            println!("A={} B={}", format_bound(b.lower), format_bound(b.upper));
            Ok(())
        }
        Command::Dual { frame, out } => {
            let dual = read_frame(&frame, tol)?.canonical_dual();
            emit(&FrameFile::from_frame(&dual), out.as_deref())
        }
        Command::Gram { left, right, out } => {
            let g = frames::gram(&read_frame(&left, tol)?, &read_frame(&right, tol)?)?;
            emit(&g, out.as_deref())
        }
        Command::Represent { op, frames, out } => {
            let (row, col) = frame_pair(&frames, tol)?;
            emit(&matrix_rep(&read_matrix(&op)?, &row, &col)?, out.as_deref())
        }
        Command::Synth { matrix, frames, out } => {
            let (row, col) = frame_pair(&frames, tol)?;
            emit(&operator_synth(&read_matrix(&matrix)?, &row, &col)?, out.as_deref())
        }
        Command::CheckRepresentable { matrix, frames, out } => {
            let (row, col) = frame_pair(&frames, tol)?;
            emit(&is_representable(&read_matrix(&matrix)?, &row, &col, tol)?, out.as_deref())
        }
        Command::Invert { matrix, frames, out } => {
            let (row, col) = frame_pair(&frames, tol)?;
            emit(&invert_from_matrix(&read_matrix(&matrix)?, &row, &col, tol)?, out.as_deref())
        }
        Command::Solve { op, rhs, frames, out } => {
            let (row, col) = frame_pair(&frames, tol)?;
            let report = solver::solve(&read_matrix(&op)?, &read_vector(&rhs)?, &row, &col, tol)?;
            emit(&report, out.as_deref())
        }
        Command::Verify { seed, trials, out, json } => {
            let config = SuiteConfig {
                seed,
                trials,
                tolerance: tol,
                ..SuiteConfig::default()
            };
            let report = run_suite(&config)?;
            if let Some(path) = out.as_deref() {
                io::write_atomic(path, &io::to_json(&report))?;
            }
            if json {
                emit(&report, None::<&Path>)?;
            } else {
                println!("{report}");
            }
            match report.failed().count() {
                0 => Ok(()),
                n => Err(CliError::SuiteFailed(n)),
            }
        }
    }
}
