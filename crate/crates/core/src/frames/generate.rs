//! Deterministic frame generators for fixtures.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use super::Frame;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tolerance, C64};
use crate::random::{complex_normal, complex_normal_matrix, random_unitary, rng};

/// Random draws are redrawn while `A / B` falls below this ratio.
const MIN_BOUND_RATIO: f64 = 1e-6;
const MAX_DRAWS: usize = 64;

/// Which family to generate, with its parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum FrameSpec {
    /// Standard basis of `C^dim`.
    Onb { dim: usize },
    /// `len` vectors with i.i.d. complex normal entries.
    Random { dim: usize, len: usize },
    /// Rows of the `len`-point DFT truncated to `dim` coordinates, scaled to
    /// unit norm; tight with bound `len / dim`.
    Harmonic { dim: usize, len: usize },
    /// Time-frequency shifts `M_{m·freq_step} T_{n·time_step} g` of a random
    /// window on `Z_dim`.
    Gabor {
        dim: usize,
        time_step: usize,
        freq_step: usize,
    },
    /// Three unit vectors at 120° in `C^2`; tight with bound 3/2.
    Mercedes,
    /// The standard basis followed by `bases − 1` random orthonormal bases.
    UnionOnb { dim: usize, bases: usize },
    /// `I + epsilon · G` for a complex normal `G`: a non-orthogonal Riesz basis.
    PerturbedRiesz { dim: usize, epsilon: f64 },
}

impl FrameSpec {
    pub fn kind_name(&self) -> &'static str {
        match self {
            FrameSpec::Onb { .. } => "onb",
            FrameSpec::Random { .. } => "random",
            FrameSpec::Harmonic { .. } => "harmonic",
            FrameSpec::Gabor { .. } => "gabor",
            FrameSpec::Mercedes => "mercedes",
            FrameSpec::UnionOnb { .. } => "union_onb",
            FrameSpec::PerturbedRiesz { .. } => "perturbed_riesz",
        }
    }

    pub fn generate(&self, seed: u64) -> Result<Frame> {
        let tol = Tolerance::default();
        match *self {
            FrameSpec::Onb { dim } => {
                positive_dim(dim)?;
                Frame::from_synthesis(Matrix::identity(dim), tol)
            }
            FrameSpec::Random { dim, len } => {
                positive_dim(dim)?;
                at_least_dim(dim, len)?;
                let mut r = rng(seed);
                redraw(|| complex_normal_matrix(&mut r, dim, len))
            }
            FrameSpec::Harmonic { dim, len } => {
                positive_dim(dim)?;
                at_least_dim(dim, len)?;
                let scale = 1.0 / libm::sqrt(dim as f64);
                let v = Matrix::from_fn(dim, len, |j, k| {
                    let angle = 2.0 * PI * ((j * k) % len) as f64 / len as f64;
                    C64::from_polar(scale, angle)
                });
                Frame::from_synthesis(v, tol)
            }
            FrameSpec::Gabor {
                dim,
                time_step,
                freq_step,
            } => {
                positive_dim(dim)?;
                if time_step == 0 || freq_step == 0 || dim % time_step != 0 || dim % freq_step != 0 {
                    return Err(Error::BadGeneratorParams(format!(
                        "lattice steps ({time_step}, {freq_step}) must divide {dim}"
                    )));
                }
                let shifts = dim / time_step;
                let mods = dim / freq_step;
                if shifts * mods < dim {
                    return Err(Error::BadGeneratorParams(format!(
                        "{shifts} x {mods} time-frequency shifts cannot span C^{dim}"
                    )));
                }
                let mut r = rng(seed);
                redraw(|| {
                    let window: Vec<C64> = (0..dim).map(|_| complex_normal(&mut r)).collect();
                    gabor_system(&window, time_step, freq_step)
                })
            }
            FrameSpec::Mercedes => {
                let h = libm::sqrt(3.0) / 2.0;
                let v = Matrix::from_real_rows(&[[0.0, -h, h], [1.0, -0.5, -0.5]]);
                Frame::from_synthesis(v, tol)
            }
            FrameSpec::UnionOnb { dim, bases } => {
                positive_dim(dim)?;
                if bases == 0 {
                    return Err(Error::BadGeneratorParams("need at least one basis".into()));
                }
                let mut r = rng(seed);
                let mut v = Matrix::identity(dim);
                for _ in 1..bases {
                    v = v.hstack(&random_unitary(&mut r, dim));
                }
                Frame::from_synthesis(v, tol)
            }
            FrameSpec::PerturbedRiesz { dim, epsilon } => {
                positive_dim(dim)?;
                if !(epsilon >= 0.0 && epsilon.is_finite()) {
                    return Err(Error::BadGeneratorParams(format!(
                        "perturbation size {epsilon} must be finite and nonnegative"
                    )));
                }
                let mut r = rng(seed);
                redraw(|| {
                    let g = complex_normal_matrix(&mut r, dim, dim);
                    &Matrix::identity(dim) + &g.scale_real(epsilon)
                })
            }
        }
    }
}

/// Columns ordered by modulation index first, then translation.
fn gabor_system(window: &[C64], time_step: usize, freq_step: usize) -> Matrix {
    let dim = window.len();
    let shifts = dim / time_step;
    let mods = dim / freq_step;
    Matrix::from_fn(dim, shifts * mods, |j, col| {
        let n = col % shifts;
        let m = col / shifts;
        let src = (j + dim - (n * time_step) % dim) % dim;
        let angle = 2.0 * PI * ((m * freq_step * j) % dim) as f64 / dim as f64;
        window[src] * C64::from_polar(1.0, angle)
    })
}

fn redraw(mut draw: impl FnMut() -> Matrix) -> Result<Frame> {
    for _ in 0..MAX_DRAWS {
        if let Ok(frame) = Frame::from_synthesis(draw(), Tolerance::default()) {
            if frame.bounds().ratio() >= MIN_BOUND_RATIO {
                return Ok(frame);
            }
        }
    }
    Err(Error::BadGeneratorParams(
        "no well-conditioned draw found".into(),
    ))
}

fn positive_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        Err(Error::BadGeneratorParams("dimension must be positive".into()))
    } else {
        Ok(())
    }
}

fn at_least_dim(dim: usize, len: usize) -> Result<()> {
    if len < dim {
        Err(Error::BadGeneratorParams(format!(
            "{len} vectors cannot span C^{dim}"
        )))
    } else {
        Ok(())
    }
}
