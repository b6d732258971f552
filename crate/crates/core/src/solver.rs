//! Frame-Galerkin solution of `O f = g`.
//!
//! The operator is discretized as `M = Mat^{(Φ,Ψ)}(O)`. Since `O` is recovered
//! from `M` by synthesizing over the dual frames, its inverse is the synthesis
//! of `M† = pinv(Π_Φ M Π_Ψ)` over the original frames:
//! `f = D_Ψ · M† · C_Φ · g`.

use alloc::vec::Vec;

use crate::error::{check_dim, Error, Result};
use crate::frames::Frame;
use crate::linalg::{norm, rank_of, rel_diff_vec, solve as lu_solve, Matrix, Tolerance, C64};
use crate::oprep::{inverse_candidates, matrix_rep};

/// Solves below this frame-bound ratio are refused.
pub const MIN_BOUND_RATIO: f64 = 1e-8;
/// Residuals above this are flagged as ill-conditioned.
pub const MAX_RESIDUAL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum SolveMethod {
    PseudoInverseCoefficients,
    DenseReference,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SolveReport {
    pub solution: Vec<C64>,
    /// `‖O f − g‖ / max(1, ‖g‖)` against the original operator.
    pub residual: f64,
    pub method: SolveMethod,
    /// `false` when the residual exceeds [`MAX_RESIDUAL`].
    pub well_conditioned: bool,
    /// Solution of the dense LU reference solve, when one was run.
    pub reference: Option<Vec<C64>>,
    /// Relative distance to the reference solution.
    pub reference_gap: Option<f64>,
}

fn residual(op: &Matrix, f: &[C64], g: &[C64]) -> f64 {
    let of = op.mul_vec(f);
    let diff: Vec<C64> = of.iter().zip(g).map(|(a, b)| a - b).collect();
    norm(&diff) / norm(g).max(1.0)
}

fn check_system(op: &Matrix, g: &[C64], tol: Tolerance) -> Result<()> {
    check_dim("right-hand side length", op.rows(), g.len())?;
    if !g.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    if !op.is_square() || rank_of(op, tol) < op.rows() {
        return Err(Error::NotBijective("operator fails the full-rank test"));
    }
    Ok(())
}

/// Dense LU solve of `O f = g`.
pub fn solve_dense(op: &Matrix, g: &[C64], tol: Tolerance) -> Result<SolveReport> {
    check_system(op, g, tol)?;
    let solution = lu_solve(op, g).ok_or(Error::NotBijective("LU factorization broke down"))?;
    let residual = residual(op, &solution, g);
    Ok(SolveReport {
        solution,
        residual,
        method: SolveMethod::DenseReference,
        well_conditioned: residual <= MAX_RESIDUAL,
        reference: None,
        reference_gap: None,
    })
}

/// Frame-Galerkin solve, cross-checked against [`solve_dense`].
pub fn solve(op: &Matrix, g: &[C64], row: &Frame, col: &Frame, tol: Tolerance) -> Result<SolveReport> {
    check_system(op, g, tol)?;
    let ratio = row.bounds().ratio();
    if ratio < MIN_BOUND_RATIO {
        return Err(Error::IllConditioned { ratio });
    }
    let m = matrix_rep(op, row, col)?;
    // O = Op over the dual frames, so the inverse formulas run over their duals
    let inverse = inverse_candidates(&m, &row.canonical_dual(), &col.canonical_dual(), tol)?.dual_frames;
    let solution = inverse.mul_vec(g);
    let residual = residual(op, &solution, g);

    let reference = solve_dense(op, g, tol)?.solution;
    let reference_gap = rel_diff_vec(&solution, &reference);
    Ok(SolveReport {
        solution,
        residual,
        method: SolveMethod::PseudoInverseCoefficients,
        well_conditioned: residual <= MAX_RESIDUAL,
        reference: Some(reference),
        reference_gap: Some(reference_gap),
    })
}
