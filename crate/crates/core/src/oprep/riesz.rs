//! Bijectivity of `M` versus bijectivity of `Op(M)`.
//!
//! For two Riesz bases the two notions coincide. If either frame is redundant
//! the matrix `C_Φ̃ D_Ψ̃` synthesizes the identity while having rank `d`, so
//! bijectivity of the operator no longer forces bijectivity of the matrix.

use rand::Rng;

use super::{operator_synth, riesz_check};
use crate::error::{check_dim, Result};
use crate::frames::{gram, Frame};
use crate::linalg::{rank_of, rel_diff, Matrix, Tolerance};
use crate::random::{complex_normal_matrix, rng};

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RieszWitness {
    /// `‖Op(W) − I‖_F / max(1, ‖I‖_F)` for `W = C_Φ̃ D_Ψ̃`.
    pub op_residual: f64,
    pub rank: usize,
    pub rows: usize,
    pub cols: usize,
    /// Square with full rank.
    pub matrix_bijective: bool,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RieszEquivalenceReport {
    pub both_riesz: bool,
    pub trials: usize,
    /// Trials where `M` was deliberately made singular.
    pub singular_trials: usize,
    /// Trials where `bijective(M) == bijective(Op(M))`.
    pub agreements: usize,
    /// Present when at least one frame is redundant.
    pub witness: Option<RieszWitness>,
    /// Riesz pair: every trial agreed. Redundant pair: the witness
    /// synthesizes the identity without being bijective.
    pub confirmed: bool,
}

pub fn riesz_equivalence_check(
    row: &Frame,
    col: &Frame,
    tol: Tolerance,
    trials: usize,
    seed: u64,
) -> Result<RieszEquivalenceReport> {
    check_dim("frames must share the ambient space", row.dim(), col.dim())?;
    let both_riesz = riesz_check(row, tol) && riesz_check(col, tol);
    let d = row.dim();

    if both_riesz {
        let n = row.len();
        let mut r = rng(seed);
        let mut agreements = 0;
        let mut singular_trials = 0;
        for t in 0..trials {
            let mut m = complex_normal_matrix(&mut r, n, n);
            if t % 2 == 1 {
                singular_trials += 1;
                make_singular(&mut m, &mut r);
            }
            let matrix_bijective = rank_of(&m, tol) == n;
            let op = operator_synth(&m, row, col)?;
            let op_bijective = rank_of(&op, tol) == d;
            if matrix_bijective == op_bijective {
                agreements += 1;
            }
        }
        return Ok(RieszEquivalenceReport {
            both_riesz,
            trials,
            singular_trials,
            agreements,
            witness: None,
            confirmed: agreements == trials,
        });
    }

    let w = gram(&row.canonical_dual(), &col.canonical_dual())?;
    let op = operator_synth(&w, row, col)?;
    let op_residual = rel_diff(&op, &Matrix::identity(d));
    let rank = rank_of(&w, tol);
    let matrix_bijective = w.is_square() && rank == w.rows();
    Ok(RieszEquivalenceReport {
        both_riesz,
        trials: 0,
        singular_trials: 0,
        agreements: 0,
        confirmed: op_residual <= tol.eq_rel && !matrix_bijective,
        witness: Some(RieszWitness {
            op_residual,
            rank,
            rows: w.rows(),
            cols: w.cols(),
            matrix_bijective,
        }),
    })
}

/// Replaces the last column by a random combination of the others (or zero).
fn make_singular<R: Rng>(m: &mut Matrix, r: &mut R) {
    let n = m.cols();
    let last = n - 1;
    let weights = crate::random::complex_normal_vec(r, last);
    let combo: alloc::vec::Vec<_> = (0..m.rows())
        .map(|i| (0..last).map(|j| m[(i, j)] * weights[j]).sum())
        .collect();
    m.set_column(last, &combo);
}
