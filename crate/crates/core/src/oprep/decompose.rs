//! When does synthesizing a product of coefficient matrices factor through an
//! intermediate frame?
//!
//! With `T = C_{Ξ¹} D_{Ξ²}` the two sides are
//!
//! ```text
//! Op^{(Φ,Ψ)}(M1 · M2)             = D_Φ M1 M2 C_Ψ
//! Op^{(Φ,Ξ¹)}(M1) ∘ Op^{(Ξ²,Ψ)}(M2) = D_Φ M1 T M2 C_Ψ
//! ```
//!
//! and they agree whenever `T` is the identity (a Riesz basis with its dual),
//! `T` fixes `range(M2 C_Ψ)`, or `D_Φ M1 T = D_Φ M1`. For the canonical dual
//! `T = Π_{range(C_Ξ)}` is an orthogonal projector and the last two reduce to
//! range inclusions in `range(C_Ξ)`.

use super::{operator_synth, riesz_check};
use crate::error::{check_dim, Error, Result};
use crate::frames::Frame;
use crate::linalg::{null_space, range_contains, Matrix, Tolerance, C64};
use crate::random::{complex_normal_vec, rng};

/// The intermediate frames of a factorization.
#[derive(Clone, Copy, Debug)]
pub enum MiddleFrames<'a> {
    /// A single frame `Ξ` and its canonical dual.
    Dual(&'a Frame),
    /// Separate frames: `Ξ¹` on the analysis side of the left factor and `Ξ²`
    /// on the synthesis side of the right factor.
    Pair {
        analysis: &'a Frame,
        synthesis: &'a Frame,
    },
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DecompositionReport {
    /// `Ξ` is a Riesz basis; in pair mode, `C_{Ξ¹} D_{Ξ²} = I`.
    pub xi_is_riesz: bool,
    /// `M2 (range C_Ψ) ⊆ range C_Ξ`; in pair mode, `T` fixes `range(M2 C_Ψ)`.
    pub cond_a: bool,
    /// `ker(D_Φ M1)^⊥ ⊆ range C_Ξ`; in pair mode, `D_Φ M1 T = D_Φ M1`.
    pub cond_b: bool,
    pub equality_holds: bool,
    /// `‖LHS − RHS‖_F`.
    pub gap: f64,
    /// `gap / max(‖LHS‖_F, ‖RHS‖_F)`, zero when both sides vanish.
    pub relative_gap: f64,
}

impl DecompositionReport {
    /// Each sufficient condition implies equality.
    pub fn implications_hold(&self) -> bool {
        !(self.xi_is_riesz || self.cond_a || self.cond_b) || self.equality_holds
    }
}

pub fn decompose_check(
    m1: &Matrix,
    m2: &Matrix,
    row: &Frame,
    middle: MiddleFrames<'_>,
    col: &Frame,
    tol: Tolerance,
) -> Result<DecompositionReport> {
    let (xi_a, xi_s_owned, dual_mode) = match middle {
        MiddleFrames::Dual(xi) => (xi, xi.canonical_dual(), true),
        MiddleFrames::Pair {
            analysis,
            synthesis,
        } => (analysis, synthesis.clone(), false),
    };
    let xi_s = &xi_s_owned;
    check_dim("middle frames dimension", xi_a.dim(), xi_s.dim())?;
    check_dim("middle frames length", xi_a.len(), xi_s.len())?;
    check_dim("left factor rows vs row frame", row.len(), m1.rows())?;
    check_dim("left factor columns vs middle frame", xi_a.len(), m1.cols())?;
    check_dim("right factor rows vs middle frame", xi_s.len(), m2.rows())?;
    check_dim("right factor columns vs column frame", col.len(), m2.cols())?;

    let lhs = operator_synth(&(m1 * m2), row, col)?;
    let rhs = &operator_synth(m1, row, xi_a)? * &operator_synth(m2, xi_s, col)?;
    let gap = (&lhs - &rhs).frobenius_norm();
    let scale = lhs.frobenius_norm().max(rhs.frobenius_norm());
    let relative_gap = if scale == 0.0 { 0.0 } else { gap / scale };
    let equality_holds = gap <= tol.eq_rel * lhs.frobenius_norm().max(1.0);

    let right_range = m2 * &col.analysis_matrix();
    let left_map = row.synthesis_matrix() * m1;

    let (xi_is_riesz, cond_a, cond_b) = if dual_mode {
        let c_xi = xi_a.analysis_matrix();
        (
            riesz_check(xi_a, tol),
            range_contains(&c_xi, &right_range, tol),
            range_contains(&c_xi, &left_map.adjoint(), tol),
        )
    } else {
        let t = &xi_a.analysis_matrix() * xi_s.synthesis_matrix();
        let id = Matrix::identity(t.rows());
        let t_minus_id = &t - &id;
        let fixes = |residual: &Matrix, reference: &Matrix| {
            residual.frobenius_norm() <= tol.eq_rel * reference.frobenius_norm().max(1.0)
        };
        (
            fixes(&t_minus_id, &id),
            fixes(&(&t_minus_id * &right_range), &right_range),
            fixes(&(&left_map * &t_minus_id), &left_map),
        )
    };

    Ok(DecompositionReport {
        xi_is_riesz,
        cond_a,
        cond_b,
        equality_holds,
        gap,
        relative_gap,
    })
}

/// Coefficient matrices for which the factorization through a redundant `Ξ`
/// fails: `M1 = v u*`, `M2 = u w*` with `u` a unit vector in `ker D_Ξ`,
/// `v = C_Φ g`, `w = C_Ψ f` for seeded random `g`, `f`.
///
/// The factored side vanishes because `Π_{range C_Ξ} u = 0`, while
/// `D_Φ M1 M2 C_Ψ = (S_Φ g)(S_Ψ f)*` does not.
pub fn decomposition_counterexample(
    row: &Frame,
    middle: &Frame,
    col: &Frame,
    seed: u64,
) -> Result<(Matrix, Matrix)> {
    let tol = Tolerance::default();
    if riesz_check(middle, tol) {
        return Err(Error::XiIsRiesz);
    }
    let kernel = null_space(middle.synthesis_matrix(), tol);
    let u = kernel.column(0);

    let mut r = rng(seed);
    let g = nonzero_vec(&mut r, row.dim());
    let f = nonzero_vec(&mut r, col.dim());
    let v = row.analysis_matrix().mul_vec(&g);
    let w = col.analysis_matrix().mul_vec(&f);

    let m1 = &Matrix::column_vector(&v) * &Matrix::column_vector(&u).adjoint();
    let m2 = &Matrix::column_vector(&u) * &Matrix::column_vector(&w).adjoint();
    Ok((m1, m2))
}

fn nonzero_vec(r: &mut crate::random::SeededRng, n: usize) -> alloc::vec::Vec<C64> {
    loop {
        let v = complex_normal_vec(r, n);
        if crate::linalg::norm(&v) > 1e-3 {
            return v;
        }
    }
}
