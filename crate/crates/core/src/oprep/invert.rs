//! Inverting operators through their coefficient matrices, and the
//! coefficient-side pseudo-inverse of a bijective operator.
//!
//! Each quantity has three closed forms. They are all evaluated and compared;
//! a disagreement means a convention error somewhere upstream.

use super::{check_coefficients, cross_frame_operator, matrix_rep, op_properties_from_matrix, operator_synth};
use crate::error::{check_dim, Error, Result};
use crate::frames::{gram, Frame};
use crate::linalg::{inverse, pinv, rank_of, rel_diff, Matrix, Tolerance};

/// The three closed forms of one inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct InverseCandidates {
    /// Computed over the canonical dual frames.
    pub dual_frames: Matrix,
    /// Computed over the original frames with cross-Gram matrices of the duals
    /// on both sides.
    pub gram_sandwich: Matrix,
    /// Computed over the original frames with inverse frame operators on both
    /// sides.
    pub frame_operator_sandwich: Matrix,
}

impl InverseCandidates {
    pub fn max_pairwise_gap(&self) -> f64 {
        let a = &self.dual_frames;
        let b = &self.gram_sandwich;
        let c = &self.frame_operator_sandwich;
        rel_diff(a, b).max(rel_diff(b, c)).max(rel_diff(a, c))
    }

    fn checked(self, what: &'static str, tol: Tolerance) -> Result<Matrix> {
        let residual = self.max_pairwise_gap();
        if residual > tol.eq_rel {
            return Err(Error::FormulaMismatch { what, residual });
        }
        Ok(self.dual_frames)
    }
}

/// `M† = pinv(Π_Φ · M · Π_Ψ)`: the inverse of `M` restricted to
/// `range(C_Ψ) → range(C_Φ)`, extended by zero.
pub fn restricted_pinv(m: &Matrix, row: &Frame, col: &Frame, tol: Tolerance) -> Result<Matrix> {
    check_coefficients(m, row, col)?;
    let restricted = &(&row.coefficient_projector() * m) * &col.coefficient_projector();
    Ok(pinv(&restricted, tol))
}

/// Candidates for `Op^{(Φ,Ψ)}(M)⁻¹`:
///
/// * `Op^{(Ψ̃,Φ̃)}(M†) = D_Ψ̃ M† C_Φ̃`
/// * `Op^{(Φ,Ψ)}(G_{Φ̃,Ψ̃} M† G_{Φ̃,Ψ̃})`
/// * `S_Ψ̃ · Op^{(Ψ,Φ)}(M†) · S_Φ̃`
pub fn inverse_candidates(
    m: &Matrix,
    row: &Frame,
    col: &Frame,
    tol: Tolerance,
) -> Result<InverseCandidates> {
    let props = op_properties_from_matrix(m, row, col, tol)?;
    if !props.bijective {
        return Err(Error::NotBijective(
            "projected coefficient map is not a bijection between the coefficient ranges",
        ));
    }
    let pseudo = restricted_pinv(m, row, col, tol)?;
    let row_dual = row.canonical_dual();
    let col_dual = col.canonical_dual();

    let dual_frames = operator_synth(&pseudo, &col_dual, &row_dual)?;

    let g = gram(&row_dual, &col_dual)?;
    let gram_sandwich = operator_synth(&(&(&g * &pseudo) * &g), row, col)?;

    let middle = operator_synth(&pseudo, col, row)?;
    let left = cross_frame_operator(&col_dual, &col_dual)?;
    let right = cross_frame_operator(&row_dual, &row_dual)?;
    let frame_operator_sandwich = &(&left * &middle) * &right;

    Ok(InverseCandidates {
        dual_frames,
        gram_sandwich,
        frame_operator_sandwich,
    })
}

/// Inverse of `Op^{(Φ,Ψ)}(M)`, after cross-checking all three formulas.
pub fn invert_from_matrix(m: &Matrix, row: &Frame, col: &Frame, tol: Tolerance) -> Result<Matrix> {
    inverse_candidates(m, row, col, tol)?.checked("operator inverse formulas", tol)
}

/// Candidates for the pseudo-inverse of `Mat^{(Φ,Ψ)}(O)` when `O` is
/// bijective:
///
/// * `Mat^{(Ψ̃,Φ̃)}(O⁻¹)`
/// * `G_{Ψ̃,Φ̃} · Mat^{(Φ,Ψ)}(O⁻¹) · G_{Ψ̃,Φ̃}`
/// * `Mat^{(Ψ,Φ)}(S_Ψ⁻¹ O⁻¹ S_Φ⁻¹)`
pub fn pseudo_inverse_candidates(
    op: &Matrix,
    row: &Frame,
    col: &Frame,
    tol: Tolerance,
) -> Result<InverseCandidates> {
    check_dim("operator domain vs column frame", col.dim(), op.cols())?;
    check_dim("operator codomain vs row frame", row.dim(), op.rows())?;
    if !op.is_square() || rank_of(op, tol) < op.rows() {
        return Err(Error::NotBijective("operator is not square with full rank"));
    }
    let op_inv = inverse(op).ok_or(Error::NotBijective("operator is numerically singular"))?;
    let row_dual = row.canonical_dual();
    let col_dual = col.canonical_dual();

    let dual_frames = matrix_rep(&op_inv, &col_dual, &row_dual)?;

    let g = gram(&col_dual, &row_dual)?;
    let gram_sandwich = &(&g * &matrix_rep(&op_inv, row, col)?) * &g;

    let sandwiched = &(&col.inverse_frame_operator() * &op_inv) * &row.inverse_frame_operator();
    let frame_operator_sandwich = matrix_rep(&sandwiched, col, row)?;

    Ok(InverseCandidates {
        dual_frames,
        gram_sandwich,
        frame_operator_sandwich,
    })
}

/// Pseudo-inverse of `Mat^{(Φ,Ψ)}(O)` for bijective `O`, after cross-checking
/// all three formulas.
pub fn pseudo_matrix_of_inverse(
    op: &Matrix,
    row: &Frame,
    col: &Frame,
    tol: Tolerance,
) -> Result<Matrix> {
    pseudo_inverse_candidates(op, row, col, tol)?.checked("pseudo-inverse formulas", tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::FrameSpec;
    use crate::random::{complex_normal_matrix, rng};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn identity_on_onb() {
        let f = FrameSpec::Onb { dim: 2 }.generate(0).unwrap();
        let inv = invert_from_matrix(&Matrix::identity(2), &f, &f, tol()).unwrap();
        assert!(rel_diff(&inv, &Matrix::identity(2)) < 1e-15);
        let mp = pseudo_matrix_of_inverse(&Matrix::identity(2), &f, &f, tol()).unwrap();
        assert!(rel_diff(&mp, &Matrix::identity(2)) < 1e-15);
    }

    #[test]
    fn inverse_of_frame_operator_representation() {
        let f = super::super::tests::psi1();
        let s = f.frame_operator();
        let m = matrix_rep(&s, &f, &f).unwrap();
        // Op(Mat(S)) = S·S·S, so the synthesized operator inverts to S⁻³
        let inv = invert_from_matrix(&m, &f, &f, tol()).unwrap();
        let synthesized = operator_synth(&m, &f, &f).unwrap();
        let oracle = inverse(&synthesized).unwrap();
        assert!(rel_diff(&inv, &oracle) < 1e-13);
        let s_inv = Matrix::from_real_rows(&[[2.0 / 3.0, -1.0 / 3.0], [-1.0 / 3.0, 2.0 / 3.0]]);
        assert!(rel_diff(&inv, &(&(&s_inv * &s_inv) * &s_inv)) < 1e-13);
        // over the dual frames the same matrix synthesizes S itself
        let dual = f.canonical_dual();
        let inv = invert_from_matrix(&m, &dual, &dual, tol()).unwrap();
        assert!(rel_diff(&inv, &s_inv) < 1e-13);
    }

    #[test]
    fn pseudo_inverse_of_gram() {
        let f = super::super::tests::psi1();
        let mp = pseudo_matrix_of_inverse(&Matrix::identity(2), &f, &f, tol()).unwrap();
        let dual = f.canonical_dual();
        assert!(rel_diff(&mp, &gram(&dual, &dual).unwrap()) < 1e-13);
        let g = gram(&f, &f).unwrap();
        assert!(rel_diff(&mp, &pinv(&g, tol())) < 1e-13);
    }

    #[test]
    fn random_bijective_fixture() {
        let mut r = rng(17);
        let row = FrameSpec::Random { dim: 3, len: 5 }.generate(1).unwrap();
        let col = FrameSpec::Random { dim: 3, len: 6 }.generate(2).unwrap();
        let o = complex_normal_matrix(&mut r, 3, 3);
        let m = matrix_rep(&o, &row, &col).unwrap();
        let c = inverse_candidates(&m, &row, &col, tol()).unwrap();
        assert!(c.max_pairwise_gap() < 1e-10, "{}", c.max_pairwise_gap());
        let dense = inverse(&operator_synth(&m, &row, &col).unwrap()).unwrap();
        assert!(rel_diff(&c.dual_frames, &dense) < 1e-8);
        let recovered = invert_from_matrix(&m, &row.canonical_dual(), &col.canonical_dual(), tol()).unwrap();
        assert!(rel_diff(&recovered, &inverse(&o).unwrap()) < 1e-8);

        let p = pseudo_inverse_candidates(&o, &row, &col, tol()).unwrap();
        assert!(p.max_pairwise_gap() < 1e-10, "{}", p.max_pairwise_gap());
        let oracle = pinv(&m, tol());
        assert!(rel_diff(&p.dual_frames, &oracle) < 1e-8);
    }

    #[test]
    fn not_bijective() {
        let f = super::super::tests::psi1();
        assert!(matches!(
            invert_from_matrix(&Matrix::zeros(3, 3), &f, &f, tol()),
            Err(Error::NotBijective(_))
        ));
        let singular = Matrix::from_real_rows(&[[1.0, 1.0], [1.0, 1.0]]);
        assert!(matches!(
            pseudo_matrix_of_inverse(&singular, &f, &f, tol()),
            Err(Error::NotBijective(_))
        ));
    }
}
