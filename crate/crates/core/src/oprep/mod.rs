//! Matrix representation of operators with respect to a pair of frames.
//!
//! Throughout, `row` is the frame `Φ` of the codomain and `col` the frame `Ψ`
//! of the domain. An operator `O : C^{d₁} → C^{d₂}` is a `d₂ × d₁` matrix in
//! canonical coordinates; its representation is the `N_Φ × N_Ψ` matrix
//! `C_Φ · O · D_Ψ` with entries `⟨O ψ_n, φ_m⟩`, and a coefficient matrix `M`
//! synthesizes the operator `D_Φ · M · C_Ψ`.

mod decompose;
mod invert;
mod represent;
mod riesz;

pub use decompose::{
    decompose_check, decomposition_counterexample, DecompositionReport, MiddleFrames,
};
pub use invert::{
    invert_from_matrix, inverse_candidates, pseudo_inverse_candidates, pseudo_matrix_of_inverse,
    restricted_pinv, InverseCandidates,
};
pub use represent::{
    is_representable, op_properties_from_matrix, JectivityReport, RepresentabilityReport,
};
pub use riesz::{riesz_equivalence_check, RieszEquivalenceReport, RieszWitness};

use crate::error::{check_dim, Error, Result};
use crate::frames::Frame;
use crate::linalg::{rel_diff, Matrix, Tolerance, C64};

/// `C_Φ · O · D_Ψ`.
pub fn matrix_rep(op: &Matrix, row: &Frame, col: &Frame) -> Result<Matrix> {
    check_dim("operator domain vs column frame", col.dim(), op.cols())?;
    check_dim("operator codomain vs row frame", row.dim(), op.rows())?;
    Ok(&(&row.analysis_matrix() * op) * col.synthesis_matrix())
}

/// `D_Φ · M · C_Ψ`.
pub fn operator_synth(m: &Matrix, row: &Frame, col: &Frame) -> Result<Matrix> {
    check_coefficients(m, row, col)?;
    Ok(&(row.synthesis_matrix() * m) * &col.analysis_matrix())
}

/// `Σ_{k,j} M_{k,j} · (x ↦ ⟨x, ψ_j⟩ φ_k)`, summed term by term.
pub fn rank_one_expansion(m: &Matrix, row: &Frame, col: &Frame) -> Result<Matrix> {
    check_coefficients(m, row, col)?;
    let mut out = Matrix::zeros(row.dim(), col.dim());
    let phis = row.vectors();
    let psis = col.vectors();
    for (k, phi) in phis.iter().enumerate() {
        for (j, psi) in psis.iter().enumerate() {
            let w = m[(k, j)];
            if w == C64::new(0.0, 0.0) {
                continue;
            }
            for (a, &pa) in phi.iter().enumerate() {
                for (b, &pb) in psi.iter().enumerate() {
                    out[(a, b)] += w * pa * pb.conj();
                }
            }
        }
    }
    Ok(out)
}

/// Frame multiplier `D_Φ · diag(symbol) · C_Ψ`.
pub fn multiplier(symbol: &[C64], row: &Frame, col: &Frame) -> Result<Matrix> {
    check_dim("multiplier symbol vs row frame", row.len(), symbol.len())?;
    check_dim("multiplier symbol vs column frame", col.len(), symbol.len())?;
    operator_synth(&Matrix::diagonal(symbol), row, col)
}

/// Representation of `O ∘ P` through an intermediate frame `Ξ`:
/// `Mat^{(Φ,Ξ)}(O) · Mat^{(Ξ̃,Ψ)}(P)`.
///
/// The product is compared against `Mat^{(Φ,Ψ)}(O ∘ P)`; the identity holds
/// for every frame `Ξ`, so a mismatch is reported as an error.
pub fn compose_rep(
    outer: &Matrix,
    inner: &Matrix,
    row: &Frame,
    middle: &Frame,
    col: &Frame,
    tol: Tolerance,
) -> Result<Matrix> {
    check_dim("composition inner dimension", outer.cols(), inner.rows())?;
    let left = matrix_rep(outer, row, middle)?;
    let right = matrix_rep(inner, &middle.canonical_dual(), col)?;
    let product = &left * &right;
    let direct = matrix_rep(&(outer * inner), row, col)?;
    let residual = rel_diff(&product, &direct);
    if residual > tol.eq_rel {
        return Err(Error::FormulaMismatch {
            what: "composed representation and representation of the composition",
            residual,
        });
    }
    Ok(product)
}

fn check_coefficients(m: &Matrix, row: &Frame, col: &Frame) -> Result<()> {
    check_dim("coefficient rows vs row frame", row.len(), m.rows())?;
    check_dim("coefficient columns vs column frame", col.len(), m.cols())
}

/// Cross frame operator `S_{Ψ,Φ} = D_Ψ · C_Φ` between frames of equal dimension.
pub fn cross_frame_operator(left: &Frame, right: &Frame) -> Result<Matrix> {
    check_dim("cross frame operator", left.len(), right.len())?;
    Ok(left.synthesis_matrix() * &right.analysis_matrix())
}

pub(crate) fn riesz_check(f: &Frame, tol: Tolerance) -> bool {
    f.is_riesz_basis(tol).is_riesz
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::FrameSpec;
    use crate::random::{complex_normal_matrix, rng};
    use alloc::vec;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    pub(crate) fn psi1() -> Frame {
        Frame::from_vectors(
            2,
            &[vec![c(1.0), c(0.0)], vec![c(0.0), c(1.0)], vec![c(1.0), c(1.0)]],
            Tolerance::default(),
        )
        .unwrap()
    }

    fn diag_ones(n: usize) -> alloc::vec::Vec<C64> {
        vec![c(1.0); n]
    }

    fn onb(d: usize) -> Frame {
        FrameSpec::Onb { dim: d }.generate(0).unwrap()
    }

    #[test]
    fn matrix_rep_examples() {
        let id = Matrix::identity(2);
        assert_eq!(matrix_rep(&id, &onb(2), &onb(2)).unwrap(), id);
        let g = matrix_rep(&id, &psi1(), &psi1()).unwrap();
        let expected = Matrix::from_real_rows(&[[1.0, 0.0, 1.0], [0.0, 1.0, 1.0], [1.0, 1.0, 2.0]]);
        assert!(rel_diff(&g, &expected) < 1e-15);
        let swap = Matrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]]);
        assert_eq!(matrix_rep(&swap, &onb(2), &onb(2)).unwrap(), swap);
        assert!(matrix_rep(&Matrix::identity(3), &onb(2), &onb(2)).is_err());
    }

    #[test]
    fn entries_are_inner_products() {
        let mut r = rng(4);
        let row = FrameSpec::Random { dim: 2, len: 4 }.generate(1).unwrap();
        let col = FrameSpec::Random { dim: 3, len: 5 }.generate(2).unwrap();
        let o = complex_normal_matrix(&mut r, 2, 3);
        let m = matrix_rep(&o, &row, &col).unwrap();
        for mi in 0..4 {
            for n in 0..5 {
                let e = crate::linalg::inner(&o.mul_vec(&col.vector(n)), &row.vector(mi));
                assert!((m[(mi, n)] - e).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn operator_synth_examples() {
        let f = psi1();
        let s = operator_synth(&Matrix::identity(3), &f, &f).unwrap();
        assert!(rel_diff(&s, &f.frame_operator()) < 1e-15);
        let id = operator_synth(&Matrix::identity(3), &f, &f.canonical_dual()).unwrap();
        assert!(rel_diff(&id, &Matrix::identity(2)) < 1e-14);
        assert!(operator_synth(&Matrix::identity(2), &f, &f).is_err());
    }

    #[test]
    fn rank_one_expansion_matches_synthesis() {
        let mut e00 = Matrix::zeros(2, 2);
        e00[(0, 0)] = c(1.0);
        assert_eq!(rank_one_expansion(&e00, &onb(2), &onb(2)).unwrap(), e00);

        let f = psi1();
        let s = rank_one_expansion(&Matrix::identity(3), &f, &f).unwrap();
        assert!(rel_diff(&s, &Matrix::from_real_rows(&[[2.0, 1.0], [1.0, 2.0]])) < 1e-15);

        let mut r = rng(9);
        let row = FrameSpec::Random { dim: 3, len: 5 }.generate(21).unwrap();
        let col = FrameSpec::Random { dim: 3, len: 5 }.generate(22).unwrap();
        let m = complex_normal_matrix(&mut r, 5, 5);
        let a = rank_one_expansion(&m, &row, &col).unwrap();
        let b = operator_synth(&m, &row, &col).unwrap();
        assert!(rel_diff(&a, &b) < 1e-10);
    }

    #[test]
    fn multiplier_examples() {
        let f = psi1();
        let s = multiplier(&diag_ones(3), &f, &f).unwrap();
        assert!(rel_diff(&s, &Matrix::from_real_rows(&[[2.0, 1.0], [1.0, 2.0]])) < 1e-15);
        let id = multiplier(&diag_ones(3), &f.canonical_dual(), &f).unwrap();
        assert!(rel_diff(&id, &Matrix::identity(2)) < 1e-14);
        let e0 = multiplier(&[c(1.0), c(0.0)], &onb(2), &onb(2)).unwrap();
        assert_eq!(e0, Matrix::from_real_rows(&[[1.0, 0.0], [0.0, 0.0]]));
        assert!(multiplier(&diag_ones(2), &f, &f).is_err());
    }

    #[test]
    fn compose_examples() {
        let tol = Tolerance::default();
        let id = Matrix::identity(2);
        let p = compose_rep(&id, &id, &onb(2), &onb(2), &onb(2), tol).unwrap();
        assert_eq!(p, id);

        let o = Matrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]]);
        let q = Matrix::from_real_rows(&[[2.0, 0.0], [0.0, 3.0]]);
        let p = compose_rep(&o, &q, &onb(2), &psi1(), &onb(2), tol).unwrap();
        let expected = Matrix::from_real_rows(&[[0.0, 3.0], [2.0, 0.0]]);
        assert!(rel_diff(&p, &expected) < 1e-14);
    }

    #[test]
    fn cross_frame_operator_of_frame_with_itself() {
        let f = psi1();
        let s = cross_frame_operator(&f, &f).unwrap();
        assert!(rel_diff(&s, &f.frame_operator()) < 1e-15);
        assert!(cross_frame_operator(&f, &onb(2)).is_err());
    }
}
