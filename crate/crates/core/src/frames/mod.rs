//! Finite frames and their associated operators.
//!
//! With `V = [ψ_0 … ψ_{N−1}]` the `d × N` matrix holding the frame vectors as
//! columns, the synthesis operator is `D = V`, the analysis operator is
//! `C = V*` (so `(C f)_k = ⟨f, ψ_k⟩`) and the frame operator is `S = V V*`.
//! Inner products are linear in the first argument.

mod generate;

use alloc::vec::Vec;

pub use generate::FrameSpec;

use crate::error::{check_dim, Error, Result};
use crate::linalg::{rank_of, HermitianEigen, Matrix, Tolerance, C64};

/// A spanning family of `N ≥ 1` vectors in `C^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    synthesis: Matrix,
}

/// Optimal frame bounds: the extreme eigenvalues of the frame operator.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FrameBounds {
    pub lower: f64,
    pub upper: f64,
}

impl FrameBounds {
    pub fn ratio(&self) -> f64 {
        self.lower / self.upper
    }
}

/// Outcome of the three equivalent Riesz-basis tests.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RieszReport {
    pub is_riesz: bool,
    /// The synthesis operator has trivial kernel.
    pub cond_synthesis_injective: bool,
    /// The analysis operator maps onto the whole coefficient space.
    pub cond_analysis_surjective: bool,
    /// `⟨ψ_k, ψ̃_j⟩ = δ_kj` for all pairs.
    pub cond_biorthogonal_dual: bool,
    /// Largest deviation of `⟨ψ_k, ψ̃_j⟩` from `δ_kj`.
    pub max_residual: f64,
}

impl RieszReport {
    pub fn is_consistent(&self) -> bool {
        self.cond_synthesis_injective == self.is_riesz
            && self.cond_analysis_surjective == self.is_riesz
            && self.cond_biorthogonal_dual == self.is_riesz
    }
}

impl Frame {
    /// Validates that `vectors` (each of length `dim`) span `C^dim`.
    pub fn from_vectors<V: AsRef<[C64]>>(dim: usize, vectors: &[V], tol: Tolerance) -> Result<Frame> {
        for v in vectors {
            check_dim("frame vector length", dim, v.as_ref().len())?;
        }
        Frame::from_synthesis(Matrix::from_columns(dim, vectors), tol)
    }

    /// Validates a `d × N` synthesis matrix.
    pub fn from_synthesis(synthesis: Matrix, tol: Tolerance) -> Result<Frame> {
        if !synthesis.is_finite() {
            return Err(Error::NonFinite);
        }
        let dim = synthesis.rows();
        if dim == 0 || synthesis.cols() == 0 {
            return Err(Error::NotAFrame { dim, rank: 0 });
        }
        let rank = rank_of(&synthesis, tol);
        if rank < dim {
            return Err(Error::NotAFrame { dim, rank });
        }
        Ok(Frame { synthesis })
    }

    /// Ambient dimension `d`.
    pub fn dim(&self) -> usize {
        self.synthesis.rows()
    }

    /// Number of frame vectors `N`.
    pub fn len(&self) -> usize {
        self.synthesis.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vector(&self, k: usize) -> Vec<C64> {
        self.synthesis.column(k)
    }

    pub fn vectors(&self) -> Vec<Vec<C64>> {
        (0..self.len()).map(|k| self.vector(k)).collect()
    }

    /// `D = V`, `d × N`.
    pub fn synthesis_matrix(&self) -> &Matrix {
        &self.synthesis
    }

    /// `C = V*`, `N × d`.
    pub fn analysis_matrix(&self) -> Matrix {
        self.synthesis.adjoint()
    }

    /// `(⟨x, ψ_k⟩)_k`.
    pub fn analysis(&self, x: &[C64]) -> Result<Vec<C64>> {
        check_dim("analysis input", self.dim(), x.len())?;
        Ok(self.analysis_matrix().mul_vec(x))
    }

    /// `Σ_k c_k ψ_k`.
    pub fn synthesis(&self, c: &[C64]) -> Result<Vec<C64>> {
        check_dim("synthesis coefficients", self.len(), c.len())?;
        Ok(self.synthesis.mul_vec(c))
    }

    /// `S = D C`.
    pub fn frame_operator(&self) -> Matrix {
        &self.synthesis * &self.analysis_matrix()
    }

    fn frame_operator_eigen(&self) -> HermitianEigen {
        HermitianEigen::new(&self.frame_operator())
    }

    pub fn bounds(&self) -> FrameBounds {
        let eig = self.frame_operator_eigen();
        FrameBounds {
            lower: eig.min(),
            upper: eig.max(),
        }
    }

    /// `S⁻¹` through the eigendecomposition of `S`.
    pub fn inverse_frame_operator(&self) -> Matrix {
        self.frame_operator_eigen().map(|l| 1.0 / l)
    }

    /// `(S⁻¹ ψ_k)_k`.
    pub fn canonical_dual(&self) -> Frame {
        Frame {
            synthesis: &self.inverse_frame_operator() * &self.synthesis,
        }
    }

    /// Orthogonal projector onto `range(C)`, computed as `G_{Ψ,Ψ̃}`.
    pub fn coefficient_projector(&self) -> Matrix {
        &self.analysis_matrix() * self.canonical_dual().synthesis_matrix()
    }

    pub fn is_riesz_basis(&self, tol: Tolerance) -> RieszReport {
        let n = self.len();
        let cond_synthesis_injective = rank_of(&self.synthesis, tol) == n;
        let cond_analysis_surjective = rank_of(&self.analysis_matrix(), tol) == n;
        // entry (j, k) is ⟨ψ_k, ψ̃_j⟩
        let cross = &self.canonical_dual().analysis_matrix() * &self.synthesis;
        let max_residual = (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .map(|(j, k)| {
                let delta = if j == k { 1.0 } else { 0.0 };
                (cross[(j, k)] - C64::new(delta, 0.0)).norm()
            })
            .fold(0.0, f64::max);
        let cond_biorthogonal_dual = max_residual <= tol.eq_rel;
        RieszReport {
            is_riesz: cond_synthesis_injective,
            cond_synthesis_injective,
            cond_analysis_surjective,
            cond_biorthogonal_dual,
            max_residual,
        }
    }
}

/// Cross-Gram matrix `G_{Ψ,Φ} = C_Ψ D_Φ`, entry `(j, m) = ⟨φ_m, ψ_j⟩`.
pub fn gram(left: &Frame, right: &Frame) -> Result<Matrix> {
    check_dim("gram frame dimensions", left.dim(), right.dim())?;
    Ok(&left.analysis_matrix() * right.synthesis_matrix())
}
