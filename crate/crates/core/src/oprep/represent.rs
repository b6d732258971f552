use alloc::collections::BTreeMap;
use alloc::string::String;

use super::{check_coefficients, matrix_rep, operator_synth};
use crate::error::Result;
use crate::frames::Frame;
use crate::linalg::{null_space, range_contains, rel_diff, Matrix, Svd, Tolerance};

/// Whether a coefficient matrix is the representation of some operator.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RepresentabilityReport {
    pub representable: bool,
    /// `range(M) ⊆ range(C_Φ)` and `ker(D_Ψ) ⊆ ker(M)`.
    pub cond_range_kernel: bool,
    /// `Π_Φ · M · Π_Ψ = M`.
    pub cond_gram_sandwich: bool,
    /// `‖Π_Φ M Π_Ψ − M‖_F`.
    pub sandwich_residual: f64,
    /// `‖M K‖_F` for an orthonormal kernel basis `K` of `D_Ψ`.
    pub kernel_residual: f64,
    /// `D_Φ̃ · M · C_Ψ̃`, present when representable.
    pub witness_operator: Option<Matrix>,
    /// Relative distance between `Mat(witness)` and `M`.
    pub witness_residual: Option<f64>,
}

impl RepresentabilityReport {
    pub fn is_consistent(&self) -> bool {
        self.cond_range_kernel == self.cond_gram_sandwich
            && self.cond_gram_sandwich == self.representable
    }
}

pub fn is_representable(
    m: &Matrix,
    row: &Frame,
    col: &Frame,
    tol: Tolerance,
) -> Result<RepresentabilityReport> {
    check_coefficients(m, row, col)?;
    let scale = m.frobenius_norm().max(1.0);

    let range_ok = range_contains(&row.analysis_matrix(), m, tol);
    let kernel = null_space(col.synthesis_matrix(), tol);
    let kernel_residual = (m * &kernel).frobenius_norm();
    let cond_range_kernel = range_ok && kernel_residual <= tol.eq_rel * scale;

    let sandwich = &(&row.coefficient_projector() * m) * &col.coefficient_projector();
    let sandwich_residual = (&sandwich - m).frobenius_norm();
    let cond_gram_sandwich = sandwich_residual <= tol.eq_rel * scale;

    let representable = cond_gram_sandwich;
    let (witness_operator, witness_residual) = if representable {
        let w = operator_synth(m, &row.canonical_dual(), &col.canonical_dual())?;
        let back = matrix_rep(&w, row, col)?;
        let r = rel_diff(&back, m);
        (Some(w), Some(r))
    } else {
        (None, None)
    };

    Ok(RepresentabilityReport {
        representable,
        cond_range_kernel,
        cond_gram_sandwich,
        sandwich_residual,
        kernel_residual,
        witness_operator,
        witness_residual,
    })
}

/// Injectivity and surjectivity of `Op^{(Φ,Ψ)}(M)` read off the coefficient
/// side.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct JectivityReport {
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
    /// The same verdicts obtained from ranks of the synthesized operator.
    pub agrees_with_direct: bool,
    pub residuals: BTreeMap<String, f64>,
}

/// Decides the properties of `Op(M)` from the restricted map
/// `Π_Φ M : range(C_Ψ) → range(C_Φ)`, whose rank equals that of
/// `Π_Φ · M · C_Ψ`.
pub fn op_properties_from_matrix(
    m: &Matrix,
    row: &Frame,
    col: &Frame,
    tol: Tolerance,
) -> Result<JectivityReport> {
    check_coefficients(m, row, col)?;
    let (d1, d2) = (col.dim(), row.dim());

    let restricted = &(&row.coefficient_projector() * m) * &col.analysis_matrix();
    let restricted_svd = Svd::new(&restricted);
    let rank = restricted_svd.rank(tol.rank_rel);
    let injective = rank == d1;
    let surjective = rank == d2;

    let direct = operator_synth(m, row, col)?;
    let direct_svd = Svd::new(&direct);
    let direct_rank = direct_svd.rank(tol.rank_rel);
    let agrees_with_direct = (direct_rank == d1) == injective && (direct_rank == d2) == surjective;

    let mut residuals = BTreeMap::new();
    residuals.insert("restricted_rank".into(), rank as f64);
    residuals.insert("direct_rank".into(), direct_rank as f64);
    residuals.insert("restricted_sigma_ratio".into(), sigma_ratio(&restricted_svd, d1.min(d2)));
    residuals.insert("direct_sigma_ratio".into(), sigma_ratio(&direct_svd, d1.min(d2)));

    Ok(JectivityReport {
        injective,
        surjective,
        bijective: injective && surjective,
        agrees_with_direct,
        residuals,
    })
}

/// `σ_k / σ_1`, zero for a zero matrix.
fn sigma_ratio(svd: &Svd, k: usize) -> f64 {
    let smax = svd.max_singular_value();
    if smax == 0.0 || k == 0 {
        return 0.0;
    }
    svd.sigma.get(k - 1).copied().unwrap_or(0.0) / smax
}
