//! Dense complex linear algebra: SVD-based rank, pseudo-inverse and range
//! projectors, Hermitian eigendecomposition, and an LU reference solver.

mod eigen;
mod lu;
mod matrix;
mod svd;

use alloc::vec::Vec;

pub use eigen::HermitianEigen;
pub use lu::{inverse, solve, Lu};
pub use matrix::{inner, norm, rel_diff, rel_diff_vec, Matrix, C64};
pub use svd::Svd;

use crate::error::{Error, Result};

/// Numerical thresholds shared by every rank and equality decision.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Tolerance {
    /// Singular values `≤ rank_rel · σ_max` count as zero.
    pub rank_rel: f64,
    /// Matrices are equal when `‖A − B‖_F / max(1, ‖B‖_F) ≤ eq_rel`.
    pub eq_rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rank_rel: 1e-10,
            eq_rel: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn new(rank_rel: f64, eq_rel: f64) -> Result<Self> {
        if !(rank_rel > 0.0 && rank_rel.is_finite()) {
            return Err(Error::InvalidTolerance("rank_rel must be positive and finite"));
        }
        if !(eq_rel > 0.0 && eq_rel.is_finite()) {
            return Err(Error::InvalidTolerance("eq_rel must be positive and finite"));
        }
        Ok(Tolerance { rank_rel, eq_rel })
    }

    pub fn approx_eq(&self, a: &Matrix, b: &Matrix) -> bool {
        a.shape() == b.shape() && rel_diff(a, b) <= self.eq_rel
    }
}

/// Moore–Penrose pseudo-inverse from a truncated SVD.
pub fn pinv(m: &Matrix, tol: Tolerance) -> Matrix {
    let svd = Svd::new(m);
    let r = svd.rank(tol.rank_rel);
    let mut out = Matrix::zeros(m.cols(), m.rows());
    for k in 0..r {
        let inv = 1.0 / svd.sigma[k];
        for i in 0..m.cols() {
            let vik = svd.v[(i, k)] * inv;
            for j in 0..m.rows() {
                out[(i, j)] += vik * svd.u[(j, k)].conj();
            }
        }
    }
    out
}

pub fn rank_of(m: &Matrix, tol: Tolerance) -> usize {
    Svd::new(m).rank(tol.rank_rel)
}

/// Largest singular value.
pub fn op_norm(m: &Matrix) -> f64 {
    Svd::new(m).max_singular_value()
}

/// Orthogonal projector onto the column space of `m`.
pub fn projector_onto_range(m: &Matrix, tol: Tolerance) -> Matrix {
    let svd = Svd::new(m);
    let r = svd.rank(tol.rank_rel);
    let n = m.rows();
    Matrix::from_fn(n, n, |i, j| {
        (0..r)
            .map(|k| svd.u[(i, k)] * svd.u[(j, k)].conj())
            .sum()
    })
}

/// Orthonormal basis of the kernel of `m`, as columns (possibly zero columns).
pub fn null_space(m: &Matrix, tol: Tolerance) -> Matrix {
    let n = m.cols();
    let complement = &Matrix::identity(n) - &projector_onto_range(&m.adjoint(), tol);
    let eig = HermitianEigen::new(&complement);
    let keep: Vec<usize> = (0..n).filter(|&k| eig.values[k] > 0.5).collect();
    Matrix::from_fn(n, keep.len(), |i, k| eig.vectors[(i, keep[k])])
}

/// `range(x) ⊆ range(y)`, decided as `rank([y | x]) == rank(y)`.
pub fn range_contains(y: &Matrix, x: &Matrix, tol: Tolerance) -> bool {
    rank_of(&y.hstack(x), tol) == rank_of(y, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn tolerance_validation() {
        assert!(Tolerance::new(0.0, 1e-9).is_err());
        assert!(Tolerance::new(1e-10, -1.0).is_err());
        assert!(Tolerance::new(1e-10, f64::NAN).is_err());
        assert_eq!(Tolerance::new(1e-10, 1e-9).unwrap(), Tolerance::default());
    }

    #[test]
    fn pinv_examples() {
        assert!(rel_diff(&pinv(&Matrix::identity(3), tol()), &Matrix::identity(3)) < 1e-15);
        let a = Matrix::from_real_rows(&[[2.0, 0.0], [0.0, 0.0]]);
        let expected = Matrix::from_real_rows(&[[0.5, 0.0], [0.0, 0.0]]);
        assert!(rel_diff(&pinv(&a, tol()), &expected) < 1e-15);
        let z = pinv(&Matrix::zeros(2, 3), tol());
        assert_eq!(z, Matrix::zeros(3, 2));
    }

    #[test]
    fn pinv_penrose_identities_for_synthesis_matrix() {
        let d = Matrix::from_real_rows(&[[1.0, 0.0, 1.0], [0.0, 1.0, 1.0]]);
        let p = pinv(&d, tol());
        assert_eq!(p.shape(), (3, 2));
        assert!(rel_diff(&(&(&d * &p) * &d), &d) < 1e-14);
        assert!(rel_diff(&(&(&p * &d) * &p), &p) < 1e-14);
        let dp = &d * &p;
        let pd = &p * &d;
        assert!(rel_diff(&dp, &dp.adjoint()) < 1e-14);
        assert!(rel_diff(&pd, &pd.adjoint()) < 1e-14);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_of(&Matrix::identity(4), tol()), 4);
        assert_eq!(rank_of(&Matrix::zeros(3, 3), tol()), 0);
        let d = Matrix::from_real_rows(&[[1.0, 0.0, 1.0], [0.0, 1.0, 1.0]]);
        assert_eq!(rank_of(&d, tol()), 2);
    }

    #[test]
    fn projector_examples() {
        let p = projector_onto_range(&Matrix::identity(2), tol());
        assert!(rel_diff(&p, &Matrix::identity(2)) < 1e-15);
        let v = Matrix::from_real_rows(&[[1.0], [1.0]]);
        let p = projector_onto_range(&v, tol());
        let expected = Matrix::from_real_rows(&[[0.5, 0.5], [0.5, 0.5]]);
        assert!(rel_diff(&p, &expected) < 1e-15);
    }

    #[test]
    fn null_space_of_synthesis_matrix() {
        let d = Matrix::from_real_rows(&[[1.0, 0.0, 1.0], [0.0, 1.0, 1.0]]);
        let k = null_space(&d, tol());
        assert_eq!(k.shape(), (3, 1));
        assert!((&d * &k).frobenius_norm() < 1e-14);
        assert!((norm(&k.column(0)) - 1.0).abs() < 1e-14);
        assert_eq!(null_space(&Matrix::identity(3), tol()).cols(), 0);
        assert_eq!(null_space(&Matrix::zeros(2, 2), tol()).cols(), 2);
    }

    #[test]
    fn range_inclusion() {
        let y = Matrix::from_real_rows(&[[1.0], [1.0], [0.0]]);
        let inside = Matrix::from_real_rows(&[[2.0, -1.0], [2.0, -1.0], [0.0, 0.0]]);
        let outside = Matrix::from_real_rows(&[[1.0], [0.0], [0.0]]);
        assert!(range_contains(&y, &inside, tol()));
        assert!(!range_contains(&y, &outside, tol()));
    }
}
