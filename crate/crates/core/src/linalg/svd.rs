//! Thin singular value decomposition by one-sided (Hestenes) Jacobi rotations.
//!
//! Jacobi is slower than bidiagonalization + QR but computes small singular
//! values to high relative accuracy, which matters here because every rank
//! decision in the crate is a singular-value cutoff.

use alloc::vec::Vec;

use super::matrix::{Matrix, C64};

const MAX_SWEEPS: usize = 80;

/// `A = U · diag(sigma) · V*` with `k = min(rows, cols)` singular triplets,
/// sorted by decreasing singular value.
///
/// Columns of `u` belonging to zero singular values are zero.
#[derive(Clone, Debug)]
pub struct Svd {
    pub u: Matrix,
    pub sigma: Vec<f64>,
    pub v: Matrix,
}

impl Svd {
    pub fn new(a: &Matrix) -> Svd {
        if a.rows() >= a.cols() {
            jacobi_tall(a)
        } else {
            let t = jacobi_tall(&a.adjoint());
            Svd {
                u: t.v,
                sigma: t.sigma,
                v: t.u,
            }
        }
    }

    pub fn max_singular_value(&self) -> f64 {
        self.sigma.first().copied().unwrap_or(0.0)
    }

    /// Number of singular values strictly above `rank_rel · σ_max`.
    pub fn rank(&self, rank_rel: f64) -> usize {
        let smax = self.max_singular_value();
        if smax == 0.0 {
            return 0;
        }
        self.sigma.iter().filter(|&&s| s > rank_rel * smax).count()
    }
}

// Column-major working copy keeps the column rotations contiguous.
fn jacobi_tall(a: &Matrix) -> Svd {
    let (m, n) = a.shape();
    let mut cols: Vec<Vec<C64>> = (0..n).map(|j| a.column(j)).collect();
    let mut v: Vec<Vec<C64>> = (0..n)
        .map(|j| {
            let mut e = alloc::vec![C64::new(0.0, 0.0); n];
            e[j] = C64::new(1.0, 0.0);
            e
        })
        .collect();

    let eps = f64::EPSILON;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma: C64 = cols[p]
                    .iter()
                    .zip(&cols[q])
                    .map(|(x, y)| x.conj() * y)
                    .sum();
                let g = gamma.norm();
                if g == 0.0 || g <= eps * libm::sqrt(alpha * beta) {
                    continue;
                }
                rotated = true;
                // Remove the phase of gamma, then apply a real rotation.
                let phase = (gamma / g).conj();
                let zeta = (beta - alpha) / (2.0 * g);
                let t = libm::copysign(1.0, zeta) / (zeta.abs() + libm::sqrt(1.0 + zeta * zeta));
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = c * t;
                rotate(&mut cols, p, q, c, s, phase);
                rotate(&mut v, p, q, c, s, phase);
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<(usize, f64)> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| (j, super::matrix::norm(c)))
        .collect();
    order.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));

    let mut u = Matrix::zeros(m, n);
    let mut vm = Matrix::zeros(n, n);
    let mut sigma = Vec::with_capacity(n);
    for (k, &(j, s)) in order.iter().enumerate() {
        sigma.push(s);
        if s > 0.0 {
            let inv = 1.0 / s;
            for i in 0..m {
                u[(i, k)] = cols[j][i] * inv;
            }
        }
        for i in 0..n {
            vm[(i, k)] = v[j][i];
        }
    }
    Svd { u, sigma, v: vm }
}

fn rotate(cols: &mut [Vec<C64>], p: usize, q: usize, c: f64, s: f64, phase: C64) {
    let (left, right) = cols.split_at_mut(q);
    let cp = &mut left[p];
    let cq = &mut right[0];
    for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
        let yq = *y * phase;
        let xp = *x;
        *x = xp * c - yq * s;
        *y = xp * s + yq * c;
    }
}
