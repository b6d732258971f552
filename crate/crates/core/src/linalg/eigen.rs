//! Hermitian eigendecomposition by cyclic two-sided Jacobi rotations.

use alloc::vec::Vec;

use super::matrix::{Matrix, C64};

const MAX_SWEEPS: usize = 80;

/// `A = Q · diag(values) · Q*`, eigenvalues ascending.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

impl HermitianEigen {
    /// Panics if `a` is not square. Only the Hermitian part of `a` is used.
    pub fn new(a: &Matrix) -> HermitianEigen {
        assert!(a.is_square(), "eigendecomposition needs a square matrix");
        let n = a.rows();
        let mut h = Matrix::from_fn(n, n, |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5);
        let mut q = Matrix::identity(n);

        for _ in 0..MAX_SWEEPS {
            let diag_scale: f64 = (0..n).map(|i| h[(i, i)].norm_sqr()).sum::<f64>();
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| h[(i, j)].norm_sqr())
                .sum();
            if off <= f64::EPSILON * f64::EPSILON * diag_scale.max(f64::MIN_POSITIVE) {
                break;
            }
            for p in 0..n {
                for r in p + 1..n {
                    let apq = h[(p, r)];
                    let g = apq.norm();
                    if g == 0.0 {
                        continue;
                    }
                    let alpha = h[(p, p)].re;
                    let beta = h[(r, r)].re;
                    let e = apq / g;
                    let eb = e.conj();
                    let zeta = (beta - alpha) / (2.0 * g);
                    let t = libm::copysign(1.0, zeta)
                        / (zeta.abs() + libm::sqrt(1.0 + zeta * zeta));
                    let c = 1.0 / libm::sqrt(1.0 + t * t);
                    let s = c * t;
                    // h <- h W
                    for k in 0..n {
                        let x = h[(k, p)];
                        let y = h[(k, r)];
                        h[(k, p)] = x * c - y * eb * s;
                        h[(k, r)] = x * s + y * eb * c;
                    }
                    // h <- W* h
                    for k in 0..n {
                        let x = h[(p, k)];
                        let y = h[(r, k)];
                        h[(p, k)] = x * c - y * e * s;
                        h[(r, k)] = x * s + y * e * c;
                    }
                    h[(p, r)] = C64::new(0.0, 0.0);
                    h[(r, p)] = C64::new(0.0, 0.0);
                    h[(p, p)] = C64::new(h[(p, p)].re, 0.0);
                    h[(r, r)] = C64::new(h[(r, r)].re, 0.0);
                    for k in 0..n {
                        let x = q[(k, p)];
                        let y = q[(k, r)];
                        q[(k, p)] = x * c - y * eb * s;
                        q[(k, r)] = x * s + y * eb * c;
                    }
                }
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| h[(i, i)].re.total_cmp(&h[(j, j)].re).then(i.cmp(&j)));
        let values = order.iter().map(|&i| h[(i, i)].re).collect();
        let vectors = Matrix::from_fn(n, n, |i, k| q[(i, order[k])]);
        HermitianEigen { values, vectors }
    }

    pub fn min(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn max(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    /// `Q · diag(f(λ)) · Q*`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Matrix {
        let d: Vec<C64> = self.values.iter().map(|&l| C64::new(f(l), 0.0)).collect();
        &(&self.vectors * &Matrix::diagonal(&d)) * &self.vectors.adjoint()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::rel_diff;

    #[test]
    fn real_symmetric_two_by_two() {
        let s = Matrix::from_real_rows(&[[2.0, 1.0], [1.0, 2.0]]);
        let e = HermitianEigen::new(&s);
        assert!((e.values[0] - 1.0).abs() < 1e-14);
        assert!((e.values[1] - 3.0).abs() < 1e-14);
        assert!(rel_diff(&e.map(|x| x), &s) < 1e-14);
    }

    #[test]
    fn complex_hermitian_reconstructs() {
        let b = Matrix::from_fn(5, 5, |i, j| {
            C64::new(libm::sin((i * 5 + j) as f64), libm::cos((3 * i + 2 * j) as f64))
        });
        let a = &b * &b.adjoint();
        let e = HermitianEigen::new(&a);
        assert!(rel_diff(&e.map(|x| x), &a) < 1e-13);
        let qq = &e.vectors.adjoint() * &e.vectors;
        assert!(rel_diff(&qq, &Matrix::identity(5)) < 1e-13);
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        // A Q = Q Λ column by column
        for k in 0..5 {
            let v = e.vectors.column(k);
            let av = a.mul_vec(&v);
            for i in 0..5 {
                assert!((av[i] - v[i] * e.values[k]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn inverse_square_root_style_maps() {
        let s = Matrix::from_real_rows(&[[2.0, 1.0], [1.0, 2.0]]);
        let inv = HermitianEigen::new(&s).map(|x| 1.0 / x);
        let expected = Matrix::from_real_rows(&[[2.0 / 3.0, -1.0 / 3.0], [-1.0 / 3.0, 2.0 / 3.0]]);
        assert!(rel_diff(&inv, &expected) < 1e-14);
    }
}
