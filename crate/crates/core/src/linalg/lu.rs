//! LU factorization with partial pivoting. Used as the dense reference route
//! for linear solves and inverses, independent of the SVD kernel.

use alloc::vec::Vec;

use super::matrix::{Matrix, C64};

#[derive(Clone, Debug)]
pub struct Lu {
    lu: Matrix,
    perm: Vec<usize>,
}

impl Lu {
    /// Returns `None` for non-square or numerically singular input.
    pub fn new(a: &Matrix) -> Option<Lu> {
        if !a.is_square() {
            return None;
        }
        let n = a.rows();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let scale = a.max_abs();
        if scale == 0.0 {
            return None;
        }
        for k in 0..n {
            let (piv, pmax) = (k..n)
                .map(|i| (i, lu[(i, k)].norm()))
                .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if pmax <= f64::EPSILON * scale * n as f64 {
                return None;
            }
            if piv != k {
                perm.swap(piv, k);
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(piv, j)];
                    lu[(piv, j)] = tmp;
                }
            }
            let d = lu[(k, k)];
            for i in k + 1..n {
                let f = lu[(i, k)] / d;
                lu[(i, k)] = f;
                for j in k + 1..n {
                    let u = lu[(k, j)];
                    lu[(i, j)] -= f * u;
                }
            }
        }
        Some(Lu { lu, perm })
    }

    pub fn solve_vec(&self, b: &[C64]) -> Vec<C64> {
        let n = self.lu.rows();
        assert_eq!(b.len(), n);
        let mut y: Vec<C64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let l = self.lu[(i, j)];
                let yj = y[j];
                y[i] -= l * yj;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let u = self.lu[(i, j)];
                let yj = y[j];
                y[i] -= u * yj;
            }
            y[i] /= self.lu[(i, i)];
        }
        y
    }

    pub fn inverse(&self) -> Matrix {
        let n = self.lu.rows();
        let mut inv = Matrix::zeros(n, n);
        for j in 0..n {
            let mut e = alloc::vec![C64::new(0.0, 0.0); n];
            e[j] = C64::new(1.0, 0.0);
            inv.set_column(j, &self.solve_vec(&e));
        }
        inv
    }
}

/// Dense inverse via LU, `None` when singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    Lu::new(a).map(|lu| lu.inverse())
}

/// Dense solve `a x = b` via LU, `None` when singular.
pub fn solve(a: &Matrix, b: &[C64]) -> Option<Vec<C64>> {
    Lu::new(a).map(|lu| lu.solve_vec(b))
}
