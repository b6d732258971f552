//! Seeded sampling helpers shared by fixture generators and the suite.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{Matrix, C64};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Circular complex normal with unit variance.
pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im) * core::f64::consts::FRAC_1_SQRT_2
}

pub fn complex_normal_vec<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<C64> {
    (0..n).map(|_| complex_normal(rng)).collect()
}

pub fn complex_normal_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| complex_normal(rng))
}

/// Haar-like random unitary: Gram–Schmidt on a complex normal matrix.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let g = complex_normal_matrix(rng, n, n);
        let mut cols: Vec<Vec<C64>> = Vec::with_capacity(n);
        let mut ok = true;
        for j in 0..n {
            let mut v = g.column(j);
            // two passes of modified Gram–Schmidt
            for _ in 0..2 {
                for q in &cols {
                    let p = crate::linalg::inner(&v, q);
                    for (vi, qi) in v.iter_mut().zip(q) {
                        *vi -= p * qi;
                    }
                }
            }
            let nv = crate::linalg::norm(&v);
            if nv < 1e-8 {
                ok = false;
                break;
            }
            v.iter_mut().for_each(|z| *z /= nv);
            cols.push(v);
        }
        if ok {
            return Matrix::from_columns(n, &cols);
        }
    }
}
