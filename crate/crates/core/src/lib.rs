//! Frame-based discretization of finite-dimensional linear operators.
//!
//! A [`Frame`](frames::Frame) is a spanning, possibly redundant, family of
//! vectors. Given frames `Φ` for the codomain and `Ψ` for the domain, an
//! operator `O` is represented by the coefficient matrix
//! `C_Φ · O · D_Ψ` (entries `⟨O ψ_n, φ_m⟩`), and a coefficient matrix `M` is
//! turned back into an operator by `D_Φ · M · C_Ψ`. The [`oprep`] module
//! covers these maps together with representability, injectivity and
//! surjectivity diagnostics, inversion formulas and the composition and
//! decomposition rules. [`solver`] runs the frame-Galerkin pipeline end to end
//! and [`verify`] re-checks every identity on generated fixtures.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod frames;
pub mod linalg;
pub mod oprep;
pub mod random;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use frames::{Frame, FrameBounds, FrameSpec, RieszReport};
pub use linalg::{Matrix, Tolerance, C64};
