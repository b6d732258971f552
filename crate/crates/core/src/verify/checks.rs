use alloc::string::ToString;
use alloc::vec::Vec;

use rand::Rng;

use super::fixtures::{unit_vector, well_conditioned, Context, Fixture};
use super::CheckRecord;
use crate::error::{Error, Result};
use crate::frames::{gram, Frame};
use crate::linalg::{
    norm, op_norm, pinv, projector_onto_range, rank_of, rel_diff, rel_diff_vec, HermitianEigen, Matrix, C64,
};
use crate::oprep::{
    compose_rep, decompose_check, decomposition_counterexample, inverse_candidates, is_representable, matrix_rep,
    multiplier, op_properties_from_matrix, operator_synth, pseudo_inverse_candidates, rank_one_expansion,
    restricted_pinv, riesz_equivalence_check, MiddleFrames,
};
use crate::random::{complex_normal_matrix, complex_normal_vec, SeededRng};
use crate::solver::solve;

const NORM_MARGIN: f64 = 1e-12;
const INVERSE_TOL: f64 = 1e-8;
const GAP_TOL: f64 = 1e-10;
const COUNTEREXAMPLE_MIN_GAP: f64 = 1e-3;

enum Threshold {
    EqRel,
    Fixed(f64),
}

pub(super) struct Check {
    pub name: &'static str,
    statement: &'static str,
    threshold: Threshold,
    body: fn(&Context<'_>, &mut Tally, &mut SeededRng),
}

impl Check {
    pub fn run(&self, ctx: &Context<'_>) -> CheckRecord {
        let threshold = match self.threshold {
            Threshold::EqRel => ctx.tol.eq_rel,
            Threshold::Fixed(t) => t,
        };
        let mut tally = Tally {
            fixtures: 0,
            failures: 0,
            max_residual: 0.0,
            threshold,
        };
        let mut r = ctx.rng(self.name);
        (self.body)(ctx, &mut tally, &mut r);
        CheckRecord {
            name: self.name.to_string(),
            statement: self.statement.to_string(),
            fixtures_run: tally.fixtures,
            failures: tally.failures,
            max_residual: tally.max_residual,
            threshold,
            passed: tally.failures == 0,
        }
    }
}

struct Tally {
    fixtures: usize,
    failures: usize,
    max_residual: f64,
    threshold: f64,
}

impl Tally {
    /// One instance: its residual and any extra verdict. Errors count as
    /// failures.
    fn record(&mut self, outcome: Result<(f64, bool)>) {
        self.fixtures += 1;
        match outcome {
            Ok((residual, ok)) => {
                if residual.is_finite() {
                    self.max_residual = self.max_residual.max(residual);
                }
                if !(ok && residual <= self.threshold) {
                    self.failures += 1;
                }
            }
            Err(_) => self.failures += 1,
        }
    }
}

pub(super) const CHECKS: &[Check] = &[
    Check {
        name: "frames.frame_inequality",
        statement: "A‖f‖² ≤ Σ|⟨f,ψ_k⟩|² ≤ B‖f‖² for random unit f, with equality at the extreme eigenvectors of S",
        threshold: Threshold::EqRel,
        body: frame_inequality,
    },
    Check {
        name: "frames.dual_bounds",
        statement: "the canonical dual has frame bounds 1/B and 1/A",
        threshold: Threshold::EqRel,
        body: dual_bounds,
    },
    Check {
        name: "frames.reconstruction",
        statement: "f = Σ⟨f,ψ̃_k⟩ψ_k = Σ⟨f,ψ_k⟩ψ̃_k",
        threshold: Threshold::EqRel,
        body: reconstruction,
    },
    Check {
        name: "frames.adjointness",
        statement: "C = D* and ‖C‖ = ‖D‖ = √B",
        threshold: Threshold::EqRel,
        body: adjointness,
    },
    Check {
        name: "frames.dual_involution",
        statement: "the dual of the canonical dual is the frame itself",
        threshold: Threshold::EqRel,
        body: dual_involution,
    },
    Check {
        name: "frames.gram_projection",
        statement: "G_{Ψ,Ψ̃} = G_{Ψ̃,Ψ}* is the orthogonal projector onto range(C_Ψ)",
        threshold: Threshold::EqRel,
        body: gram_projection,
    },
    Check {
        name: "frames.riesz_consistency",
        statement: "injective synthesis, surjective analysis and biorthogonal dual agree, and hold exactly when N = d",
        threshold: Threshold::EqRel,
        body: riesz_consistency,
    },
    Check {
        name: "oprep.reconstruction_identity",
        statement: "Op^{(Φ,Ψ)}(Mat^{(Φ̃,Ψ̃)}(O)) = O = Op^{(Φ̃,Ψ̃)}(Mat^{(Φ,Ψ)}(O))",
        threshold: Threshold::EqRel,
        body: reconstruction_identity,
    },
    Check {
        name: "oprep.mat_injectivity",
        statement: "‖O₁ − O₂‖ ≤ ‖Mat(O₁) − Mat(O₂)‖ / √(A·A′), so distinct operators have distinct matrices",
        threshold: Threshold::Fixed(NORM_MARGIN),
        body: mat_injectivity,
    },
    Check {
        name: "oprep.op_surjectivity",
        statement: "M = Mat^{(Φ̃,Ψ̃)}(O) is representable and Op^{(Φ,Ψ)}(M) = O",
        threshold: Threshold::EqRel,
        body: op_surjectivity,
    },
    Check {
        name: "oprep.norm_bounds",
        statement: "‖Mat(O)‖ ≤ √(B·B′)‖O‖ and ‖Op(M)‖ ≤ √(B·B′)‖M‖",
        threshold: Threshold::Fixed(NORM_MARGIN),
        body: norm_bounds,
    },
    Check {
        name: "oprep.identity_representation",
        statement: "Op^{(Ψ,Ψ̃)}(I) = Op^{(Ψ̃,Ψ)}(I) = I",
        threshold: Threshold::EqRel,
        body: identity_representation,
    },
    Check {
        name: "oprep.rank_one_expansion",
        statement: "Σ M_{k,j} ⟨·,ψ_j⟩φ_k = D_Φ M C_Ψ",
        threshold: Threshold::EqRel,
        body: rank_one_expansion_check,
    },
    Check {
        name: "oprep.composition",
        statement: "Mat^{(Φ,Ψ)}(O∘P) = Mat^{(Φ,Ξ)}(O) · Mat^{(Ξ̃,Ψ)}(P) for any frame Ξ",
        threshold: Threshold::EqRel,
        body: composition,
    },
    Check {
        name: "oprep.representability",
        statement: "matrices of operators are representable with a reproducing witness; out-of-range perturbations are not; both criteria agree",
        threshold: Threshold::EqRel,
        body: representability,
    },
    Check {
        name: "oprep.projector_identity",
        statement: "the reported sandwich residual equals ‖Π_Φ M Π_Ψ − M‖ with independently computed projectors",
        threshold: Threshold::EqRel,
        body: projector_identity,
    },
    Check {
        name: "oprep.jectivity_agreement",
        statement: "injectivity and surjectivity of Op(M) read from Π_Φ M on range(C_Ψ) match direct rank tests and those of O",
        threshold: Threshold::EqRel,
        body: jectivity_agreement,
    },
    Check {
        name: "oprep.inverse_coherence",
        statement: "the three inverse formulas agree and invert Op(M); over the duals they return O⁻¹",
        threshold: Threshold::Fixed(INVERSE_TOL),
        body: inverse_coherence,
    },
    Check {
        name: "oprep.pseudo_inverse_coherence",
        statement: "the three formulas for M† agree and equal pinv(Π_Φ M Π_Ψ)",
        threshold: Threshold::Fixed(INVERSE_TOL),
        body: pseudo_inverse_coherence,
    },
    Check {
        name: "oprep.riesz_equivalence",
        statement: "for Riesz bases M is bijective iff Op(M) is; for redundant frames C_Φ̃D_Ψ̃ synthesizes I without being bijective",
        threshold: Threshold::EqRel,
        body: riesz_equivalence,
    },
    Check {
        name: "oprep.decomposition_riesz",
        statement: "Op(M1·M2) = Op(M1) ∘ Op(M2) through a Riesz basis Ξ",
        threshold: Threshold::Fixed(GAP_TOL),
        body: decomposition_riesz,
    },
    Check {
        name: "oprep.decomposition_condition_a",
        statement: "the factorization holds when M2 maps range(C_Ψ) into range(C_Ξ)",
        threshold: Threshold::Fixed(GAP_TOL),
        body: decomposition_condition_a,
    },
    Check {
        name: "oprep.decomposition_condition_b",
        statement: "the factorization holds when ker(D_Φ M1)^⊥ lies in range(C_Ξ)",
        threshold: Threshold::Fixed(GAP_TOL),
        body: decomposition_condition_b,
    },
    Check {
        name: "oprep.decomposition_counterexample",
        statement: "every redundant Ξ admits M1, M2 whose factored product vanishes while Op(M1·M2) does not; Riesz Ξ admits none",
        threshold: Threshold::EqRel,
        body: decomposition_counterexample_check,
    },
    Check {
        name: "oprep.decomposition_implications",
        statement: "Riesz Ξ, condition (a) and condition (b) each imply the factorization on random instances",
        threshold: Threshold::Fixed(GAP_TOL),
        body: decomposition_implications,
    },
    Check {
        name: "oprep.decomposition_pair_variant",
        statement: "with a non-canonical dual pair the factorization holds when C_{Ξ¹}D_{Ξ²} fixes the relevant subspace",
        threshold: Threshold::Fixed(GAP_TOL),
        body: decomposition_pair_variant,
    },
    Check {
        name: "oprep.multiplier",
        statement: "D_Φ diag(m) C_Ψ = Σ m_k ⟨·,ψ_k⟩φ_k; constant symbol 1 gives S_Ψ, and I over a dual pair",
        threshold: Threshold::EqRel,
        body: multiplier_check,
    },
    Check {
        name: "solver.dense_agreement",
        statement: "the frame-Galerkin solution matches a dense LU solve",
        threshold: Threshold::Fixed(INVERSE_TOL),
        body: solver_dense_agreement,
    },
    Check {
        name: "solver.dual_invariance",
        statement: "solving over the canonical duals gives the same solution",
        threshold: Threshold::EqRel,
        body: solver_dual_invariance,
    },
];

fn sq_norm(v: &[C64]) -> f64 {
    let n = norm(v);
    n * n
}

fn projector(f: &Fixture) -> Result<Matrix> {
    gram(&f.frame, &f.dual)
}

fn frame_inequality(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    let samples = 10 * ctx.config.trials;
    for fx in ctx.all_frames() {
        let f = &fx.frame;
        let b = f.bounds();
        let c = f.analysis_matrix();
        let mut worst = 0.0f64;
        for _ in 0..samples {
            let x = unit_vector(r, f.dim());
            let e = sq_norm(&c.mul_vec(&x));
            worst = worst.max((b.lower - e) / b.upper).max((e - b.upper) / b.upper);
        }
        let eig = HermitianEigen::new(&f.frame_operator());
        let low = sq_norm(&c.mul_vec(&eig.vectors.column(0)));
        let high = sq_norm(&c.mul_vec(&eig.vectors.column(f.dim() - 1)));
        worst = worst
            .max((low - b.lower).abs() / b.upper)
            .max((high - b.upper).abs() / b.upper);
        t.record(Ok((worst.max(0.0), true)));
    }
}

fn dual_bounds(ctx: &Context<'_>, t: &mut Tally, _: &mut SeededRng) {
    for fx in ctx.all_frames() {
        let b = fx.frame.bounds();
        let d = fx.dual.bounds();
        let res = (d.lower * b.upper - 1.0).abs().max((d.upper * b.lower - 1.0).abs());
        t.record(Ok((res, true)));
    }
}

fn reconstruction(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for fx in ctx.all_frames() {
        let (f, dual) = (&fx.frame, &fx.dual);
        for _ in 0..ctx.config.trials {
            let x = complex_normal_vec(r, f.dim());
            let a = f.synthesis_matrix().mul_vec(&dual.analysis_matrix().mul_vec(&x));
            let b = dual.synthesis_matrix().mul_vec(&f.analysis_matrix().mul_vec(&x));
            t.record(Ok((rel_diff_vec(&a, &x).max(rel_diff_vec(&b, &x)), true)));
        }
    }
}

fn adjointness(ctx: &Context<'_>, t: &mut Tally, _: &mut SeededRng) {
    for fx in ctx.all_frames() {
        let f = &fx.frame;
        let d = f.synthesis_matrix();
        let c = f.analysis_matrix();
        let upper = f.bounds().upper;
        let (sd, sc) = (op_norm(d), op_norm(&c));
        let res = rel_diff(&c, &d.adjoint())
            .max((sd - sc).abs() / sd)
            .max((sd * sd - upper).abs() / upper);
        t.record(Ok((res, sd <= libm::sqrt(upper) * (1.0 + NORM_MARGIN))));
    }
}

fn dual_involution(ctx: &Context<'_>, t: &mut Tally, _: &mut SeededRng) {
    for fx in ctx.all_frames() {
        let back = fx.dual.canonical_dual();
        t.record(Ok((rel_diff(back.synthesis_matrix(), fx.frame.synthesis_matrix()), true)));
    }
}

fn gram_projection(ctx: &Context<'_>, t: &mut Tally, _: &mut SeededRng) {
    for fx in ctx.all_frames() {
        let outcome = (|| {
            let g1 = gram(&fx.frame, &fx.dual)?;
            let g2 = gram(&fx.dual, &fx.frame)?;
            let p = projector_onto_range(&fx.frame.analysis_matrix(), ctx.tol);
            let res = rel_diff(&g1, &g2.adjoint()).max(rel_diff(&g1, &p)).max(rel_diff(&g2, &p));
            Ok((res, true))
        })();
        t.record(outcome);
    }
}

fn riesz_consistency(ctx: &Context<'_>, t: &mut Tally, _: &mut SeededRng) {
    for fx in ctx.all_frames() {
        let f = &fx.frame;
        let rep = f.is_riesz_basis(ctx.tol);
        let ok = rep.is_consistent() && rep.is_riesz == (f.len() == f.dim());
        let res = if rep.is_riesz { rep.max_residual } else { 0.0 };
        t.record(Ok((res, ok)));
    }
}

/// `Mat`, or its conjugation-free corruption when the suite is mutated.
fn mat(ctx: &Context<'_>, op: &Matrix, row: &Frame, col: &Frame) -> Result<Matrix> {
    if ctx.config.corrupt_mat_convention {
        Ok(&(&row.synthesis_matrix().transpose() * op) * col.synthesis_matrix())
    } else {
        matrix_rep(op, row, col)
    }
}

fn reconstruction_identity(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, psi) in ctx.operator_pairs() {
        let o = complex_normal_matrix(r, phi.frame.dim(), psi.frame.dim());
        let outcome = (|| {
            let a = operator_synth(&mat(ctx, &o, &phi.dual, &psi.dual)?, &phi.frame, &psi.frame)?;
            let b = operator_synth(&mat(ctx, &o, &phi.frame, &psi.frame)?, &phi.dual, &psi.dual)?;
            Ok((rel_diff(&a, &o).max(rel_diff(&b, &o)), true))
        })();
        t.record(outcome);
    }
}

fn mat_injectivity(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, psi) in ctx.operator_pairs() {
        let (d2, d1) = (phi.frame.dim(), psi.frame.dim());
        let o1 = complex_normal_matrix(r, d2, d1);
        let o2 = complex_normal_matrix(r, d2, d1);
        let outcome = (|| {
            let delta = &matrix_rep(&o1, &phi.frame, &psi.frame)? - &matrix_rep(&o2, &phi.frame, &psi.frame)?;
            let lower = libm::sqrt(phi.frame.bounds().lower * psi.frame.bounds().lower);
            let mat_norm = op_norm(&delta);
            let ratio = op_norm(&(&o1 - &o2)) * lower / mat_norm;
            Ok(((ratio - 1.0).max(0.0), mat_norm > 0.0))
        })();
        t.record(outcome);
    }
}

fn op_surjectivity(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, psi) in ctx.operator_pairs() {
        let o = complex_normal_matrix(r, phi.frame.dim(), psi.frame.dim());
        let outcome = (|| {
            let m = matrix_rep(&o, &phi.dual, &psi.dual)?;
            let back = operator_synth(&m, &phi.frame, &psi.frame)?;
            let rep = is_representable(&m, &phi.dual, &psi.dual, ctx.tol)?;
            Ok((rel_diff(&back, &o), rep.representable))
        })();
        t.record(outcome);
    }
}

fn norm_bounds(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, psi) in ctx.operator_pairs() {
        let scale = libm::sqrt(phi.frame.bounds().upper * psi.frame.bounds().upper);
        let o = complex_normal_matrix(r, phi.frame.dim(), psi.frame.dim());
        let m = complex_normal_matrix(r, phi.frame.len(), psi.frame.len());
        let outcome = (|| {
            let r1 = op_norm(&matrix_rep(&o, &phi.frame, &psi.frame)?) / (scale * op_norm(&o));
            let r2 = op_norm(&operator_synth(&m, &phi.frame, &psi.frame)?) / (scale * op_norm(&m));
            Ok(((r1.max(r2) - 1.0).max(0.0), true))
        })();
        t.record(outcome);
    }
}

fn identity_representation(ctx: &Context<'_>, t: &mut Tally, _: &mut SeededRng) {
    for fx in ctx.all_frames() {
        let outcome = (|| {
            let id_n = Matrix::identity(fx.frame.len());
            let id_d = Matrix::identity(fx.frame.dim());
            let a = operator_synth(&id_n, &fx.frame, &fx.dual)?;
            let b = operator_synth(&id_n, &fx.dual, &fx.frame)?;
            Ok((rel_diff(&a, &id_d).max(rel_diff(&b, &id_d)), true))
        })();
        t.record(outcome);
    }
}

fn rank_one_expansion_check(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, psi) in ctx.operator_pairs() {
        let m = complex_normal_matrix(r, phi.frame.len(), psi.frame.len());
        let outcome = (|| {
            let a = rank_one_expansion(&m, &phi.frame, &psi.frame)?;
            let b = operator_synth(&m, &phi.frame, &psi.frame)?;
            Ok((rel_diff(&a, &b), true))
        })();
        t.record(outcome);
    }
}

fn composition(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, xi, psi) in ctx.triples() {
        let (d3, d2, d1) = (phi.frame.dim(), xi.frame.dim(), psi.frame.dim());
        let o = complex_normal_matrix(r, d3, d2);
        let p = complex_normal_matrix(r, d2, d1);
        let outcome = (|| {
            let left = matrix_rep(&o, &phi.frame, &xi.frame)?;
            let right = matrix_rep(&p, &xi.dual, &psi.frame)?;
            let direct = matrix_rep(&(&o * &p), &phi.frame, &psi.frame)?;
            let res = rel_diff(&(&left * &right), &direct);
            let ok = compose_rep(&o, &p, &phi.frame, &xi.frame, &psi.frame, ctx.tol).is_ok();
            Ok((res, ok))
        })();
        t.record(outcome);
    }
}

fn representability(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, psi) in ctx.operator_pairs() {
        let o = complex_normal_matrix(r, phi.frame.dim(), psi.frame.dim());
        let (n_row, n_col) = (phi.frame.len(), psi.frame.len());
        let noise = complex_normal_matrix(r, n_row, n_col);
        let outcome = (|| {
            let m = matrix_rep(&o, &phi.frame, &psi.frame)?;
            let rep = is_representable(&m, &phi.frame, &psi.frame, ctx.tol)?;
            let witness_res = match (&rep.witness_operator, rep.witness_residual) {
                (Some(w), Some(wr)) => wr.max(rel_diff(w, &o)),
                _ => f64::INFINITY,
            };
            Ok((witness_res, rep.representable && rep.is_consistent()))
        })();
        t.record(outcome);

        let perturbations = [
            (!phi.riesz).then(|| projector(phi).map(|p| &(&Matrix::identity(n_row) - &p) * &noise)),
            (!psi.riesz).then(|| projector(psi).map(|p| &noise * &(&Matrix::identity(n_col) - &p))),
        ];
        for pert in perturbations.into_iter().flatten() {
            let outcome = (|| {
                let pert = pert?;
                let m = &matrix_rep(&o, &phi.frame, &psi.frame)? + &pert;
                let rep = is_representable(&m, &phi.frame, &psi.frame, ctx.tol)?;
                Ok((0.0, !rep.representable && rep.is_consistent() && rep.witness_operator.is_none()))
            })();
            t.record(outcome);
        }
    }
}

fn projector_identity(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, psi) in ctx.operator_pairs() {
        let o = complex_normal_matrix(r, phi.frame.dim(), psi.frame.dim());
        let noise = complex_normal_matrix(r, phi.frame.len(), psi.frame.len());
        let p_row = projector_onto_range(&phi.frame.analysis_matrix(), ctx.tol);
        let p_col = projector_onto_range(&psi.frame.analysis_matrix(), ctx.tol);
        let outcome = (|| {
            let rep_m = matrix_rep(&o, &phi.frame, &psi.frame)?;
            let mut worst = 0.0f64;
            for m in [&rep_m + &noise, rep_m] {
                let rep = is_representable(&m, &phi.frame, &psi.frame, ctx.tol)?;
                let direct = (&(&(&p_row * &m) * &p_col) - &m).frobenius_norm();
                worst = worst.max((rep.sandwich_residual - direct).abs() / m.frobenius_norm().max(1.0));
            }
            Ok((worst, true))
        })();
        t.record(outcome);
    }
}

fn jectivity_agreement(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, psi) in ctx.operator_pairs() {
        let (d2, d1) = (phi.frame.dim(), psi.frame.dim());
        let full = complex_normal_matrix(r, d2, d1);
        let x = complex_normal_vec(r, d2);
        let y = complex_normal_vec(r, d1);
        let rank_one = &Matrix::column_vector(&x) * &Matrix::column_vector(&y).adjoint();
        for o in [full, rank_one, Matrix::zeros(d2, d1)] {
            let outcome = (|| {
                let m = matrix_rep(&o, &phi.frame, &psi.frame)?;
                let rep = op_properties_from_matrix(&m, &phi.frame, &psi.frame, ctx.tol)?;
                let rank = rank_of(&o, ctx.tol);
                let ok = rep.agrees_with_direct
                    && rep.injective == (rank == d1)
                    && rep.surjective == (rank == d2)
                    && rep.bijective == (rep.injective && rep.surjective);
                Ok((0.0, ok))
            })();
            t.record(outcome);
        }
        let m = complex_normal_matrix(r, phi.frame.len(), psi.frame.len());
        let outcome = op_properties_from_matrix(&m, &phi.frame, &psi.frame, ctx.tol)
            .map(|rep| (0.0, rep.agrees_with_direct));
        t.record(outcome);
    }
}

fn inverse_coherence(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, psi) in ctx.square_pairs() {
        let d = phi.frame.dim();
        let o = well_conditioned(r, d);
        let outcome = (|| {
            let id = Matrix::identity(d);
            let m = matrix_rep(&o, &phi.frame, &psi.frame)?;
            let direct = inverse_candidates(&m, &phi.frame, &psi.frame, ctx.tol)?;
            let synthesized = operator_synth(&m, &phi.frame, &psi.frame)?;
            let dual = inverse_candidates(&m, &phi.dual, &psi.dual, ctx.tol)?;
            let res = direct
                .max_pairwise_gap()
                .max(dual.max_pairwise_gap())
                .max(rel_diff(&(&direct.dual_frames * &synthesized), &id))
                .max(rel_diff(&(&dual.dual_frames * &o), &id));
            Ok((res, true))
        })();
        t.record(outcome);
    }
}

fn pseudo_inverse_coherence(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, psi) in ctx.square_pairs() {
        let o = well_conditioned(r, phi.frame.dim());
        let outcome = (|| {
            let cands = pseudo_inverse_candidates(&o, &phi.frame, &psi.frame, ctx.tol)?;
            let m = matrix_rep(&o, &phi.frame, &psi.frame)?;
            let p_row = projector_onto_range(&phi.frame.analysis_matrix(), ctx.tol);
            let p_col = projector_onto_range(&psi.frame.analysis_matrix(), ctx.tol);
            let oracle = pinv(&(&(&p_row * &m) * &p_col), ctx.tol);
            let restricted = restricted_pinv(&m, &phi.frame, &psi.frame, ctx.tol)?;
            let res = cands
                .max_pairwise_gap()
                .max(rel_diff(&cands.dual_frames, &oracle))
                .max(rel_diff(&restricted, &oracle));
            Ok((res, true))
        })();
        t.record(outcome);
    }
}

fn riesz_equivalence(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, psi) in ctx.square_pairs() {
        let seed: u64 = r.random();
        let outcome = riesz_equivalence_check(&phi.frame, &psi.frame, ctx.tol, ctx.config.trials, seed).map(|rep| {
            let res = rep.witness.as_ref().map_or(0.0, |w| w.op_residual);
            let expected_riesz = phi.riesz && psi.riesz;
            let witness_ok = rep.witness.as_ref().map_or(expected_riesz, |w| w.rank == phi.frame.dim());
            (res, rep.confirmed && rep.both_riesz == expected_riesz && witness_ok)
        });
        t.record(outcome);
    }
}

fn random_factors(r: &mut SeededRng, phi: &Fixture, xi: &Fixture, psi: &Fixture) -> (Matrix, Matrix) {
    let m1 = complex_normal_matrix(r, phi.frame.len(), xi.frame.len());
    let m2 = complex_normal_matrix(r, xi.frame.len(), psi.frame.len());
    (m1, m2)
}

fn decomposition_riesz(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, xi, psi) in ctx.triples().into_iter().filter(|(_, xi, _)| xi.riesz) {
        let (m1, m2) = random_factors(r, phi, xi, psi);
        let outcome = decompose_check(&m1, &m2, &phi.frame, MiddleFrames::Dual(&xi.frame), &psi.frame, ctx.tol)
            .map(|rep| (rep.relative_gap, rep.xi_is_riesz && rep.equality_holds && rep.implications_hold()));
        t.record(outcome);
    }
}

fn decomposition_condition_a(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, xi, psi) in ctx.triples().into_iter().filter(|(_, xi, _)| !xi.riesz) {
        let (m1, y) = random_factors(r, phi, xi, psi);
        let outcome = (|| {
            let m2 = &projector(xi)? * &y;
            let rep = decompose_check(&m1, &m2, &phi.frame, MiddleFrames::Dual(&xi.frame), &psi.frame, ctx.tol)?;
            Ok((rep.relative_gap, rep.cond_a && rep.equality_holds && rep.implications_hold()))
        })();
        t.record(outcome);
    }
}

fn decomposition_condition_b(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, xi, psi) in ctx.triples().into_iter().filter(|(_, xi, _)| !xi.riesz) {
        let (y, m2) = random_factors(r, phi, xi, psi);
        let outcome = (|| {
            let m1 = &y * &projector(xi)?;
            let rep = decompose_check(&m1, &m2, &phi.frame, MiddleFrames::Dual(&xi.frame), &psi.frame, ctx.tol)?;
            Ok((rep.relative_gap, rep.cond_b && rep.equality_holds && rep.implications_hold()))
        })();
        t.record(outcome);
    }
}

fn decomposition_counterexample_check(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, xi, psi) in ctx.triples() {
        let seed: u64 = r.random();
        let outcome = match decomposition_counterexample(&phi.frame, &xi.frame, &psi.frame, seed) {
            Err(Error::XiIsRiesz) => Ok((0.0, xi.riesz)),
            Err(e) => Err(e),
            Ok((m1, m2)) => (|| {
                let rep = decompose_check(&m1, &m2, &phi.frame, MiddleFrames::Dual(&xi.frame), &psi.frame, ctx.tol)?;
                let lhs = operator_synth(&(&m1 * &m2), &phi.frame, &psi.frame)?;
                let rhs = &operator_synth(&m1, &phi.frame, &xi.frame)? * &operator_synth(&m2, &xi.dual, &psi.frame)?;
                let ok = !xi.riesz
                    && !rep.equality_holds
                    && !rep.cond_a
                    && !rep.cond_b
                    && rep.relative_gap >= COUNTEREXAMPLE_MIN_GAP;
                Ok((rhs.frobenius_norm() / lhs.frobenius_norm(), ok))
            })(),
        };
        t.record(outcome);
    }
}

fn decomposition_implications(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, xi, psi) in ctx.triples() {
        let (m1, m2) = random_factors(r, phi, xi, psi);
        let zero_left = Matrix::zeros(phi.frame.len(), xi.frame.len());
        for (a, b) in [(&m1, &m2), (&zero_left, &m2)] {
            let outcome = decompose_check(a, b, &phi.frame, MiddleFrames::Dual(&xi.frame), &psi.frame, ctx.tol)
                .map(|rep| {
                    let any = rep.xi_is_riesz || rep.cond_a || rep.cond_b;
                    (if any { rep.relative_gap } else { 0.0 }, rep.implications_hold())
                });
            t.record(outcome);
        }
    }
}

/// A dual of `Ξ` other than the canonical one: `D_Ξ̃ + H (I − Π_Ξ)`.
fn alternate_dual(r: &mut SeededRng, xi: &Fixture, tol: crate::linalg::Tolerance) -> Result<Frame> {
    let (d, n) = (xi.frame.dim(), xi.frame.len());
    let h = complex_normal_matrix(r, d, n);
    let complement = &Matrix::identity(n) - &projector(xi)?;
    Frame::from_synthesis(xi.dual.synthesis_matrix() + &(&h * &complement), tol)
}

fn decomposition_pair_variant(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, xi, psi) in ctx.triples() {
        let (m1, m2) = random_factors(r, phi, xi, psi);
        let (y1, y2) = random_factors(r, phi, xi, psi);
        let outcome = (|| {
            let canonical = MiddleFrames::Pair {
                analysis: &xi.frame,
                synthesis: &xi.dual,
            };
            let pair = decompose_check(&m1, &m2, &phi.frame, canonical, &psi.frame, ctx.tol)?;
            let single = decompose_check(&m1, &m2, &phi.frame, MiddleFrames::Dual(&xi.frame), &psi.frame, ctx.tol)?;
            let mut res = (pair.gap - single.gap).abs() / single.gap.max(1.0);
            let mut ok = pair.implications_hold() && pair.xi_is_riesz == xi.riesz;
            if xi.riesz {
                return Ok((res, ok && pair.equality_holds));
            }

            let other = alternate_dual(r, xi, ctx.tol)?;
            let dual_res = rel_diff(
                &(other.synthesis_matrix() * &xi.frame.analysis_matrix()),
                &Matrix::identity(xi.frame.dim()),
            );
            let t_op = &xi.frame.analysis_matrix() * other.synthesis_matrix();
            let middle = MiddleFrames::Pair {
                analysis: &xi.frame,
                synthesis: &other,
            };
            let a = decompose_check(&m1, &(&t_op * &y2), &phi.frame, middle, &psi.frame, ctx.tol)?;
            let b = decompose_check(&(&y1 * &t_op), &m2, &phi.frame, middle, &psi.frame, ctx.tol)?;
            let generic = decompose_check(&m1, &m2, &phi.frame, middle, &psi.frame, ctx.tol)?;
            res = res.max(dual_res).max(a.relative_gap).max(b.relative_gap);
            ok = ok
                && a.cond_a
                && a.equality_holds
                && b.cond_b
                && b.equality_holds
                && !generic.xi_is_riesz
                && generic.implications_hold();
            Ok((res, ok))
        })();
        t.record(outcome);
    }
}

fn multiplier_check(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for fx in ctx.all_frames() {
        let (f, dual) = (&fx.frame, &fx.dual);
        let n = f.len();
        let symbol = complex_normal_vec(r, n);
        let outcome = (|| {
            let ones: Vec<C64> = alloc::vec![C64::new(1.0, 0.0); n];
            let id = multiplier(&ones, dual, f)?;
            let s = multiplier(&ones, f, f)?;
            let mut res = rel_diff(&id, &Matrix::identity(f.dim())).max(rel_diff(&s, &f.frame_operator()));
            for row in [f, dual] {
                let got = multiplier(&symbol, row, f)?;
                let mut expected = Matrix::zeros(f.dim(), f.dim());
                for (k, &m) in symbol.iter().enumerate() {
                    let (phi, psi) = (row.vector(k), f.vector(k));
                    for (a, &pa) in phi.iter().enumerate() {
                        for (b, &pb) in psi.iter().enumerate() {
                            expected[(a, b)] += m * pa * pb.conj();
                        }
                    }
                }
                res = res.max(rel_diff(&got, &expected));
            }
            Ok((res, true))
        })();
        t.record(outcome);
    }
}

fn solver_dense_agreement(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, psi) in ctx.square_pairs() {
        let o = well_conditioned(r, phi.frame.dim());
        let g = complex_normal_vec(r, phi.frame.dim());
        let outcome = solve(&o, &g, &phi.frame, &psi.frame, ctx.tol)
            .map(|rep| (rep.reference_gap.unwrap_or(f64::INFINITY), rep.well_conditioned));
        t.record(outcome);
    }
}

fn solver_dual_invariance(ctx: &Context<'_>, t: &mut Tally, r: &mut SeededRng) {
    for (phi, psi) in ctx.square_pairs() {
        let o = well_conditioned(r, phi.frame.dim());
        let g = complex_normal_vec(r, phi.frame.dim());
        let outcome = (|| {
            let a = solve(&o, &g, &phi.frame, &psi.frame, ctx.tol)?;
            let b = solve(&o, &g, &phi.dual, &psi.dual, ctx.tol)?;
            Ok((rel_diff_vec(&a.solution, &b.solution), true))
        })();
        t.record(outcome);
    }
}
