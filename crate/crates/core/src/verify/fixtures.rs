use alloc::vec::Vec;

use super::SuiteConfig;
use crate::frames::{Frame, FrameSpec};
use crate::linalg::{Matrix, Tolerance, C64};
use crate::random::{complex_normal_vec, random_unitary, rng, SeededRng};

/// Which frame families enter the fixture pool.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum FixtureScope {
    #[default]
    Full,
    OnbOnly,
}

pub(super) struct Fixture {
    pub frame: Frame,
    pub dual: Frame,
    pub riesz: bool,
}

/// Pool indices of the frames living on each space of one scenario.
pub(super) struct Scenario {
    pub domain: usize,
    pub codomain: usize,
    pub third: usize,
}

pub(super) struct Context<'a> {
    pub config: &'a SuiteConfig,
    pub tol: Tolerance,
    pub pools: Vec<Vec<Fixture>>,
    pub scenarios: Vec<Scenario>,
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn fnv1a(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn family(scope: FixtureScope, d: usize, n: usize) -> Vec<FrameSpec> {
    let mut specs = alloc::vec![FrameSpec::Onb { dim: d }];
    if scope == FixtureScope::OnbOnly {
        return specs;
    }
    specs.push(FrameSpec::PerturbedRiesz { dim: d, epsilon: 0.3 });
    specs.push(FrameSpec::Random { dim: d, len: n });
    specs.push(FrameSpec::Harmonic { dim: d, len: n });
    specs.push(FrameSpec::UnionOnb { dim: d, bases: 2 });
    if d <= 5 {
        specs.push(FrameSpec::Gabor {
            dim: d,
            time_step: 1,
            freq_step: 1,
        });
    }
    if d == 2 {
        specs.push(FrameSpec::Mercedes);
    }
    specs
}

impl<'a> Context<'a> {
    pub fn new(config: &'a SuiteConfig) -> Self {
        let tol = config.tolerance;
        let mut keys: Vec<(usize, usize)> = Vec::new();
        let mut pools = Vec::new();
        let mut index = |d: usize, n: usize, pools: &mut Vec<Vec<Fixture>>| {
            if let Some(i) = keys.iter().position(|&k| k == (d, n)) {
                return i;
            }
            let pool = family(config.scope, d, n)
                .iter()
                .enumerate()
                .filter_map(|(k, spec)| {
                    let seed = splitmix(config.seed ^ splitmix(((d * 1000 + n) * 16 + k) as u64));
                    let frame = spec.generate(seed).ok()?;
                    Some(Fixture {
                        dual: frame.canonical_dual(),
                        riesz: frame.is_riesz_basis(tol).is_riesz,
                        frame,
                    })
                })
                .collect();
            keys.push((d, n));
            pools.push(pool);
            keys.len() - 1
        };
        let scenarios = config
            .dims
            .iter()
            .zip(&config.frame_sizes)
            .map(|(&(d1, d2, d3), &n)| Scenario {
                domain: index(d1, n, &mut pools),
                codomain: index(d2, n, &mut pools),
                third: index(d3, n, &mut pools),
            })
            .collect();
        Context {
            config,
            tol,
            pools,
            scenarios,
        }
    }

    /// Independent generator for each check, so adding a check does not
    /// perturb the others.
    pub fn rng(&self, check: &str) -> SeededRng {
        rng(splitmix(self.config.seed ^ fnv1a(check)))
    }

    /// Number of instances to run over `pairs` combinations: every
    /// combination at least once and at least `trials` overall.
    pub fn instances(&self, pairs: usize) -> usize {
        if pairs == 0 {
            0
        } else {
            pairs.max(self.config.trials)
        }
    }

    pub fn all_frames(&self) -> impl Iterator<Item = &Fixture> {
        self.pools.iter().flatten()
    }

    /// `(codomain frame, domain frame)` pairs of each scenario, cycled to
    /// at least `trials` instances.
    pub fn operator_pairs(&self) -> Vec<(&Fixture, &Fixture)> {
        self.pairs(|s| (s.codomain, s.domain))
    }

    /// Pairs on the same space, as needed for inverses and the Riesz theorem.
    pub fn square_pairs(&self) -> Vec<(&Fixture, &Fixture)> {
        let mut out = Vec::new();
        for (i, pool) in self.pools.iter().enumerate() {
            if !self.scenarios.iter().any(|s| s.domain == i && s.codomain == i) {
                continue;
            }
            out.extend(self.cycle(pool, pool));
        }
        out
    }

    fn pairs(&self, pick: impl Fn(&Scenario) -> (usize, usize)) -> Vec<(&Fixture, &Fixture)> {
        let mut out = Vec::new();
        for s in &self.scenarios {
            let (a, b) = pick(s);
            out.extend(self.cycle(&self.pools[a], &self.pools[b]));
        }
        out
    }

    fn cycle<'p>(&self, left: &'p [Fixture], right: &'p [Fixture]) -> Vec<(&'p Fixture, &'p Fixture)> {
        let all: Vec<_> = left.iter().flat_map(|l| right.iter().map(move |r| (l, r))).collect();
        (0..self.instances(all.len())).map(|k| all[k % all.len()]).collect()
    }

    /// `(row Φ on the third space, middle Ξ on the codomain, column Ψ on the
    /// domain)` with every middle frame appearing at least once.
    pub fn triples(&self) -> Vec<(&Fixture, &Fixture, &Fixture)> {
        let mut out = Vec::new();
        for s in &self.scenarios {
            let (rows, mids, cols) = (&self.pools[s.third], &self.pools[s.codomain], &self.pools[s.domain]);
            if rows.is_empty() || mids.is_empty() || cols.is_empty() {
                continue;
            }
            for k in 0..self.instances(mids.len()) {
                out.push((&rows[(k + 1) % rows.len()], &mids[k % mids.len()], &cols[(k + 2) % cols.len()]));
            }
        }
        out
    }
}

/// `U diag(s) V*` with singular values drawn from `[0.5, 2]`.
pub(super) fn well_conditioned(r: &mut SeededRng, n: usize) -> Matrix {
    use rand::Rng;
    let u = random_unitary(r, n);
    let v = random_unitary(r, n);
    let s: Vec<C64> = (0..n).map(|_| C64::new(r.random_range(0.5..2.0), 0.0)).collect();
    &(&u * &Matrix::diagonal(&s)) * &v.adjoint()
}

pub(super) fn unit_vector(r: &mut SeededRng, n: usize) -> Vec<C64> {
    loop {
        let v = complex_normal_vec(r, n);
        let nv = crate::linalg::norm(&v);
        if nv > 1e-6 {
            return v.into_iter().map(|z| z / nv).collect();
        }
    }
}
