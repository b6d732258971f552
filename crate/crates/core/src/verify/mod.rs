//! Re-checks every identity of the crate on generated fixtures.
//!
//! [`run_suite`] builds a pool of frames for each configured dimension,
//! draws operators and coefficient matrices from a seeded generator and
//! evaluates each check against an independent computation. Failures are
//! report entries, never errors. The same configuration always yields the
//! same report.

mod checks;
mod fixtures;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::Tolerance;

pub use fixtures::FixtureScope;

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SuiteConfig {
    pub seed: u64,
    /// `(d₁, d₂, d₃)`: domain, codomain and third space of each scenario.
    pub dims: Vec<(usize, usize, usize)>,
    /// Redundant frame length for each scenario, at least its largest dimension.
    pub frame_sizes: Vec<usize>,
    /// Minimum number of random instances per check and scenario.
    pub trials: usize,
    pub tolerance: Tolerance,
    pub scope: FixtureScope,
    /// Compute representations with transposes instead of adjoints. The
    /// reconstruction check must then fail.
    pub corrupt_mat_convention: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            dims: vec![(2, 2, 2), (3, 2, 4), (4, 4, 3), (6, 6, 5)],
            frame_sizes: vec![3, 6, 7, 10],
            trials: 10,
            tolerance: Tolerance::default(),
            scope: FixtureScope::Full,
            corrupt_mat_convention: false,
        }
    }
}

impl SuiteConfig {
    pub fn with_seed(seed: u64) -> Self {
        SuiteConfig {
            seed,
            ..SuiteConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        if self.dims.is_empty() {
            return bad("no dimensions given".into());
        }
        if self.dims.len() != self.frame_sizes.len() {
            return bad(format!(
                "{} dimension triples but {} frame sizes",
                self.dims.len(),
                self.frame_sizes.len()
            ));
        }
        for (&(d1, d2, d3), &n) in self.dims.iter().zip(&self.frame_sizes) {
            if d1 == 0 || d2 == 0 || d3 == 0 {
                return bad(format!("dimensions ({d1}, {d2}, {d3}) must be positive"));
            }
            if n < d1.max(d2).max(d3) {
                return bad(format!("frame size {n} is below a dimension of ({d1}, {d2}, {d3})"));
            }
        }
        Tolerance::new(self.tolerance.rank_rel, self.tolerance.eq_rel)?;
        Ok(())
    }
}

/// Outcome of one named check over all its fixtures.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CheckRecord {
    pub name: String,
    /// What the check asserts.
    pub statement: String,
    pub fixtures_run: usize,
    pub failures: usize,
    pub max_residual: f64,
    pub threshold: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SuiteReport {
    pub seed: u64,
    /// Sorted by name.
    pub checks: Vec<CheckRecord>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Names of all checks, in report order.
pub fn check_names() -> Vec<&'static str> {
    let mut names: Vec<_> = checks::CHECKS.iter().map(|c| c.name).collect();
    names.sort_unstable();
    names
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let ctx = fixtures::Context::new(config);
    let mut records: Vec<CheckRecord> = checks::CHECKS.iter().map(|c| c.run(&ctx)).collect();
    records.sort_by(|a, b| a.name.cmp(&b.name));
    let passed = records.iter().all(|r| r.passed);
    Ok(SuiteReport {
        seed: config.seed,
        checks: records,
        passed,
    })
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        writeln!(
            f,
            "{:<width$}  {:>8}  {:>8}  {:>12}  {:>10}  verdict",
            "check", "fixtures", "failures", "max_residual", "threshold"
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<width$}  {:>8}  {:>8}  {:>12.3e}  {:>10.1e}  {}",
                c.name,
                c.fixtures_run,
                c.failures,
                c.max_residual,
                c.threshold,
                if c.passed { "pass" } else { "FAIL" }
            )?;
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        write!(
            f,
            "seed {}: {}/{} checks passed",
            self.seed,
            ok,
            self.checks.len()
        )
    }
}
