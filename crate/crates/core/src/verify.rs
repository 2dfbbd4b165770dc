//! Cross-check of every catalog expression against simulation.

use std::f64::consts::PI;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closed_form::{formula_catalog, known_deviation, reconciled_fidelity, FormulaKey};
use crate::error::Result;
use crate::hypergraph::StateParams;
use crate::noise::{kappa_p, ChannelKind, ChannelSpec, NonMarkovConstants};
use crate::teleport::teleport_fidelity;
use crate::tol;

pub const DEFAULT_SEED: u64 = 20240917;
pub const DEFAULT_DRAWS: usize = 20;

/// Upper end of the time draws for non-Markovian damping.
pub const MAX_TIME: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Draw {
    pub state: StateParams,
    pub param: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KeyResult {
    pub key: FormulaKey,
    pub max_abs_err: f64,
    /// Inputs at which the largest error occurred.
    pub worst: Draw,
    pub known_deviation: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub seed: u64,
    pub draws: usize,
    pub results: Vec<KeyResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &KeyResult> {
        self.results.iter().filter(|r| !r.passed)
    }

    /// Fixed-format text, identical for identical seeds.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "seed {} draws {} tolerance {:e}",
            self.seed,
            self.draws,
            tol::ORACLE
        );
        for r in &self.results {
            let _ = writeln!(
                out,
                "{:<32} max_abs_err {:.3e} {}{}",
                r.key.to_string(),
                r.max_abs_err,
                if r.passed { "ok" } else { "FAIL" },
                if r.known_deviation {
                    " (known deviation, factor removed)"
                } else {
                    ""
                },
            );
        }
        for r in self.failures() {
            let _ = writeln!(
                out,
                "failure {}: theta1={:.17} theta2={:.17} {}={:.17}",
                r.key,
                r.worst.state.theta1,
                r.worst.state.theta2,
                r.key.kind.param_name(),
                r.worst.param,
            );
        }
        let passed = self.results.iter().filter(|r| r.passed).count();
        let _ = writeln!(out, "{passed}/{} keys within tolerance", self.results.len());
        out
    }
}

/// Draws `(θ1, θ2, param)`; for non-Markovian dephasing `p` is redrawn until
/// `κ(p)` is a valid probability.
fn draw(rng: &mut ChaCha8Rng, kind: ChannelKind, constants: NonMarkovConstants) -> Draw {
    let state = StateParams {
        theta1: rng.random_range(0.0..PI),
        theta2: rng.random_range(0.0..2.0 * PI),
    };
    let param = match kind {
        ChannelKind::AmplitudeDampingNonMarkov => rng.random_range(0.0..MAX_TIME),
        ChannelKind::DephasingNonMarkov => loop {
            let p = rng.random_range(0.0..1.0);
            if kappa_p(p, constants.eta, constants.beta).is_ok() {
                break p;
            }
        },
        _ => rng.random_range(0.0..1.0),
    };
    Draw { state, param }
}

/// Compares `closed` against simulation on `draws` seeded inputs per key.
/// `closed` is normally [`reconciled_fidelity`]; tests substitute a
/// corrupted version.
pub fn verify_with<F>(
    seed: u64,
    draws: usize,
    constants: NonMarkovConstants,
    closed: F,
) -> Result<VerifyReport>
where
    F: Fn(FormulaKey, StateParams, f64, NonMarkovConstants) -> Result<f64>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut results = Vec::new();
    for entry in formula_catalog() {
        let key = entry.key;
        let mut max_abs_err = 0.0;
        let mut worst = None;
        for _ in 0..draws {
            let d = draw(&mut rng, key.kind, constants);
            let spec = ChannelSpec::new(key.kind, d.param, constants)?;
            let sim = teleport_fidelity(d.state, key.hypergraph, &spec)?;
            let err = (closed(key, d.state, d.param, constants)? - sim).abs();
            if worst.is_none() || err > max_abs_err || err.is_nan() {
                max_abs_err = err;
                worst = Some(d);
            }
        }
        let worst = worst.unwrap_or(Draw {
            state: StateParams::zero(),
            param: 0.0,
        });
        results.push(KeyResult {
            key,
            max_abs_err,
            worst,
            known_deviation: known_deviation(key).is_some(),
            passed: max_abs_err <= tol::ORACLE,
        });
    }
    Ok(VerifyReport {
        seed,
        draws,
        results,
    })
}

pub fn run_verify(seed: u64, draws: usize, constants: NonMarkovConstants) -> Result<VerifyReport> {
    verify_with(seed, draws, constants, reconciled_fidelity)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupted_expression_is_named() {
        let target = FormulaKey::new(ChannelKind::QutritPhaseFlip, 3).unwrap();
        let report = verify_with(
            DEFAULT_SEED,
            3,
            NonMarkovConstants::default(),
            |k, s, p, c| {
                let v = reconciled_fidelity(k, s, p, c)?;
                Ok(if k == target { v * 1.001 } else { v })
            },
        )
        .unwrap();
        let failed: Vec<_> = report.failures().map(|r| r.key).collect();
        assert_eq!(failed, vec![target]);
        assert!(report.render().contains("failure qutrit-phase-flip/H3"));
    }

    #[test]
    fn report_is_deterministic() {
        let a = run_verify(7, 2, NonMarkovConstants::default())
            .unwrap()
            .render();
        let b = run_verify(7, 2, NonMarkovConstants::default())
            .unwrap()
            .render();
        assert_eq!(a, b);
    }
}
