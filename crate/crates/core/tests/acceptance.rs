//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `EXPECTED_FAILURES` are evaluated as stated and
//! reported as FAIL; the process exits non-zero if any other criterion fails
//! or if an expected failure starts passing.

use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use qutrit_teleport::hypergraph::{apply_gates, plus_plus_plus, GateKind, GateSpec};
use qutrit_teleport::noise::{
    apply_channel, kappa_raw, lambda_t, three_qutrit_channel, ChannelKind, ChannelSpec,
};
use qutrit_teleport::teleport::{corrections, measurement_basis};
use qutrit_teleport::tensor::{dagger, omega_pow, ComplexMatrix, PureState};
use qutrit_teleport::verify::{run_verify, DEFAULT_DRAWS, DEFAULT_SEED};
use qutrit_teleport::{
    canonical, hypergraph_state, teleport_fidelity, NonMarkovConstants, StateParams,
};

/// The short-form H5 value `(25/729)(13 - 3p)` disagrees with both the
/// simulation and the general H5 expression; see KNOWN_DEVIATIONS.md.
const EXPECTED_FAILURES: &[u32] = &[1];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn grid(start: f64, stop: f64, steps: usize) -> Vec<f64> {
    (0..steps)
        .map(|k| start + k as f64 * (stop - start) / (steps - 1) as f64)
        .collect()
}

fn params_for(kind: ChannelKind) -> Vec<f64> {
    match kind {
        ChannelKind::AmplitudeDampingNonMarkov => grid(0.0, 5.0, 21),
        _ => grid(0.0, 1.0, 11),
    }
}

/// Specs on the grid; non-Markovian dephasing points with κ outside [0, 1]
/// are rejected at construction and skipped.
fn grid_specs(kind: ChannelKind) -> Vec<ChannelSpec> {
    params_for(kind)
        .into_iter()
        .filter_map(|x| ChannelSpec::with_defaults(kind, x).ok())
        .collect()
}

fn flip(p: f64) -> ChannelSpec {
    ChannelSpec::with_defaults(ChannelKind::QutritFlip, p).unwrap()
}

fn short_form_h5() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut rows = Vec::new();
    for p in grid(0.0, 1.0, 11) {
        let f = teleport_fidelity(StateParams::plus(), 5, &flip(p)).unwrap();
        let expect = 25.0 / 729.0 * (13.0 - 3.0 * p);
        worst = worst.max((f - expect).abs());
        if p == 0.0 || p == 1.0 {
            rows.push(format!("p={p}: sim {:.6} vs {:.6}", f, expect));
        }
    }
    Outcome {
        passed: worst <= 1e-9,
        detail: format!("max |diff| {worst:.3e}; {}", rows.join(", ")),
    }
}

const GOLDEN: [&str; 5] = [
    "000000000000000000000000012",
    "000000012000000012000111201",
    "000000012001001010002110200",
    "000000012000000012000111210",
    "000000012001001010002110212",
];

fn max_phase_error(state: &PureState, table: &str) -> f64 {
    let amp = 1.0 / 27f64.sqrt();
    table
        .chars()
        .enumerate()
        .map(|(i, c)| {
            let k = c.to_digit(10).unwrap() as usize;
            (state.amplitudes()[i] - omega_pow(k) * amp).norm()
        })
        .fold(0.0, f64::max)
}

fn golden_tables() -> Outcome {
    let mut worst: f64 = 0.0;
    for (i, table) in GOLDEN.iter().enumerate() {
        worst = worst.max(max_phase_error(
            &hypergraph_state(&canonical(i + 1).unwrap()),
            table,
        ));
    }
    let ccz = GateSpec::new(GateKind::CCZ3, &[0, 1, 2]).unwrap();
    let cz = GateSpec::new(GateKind::CZ3, &[2, 0]).unwrap();
    let t1 = apply_gates(&plus_plus_plus(), &[ccz]).unwrap();
    let t2 = apply_gates(&t1, &[cz]).unwrap();
    worst = worst.max(max_phase_error(&t1, "000000000000000000000000012"));
    worst = worst.max(max_phase_error(&t2, "000000000001001001002002011"));
    Outcome {
        passed: worst <= 1e-12,
        detail: format!("7 tables, max amplitude error {worst:.3e}"),
    }
}

fn cptp_suite() -> Outcome {
    let states: Vec<_> = (1..=5)
        .map(|h| hypergraph_state(&canonical(h).unwrap()).to_density())
        .collect();
    let (mut completeness, mut trace, mut min_eig): (f64, f64, f64) = (0.0, 0.0, 0.0);
    let mut count = 0;
    let mut skipped = 0;
    for kind in ChannelKind::ALL {
        let specs = grid_specs(kind);
        skipped += params_for(kind).len() - specs.len();
        for spec in specs {
            let chan = three_qutrit_channel(&spec).unwrap();
            completeness = completeness.max(chan.completeness_deviation());
            for rho in &states {
                let out = apply_channel(rho, &chan).unwrap();
                trace = trace.max((out.trace() - 1.0).abs());
                min_eig = min_eig.min(out.min_eigenvalue().unwrap());
            }
            count += 1;
        }
    }
    Outcome {
        passed: completeness <= 1e-12 && trace <= 1e-10 && min_eig >= -1e-10,
        detail: format!(
            "{count} channels ({skipped} kappa-invalid points skipped): completeness {completeness:.1e}, trace {trace:.1e}, min eig {min_eig:.1e}"
        ),
    }
}

fn oracle_equivalence() -> Outcome {
    let report = run_verify(DEFAULT_SEED, DEFAULT_DRAWS, NonMarkovConstants::default()).unwrap();
    let worst = report
        .results
        .iter()
        .map(|r| r.max_abs_err)
        .fold(0.0, f64::max);
    let known = report.results.iter().filter(|r| r.known_deviation).count();
    let failed: Vec<String> = report.failures().map(|r| r.key.to_string()).collect();
    Outcome {
        passed: report.all_passed() && report.results.len() == 40,
        detail: format!(
            "{} keys x {} draws, max err {worst:.3e}, {known} with documented factor 10{}",
            report.results.len(),
            report.draws,
            if failed.is_empty() {
                String::new()
            } else {
                format!("; failing {}", failed.join(", "))
            }
        ),
    }
}

fn qualitative_flip() -> Outcome {
    let plus = StateParams::plus();
    let f = |h, p| teleport_fidelity(plus, h, &flip(p)).unwrap();
    let slopes: Vec<f64> = (1..=5).map(|h| f(h, 1.0) - f(h, 0.0)).collect();
    let slopes_ok = slopes[0] >= 0.0 && slopes[1..].iter().all(|&s| s <= 0.0);
    let mut dominance = true;
    for p in grid(0.0, 1.0, 11) {
        let h1 = f(1, p);
        dominance &= (2..=5).all(|h| h1 >= f(h, p));
    }
    Outcome {
        passed: slopes_ok && dominance,
        detail: format!(
            "slopes x729 {:?}; H1 dominant on grid: {dominance}",
            slopes
                .iter()
                .map(|s| (s * 729.0 * 10.0).round() / 10.0)
                .collect::<Vec<_>>()
        ),
    }
}

fn zero_universality() -> Outcome {
    let zero = StateParams::zero();
    let mut worst: f64 = 0.0;
    let mut points = 0;
    for kind in ChannelKind::ALL {
        for spec in grid_specs(kind) {
            let values: Vec<f64> = (1..=5)
                .map(|h| teleport_fidelity(zero, h, &spec).unwrap())
                .collect();
            let max = values.iter().cloned().fold(f64::MIN, f64::max);
            let min = values.iter().cloned().fold(f64::MAX, f64::min);
            worst = worst.max(max - min);
            points += 1;
        }
    }
    Outcome {
        passed: worst <= 1e-9,
        detail: format!("{points} channel points, max spread {worst:.3e}"),
    }
}

fn has_strict_extremum(values: &[f64]) -> bool {
    values
        .windows(3)
        .any(|w| (w[1] > w[0] && w[1] > w[2]) || (w[1] < w[0] && w[1] < w[2]))
}

fn non_markov_signatures() -> Outcome {
    let lambda: Vec<f64> = grid(0.0, 5.0, 200)
        .into_iter()
        .map(|t| lambda_t(t, 1.0, 10.0).unwrap())
        .collect();
    let kappa: Vec<f64> = grid(0.0, 1.0, 200)
        .into_iter()
        .map(|p| kappa_raw(p, 0.5, 100.0))
        .collect();
    let (l, k) = (has_strict_extremum(&lambda), has_strict_extremum(&kappa));
    Outcome {
        passed: l && k,
        detail: format!("lambda non-monotone: {l}, kappa non-monotone: {k}"),
    }
}

fn basis_algebra() -> Outcome {
    let basis = measurement_basis();
    let mut ortho: f64 = 0.0;
    for (i, a) in basis.kets().iter().enumerate() {
        for (j, b) in basis.kets().iter().enumerate() {
            let expect = Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0);
            ortho = ortho.max((a.inner(b).unwrap() - expect).norm());
        }
    }
    let id = ComplexMatrix::identity(3);
    let unitary = corrections()
        .unitaries()
        .iter()
        .map(|u| (&dagger(u) * u).max_abs_diff(&id))
        .fold(0.0, f64::max);
    Outcome {
        passed: ortho <= 1e-12 && unitary <= 1e-14,
        detail: format!("orthonormality {ortho:.1e}, unitarity {unitary:.1e}"),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            1,
            "H5 short form (25/729)(13-3p) under qutrit flip",
            short_form_h5,
        ),
        (2, "hypergraph golden state tables", golden_tables),
        (3, "CPTP completeness, trace and PSD", cptp_suite),
        (4, "closed form vs simulation, 40 keys", oracle_equivalence),
        (
            5,
            "qutrit-flip monotonicity and H1 dominance",
            qualitative_flip,
        ),
        (
            6,
            "|0> teleports equally through every hypergraph",
            zero_universality,
        ),
        (
            7,
            "non-Markovian lambda(t) and kappa(p) oscillate",
            non_markov_signatures,
        ),
        (
            8,
            "measurement kets orthonormal, corrections unitary",
            basis_algebra,
        ),
    ];

    let mut unexpected = Vec::new();
    for (id, name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed().as_secs_f64();
        let expected_fail = EXPECTED_FAILURES.contains(&id);
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        let note = if expected_fail && !outcome.passed {
            " [documented]"
        } else {
            ""
        };
        println!(
            "criterion {id}: {tag}{note} {name} ({elapsed:.2}s) {}",
            outcome.detail
        );
        if outcome.passed == expected_fail {
            unexpected.push(id);
        }
    }

    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected results for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
