//! The teleportation protocol over a noisy three-qutrit hypergraph resource.
//!
//! Registers are ordered `(a, 0, 1, 2)`. The sender holds `a`, `0` and `1`
//! and measures them against four projectors; the receiver holds `2`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hypergraph::{
    canonical, hypergraph_state, input_state, StateParams, HYPERGRAPH_LABELS, INPUT_LABEL,
};
use crate::noise::{apply_channel, three_qutrit_channel, ChannelSpec};
use crate::tensor::{
    dagger, kron, omega_pow, overlap, partial_trace, ComplexMatrix, DensityMatrix, PureState,
};
use crate::tol;

pub const NUM_OUTCOMES: usize = 4;

/// Labels of the measured registers.
pub const MEASURED_LABELS: [&str; 3] = [INPUT_LABEL, "0", "1"];

/// Receiver register.
pub const RECEIVER_LABEL: &str = "2";

/// Four mutually orthogonal kets on `(a, 0, 1)` and their projectors. They
/// span a 4-dimensional subspace only; no completeness holds.
#[derive(Debug, Clone)]
pub struct MeasurementBasis {
    kets: Vec<PureState>,
    projectors: Vec<ComplexMatrix>,
}

impl MeasurementBasis {
    pub fn kets(&self) -> &[PureState] {
        &self.kets
    }

    pub fn projectors(&self) -> &[ComplexMatrix] {
        &self.projectors
    }
}

fn ghz_like(digits: [[usize; 3]; 3], twisted: bool) -> PureState {
    let mut amps = vec![Complex64::new(0.0, 0.0); 27];
    let norm = 1.0 / 3f64.sqrt();
    for (k, d) in digits.iter().enumerate() {
        let phase = if twisted { omega_pow(k) } else { omega_pow(0) };
        amps[d[0] * 9 + d[1] * 3 + d[2]] = phase * norm;
    }
    PureState::new(&MEASURED_LABELS, amps).expect("normalized by construction")
}

pub fn measurement_basis() -> MeasurementBasis {
    let diagonal = [[0, 0, 0], [1, 1, 1], [2, 2, 2]];
    let shifted = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
    let kets = vec![
        ghz_like(diagonal, false),
        ghz_like(diagonal, true),
        ghz_like(shifted, false),
        ghz_like(shifted, true),
    ];
    let projectors = kets.iter().map(PureState::projector).collect();
    MeasurementBasis { kets, projectors }
}

/// Receiver corrections, one per outcome, as real signed permutations.
#[derive(Debug, Clone)]
pub struct CorrectionSet {
    unitaries: Vec<ComplexMatrix>,
}

impl CorrectionSet {
    pub fn unitaries(&self) -> &[ComplexMatrix] {
        &self.unitaries
    }
}

pub fn corrections() -> CorrectionSet {
    let unitaries = vec![
        ComplexMatrix::identity(3),
        ComplexMatrix::from_real_rows(&[[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]]),
        ComplexMatrix::from_real_rows(&[[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]),
        ComplexMatrix::from_real_rows(&[[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]),
    ];
    CorrectionSet { unitaries }
}

#[derive(Debug, Clone)]
pub struct TeleportOutcome {
    /// `P_l = tr[M_l ρ]`.
    pub probabilities: [f64; NUM_OUTCOMES],
    /// Corrected receiver state per outcome; `None` when `P_l` is negligible.
    pub conditional_states: [Option<DensityMatrix>; NUM_OUTCOMES],
    /// `F_l = <φ|ρ̃_l|φ>`, unsquared.
    pub conditional_fidelities: [Option<f64>; NUM_OUTCOMES],
    /// `Σ P_l F_l`, not renormalized by `Σ P_l`.
    pub fidelity: f64,
}

impl TeleportOutcome {
    pub fn total_probability(&self) -> f64 {
        self.probabilities.iter().sum()
    }

    /// `Σ P_l ρ̃_l`, the probability-weighted receiver output.
    pub fn output_state(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(3, 3);
        for (p, rho) in self.probabilities.iter().zip(&self.conditional_states) {
            if let Some(rho) = rho {
                out = &out + &rho.matrix().scale_real(*p);
            }
        }
        out
    }
}

/// Runs the protocol for a canonical hypergraph (`1..=5`).
pub fn teleport(
    params: StateParams,
    hypergraph_index: usize,
    channel: &ChannelSpec,
) -> Result<TeleportOutcome> {
    let resource = hypergraph_state(&canonical(hypergraph_index)?).to_density();
    let noisy = apply_channel(&resource, &three_qutrit_channel(channel)?)?;
    teleport_through(&input_state(params), &noisy)
}

/// Aggregate fidelity only.
pub fn teleport_fidelity(
    params: StateParams,
    hypergraph_index: usize,
    channel: &ChannelSpec,
) -> Result<f64> {
    Ok(teleport(params, hypergraph_index, channel)?.fidelity)
}

/// Runs the measurement and correction steps for an arbitrary input qutrit
/// on `a` and an arbitrary resource on `(0, 1, 2)`.
pub fn teleport_through(phi: &PureState, resource: &DensityMatrix) -> Result<TeleportOutcome> {
    if phi.labels() != [INPUT_LABEL] {
        return Err(Error::Label(format!(
            "input must be the single register '{INPUT_LABEL}'"
        )));
    }
    if resource.labels() != HYPERGRAPH_LABELS {
        return Err(Error::Label(
            "resource must be on registers (0, 1, 2)".into(),
        ));
    }
    let joint = phi.to_density().tensor(resource)?;
    let basis = measurement_basis();
    let fixes = corrections();
    let id3 = ComplexMatrix::identity(3);

    let mut probabilities = [0.0; NUM_OUTCOMES];
    let mut conditional_states: [Option<DensityMatrix>; NUM_OUTCOMES] = Default::default();
    let mut conditional_fidelities = [None; NUM_OUTCOMES];
    let mut fidelity = 0.0;

    for l in 0..NUM_OUTCOMES {
        let m = kron(&basis.projectors()[l], &id3)?;
        let projected = &(&m * joint.matrix()) * &dagger(&m);
        let post = DensityMatrix::unnormalized(joint.labels(), projected)?;
        let receiver = partial_trace(&post, &MEASURED_LABELS)?;
        let p = receiver.trace();
        if p < -tol::ALGEBRAIC {
            return Err(Error::PsdViolation { value: p });
        }
        probabilities[l] = p.max(0.0);
        if p <= tol::ZERO_PROBABILITY {
            continue;
        }
        let normalized = receiver.normalize()?;
        let u = &fixes.unitaries()[l];
        let corrected =
            DensityMatrix::new(normalized.labels(), &(u * normalized.matrix()) * &dagger(u))?;
        let f = overlap(phi, &corrected)?;
        fidelity += p * f;
        conditional_fidelities[l] = Some(f);
        conditional_states[l] = Some(corrected);
    }

    Ok(TeleportOutcome {
        probabilities,
        conditional_states,
        conditional_fidelities,
        fidelity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noise::ChannelKind;

    fn flip(p: f64) -> ChannelSpec {
        ChannelSpec::with_defaults(ChannelKind::QutritFlip, p).unwrap()
    }

    #[test]
    fn basis_kets_are_orthonormal() {
        let b = measurement_basis();
        for (i, a) in b.kets().iter().enumerate() {
            for (j, c) in b.kets().iter().enumerate() {
                let ip = a.inner(c).unwrap();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((ip - Complex64::new(expect, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn projectors_are_orthogonal_rank_one() {
        let b = measurement_basis();
        let zero = ComplexMatrix::zeros(27, 27);
        for (i, m) in b.projectors().iter().enumerate() {
            assert!((m * m).max_abs_diff(m) < 1e-12);
            assert!(dagger(m).max_abs_diff(m) < 1e-12);
            for (j, n) in b.projectors().iter().enumerate() {
                if i != j {
                    assert!((m * n).max_abs_diff(&zero) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn fourth_projector_on_basis_ket() {
        let b = measurement_basis();
        let v = PureState::basis(&MEASURED_LABELS, &[0, 1, 2]).unwrap();
        let out = b.projectors()[3].apply(v.amplitudes()).unwrap();
        // |ψ4><ψ4|012> = (1/3)(|012> + ω|120> + ω²|201>).
        let third = 1.0 / 3.0;
        assert!((out[5] - Complex64::new(third, 0.0)).norm() < 1e-15);
        assert!((out[15] - omega_pow(1) * third).norm() < 1e-15);
        assert!((out[19] - omega_pow(2) * third).norm() < 1e-15);
        let rest: f64 = out
            .iter()
            .enumerate()
            .filter(|(i, _)| ![5, 15, 19].contains(i))
            .map(|(_, z)| z.norm())
            .sum();
        assert_eq!(rest, 0.0);
    }

    #[test]
    fn corrections_are_unitary() {
        for u in corrections().unitaries() {
            assert!((&dagger(u) * u).max_abs_diff(&ComplexMatrix::identity(3)) < 1e-14);
        }
    }

    // F·729 for the uniform-superposition input under qutrit-flip noise.
    #[test]
    fn plus_state_flip_values() {
        let table = [
            (1, [120.0, 127.5, 135.0]),
            (2, [84.0, 76.5, 69.0]),
            (3, [84.0, 73.5, 63.0]),
            (4, [78.0, 73.0, 68.0]),
            (5, [69.0, 59.5, 50.0]),
        ];
        for (h, values) in table {
            for (p, expect) in [0.0, 0.5, 1.0].into_iter().zip(values) {
                let f = teleport_fidelity(StateParams::plus(), h, &flip(p)).unwrap();
                assert!(
                    (f * 729.0 - expect).abs() < 1e-9,
                    "H{h} p={p}: {}",
                    f * 729.0
                );
            }
        }
    }

    #[test]
    fn receiver_output_diagonal_for_h5_flip() {
        let (t1, t2, p): (f64, f64, f64) = (0.7, 0.3, 0.4);
        let out = teleport(StateParams::new(t1, t2).unwrap(), 5, &flip(p))
            .unwrap()
            .output_state();
        let (s1, s21, st2, ct2) = (t1.sin(), (2.0 * t1).sin(), t2.sin(), t2.cos());
        let s22 = (2.0 * t2).sin();
        let r00 = (2.0 * (2.0 * p - 1.0) * s1 * s1 * s22
            + (4.0 - 3.0 * p) * s21 * st2
            + (3.0 * p - 2.0) * s21 * ct2
            + 16.0)
            / 324.0;
        let r11 = ((4.0 - 3.0 * p) * s1 * s1 * s22 - 2.0 * (p - 1.0) * s21 * (2.0 * ct2 - st2)
            + 16.0)
            / 324.0;
        let r22 = (2.0 * ((2.0 - 3.0 * p) * s1 * s1 * s22 + (2.0 - 3.0 * p) * s21 * st2 + 8.0)
            + (p - 2.0) * s21 * ct2)
            / 324.0;
        for (i, expect) in [r00, r11, r22].into_iter().enumerate() {
            assert!((out[(i, i)].re - expect).abs() < 1e-12, "entry {i}");
        }
        assert!((r00 - 0.0492856).abs() < 1e-7);
    }

    #[test]
    fn zero_input_is_hypergraph_independent() {
        let zero = StateParams::zero();
        for kind in ChannelKind::ALL {
            let spec = ChannelSpec::with_defaults(kind, 0.3).unwrap();
            let values: Vec<f64> = (1..=5)
                .map(|h| teleport_fidelity(zero, h, &spec).unwrap())
                .collect();
            for v in &values {
                assert!((v - values[0]).abs() < 1e-12, "{kind}: {values:?}");
            }
        }
        let f = teleport_fidelity(zero, 3, &flip(0.0)).unwrap();
        assert!((f - 36.0 / 729.0).abs() < 1e-14);
    }

    #[test]
    fn noiseless_limit_is_channel_independent() {
        let params = StateParams::new(1.1, 0.4).unwrap();
        for h in 1..=5 {
            let reference = teleport_fidelity(params, h, &flip(0.0)).unwrap();
            for kind in ChannelKind::ALL {
                let spec = ChannelSpec::with_defaults(kind, 0.0).unwrap();
                let f = teleport_fidelity(params, h, &spec).unwrap();
                assert!((f - reference).abs() < 1e-12, "{kind} H{h}");
            }
        }
    }

    #[test]
    fn outcome_invariants() {
        let params = StateParams::new(0.7, 0.3).unwrap();
        let spec = ChannelSpec::with_defaults(ChannelKind::Depolarizing, 0.4).unwrap();
        let out = teleport(params, 2, &spec).unwrap();
        assert!(out.total_probability() <= 1.0 + 1e-10);
        let mut sum = 0.0;
        for l in (0..4).rev() {
            assert!(out.probabilities[l] >= -1e-12);
            if out.probabilities[l] > 1e-10 {
                let rho = out.conditional_states[l].as_ref().unwrap();
                assert!((rho.trace() - 1.0).abs() < 1e-10);
                assert!(rho.min_eigenvalue().unwrap() >= -1e-10);
                let f = out.conditional_fidelities[l].unwrap();
                assert!((0.0..=1.0 + 1e-10).contains(&f));
                sum += out.probabilities[l] * f;
            }
        }
        assert!((sum - out.fidelity).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            teleport(StateParams::plus(), 6, &flip(0.1)),
            Err(Error::HypergraphIndex(6))
        ));
        let wrong = PureState::basis(&["b"], &[0]).unwrap();
        let res = hypergraph_state(&canonical(1).unwrap()).to_density();
        assert!(teleport_through(&wrong, &res).is_err());
    }
}
