//! Weyl operators, single-qutrit Kraus families and their three-qutrit lift.
//!
//! Every single-qutrit family is normalized to `Σ K†K = I/3`. The lift places
//! each operator on one of the three sites with identities elsewhere, so the
//! lifted channel is a uniform mixture over "noise hits site j".

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tensor::{dagger, kron, omega_pow, ComplexMatrix, DensityMatrix, QUTRIT_DIM};
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylIndex {
    r: usize,
    s: usize,
}

impl WeylIndex {
    pub fn new(r: usize, s: usize) -> Result<Self> {
        if r >= QUTRIT_DIM || s >= QUTRIT_DIM {
            return Err(Error::Parameter(format!(
                "Weyl index ({r}, {s}) out of range"
            )));
        }
        Ok(Self { r, s })
    }

    pub fn r(self) -> usize {
        self.r
    }

    pub fn s(self) -> usize {
        self.s
    }

    /// All nine indices, `(0,0)` first, then row-major in `(r, s)`.
    pub fn all() -> impl Iterator<Item = WeylIndex> {
        (0..QUTRIT_DIM).flat_map(|r| (0..QUTRIT_DIM).map(move |s| WeylIndex { r, s }))
    }

    /// The eight indices other than `(0,0)`.
    pub fn non_identity() -> impl Iterator<Item = WeylIndex> {
        Self::all().skip(1)
    }
}

/// `W_{r,s} = Σ_i ω^{ir} |i><i⊕s|`.
pub fn weyl(idx: WeylIndex) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(QUTRIT_DIM, QUTRIT_DIM);
    for i in 0..QUTRIT_DIM {
        m[(i, (i + idx.s) % QUTRIT_DIM)] = omega_pow(i * idx.r);
    }
    m
}

/// Effective damping strength of the non-Markovian amplitude-damping
/// channel, `1 - e^{-gt} ((g/l) sinh(lt/2) + cosh(lt/2))^2` with
/// `l = sqrt(g^2 - 2 gamma g)` taken as a complex number.
pub fn lambda_t(t: f64, g: f64, gamma: f64) -> Result<f64> {
    for (name, v) in [("t", t), ("g", g), ("gamma", gamma)] {
        if !v.is_finite() || v < 0.0 {
            return Err(Error::Parameter(format!(
                "{name} must be finite and >= 0, got {v}"
            )));
        }
    }
    let l = Complex64::new(g * g - 2.0 * gamma * g, 0.0).sqrt();
    let half = l * (t / 2.0);
    // sinh(lt/2)/l tends to t/2 as l -> 0.
    let sinh_over_l = if l.norm() < 1e-8 {
        Complex64::new(t / 2.0, 0.0) * (Complex64::new(1.0, 0.0) + half * half / 6.0)
    } else {
        half.sinh() / l
    };
    let bracket = sinh_over_l * g + half.cosh();
    let value = Complex64::new(1.0, 0.0) - bracket * bracket * (-g * t).exp();
    if value.im.abs() > tol::ALGEBRAIC || !value.re.is_finite() {
        return Err(Error::Parameter(format!(
            "lambda(t={t}, g={g}, gamma={gamma}) has imaginary residue {}",
            value.im
        )));
    }
    let lambda = value.re;
    if !(-1e-9..=1.0 + 1e-9).contains(&lambda) {
        return Err(Error::Parameter(format!(
            "lambda(t={t}, g={g}, gamma={gamma}) = {lambda} is outside [0, 1]"
        )));
    }
    Ok(lambda.clamp(0.0, 1.0))
}

/// `p (1 + η(1-2p) sin(βp)) / (1 + η(1-2p))` with no range check.
pub fn kappa_raw(p: f64, eta: f64, beta: f64) -> f64 {
    let a = eta * (1.0 - 2.0 * p);
    p * (1.0 + a * (beta * p).sin()) / (1.0 + a)
}

/// Checked κ(p): rejects a vanishing denominator and values outside [0, 1].
pub fn kappa_p(p: f64, eta: f64, beta: f64) -> Result<f64> {
    for (name, v) in [("p", p), ("eta", eta), ("beta", beta)] {
        if !v.is_finite() {
            return Err(Error::Parameter(format!("{name} must be finite, got {v}")));
        }
    }
    let denom = 1.0 + eta * (1.0 - 2.0 * p);
    if denom.abs() <= tol::ALGEBRAIC {
        return Err(Error::SingularParameter(format!(
            "1 + eta(1 - 2p) vanishes at p={p}, eta={eta}"
        )));
    }
    let k = kappa_raw(p, eta, beta);
    if !(-tol::ALGEBRAIC..=1.0 + tol::ALGEBRAIC).contains(&k) {
        return Err(Error::Parameter(format!(
            "kappa(p={p}, eta={eta}, beta={beta}) = {k} is outside [0, 1]"
        )));
    }
    Ok(k.clamp(0.0, 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChannelKind {
    QutritFlip,
    QutritPhaseFlip,
    Depolarizing,
    AmplitudeDampingMarkov,
    AmplitudeDampingNonMarkov,
    DephasingMarkov,
    DephasingNonMarkov,
    DepolarizationNonMarkov,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 8] = [
        ChannelKind::QutritFlip,
        ChannelKind::QutritPhaseFlip,
        ChannelKind::Depolarizing,
        ChannelKind::AmplitudeDampingMarkov,
        ChannelKind::AmplitudeDampingNonMarkov,
        ChannelKind::DephasingMarkov,
        ChannelKind::DephasingNonMarkov,
        ChannelKind::DepolarizationNonMarkov,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ChannelKind::QutritFlip => "qutrit-flip",
            ChannelKind::QutritPhaseFlip => "qutrit-phase-flip",
            ChannelKind::Depolarizing => "depolarizing",
            ChannelKind::AmplitudeDampingMarkov => "ad-markov",
            ChannelKind::AmplitudeDampingNonMarkov => "ad-nonmarkov",
            ChannelKind::DephasingMarkov => "dephasing-markov",
            ChannelKind::DephasingNonMarkov => "dephasing-nonmarkov",
            ChannelKind::DepolarizationNonMarkov => "depolarization-nonmarkov",
        }
    }

    /// Name of the swept parameter: `t` for non-Markovian damping, else `p`.
    pub fn param_name(self) -> &'static str {
        match self {
            ChannelKind::AmplitudeDampingNonMarkov => "t",
            _ => "p",
        }
    }
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChannelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ChannelKind::ALL
            .into_iter()
            .find(|k| k.name() == s.trim())
            .ok_or_else(|| Error::UnknownChannel(s.to_owned()))
    }
}

/// Fixed constants of the non-Markovian channels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonMarkovConstants {
    /// Spectral width of the coupling.
    pub g: f64,
    /// Spontaneous emission rate.
    pub gamma: f64,
    /// Dephasing memory strength.
    pub eta: f64,
    /// Dephasing memory frequency.
    pub beta: f64,
}

impl Default for NonMarkovConstants {
    fn default() -> Self {
        Self {
            g: 1.0,
            gamma: 10.0,
            eta: 0.5,
            beta: 100.0,
        }
    }
}

impl NonMarkovConstants {
    fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("g", self.g),
            ("gamma", self.gamma),
            ("eta", self.eta),
            ("beta", self.beta),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Parameter(format!(
                    "{name} must be finite and >= 0, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// A validated channel instance. `param` is the mixing probability `p`, or
/// the time `t` for non-Markovian amplitude damping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSpec {
    kind: ChannelKind,
    param: f64,
    constants: NonMarkovConstants,
    effective: f64,
}

impl ChannelSpec {
    pub fn new(kind: ChannelKind, param: f64, constants: NonMarkovConstants) -> Result<Self> {
        constants.validate()?;
        if !param.is_finite() {
            return Err(Error::Parameter(format!(
                "{} must be finite",
                kind.param_name()
            )));
        }
        let effective = match kind {
            ChannelKind::AmplitudeDampingNonMarkov => {
                lambda_t(param, constants.g, constants.gamma)?
            }
            _ => {
                if !(0.0..=1.0).contains(&param) {
                    return Err(Error::Parameter(format!("p = {param} is outside [0, 1]")));
                }
                match kind {
                    ChannelKind::DephasingNonMarkov => {
                        kappa_p(param, constants.eta, constants.beta)?
                    }
                    ChannelKind::DepolarizationNonMarkov => param * (1.0 - param),
                    _ => param,
                }
            }
        };
        Ok(Self {
            kind,
            param,
            constants,
            effective,
        })
    }

    /// A channel with the default non-Markovian constants.
    pub fn with_defaults(kind: ChannelKind, param: f64) -> Result<Self> {
        Self::new(kind, param, NonMarkovConstants::default())
    }

    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn param(&self) -> f64 {
        self.param
    }

    pub fn constants(&self) -> NonMarkovConstants {
        self.constants
    }

    /// The strength that enters the Kraus weights: `λ(t)`, `κ(p)`,
    /// `p(1-p)` or `p` depending on the kind.
    pub fn effective_strength(&self) -> f64 {
        self.effective
    }
}

/// Equal-dimension operators with `Σ K†K = weight · I`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    operators: Vec<ComplexMatrix>,
    dim: usize,
    weight: f64,
}

impl KrausSet {
    /// A trace-preserving set (`weight = 1`).
    pub fn new(operators: Vec<ComplexMatrix>) -> Result<Self> {
        Self::with_weight(operators, 1.0)
    }

    pub fn with_weight(operators: Vec<ComplexMatrix>, weight: f64) -> Result<Self> {
        let dim = operators
            .first()
            .ok_or_else(|| Error::Shape("empty Kraus set".into()))?
            .rows();
        if operators.iter().any(|k| k.rows() != dim || k.cols() != dim) {
            return Err(Error::Shape("Kraus operators differ in dimension".into()));
        }
        let set = Self {
            operators,
            dim,
            weight,
        };
        let deviation = set.completeness_deviation();
        if deviation > tol::ALGEBRAIC {
            return Err(Error::Completeness {
                target: weight,
                deviation,
            });
        }
        Ok(set)
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            operators: vec![ComplexMatrix::identity(dim)],
            dim,
            weight: 1.0,
        }
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn completeness_sum(&self) -> ComplexMatrix {
        let mut sum = ComplexMatrix::zeros(self.dim, self.dim);
        for k in &self.operators {
            sum = &sum + &(&dagger(k) * k);
        }
        sum
    }

    /// `max |Σ K†K - weight · I|`.
    pub fn completeness_deviation(&self) -> f64 {
        self.completeness_sum()
            .max_abs_diff(&ComplexMatrix::identity(self.dim).scale_real(self.weight))
    }
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn weyl_family(
    identity_weight: f64,
    rest: impl Iterator<Item = (WeylIndex, f64)>,
) -> Vec<ComplexMatrix> {
    let mut ops = vec![ComplexMatrix::identity(QUTRIT_DIM).scale_real(identity_weight.sqrt())];
    ops.extend(rest.map(|(idx, w)| weyl(idx).scale_real(w.sqrt())));
    ops
}

fn depolarizing_family(q: f64) -> Vec<ComplexMatrix> {
    weyl_family(
        (9.0 - 8.0 * q) / 27.0,
        WeylIndex::non_identity().map(|i| (i, q / 27.0)),
    )
}

/// Single-site Kraus family normalized to `Σ K†K = I/3`.
pub fn single_qutrit_kraus(spec: &ChannelSpec) -> KrausSet {
    let q = spec.effective_strength();
    let ops = match spec.kind() {
        ChannelKind::QutritFlip => weyl_family(
            (1.0 - q) / 3.0,
            [(0, 1), (0, 2)]
                .map(|(r, s)| (WeylIndex { r, s }, q / 6.0))
                .into_iter(),
        ),
        ChannelKind::QutritPhaseFlip => weyl_family(
            (1.0 - q) / 3.0,
            [(1, 0), (2, 0)]
                .map(|(r, s)| (WeylIndex { r, s }, q / 6.0))
                .into_iter(),
        ),
        ChannelKind::Depolarizing | ChannelKind::DepolarizationNonMarkov => depolarizing_family(q),
        ChannelKind::AmplitudeDampingMarkov | ChannelKind::AmplitudeDampingNonMarkov => {
            let site = (1.0f64 / 3.0).sqrt();
            let keep = (1.0 - q).sqrt();
            let decay = q.sqrt();
            let k00 = ComplexMatrix::diagonal(&[real(1.0), real(keep), real(keep)]);
            let mut k01 = ComplexMatrix::zeros(3, 3);
            k01[(0, 1)] = real(decay);
            let mut k02 = ComplexMatrix::zeros(3, 3);
            k02[(0, 2)] = real(decay);
            [k00, k01, k02].iter().map(|k| k.scale_real(site)).collect()
        }
        ChannelKind::DephasingMarkov | ChannelKind::DephasingNonMarkov => weyl_family(
            (1.0 - q) / 3.0,
            WeylIndex::non_identity().map(|i| (i, q / 24.0)),
        ),
    };
    KrausSet::with_weight(ops, 1.0 / 3.0).expect("families are normalized by construction")
}

/// Three-qutrit Kraus set: each base operator at site 0, then site 1, then
/// site 2, with identities elsewhere.
pub fn lift_three_qutrit(base: &KrausSet) -> Result<KrausSet> {
    if base.dim() != QUTRIT_DIM {
        return Err(Error::Shape(format!(
            "lifting needs single-qutrit operators, got dimension {}",
            base.dim()
        )));
    }
    let deviation = base
        .completeness_sum()
        .max_abs_diff(&ComplexMatrix::identity(QUTRIT_DIM).scale_real(1.0 / 3.0));
    if deviation > tol::ALGEBRAIC {
        return Err(Error::LiftingPrecondition { deviation });
    }
    let id = ComplexMatrix::identity(QUTRIT_DIM);
    let mut ops = Vec::with_capacity(3 * base.len());
    for site in 0..3 {
        for k in base.operators() {
            let factors: [&ComplexMatrix; 3] =
                std::array::from_fn(|j| if j == site { k } else { &id });
            ops.push(kron(&kron(factors[0], factors[1])?, factors[2])?);
        }
    }
    KrausSet::new(ops)
}

/// The lifted channel for a spec.
pub fn three_qutrit_channel(spec: &ChannelSpec) -> Result<KrausSet> {
    lift_three_qutrit(&single_qutrit_kraus(spec))
}

/// `ρ' = Σ K ρ K†`.
pub fn apply_channel(rho: &DensityMatrix, kraus: &KrausSet) -> Result<DensityMatrix> {
    if rho.dim() != kraus.dim() {
        return Err(Error::Shape(format!(
            "channel of dimension {} applied to a state of dimension {}",
            kraus.dim(),
            rho.dim()
        )));
    }
    let mut out = ComplexMatrix::zeros(rho.dim(), rho.dim());
    for k in kraus.operators() {
        let term = &(k * rho.matrix()) * &dagger(k);
        out = &out + &term;
    }
    if rho.is_normalized() && kraus.weight() == 1.0 {
        DensityMatrix::new(rho.labels(), out)
    } else {
        DensityMatrix::unnormalized(rho.labels(), out)
    }
}
