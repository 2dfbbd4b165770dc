//! Three-vertex qutrit hypergraphs and the states they generate.
//!
//! A hyperedge is an ordered tuple `(controls.., target)`. The qutrit
//! controlled-Z gates are not symmetric under exchanging control and target,
//! so the listed order is part of the data.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tensor::{omega_pow, qutrit_dim, ComplexMatrix, PureState};

pub const NUM_VERTICES: usize = 3;

/// Register labels of the hypergraph qutrits, in register order.
pub const HYPERGRAPH_LABELS: [&str; 3] = ["0", "1", "2"];

pub const INPUT_LABEL: &str = "a";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    Z3,
    CZ3,
    CCZ3,
}

impl GateKind {
    pub fn arity(self) -> usize {
        match self {
            GateKind::Z3 => 1,
            GateKind::CZ3 => 2,
            GateKind::CCZ3 => 3,
        }
    }
}

/// A diagonal gate on three qutrits. The last vertex is the target; the
/// others are controls that must all hold the value 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GateSpec {
    kind: GateKind,
    vertices: Vec<usize>,
}

impl GateSpec {
    pub fn new(kind: GateKind, vertices: &[usize]) -> Result<Self> {
        if vertices.len() != kind.arity() {
            return Err(Error::Arity(format!(
                "{kind:?} takes {} vertices, got {}",
                kind.arity(),
                vertices.len()
            )));
        }
        check_vertices(vertices).map_err(Error::Arity)?;
        Ok(Self {
            kind,
            vertices: vertices.to_vec(),
        })
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Phase exponent picked up by the basis ket with digits `q`.
    fn exponent(&self, q: &[usize; 3]) -> usize {
        let (target, controls) = self.vertices.split_last().expect("arity >= 1");
        if controls.iter().all(|&c| q[c] == 2) {
            q[*target]
        } else {
            0
        }
    }
}

fn check_vertices(vertices: &[usize]) -> std::result::Result<(), String> {
    for (i, &v) in vertices.iter().enumerate() {
        if v >= NUM_VERTICES {
            return Err(format!("vertex {v} outside 0..{NUM_VERTICES}"));
        }
        if vertices[..i].contains(&v) {
            return Err(format!("vertex {v} repeated in {vertices:?}"));
        }
    }
    Ok(())
}

fn digits(index: usize) -> [usize; 3] {
    [index / 9, (index / 3) % 3, index % 3]
}

/// Diagonal 27x27 unitary of a gate on the register `(0, 1, 2)`.
pub fn gate_matrix(spec: &GateSpec) -> ComplexMatrix {
    let diag: Vec<Complex64> = (0..qutrit_dim(NUM_VERTICES))
        .map(|i| omega_pow(spec.exponent(&digits(i))))
        .collect();
    ComplexMatrix::diagonal(&diag)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperedge(Vec<usize>);

impl Hyperedge {
    pub fn new(vertices: &[usize]) -> Result<Self> {
        match vertices.len() {
            2 | 3 => {}
            1 => {
                return Err(Error::Hyperedge(format!(
                    "loop {vertices:?} is not allowed"
                )))
            }
            n => return Err(Error::Hyperedge(format!("cardinality {n} not in {{2, 3}}"))),
        }
        check_vertices(vertices).map_err(Error::Hyperedge)?;
        Ok(Self(vertices.to_vec()))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn gate(&self) -> GateSpec {
        let kind = if self.0.len() == 2 {
            GateKind::CZ3
        } else {
            GateKind::CCZ3
        };
        GateSpec::new(kind, &self.0).expect("validated hyperedge")
    }
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Loop-free hypergraph on the vertices `{0, 1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Hypergraph {
    edges: Vec<Hyperedge>,
}

impl Hypergraph {
    /// Exact duplicate tuples collapse; insertion order is kept.
    pub fn new(edges: &[&[usize]]) -> Result<Self> {
        let mut out: Vec<Hyperedge> = Vec::with_capacity(edges.len());
        for e in edges {
            let edge = Hyperedge::new(e)?;
            if !out.contains(&edge) {
                out.push(edge);
            }
        }
        Ok(Self { edges: out })
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn gates(&self) -> Vec<GateSpec> {
        self.edges.iter().map(Hyperedge::gate).collect()
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `|+++>` on the hypergraph register.
pub fn plus_plus_plus() -> PureState {
    let a = Complex64::new(1.0 / (qutrit_dim(NUM_VERTICES) as f64).sqrt(), 0.0);
    PureState::new(&HYPERGRAPH_LABELS, vec![a; qutrit_dim(NUM_VERTICES)]).expect("normalized")
}

/// Applies gates in the given order to a three-qutrit state.
pub fn apply_gates(state: &PureState, gates: &[GateSpec]) -> Result<PureState> {
    let mut amps = state.amplitudes().to_vec();
    for g in gates {
        amps = gate_matrix(g).apply(&amps)?;
    }
    PureState::new(state.labels(), amps)
}

pub fn hypergraph_state(h: &Hypergraph) -> PureState {
    apply_gates(&plus_plus_plus(), &h.gates()).expect("diagonal unitaries keep the state valid")
}

const CANONICAL_EDGES: [&[&[usize]]; 5] = [
    &[&[0, 1, 2]],
    &[&[0, 1], &[1, 2]],
    &[&[0, 1], &[1, 2], &[2, 0]],
    &[&[0, 1], &[1, 2], &[0, 1, 2]],
    &[&[0, 1], &[1, 2], &[2, 0], &[0, 1, 2]],
];

/// `H1..H5` in index order.
pub fn canonical_hypergraphs() -> Vec<Hypergraph> {
    CANONICAL_EDGES
        .iter()
        .map(|e| Hypergraph::new(e).expect("canonical edges are valid"))
        .collect()
}

/// Canonical hypergraph by 1-based index.
pub fn canonical(index: usize) -> Result<Hypergraph> {
    if !(1..=5).contains(&index) {
        return Err(Error::HypergraphIndex(index));
    }
    Ok(Hypergraph::new(CANONICAL_EDGES[index - 1]).expect("canonical edges are valid"))
}

/// Parses `"H1"`..`"H5"` (case-insensitive) or a bare digit.
pub fn parse_hypergraph_name(name: &str) -> Result<usize> {
    let trimmed = name.trim();
    let digits = trimmed
        .strip_prefix('H')
        .or_else(|| trimmed.strip_prefix('h'))
        .unwrap_or(trimmed);
    match digits.parse::<usize>() {
        Ok(i) if (1..=5).contains(&i) => Ok(i),
        Ok(i) => Err(Error::HypergraphIndex(i)),
        Err(_) => Err(Error::Label(format!("unknown hypergraph '{name}'"))),
    }
}

pub fn hypergraph_name(index: usize) -> String {
    format!("H{index}")
}

/// Angles of the input qutrit
/// `cos θ1 |0> + sin θ1 cos θ2 |1> + sin θ1 sin θ2 |2>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateParams {
    pub theta1: f64,
    pub theta2: f64,
}

impl StateParams {
    pub fn new(theta1: f64, theta2: f64) -> Result<Self> {
        if !theta1.is_finite() || !theta2.is_finite() {
            return Err(Error::Parameter(format!(
                "angles must be finite, got ({theta1}, {theta2})"
            )));
        }
        Ok(Self { theta1, theta2 })
    }

    /// `(|0> + |1> + |2>)/√3`.
    pub fn plus() -> Self {
        Self {
            theta1: (2.0f64 / 3.0).sqrt().asin(),
            theta2: FRAC_PI_4,
        }
    }

    /// `(|0> + |2>)/√2`.
    pub fn zero_two() -> Self {
        Self {
            theta1: FRAC_PI_4,
            theta2: FRAC_PI_2,
        }
    }

    pub fn zero() -> Self {
        Self {
            theta1: 0.0,
            theta2: FRAC_PI_2,
        }
    }

    /// Linked convention `θ1 = 3 θ2`.
    pub fn linked(theta2: f64) -> Result<Self> {
        Self::new(3.0 * theta2, theta2)
    }

    pub fn amplitudes(&self) -> [f64; 3] {
        let (s1, c1) = self.theta1.sin_cos();
        let (s2, c2) = self.theta2.sin_cos();
        [c1, s1 * c2, s1 * s2]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatePreset {
    Plus,
    ZeroTwo,
    Zero,
}

impl StatePreset {
    pub const ALL: [StatePreset; 3] = [StatePreset::Plus, StatePreset::ZeroTwo, StatePreset::Zero];

    pub fn name(self) -> &'static str {
        match self {
            StatePreset::Plus => "plus",
            StatePreset::ZeroTwo => "zero2",
            StatePreset::Zero => "zero",
        }
    }

    pub fn params(self) -> StateParams {
        match self {
            StatePreset::Plus => StateParams::plus(),
            StatePreset::ZeroTwo => StateParams::zero_two(),
            StatePreset::Zero => StateParams::zero(),
        }
    }
}

impl FromStr for StatePreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StatePreset::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Label(format!("unknown state preset '{s}'")))
    }
}

/// The input qutrit on register `"a"`.
pub fn input_state(params: StateParams) -> PureState {
    let amps = params
        .amplitudes()
        .iter()
        .map(|&x| Complex64::new(x, 0.0))
        .collect();
    PureState::new(&[INPUT_LABEL], amps).expect("trigonometric amplitudes are normalized")
}
