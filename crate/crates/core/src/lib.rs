//! Simulation of single-qutrit teleportation through noisy three-qutrit
//! hypergraph states, with transcribed analytic fidelities for cross-checks.

pub mod closed_form;
pub mod error;
pub mod hypergraph;
pub mod noise;
pub mod teleport;
pub mod tensor;
pub mod tol;
pub mod verify;

pub use closed_form::{
    closed_form_fidelity, formula_catalog, known_deviation, reconciled_fidelity, FormulaKey,
};
pub use error::{Error, Result};
pub use hypergraph::{
    canonical, canonical_hypergraphs, hypergraph_state, input_state, Hypergraph, StateParams,
    StatePreset,
};
pub use noise::{ChannelKind, ChannelSpec, KrausSet, NonMarkovConstants};
pub use teleport::{teleport, teleport_fidelity, TeleportOutcome};
pub use tensor::{ComplexMatrix, DensityMatrix, PureState};
