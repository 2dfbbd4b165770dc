//! Numerical tolerances shared across the crate.
//!
//! All work is in `f64` on matrices no larger than 81x81, so rounding stays
//! around 1e-15 per entry; the looser bounds absorb accumulation through
//! several products and channel sums.

/// Algebraic identities: unitarity, Hermiticity, completeness sums.
pub const ALGEBRAIC: f64 = 1e-12;

/// Unitarity of the fixed 3x3 matrices (Weyl operators, corrections).
pub const UNITARY_3X3: f64 = 1e-14;

/// Trace drift and PSD slack after channel application.
pub const TRACE: f64 = 1e-10;

/// Pure-state normalization.
pub const NORM: f64 = 1e-12;

/// Outcomes with probability at or below this are treated as impossible.
pub const ZERO_PROBABILITY: f64 = 1e-14;

/// Agreement between simulated and closed-form fidelities.
pub const ORACLE: f64 = 1e-9;

/// Largest matrix side length accepted by `kron` (3^8).
pub const MAX_DIMENSION: usize = 6561;
