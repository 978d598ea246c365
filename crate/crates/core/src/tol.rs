//! Tolerances shared across the crate.
//!
//! The defaults are absolute unless stated otherwise. Matrices handled here
//! are unit-normalised under the Hilbert-Schmidt product, so absolute and
//! relative thresholds coincide up to a small constant.

/// Rank and positivity decisions (relative to `max(1, ‖M‖₂)`).
pub const DEFAULT_TOL: f64 = 1e-9;

/// Accepted asymmetry of a matrix handed to [`crate::Herm3::new`].
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Accepted trace of a matrix that must be traceless.
pub const TRACE_TOL: f64 = 1e-10;

/// Orthonormality slack for a [`crate::canonical::SectionPlane`].
pub const ORTHONORMAL_TOL: f64 = 1e-10;

/// Gram matrices with a larger condition number are treated as rank deficient.
pub const MAX_GRAM_CONDITION: f64 = 1e12;

/// Parameter-space equalities (`b = c`, `k = 1/2`, ...) in the shape classifier.
pub const CLASSIFY_TOL: f64 = 1e-9;

/// Polynomial roots closer than this are one root.
pub const ROOT_MERGE_TOL: f64 = 1e-7;

/// Off-diagonal magnitudes at or below this are treated as zero when fixing phases.
pub const PHASE_ZERO_TOL: f64 = 1e-10;

/// Uniform angular scan used to locate pure-state contacts.
pub const PURE_SCAN_SAMPLES: usize = 2048;

/// Radius of the smallest sphere around `I/3` containing every state.
pub const R_OUT: f64 = 0.577_350_269_189_625_8; // 1/sqrt(3)

/// Radius of the largest sphere around `I/3` inside the state set.
pub const R_IN: f64 = 0.288_675_134_594_812_9; // 1/(2 sqrt(3))

/// Distance from `I/3` to a state with spectrum `(2/3, 1/3, 0)` under `½Tr(M₁M₂)`.
pub const R_RANK2: f64 = 1.0 / 3.0;
