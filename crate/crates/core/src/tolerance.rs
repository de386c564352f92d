//! Default tolerances for the two differentiation modes.

/// Identities evaluated with exact (dual-number) derivatives.
pub const DUAL: f64 = 1e-9;
/// Identities evaluated with finite-difference derivatives.
pub const FD: f64 = 1e-6;
/// Purely algebraic identities with no derivatives involved.
pub const ALGEBRAIC: f64 = 1e-12;
/// Condition number above which a tetrad is treated as singular.
pub const MAX_CONDITION: f64 = 1e12;
/// Base step for central differences.
pub const FD_STEP: f64 = 1e-4;
