//! Null tetrad, spin coefficients, spinor connections, hat components, the
//! two assemblies of the first-order spinor operator, and the bridge
//! relations between spin coefficients and the B and C vectors.
//!
//! Spin coefficients use the contraction `"xyz" = x_{beta;alpha} y^beta z^alpha`:
//!
//! | index | combination |
//! |---|---|
//! | 1 | `l m-bar z` |
//! | 2 | `-n m z` |
//! | 3 | `1/2 (l n z + m m-bar z)` |
//!
//! with `z = l, n, m, m-bar` giving the `L, N, M, M-bar` families.

mod connection;
mod hat;
mod null_frame;
mod operator;
mod spin;

pub use connection::{bispinor_connection, sigma_connection_residual, sigma_connections};
pub use hat::{bridge_relations, bridge_residual, hat, hat_components, reassembled_hats, HatComponents};
pub use null_frame::{null_frame, Leg, NullFrameJet, NULL_FRAME_COMPONENTS};
pub use operator::{assemble_dirac_bc, assemble_dirac_np, Chirality, FirstOrderOperator2x2, OperatorEntry};
pub use spin::{
    np_letters, spin_coefficients, spin_coefficients_from_gamma, NpLetters, SpinCoefficientSet,
    SPINOR_NORMALIZATION,
};
