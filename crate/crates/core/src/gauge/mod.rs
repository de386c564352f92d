//! Local Lorentz gauge changes: SL(2,C) spinor fields, the Lorentz matrices
//! they induce, and the transformation laws of B, C, the spin coefficients
//! and the symmetric spinor object.
//!
//! A spinor matrix `B = [[a, c], [d, b]]` with `ab - cd = 1` rotates the frame
//! by `e'_(a) = L_a^b e_(b)`, `L_c^b = 1/2 Re Tr(sigma_c B sigmabar^b B^dagger)`,
//! and acts on the Pauli matrices of the frame as
//! `sigma'^alpha = (B^dagger)^-1 sigma^alpha B^-1`.

mod laws;
mod lorentz;
mod spinor_field;
mod square;

pub use laws::{
    gauge_kernels, transform_b, transform_c, transform_gamma_symmetric,
    transform_spin_coefficients, GaugeKernels,
};
pub use lorentz::{lorentz_from_matrix, ConstantLorentz, LorentzMatrixJet, LorentzSource};
pub use spinor_field::{GaugeConfig, SpinorGaugeField, SpinorJet};
pub use square::{commuting_square, SquareResiduals};
