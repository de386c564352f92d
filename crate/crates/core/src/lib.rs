//! Tetrad calculus on four-dimensional Lorentzian frames.
//!
//! The crate evaluates orthonormal tetrads given as symbolic expressions,
//! computes Ricci rotation coefficients and their irreducible parts,
//! Newman-Penrose spin coefficients, the spinor objects built from them,
//! and the transformation laws of all of these under local SL(2,C) gauge
//! changes.
//!
//! Runnable walkthroughs live in `examples/`:
//!
//! | example | shows |
//! |---|---|
//! | `expressions` | parsing, printing and dual-number evaluation |
//! | `frames` | tetrad fields, metric, Christoffel symbols |
//! | `ricci_decomposition` | rotation coefficients, B and C vectors, irreducible parts |
//! | `spin_coefficients` | null tetrad, spin coefficients, hat components, bridge relations |
//! | `dirac_operator` | the two assemblies of the first-order spinor operator |
//! | `spinor_objects` | the four-index spinor object and the reconstruction round trip |
//! | `spherical_gauge` | Cartesian frame rotated into the spherical frame |
//! | `commuting_square` | gauge laws checked against recomputation |
//!
//! ```
//! use tetrad::geometry::{builtin, frame_at};
//! use tetrad::ricci::ricci_at;
//!
//! let field = builtin::geometry("minkowski_cartesian").unwrap();
//! let frame = frame_at(&field, &[0.0, 1.0, 2.0, 3.0]).unwrap();
//! let r = ricci_at(&frame);
//! assert!(r.max_abs() < 1e-14);
//! ```

#![allow(
    clippy::needless_range_loop,
    clippy::neg_cmp_op_on_partial_ord,
    clippy::large_enum_variant,
    clippy::suspicious_arithmetic_impl,
    clippy::should_implement_trait,
    clippy::type_complexity
)]

pub mod algebra;
pub mod cli;
pub mod error;
pub mod exprlang;
pub mod gauge;
pub mod geometry;
pub mod np;
pub mod ricci;
pub mod sampling;
pub mod spinor;
pub mod tolerance;

pub use error::{Error, Result};
