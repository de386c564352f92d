//! Charts, tetrad fields and the differential data of a frame at a point.
//!
//! A tetrad is given either by a diagonal coframe `h_a` (so that
//! `e_(a)^alpha = delta_a^alpha / h_a`), by the full matrix of frame vector
//! components `e_(a)^alpha`, or as another tetrad rotated by a local Lorentz
//! field. Evaluating at a point gives a [`FrameJet`].

pub mod builtin;
mod config;
mod field;
mod frame;

pub use config::{GeometryConfig, TetradSpec};
pub use field::{Chart, DiffMode, TetradField, TetradJet, TetradKind};
pub use frame::{frame_at, frame_at_with, FrameJet};
