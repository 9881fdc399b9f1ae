//! Wigner's little groups for massive and massless particles, the
//! contraction that links them, and the Lorentz-squeezed harmonic-oscillator
//! model of a fast hadron.
//!
//! Conventions: components are ordered `(x, y, z, t)`, the metric is
//! `diag(1, 1, 1, −1)`, `c = 1`, and group elements are `exp(−iθG)` for a
//! generator `G`.

pub mod cli;
pub mod contraction;
pub mod error;
pub mod exec;
pub mod grid;
pub mod lie_core;
pub mod little_groups;
pub mod oscillator;
pub mod parton;
pub mod tolerance;

pub use error::{Error, Result};
pub use exec::Execution;
pub use lie_core::{
    boost_z, commutator, exp_generator, n_generators, standard_generators, AlgebraElement,
    FourVector, Generator, GeneratorLabel, GroupElement, Rapidity,
};
