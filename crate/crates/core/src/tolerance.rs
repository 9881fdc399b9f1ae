//! Shared numerical tolerances.

/// Algebraic identities on exactly representable inputs.
pub const EXACT: f64 = 1e-12;

/// Identities that go through chained matrix products or large rapidities.
pub const CHAINED: f64 = 1e-9;

/// Commutator relations evaluated in floating point.
pub const ALGEBRA: f64 = 1e-14;

/// Default relative tolerance for massless classification, relative to t².
pub const CLASSIFY_REL: f64 = 1e-9;
