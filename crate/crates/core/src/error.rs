use thiserror::Error;

/// Errors raised by the numerical routines.
///
/// Every variant corresponds to a violated precondition; none of them signal
/// a numerical failure.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("tachyonic: unsupported (p·p = {norm:e} is spacelike)")]
    Tachyonic { norm: f64 },

    #[error("energy component must be positive, got t = {0}")]
    NonPositiveEnergy(f64),

    #[error("unsupported momentum direction: {0}")]
    UnsupportedDirection(String),

    #[error("generator combination has non-real coefficients (max imaginary part {0:e})")]
    NotRealCombination(f64),

    #[error("matrix is not in the span of the Lorentz generators (residual {0:e})")]
    NotInAlgebra(f64),

    #[error("Lorentz condition violated: a3 = {a3} but a0 = {a0}")]
    LorentzConditionViolated { a3: f64, a0: f64 },

    #[error("massless plane wave requires k = omega, got k = {k}, omega = {omega}")]
    OffShellWave { k: f64, omega: f64 },

    #[error("expected {expected} parameters, got {got}")]
    ParameterCount { expected: usize, got: usize },

    #[error("invalid rapidity list: {0}")]
    InvalidEtas(String),

    #[error("degenerate sampling window: {0}")]
    DegenerateWindow(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid kinematics: {0}")]
    InvalidKinematics(String),
}

pub type Result<T> = std::result::Result<T, Error>;
