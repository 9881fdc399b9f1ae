//! Parton-picture quantities derived from the squeezed oscillator: period
//! dilation, the interaction-time ratio, and the longitudinal widths.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::lie_core::Rapidity;
use crate::oscillator::{covariance, momentum_amplitude, momentum_covariance};

/// Proton mass in GeV.
pub const PROTON_MASS_GEV: f64 = 0.938;

/// `η = arccosh(E/m)`.
pub fn rapidity_from_energy(energy: f64, mass: f64) -> Result<Rapidity> {
    if !(mass > 0.0 && mass.is_finite()) {
        return Err(Error::InvalidKinematics(format!(
            "mass must be positive, got {mass}"
        )));
    }
    if !(energy >= mass && energy.is_finite()) {
        return Err(Error::InvalidKinematics(format!(
            "energy {energy} is below the mass {mass}"
        )));
    }
    Ok(Rapidity((energy / mass).acosh()))
}

/// Oscillator period growth `e^η`.
pub fn period_dilation(eta: Rapidity) -> f64 {
    eta.0.exp()
}

/// Ratio of the external interaction time to the oscillator period,
/// `e^{−2η}`.
pub fn interaction_ratio(eta: Rapidity) -> f64 {
    (-2.0 * eta.0).exp()
}

/// Marginal `p(q_z) = ∫|φ_η(q_z, q_0)|² dq_0`, evaluated by trapezoid
/// quadrature over `q_0`.
///
/// For fixed `q_z` the integrand is a Gaussian in `q_0` centred on
/// `−tanh(2η)·q_z` with variance `1/(2 cosh 2η)`; the quadrature window
/// covers ±10 of those standard deviations.
pub fn longitudinal_momentum_distribution(eta: Rapidity, q_z_samples: &[f64]) -> Vec<f64> {
    longitudinal_momentum_distribution_with(Execution::default(), eta, q_z_samples)
}

const MARGINAL_POINTS: usize = 401;

pub fn longitudinal_momentum_distribution_with(
    exec: Execution,
    eta: Rapidity,
    q_z_samples: &[f64],
) -> Vec<f64> {
    let two_eta = 2.0 * eta.0;
    let sd = (0.5 / two_eta.cosh()).sqrt();
    let half = 10.0 * sd;
    let h = 2.0 * half / (MARGINAL_POINTS - 1) as f64;
    exec.map_slice(q_z_samples, |&q_z| {
        let center = -two_eta.tanh() * q_z;
        let mut s = 0.0;
        for k in 0..MARGINAL_POINTS {
            let q_0 = center - half + k as f64 * h;
            let phi = momentum_amplitude(eta, q_z, q_0);
            let w = if k == 0 || k + 1 == MARGINAL_POINTS {
                0.5
            } else {
                1.0
            };
            s += w * phi * phi;
        }
        s * h
    })
}

/// Variance of the longitudinal momentum marginal, `cosh 2η / 2`.
pub fn longitudinal_momentum_variance(eta: Rapidity) -> f64 {
    momentum_covariance(eta)[0][0]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PartonReport {
    pub energy: f64,
    pub mass: f64,
    pub eta: f64,
    pub gamma: f64,
    pub period_dilation: f64,
    pub interaction_ratio: f64,
    pub spatial_width: f64,
    pub momentum_width: f64,
}

pub fn parton_report(energy: f64, mass: f64) -> Result<PartonReport> {
    let eta = rapidity_from_energy(energy, mass)?;
    Ok(PartonReport {
        energy,
        mass,
        eta: eta.0,
        gamma: energy / mass,
        period_dilation: period_dilation(eta),
        interaction_ratio: interaction_ratio(eta),
        spatial_width: covariance(eta)[0][0].sqrt(),
        momentum_width: momentum_covariance(eta)[0][0].sqrt(),
    })
}
