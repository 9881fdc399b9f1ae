//! Covariant harmonic-oscillator ground state of a two-quark hadron in the
//! longitudinal (z, t) plane and its Lorentz squeeze.
//!
//! The boosted ground state is a Gaussian elongated along the light-cone
//! axis `u = (z + t)/√2` by `e^η` and compressed along `v = (z − t)/√2` by
//! `e^{−η}`. Oscillator units (`ω = 1`) are used throughout.

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::grid::{Grid2D, Window};
use crate::lie_core::{FourVector, Rapidity};

/// `(1/π)^{1/2}`, the peak value of every squeezed ground state.
pub fn peak_amplitude() -> f64 {
    PI.sqrt().recip()
}

/// Light-cone coordinates `u = (z + t)/√2`, `v = (z − t)/√2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LightCone {
    pub u: f64,
    pub v: f64,
}

impl LightCone {
    /// `u·v = (z² − t²)/2`, unchanged by boosts.
    pub fn invariant(&self) -> f64 {
        self.u * self.v
    }
}

pub fn lightcone_from_zt(z: f64, t: f64) -> LightCone {
    LightCone {
        u: (z + t) * FRAC_1_SQRT_2,
        v: (z - t) * FRAC_1_SQRT_2,
    }
}

pub fn zt_from_lightcone(lc: &LightCone) -> (f64, f64) {
    ((lc.u + lc.v) * FRAC_1_SQRT_2, (lc.u - lc.v) * FRAC_1_SQRT_2)
}

/// A z boost in light-cone form: `u → e^η u`, `v → e^{−η} v`.
pub fn boost_lightcone(lc: &LightCone, eta: Rapidity) -> LightCone {
    LightCone {
        u: eta.0.exp() * lc.u,
        v: (-eta.0).exp() * lc.v,
    }
}

/// Hadron center `X` and quark separation `x` of a two-quark system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RelativeCoordinates {
    pub center: FourVector,
    pub separation: FourVector,
}

impl RelativeCoordinates {
    /// Recovers the quark positions `(x_a, x_b) = (X + √2 x, X − √2 x)`.
    pub fn quark_positions(&self) -> (FourVector, FourVector) {
        (
            self.center + self.separation * SQRT_2,
            self.center - self.separation * SQRT_2,
        )
    }
}

/// `X = (x_a + x_b)/2`, `x = (x_a − x_b)/(2√2)`.
pub fn hadron_coordinates(x_a: &FourVector, x_b: &FourVector) -> RelativeCoordinates {
    RelativeCoordinates {
        center: (*x_a + *x_b) * 0.5,
        separation: (*x_a - *x_b) * (0.5 * FRAC_1_SQRT_2),
    }
}

/// Total four-momentum `P` and quark momentum separation `q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RelativeMomenta {
    pub total: FourVector,
    pub separation: FourVector,
}

impl RelativeMomenta {
    /// Recovers `(p_a, p_b) = (P/2 + q/(2√2), P/2 − q/(2√2))`.
    pub fn quark_momenta(&self) -> (FourVector, FourVector) {
        let half = self.total * 0.5;
        let d = self.separation * (0.5 * FRAC_1_SQRT_2);
        (half + d, half - d)
    }
}

/// `P = p_a + p_b`, `q = √2 (p_a − p_b)`.
pub fn momentum_coordinates(p_a: &FourVector, p_b: &FourVector) -> RelativeMomenta {
    RelativeMomenta {
        total: *p_a + *p_b,
        separation: (*p_a - *p_b) * SQRT_2,
    }
}

fn squeezed_gaussian(eta: f64, u: f64, v: f64) -> f64 {
    let e2 = (2.0 * eta).exp();
    peak_amplitude() * (-0.5 * (u * u / e2 + e2 * v * v)).exp()
}

/// Space-time ground state `ψ_η(z, t)`.
pub fn amplitude(eta: Rapidity, z: f64, t: f64) -> f64 {
    let lc = lightcone_from_zt(z, t);
    squeezed_gaussian(eta.0, lc.u, lc.v)
}

/// Momentum-energy ground state `φ_η(q_z, q_0)` with light-cone variables
/// `q_u = (q_0 − q_z)/√2` and `q_v = (q_0 + q_z)/√2`.
///
/// With this sign convention `φ_η(a, b) = ψ_η(−a, b)`.
pub fn momentum_amplitude(eta: Rapidity, q_z: f64, q_0: f64) -> f64 {
    let q_u = (q_0 - q_z) * FRAC_1_SQRT_2;
    let q_v = (q_0 + q_z) * FRAC_1_SQRT_2;
    squeezed_gaussian(eta.0, q_u, q_v)
}

/// Which wave function to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Space {
    Position,
    Momentum,
}

impl Space {
    pub fn axis_names(self) -> [&'static str; 2] {
        match self {
            Space::Position => ["z", "t"],
            Space::Momentum => ["q_z", "q_0"],
        }
    }

    pub fn evaluate(self, eta: Rapidity, a: f64, b: f64) -> f64 {
        match self {
            Space::Position => amplitude(eta, a, b),
            Space::Momentum => momentum_amplitude(eta, a, b),
        }
    }
}

/// Ground state boosted to rapidity `eta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SqueezedState {
    pub eta: Rapidity,
}

impl SqueezedState {
    pub fn new(eta: Rapidity) -> Self {
        SqueezedState { eta }
    }

    pub fn amplitude(&self, z: f64, t: f64) -> f64 {
        amplitude(self.eta, z, t)
    }

    pub fn momentum_amplitude(&self, q_z: f64, q_0: f64) -> f64 {
        momentum_amplitude(self.eta, q_z, q_0)
    }

    pub fn covariance(&self) -> [[f64; 2]; 2] {
        covariance(self.eta)
    }

    /// Standard deviation of `|ψ_η|²` along z.
    pub fn longitudinal_width(&self) -> f64 {
        covariance(self.eta)[0][0].sqrt()
    }

    pub fn sample(&self, space: Space, window: &Window, n: (usize, usize)) -> Result<Grid2D> {
        let eta = self.eta;
        crate::grid::sample_grid(move |a, b| space.evaluate(eta, a, b), window, n)
    }
}

/// Second moments of `|ψ_η|²` in (z, t):
/// `Var z = Var t = cosh 2η / 2`, `Cov(z, t) = sinh 2η / 2`.
pub fn covariance(eta: Rapidity) -> [[f64; 2]; 2] {
    let (c, s) = ((2.0 * eta.0).cosh() / 2.0, (2.0 * eta.0).sinh() / 2.0);
    [[c, s], [s, c]]
}

/// Second moments of `|φ_η|²` in (q_z, q_0); the covariance changes sign
/// relative to [`covariance`] under the momentum light-cone convention.
pub fn momentum_covariance(eta: Rapidity) -> [[f64; 2]; 2] {
    let [[a, c], [_, b]] = covariance(eta);
    [[a, -c], [-c, b]]
}

/// Maps a (q_z, q_0) covariance into the (z, t) frame by `q_z → −q_z`, the
/// reflection relating the two light-cone conventions.
pub fn momentum_to_position_axes(cov: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
    [[cov[0][0], -cov[0][1]], [-cov[1][0], cov[1][1]]]
}

/// Principal axes of a 2×2 covariance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PrincipalAxes {
    /// Angle of the major axis from the first coordinate axis, in degrees.
    pub major_angle_deg: f64,
    pub major_variance: f64,
    pub minor_variance: f64,
}

pub fn principal_axes(cov: [[f64; 2]; 2]) -> PrincipalAxes {
    let (a, b, c) = (cov[0][0], cov[1][1], cov[0][1]);
    let mean = 0.5 * (a + b);
    let r = (0.5 * (a - b)).hypot(c);
    PrincipalAxes {
        major_angle_deg: 0.5 * (2.0 * c).atan2(a - b).to_degrees(),
        major_variance: mean + r,
        minor_variance: mean - r,
    }
}

/// Square window reaching six standard deviations of `|ψ_η|²` along the
/// widest principal axis, `6·e^{|η|}/√2`.
pub fn six_sigma_window(eta: Rapidity) -> Window {
    Window::square(6.0 * eta.0.abs().exp() * FRAC_1_SQRT_2)
}

/// Result of applying the invariant oscillator operator to sampled data.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResidualReport {
    /// Largest `|Hψ − λψ|` over interior points.
    pub max_residual: f64,
    /// Rayleigh-quotient estimate `Σ ψHψ / Σ ψ²` of the eigenvalue.
    pub eigenvalue_estimate: f64,
    pub spacing: (f64, f64),
    /// Set when the spacing exceeds [`COARSE_SPACING`].
    pub coarse: bool,
}

pub const COARSE_SPACING: f64 = 0.1;

/// Applies `H = ½{(z² − t²) − (∂²_z − ∂²_t)}` to the sampled ground state by
/// second-order central differences on interior points and compares with
/// `λψ`, `λ = 0`.
pub fn invariant_equation_residual(grid: &Grid2D) -> Result<ResidualReport> {
    invariant_equation_residual_with(Execution::default(), grid, 0.0)
}

pub fn invariant_equation_residual_with(
    exec: Execution,
    grid: &Grid2D,
    lambda: f64,
) -> Result<ResidualReport> {
    let (n0, n1) = grid.n;
    if n0 < 3 || n1 < 3 {
        return Err(Error::InvalidGrid(
            "central differences need at least three points per axis".into(),
        ));
    }
    let (hz, ht) = grid.spacing;
    let rows = exec.map_indices(n0 - 2, |r| {
        let i = r + 1;
        let mut worst = 0.0f64;
        let mut num = 0.0;
        let mut den = 0.0;
        for j in 1..n1 - 1 {
            let (z, t) = grid.coord(i, j);
            let psi = grid.get(i, j);
            let d2z = (grid.get(i + 1, j) - 2.0 * psi + grid.get(i - 1, j)) / (hz * hz);
            let d2t = (grid.get(i, j + 1) - 2.0 * psi + grid.get(i, j - 1)) / (ht * ht);
            let h_psi = 0.5 * ((z * z - t * t) * psi - (d2z - d2t));
            worst = worst.max((h_psi - lambda * psi).abs());
            num += psi * h_psi;
            den += psi * psi;
        }
        (worst, num, den)
    });
    let (worst, num, den) = rows
        .iter()
        .fold((0.0f64, 0.0, 0.0), |(w, n, d), &(rw, rn, rd)| {
            (w.max(rw), n + rn, d + rd)
        });
    Ok(ResidualReport {
        max_residual: worst,
        eigenvalue_estimate: num / den,
        spacing: grid.spacing,
        coarse: hz > COARSE_SPACING || ht > COARSE_SPACING,
    })
}

/// Samples `ψ_η` on `[−half, half]²` with spacing `h` and evaluates the
/// invariant-equation residual.
pub fn sampled_residual(
    exec: Execution,
    eta: Rapidity,
    half: f64,
    h: f64,
) -> Result<ResidualReport> {
    let n = (2.0 * half / h).round() as usize + 1;
    let grid = crate::grid::sample_grid_with(
        exec,
        move |z, t| amplitude(eta, z, t),
        &Window::square(half),
        (n, n),
    )?;
    invariant_equation_residual_with(exec, &grid, 0.0)
}
