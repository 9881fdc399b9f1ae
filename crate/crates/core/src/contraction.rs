//! Contraction of the boosted rotation group onto the massless E(2)-like
//! little group.
//!
//! A transverse rotation generator conjugated by a z boost of rapidity η and
//! rescaled by `1/cosh η` converges to one of the null generators `N1`, `N2`
//! as η grows. The deviation falls off as `1 − tanh η ≈ 2e^{−2η}`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::lie_core::{boost_z, operator_norm, CMatrix4, Generator, GeneratorLabel, Rapidity};

/// Transverse rotation axis being contracted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RotationAxis {
    /// `J1`, which contracts onto `N2`.
    X,
    /// `J2`, which contracts onto `N1`.
    Y,
}

impl RotationAxis {
    pub fn generator(self) -> GeneratorLabel {
        match self {
            RotationAxis::X => GeneratorLabel::J1,
            RotationAxis::Y => GeneratorLabel::J2,
        }
    }

    /// The null generator this axis contracts onto.
    pub fn target(self) -> GeneratorLabel {
        match self {
            RotationAxis::X => GeneratorLabel::N2,
            RotationAxis::Y => GeneratorLabel::N1,
        }
    }

    /// The frozen bookkeeping constants for this axis.
    pub fn convention(self) -> ContractionConvention {
        match self {
            RotationAxis::X => N2_FROM_J1,
            RotationAxis::Y => N1_FROM_J2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Conjugation {
    /// `B J B⁻¹`
    Conjugate,
    /// `B⁻¹ J B`
    InverseConjugate,
}

/// Direction of the boost conjugation and overall sign of the rescaled
/// generator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContractionConvention {
    pub direction: Conjugation,
    pub sign: f64,
}

/// `N1 = lim −(1/cosh η) B J2 B⁻¹`.
pub const N1_FROM_J2: ContractionConvention = ContractionConvention {
    direction: Conjugation::Conjugate,
    sign: -1.0,
};

/// `N2 = lim (1/cosh η) B J1 B⁻¹`.
pub const N2_FROM_J1: ContractionConvention = ContractionConvention {
    direction: Conjugation::Conjugate,
    sign: 1.0,
};

/// `B J B⁻¹` or `B⁻¹ J B` with `B = boost_z(eta)`.
pub fn boosted_rotation(axis: RotationAxis, eta: Rapidity, direction: Conjugation) -> CMatrix4 {
    let j = Generator::new(axis.generator()).matrix;
    let b = match direction {
        Conjugation::Conjugate => boost_z(eta),
        Conjugation::InverseConjugate => boost_z(Rapidity(-eta.0)),
    };
    b.conjugate(&j)
}

fn rescaled(axis: RotationAxis, eta: Rapidity, convention: ContractionConvention) -> CMatrix4 {
    boosted_rotation(axis, eta, convention.direction)
        * Complex64::new(convention.sign / eta.0.cosh(), 0.0)
}

/// The boosted rotation rescaled by `1/cosh η` under the frozen convention.
pub fn contracted_generator(axis: RotationAxis, eta: Rapidity) -> CMatrix4 {
    rescaled(axis, eta, axis.convention())
}

/// Operator-norm distance from the contracted generator to its null target.
pub fn contraction_deviation(axis: RotationAxis, eta: Rapidity) -> f64 {
    let target = Generator::new(axis.target()).matrix;
    operator_norm(&(contracted_generator(axis, eta) - target))
}

/// Picks the (direction, sign) pair whose rescaled generator lands closest
/// to the axis's null target at rapidity `eta`.
pub fn best_convention(axis: RotationAxis, eta: Rapidity) -> (ContractionConvention, f64) {
    let target = Generator::new(axis.target()).matrix;
    let mut best: Option<(ContractionConvention, f64)> = None;
    for direction in [Conjugation::Conjugate, Conjugation::InverseConjugate] {
        for sign in [1.0, -1.0] {
            let c = ContractionConvention { direction, sign };
            let d = operator_norm(&(rescaled(axis, eta, c) - target));
            if best.is_none_or(|(_, bd)| d < bd) {
                best = Some((c, d));
            }
        }
    }
    best.expect("four candidates evaluated")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContractionReport {
    pub etas: Vec<f64>,
    pub deviations_n1: Vec<f64>,
    pub deviations_n2: Vec<f64>,
    /// Slope of `ln(deviation)` against η for the `N1` axis; `None` with
    /// fewer than two points.
    pub fitted_decay_rate: Option<f64>,
}

impl ContractionReport {
    /// True when every deviation respects `dev ≤ bound · e^{−2η}`.
    pub fn within_bound(&self, bound: f64) -> bool {
        self.etas
            .iter()
            .zip(self.deviations_n1.iter().zip(&self.deviations_n2))
            .all(|(&eta, (&d1, &d2))| {
                let limit = bound * (-2.0 * eta).exp();
                d1 <= limit && d2 <= limit
            })
    }
}

/// Unweighted least-squares slope of `ln(y)` against `x`.
pub fn fit_decay_rate(xs: &[f64], ys: &[f64]) -> Option<f64> {
    if xs.len() < 2 || xs.len() != ys.len() {
        return None;
    }
    let n = xs.len() as f64;
    let logs: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = logs.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&logs).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Some(sxy / sxx)
}

fn validate_etas(etas: &[f64]) -> Result<()> {
    if etas.is_empty() {
        return Err(Error::InvalidEtas("list is empty".into()));
    }
    if let Some(bad) = etas.iter().find(|e| !(e.is_finite() && **e > 0.0)) {
        return Err(Error::InvalidEtas(format!(
            "{bad} is not a positive finite rapidity"
        )));
    }
    if etas.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidEtas(
            "rapidities must be strictly increasing".into(),
        ));
    }
    Ok(())
}

pub fn contraction_report(etas: &[f64]) -> Result<ContractionReport> {
    contraction_report_with(Execution::default(), etas)
}

pub fn contraction_report_with(exec: Execution, etas: &[f64]) -> Result<ContractionReport> {
    validate_etas(etas)?;
    let pairs = exec.map_slice(etas, |&eta| {
        (
            contraction_deviation(RotationAxis::Y, Rapidity(eta)),
            contraction_deviation(RotationAxis::X, Rapidity(eta)),
        )
    });
    let (deviations_n1, deviations_n2): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
    let fitted_decay_rate = fit_decay_rate(etas, &deviations_n1);
    Ok(ContractionReport {
        etas: etas.to_vec(),
        deviations_n1,
        deviations_n2,
        fitted_decay_rate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_core::{commutator, max_abs};

    const I: Complex64 = Complex64::new(0.0, 1.0);

    #[test]
    fn frozen_convention_is_the_empirical_best() {
        for axis in [RotationAxis::X, RotationAxis::Y] {
            let (best, _) = best_convention(axis, Rapidity(8.0));
            assert_eq!(best, axis.convention(), "{axis:?}");
        }
    }

    #[test]
    fn zero_rapidity_leaves_rotation_alone() {
        for axis in [RotationAxis::X, RotationAxis::Y] {
            for dir in [Conjugation::Conjugate, Conjugation::InverseConjugate] {
                let j = Generator::new(axis.generator()).matrix;
                assert_eq!(boosted_rotation(axis, Rapidity(0.0), dir), j);
            }
        }
    }

    #[test]
    fn boosted_set_keeps_rotation_algebra() {
        let eta = Rapidity(1.4);
        let j1 = boosted_rotation(RotationAxis::X, eta, Conjugation::Conjugate);
        let j2 = boosted_rotation(RotationAxis::Y, eta, Conjugation::Conjugate);
        let j3 = Generator::new(GeneratorLabel::J3).matrix;
        assert!(max_abs(&(commutator(&j1, &j2) - j3 * I)) < 1e-12);
        assert!(max_abs(&(commutator(&j2, &j3) - j1 * I)) < 1e-12);
        assert!(max_abs(&(commutator(&j3, &j1) - j2 * I)) < 1e-12);
    }

    #[test]
    fn mixed_blocks_grow_like_cosh() {
        // B J2 B⁻¹ = cosh η J2 − sinh η K1
        let b = boosted_rotation(RotationAxis::Y, Rapidity(1.0), Conjugation::Conjugate);
        assert!((b[(0, 2)] - I * 1.0f64.cosh()).norm() < 1e-15);
        assert!((b[(0, 3)] - (-I) * 1.0f64.sinh()).norm() < 1e-15);
    }

    #[test]
    fn converges_at_large_rapidity() {
        assert!(contraction_deviation(RotationAxis::Y, Rapidity(10.0)) <= 1e-8);
        assert!(contraction_deviation(RotationAxis::X, Rapidity(10.0)) <= 1e-8);
        let at_rest = contraction_deviation(RotationAxis::Y, Rapidity(0.0));
        assert!((at_rest - 1.0).abs() < 1e-12);
    }

    #[test]
    fn report_fits_minus_two() {
        let r = contraction_report(&[2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        let rate = r.fitted_decay_rate.unwrap();
        assert!((-2.1..=-1.9).contains(&rate), "{rate}");
        let single = contraction_report(&[10.0]).unwrap();
        assert!(single.deviations_n1[0] <= 1e-8 && single.deviations_n2[0] <= 1e-8);
        assert_eq!(single.fitted_decay_rate, None);
    }

    #[test]
    fn report_rejects_bad_lists() {
        assert!(contraction_report(&[]).is_err());
        assert!(contraction_report(&[5.0, 4.0]).is_err());
        assert!(contraction_report(&[0.0, 1.0]).is_err());
        assert!(contraction_report(&[1.0, f64::NAN]).is_err());
    }

    #[test]
    fn sequential_and_parallel_reports_match() {
        let etas: Vec<f64> = (1..=40).map(|k| 0.3 * k as f64).collect();
        let a = contraction_report_with(Execution::Sequential, &etas).unwrap();
        let b = contraction_report_with(Execution::Parallel, &etas).unwrap();
        assert_eq!(a, b);
    }
}
