//! Little groups of massive and massless four-momenta and the gauge action
//! of the massless (E(2)-like) group on a plane-wave four-potential.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie_core::{
    boost_z, exp_generator, exp_matrix, AlgebraElement, CMatrix4, FourVector, Generator,
    GeneratorLabel, GroupElement, Rapidity,
};
use crate::tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ParticleClass {
    Massive,
    Massless,
}

impl fmt::Display for ParticleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParticleClass::Massive => f.write_str("Massive"),
            ParticleClass::Massless => f.write_str("Massless"),
        }
    }
}

/// Classifies a positive-energy four-momentum. `rel_tol` is relative to `t²`.
pub fn classify(p: &FourVector, rel_tol: f64) -> Result<ParticleClass> {
    if p.t.is_nan() || p.t <= 0.0 {
        return Err(Error::NonPositiveEnergy(p.t));
    }
    let norm = p.minkowski_norm();
    let scale = rel_tol * p.t * p.t;
    if norm.abs() <= scale {
        Ok(ParticleClass::Massless)
    } else if norm < -scale {
        Ok(ParticleClass::Massive)
    } else {
        Err(Error::Tachyonic { norm })
    }
}

/// A little-group generator. Boosted rotations carry a primed name.
#[derive(Debug, Clone, PartialEq)]
pub struct LittleGroupGenerator {
    pub name: &'static str,
    pub matrix: CMatrix4,
}

/// The little group of a momentum along the z axis.
#[derive(Debug, Clone, PartialEq)]
pub struct LittleGroup {
    pub class: ParticleClass,
    /// Rapidity of the massive particle relative to its rest frame.
    pub rapidity: Option<Rapidity>,
    pub generators: Vec<LittleGroupGenerator>,
}

/// Builds the little group of `p`, which must lie on the z axis (and point
/// along +z when massless).
pub fn little_group(p: &FourVector) -> Result<LittleGroup> {
    let class = classify(p, tolerance::CLASSIFY_REL)?;
    let transverse = p.x.abs().max(p.y.abs());
    if transverse > tolerance::CLASSIFY_REL * p.t {
        return Err(Error::UnsupportedDirection(format!(
            "momentum must lie along the z axis, got transverse component {transverse:e}"
        )));
    }
    match class {
        ParticleClass::Massive => {
            let eta = Rapidity((p.z / p.t).atanh());
            let b = boost_z(eta);
            let j = |l| Generator::new(l).matrix;
            Ok(LittleGroup {
                class,
                rapidity: Some(eta),
                generators: vec![
                    LittleGroupGenerator {
                        name: if eta.0 == 0.0 { "J1" } else { "J1'" },
                        matrix: b.conjugate(&j(GeneratorLabel::J1)),
                    },
                    LittleGroupGenerator {
                        name: if eta.0 == 0.0 { "J2" } else { "J2'" },
                        matrix: b.conjugate(&j(GeneratorLabel::J2)),
                    },
                    LittleGroupGenerator {
                        name: "J3",
                        matrix: j(GeneratorLabel::J3),
                    },
                ],
            })
        }
        ParticleClass::Massless => {
            if p.z.is_nan() || p.z <= 0.0 {
                return Err(Error::UnsupportedDirection(
                    "massless momentum must point along +z".into(),
                ));
            }
            let g = |l| LittleGroupGenerator {
                name: match l {
                    GeneratorLabel::J3 => "J3",
                    GeneratorLabel::N1 => "N1",
                    _ => "N2",
                },
                matrix: Generator::new(l).matrix,
            };
            Ok(LittleGroup {
                class,
                rapidity: None,
                generators: vec![
                    g(GeneratorLabel::J3),
                    g(GeneratorLabel::N1),
                    g(GeneratorLabel::N2),
                ],
            })
        }
    }
}

/// Generators of the little group of `p`; see [`little_group`].
pub fn little_group_generators(p: &FourVector) -> Result<Vec<LittleGroupGenerator>> {
    little_group(p).map(|g| g.generators)
}

/// Exponentiates each generator with its parameter, applies the ordered
/// product to `p`, and returns the largest component deviation from `p`.
pub fn verify_invariance(p: &FourVector, params: &[f64]) -> Result<f64> {
    let generators = little_group_generators(p)?;
    if params.len() != generators.len() {
        return Err(Error::ParameterCount {
            expected: generators.len(),
            got: params.len(),
        });
    }
    let mut total = GroupElement::identity();
    for (g, &theta) in generators.iter().zip(params) {
        total = total * exp_matrix(&g.matrix, theta)?;
    }
    Ok(total.apply(p).max_deviation(p))
}

/// `exp(−i(uN1 + vN2))`.
///
/// ```text
/// | 1  0  −u          u         |
/// | 0  1  −v          v         |
/// | u  v  1 − (u²+v²)/2  (u²+v²)/2 |
/// | u  v  −(u²+v²)/2  1 + (u²+v²)/2 |
/// ```
pub fn gauge_element(u: f64, v: f64) -> GroupElement {
    exp_generator(&AlgebraElement::null(u, v), 1.0)
}

/// Amplitude of a plane-wave four-potential `A e^{i(kz − ωt)}`. The phase is
/// carried as `(k, ω)` and never sampled.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FourPotential {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a0: f64,
    pub k: f64,
    pub omega: f64,
}

impl FourPotential {
    /// Massless plane wave along z, so `k = omega`.
    pub fn new(a1: f64, a2: f64, a3: f64, a0: f64, omega: f64) -> Self {
        FourPotential {
            a1,
            a2,
            a3,
            a0,
            k: omega,
            omega,
        }
    }

    pub fn lorentz_condition(&self) -> bool {
        self.a3 == self.a0
    }

    /// Amplitude as a four-vector in (x, y, z, t) order.
    pub fn amplitude(&self) -> FourVector {
        FourVector::new(self.a1, self.a2, self.a3, self.a0)
    }

    fn validate(&self) -> Result<()> {
        if !self.lorentz_condition() {
            return Err(Error::LorentzConditionViolated {
                a3: self.a3,
                a0: self.a0,
            });
        }
        if self.k != self.omega {
            return Err(Error::OffShellWave {
                k: self.k,
                omega: self.omega,
            });
        }
        Ok(())
    }
}

/// Coefficient of the lightlike shift `(0, 0, 1, 1)` produced by
/// `gauge_element(u, v)` on a potential obeying the Lorentz condition.
pub fn gauge_shift(a: &FourPotential, u: f64, v: f64) -> f64 {
    u * a.a1 + v * a.a2
}

/// Applies `gauge_element(u, v)` to the potential amplitude.
///
/// Under `a3 = a0` the matrix action reduces to adding `u·a1 + v·a2` to both
/// longitudinal components, which is how it is evaluated here so that the
/// transverse components come back untouched.
pub fn gauge_transform(a: &FourPotential, u: f64, v: f64) -> Result<FourPotential> {
    a.validate()?;
    let shift = gauge_shift(a, u, v);
    Ok(FourPotential {
        a3: a.a3 + shift,
        a0: a.a0 + shift,
        ..*a
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_core::{commutator, max_abs, max_abs_real};
    use num_complex::Complex64;

    const I: Complex64 = Complex64::new(0.0, 1.0);

    #[test]
    fn classification_examples() {
        let tol = tolerance::CLASSIFY_REL;
        assert_eq!(
            classify(&FourVector::new(0.0, 0.0, 0.0, 1.0), tol),
            Ok(ParticleClass::Massive)
        );
        assert_eq!(
            classify(&FourVector::new(0.0, 0.0, 1.0, 1.0), tol),
            Ok(ParticleClass::Massless)
        );
        let err = classify(&FourVector::new(0.0, 0.0, 2.0, 1.0), tol).unwrap_err();
        assert!(err.to_string().starts_with("tachyonic: unsupported"));
        assert_eq!(
            classify(&FourVector::new(0.0, 0.0, 0.0, -1.0), tol),
            Err(Error::NonPositiveEnergy(-1.0))
        );
    }

    #[test]
    fn rest_frame_group_is_rotations() {
        let p = FourVector::new(0.0, 0.0, 0.0, 1.0);
        let g = little_group_generators(&p).unwrap();
        let names: Vec<_> = g.iter().map(|g| g.name).collect();
        assert_eq!(names, ["J1", "J2", "J3"]);
        let pv = nalgebra::Vector4::new(0.0, 0.0, 0.0, 1.0).map(|v| Complex64::new(v, 0.0));
        for gen in &g {
            assert_eq!((gen.matrix * pv).norm(), 0.0);
        }
    }

    #[test]
    fn boosted_generators_keep_rotation_algebra() {
        let eta = 2.0f64;
        let p = FourVector::new(0.0, 0.0, eta.sinh(), eta.cosh());
        let g = little_group(&p).unwrap();
        assert!((g.rapidity.unwrap().0 - eta).abs() < 1e-12);
        let [a, b, c] = [
            &g.generators[0].matrix,
            &g.generators[1].matrix,
            &g.generators[2].matrix,
        ];
        assert!(max_abs(&(commutator(a, b) - c * I)) < 1e-9);
        assert!(max_abs(&(commutator(b, c) - a * I)) < 1e-9);
        assert!(max_abs(&(commutator(c, a) - b * I)) < 1e-9);
        let pv = p.to_vector().map(|v| Complex64::new(v, 0.0));
        for gen in &g.generators {
            assert!((gen.matrix * pv).norm() < 1e-12 * p.t);
        }
    }

    #[test]
    fn massless_group_is_e2() {
        let g = little_group_generators(&FourVector::new(0.0, 0.0, 1.0, 1.0)).unwrap();
        let names: Vec<_> = g.iter().map(|g| g.name).collect();
        assert_eq!(names, ["J3", "N1", "N2"]);
        let (j3, n1, n2) = (&g[0].matrix, &g[1].matrix, &g[2].matrix);
        assert_eq!(max_abs(&commutator(n1, n2)), 0.0);
        assert_eq!(commutator(j3, n1), n2 * I);
        assert_eq!(commutator(j3, n2), n1 * -I);
    }

    #[test]
    fn unsupported_directions() {
        assert!(matches!(
            little_group(&FourVector::new(1.0, 0.0, 0.0, 2.0)),
            Err(Error::UnsupportedDirection(_))
        ));
        assert!(matches!(
            little_group(&FourVector::new(0.0, 0.0, -1.0, 1.0)),
            Err(Error::UnsupportedDirection(_))
        ));
    }

    #[test]
    fn invariance_examples() {
        let rest = FourVector::new(0.0, 0.0, 0.0, 1.0);
        assert!(verify_invariance(&rest, &[0.3, -2.9, 1.7]).unwrap() <= 1e-12);

        let w = 2.0;
        let photon = FourVector::new(0.0, 0.0, w, w);
        assert!(verify_invariance(&photon, &[0.7, 1.2, -0.5]).unwrap() <= 1e-12);

        let eta = 3.0f64;
        let moving = FourVector::new(0.0, 0.0, eta.sinh(), eta.cosh());
        assert!(verify_invariance(&moving, &[1.1, -2.3, 2.9]).unwrap() <= 1e-9);

        assert_eq!(
            verify_invariance(&rest, &[1.0]),
            Err(Error::ParameterCount {
                expected: 3,
                got: 1
            })
        );
    }

    #[test]
    fn gauge_element_examples() {
        assert_eq!(gauge_element(0.0, 0.0), GroupElement::identity());
        let prod = gauge_element(0.7, -1.1) * gauge_element(-0.7, 1.1);
        assert!(max_abs_real(&(prod.matrix() - nalgebra::Matrix4::identity())) < 1e-12);
        let m = *gauge_element(1.0, 0.0).matrix();
        assert_eq!(m[(2, 0)], 1.0);
        assert_eq!(m[(3, 3)], 1.5);
    }

    #[test]
    fn gauge_element_matches_closed_matrix() {
        let (u, v) = (0.3, -0.4);
        let s = (u * u + v * v) / 2.0;
        #[rustfmt::skip]
        let expected = nalgebra::Matrix4::new(
            1.0, 0.0, -u, u,
            0.0, 1.0, -v, v,
            u, v, 1.0 - s, s,
            u, v, -s, 1.0 + s,
        );
        assert!(max_abs_real(&(gauge_element(u, v).matrix() - expected)) < 1e-15);
    }

    #[test]
    fn gauge_transform_examples() {
        let a = FourPotential::new(1.0, 0.0, 0.5, 0.5, 1.0);
        let b = gauge_transform(&a, 1.0, 0.0).unwrap();
        assert_eq!((b.a1, b.a2, b.a3, b.a0), (1.0, 0.0, 1.5, 1.5));

        let a = FourPotential::new(0.2, -0.7, 3.0, 3.0, 2.0);
        assert_eq!(gauge_transform(&a, 0.0, 0.0).unwrap(), a);

        let a = FourPotential::new(0.0, 1.0, 0.0, 0.0, 1.0);
        let b = gauge_transform(&a, 0.0, 2.0).unwrap();
        assert_eq!((b.a1, b.a2, b.a3, b.a0), (0.0, 1.0, 2.0, 2.0));
    }

    #[test]
    fn gauge_transform_agrees_with_matrix_action() {
        let a = FourPotential::new(0.8, -1.3, 0.25, 0.25, 1.0);
        let (u, v) = (1.7, -0.6);
        let via_matrix = gauge_element(u, v).apply(&a.amplitude());
        let b = gauge_transform(&a, u, v).unwrap();
        assert!(via_matrix.max_deviation(&b.amplitude()) < 1e-12);
    }

    #[test]
    fn gauge_transform_rejects_bad_potentials() {
        let a = FourPotential::new(1.0, 0.0, 0.5, 0.4, 1.0);
        assert!(matches!(
            gauge_transform(&a, 1.0, 0.0),
            Err(Error::LorentzConditionViolated { .. })
        ));
        let mut a = FourPotential::new(1.0, 0.0, 0.5, 0.5, 1.0);
        a.k = 2.0;
        assert!(matches!(
            gauge_transform(&a, 1.0, 0.0),
            Err(Error::OffShellWave { .. })
        ));
    }
}
