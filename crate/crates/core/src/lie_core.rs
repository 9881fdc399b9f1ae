//! Generators of the Lorentz group in the (x, y, z, t) ordering, their
//! commutators, and closed-form one-parameter subgroups.
//!
//! Generators are Hermitian-style complex matrices `G`; the associated group
//! elements are `exp(-iθG)`, which is always a real matrix for a real
//! combination of generators. The metric is `diag(1, 1, 1, -1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{Matrix4, Vector3, Vector4};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tolerance;

pub type CMatrix4 = Matrix4<Complex64>;
pub type RMatrix4 = Matrix4<f64>;

pub const X: usize = 0;
pub const Y: usize = 1;
pub const Z: usize = 2;
pub const T: usize = 3;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Real four-vector with components ordered (x, y, z, t).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct FourVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub t: f64,
}

impl FourVector {
    pub const fn new(x: f64, y: f64, z: f64, t: f64) -> Self {
        FourVector { x, y, z, t }
    }

    pub const fn zero() -> Self {
        FourVector::new(0.0, 0.0, 0.0, 0.0)
    }

    /// `x² + y² + z² − t²`; negative for timelike vectors.
    pub fn minkowski_norm(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z - self.t * self.t
    }

    /// Sum of squares of all four components.
    pub fn euclidean_norm_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z + self.t * self.t
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.x, self.y, self.z, self.t]
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        FourVector::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_vector(self) -> Vector4<f64> {
        Vector4::new(self.x, self.y, self.z, self.t)
    }

    pub fn from_vector(v: &Vector4<f64>) -> Self {
        FourVector::new(v[0], v[1], v[2], v[3])
    }

    /// Largest absolute component difference.
    pub fn max_deviation(&self, other: &FourVector) -> f64 {
        (*self - *other)
            .to_array()
            .iter()
            .fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, o: FourVector) -> FourVector {
        FourVector::new(self.x + o.x, self.y + o.y, self.z + o.z, self.t + o.t)
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, o: FourVector) -> FourVector {
        FourVector::new(self.x - o.x, self.y - o.y, self.z - o.z, self.t - o.t)
    }
}

impl Mul<f64> for FourVector {
    type Output = FourVector;
    fn mul(self, s: f64) -> FourVector {
        FourVector::new(self.x * s, self.y * s, self.z * s, self.t * s)
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        self * -1.0
    }
}

/// Boost parameter along a fixed axis. Rapidities add under composition.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize)]
pub struct Rapidity(pub f64);

impl Rapidity {
    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<f64> for Rapidity {
    fn from(eta: f64) -> Self {
        Rapidity(eta)
    }
}

/// Names of the labelled generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum GeneratorLabel {
    J1,
    J2,
    J3,
    K1,
    K2,
    K3,
    N1,
    N2,
}

impl GeneratorLabel {
    pub const ROTATIONS: [GeneratorLabel; 3] =
        [GeneratorLabel::J1, GeneratorLabel::J2, GeneratorLabel::J3];
    pub const BOOSTS: [GeneratorLabel; 3] =
        [GeneratorLabel::K1, GeneratorLabel::K2, GeneratorLabel::K3];
    pub const LORENTZ: [GeneratorLabel; 6] = [
        GeneratorLabel::J1,
        GeneratorLabel::J2,
        GeneratorLabel::J3,
        GeneratorLabel::K1,
        GeneratorLabel::K2,
        GeneratorLabel::K3,
    ];

    pub fn rotation(axis: usize) -> GeneratorLabel {
        GeneratorLabel::ROTATIONS[axis - 1]
    }

    pub fn boost(axis: usize) -> GeneratorLabel {
        GeneratorLabel::BOOSTS[axis - 1]
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GeneratorLabel::J1 => "J1",
            GeneratorLabel::J2 => "J2",
            GeneratorLabel::J3 => "J3",
            GeneratorLabel::K1 => "K1",
            GeneratorLabel::K2 => "K2",
            GeneratorLabel::K3 => "K3",
            GeneratorLabel::N1 => "N1",
            GeneratorLabel::N2 => "N2",
        };
        f.write_str(s)
    }
}

/// A labelled Lie-algebra generator.
#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    pub label: GeneratorLabel,
    pub matrix: CMatrix4,
}

impl Generator {
    pub fn new(label: GeneratorLabel) -> Self {
        Generator {
            label,
            matrix: AlgebraElement::from_label(label).matrix(),
        }
    }

    /// Real coefficients of this generator in the J/K basis.
    pub fn element(&self) -> AlgebraElement {
        AlgebraElement::from_label(self.label)
    }

    /// `exp(-iθG)`.
    pub fn exp(&self, theta: f64) -> GroupElement {
        exp_generator(&self.element(), theta)
    }
}

/// Levi-Civita symbol on indices 0..3.
pub fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// The six rotation and boost generators keyed by label.
pub fn standard_generators() -> BTreeMap<GeneratorLabel, Generator> {
    GeneratorLabel::LORENTZ
        .iter()
        .map(|&l| (l, Generator::new(l)))
        .collect()
}

/// `N1 = K1 − J2` and `N2 = K2 + J1`, built from the standard generators.
pub fn n_generators() -> (Generator, Generator) {
    let g = standard_generators();
    let m = |l: GeneratorLabel| g[&l].matrix;
    (
        Generator {
            label: GeneratorLabel::N1,
            matrix: m(GeneratorLabel::K1) - m(GeneratorLabel::J2),
        },
        Generator {
            label: GeneratorLabel::N2,
            matrix: m(GeneratorLabel::K2) + m(GeneratorLabel::J1),
        },
    )
}

/// `ab − ba`.
pub fn commutator(a: &CMatrix4, b: &CMatrix4) -> CMatrix4 {
    a * b - b * a
}

/// Largest absolute entry of a complex matrix.
pub fn max_abs(m: &CMatrix4) -> f64 {
    m.iter().fold(0.0, |acc, c| acc.max(c.norm()))
}

/// Largest absolute entry of a real matrix.
pub fn max_abs_real(m: &RMatrix4) -> f64 {
    m.iter().fold(0.0, |acc, c| acc.max(c.abs()))
}

/// Largest singular value.
pub fn operator_norm(m: &CMatrix4) -> f64 {
    m.singular_values().max()
}

/// Complexifies a real matrix.
pub fn to_complex(m: &RMatrix4) -> CMatrix4 {
    m.map(|v| Complex64::new(v, 0.0))
}

/// Real linear combination `Σ r_k J_k + b_k K_k` of the Lorentz generators.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AlgebraElement {
    /// Coefficients of J1, J2, J3.
    pub rotation: Vector3<f64>,
    /// Coefficients of K1, K2, K3.
    pub boost: Vector3<f64>,
}

impl AlgebraElement {
    pub fn new(rotation: Vector3<f64>, boost: Vector3<f64>) -> Self {
        AlgebraElement { rotation, boost }
    }

    pub fn from_label(label: GeneratorLabel) -> Self {
        let e = |k: usize| {
            let mut v = Vector3::zeros();
            v[k] = 1.0;
            v
        };
        let z = Vector3::zeros();
        match label {
            GeneratorLabel::J1 => AlgebraElement::new(e(0), z),
            GeneratorLabel::J2 => AlgebraElement::new(e(1), z),
            GeneratorLabel::J3 => AlgebraElement::new(e(2), z),
            GeneratorLabel::K1 => AlgebraElement::new(z, e(0)),
            GeneratorLabel::K2 => AlgebraElement::new(z, e(1)),
            GeneratorLabel::K3 => AlgebraElement::new(z, e(2)),
            // K1 − J2
            GeneratorLabel::N1 => AlgebraElement::new(-e(1), e(0)),
            // K2 + J1
            GeneratorLabel::N2 => AlgebraElement::new(e(0), e(1)),
        }
    }

    /// `u·N1 + v·N2`.
    pub fn null(u: f64, v: f64) -> Self {
        AlgebraElement::new(Vector3::new(v, -u, 0.0), Vector3::new(u, v, 0.0))
    }

    /// Decomposes a complex matrix onto the J/K basis, rejecting matrices
    /// outside the span and combinations with complex coefficients.
    pub fn from_matrix(g: &CMatrix4) -> Result<Self> {
        let rot = [I * g[(Y, Z)], I * g[(Z, X)], I * g[(X, Y)]];
        let boost = [-I * g[(X, T)], -I * g[(Y, T)], -I * g[(Z, T)]];

        let mut rebuilt = CMatrix4::zeros();
        for k in 0..3 {
            rebuilt += Generator::new(GeneratorLabel::ROTATIONS[k]).matrix * rot[k];
            rebuilt += Generator::new(GeneratorLabel::BOOSTS[k]).matrix * boost[k];
        }
        let scale = max_abs(g).max(1.0);
        let residual = max_abs(&(rebuilt - g));
        if residual > tolerance::EXACT * scale {
            return Err(Error::NotInAlgebra(residual));
        }
        let imag = rot
            .iter()
            .chain(boost.iter())
            .fold(0.0f64, |m, c| m.max(c.im.abs()));
        if imag > tolerance::EXACT * scale {
            return Err(Error::NotRealCombination(imag));
        }
        Ok(AlgebraElement::new(
            Vector3::new(rot[0].re, rot[1].re, rot[2].re),
            Vector3::new(boost[0].re, boost[1].re, boost[2].re),
        ))
    }

    /// The complex generator matrix `G`.
    pub fn matrix(&self) -> CMatrix4 {
        let mut g = CMatrix4::zeros();
        for k in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    let eps = levi_civita(k, i, j);
                    if eps != 0.0 {
                        g[(i, j)] += -I * (eps * self.rotation[k]);
                    }
                }
            }
            g[(k, T)] += I * self.boost[k];
            g[(T, k)] += I * self.boost[k];
        }
        g
    }

    /// The real matrix `-iθG`, whose exponential is the group element.
    pub fn real_generator(&self, theta: f64) -> RMatrix4 {
        let r = self.rotation * theta;
        let b = self.boost * theta;
        let mut x = RMatrix4::zeros();
        x[(Y, Z)] = -r[0];
        x[(Z, Y)] = r[0];
        x[(Z, X)] = -r[1];
        x[(X, Z)] = r[1];
        x[(X, Y)] = -r[2];
        x[(Y, X)] = r[2];
        for k in 0..3 {
            x[(k, T)] = b[k];
            x[(T, k)] = b[k];
        }
        x
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, o: AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self.rotation + o.rotation, self.boost + o.boost)
    }
}

impl Mul<f64> for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, s: f64) -> AlgebraElement {
        AlgebraElement::new(self.rotation * s, self.boost * s)
    }
}

/// Real 4×4 Lorentz transformation.
///
/// Elements generated by a nilpotent (null) generator `X` also keep `X`, and
/// act on vectors through the terminating series `v + Xv + X(Xv)/2`. That
/// keeps vectors annihilated by `X` bit-for-bit fixed, which the assembled
/// matrix cannot guarantee once `1 ± (u² + v²)/2` is rounded.
#[derive(Debug, Clone, Copy)]
pub struct GroupElement {
    matrix: RMatrix4,
    null_generator: Option<RMatrix4>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement::from_matrix_unchecked(RMatrix4::identity())
    }

    /// Wraps a matrix without checking that it preserves the metric.
    pub fn from_matrix_unchecked(matrix: RMatrix4) -> Self {
        GroupElement {
            matrix,
            null_generator: None,
        }
    }

    fn from_null_generator(x: RMatrix4) -> Self {
        GroupElement {
            matrix: RMatrix4::identity() + x + x * x * 0.5,
            null_generator: Some(x),
        }
    }

    pub fn matrix(&self) -> &RMatrix4 {
        &self.matrix
    }

    pub fn apply(&self, v: &FourVector) -> FourVector {
        let v = v.to_vector();
        let w = match &self.null_generator {
            Some(x) => {
                let xv = x * v;
                v + xv + (x * xv) * 0.5
            }
            None => self.matrix * v,
        };
        FourVector::from_vector(&w)
    }

    /// `Λ⁻¹ = g Λᵀ g`.
    pub fn inverse(&self) -> Self {
        if let Some(x) = self.null_generator {
            return GroupElement::from_null_generator(-x);
        }
        let g = metric();
        GroupElement::from_matrix_unchecked(g * self.matrix.transpose() * g)
    }

    /// Largest entry of `|ΛᵀgΛ − g|`.
    pub fn metric_defect(&self) -> f64 {
        let g = metric();
        max_abs_real(&(self.matrix.transpose() * g * self.matrix - g))
    }

    pub fn determinant(&self) -> f64 {
        self.matrix.determinant()
    }

    /// `ΛGΛ⁻¹` for a complex generator matrix.
    pub fn conjugate(&self, g: &CMatrix4) -> CMatrix4 {
        to_complex(&self.matrix) * g * to_complex(&self.inverse().matrix)
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;
    fn mul(self, o: GroupElement) -> GroupElement {
        GroupElement::from_matrix_unchecked(self.matrix * o.matrix)
    }
}

/// Minkowski metric `diag(1, 1, 1, −1)`.
pub fn metric() -> RMatrix4 {
    RMatrix4::from_diagonal(&Vector4::new(1.0, 1.0, 1.0, -1.0))
}

/// `exp(-iθG)` for a real combination `G`, in closed form.
///
/// Pure rotations use the Rodrigues formula, pure boosts the hyperbolic
/// formula, and the null (nilpotent) span terminates after the quadratic
/// term. Mixed elements use the Cayley–Hamilton reduction
/// `X⁴ = (A + B)X² − AB` with `A = α², B = −β²` the squared eigenvalues.
pub fn exp_generator(elem: &AlgebraElement, theta: f64) -> GroupElement {
    let phi = elem.rotation * theta;
    let zeta = elem.boost * theta;
    if zeta == Vector3::zeros() {
        GroupElement::from_matrix_unchecked(rotation_matrix(&phi))
    } else if phi == Vector3::zeros() {
        GroupElement::from_matrix_unchecked(boost_matrix(&zeta))
    } else {
        let x = elem.real_generator(theta);
        if squared_eigenvalues(&phi, &zeta) == (0.0, 0.0) {
            GroupElement::from_null_generator(x)
        } else {
            GroupElement::from_matrix_unchecked(mixed_exponential(&x, &phi, &zeta))
        }
    }
}

/// `exp(-iθG)` for an arbitrary complex matrix, which must be a real
/// combination of the Lorentz generators.
pub fn exp_matrix(g: &CMatrix4, theta: f64) -> Result<GroupElement> {
    Ok(exp_generator(&AlgebraElement::from_matrix(g)?, theta))
}

fn rotation_matrix(phi: &Vector3<f64>) -> RMatrix4 {
    let angle = phi.norm();
    let mut m = RMatrix4::identity();
    if angle == 0.0 {
        return m;
    }
    let n = phi / angle;
    let (s, c) = angle.sin_cos();
    let k = nalgebra::Matrix3::new(0.0, -n[2], n[1], n[2], 0.0, -n[0], -n[1], n[0], 0.0);
    let r = nalgebra::Matrix3::identity() + k * s + k * k * (1.0 - c);
    m.fixed_view_mut::<3, 3>(0, 0).copy_from(&r);
    m
}

fn boost_matrix(zeta: &Vector3<f64>) -> RMatrix4 {
    let rapidity = zeta.norm();
    let n = zeta / rapidity;
    let (sh, ch) = (rapidity.sinh(), rapidity.cosh());
    let mut m = RMatrix4::identity();
    for i in 0..3 {
        for j in 0..3 {
            m[(i, j)] += (ch - 1.0) * n[i] * n[j];
        }
        m[(i, T)] = sh * n[i];
        m[(T, i)] = sh * n[i];
    }
    m[(T, T)] = ch;
    m
}

/// Squared eigenvalue pair `(α², −β²)` of `-iθG` from the invariants
/// `α² − β² = |ζ|² − |φ|²` and `αβ = ζ·φ`.
fn squared_eigenvalues(phi: &Vector3<f64>, zeta: &Vector3<f64>) -> (f64, f64) {
    let s = zeta.norm_squared() - phi.norm_squared();
    let d = zeta.dot(phi);
    if s == 0.0 && d == 0.0 {
        return (0.0, 0.0);
    }
    let r = s.hypot(2.0 * d);
    let (alpha2, beta2) = if s >= 0.0 {
        let a = 0.5 * (s + r);
        (a, d * d / a)
    } else {
        let b = 0.5 * (r - s);
        (d * d / b, b)
    };
    (alpha2, -beta2)
}

fn mixed_exponential(x: &RMatrix4, phi: &Vector3<f64>, zeta: &Vector3<f64>) -> RMatrix4 {
    let (a, b) = squared_eigenvalues(phi, zeta);
    let id = RMatrix4::identity();
    let x2 = x * x;
    let x3 = x2 * x;
    let [c0, c1, c2, c3] = exp_coefficients(a, b);
    id * c0 + x * c1 + x2 * c2 + x3 * c3
}

/// Coefficients of `exp X = c0 + c1 X + c2 X² + c3 X³` for an element with
/// squared eigenvalues `a ≥ 0 ≥ b`.
fn exp_coefficients(a: f64, b: f64) -> [f64; 4] {
    let gap = a - b;
    if gap <= 1.0 {
        // Entire-series form, free of the 0/0 at a = b = 0.
        // h_k = Σ_{j=0}^{k} a^j b^(k−j)
        let mut h = vec![1.0];
        for k in 1..30 {
            let prev = h[k - 1];
            h.push(a * prev + b.powi(k as i32));
        }
        let mut fact = vec![1.0f64; 64];
        for n in 1..64 {
            fact[n] = fact[n - 1] * n as f64;
        }
        let (mut c0, mut c1, mut c2, mut c3) = (1.0, 1.0, 0.0, 0.0);
        for k in 1..29 {
            c2 += h[k - 1] / fact[2 * k];
            c3 += h[k - 1] / fact[2 * k + 1];
            if k >= 2 {
                c0 -= a * b * h[k - 2] / fact[2 * k];
                c1 -= a * b * h[k - 2] / fact[2 * k + 1];
            }
        }
        return [c0, c1, c2, c3];
    }
    let alpha = a.max(0.0).sqrt();
    let beta = (-b).max(0.0).sqrt();
    let sinhc = if alpha == 0.0 {
        1.0
    } else {
        alpha.sinh() / alpha
    };
    let sinc = if beta == 0.0 { 1.0 } else { beta.sin() / beta };
    let (ch, cs) = (alpha.cosh(), beta.cos());
    [
        (-b * ch + a * cs) / gap,
        (-b * sinhc + a * sinc) / gap,
        (ch - cs) / gap,
        (sinhc - sinc) / gap,
    ]
}

/// Boost along z with rapidity `eta`.
pub fn boost_z(eta: Rapidity) -> GroupElement {
    let (s, c) = (eta.0.sinh(), eta.0.cosh());
    let mut m = RMatrix4::identity();
    m[(Z, Z)] = c;
    m[(Z, T)] = s;
    m[(T, Z)] = s;
    m[(T, T)] = c;
    GroupElement::from_matrix_unchecked(m)
}

/// Rotation about z by `angle`, counter-clockwise in the (x, y) plane.
pub fn rotation_z(angle: f64) -> GroupElement {
    Generator::new(GeneratorLabel::J3).exp(angle)
}

/// Applies a group element to a four-vector.
pub fn apply(elem: &GroupElement, v: &FourVector) -> FourVector {
    elem.apply(v)
}
