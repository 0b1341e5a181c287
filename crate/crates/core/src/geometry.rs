//! Differential geometry of the toroidal helix.
//!
//! The curve winds `omega` times around a torus of major radius `R` while
//! going once around the z-axis:
//!
//! ```text
//! r(φ) = W(φ) ρ̂(φ) + b sin(ωφ) k̂,     W(φ) = R + a cos(ωφ)
//! ```
//!
//! `a` is the horizontal semi-axis of each loop and `b` the vertical one; the
//! circular helix is simply `a == b`. Everything here is a closed-form
//! function of `φ` and is returned in fixed Cartesian coordinates. The
//! cylindrical unit vectors and the loop-local vectors used to assemble the
//! Frenet frame stay private.
//!
//! The 3D metric of the tube coordinates `(φ, q_N, q_B)` is provided only as
//! a self-check of the frame, curvature and torsion.

use std::f64::consts::PI;

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};
use crate::quadrature::{integrate_periodic, QuadratureSpec};

/// Curvature below which the principal normal is considered undefined.
pub const KAPPA_MIN: f64 = 1e-12;

/// Parameters `(R, a, b, ω)` of a circular or elliptic toroidal helix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HelixShape {
    major_radius: f64,
    a: f64,
    b: f64,
    omega: u32,
}

impl HelixShape {
    pub fn new(major_radius: f64, a: f64, b: f64, omega: u32) -> Result<Self> {
        let finite = major_radius.is_finite() && a.is_finite() && b.is_finite();
        if !finite || major_radius <= 0.0 || a <= 0.0 || b <= 0.0 {
            return Err(Error::InvalidShape(format!(
                "R, a and b must be finite and positive (got R={major_radius}, a={a}, b={b})"
            )));
        }
        if omega == 0 {
            return Err(Error::InvalidShape("omega must be at least 1".into()));
        }
        if major_radius - a <= 0.0 {
            return Err(Error::InvalidShape(format!(
                "R - a must be positive so the curve stays off the z-axis (got R={major_radius}, a={a})"
            )));
        }
        Ok(Self {
            major_radius,
            a,
            b,
            omega,
        })
    }

    /// Circular helix, `a == b == radius`.
    pub fn circular(major_radius: f64, radius: f64, omega: u32) -> Result<Self> {
        Self::new(major_radius, radius, radius, omega)
    }

    pub fn major_radius(&self) -> f64 {
        self.major_radius
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn omega(&self) -> u32 {
        self.omega
    }

    pub fn is_circular(&self) -> bool {
        self.a == self.b
    }

    /// Angular period of every scalar geometric quantity, `2π/ω`.
    pub fn period(&self) -> f64 {
        2.0 * PI / self.omega as f64
    }

    fn w(&self) -> f64 {
        self.omega as f64
    }

    /// Distance from the z-axis, `W(φ) = R + a cos(ωφ)`.
    pub fn radial_distance(&self, phi: f64) -> f64 {
        self.major_radius + self.a * (self.w() * phi).cos()
    }

    /// `P(φ) = sqrt(a² sin²(ωφ) + b² cos²(ωφ))`, the loop-tangential speed per unit ωφ.
    pub fn loop_speed(&self, phi: f64) -> f64 {
        let (s, c) = (self.w() * phi).sin_cos();
        (self.a * self.a * s * s + self.b * self.b * c * c).sqrt()
    }

    pub fn position(&self, phi: f64) -> Vector3<f64> {
        self.position_derivatives(phi)[0]
    }

    /// `[r, r′, r″, r‴]`, exact φ-derivatives of the curve.
    pub fn position_derivatives(&self, phi: f64) -> [Vector3<f64>; 4] {
        let w = self.w();
        let (s, c) = (w * phi).sin_cos();
        let (sp, cp) = phi.sin_cos();
        let a = self.a;

        let rad = [self.major_radius + a * c, -a * w * s, -a * w * w * c, a * w * w * w * s];
        let z = [self.b * s, self.b * w * c, -self.b * w * w * s, -self.b * w * w * w * c];

        // (W ρ̂)^(k) = Σ_j C(k,j) W^(k−j) ρ̂^(j), with ρ̂′ = φ̂ and φ̂′ = −ρ̂.
        let rho_derivs = [
            Vector3::new(cp, sp, 0.0),
            Vector3::new(-sp, cp, 0.0),
            Vector3::new(-cp, -sp, 0.0),
            Vector3::new(sp, -cp, 0.0),
        ];
        const BINOM: [[f64; 4]; 4] = [
            [1.0, 0.0, 0.0, 0.0],
            [1.0, 1.0, 0.0, 0.0],
            [1.0, 2.0, 1.0, 0.0],
            [1.0, 3.0, 3.0, 1.0],
        ];
        let mut out = [Vector3::zeros(); 4];
        for (k, slot) in out.iter_mut().enumerate() {
            let mut v = Vector3::zeros();
            for j in 0..=k {
                v += rho_derivs[j] * (BINOM[k][j] * rad[k - j]);
            }
            v.z = z[k];
            *slot = v;
        }
        out
    }

    /// `f(φ) = ‖dr/dφ‖ = sqrt(P²ω² + W²)`.
    pub fn speed_f(&self, phi: f64) -> f64 {
        self.speed_squared(phi)[0].sqrt()
    }

    // g = f², g′, g″
    fn speed_squared(&self, phi: f64) -> [f64; 3] {
        let w = self.w();
        let (s, c) = (w * phi).sin_cos();
        let (s2, c2) = (2.0 * w * phi).sin_cos();
        let a = self.a;
        let rad = self.major_radius + a * c;
        let rad1 = -a * w * s;
        let rad2 = -a * w * w * c;
        let diff = a * a - self.b * self.b;
        let p2 = a * a * s * s + self.b * self.b * c * c;
        let p2_1 = w * diff * s2;
        let p2_2 = 2.0 * w * w * diff * c2;
        [
            w * w * p2 + rad * rad,
            w * w * p2_1 + 2.0 * rad * rad1,
            w * w * p2_2 + 2.0 * (rad1 * rad1 + rad * rad2),
        ]
    }

    /// Analytic `(f′, f″)`.
    pub fn speed_derivatives(&self, phi: f64) -> (f64, f64) {
        let [g, g1, g2] = self.speed_squared(phi);
        let f = g.sqrt();
        let f1 = g1 / (2.0 * f);
        let f2 = g2 / (2.0 * f) - g1 * g1 / (4.0 * f * f * f);
        (f1, f2)
    }

    /// Curvature from the closed-form components `P1`, `P2` of the elliptic helix.
    pub fn curvature(&self, phi: f64) -> Curvature {
        let w = self.w();
        let (s, c) = (w * phi).sin_cos();
        let (a, b) = (self.a, self.b);
        let rad = self.radial_distance(phi);
        let p = self.loop_speed(phi);
        let f2 = w * w * p * p + rad * rad;
        let f = f2.sqrt();

        let p1 = -(b / p) * (a * w * w + rad * c) / f2;
        let p2 = s / f * (a / p + (w * w * rad * (a * a - b * b) * c + p * p * a * w * w) / (f2 * p));
        Curvature {
            kappa: p1.hypot(p2),
            p1,
            p2,
        }
    }

    pub fn kappa(&self, phi: f64) -> f64 {
        self.curvature(phi).kappa
    }

    /// Curvature potential `V_c = −κ²/8` in units of ħ²/m (R enters through κ).
    pub fn curvature_potential(&self, phi: f64) -> f64 {
        let k = self.kappa(phi);
        -0.125 * k * k
    }

    /// Frenet trihedron assembled from the loop-local orthonormal vectors.
    pub fn frenet_frame(&self, phi: f64) -> Result<FrenetData> {
        let curv = self.curvature(phi);
        if curv.kappa <= KAPPA_MIN {
            return Err(Error::DegenerateFrame { phi, kappa: curv.kappa });
        }
        let w = self.w();
        let (s, c) = (w * phi).sin_cos();
        let (sp, cp) = phi.sin_cos();
        let rho = Vector3::new(cp, sp, 0.0);
        let phi_hat = Vector3::new(-sp, cp, 0.0);
        let k_hat = Vector3::z();

        let (a, b) = (self.a, self.b);
        let rad = self.radial_distance(phi);
        let p = self.loop_speed(phi);
        let f = (w * w * p * p + rad * rad).sqrt();

        let theta_e = (rho * (-a * s) + k_hat * (b * c)) / p;
        let n_e = (rho * (b * c) + k_hat * (a * s)) / p;
        let e2 = (theta_e * rad - phi_hat * (p * w)) / f;

        let tangent = (theta_e * (p * w) + phi_hat * rad) / f;
        let normal = (e2 * curv.p2 + n_e * curv.p1) / curv.kappa;
        let binormal = (e2 * (-curv.p1) + n_e * curv.p2) / curv.kappa;

        Ok(FrenetData {
            position: self.position(phi),
            tangent,
            normal,
            binormal,
            speed_f: f,
            kappa: curv.kappa,
            tau: self.torsion(phi)?,
        })
    }

    /// `τ = (r′ × r″)·r‴ / ‖r′ × r″‖²`.
    pub fn torsion(&self, phi: f64) -> Result<f64> {
        let [_, r1, r2, r3] = self.position_derivatives(phi);
        let cross = r1.cross(&r2);
        let kappa = self.kappa(phi);
        if kappa <= KAPPA_MIN {
            return Err(Error::DegenerateFrame { phi, kappa });
        }
        Ok(cross.dot(&r3) / cross.norm_squared())
    }

    /// Tube point `r + q_N N̂ + q_B B̂`.
    pub fn tube_position(&self, point: TubePoint) -> Result<Vector3<f64>> {
        let frame = self.frenet_frame(point.phi)?;
        Ok(frame.position + frame.normal * point.q_n + frame.binormal * point.q_b)
    }

    /// Covariant and contravariant metric of `(φ, q_N, q_B)` at a tube point.
    pub fn metric_at(&self, point: TubePoint) -> Result<MetricTensors> {
        let frame = self.frenet_frame(point.phi)?;
        let g = 1.0 - point.q_n * frame.kappa;
        if !(g > 0.0) {
            return Err(Error::InvalidTubePoint { g });
        }
        let f = frame.speed_f;
        let tau = frame.tau;
        let (qn, qb) = (point.q_n, point.q_b);

        let g_cov = Matrix3::new(
            f * f * (g * g + tau * tau * (qn * qn + qb * qb)),
            -tau * qb * f,
            tau * qn * f,
            -tau * qb * f,
            1.0,
            0.0,
            tau * qn * f,
            0.0,
            1.0,
        );
        let scale = 1.0 / (f * f * g * g);
        let g_contra = Matrix3::new(
            1.0,
            tau * qb * f,
            -tau * qn * f,
            tau * qb * f,
            f * f * (g * g + tau * tau * qb * qb),
            -tau * tau * qn * qb * f * f,
            -tau * qn * f,
            -tau * tau * qn * qb * f * f,
            f * f * (g * g + tau * tau * qn * qn),
        ) * scale;

        Ok(MetricTensors {
            g_cov,
            g_contra,
            sqrt_g: f * g,
        })
    }

    /// Total length `L = ∫₀^{2π} f dφ`.
    pub fn arc_length(&self, quad: &QuadratureSpec) -> Result<f64> {
        let res = integrate_periodic(|phi| self.speed_f(phi).into(), quad)?;
        Ok(res.value.re)
    }
}

/// `κ = sqrt(P1² + P2²)` together with its frame components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Curvature {
    pub kappa: f64,
    pub p1: f64,
    pub p2: f64,
}

/// Position, Frenet frame, speed, curvature and torsion at one φ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetData {
    pub position: Vector3<f64>,
    pub tangent: Vector3<f64>,
    pub normal: Vector3<f64>,
    pub binormal: Vector3<f64>,
    pub speed_f: f64,
    pub kappa: f64,
    pub tau: f64,
}

/// A point `(φ, q_N, q_B)` near the curve, offset along the normal and binormal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TubePoint {
    pub phi: f64,
    pub q_n: f64,
    pub q_b: f64,
}

impl TubePoint {
    pub fn new(phi: f64, q_n: f64, q_b: f64) -> Self {
        Self { phi, q_n, q_b }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricTensors {
    pub g_cov: Matrix3<f64>,
    pub g_contra: Matrix3<f64>,
    pub sqrt_g: f64,
}

/// Closed forms written specifically for the circular helix (`b` is ignored,
/// `a` is the loop radius). Used to cross-check the general elliptic formulas.
pub mod circular {
    use nalgebra::Vector3;

    use super::HelixShape;

    pub fn speed_f(shape: &HelixShape, phi: f64) -> f64 {
        let a = shape.a();
        let w = shape.omega() as f64;
        let rad = shape.radial_distance(phi);
        (a * a * w * w + rad * rad).sqrt()
    }

    /// `f′ = −aω W sin(ωφ) / f`.
    pub fn speed_first_derivative(shape: &HelixShape, phi: f64) -> f64 {
        let w = shape.omega() as f64;
        -shape.a() * w * shape.radial_distance(phi) * (w * phi).sin() / speed_f(shape, phi)
    }

    /// `(κ, P1, P2)`.
    pub fn curvature(shape: &HelixShape, phi: f64) -> (f64, f64, f64) {
        let a = shape.a();
        let w = shape.omega() as f64;
        let (s, c) = (w * phi).sin_cos();
        let rad = shape.radial_distance(phi);
        let f = speed_f(shape, phi);
        let p1 = -(a * w * w + rad * c) / (f * f);
        let aw_f = a * w / f;
        let p2 = s / f * (1.0 + aw_f * aw_f);
        (p1.hypot(p2), p1, p2)
    }

    /// `(T̂, N̂, B̂)`.
    pub fn frame(shape: &HelixShape, phi: f64) -> (Vector3<f64>, Vector3<f64>, Vector3<f64>) {
        let a = shape.a();
        let w = shape.omega() as f64;
        let (s, c) = (w * phi).sin_cos();
        let (sp, cp) = phi.sin_cos();
        let rho = Vector3::new(cp, sp, 0.0);
        let phi_hat = Vector3::new(-sp, cp, 0.0);
        let k_hat = Vector3::z();
        let rad = shape.radial_distance(phi);
        let f = speed_f(shape, phi);
        let (kappa, p1, p2) = curvature(shape, phi);

        let theta = rho * (-s) + k_hat * c;
        let n = rho * c + k_hat * s;
        let e2 = (theta * rad - phi_hat * (a * w)) / f;
        let t = (theta * (a * w) + phi_hat * rad) / f;
        let normal = (e2 * p2 + n * p1) / kappa;
        let binormal = (e2 * (-p1) + n * p2) / kappa;
        (t, normal, binormal)
    }
}
