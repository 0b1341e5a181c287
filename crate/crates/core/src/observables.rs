//! Probability currents along the helix and the toroidal moments they carry.
//!
//! Currents are in units of `q_e ħ / (m_e R²)` and moments in `q_e ħ R / m_e`
//! when the shape is given in units of `R`.

use std::f64::consts::PI;

use nalgebra::Vector3;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::HelixShape;
use crate::quadrature::{integrate_periodic_many, QuadratureSpec};
use crate::spectrum::EigenState;

/// Below this magnitude a with-V_c moment is treated as zero and no ratio is formed.
pub const RATIO_DENOMINATOR_FLOOR: f64 = 1e-6;

/// Identifies which eigenstate a derived quantity came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StateRef {
    pub p: u32,
    pub alpha: usize,
    pub include_vc: bool,
}

impl From<&EigenState> for StateRef {
    fn from(state: &EigenState) -> Self {
        Self {
            p: state.p(),
            alpha: state.alpha,
            include_vc: state.include_vc,
        }
    }
}

/// Tangential current `j(φ) = Im[χ* ∂_φχ] / f`.
pub fn current(state: &EigenState, shape: &HelixShape, phi: f64) -> f64 {
    let (psi, dpsi) = state.wavefunction(shape, phi);
    (psi.conj() * dpsi).im / shape.speed_f(phi)
}

/// The same current written as the double sum over real amplitudes `C_m C_n`.
///
/// Only meaningful when the coefficients are real (the imaginary parts are
/// ignored); kept as an independent check of [`current`].
pub fn current_real_expansion(state: &EigenState, shape: &HelixShape, phi: f64) -> f64 {
    let f = shape.speed_f(phi);
    let (f1, _) = shape.speed_derivatives(phi);
    let omega = shape.omega() as f64;
    let basis = &state.basis;
    let mut sum = 0.0;
    for (cm, m) in state.coefficients.iter().zip(basis.harmonics()) {
        for (cn, n) in state.coefficients.iter().zip(basis.harmonics()) {
            let (s, c) = (omega * (n - m) as f64 * phi).sin_cos();
            sum += cm.re * cn.re * (basis.wavenumber(n) / (f * f) * c - f1 / (2.0 * f * f * f) * s);
        }
    }
    sum / (2.0 * PI)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurrentProfile {
    pub phi_grid: Vec<f64>,
    pub j_values: Vec<f64>,
    pub state_ref: StateRef,
}

impl CurrentProfile {
    pub fn max_abs(&self) -> f64 {
        self.j_values.iter().fold(0.0, |m, j| m.max(j.abs()))
    }

    pub fn rms(&self) -> f64 {
        (self.j_values.iter().map(|j| j * j).sum::<f64>() / self.j_values.len() as f64).sqrt()
    }
}

/// Uniform grid `φ_i = 2πi/grid_size`.
pub fn uniform_grid(grid_size: usize) -> Vec<f64> {
    (0..grid_size).map(|i| 2.0 * PI * i as f64 / grid_size as f64).collect()
}

pub fn sample_current_profile(state: &EigenState, shape: &HelixShape, grid_size: usize) -> Result<CurrentProfile> {
    let min = 2 * shape.omega() as usize;
    if grid_size < min {
        return Err(Error::InvalidInput(format!(
            "grid_size {grid_size} must be at least 2*omega = {min}"
        )));
    }
    let phi_grid = uniform_grid(grid_size);
    let j_values = phi_grid.iter().map(|&phi| current(state, shape, phi)).collect();
    Ok(CurrentProfile {
        phi_grid,
        j_values,
        state_ref: state.into(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentResult {
    pub t_vec: Vector3<f64>,
    pub t_z: f64,
    pub state_ref: StateRef,
}

// (1/10) ∫ [(v·r) r − 2 r² v] dφ for a vector field v(φ) along the curve.
fn moment_integral<F>(shape: &HelixShape, quad: &QuadratureSpec, mut field: F) -> Result<Vector3<f64>>
where
    F: FnMut(f64) -> Vector3<f64>,
{
    let res = integrate_periodic_many(3, quad, |phi, out| {
        let r = shape.position(phi);
        let v = field(phi);
        let integrand = r * v.dot(&r) - v * (2.0 * r.norm_squared());
        for (slot, x) in out.iter_mut().zip(integrand.iter()) {
            *slot = Complex64::new(*x, 0.0);
        }
    })?;
    Ok(Vector3::new(res[0].value.re, res[1].value.re, res[2].value.re) / 10.0)
}

/// Quantum toroidal moment `(1/10) ∫ [(j·r) r − 2r² j] f dφ` with `j = j(φ) T̂`.
pub fn toroidal_moment(state: &EigenState, shape: &HelixShape, quad: &QuadratureSpec) -> Result<MomentResult> {
    // j T̂ f = j r′
    let t_vec = moment_integral(shape, quad, |phi| {
        let r1 = shape.position_derivatives(phi)[1];
        r1 * current(state, shape, phi)
    })?;
    Ok(MomentResult {
        t_vec,
        t_z: t_vec.z,
        state_ref: state.into(),
    })
}

/// Thin-wire moment of a uniform current `I`, `(I/10) ∫ [(r′·r) r − 2r² r′] dφ`.
pub fn classical_moment_numeric(shape: &HelixShape, current: f64, quad: &QuadratureSpec) -> Result<Vector3<f64>> {
    moment_integral(shape, quad, |phi| shape.position_derivatives(phi)[1] * current)
}

/// `−π ω I a b R / 2 ẑ` (`a = b` gives the circular result).
pub fn classical_moment_closed_form(shape: &HelixShape, current: f64) -> Vector3<f64> {
    let tz = -PI * shape.omega() as f64 * current * shape.a() * shape.b() * shape.major_radius() / 2.0;
    Vector3::new(0.0, 0.0, tz)
}

/// Free-particle current `I = 2πp / L²` of Bloch state `p`.
pub fn free_particle_current(shape: &HelixShape, p: u32, quad: &QuadratureSpec) -> Result<f64> {
    if p == 0 {
        return Ok(0.0);
    }
    let length = shape.arc_length(quad)?;
    Ok(2.0 * PI * p as f64 / (length * length))
}

/// Classical reference moment `T_z` for Bloch index `p`.
pub fn classical_reference(shape: &HelixShape, p: u32, quad: &QuadratureSpec) -> Result<f64> {
    Ok(classical_moment_closed_form(shape, free_particle_current(shape, p, quad)?).z)
}

/// `without / with`, undefined when the with-V_c moment is essentially zero.
pub fn moment_ratio(without_vc: f64, with_vc: f64) -> Option<f64> {
    (with_vc.abs() >= RATIO_DENOMINATOR_FLOOR).then(|| without_vc / with_vc)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalSpec {
    pub temperature: f64,
    /// Divide by the partition function. Off reproduces the bare weighted sum.
    pub normalize: bool,
}

impl ThermalSpec {
    pub fn new(temperature: f64, normalize: bool) -> Result<Self> {
        if !(temperature > 0.0) {
            return Err(Error::InvalidInput(format!(
                "temperature must be positive (got {temperature})"
            )));
        }
        Ok(Self { temperature, normalize })
    }
}

/// Boltzmann-weighted average of `(energy, T_z)` pairs.
pub fn thermal_average(moments: &[(f64, f64)], spec: &ThermalSpec) -> Result<f64> {
    if moments.is_empty() {
        return Err(Error::InvalidInput("thermal average needs at least one state".into()));
    }
    ThermalSpec::new(spec.temperature, spec.normalize)?;
    let tau = spec.temperature;

    if spec.normalize {
        let e_min = moments.iter().map(|m| m.0).fold(f64::INFINITY, f64::min);
        let (mut num, mut den) = (0.0, 0.0);
        for &(e, t) in moments {
            let w = (-(e - e_min) / tau).exp();
            num += t * w;
            den += w;
        }
        Ok(num / den)
    } else {
        let max_exponent = f64::MAX.ln();
        let mut sum = 0.0;
        for &(e, t) in moments {
            let exponent = -e / tau;
            if exponent > max_exponent {
                return Err(Error::Overflow { exponent });
            }
            sum += t * exponent.exp();
        }
        Ok(sum)
    }
}
