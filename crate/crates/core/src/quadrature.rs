//! Equal-spacing quadrature for smooth 2π-periodic integrands.
//!
//! For analytic periodic functions the trapezoidal rule on `[0, 2π)` converges
//! geometrically, so the rule is refined by doubling the node count until
//! successive sums agree to an absolute tolerance. Every refinement reuses the
//! previous nodes and only evaluates the new odd-indexed ones.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Node count, absolute tolerance and refinement budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    initial_points: usize,
    tolerance: f64,
    max_doublings: u32,
}

impl QuadratureSpec {
    pub const DEFAULT_POINTS_PER_LOOP: usize = 64;
    pub const DEFAULT_TOLERANCE: f64 = 1e-10;
    pub const DEFAULT_MAX_DOUBLINGS: u32 = 8;

    pub fn new(initial_points: usize, tolerance: f64, max_doublings: u32) -> Result<Self> {
        if initial_points < 8 {
            return Err(Error::InvalidQuadrature(format!(
                "initial_points must be at least 8 (got {initial_points})"
            )));
        }
        if !(tolerance > 0.0) || !tolerance.is_finite() {
            return Err(Error::InvalidQuadrature(format!(
                "tolerance must be positive and finite (got {tolerance})"
            )));
        }
        if max_doublings == 0 {
            return Err(Error::InvalidQuadrature("max_doublings must be at least 1".into()));
        }
        Ok(Self {
            initial_points,
            tolerance,
            max_doublings,
        })
    }

    /// `64·ω` starting points, tolerance `1e-10`, up to 8 doublings.
    pub fn for_omega(omega: u32) -> Self {
        Self {
            initial_points: Self::DEFAULT_POINTS_PER_LOOP * omega.max(1) as usize,
            tolerance: Self::DEFAULT_TOLERANCE,
            max_doublings: Self::DEFAULT_MAX_DOUBLINGS,
        }
    }

    pub fn initial_points(&self) -> usize {
        self.initial_points
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn max_doublings(&self) -> u32 {
        self.max_doublings
    }

    pub fn with_initial_points(self, initial_points: usize) -> Result<Self> {
        Self::new(initial_points, self.tolerance, self.max_doublings)
    }

    pub fn with_tolerance(self, tolerance: f64) -> Result<Self> {
        Self::new(self.initial_points, tolerance, self.max_doublings)
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self::for_omega(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub points_used: usize,
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
struct Accumulator {
    re: (f64, f64),
    im: (f64, f64),
}

impl Accumulator {
    fn add(&mut self, z: Complex64) {
        neumaier(&mut self.re, z.re);
        neumaier(&mut self.im, z.im);
    }

    fn total(&self) -> Complex64 {
        Complex64::new(self.re.0 + self.re.1, self.im.0 + self.im.1)
    }
}

fn neumaier(acc: &mut (f64, f64), x: f64) {
    let (sum, comp) = acc;
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

/// Integrate a complex integrand over one period `[0, 2π)`.
pub fn integrate_periodic<F>(mut integrand: F, spec: &QuadratureSpec) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> Complex64,
{
    let mut results = integrate_periodic_many(1, spec, |phi, out| out[0] = integrand(phi))?;
    Ok(results.remove(0))
}

/// Integrate `dim` integrands sharing the same nodes.
///
/// `fill(phi, out)` writes all component values at `phi`. Refinement stops
/// once every component has converged; the per-component error estimates are
/// the last successive differences.
pub fn integrate_periodic_many<F>(dim: usize, spec: &QuadratureSpec, mut fill: F) -> Result<Vec<QuadratureResult>>
where
    F: FnMut(f64, &mut [Complex64]),
{
    let mut sums = vec![Accumulator::default(); dim];
    let mut scratch = vec![Complex64::new(0.0, 0.0); dim];

    let mut n = spec.initial_points;
    let mut sample = |phi: f64, sums: &mut [Accumulator], scratch: &mut [Complex64]| {
        scratch.iter_mut().for_each(|z| *z = Complex64::new(0.0, 0.0));
        fill(phi, scratch);
        for (acc, z) in sums.iter_mut().zip(scratch.iter()) {
            acc.add(*z);
        }
    };

    for i in 0..n {
        sample(2.0 * PI * i as f64 / n as f64, &mut sums, &mut scratch);
    }
    let mut previous: Vec<Complex64> = sums.iter().map(|a| a.total() * (2.0 * PI / n as f64)).collect();
    let mut errors = vec![f64::INFINITY; dim];

    for _ in 0..spec.max_doublings {
        let refined = 2 * n;
        for i in (1..refined).step_by(2) {
            sample(2.0 * PI * i as f64 / refined as f64, &mut sums, &mut scratch);
        }
        n = refined;
        let current: Vec<Complex64> = sums.iter().map(|a| a.total() * (2.0 * PI / n as f64)).collect();
        for ((err, cur), prev) in errors.iter_mut().zip(&current).zip(&previous) {
            *err = (cur - prev).norm();
        }
        previous = current;
        if errors.iter().all(|&e| e <= spec.tolerance) {
            return Ok(previous
                .into_iter()
                .zip(errors)
                .map(|(value, error_estimate)| QuadratureResult {
                    value,
                    error_estimate,
                    points_used: n,
                })
                .collect());
        }
    }

    let (worst, &error_estimate) = errors
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.total_cmp(y.1))
        .expect("at least one component");
    Err(Error::NotConverged {
        value: previous[worst],
        error_estimate,
        tolerance: spec.tolerance,
        points_used: n,
    })
}
