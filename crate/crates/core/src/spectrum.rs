//! Bloch-basis diagonalization of the effective 1D Hamiltonian on the helix.
//!
//! The tangential Hamiltonian with the curvature potential is
//!
//! ```text
//! H = −½ ( f⁻² ∂²_φ − f′ f⁻³ ∂_φ ) + V_c(φ)
//! ```
//!
//! which is self-adjoint under the measure `f dφ`. For Bloch index `p` the
//! basis functions are
//!
//! ```text
//! χ_n(φ) = e^{i(p + ωn)φ} / sqrt(2π f(φ)),     n = −n_max..=n_max,
//! ```
//!
//! orthonormal under `f dφ`. Applying `H` and projecting gives
//!
//! ```text
//! H_mn = (1/2π) ∫ e^{iω(n−m)φ} [ V_c + k²/(2f²) + i k f′/f³ − (5/8) f′²/f⁴ + f″/(4f³) ] dφ
//! ```
//!
//! with `k = p + ωn`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::HelixShape;
use crate::linalg::{eigen_decompose, fix_phase_one, HermitianMatrix};
use crate::quadrature::{integrate_periodic, integrate_periodic_many, QuadratureSpec};

/// Bloch index `p` with the harmonic set `n ∈ {−n_max, …, n_max}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlochBasis {
    p: u32,
    n_max: u32,
    omega: u32,
}

impl BlochBasis {
    pub fn new(p: u32, n_max: u32, omega: u32) -> Result<Self> {
        if omega == 0 {
            return Err(Error::InvalidBasis("omega must be at least 1".into()));
        }
        if p >= omega {
            return Err(Error::InvalidBasis(format!(
                "Bloch index p = {p} must satisfy 0 <= p < omega = {omega}"
            )));
        }
        if n_max == 0 {
            return Err(Error::InvalidBasis("n_max must be at least 1".into()));
        }
        Ok(Self { p, n_max, omega })
    }

    pub fn for_shape(shape: &HelixShape, p: u32, n_max: u32) -> Result<Self> {
        Self::new(p, n_max, shape.omega())
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn omega(&self) -> u32 {
        self.omega
    }

    pub fn dim(&self) -> usize {
        2 * self.n_max as usize + 1
    }

    pub fn harmonics(&self) -> impl Iterator<Item = i64> + Clone {
        let n = self.n_max as i64;
        -n..=n
    }

    pub fn contains(&self, n: i64) -> bool {
        n.unsigned_abs() <= self.n_max as u64
    }

    /// Position of harmonic `n` in coefficient vectors.
    pub fn index_of(&self, n: i64) -> Option<usize> {
        self.contains(n).then(|| (n + self.n_max as i64) as usize)
    }

    /// Harmonic corresponding to a coefficient index.
    pub fn harmonic_at(&self, index: usize) -> i64 {
        index as i64 - self.n_max as i64
    }

    /// `p + ωn`.
    pub fn wavenumber(&self, n: i64) -> f64 {
        self.p as f64 + self.omega as f64 * n as f64
    }

    fn check(&self, shape: &HelixShape) -> Result<()> {
        if self.omega != shape.omega() {
            return Err(Error::InvalidBasis(format!(
                "basis omega {} does not match shape omega {}",
                self.omega,
                shape.omega()
            )));
        }
        Ok(())
    }

    fn check_harmonic(&self, n: i64) -> Result<()> {
        if !self.contains(n) {
            return Err(Error::InvalidBasis(format!(
                "harmonic {n} outside -{0}..={0}",
                self.n_max
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumConfig {
    pub include_vc: bool,
    pub quad: QuadratureSpec,
    pub n_max: u32,
}

impl SpectrumConfig {
    pub const DEFAULT_N_MAX: u32 = 2;

    /// Five-state basis and default quadrature for the given shape.
    pub fn new(shape: &HelixShape, include_vc: bool) -> Self {
        Self {
            include_vc,
            quad: QuadratureSpec::for_omega(shape.omega()),
            n_max: Self::DEFAULT_N_MAX,
        }
    }

    pub fn with_n_max(mut self, n_max: u32) -> Self {
        self.n_max = n_max;
        self
    }

    pub fn with_quad(mut self, quad: QuadratureSpec) -> Self {
        self.quad = quad;
        self
    }

    pub fn basis(&self, shape: &HelixShape, p: u32) -> Result<BlochBasis> {
        BlochBasis::for_shape(shape, p, self.n_max)
    }
}

/// One eigenstate `χ^{pα}` of the helix.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenState {
    pub energy: f64,
    /// `C_n` for `n = −n_max..=n_max`.
    pub coefficients: Vec<Complex64>,
    pub basis: BlochBasis,
    /// Rank within its own run, 0 = lowest.
    pub alpha: usize,
    pub include_vc: bool,
}

impl EigenState {
    pub fn p(&self) -> u32 {
        self.basis.p()
    }

    pub fn coefficient(&self, n: i64) -> Option<Complex64> {
        self.basis.index_of(n).map(|i| self.coefficients[i])
    }

    /// `χ(φ)` and `∂χ/∂φ`.
    pub fn wavefunction(&self, shape: &HelixShape, phi: f64) -> (Complex64, Complex64) {
        let f = shape.speed_f(phi);
        let (f1, _) = shape.speed_derivatives(phi);
        let mut psi = Complex64::new(0.0, 0.0);
        let mut dpsi = Complex64::new(0.0, 0.0);
        for (c, n) in self.coefficients.iter().zip(self.basis.harmonics()) {
            let k = self.basis.wavenumber(n);
            let wave = c * Complex64::from_polar(1.0, k * phi);
            psi += wave;
            dpsi += wave * Complex64::new(0.0, k);
        }
        let norm = 1.0 / (2.0 * PI * f).sqrt();
        psi *= norm;
        dpsi = dpsi * norm - psi * (f1 / (2.0 * f));
        (psi, dpsi)
    }
}

/// `χ_n(φ) = e^{i(p+ωn)φ} / sqrt(2π f(φ))`.
pub fn basis_wavefunction(shape: &HelixShape, basis: &BlochBasis, n: i64, phi: f64) -> Result<Complex64> {
    basis.check(shape)?;
    basis.check_harmonic(n)?;
    let k = basis.wavenumber(n);
    Ok(Complex64::from_polar(
        1.0 / (2.0 * PI * shape.speed_f(phi)).sqrt(),
        k * phi,
    ))
}

// Geometric factors shared by every matrix element at one node.
struct NodeFactors {
    potential: f64,
    inv_2f2: f64,
    f1_over_f3: f64,
    scalar: f64,
}

impl NodeFactors {
    fn at(shape: &HelixShape, phi: f64, include_vc: bool) -> Self {
        let f = shape.speed_f(phi);
        let (f1, f2) = shape.speed_derivatives(phi);
        let f3 = f * f * f;
        Self {
            potential: if include_vc {
                shape.curvature_potential(phi)
            } else {
                0.0
            },
            inv_2f2: 0.5 / (f * f),
            f1_over_f3: f1 / f3,
            scalar: -0.625 * f1 * f1 / (f3 * f) + 0.25 * f2 / f3,
        }
    }

    fn bracket(&self, k: f64) -> Complex64 {
        Complex64::new(self.potential + k * k * self.inv_2f2 + self.scalar, k * self.f1_over_f3)
    }
}

/// One matrix element `H_mn`.
pub fn hamiltonian_element(
    shape: &HelixShape,
    basis: &BlochBasis,
    m: i64,
    n: i64,
    config: &SpectrumConfig,
) -> Result<Complex64> {
    basis.check(shape)?;
    basis.check_harmonic(m)?;
    basis.check_harmonic(n)?;
    let k = basis.wavenumber(n);
    let freq = shape.omega() as f64 * (n - m) as f64;
    let res = integrate_periodic(
        |phi| Complex64::from_polar(1.0, freq * phi) * NodeFactors::at(shape, phi, config.include_vc).bracket(k),
        &config.quad,
    )?;
    Ok(res.value / (2.0 * PI))
}

/// Full `(2n_max+1)²` matrix; all elements share one set of quadrature nodes.
pub fn build_hamiltonian(shape: &HelixShape, basis: &BlochBasis, config: &SpectrumConfig) -> Result<HermitianMatrix> {
    basis.check(shape)?;
    let dim = basis.dim();
    let wavenumbers: Vec<f64> = basis.harmonics().map(|n| basis.wavenumber(n)).collect();
    let omega = shape.omega() as f64;
    let max_shift = 2 * basis.n_max() as usize;

    let results = integrate_periodic_many(dim * dim, &config.quad, |phi, out| {
        let node = NodeFactors::at(shape, phi, config.include_vc);
        // e^{iωdφ} for d = −2n_max..=2n_max
        let unit = Complex64::from_polar(1.0, omega * phi);
        let mut phases = vec![Complex64::new(1.0, 0.0); 2 * max_shift + 1];
        for d in 1..=max_shift {
            phases[max_shift + d] = phases[max_shift + d - 1] * unit;
            phases[max_shift - d] = phases[max_shift + d].conj();
        }
        for (col, &k) in wavenumbers.iter().enumerate() {
            let bracket = node.bracket(k);
            for row in 0..dim {
                out[row * dim + col] = phases[max_shift + col - row] * bracket;
            }
        }
    })?;

    let entries = results.into_iter().map(|r| r.value / (2.0 * PI)).collect();
    HermitianMatrix::new(dim, entries)
}

/// `(1/2π) ∫ e^{iω(n−m)φ} V_c dφ`, the curvature-potential part of `H`.
pub fn curvature_potential_matrix(
    shape: &HelixShape,
    basis: &BlochBasis,
    quad: &QuadratureSpec,
) -> Result<HermitianMatrix> {
    basis.check(shape)?;
    let dim = basis.dim();
    let omega = shape.omega() as f64;
    let results = integrate_periodic_many(dim * dim, quad, |phi, out| {
        let v = shape.curvature_potential(phi);
        for row in 0..dim {
            for col in 0..dim {
                let d = col as f64 - row as f64;
                out[row * dim + col] = Complex64::from_polar(v, omega * d * phi);
            }
        }
    })?;
    HermitianMatrix::new(dim, results.into_iter().map(|r| r.value / (2.0 * PI)).collect())
}

/// Eigenstates for one Bloch index, ascending in energy, unit norm and phase-fixed.
pub fn solve_states(shape: &HelixShape, basis: &BlochBasis, config: &SpectrumConfig) -> Result<Vec<EigenState>> {
    let h = build_hamiltonian(shape, basis, config)?;
    let eig = eigen_decompose(&h)?;
    Ok(eig
        .eigenvalues
        .into_iter()
        .zip(eig.eigenvectors)
        .enumerate()
        .map(|(alpha, (energy, vector))| {
            let norm = vector.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            let unit: Vec<Complex64> = vector.iter().map(|z| z / norm).collect();
            EigenState {
                energy,
                coefficients: fix_phase_one(&unit),
                basis: *basis,
                alpha,
                include_vc: config.include_vc,
            }
        })
        .collect())
}

/// Convenience wrapper building the basis from `config.n_max`.
pub fn solve_bloch(shape: &HelixShape, p: u32, config: &SpectrumConfig) -> Result<Vec<EigenState>> {
    solve_states(shape, &config.basis(shape, p)?, config)
}
