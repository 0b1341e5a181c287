//! Dense complex Hermitian eigendecomposition by cyclic Jacobi rotations.
//!
//! The matrices built by [`crate::spectrum`] are tiny (5 to ~21 rows), so a
//! plain cyclic Jacobi sweep is fast, unconditionally stable and produces
//! eigenvectors orthonormal to working precision.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const DEFAULT_HERMITICITY_TOL: f64 = 1e-9;

const MAX_SWEEPS: usize = 100;

/// Square complex matrix checked for Hermiticity on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl HermitianMatrix {
    /// Row-major entries, checked against [`DEFAULT_HERMITICITY_TOL`].
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        Self::with_tolerance(dim, entries, DEFAULT_HERMITICITY_TOL)
    }

    pub fn with_tolerance(dim: usize, entries: Vec<Complex64>, tolerance: f64) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::InvalidInput(format!(
                "expected {dim}x{dim} = {} entries, got {}",
                dim * dim,
                entries.len()
            )));
        }
        let m = Self { dim, entries };
        let deviation = m.hermiticity_deviation();
        if !(deviation <= tolerance) {
            return Err(Error::HermiticityViolation { deviation, tolerance });
        }
        Ok(m)
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self::new(dim, entries)
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// `max |A_mn − conj(A_nm)|`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                if d.is_nan() {
                    return f64::NAN;
                }
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i).re).sum()
    }

    /// `A v`.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }
}

/// Ascending eigenvalues; `eigenvectors[i]` pairs with `eigenvalues[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<Complex64>>,
}

/// Cyclic complex Jacobi. Works on the Hermitian part `(A + A†)/2`.
pub fn eigen_decompose(matrix: &HermitianMatrix) -> Result<EigenDecomposition> {
    let n = matrix.dim();
    let mut a: Vec<Complex64> = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = 0.5 * (matrix.get(i, j) + matrix.get(j, i).conj());
        }
    }
    let mut v = HermitianMatrix::identity(n).entries;

    let scale = matrix.frobenius_norm().max(f64::MIN_POSITIVE);
    // rotations leave O(eps·‖A‖) residue in each of the n² off-diagonal slots
    let threshold = (n as f64 * f64::EPSILON * scale).powi(2);

    let off_norm = |a: &[Complex64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j].norm_sqr();
                }
            }
        }
        s
    };

    let mut sweeps = 0;
    while off_norm(&a) > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[x * n + x].re.total_cmp(&a[y * n + y].re).then(x.cmp(&y)));

    let eigenvalues = order.iter().map(|&k| a[k * n + k].re).collect();
    let eigenvectors = order
        .iter()
        .map(|&k| (0..n).map(|row| v[row * n + k]).collect())
        .collect();
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

// Annihilate a[p][q] with A ← U† A U, where U acts on the (p, q) plane as
// diag(1, e^{−iθ}) followed by a real rotation; θ = arg a[p][q].
fn rotate(a: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag; // e^{iθ}
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;

    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta.is_infinite() {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // U = [[c, s], [−s e^{−iθ}, c e^{−iθ}]] on (p, q); columns of A and V.
    let u00 = Complex64::new(c, 0.0);
    let u01 = Complex64::new(s, 0.0);
    let u10 = -s * phase.conj();
    let u11 = c * phase.conj();

    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = akp * u00 + akq * u10;
        a[k * n + q] = akp * u01 + akq * u11;
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = vkp * u00 + vkq * u10;
        v[k * n + q] = vkp * u01 + vkq * u11;
    }
    // rows: A ← U† A
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = u00.conj() * apk + u10.conj() * aqk;
        a[q * n + k] = u01.conj() * apk + u11.conj() * aqk;
    }
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
    a[p * n + p] = Complex64::new(a[p * n + p].re, 0.0);
    a[q * n + q] = Complex64::new(a[q * n + q].re, 0.0);
}

/// Rotate each vector by a unit phase so that its largest-magnitude component
/// is real and positive. Ties go to the lowest index.
pub fn fix_phase(vectors: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    vectors.iter().map(|v| fix_phase_one(v)).collect()
}

pub(crate) fn fix_phase_one(v: &[Complex64]) -> Vec<Complex64> {
    let mut pivot = 0;
    let mut best = -1.0;
    for (i, z) in v.iter().enumerate() {
        let m = z.norm();
        // relative slack so rounding noise cannot flip a genuine tie
        if m > best * (1.0 + 1e-12) {
            best = m;
            pivot = i;
        }
    }
    if best <= 0.0 {
        return v.to_vec();
    }
    let rot = v[pivot].conj() / best;
    let mut out: Vec<Complex64> = v.iter().map(|z| z * rot).collect();
    out[pivot] = Complex64::new(best, 0.0);
    out
}
