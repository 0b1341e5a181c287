//! Independent oracles shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use std::f64::consts::PI;

use nalgebra::Vector3;
use num_complex::Complex64;
use rand::Rng;
use toroidal_helix::HelixShape;

/// Composite Simpson on `[0, 2π]` with `intervals` (even) panels and compensated summation.
pub fn simpson(intervals: usize, f: impl Fn(f64) -> f64) -> f64 {
    assert!(intervals.is_multiple_of(2));
    let h = 2.0 * PI / intervals as f64;
    let (mut sum, mut comp) = (0.0_f64, 0.0_f64);
    for i in 0..=intervals {
        let w = if i == 0 || i == intervals {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        let y = w * f(h * i as f64) - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum * h / 3.0
}

/// Position re-evaluated from the defining formula, independent of the crate.
pub fn direct_position(r: f64, a: f64, b: f64, omega: u32, phi: f64) -> Vector3<f64> {
    let w = omega as f64;
    let rad = r + a * (w * phi).cos();
    Vector3::new(rad * phi.cos(), rad * phi.sin(), b * (w * phi).sin())
}

/// Fourier interpolant of a sampled trigonometric polynomial; exact
/// derivatives of any order as long as the sampling resolves every harmonic.
pub struct SpectralCurve {
    coeffs: Vec<[Complex64; 3]>,
    n: usize,
}

impl SpectralCurve {
    pub fn sample(shape: &HelixShape, n: usize) -> Self {
        let samples: Vec<Vector3<f64>> = (0..n)
            .map(|j| {
                direct_position(
                    shape.major_radius(),
                    shape.a(),
                    shape.b(),
                    shape.omega(),
                    2.0 * PI * j as f64 / n as f64,
                )
            })
            .collect();
        let coeffs = (0..n)
            .map(|k| {
                let mut c = [Complex64::new(0.0, 0.0); 3];
                for (j, s) in samples.iter().enumerate() {
                    let e = Complex64::from_polar(1.0 / n as f64, -2.0 * PI * (k * j) as f64 / n as f64);
                    for d in 0..3 {
                        c[d] += e * s[d];
                    }
                }
                c
            })
            .collect();
        Self { coeffs, n }
    }

    pub fn derivative(&self, order: u32, phi: f64) -> Vector3<f64> {
        let mut out = [0.0; 3];
        for (k, c) in self.coeffs.iter().enumerate() {
            let freq = if k <= self.n / 2 {
                k as f64
            } else {
                k as f64 - self.n as f64
            };
            let factor = Complex64::new(0.0, freq).powu(order) * Complex64::from_polar(1.0, freq * phi);
            for d in 0..3 {
                out[d] += (c[d] * factor).re;
            }
        }
        Vector3::new(out[0], out[1], out[2])
    }
}

/// Random valid shape with moderately eccentric loops.
pub fn random_shape(rng: &mut impl Rng) -> HelixShape {
    let r = rng.gen_range(0.5..2.0);
    let a = rng.gen_range(0.05..0.8) * r;
    let b = rng.gen_range(0.05..0.8) * r;
    let omega = rng.gen_range(1..=8);
    HelixShape::new(r, a, b, omega).unwrap()
}

/// Dense complex matrix, row-major.
pub type Dense = Vec<Vec<Complex64>>;

pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> Dense {
    let mut m = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        m[i][i] = Complex64::new(rng.gen_range(-2.0..2.0), 0.0);
        for j in (i + 1)..n {
            let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            m[i][j] = z;
            m[j][i] = z.conj();
        }
    }
    m
}

pub fn flatten(m: &Dense) -> Vec<Complex64> {
    m.iter().flatten().copied().collect()
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn adjoint(a: &Dense) -> Dense {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].conj()).collect()).collect()
}

/// `det(A − λI)` by Gaussian elimination with partial pivoting.
pub fn char_poly(a: &Dense, lambda: f64) -> f64 {
    let n = a.len();
    let mut m: Dense = a.clone();
    for i in 0..n {
        m[i][i] -= lambda;
    }
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| m[x][col].norm().total_cmp(&m[y][col].norm()))
            .unwrap();
        if m[pivot][col].norm() == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in (col + 1)..n {
            let factor = m[row][col] / m[col][col];
            for k in col..n {
                let v = m[col][k];
                m[row][k] -= factor * v;
            }
        }
    }
    det.re
}

/// Roots of the characteristic polynomial by scanning for sign changes
/// inside the Gershgorin bound and bisecting each bracket.
pub fn char_poly_roots(a: &Dense) -> Vec<f64> {
    let bound = a
        .iter()
        .map(|row| row.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
        + 1e-3;
    let steps = 40_000;
    let mut roots = Vec::new();
    let mut x0 = -bound;
    let mut f0 = char_poly(a, x0);
    for i in 1..=steps {
        let x1 = -bound + 2.0 * bound * i as f64 / steps as f64;
        let f1 = char_poly(a, x1);
        if f0 == 0.0 {
            roots.push(x0);
        } else if f0.signum() != f1.signum() {
            let (mut lo, mut hi, mut flo) = (x0, x1, f0);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let fm = char_poly(a, mid);
                if fm.signum() == flo.signum() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
                if hi - lo < 1e-15 {
                    break;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    roots
}
