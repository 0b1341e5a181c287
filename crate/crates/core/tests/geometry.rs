mod common;

use std::f64::consts::PI;

use common::{direct_position, random_shape, simpson, SpectralCurve};
use nalgebra::{Matrix3, Vector3};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toroidal_helix::geometry::circular;
use toroidal_helix::{Error, HelixShape, QuadratureSpec, TubePoint};

fn shape_strategy() -> impl Strategy<Value = HelixShape> {
    (0.5f64..2.0, 0.05f64..0.8, 0.05f64..0.8, 1u32..=8)
        .prop_map(|(r, a, b, omega)| HelixShape::new(r, a * r, b * r, omega).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn frame_is_orthonormal_and_right_handed(shape in shape_strategy(), phi in 0.0f64..(2.0 * PI)) {
        let fr = shape.frenet_frame(phi).unwrap();
        for v in [fr.tangent, fr.normal, fr.binormal] {
            prop_assert!((v.norm() - 1.0).abs() <= 1e-12);
        }
        prop_assert!(fr.tangent.dot(&fr.normal).abs() <= 1e-12);
        prop_assert!(fr.tangent.dot(&fr.binormal).abs() <= 1e-12);
        prop_assert!(fr.normal.dot(&fr.binormal).abs() <= 1e-12);
        prop_assert!((fr.tangent.cross(&fr.normal) - fr.binormal).amax() <= 1e-12);
        prop_assert!(fr.kappa >= 0.0);
    }

    #[test]
    fn scalars_repeat_every_loop(shape in shape_strategy(), phi in 0.0f64..(2.0 * PI)) {
        let shifted = phi + shape.period();
        let close = |x: f64, y: f64| (x - y).abs() <= 1e-11 * x.abs().max(1.0);
        prop_assert!(close(shape.speed_f(phi), shape.speed_f(shifted)));
        let (d1, d2) = shape.speed_derivatives(phi);
        let (s1, s2) = shape.speed_derivatives(shifted);
        prop_assert!(close(d1, s1) && close(d2, s2));
        prop_assert!(close(shape.kappa(phi), shape.kappa(shifted)));
        prop_assert!(close(shape.curvature_potential(phi), shape.curvature_potential(shifted)));
        prop_assert!(close(shape.torsion(phi).unwrap(), shape.torsion(shifted).unwrap()));
    }
}

fn frame_vectors(shape: &HelixShape, phi: f64) -> [Vector3<f64>; 3] {
    let fr = shape.frenet_frame(phi).unwrap();
    [fr.tangent, fr.normal, fr.binormal]
}

#[test]
fn frenet_serret_residuals() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let h = 1e-5;
    for _ in 0..300 {
        let shape = random_shape(&mut rng);
        let phi = rng.gen_range(0.0..2.0 * PI);
        let fr = shape.frenet_frame(phi).unwrap();
        let plus = frame_vectors(&shape, phi + h);
        let minus = frame_vectors(&shape, phi - h);
        let d: Vec<Vector3<f64>> = (0..3).map(|i| (plus[i] - minus[i]) / (2.0 * h)).collect();
        let f = fr.speed_f;

        let res_t = d[0] - fr.normal * (f * fr.kappa);
        let res_n = d[1] - (fr.tangent * (-fr.kappa) + fr.binormal * fr.tau) * f;
        let res_b = d[2] + fr.normal * (f * fr.tau);
        // residuals are measured against the rotation rate of the frame
        let rate = (f * (fr.kappa + fr.tau.abs())).max(1.0);
        for (name, res) in [("T", res_t), ("N", res_n), ("B", res_b)] {
            assert!(
                res.amax() <= 1e-6 * rate,
                "{name} residual {} for {shape:?} at {phi}",
                res.amax()
            );
        }
    }
}

#[test]
fn tangent_matches_differenced_position() {
    let shape = HelixShape::new(1.0, 0.25, 0.75, 4).unwrap();
    let (phi, h) = (0.7, 1e-6);
    let d = (direct_position(1.0, 0.25, 0.75, 4, phi + h) - direct_position(1.0, 0.25, 0.75, 4, phi - h)) / (2.0 * h);
    let fr = shape.frenet_frame(phi).unwrap();
    assert!((fr.tangent - d.normalize()).amax() < 1e-9);
    assert!((fr.speed_f - d.norm()).abs() < 1e-8);
}

#[test]
fn elliptic_formulas_reduce_to_circular() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let r = rng.gen_range(0.5..2.0);
        let a = rng.gen_range(0.05..0.9) * r;
        let omega = rng.gen_range(1..=8);
        let shape = HelixShape::circular(r, a, omega).unwrap();
        let phi = rng.gen_range(0.0..2.0 * PI);

        assert!((shape.speed_f(phi) - circular::speed_f(&shape, phi)).abs() <= 1e-12);
        let c = shape.curvature(phi);
        let (kappa, p1, p2) = circular::curvature(&shape, phi);
        assert!((c.kappa - kappa).abs() <= 1e-12 * kappa.max(1.0));
        assert!((c.p1 - p1).abs() <= 1e-12 * kappa.max(1.0));
        assert!((c.p2 - p2).abs() <= 1e-12 * kappa.max(1.0));

        let [t, n, b] = frame_vectors(&shape, phi);
        let (ct, cn, cb) = circular::frame(&shape, phi);
        assert!((t - ct).amax() <= 1e-12);
        assert!((n - cn).amax() <= 1e-12);
        assert!((b - cb).amax() <= 1e-12);
    }
}

#[test]
fn curvature_matches_spectral_cross_product_oracle() {
    for (a, b, omega) in [
        (0.75, 0.25, 4),
        (0.25, 0.75, 4),
        (0.5, 0.5, 4),
        (0.75, 0.25, 8),
        (0.3, 0.6, 3),
    ] {
        let shape = HelixShape::new(1.0, a, b, omega).unwrap();
        let curve = SpectralCurve::sample(&shape, 16 * (omega as usize + 2));
        for i in 0..97 {
            let phi = 2.0 * PI * i as f64 / 97.0;
            let r1 = curve.derivative(1, phi);
            let r2 = curve.derivative(2, phi);
            let oracle = r1.cross(&r2).norm() / r1.norm().powi(3);
            let kappa = shape.kappa(phi);
            assert!(
                (kappa - oracle).abs() <= 1e-8 * oracle,
                "{a},{b},{omega} at {phi}: {kappa} vs {oracle}"
            );
        }
    }
}

#[test]
fn torsion_matches_spectral_oracle() {
    let shape = HelixShape::new(1.0, 0.75, 0.25, 6).unwrap();
    let curve = SpectralCurve::sample(&shape, 128);
    for i in 0..50 {
        let phi = 0.1257 * i as f64;
        let (r1, r2, r3) = (
            curve.derivative(1, phi),
            curve.derivative(2, phi),
            curve.derivative(3, phi),
        );
        let c = r1.cross(&r2);
        let oracle = c.dot(&r3) / c.norm_squared();
        let tau = shape.torsion(phi).unwrap();
        assert!((tau - oracle).abs() <= 1e-8 * oracle.abs().max(1.0));
    }
}

#[test]
fn speed_derivatives_match_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut shapes: Vec<HelixShape> = (0..40).map(|_| random_shape(&mut rng)).collect();
    shapes.push(HelixShape::new(1.0, 0.25, 0.75, 4).unwrap());
    for shape in shapes {
        for i in 0..40 {
            let phi = if i == 0 { 0.4 } else { rng.gen_range(0.0..2.0 * PI) };
            let f = |x: f64| shape.speed_f(x);
            let (f1, f2) = shape.speed_derivatives(phi);
            let h = 1e-5;
            let fd1 = (f(phi + h) - f(phi - h)) / (2.0 * h);
            // fourth-order stencil; a plain h = 1e-5 second difference is rounding-limited at ~1e-5
            let h = 1e-3;
            let fd2 = (-f(phi + 2.0 * h) + 16.0 * f(phi + h) - 30.0 * f(phi) + 16.0 * f(phi - h) - f(phi - 2.0 * h))
                / (12.0 * h * h);
            let scale = f(phi);
            assert!(
                (f1 - fd1).abs() <= 1e-6 * f1.abs().max(scale),
                "f' {shape:?} {phi}: {f1} vs {fd1}"
            );
            assert!(
                (f2 - fd2).abs() <= 1e-6 * f2.abs().max(scale),
                "f'' {shape:?} {phi}: {f2} vs {fd2}"
            );
        }
    }
}

fn random_tube_point(shape: &HelixShape, rng: &mut impl Rng) -> TubePoint {
    let phi = rng.gen_range(0.0..2.0 * PI);
    let kappa = shape.kappa(phi);
    // thin tube: well inside the focal distance 1/κ and small against the loops
    let reach = 0.5 * (1.0 / kappa).min(0.2 * shape.major_radius());
    TubePoint::new(phi, rng.gen_range(-reach..reach), rng.gen_range(-reach..reach))
}

#[test]
fn metric_invariants_at_random_tube_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let shape = random_shape(&mut rng);
        let point = random_tube_point(&shape, &mut rng);
        let m = shape.metric_at(point).unwrap();
        assert_eq!(m.g_cov, m.g_cov.transpose());
        assert_eq!(m.g_contra, m.g_contra.transpose());
        let identity = m.g_contra * m.g_cov;
        assert!((identity - Matrix3::identity()).amax() <= 1e-10, "{:?}", identity);
        let inverse = m.g_cov.try_inverse().unwrap();
        assert!((inverse - m.g_contra).amax() <= 1e-10 * m.g_contra.amax().max(1.0));
        let det = m.g_cov.determinant();
        assert!((det - m.sqrt_g * m.sqrt_g).abs() <= 1e-10 * det.abs().max(1.0));
    }
}

#[test]
fn metric_reproduces_differenced_quadratic_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let h = 1e-5;
    for _ in 0..200 {
        let shape = random_shape(&mut rng);
        let point = random_tube_point(&shape, &mut rng);
        let x = |phi: f64, qn: f64, qb: f64| shape.tube_position(TubePoint::new(phi, qn, qb)).unwrap();
        let (phi, qn, qb) = (point.phi, point.q_n, point.q_b);
        let columns = [
            (x(phi + h, qn, qb) - x(phi - h, qn, qb)) / (2.0 * h),
            (x(phi, qn + h, qb) - x(phi, qn - h, qb)) / (2.0 * h),
            (x(phi, qn, qb + h) - x(phi, qn, qb - h)) / (2.0 * h),
        ];
        let jac = Matrix3::from_columns(&columns);
        let from_fd = jac.transpose() * jac;
        let m = shape.metric_at(point).unwrap();
        let scale = m.g_cov.amax().max(1.0);
        assert!(
            (from_fd - m.g_cov).amax() <= 1e-6 * scale,
            "{shape:?} {point:?}\n{from_fd}\n{}",
            m.g_cov
        );
    }
}

#[test]
fn arc_length_limits_and_oracle() {
    let quad = QuadratureSpec::for_omega(4);
    let thin = HelixShape::new(1.0, 1e-10, 1e-10, 4).unwrap();
    assert!((thin.arc_length(&quad).unwrap() - 2.0 * PI).abs() <= 1e-8);

    let upright = HelixShape::new(1.0, 0.25, 0.75, 4).unwrap();
    let flattened = HelixShape::new(1.0, 0.75, 0.25, 4).unwrap();
    let oracle_up = simpson(1_000_000, |phi| {
        let d =
            (direct_position(1.0, 0.25, 0.75, 4, phi + 1e-4) - direct_position(1.0, 0.25, 0.75, 4, phi - 1e-4)) / 2e-4;
        d.norm()
    });
    let simpson_up = simpson(1_000_000, |phi| upright.speed_f(phi));
    let simpson_flat = simpson(1_000_000, |phi| flattened.speed_f(phi));
    let l_up = upright.arc_length(&quad).unwrap();
    let l_flat = flattened.arc_length(&quad).unwrap();
    assert!((l_up - simpson_up).abs() <= 1e-10, "{l_up} vs {simpson_up}");
    assert!((l_flat - simpson_flat).abs() <= 1e-10);
    assert!((l_up - oracle_up).abs() <= 1e-6);
    assert!(l_up > 2.0 * PI && l_flat > 2.0 * PI);
    assert!(
        (l_up - l_flat).abs() > 1e-3,
        "L(a,b) and L(b,a) should differ: {l_up} vs {l_flat}"
    );
}

#[test]
fn flattened_loops_dominate_curvature_potential() {
    let circle = HelixShape::circular(1.0, 0.5, 4).unwrap();
    let flattened = HelixShape::new(1.0, 0.75, 0.25, 4).unwrap();
    let upright = HelixShape::new(1.0, 0.25, 0.75, 4).unwrap();
    let grid: Vec<f64> = (0..2000).map(|i| 2.0 * PI * i as f64 / 2000.0).collect();
    let stats = |s: &HelixShape| {
        let v: Vec<f64> = grid.iter().map(|&phi| s.curvature_potential(phi).abs()).collect();
        (
            v.iter().copied().fold(0.0, f64::max),
            v.iter().sum::<f64>() / v.len() as f64,
        )
    };
    let (max_c, mean_c) = stats(&circle);
    let (max_f, mean_f) = stats(&flattened);
    let (max_u, _) = stats(&upright);
    assert!(max_f > 2.0 * max_c, "{max_f} vs {max_c}");
    assert!(mean_f > mean_c, "{mean_f} vs {mean_c}");
    assert!(max_f > max_u);
}

#[test]
fn degenerate_frame_is_reported() {
    // loops negligible against a huge major radius: κ ≈ 1/R
    let shape = HelixShape::new(1e13, 1e-3, 1e-3, 1).unwrap();
    assert!(matches!(shape.frenet_frame(0.3), Err(Error::DegenerateFrame { .. })));
    assert!(matches!(shape.torsion(0.3), Err(Error::DegenerateFrame { .. })));
}
