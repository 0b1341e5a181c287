//! Curve, speed, curvature, torsion and Frenet frame along three helices.
//!
//! cargo run --example helix_geometry

use std::f64::consts::PI;

use toroidal_helix::{HelixShape, QuadratureSpec, TubePoint};

fn main() -> toroidal_helix::Result<()> {
    let shapes = [
        ("circular", HelixShape::circular(1.0, 0.5, 4)?),
        ("upright", HelixShape::new(1.0, 0.25, 0.75, 4)?),
        ("flattened", HelixShape::new(1.0, 0.75, 0.25, 4)?),
    ];
    let quad = QuadratureSpec::for_omega(4);

    for (name, shape) in &shapes {
        println!(
            "{name}: R={} a={} b={} omega={}",
            shape.major_radius(),
            shape.a(),
            shape.b(),
            shape.omega()
        );
        println!(
            "  arc length L = {:.6} (2πR = {:.6})",
            shape.arc_length(&quad)?,
            2.0 * PI * shape.major_radius()
        );
        println!("  {:>6} {:>9} {:>9} {:>9}   tangent", "phi", "f", "kappa", "tau");
        for i in 0..5 {
            let phi = shape.period() * i as f64 / 4.0;
            let fr = shape.frenet_frame(phi)?;
            println!(
                "  {phi:6.3} {:9.5} {:9.5} {:9.5}   ({:+.4}, {:+.4}, {:+.4})",
                fr.speed_f, fr.kappa, fr.tau, fr.tangent.x, fr.tangent.y, fr.tangent.z
            );
        }
        // metric a short way off the curve along the normal
        let m = shape.metric_at(TubePoint::new(0.2, 0.05, 0.0))?;
        println!("  sqrt(g) at (φ=0.2, q_N=0.05) = {:.6}\n", m.sqrt_g);
    }
    Ok(())
}
