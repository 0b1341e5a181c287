//! The geometric potential `V_c = −κ²/8` for a circular, an upright and a
//! flattened helix on the same grid.
//!
//! cargo run --example curvature_potential

use std::f64::consts::PI;

use toroidal_helix::HelixShape;

fn main() -> toroidal_helix::Result<()> {
    let cases = [(0.5, 0.5), (0.25, 0.75), (0.75, 0.25)];
    let shapes = cases.map(|(a, b)| HelixShape::new(1.0, a, b, 4).unwrap());

    println!(
        "{:>7} {:>12} {:>12} {:>12}",
        "phi", "a=b=0.5", "a=.25,b=.75", "a=.75,b=.25"
    );
    let period = shapes[0].period();
    for i in 0..=16 {
        let phi = period * i as f64 / 16.0;
        let v = shapes.map(|s| s.curvature_potential(phi));
        println!("{phi:7.4} {:12.5} {:12.5} {:12.5}", v[0], v[1], v[2]);
    }

    println!();
    for ((a, b), shape) in cases.iter().zip(&shapes) {
        let samples: Vec<f64> = (0..4096)
            .map(|i| shape.curvature_potential(2.0 * PI * i as f64 / 4096.0))
            .collect();
        let min = samples.iter().copied().fold(f64::INFINITY, f64::min);
        let mean = samples.iter().sum::<f64>() / samples.len() as f64;
        println!("a={a} b={b}: min V_c = {min:.4}, mean V_c = {mean:.4}");
    }
    Ok(())
}
