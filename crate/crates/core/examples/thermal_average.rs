//! Boltzmann average of T_z over the p=1 sub-states as the temperature rises.
//!
//! cargo run --example thermal_average

use toroidal_helix::{
    solve_bloch, thermal_average, toroidal_moment, HelixShape, QuadratureSpec, SpectrumConfig, ThermalSpec,
};

fn main() -> toroidal_helix::Result<()> {
    let shape = HelixShape::new(1.0, 0.25, 0.75, 4)?;
    let quad = QuadratureSpec::for_omega(4);

    for include_vc in [false, true] {
        let states = solve_bloch(&shape, 1, &SpectrumConfig::new(&shape, include_vc))?;
        let pairs = states
            .iter()
            .map(|s| Ok((s.energy, toroidal_moment(s, &shape, &quad)?.t_z)))
            .collect::<toroidal_helix::Result<Vec<_>>>()?;
        println!("V_c {}", if include_vc { "on" } else { "off" });
        for tau in [0.01, 0.1, 0.5, 1.0, 2.0, 10.0, f64::INFINITY] {
            let normalized = thermal_average(&pairs, &ThermalSpec::new(tau, true)?)?;
            let bare = match thermal_average(&pairs, &ThermalSpec::new(tau, false)?) {
                Ok(v) => format!("{v:.5e}"),
                Err(e) => e.to_string(),
            };
            println!("  tau={tau:<6} <T_z> = {normalized:+.5}   unnormalized sum = {bare}");
        }
    }
    Ok(())
}
