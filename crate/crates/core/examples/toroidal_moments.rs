//! Toroidal moments of every sub-state for p = 1..3, with and without V_c,
//! next to the classical thin-wire value.
//!
//! cargo run --example toroidal_moments [omega]

use toroidal_helix::observables::moment_ratio;
use toroidal_helix::{classical_reference, solve_bloch, toroidal_moment, HelixShape, QuadratureSpec, SpectrumConfig};

fn main() -> toroidal_helix::Result<()> {
    let omega: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let quad = QuadratureSpec::for_omega(omega);

    for (a, b) in [(0.25, 0.75), (0.75, 0.25)] {
        let shape = HelixShape::new(1.0, a, b, omega)?;
        println!("omega={omega} a={a} b={b}");
        println!(
            "{:>2} {:>9} {:>9} {:>9} {:>9}",
            "p", "T_z", "T_z w/Vc", "ratio", "classical"
        );
        for p in 1..omega.min(4) {
            let off = solve_bloch(&shape, p, &SpectrumConfig::new(&shape, false))?;
            let on = solve_bloch(&shape, p, &SpectrumConfig::new(&shape, true))?;
            let classical = classical_reference(&shape, p, &quad)?;
            for (alpha, (s_off, s_on)) in off.iter().zip(&on).enumerate() {
                let t_off = toroidal_moment(s_off, &shape, &quad)?.t_z;
                let t_on = toroidal_moment(s_on, &shape, &quad)?.t_z;
                let ratio = moment_ratio(t_off, t_on).map_or("-".to_string(), |r| format!("{r:.4}"));
                let classical = if alpha == 0 {
                    format!("{classical:.4}")
                } else {
                    String::new()
                };
                println!("{p:>2} {t_off:>9.4} {t_on:>9.4} {ratio:>9} {classical:>9}");
            }
        }
        println!();
    }
    Ok(())
}
