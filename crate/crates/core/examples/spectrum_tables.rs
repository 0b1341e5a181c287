//! Energies and Bloch amplitudes for R=1, a=0.75, b=0.25, ω=6, p=1, with and
//! without the curvature potential.
//!
//! cargo run --example spectrum_tables [n_max]

use toroidal_helix::{solve_bloch, HelixShape, SpectrumConfig};

fn main() -> toroidal_helix::Result<()> {
    let n_max: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let shape = HelixShape::new(1.0, 0.75, 0.25, 6)?;

    for include_vc in [false, true] {
        let config = SpectrumConfig::new(&shape, include_vc).with_n_max(n_max);
        let states = solve_bloch(&shape, 1, &config)?;
        println!("V_c {}", if include_vc { "included" } else { "neglected" });
        print!("{:>4}", "E");
        for s in &states {
            print!(" {:>9.4}", s.energy);
        }
        println!();
        for (row, m) in states[0].basis.harmonics().enumerate() {
            print!("{m:>4}");
            for s in &states {
                print!(" {:>9.4}", s.coefficients[row].re);
            }
            println!();
        }
        println!();
    }
    Ok(())
}
