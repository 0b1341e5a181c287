//! Probability current along the helix for the p=1 sub-states, V_c off and on.
//!
//! cargo run --example current_profiles [a] [b]

use toroidal_helix::{sample_current_profile, solve_bloch, HelixShape, SpectrumConfig};

fn main() -> toroidal_helix::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<f64>().expect("a and b must be numbers"));
    let a = args.next().unwrap_or(0.75);
    let b = args.next().unwrap_or(0.25);
    let shape = HelixShape::new(1.0, a, b, 4)?;

    let off = solve_bloch(&shape, 1, &SpectrumConfig::new(&shape, false))?;
    let on = solve_bloch(&shape, 1, &SpectrumConfig::new(&shape, true))?;
    println!("omega=4 a={a} b={b} p=1");
    println!(
        "{:>5} {:>10} {:>10} {:>10} {:>10}",
        "alpha", "max|j| off", "max|j| on", "rms off", "rms on"
    );
    for (s_off, s_on) in off.iter().zip(&on) {
        let j_off = sample_current_profile(s_off, &shape, 1024)?;
        let j_on = sample_current_profile(s_on, &shape, 1024)?;
        println!(
            "{:>5} {:>10.5} {:>10.5} {:>10.5} {:>10.5}",
            s_off.alpha,
            j_off.max_abs(),
            j_on.max_abs(),
            j_off.rms(),
            j_on.rms()
        );
    }

    println!("\nground state over one loop (V_c off, on):");
    let j_off = sample_current_profile(&off[0], &shape, 64)?;
    let j_on = sample_current_profile(&on[0], &shape, 64)?;
    for i in 0..=16 {
        println!(
            "{:7.4} {:+.5} {:+.5}",
            j_off.phi_grid[i], j_off.j_values[i], j_on.j_values[i]
        );
    }
    Ok(())
}
