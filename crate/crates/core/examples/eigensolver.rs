//! The building blocks on their own: periodic quadrature and the Hermitian
//! eigensolver applied to an assembled Hamiltonian.
//!
//! cargo run --example eigensolver

use num_complex::Complex64;
use toroidal_helix::{
    build_hamiltonian, eigen_decompose, integrate_periodic, BlochBasis, HelixShape, HermitianMatrix, QuadratureSpec,
    SpectrumConfig,
};

fn main() -> toroidal_helix::Result<()> {
    // ∫ dφ / (2 − cos φ) = 2π/√3
    let r = integrate_periodic(
        |phi| Complex64::new(1.0 / (2.0 - phi.cos()), 0.0),
        &QuadratureSpec::default(),
    )?;
    println!(
        "quadrature: {:.15} ({} points, estimate {:.1e})",
        r.value.re, r.points_used, r.error_estimate
    );
    println!("exact:      {:.15}", 2.0 * std::f64::consts::PI / 3f64.sqrt());

    let pauli_y = HermitianMatrix::new(2, vec![0.0.into(), -Complex64::i(), Complex64::i(), 0.0.into()])?;
    println!("\nσ_y eigenvalues: {:?}", eigen_decompose(&pauli_y)?.eigenvalues);

    let shape = HelixShape::new(1.0, 0.75, 0.25, 6)?;
    let config = SpectrumConfig::new(&shape, true);
    let h = build_hamiltonian(&shape, &BlochBasis::new(1, 2, 6)?, &config)?;
    println!("\nH (V_c on), Hermiticity deviation {:.1e}:", h.hermiticity_deviation());
    for i in 0..h.dim() {
        let row: Vec<String> = (0..h.dim())
            .map(|j| format!("{:+8.4}{:+8.4}i", h.get(i, j).re, h.get(i, j).im))
            .collect();
        println!("  {}", row.join(" "));
    }
    let eig = eigen_decompose(&h)?;
    println!(
        "eigenvalues: {:?}",
        eig.eigenvalues.iter().map(|e| format!("{e:.4}")).collect::<Vec<_>>()
    );
    Ok(())
}
