use std::fmt::Write as _;

use crate::error::Result;
use crate::geometry::HelixShape;
use crate::observables::{
    classical_reference, moment_ratio, sample_current_profile, thermal_average, toroidal_moment, uniform_grid,
    ThermalSpec,
};
use crate::spectrum::{solve_bloch, EigenState, SpectrumConfig};

use super::config::{OutputFormat, RunConfig};
use super::format::NumberFormat;

pub const GEOMETRY_HEADER: &str = "phi,x,y,z,f,kappa,tau,Tx,Ty,Tz,Nx,Ny,Nz,Bx,By,Bz";

fn spectrum_config(config: &RunConfig, include_vc: bool) -> SpectrumConfig {
    SpectrumConfig {
        include_vc,
        quad: config.quad,
        n_max: config.n_max,
    }
}

fn vc_label(include_vc: bool) -> &'static str {
    if include_vc {
        "on"
    } else {
        "off"
    }
}

fn push_row(out: &mut String, fields: impl IntoIterator<Item = String>) {
    let row: Vec<String> = fields.into_iter().collect();
    out.push_str(&row.join(","));
    out.push('\n');
}

/// Curve, speed, curvature, torsion and Frenet frame on the uniform grid.
pub fn cmd_geometry(config: &RunConfig) -> Result<String> {
    let nf = NumberFormat { digits: config.digits };
    let shape = &config.shape;
    let mut out = String::new();
    out.push_str(GEOMETRY_HEADER);
    out.push('\n');
    for phi in uniform_grid(config.grid) {
        let fr = shape.frenet_frame(phi)?;
        let mut fields = vec![
            phi,
            fr.position.x,
            fr.position.y,
            fr.position.z,
            fr.speed_f,
            fr.kappa,
            fr.tau,
        ];
        for v in [fr.tangent, fr.normal, fr.binormal] {
            fields.extend(v.iter().copied());
        }
        push_row(&mut out, fields.into_iter().map(|x| nf.fmt(x)));
    }
    Ok(out)
}

/// `V_c(φ)` for every `(a, b)` case in `config.cases`, one column each.
pub fn cmd_potential(config: &RunConfig) -> Result<String> {
    let nf = NumberFormat { digits: config.digits };
    let base = &config.shape;
    let shapes = config
        .cases
        .iter()
        .map(|&(a, b)| HelixShape::new(base.major_radius(), a, b, base.omega()))
        .collect::<Result<Vec<_>>>()?;

    let mut out = String::new();
    push_row(
        &mut out,
        std::iter::once("phi".to_string()).chain(
            shapes
                .iter()
                .map(|s| format!("Vc_a{}_b{}", nf.fmt(s.a()), nf.fmt(s.b()))),
        ),
    );
    for phi in uniform_grid(config.grid) {
        push_row(
            &mut out,
            std::iter::once(nf.fmt(phi)).chain(shapes.iter().map(|s| nf.fmt(s.curvature_potential(phi)))),
        );
    }
    Ok(out)
}

struct SpectrumBlock {
    p: u32,
    include_vc: bool,
    states: Vec<EigenState>,
}

fn spectrum_blocks(config: &RunConfig) -> Result<Vec<SpectrumBlock>> {
    let mut blocks = Vec::new();
    for &p in &config.p_values {
        for &include_vc in config.vc.variants() {
            let states = solve_bloch(&config.shape, p, &spectrum_config(config, include_vc))?;
            blocks.push(SpectrumBlock { p, include_vc, states });
        }
    }
    Ok(blocks)
}

/// Energies and amplitudes as a table: one column per
/// eigenstate, an energy row followed by one row per harmonic `m`.
pub fn cmd_spectrum(config: &RunConfig) -> Result<String> {
    let nf = NumberFormat { digits: config.digits };
    let blocks = spectrum_blocks(config)?;
    let dim = 2 * config.n_max as usize + 1;
    let mut out = String::new();

    match config.format {
        OutputFormat::Csv => {
            push_row(
                &mut out,
                ["p", "vc", "row"]
                    .into_iter()
                    .map(String::from)
                    .chain((0..dim).map(|a| format!("state_{a}"))),
            );
            for block in &blocks {
                let lead = || [block.p.to_string(), vc_label(block.include_vc).to_string()];
                push_row(
                    &mut out,
                    lead()
                        .into_iter()
                        .chain(["E".to_string()])
                        .chain(block.states.iter().map(|s| nf.fmt(s.energy))),
                );
                for (row, m) in block.states[0].basis.harmonics().enumerate() {
                    push_row(
                        &mut out,
                        lead()
                            .into_iter()
                            .chain([m.to_string()])
                            .chain(block.states.iter().map(|s| nf.fmt(s.coefficients[row].re))),
                    );
                }
            }
        }
        OutputFormat::Text => {
            let shape = &config.shape;
            for block in &blocks {
                let _ = writeln!(out, "[spectrum p={} vc={}]", block.p, vc_label(block.include_vc));
                let _ = writeln!(
                    out,
                    "shape = R={} a={} b={} omega={}",
                    nf.fmt(shape.major_radius()),
                    nf.fmt(shape.a()),
                    nf.fmt(shape.b()),
                    shape.omega()
                );
                let _ = writeln!(out, "n_max = {}", config.n_max);
                let energies: Vec<String> = block.states.iter().map(|s| nf.fmt(s.energy)).collect();
                let _ = writeln!(out, "energies = {}", energies.join(" "));
                let max_imag = block
                    .states
                    .iter()
                    .flat_map(|s| s.coefficients.iter().map(|c| c.im.abs()))
                    .fold(0.0, f64::max);
                let _ = writeln!(out, "max_imag_amplitude = {}", nf.fmt(max_imag));

                let width = config.digits + 8;
                let _ = write!(out, "{:>4}", "m");
                for a in 0..dim {
                    let _ = write!(out, " {:>width$}", format!("C{a}"));
                }
                out.push('\n');
                for (row, m) in block.states[0].basis.harmonics().enumerate() {
                    let _ = write!(out, "{m:>4}");
                    for s in &block.states {
                        let _ = write!(out, " {:>width$}", nf.fmt(s.coefficients[row].re));
                    }
                    out.push('\n');
                }
                out.push('\n');
            }
        }
    }
    Ok(out)
}

/// Currents `j(φ)` on the uniform grid, one column per requested sub-state.
pub fn cmd_current(config: &RunConfig) -> Result<String> {
    let nf = NumberFormat { digits: config.digits };
    let blocks = spectrum_blocks(config)?;
    let mut header = vec!["phi".to_string()];
    let mut columns = Vec::new();
    for block in &blocks {
        for state in &block.states {
            if config.alphas.as_ref().is_some_and(|list| !list.contains(&state.alpha)) {
                continue;
            }
            header.push(format!(
                "j_p{}_a{}_{}",
                block.p,
                state.alpha,
                vc_label(block.include_vc)
            ));
            columns.push(sample_current_profile(state, &config.shape, config.grid)?);
        }
    }

    let mut out = String::new();
    push_row(&mut out, header);
    for (i, phi) in uniform_grid(config.grid).into_iter().enumerate() {
        push_row(
            &mut out,
            std::iter::once(nf.fmt(phi)).chain(columns.iter().map(|c| nf.fmt(c.j_values[i]))),
        );
    }
    Ok(out)
}

/// Per-(p, α) toroidal moment table.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentRow {
    pub p: u32,
    pub alpha: usize,
    pub tz_without_vc: f64,
    pub tz_with_vc: f64,
    pub ratio: Option<f64>,
    pub classical: f64,
}

pub fn moment_rows(config: &RunConfig) -> Result<Vec<MomentRow>> {
    let shape = &config.shape;
    let mut rows = Vec::new();
    for &p in &config.p_values {
        let off = solve_bloch(shape, p, &spectrum_config(config, false))?;
        let on = solve_bloch(shape, p, &spectrum_config(config, true))?;
        let classical = classical_reference(shape, p, &config.quad)?;
        for (s_off, s_on) in off.iter().zip(&on) {
            let tz_without_vc = toroidal_moment(s_off, shape, &config.quad)?.t_z;
            let tz_with_vc = toroidal_moment(s_on, shape, &config.quad)?.t_z;
            rows.push(MomentRow {
                p,
                alpha: s_off.alpha,
                tz_without_vc,
                tz_with_vc,
                ratio: moment_ratio(tz_without_vc, tz_with_vc),
                classical,
            });
        }
    }
    Ok(rows)
}

/// Moments with and without `V_c`, their ratio and the classical reference.
/// Both variants are always computed; the `vc` setting is not consulted.
pub fn cmd_moments(config: &RunConfig) -> Result<String> {
    let nf = NumberFormat { digits: config.digits };
    let mut out = String::from("p,alpha,Tz_without_vc,Tz_with_vc,ratio,classical\n");
    for row in moment_rows(config)? {
        push_row(
            &mut out,
            [
                row.p.to_string(),
                row.alpha.to_string(),
                nf.fmt(row.tz_without_vc),
                nf.fmt(row.tz_with_vc),
                row.ratio.map(|r| nf.fmt(r)).unwrap_or_default(),
                nf.fmt(row.classical),
            ],
        );
    }
    Ok(out)
}

/// Boltzmann averages of `T_z` over the sub-states of each requested `p`.
pub fn cmd_thermal(config: &RunConfig) -> Result<String> {
    let nf = NumberFormat { digits: config.digits };
    let shape = &config.shape;
    let mut out = String::new();
    for &p in &config.p_values {
        for &include_vc in config.vc.variants() {
            let states = solve_bloch(shape, p, &spectrum_config(config, include_vc))?;
            let pairs = states
                .iter()
                .map(|s| Ok((s.energy, toroidal_moment(s, shape, &config.quad)?.t_z)))
                .collect::<Result<Vec<_>>>()?;
            let normalized = thermal_average(&pairs, &ThermalSpec::new(config.temperature, true)?)?;
            let unnormalized = match thermal_average(&pairs, &ThermalSpec::new(config.temperature, false)?) {
                Ok(v) => nf.fmt(v),
                Err(crate::Error::Overflow { .. }) => "overflow".to_string(),
                Err(e) => return Err(e),
            };
            let _ = writeln!(out, "[thermal p={p} vc={}]", vc_label(include_vc));
            let _ = writeln!(out, "temperature = {}", nf.fmt(config.temperature));
            let _ = writeln!(out, "states = {}", pairs.len());
            let _ = writeln!(out, "normalized = {}", nf.fmt(normalized));
            let _ = writeln!(out, "unnormalized = {unnormalized}");
            out.push('\n');
        }
    }
    Ok(out)
}
