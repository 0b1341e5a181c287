use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use toroidal_helix::cli::{self, config::Origin, Command, Settings};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Sub {
    Geometry,
    Potential,
    Spectrum,
    Current,
    Moments,
    Thermal,
}

/// Eigenstates, currents and toroidal moments of a particle on a toroidal helix.
#[derive(Debug, Parser)]
#[command(name = "toroidal-helix", version)]
struct Args {
    #[arg(value_enum)]
    command: Sub,

    /// Flat key=value config file; flags override its values.
    #[arg(long)]
    config: Option<String>,

    #[arg(long = "R", value_name = "R")]
    major_radius: Option<String>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    omega: Option<String>,
    /// Bloch index or list, e.g. 1 or 1-3.
    #[arg(long)]
    p: Option<String>,
    #[arg(long = "n-max")]
    n_max: Option<String>,
    #[arg(long = "with-vc", conflicts_with_all = ["without_vc", "both"])]
    with_vc: bool,
    #[arg(long = "without-vc", conflicts_with = "both")]
    without_vc: bool,
    #[arg(long)]
    both: bool,
    #[arg(long)]
    grid: Option<String>,
    #[arg(long = "quad-points")]
    quad_points: Option<String>,
    #[arg(long = "quad-tol")]
    quad_tol: Option<String>,
    #[arg(long)]
    out: Option<String>,
    /// csv or text.
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    digits: Option<String>,
    /// Sub-states to emit from `current`, e.g. 0,2,4.
    #[arg(long)]
    alphas: Option<String>,
    #[arg(long)]
    temperature: Option<String>,
    /// (a:b) pairs for `potential`, e.g. 0.5:0.5,0.25:0.75,0.75:0.25.
    #[arg(long)]
    cases: Option<String>,
}

impl Args {
    fn settings(&self) -> Settings {
        let mut s = Settings::new();
        let pairs = [
            ("R", &self.major_radius),
            ("a", &self.a),
            ("b", &self.b),
            ("omega", &self.omega),
            ("p", &self.p),
            ("n-max", &self.n_max),
            ("grid", &self.grid),
            ("quad-points", &self.quad_points),
            ("quad-tol", &self.quad_tol),
            ("out", &self.out),
            ("format", &self.format),
            ("digits", &self.digits),
            ("alphas", &self.alphas),
            ("temperature", &self.temperature),
            ("cases", &self.cases),
        ];
        for (key, value) in pairs {
            if let Some(v) = value {
                s.set(key, v.clone(), Origin::Flag);
            }
        }
        let vc = [
            (self.with_vc, "with"),
            (self.without_vc, "without"),
            (self.both, "both"),
        ];
        if let Some((_, mode)) = vc.into_iter().find(|(set, _)| *set) {
            s.set("vc", mode, Origin::Flag);
        }
        s
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = match args.command {
        Sub::Geometry => Command::Geometry,
        Sub::Potential => Command::Potential,
        Sub::Spectrum => Command::Spectrum,
        Sub::Current => Command::Current,
        Sub::Moments => Command::Moments,
        Sub::Thermal => Command::Thermal,
    };
    match cli::run(command, args.config.as_deref(), args.settings()) {
        Ok(Some(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("toroidal-helix: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
