//! Command-line surface: configuration, subcommands and output formatting.
//!
//! The `toroidal-helix` binary only parses arguments; everything it prints is
//! produced here so the output can be tested without spawning a process.

pub mod commands;
pub mod config;
pub mod format;

use std::fmt;
use std::str::FromStr;

pub use commands::{cmd_current, cmd_geometry, cmd_moments, cmd_potential, cmd_spectrum, cmd_thermal, GEOMETRY_HEADER};
pub use config::{ConfigError, OutputFormat, RunConfig, Settings, VcMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Geometry,
    Potential,
    Spectrum,
    Current,
    Moments,
    Thermal,
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "geometry" => Command::Geometry,
            "potential" => Command::Potential,
            "spectrum" => Command::Spectrum,
            "current" => Command::Current,
            "moments" => Command::Moments,
            "thermal" => Command::Thermal,
            other => return Err(format!("unknown subcommand '{other}'")),
        })
    }
}

#[derive(Debug)]
pub enum CliError {
    Config(ConfigError),
    Numerical(crate::Error),
    Io(std::io::Error),
}

impl CliError {
    pub const CONFIG_EXIT: i32 = 2;
    pub const NUMERICAL_EXIT: i32 = 3;

    pub fn exit_code(&self) -> i32 {
        use crate::Error::*;
        match self {
            CliError::Config(_) => Self::CONFIG_EXIT,
            CliError::Numerical(e) => match e {
                InvalidShape(_)
                | InvalidBasis(_)
                | InvalidInput(_)
                | InvalidQuadrature(_)
                | InvalidTubePoint { .. } => Self::CONFIG_EXIT,
                NotConverged { .. }
                | NoConvergence { .. }
                | HermiticityViolation { .. }
                | DegenerateFrame { .. }
                | Overflow { .. } => Self::NUMERICAL_EXIT,
            },
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(e) => write!(f, "configuration error: {e}"),
            CliError::Numerical(e) => write!(f, "numerical error: {e}"),
            CliError::Io(e) => write!(f, "I/O error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Config(e)
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Numerical(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Render one subcommand's output.
pub fn render(command: Command, config: &RunConfig) -> Result<String, CliError> {
    let text = match command {
        Command::Geometry => cmd_geometry(config)?,
        Command::Potential => cmd_potential(config)?,
        Command::Spectrum => cmd_spectrum(config)?,
        Command::Current => cmd_current(config)?,
        Command::Moments => cmd_moments(config)?,
        Command::Thermal => cmd_thermal(config)?,
    };
    Ok(text)
}

/// Build the configuration from an optional config file and flag overrides,
/// render, and write to `out` (or return the text for stdout).
pub fn run(command: Command, config_file: Option<&str>, flags: Settings) -> Result<Option<String>, CliError> {
    let base = match config_file {
        Some(path) => Settings::parse_file(&std::fs::read_to_string(path)?, path)?,
        None => Settings::new(),
    };
    let config = RunConfig::from_settings(&base.merge(flags))?;
    let text = render(command, &config)?;
    match &config.out {
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}
