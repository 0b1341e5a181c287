//! Run configuration shared by every subcommand.
//!
//! Settings come from two layers: an optional flat `key = value` file and
//! command-line flags. Flags override the file. Everything is validated when
//! the final [`RunConfig`] is built, and errors name the offending line or
//! flag.
//!
//! Recognized keys (the same names as the long flags, without dashes):
//!
//! ```text
//! R, a, b, omega        helix shape
//! p                     Bloch indices: "1", "0,2", "1-3"
//! n-max                 harmonic cutoff
//! vc                    with | without | both
//! grid                  samples for geometry/potential/current output
//! quad-points           initial quadrature nodes (default 64*omega)
//! quad-tol              absolute quadrature tolerance
//! out                   output path (stdout when absent)
//! format                csv | text
//! digits                significant digits in numeric output
//! alphas                sub-state indices for `current`, e.g. "0,2,4"
//! temperature           thermal energy scale for `thermal`
//! cases                 (a:b) pairs for `potential`, e.g. "0.5:0.5,0.25:0.75"
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use crate::geometry::HelixShape;
use crate::quadrature::QuadratureSpec;
use crate::spectrum::BlochBasis;

pub const KEYS: &[&str] = &[
    "R",
    "a",
    "b",
    "omega",
    "p",
    "n-max",
    "vc",
    "grid",
    "quad-points",
    "quad-tol",
    "out",
    "format",
    "digits",
    "alphas",
    "temperature",
    "cases",
];

/// Where a setting came from, for error messages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    Default,
    File { path: String, line: usize },
    Flag,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Default => write!(f, "default"),
            Origin::File { path, line } => write!(f, "{path}:{line}"),
            Origin::Flag => write!(f, "command line"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub origin: Origin,
    pub key: String,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.origin {
            Origin::Flag => write!(f, "--{}: {}", self.key, self.message),
            _ => write!(f, "{}: field '{}': {}", self.origin, self.key, self.message),
        }
    }
}

impl std::error::Error for ConfigError {}

/// Raw string settings with their origins. Later inserts win.
#[derive(Debug, Clone, Default)]
pub struct Settings {
    values: BTreeMap<String, (String, Origin)>,
}

impl Settings {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parse the flat `key = value` format. `#` starts a comment line.
    pub fn parse_file(text: &str, path: &str) -> Result<Self, ConfigError> {
        let mut settings = Self::new();
        let mut seen = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let origin = Origin::File {
                path: path.to_string(),
                line,
            };
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let Some((key, value)) = trimmed.split_once('=') else {
                return Err(ConfigError {
                    origin,
                    key: trimmed.to_string(),
                    message: "expected 'key = value'".into(),
                });
            };
            let key = key.trim();
            let value = value.trim();
            if !KEYS.contains(&key) {
                return Err(ConfigError {
                    origin,
                    key: key.to_string(),
                    message: "unknown key".into(),
                });
            }
            if let Some(first) = seen.insert(key.to_string(), line) {
                return Err(ConfigError {
                    origin,
                    key: key.to_string(),
                    message: format!("duplicate key (first set on line {first})"),
                });
            }
            settings.set(
                key,
                value,
                Origin::File {
                    path: path.to_string(),
                    line,
                },
            );
        }
        Ok(settings)
    }

    pub fn set(&mut self, key: &str, value: impl Into<String>, origin: Origin) {
        self.values.insert(key.to_string(), (value.into(), origin));
    }

    /// Overlay `other` on top of `self`.
    pub fn merge(mut self, other: Settings) -> Self {
        self.values.extend(other.values);
        self
    }

    fn get(&self, key: &str) -> Option<&(String, Origin)> {
        self.values.get(key)
    }

    fn parse<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T, ConfigError> {
        match self.get(key) {
            None => Ok(default),
            Some((raw, origin)) => raw.parse::<T>().map_err(|_| ConfigError {
                origin: origin.clone(),
                key: key.to_string(),
                message: format!("cannot parse '{raw}'"),
            }),
        }
    }

    fn error(&self, key: &str, message: impl Into<String>) -> ConfigError {
        let origin = self.get(key).map(|(_, o)| o.clone()).unwrap_or(Origin::Default);
        ConfigError {
            origin,
            key: key.to_string(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VcMode {
    Without,
    With,
    Both,
}

impl VcMode {
    /// `include_vc` values in output order (off before on).
    pub fn variants(self) -> &'static [bool] {
        match self {
            VcMode::Without => &[false],
            VcMode::With => &[true],
            VcMode::Both => &[false, true],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub shape: HelixShape,
    pub p_values: Vec<u32>,
    pub n_max: u32,
    pub vc: VcMode,
    pub quad: QuadratureSpec,
    pub grid: usize,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub digits: usize,
    pub alphas: Option<Vec<usize>>,
    pub temperature: f64,
    /// `(a, b)` loop semi-axes compared by `potential`; the shape's own pair when not given.
    pub cases: Vec<(f64, f64)>,
}

impl RunConfig {
    pub const DEFAULT_GRID: usize = 512;
    pub const DEFAULT_DIGITS: usize = 6;

    pub fn from_settings(s: &Settings) -> Result<Self, ConfigError> {
        let r: f64 = s.parse("R", 1.0)?;
        let a: f64 = s.parse("a", 0.5)?;
        let b: f64 = s.parse("b", 0.5)?;
        let omega: u32 = s.parse("omega", 4)?;
        let shape = HelixShape::new(r, a, b, omega).map_err(|e| {
            let key = ["R", "a", "b", "omega"]
                .into_iter()
                .rev()
                .find(|k| s.get(k).is_some())
                .unwrap_or("R");
            s.error(key, e.to_string())
        })?;

        let n_max: u32 = s.parse("n-max", 2)?;
        if n_max == 0 {
            return Err(s.error("n-max", "must be at least 1"));
        }

        let p_values = match s.get("p") {
            None => vec![1.min(omega - 1)],
            Some((raw, _)) => parse_index_list(raw).ok_or_else(|| s.error("p", format!("cannot parse '{raw}'")))?,
        };
        for &p in &p_values {
            BlochBasis::new(p, n_max, omega).map_err(|e| s.error("p", e.to_string()))?;
        }

        let vc = match s.get("vc").map(|(v, _)| v.as_str()) {
            None | Some("both") => VcMode::Both,
            Some("with") | Some("on") => VcMode::With,
            Some("without") | Some("off") => VcMode::Without,
            Some(other) => return Err(s.error("vc", format!("expected with|without|both, got '{other}'"))),
        };

        let default_quad = QuadratureSpec::for_omega(omega);
        let quad_points: usize = s.parse("quad-points", default_quad.initial_points())?;
        let quad_tol: f64 = s.parse("quad-tol", default_quad.tolerance())?;
        let quad = QuadratureSpec::new(quad_points, quad_tol, default_quad.max_doublings()).map_err(|e| {
            let key = if s.get("quad-tol").is_some() && !(quad_tol > 0.0) {
                "quad-tol"
            } else {
                "quad-points"
            };
            s.error(key, e.to_string())
        })?;

        let grid: usize = s.parse("grid", Self::DEFAULT_GRID)?;
        if grid < 2 * omega as usize {
            return Err(s.error("grid", format!("must be at least 2*omega = {}", 2 * omega)));
        }

        let format = match s.get("format").map(|(v, _)| v.as_str()) {
            None | Some("csv") => OutputFormat::Csv,
            Some("text") | Some("structured-text") => OutputFormat::Text,
            Some(other) => return Err(s.error("format", format!("expected csv|text, got '{other}'"))),
        };

        let digits: usize = s.parse("digits", Self::DEFAULT_DIGITS)?;
        if !(1..=17).contains(&digits) {
            return Err(s.error("digits", "must be between 1 and 17"));
        }

        let alphas = match s.get("alphas") {
            None => None,
            Some((raw, _)) => {
                let list = parse_index_list(raw).ok_or_else(|| s.error("alphas", format!("cannot parse '{raw}'")))?;
                let dim = 2 * n_max as usize + 1;
                if let Some(bad) = list.iter().find(|&&x| x as usize >= dim) {
                    return Err(s.error("alphas", format!("sub-state {bad} out of range for {dim} states")));
                }
                Some(list.into_iter().map(|x| x as usize).collect())
            }
        };

        let temperature: f64 = s.parse("temperature", 1.0)?;
        if !(temperature > 0.0) {
            return Err(s.error("temperature", "must be positive"));
        }

        let cases = match s.get("cases") {
            None => vec![(shape.a(), shape.b())],
            Some((raw, _)) => {
                let cases = parse_cases(raw).ok_or_else(|| s.error("cases", format!("cannot parse '{raw}'")))?;
                for &(ca, cb) in &cases {
                    HelixShape::new(r, ca, cb, omega).map_err(|e| s.error("cases", e.to_string()))?;
                }
                cases
            }
        };

        let out = s.get("out").map(|(v, _)| PathBuf::from(v));

        Ok(Self {
            shape,
            p_values,
            n_max,
            vc,
            quad,
            grid,
            out,
            format,
            digits,
            alphas,
            temperature,
            cases,
        })
    }
}

/// `"1"`, `"0,2,3"`, `"1-3"` or a mix such as `"0,2-4"`; ranges are inclusive.
fn parse_index_list(raw: &str) -> Option<Vec<u32>> {
    let mut out = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        if let Some((lo, hi)) = part.split_once('-') {
            let lo: u32 = lo.trim().parse().ok()?;
            let hi: u32 = hi.trim().parse().ok()?;
            if lo > hi {
                return None;
            }
            out.extend(lo..=hi);
        } else {
            out.push(part.parse().ok()?);
        }
    }
    if out.is_empty() {
        return None;
    }
    out.sort_unstable();
    out.dedup();
    Some(out)
}

fn parse_cases(raw: &str) -> Option<Vec<(f64, f64)>> {
    raw.split(',')
        .map(|pair| {
            let (a, b) = pair.trim().split_once(':')?;
            Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
        })
        .collect()
}
