//! Run configuration as a flat `key = value` text file.
//!
//! Lines starting with `#` and blank lines are skipped. Profile modes are
//! given as `mode <m> = <coefficient>` for the gap profile and
//! `vmode <m> = <coefficient>` for the velocity profile. `omega_prime` has no
//! default: the stiffness scaling is the one knob every run must state.

use chain_core::model::DEFAULT_R;
use chain_core::{ChainParams, Profile};
use std::path::Path;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("missing required key '{0}'")]
    MissingKey(String),
    #[error("line {line}: bad value for '{key}': {reason}")]
    BadValue {
        line: usize,
        key: String,
        reason: String,
    },
    #[error("line {line}: unknown key '{key}'")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: expected 'key = value'")]
    BadLine { line: usize },
    #[error("unknown check '{0}'")]
    UnknownCheck(String),
    #[error("cannot read {path}: {source}")]
    Unreadable {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Spectral,
    Verlet,
}

impl FromStr for Engine {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "spectral" => Ok(Self::Spectral),
            "verlet" => Ok(Self::Verlet),
            other => Err(format!("'{other}' is not 'spectral' or 'verlet'")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileKind {
    Equilibrium,
    Sine,
    RandomFourier,
}

impl FromStr for ProfileKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "equilibrium" => Ok(Self::Equilibrium),
            "sine" => Ok(Self::Sine),
            "random-fourier" => Ok(Self::RandomFourier),
            other => Err(format!(
                "'{other}' is not 'equilibrium', 'sine' or 'random-fourier'"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scaling {
    Standard,
    None,
}

impl FromStr for Scaling {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "standard" => Ok(Self::Standard),
            "none" => Ok(Self::None),
            other => Err(format!("'{other}' is not 'standard' or 'none'")),
        }
    }
}

/// One run's worth of settings. Defaults reproduce the reference density
/// experiment when `omega_prime = 1` is supplied.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub omega_prime: Option<f64>,
    pub r: f64,
    pub v: f64,
    pub t_max: f64,
    pub samples: usize,
    pub seed: u64,
    pub theta: f64,
    pub engine: Engine,
    pub dt: Option<f64>,
    pub profile: ProfileKind,
    pub epsilon: f64,
    pub scaling: Scaling,
    pub grid: usize,
    pub h: f64,
    pub n_list: Vec<usize>,
    pub checks: Vec<String>,
    pub x_modes: Vec<(u32, f64)>,
    pub v_modes: Vec<(u32, f64)>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            n: 200,
            omega_prime: None,
            r: DEFAULT_R,
            v: 0.0,
            t_max: 10.0,
            samples: 201,
            seed: 42,
            theta: 0.5,
            engine: Engine::Spectral,
            dt: None,
            profile: ProfileKind::RandomFourier,
            epsilon: 0.01,
            scaling: Scaling::Standard,
            grid: 201,
            h: 1e-3,
            n_list: vec![100, 200, 400],
            checks: Vec::new(),
            x_modes: Vec::new(),
            v_modes: Vec::new(),
        }
    }
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = Self::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (key, value) = trimmed
                .split_once('=')
                .ok_or(ConfigError::BadLine { line })?;
            let (key, value) = (key.trim(), value.trim());
            cfg.set(line, key, value)?;
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Unreadable {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    fn set(&mut self, line: usize, key: &str, value: &str) -> Result<(), ConfigError> {
        fn parse<T: FromStr>(line: usize, key: &str, value: &str) -> Result<T, ConfigError>
        where
            T::Err: std::fmt::Display,
        {
            value.parse().map_err(|e: T::Err| ConfigError::BadValue {
                line,
                key: key.into(),
                reason: e.to_string(),
            })
        }
        match key {
            "N" => self.n = parse(line, key, value)?,
            "omega_prime" => self.omega_prime = Some(parse(line, key, value)?),
            "r" => self.r = parse(line, key, value)?,
            "v" => self.v = parse(line, key, value)?,
            "T" => self.t_max = parse(line, key, value)?,
            "samples" => self.samples = parse(line, key, value)?,
            "seed" => self.seed = parse(line, key, value)?,
            "theta" => self.theta = parse(line, key, value)?,
            "engine" => self.engine = parse(line, key, value)?,
            "dt" => self.dt = Some(parse(line, key, value)?),
            "profile" => self.profile = parse(line, key, value)?,
            "epsilon" => self.epsilon = parse(line, key, value)?,
            "scaling" => self.scaling = parse(line, key, value)?,
            "grid" => self.grid = parse(line, key, value)?,
            "h" => self.h = parse(line, key, value)?,
            "N_list" => {
                self.n_list = value
                    .split(',')
                    .map(|s| parse(line, key, s.trim()))
                    .collect::<Result<_, _>>()?;
            }
            "checks" => {
                self.checks = value.split(',').map(|s| s.trim().to_string()).collect();
            }
            _ => {
                if let Some(m) = key.strip_prefix("mode ") {
                    let m: u32 = parse(line, key, m.trim())?;
                    self.x_modes.push((m, parse(line, key, value)?));
                } else if let Some(m) = key.strip_prefix("vmode ") {
                    let m: u32 = parse(line, key, m.trim())?;
                    self.v_modes.push((m, parse(line, key, value)?));
                } else {
                    return Err(ConfigError::UnknownKey {
                        line,
                        key: key.into(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn omega_prime(&self) -> Result<f64, ConfigError> {
        self.omega_prime
            .ok_or_else(|| ConfigError::MissingKey("omega_prime".into()))
    }

    pub fn build_profile(&self) -> crate::Result<Profile> {
        let profile = match self.profile {
            ProfileKind::Equilibrium => Profile::equilibrium(),
            ProfileKind::Sine => {
                Profile::sine_with_velocity(&self.x_modes, self.epsilon, &self.v_modes)?
            }
            ProfileKind::RandomFourier => Profile::random_fourier(self.seed, self.theta)?,
        };
        Ok(profile)
    }

    pub fn build_params(&self, profile: &Profile) -> crate::Result<ChainParams> {
        let omega_prime = self.omega_prime()?;
        let params = ChainParams::new_linear(self.n, omega_prime, self.v, self.r, profile)?;
        Ok(match self.scaling {
            Scaling::Standard => params,
            Scaling::None => params.without_stiffness_scaling(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_describe_the_reference_experiment() {
        let cfg = RunConfig::default();
        assert_eq!(cfg.n, 200);
        assert_eq!(cfg.seed, 42);
        assert_eq!(cfg.theta, 0.5);
        assert_eq!(cfg.t_max, 10.0);
        assert_eq!(cfg.samples, 201);
        assert!(cfg.omega_prime.is_none());
    }

    #[test]
    fn parses_keys_comments_and_mode_lines() {
        let text = "\
# a comment
N = 64
omega_prime = 2.5
profile = sine
epsilon = 0.004
mode 1 = 0.5
mode 3 = -0.25
vmode 2 = 0.01
engine = verlet
dt = 1e-4
N_list = 50, 100, 200
checks = gap-band, residuals
";
        let cfg = RunConfig::parse(text).unwrap();
        assert_eq!(cfg.n, 64);
        assert_eq!(cfg.omega_prime().unwrap(), 2.5);
        assert_eq!(cfg.profile, ProfileKind::Sine);
        assert_eq!(cfg.x_modes, vec![(1, 0.5), (3, -0.25)]);
        assert_eq!(cfg.v_modes, vec![(2, 0.01)]);
        assert_eq!(cfg.engine, Engine::Verlet);
        assert_eq!(cfg.dt, Some(1e-4));
        assert_eq!(cfg.n_list, vec![50, 100, 200]);
        assert_eq!(cfg.checks, vec!["gap-band", "residuals"]);
    }

    #[test]
    fn missing_stiffness_is_reported_by_name() {
        let cfg = RunConfig::parse("N = 10\n").unwrap();
        let err = cfg.omega_prime().unwrap_err();
        assert!(err.to_string().contains("omega_prime"), "{err}");
    }

    #[test]
    fn unknown_keys_and_bad_values_carry_line_numbers() {
        let err = RunConfig::parse("N = 10\nbogus = 1\n").unwrap_err();
        assert!(matches!(err, ConfigError::UnknownKey { line: 2, .. }), "{err}");
        let err = RunConfig::parse("\n\nT = fast\n").unwrap_err();
        assert!(matches!(err, ConfigError::BadValue { line: 3, .. }), "{err}");
        let err = RunConfig::parse("just words\n").unwrap_err();
        assert!(matches!(err, ConfigError::BadLine { line: 1 }), "{err}");
    }

    #[test]
    fn scaling_none_drops_the_stiffness_factor() {
        let text = "omega_prime = 1\nprofile = equilibrium\nscaling = none\nN = 50\n";
        let cfg = RunConfig::parse(text).unwrap();
        let profile = cfg.build_profile().unwrap();
        let params = cfg.build_params(&profile).unwrap();
        assert_eq!(params.omega(), 1.0);
        let std_cfg = RunConfig::parse("omega_prime = 1\nprofile = equilibrium\nN = 50\n").unwrap();
        let params = std_cfg.build_params(&profile).unwrap();
        assert_eq!(params.omega(), 50.0);
    }
}
