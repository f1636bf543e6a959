//! Scenario configuration from flags and an optional JSON file.
//!
//! Angles and rapidities accept plain numbers or `pi` literals such as
//! `pi/4`, `3pi/4`, `-pi/2` and `2*pi`. Grids are written `start:stop:step`
//! with the stop value included.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{LabError, Result};

const MAX_GRID_POINTS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    Fig1MeanVsTheta,
    ParallelNegativities,
    ParallelDeltaMeans,
    PerpNegativities,
    PerpDeltaMeans,
    Eggtray,
    SpinspinProjectionVsTrace,
}

impl Scenario {
    pub const ALL: [Scenario; 7] = [
        Scenario::Fig1MeanVsTheta,
        Scenario::ParallelNegativities,
        Scenario::ParallelDeltaMeans,
        Scenario::PerpNegativities,
        Scenario::PerpDeltaMeans,
        Scenario::Eggtray,
        Scenario::SpinspinProjectionVsTrace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::Fig1MeanVsTheta => "fig1_mean_vs_theta",
            Scenario::ParallelNegativities => "parallel_negativities",
            Scenario::ParallelDeltaMeans => "parallel_delta_means",
            Scenario::PerpNegativities => "perp_negativities",
            Scenario::PerpDeltaMeans => "perp_delta_means",
            Scenario::Eggtray => "eggtray",
            Scenario::SpinspinProjectionVsTrace => "spinspin_projection_vs_trace",
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Scenario::ALL.into_iter().find(|sc| sc.name() == s).ok_or_else(|| {
            let names: Vec<_> = Scenario::ALL.iter().map(|sc| sc.name()).collect();
            format!("unknown scenario `{s}` (expected one of {})", names.join(", "))
        })
    }
}

/// Parses `1.5`, `pi`, `-pi/2`, `3pi/4`, `3*pi/4`, `pi/4` and `π/4`.
pub fn parse_angle(text: &str) -> std::result::Result<f64, String> {
    let cleaned: String =
        text.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase().replace('π', "pi");
    if cleaned.is_empty() {
        return Err("empty value".into());
    }
    let (numerator, denominator) = match cleaned.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (cleaned.as_str(), None),
    };
    let number = |s: &str| s.parse::<f64>().map_err(|_| format!("cannot parse `{text}` as a number or pi fraction"));
    let value = match numerator.strip_suffix("pi") {
        Some(coefficient) => {
            let coefficient = coefficient.strip_suffix('*').unwrap_or(coefficient);
            let c = match coefficient {
                "" | "+" => 1.0,
                "-" => -1.0,
                other => number(other)?,
            };
            c * PI
        }
        None => number(numerator)?,
    };
    let value = match denominator {
        Some(d) => {
            let d = number(d)?;
            if d == 0.0 {
                return Err(format!("division by zero in `{text}`"));
            }
            value / d
        }
        None => value,
    };
    if !value.is_finite() {
        return Err(format!("`{text}` is not finite"));
    }
    Ok(value)
}

/// Inclusive arithmetic grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Grid {
    pub const fn new(start: f64, stop: f64, step: f64) -> Self {
        Grid { start, stop, step }
    }

    pub fn parse(text: &str) -> std::result::Result<Grid, String> {
        let parts: Vec<&str> = text.split(':').collect();
        let [start, stop, step] = parts.as_slice() else {
            return Err(format!("expected start:stop:step, got `{text}`"));
        };
        Ok(Grid::new(parse_angle(start)?, parse_angle(stop)?, parse_angle(step)?))
    }

    pub fn count(&self) -> usize {
        ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.count()).map(|k| self.start + k as f64 * self.step).collect()
    }

    fn validate(&self, field: &str) -> Result<()> {
        let err = |m: &str| Err(LabError::config(field, m));
        if !(self.start.is_finite() && self.stop.is_finite() && self.step.is_finite()) {
            return err("grid bounds must be finite");
        }
        if self.step <= 0.0 {
            return err("step must be positive");
        }
        if self.stop < self.start {
            return err("grid is empty (stop < start)");
        }
        if (self.stop - self.start) / self.step >= MAX_GRID_POINTS as f64 {
            return err("grid has too many points");
        }
        Ok(())
    }
}

/// A JSON scalar that is either a number or a literal like `"pi/4"`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Number(f64),
    Text(String),
}

impl Literal {
    fn value(&self, field: &str) -> Result<f64> {
        match self {
            Literal::Number(x) => Ok(*x),
            Literal::Text(s) => parse_angle(s).map_err(|m| LabError::config(field, m)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum GridSpec {
    Text(String),
    Triple([Literal; 3]),
    Fields { start: Literal, stop: Literal, step: Literal },
}

impl GridSpec {
    fn grid(&self, field: &str) -> Result<Grid> {
        let grid = match self {
            GridSpec::Text(s) => Grid::parse(s).map_err(|m| LabError::config(field, m))?,
            GridSpec::Triple([a, b, c]) | GridSpec::Fields { start: a, stop: b, step: c } => {
                Grid::new(a.value(field)?, b.value(field)?, c.value(field)?)
            }
        };
        grid.validate(field)?;
        Ok(grid)
    }
}

/// Unresolved settings; every field optional. JSON files deserialize into
/// this, and command-line flags are layered on top with [`merge`](Self::merge).
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigOverrides {
    pub scenario: Option<String>,
    pub theta: Option<Literal>,
    pub alpha: Option<Literal>,
    pub xi0: Option<Literal>,
    pub omega_grid: Option<GridSpec>,
    pub theta_grid: Option<GridSpec>,
    pub alpha_grid: Option<GridSpec>,
    pub delta: Option<Literal>,
    pub mass: Option<Literal>,
    pub output_path: Option<PathBuf>,
}

impl ConfigOverrides {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| LabError::config("config", e.to_string()))
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| LabError::io(path, e))?;
        Self::from_json(&text)
    }

    /// Fields set in `other` win.
    pub fn merge(self, other: ConfigOverrides) -> ConfigOverrides {
        ConfigOverrides {
            scenario: other.scenario.or(self.scenario),
            theta: other.theta.or(self.theta),
            alpha: other.alpha.or(self.alpha),
            xi0: other.xi0.or(self.xi0),
            omega_grid: other.omega_grid.or(self.omega_grid),
            theta_grid: other.theta_grid.or(self.theta_grid),
            alpha_grid: other.alpha_grid.or(self.alpha_grid),
            delta: other.delta.or(self.delta),
            mass: other.mass.or(self.mass),
            output_path: other.output_path.or(self.output_path),
        }
    }

    pub fn resolve(&self) -> Result<ScenarioConfig> {
        let scenario: Scenario = self
            .scenario
            .as_deref()
            .ok_or_else(|| LabError::config("scenario", "missing"))?
            .parse()
            .map_err(|m: String| LabError::config("scenario", m))?;
        let d = ScenarioConfig::defaults(scenario);
        let scalar = |v: &Option<Literal>, field: &str, default: f64| -> Result<f64> {
            let x = v.as_ref().map_or(Ok(default), |l| l.value(field))?;
            if !x.is_finite() {
                return Err(LabError::config(field, "must be finite"));
            }
            Ok(x)
        };
        let grid = |g: &Option<GridSpec>, field: &str, default: Grid| g.as_ref().map_or(Ok(default), |g| g.grid(field));
        let config = ScenarioConfig {
            scenario,
            theta: scalar(&self.theta, "theta", d.theta)?,
            alpha: scalar(&self.alpha, "alpha", d.alpha)?,
            xi0: scalar(&self.xi0, "xi0", d.xi0)?,
            omega_grid: grid(&self.omega_grid, "omega_grid", d.omega_grid)?,
            theta_grid: grid(&self.theta_grid, "theta_grid", d.theta_grid)?,
            alpha_grid: grid(&self.alpha_grid, "alpha_grid", d.alpha_grid)?,
            delta: scalar(&self.delta, "delta", d.delta)?,
            mass: scalar(&self.mass, "mass", d.mass)?,
            output_path: self.output_path.clone().unwrap_or(d.output_path),
        };
        config.validate()?;
        Ok(config)
    }
}

/// Fully resolved parameters for one scenario run.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    pub theta: f64,
    pub alpha: f64,
    pub xi0: f64,
    pub omega_grid: Grid,
    /// Swept by `fig1_mean_vs_theta` and `eggtray`.
    pub theta_grid: Grid,
    /// Swept by `eggtray`.
    pub alpha_grid: Grid,
    /// Wigner angle fixing the rapidities of `eggtray`.
    pub delta: f64,
    pub mass: f64,
    /// `-` writes to standard output.
    pub output_path: PathBuf,
}

impl ScenarioConfig {
    pub fn defaults(scenario: Scenario) -> ScenarioConfig {
        let (xi0, omega_grid) = match scenario {
            Scenario::Fig1MeanVsTheta => (0.5, Grid::new(0.0, 0.0, 1.0)),
            Scenario::SpinspinProjectionVsTrace => (1.0, Grid::new(0.0, 3.0, 0.01)),
            _ => (1.0, Grid::new(0.0, 4.0, 0.01)),
        };
        let theta_grid = match scenario {
            Scenario::Eggtray => Grid::new(0.0, PI, PI / 40.0),
            _ => Grid::new(0.0, PI, PI / 200.0),
        };
        ScenarioConfig {
            scenario,
            theta: FRAC_PI_4,
            alpha: FRAC_PI_4,
            xi0,
            omega_grid,
            theta_grid,
            alpha_grid: Grid::new(0.0, PI, PI / 40.0),
            delta: FRAC_PI_4,
            mass: 1.0,
            output_path: PathBuf::from(format!("{}.csv", scenario.name())),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.mass <= 0.0 {
            return Err(LabError::config("mass", "must be positive"));
        }
        if self.xi0 < 0.0 {
            return Err(LabError::config("xi0", "must be non-negative"));
        }
        if self.scenario == Scenario::SpinspinProjectionVsTrace && self.xi0 == 0.0 {
            return Err(LabError::config("xi0", "momentum superposition needs xi0 > 0"));
        }
        if !(0.0..FRAC_PI_2).contains(&self.delta) {
            return Err(LabError::config("delta", "Wigner angle must lie in [0, pi/2)"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_literals() {
        let cases = [
            ("pi/4", FRAC_PI_4),
            ("3pi/4", 3.0 * FRAC_PI_4),
            ("3*pi/4", 3.0 * FRAC_PI_4),
            ("-pi/2", -FRAC_PI_2),
            ("pi", PI),
            ("2pi", 2.0 * PI),
            (" π/4 ", FRAC_PI_4),
            ("0.25", 0.25),
            ("1/2", 0.5),
            ("1e-3", 1e-3),
        ];
        for (text, want) in cases {
            assert_eq!(parse_angle(text).unwrap(), want, "{text}");
        }
        for bad in ["", "pie", "pi/0", "x", "1/", "inf"] {
            assert!(parse_angle(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn grids_include_stop() {
        assert_eq!(Grid::parse("0:1:0.25").unwrap().points(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(Grid::parse("0:4:0.01").unwrap().count(), 401);
        assert_eq!(Grid::parse("0:pi:pi/200").unwrap().count(), 201);
        assert_eq!(Grid::new(1.0, 1.0, 0.5).points(), vec![1.0]);
        assert!(Grid::parse("0:1").is_err());
    }

    #[test]
    fn json_and_flags_layer() {
        let file = ConfigOverrides::from_json(
            r#"{"scenario": "parallel_negativities", "theta": "pi/8", "xi0": 2, "omega_grid": [0, 1, 0.5]}"#,
        )
        .unwrap();
        let flags = ConfigOverrides { theta: Some(Literal::Number(0.1)), ..Default::default() };
        let cfg = file.merge(flags).resolve().unwrap();
        assert_eq!(cfg.theta, 0.1);
        assert_eq!(cfg.xi0, 2.0);
        assert_eq!(cfg.omega_grid, Grid::new(0.0, 1.0, 0.5));
        assert_eq!(cfg.output_path, PathBuf::from("parallel_negativities.csv"));
    }

    #[test]
    fn grid_object_form() {
        let o = ConfigOverrides::from_json(
            r#"{"scenario": "eggtray", "alpha_grid": {"start": 0, "stop": "pi/2", "step": "pi/8"}}"#,
        )
        .unwrap();
        assert_eq!(o.resolve().unwrap().alpha_grid.count(), 5);
    }

    fn field_of(o: ConfigOverrides) -> String {
        match o.resolve() {
            Err(LabError::Config { field, .. }) => field,
            other => panic!("expected config error, got {other:?}"),
        }
    }

    #[test]
    fn errors_name_the_field() {
        let base = || ConfigOverrides { scenario: Some("perp_delta_means".into()), ..Default::default() };
        assert_eq!(field_of(ConfigOverrides::default()), "scenario");
        assert_eq!(field_of(ConfigOverrides { scenario: Some("nope".into()), ..Default::default() }), "scenario");
        assert_eq!(
            field_of(ConfigOverrides { omega_grid: Some(GridSpec::Text("1:0:0.1".into())), ..base() }),
            "omega_grid"
        );
        assert_eq!(
            field_of(ConfigOverrides { omega_grid: Some(GridSpec::Text("0:1:0".into())), ..base() }),
            "omega_grid"
        );
        assert_eq!(field_of(ConfigOverrides { theta: Some(Literal::Text("abc".into())), ..base() }), "theta");
        assert_eq!(field_of(ConfigOverrides { mass: Some(Literal::Number(0.0)), ..base() }), "mass");
        assert_eq!(field_of(ConfigOverrides { delta: Some(Literal::Text("pi/2".into())), ..base() }), "delta");
        let spin = ConfigOverrides {
            scenario: Some("spinspin_projection_vs_trace".into()),
            xi0: Some(Literal::Number(0.0)),
            ..Default::default()
        };
        assert_eq!(field_of(spin), "xi0");
        assert!(ConfigOverrides::from_json(r#"{"scenaro": "eggtray"}"#).is_err());
    }
}
