//! Scan configuration from flags and an optional `key = value` file.

use std::f64::consts::PI;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Werner,
    Ku,
    WClass,
}

impl FromStr for Family {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "werner" => Ok(Family::Werner),
            "ku" => Ok(Family::Ku),
            "wclass" => Ok(Family::WClass),
            other => Err(CliError::Config(format!(
                "unknown family '{other}' (expected werner, ku or wclass)"
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Werner => "werner",
            Family::Ku => "ku",
            Family::WClass => "wclass",
        })
    }
}

impl Family {
    pub fn default_grid(self) -> Grid {
        match self {
            Family::Werner => Grid::new(0.0, 1.0, 101),
            Family::Ku => Grid::new(0.0, PI / 2.0, 201),
            Family::WClass => Grid::new(0.001, 0.999, 201),
        }
    }

    fn domain(self) -> Option<(f64, f64)> {
        match self {
            Family::Werner | Family::WClass => Some((0.0, 1.0)),
            Family::Ku => None,
        }
    }
}

/// Evenly spaced `points` values from `start` to `stop` inclusive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
}

impl Grid {
    pub fn new(start: f64, stop: f64, points: usize) -> Self {
        Grid {
            start,
            stop,
            points,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        let last = self.points - 1;
        (0..self.points)
            .map(|i| {
                if i == last {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * i as f64 / last as f64
                }
            })
            .collect()
    }

    fn validate(&self, family: Family) -> CliResult<()> {
        if self.points < 2 {
            return Err(CliError::Config(format!(
                "grid needs at least 2 points, got {}",
                self.points
            )));
        }
        if !(self.start.is_finite() && self.stop.is_finite()) {
            return Err(CliError::Config("grid bounds must be finite".into()));
        }
        if self.start >= self.stop {
            return Err(CliError::Config(format!(
                "grid start {} must be below stop {}",
                self.start, self.stop
            )));
        }
        if let Some((lo, hi)) = family.domain() {
            if self.start < lo || self.stop > hi {
                return Err(CliError::Config(format!(
                    "{family} grid [{}, {}] leaves the domain [{lo}, {hi}]",
                    self.start, self.stop
                )));
            }
        }
        Ok(())
    }
}

impl FromStr for Grid {
    type Err = CliError;

    /// `start:stop:points`; bounds accept `pi`, `pi/k` and `k*pi`.
    fn from_str(s: &str) -> CliResult<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, points] = parts[..] else {
            return Err(CliError::Config(format!(
                "grid '{s}' is not start:stop:points"
            )));
        };
        let points = points.trim().parse().map_err(|_| {
            CliError::Config(format!("grid point count '{points}' is not an integer"))
        })?;
        Ok(Grid::new(parse_real(start)?, parse_real(stop)?, points))
    }
}

fn parse_real(s: &str) -> CliResult<f64> {
    let t = s.trim().to_ascii_lowercase();
    let bad = || CliError::Config(format!("cannot read '{s}' as a number"));
    let num = |x: &str| x.trim().parse::<f64>().map_err(|_| bad());
    if let Some(rest) = t.strip_prefix("pi") {
        return match rest.trim() {
            "" => Ok(PI),
            r => r
                .strip_prefix('/')
                .map(|d| Ok(PI / num(d)?))
                .unwrap_or_else(|| Err(bad())),
        };
    }
    if let Some(k) = t.strip_suffix("pi") {
        return Ok(num(k.trim().trim_end_matches('*'))? * PI);
    }
    num(&t)
}

pub fn parse_n_list(s: &str) -> CliResult<Vec<usize>> {
    let list: Vec<usize> = s
        .split(',')
        .map(|item| {
            item.trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| CliError::Config(format!("'{item}' is not a positive integer n")))
        })
        .collect::<CliResult<_>>()?;
    if list.is_empty() {
        return Err(CliError::Config("empty n list".into()));
    }
    Ok(list)
}

/// Fully resolved scan request.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanConfig {
    pub family: Family,
    pub n_list: Vec<usize>,
    pub grid: Grid,
    pub out: PathBuf,
    pub seed: u64,
}

/// Partially specified scan fields, from a file or from flags.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ScanOverrides {
    pub family: Option<Family>,
    pub n_list: Option<Vec<usize>>,
    pub grid: Option<Grid>,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
}

impl ScanOverrides {
    /// Parses `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut cfg = ScanOverrides::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Config(format!("line {}: expected key = value", lineno + 1))
            })?;
            let value = value.trim();
            match key.trim() {
                "family" => cfg.family = Some(value.parse()?),
                "n" | "n_list" => cfg.n_list = Some(parse_n_list(value)?),
                "grid" => cfg.grid = Some(value.parse()?),
                "out" | "output" => cfg.out = Some(PathBuf::from(value)),
                "seed" => {
                    cfg.seed = Some(value.parse().map_err(|_| {
                        CliError::Config(format!(
                            "line {}: seed '{value}' is not an integer",
                            lineno + 1
                        ))
                    })?)
                }
                other => {
                    return Err(CliError::Config(format!(
                        "line {}: unknown key '{other}'",
                        lineno + 1
                    )))
                }
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text)
    }

    /// Fields set in `flags` win over `self`.
    pub fn merged(self, flags: ScanOverrides) -> ScanOverrides {
        ScanOverrides {
            family: flags.family.or(self.family),
            n_list: flags.n_list.or(self.n_list),
            grid: flags.grid.or(self.grid),
            out: flags.out.or(self.out),
            seed: flags.seed.or(self.seed),
        }
    }

    pub fn resolve(self) -> CliResult<ScanConfig> {
        let family = self
            .family
            .ok_or_else(|| CliError::Config("no family given".into()))?;
        let out = self
            .out
            .ok_or_else(|| CliError::Config("no output path given".into()))?;
        let grid = self.grid.unwrap_or_else(|| family.default_grid());
        grid.validate(family)?;
        Ok(ScanConfig {
            family,
            n_list: self.n_list.unwrap_or_else(|| vec![1, 2, 3, 4, 5]),
            grid,
            out,
            seed: self.seed.unwrap_or(0),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g: Grid = "0:pi/2:5".parse().unwrap();
        assert_eq!(g, Grid::new(0.0, PI / 2.0, 5));
        let g: Grid = "0.5:2*pi:3".parse().unwrap();
        assert_eq!(g.stop, 2.0 * PI);
        assert!("0:1".parse::<Grid>().is_err());
        assert!("0:x:3".parse::<Grid>().is_err());
        let v = Grid::new(0.0, 1.0, 101).values();
        assert_eq!(v.len(), 101);
        assert_eq!(v[100], 1.0);
    }

    #[test]
    fn grid_validation() {
        assert!(Grid::new(0.0, 1.0, 1).validate(Family::Ku).is_err());
        assert!(Grid::new(1.0, 0.0, 3).validate(Family::Ku).is_err());
        assert!(Grid::new(0.0, 1.5, 3).validate(Family::Werner).is_err());
        assert!(Grid::new(-0.1, 0.5, 3).validate(Family::WClass).is_err());
        assert!(Grid::new(-3.0, 3.0, 3).validate(Family::Ku).is_ok());
    }

    #[test]
    fn file_then_flags() {
        let file = ScanOverrides::parse(
            "# scan\nfamily = ku\nn = 2, 3\ngrid = 0:1:3\nout = a.csv\nseed = 7\n",
        )
        .unwrap();
        let flags = ScanOverrides {
            n_list: Some(vec![4]),
            out: Some("b.csv".into()),
            ..Default::default()
        };
        let cfg = file.merged(flags).resolve().unwrap();
        assert_eq!(cfg.family, Family::Ku);
        assert_eq!(cfg.n_list, vec![4]);
        assert_eq!(cfg.grid.points, 3);
        assert_eq!(cfg.out, PathBuf::from("b.csv"));
        assert_eq!(cfg.seed, 7);
    }

    #[test]
    fn config_errors() {
        assert!(ScanOverrides::parse("family ku").is_err());
        assert!(ScanOverrides::parse("colour = blue").is_err());
        assert!(ScanOverrides::parse("n = 0").is_err());
        assert!(ScanOverrides::default().resolve().is_err());
    }

    #[test]
    fn defaults_fill_in() {
        let cfg = ScanOverrides {
            family: Some(Family::WClass),
            out: Some("x.csv".into()),
            ..Default::default()
        }
        .resolve()
        .unwrap();
        assert_eq!(cfg.grid, Grid::new(0.001, 0.999, 201));
        assert_eq!(cfg.n_list, vec![1, 2, 3, 4, 5]);
    }
}
