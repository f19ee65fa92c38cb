//! Command implementations behind the `pigraph` binary.
//!
//! Every command returns a plain report value; rendering to text or JSON and
//! mapping to an exit code happen in `main`.

pub mod analyze;
pub mod report;
pub mod sweep;
pub mod table1;
pub mod text;

use std::str::FromStr;

use pigraph_core::edgeideal::DEFAULT_ENUMERATION_CAP;
use pigraph_core::graph::DEFAULT_VERTEX_CAP;
use pigraph_core::monomial::DEFAULT_PRODUCT_CAP;
use pigraph_core::polymatroid::DEFAULT_EXCHANGE_CAP;
use pigraph_core::ring::DEFAULT_RING_CAP;
use pigraph_core::{EdgeIdealError, GraphError, MonomialError, PolymatroidError, RingError};
use thiserror::Error;

pub use analyze::analyze;
pub use sweep::{sweep, Family, SweepConfig};
pub use table1::{table1, table1_with};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    EdgeIdeal(#[from] EdgeIdealError),
    #[error(transparent)]
    Polymatroid(#[from] PolymatroidError),
    #[error("invalid argument: {0}")]
    Usage(String),
}

/// Size limits; exceeding any of them is an error, never a truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Intermediate products per multiplication, and closed-form enumeration size.
    pub gens: usize,
    pub ring: u64,
    pub exchange: usize,
    pub vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            gens: DEFAULT_PRODUCT_CAP.max(DEFAULT_ENUMERATION_CAP),
            ring: DEFAULT_RING_CAP,
            exchange: DEFAULT_EXCHANGE_CAP,
            vertices: DEFAULT_VERTEX_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checks {
    pub oracle: bool,
    pub polymatroid: bool,
    pub linquot: bool,
    pub primary: bool,
    pub covers: bool,
}

impl Checks {
    pub const ALL: Checks = Checks {
        oracle: true,
        polymatroid: true,
        linquot: true,
        primary: true,
        covers: true,
    };
    pub const NONE: Checks = Checks {
        oracle: false,
        polymatroid: false,
        linquot: false,
        primary: false,
        covers: false,
    };

    pub fn names(&self) -> Vec<String> {
        [
            ("oracle", self.oracle),
            ("polymatroid", self.polymatroid),
            ("linquot", self.linquot),
            ("primary", self.primary),
            ("covers", self.covers),
        ]
        .iter()
        .filter(|(_, on)| *on)
        .map(|(name, _)| name.to_string())
        .collect()
    }
}

impl FromStr for Checks {
    type Err = CliError;

    /// `all`, `none`, or a comma-separated subset of
    /// `oracle,polymatroid,linquot,primary,covers`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "all" => return Ok(Checks::ALL),
            "none" | "" => return Ok(Checks::NONE),
            _ => {}
        }
        let mut checks = Checks::NONE;
        for name in s.split(',') {
            match name.trim() {
                "oracle" => checks.oracle = true,
                "polymatroid" => checks.polymatroid = true,
                "linquot" => checks.linquot = true,
                "primary" => checks.primary = true,
                "covers" => checks.covers = true,
                other => return Err(CliError::Usage(format!("unknown check `{other}`"))),
            }
        }
        Ok(checks)
    }
}

/// How the prime ideal of a ring is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeSelector {
    /// The ideal generated by one element, e.g. `3` or `(1,0)`.
    Generator(String),
    /// An explicit member list, e.g. `0,3` or `(0,0),(0,1)`.
    Members(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Ring {
        spec: String,
        selector: Option<PrimeSelector>,
    },
    Abstract {
        a: usize,
        b: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisConfig {
    pub target: Target,
    pub max_power: u32,
    pub checks: Checks,
    pub caps: Caps,
}

impl AnalysisConfig {
    pub fn new(target: Target, max_power: u32) -> Result<Self, CliError> {
        if max_power == 0 {
            return Err(CliError::Usage("--max-power must be at least 1".into()));
        }
        Ok(AnalysisConfig {
            target,
            max_power,
            checks: Checks::ALL,
            caps: Caps::default(),
        })
    }
}

/// Splits on commas that are not inside parentheses.
pub fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts.into_iter().filter(|p| !p.is_empty()).collect()
}

/// Parses `a,b`.
pub fn parse_ab(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("expected `a,b` with a >= 0 and b >= 1, got `{s}`"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if b == 0 {
        return Err(bad());
    }
    Ok((a, b))
}
