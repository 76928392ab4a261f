//! The claim registry: each claim reruns one predicted maximum over a grid
//! of parameters and produces one [`ClaimReport`] per grid point.

mod claims;
mod render;
pub mod sample;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::report::{ClaimReport, Status};
use crate::{Error, Result};

pub use claims::{registry, Claim};
pub use render::{render, render_table};

/// Inclusive parameter range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Range {
    pub lo: usize,
    pub hi: usize,
}

impl Range {
    pub fn new(lo: usize, hi: usize) -> Range {
        Range { lo, hi }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for Range {
    type Err = Error;

    /// `A..B`, `A..=B` (both inclusive) or a single value.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("'{s}' is not a range like 4..6"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
            None => (s, s),
        };
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok(Range { lo, hi })
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Precondition(format!(
                "unknown format '{other}' (text, csv or json)"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Overrides every claim's default `n` range.
    pub n: Option<Range>,
    /// Overrides the default `m` range of binary claims.
    pub m: Option<Range>,
    /// Element budget for semigroup closures and exhaustive searches.
    pub budget: u64,
    pub format: Format,
    /// Seed for randomized checks.
    pub seed: u64,
    /// Enables the larger default ranges and guards.
    pub long: bool,
    /// Number of random samples for randomized checks.
    pub samples: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: None,
            m: None,
            budget: 100_000_000,
            format: Format::Text,
            seed: 0x5eed,
            long: false,
            samples: 200,
        }
    }
}

/// A claim that could not be evaluated at all.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimError {
    pub claim_id: String,
    pub message: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Outcome {
    pub reports: Vec<ClaimReport>,
    pub errors: Vec<ClaimError>,
}

impl Outcome {
    /// Nothing failed and nothing errored.
    pub fn ok(&self) -> bool {
        self.errors.is_empty() && self.reports.iter().all(|r| r.status != Status::Fail)
    }

    /// Process exit code: 0 iff [`Outcome::ok`].
    pub fn exit_code(&self) -> i32 {
        if self.ok() {
            0
        } else {
            1
        }
    }
}

pub fn claim_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

fn find(id: &str) -> Result<&'static Claim> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim {
            id: id.to_string(),
            valid: claim_ids().join(", "),
        })
}

/// Runs one claim over its parameter grid.
pub fn verify(claim_id: &str, config: &RunConfig) -> Result<Vec<ClaimReport>> {
    let claim = find(claim_id)?;
    claim.run(config)
}

/// Runs several claims (all of them when `ids` is empty) in parallel.
/// Reports are ordered by claim id, keeping grid order within a claim.
pub fn verify_many(ids: &[String], config: &RunConfig) -> Result<Outcome> {
    let claims: Vec<&Claim> = if ids.is_empty() {
        registry().iter().collect()
    } else {
        ids.iter().map(|id| find(id)).collect::<Result<_>>()?
    };
    let mut results: Vec<(&str, Result<Vec<ClaimReport>>)> = claims
        .par_iter()
        .map(|c| (c.id, c.run(config)))
        .collect();
    results.sort_by(|a, b| a.0.cmp(b.0));
    let mut outcome = Outcome::default();
    for (id, r) in results {
        match r {
            Ok(reports) => outcome.reports.extend(reports),
            Err(e) => outcome.errors.push(ClaimError {
                claim_id: id.to_string(),
                message: e.to_string(),
            }),
        }
    }
    Ok(outcome)
}

pub fn verify_all(config: &RunConfig) -> Outcome {
    verify_many(&[], config).expect("registered ids resolve")
}

/// Runs one claim and renders its reports in the configured format.
pub fn table(claim_id: &str, config: &RunConfig) -> Result<String> {
    let reports = verify(claim_id, config)?;
    Ok(render(
        &Outcome {
            reports,
            errors: Vec::new(),
        },
        config.format,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("4..6".parse::<Range>().unwrap(), Range::new(4, 6));
        assert_eq!("4..=6".parse::<Range>().unwrap(), Range::new(4, 6));
        assert_eq!("5".parse::<Range>().unwrap(), Range::new(5, 5));
        assert!("6..4".parse::<Range>().is_err());
        assert!("x".parse::<Range>().is_err());
    }

    #[test]
    fn unknown_claim_lists_ids() {
        let err = verify("nope", &RunConfig::default()).unwrap_err();
        match err {
            Error::UnknownClaim { valid, .. } => assert!(valid.contains("thm1.5-star")),
            other => panic!("unexpected {other:?}"),
        }
    }
}
