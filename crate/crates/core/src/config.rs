//! Campaign configuration text format.
//!
//! Flat `key = value` lines; `#` starts a comment and `[section]` headers
//! may group keys but do not namespace them. Recognized keys:
//!
//! ```text
//! [campaign]
//! dims      = 2x2, 3x2        # dA x dB pairs
//! trials    = 1000
//! seed      = 7
//! relations = all             # or a list: eq5, constraint1, combined_ur, ...
//! ensemble  = haar-pure, induced-mixed   # or named:bell, named:mixed
//! bases     = random          # random | mub (default: mub for named ensembles)
//! env_rank  = random          # induced-mixed environment dimension: random | <n>
//! tol       = 1e-9
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::relations::{Relation, DEFAULT_TOL};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedState {
    MaxEntangled,
    MaxMixed,
}

/// Source of random (or fixed) states for campaign trials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ensemble {
    HaarPure,
    InducedMixed,
    Named(NamedState),
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ensemble::HaarPure => f.write_str("haar-pure"),
            Ensemble::InducedMixed => f.write_str("induced-mixed"),
            Ensemble::Named(NamedState::MaxEntangled) => f.write_str("named:max_entangled"),
            Ensemble::Named(NamedState::MaxMixed) => f.write_str("named:max_mixed"),
        }
    }
}

impl FromStr for Ensemble {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "haar-pure" | "haar_pure" | "pure" => Ok(Ensemble::HaarPure),
            "induced-mixed" | "induced_mixed" | "mixed" => Ok(Ensemble::InducedMixed),
            "named:max_entangled" | "named:bell" => Ok(Ensemble::Named(NamedState::MaxEntangled)),
            "named:max_mixed" | "named:mixed" => Ok(Ensemble::Named(NamedState::MaxMixed)),
            other => Err(format!("unknown ensemble `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisChoice {
    /// Independent Haar-random X and Y per trial.
    Random,
    /// Computational X and Fourier Y.
    Mub,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnvRank {
    /// Uniform in `1..=dA·dB` per trial.
    Random,
    Fixed(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub dims: Vec<(usize, usize)>,
    pub trials: usize,
    pub seed: u64,
    pub relations: Vec<Relation>,
    pub ensembles: Vec<Ensemble>,
    /// `None` picks per ensemble: MUB for named states, random otherwise.
    pub bases: Option<BasisChoice>,
    pub env_rank: EnvRank,
    pub tol: f64,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            dims: vec![(2, 2), (3, 2)],
            trials: 1000,
            seed: 0,
            relations: Relation::ALL.to_vec(),
            ensembles: vec![Ensemble::HaarPure, Ensemble::InducedMixed],
            bases: None,
            env_rank: EnvRank::Random,
            tol: DEFAULT_TOL,
        }
    }
}

impl CampaignConfig {
    pub fn basis_choice(&self, ensemble: Ensemble) -> BasisChoice {
        self.bases.unwrap_or(match ensemble {
            Ensemble::Named(_) => BasisChoice::Mub,
            _ => BasisChoice::Random,
        })
    }

    /// Checks the invariants not enforced by parsing.
    pub fn validate(&self) -> Result<()> {
        let err = |field: &str, message: String| Error::Config {
            line: 0,
            field: field.into(),
            message,
        };
        if self.trials < 1 {
            return Err(err("trials", "must be at least 1".into()));
        }
        if self.dims.is_empty() {
            return Err(err("dims", "at least one (dA, dB) pair is required".into()));
        }
        for &(d_a, d_b) in &self.dims {
            if d_a < 2 || d_b < 1 {
                return Err(err(
                    "dims",
                    format!("{d_a}x{d_b} needs dA >= 2 and dB >= 1"),
                ));
            }
            if self
                .ensembles
                .contains(&Ensemble::Named(NamedState::MaxEntangled))
                && d_a != d_b
            {
                return Err(err(
                    "dims",
                    format!("named:max_entangled needs dA = dB, got {d_a}x{d_b}"),
                ));
            }
        }
        if self.relations.is_empty() {
            return Err(err("relations", "at least one relation is required".into()));
        }
        if self.ensembles.is_empty() {
            return Err(err("ensemble", "at least one ensemble is required".into()));
        }
        if let EnvRank::Fixed(0) = self.env_rank {
            return Err(err("env_rank", "must be at least 1".into()));
        }
        if !(self.tol >= 0.0 && self.tol.is_finite()) {
            return Err(err(
                "tol",
                format!("{} is not a nonnegative number", self.tol),
            ));
        }
        Ok(())
    }
}

fn list(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty())
}

fn parse_dims(value: &str) -> std::result::Result<Vec<(usize, usize)>, String> {
    list(value)
        .map(|item| {
            let (a, b) = item
                .split_once(['x', 'X'])
                .ok_or_else(|| format!("`{item}` is not of the form dAxdB"))?;
            let d_a = a
                .trim()
                .parse()
                .map_err(|_| format!("`{a}` is not an integer"))?;
            let d_b = b
                .trim()
                .parse()
                .map_err(|_| format!("`{b}` is not an integer"))?;
            Ok((d_a, d_b))
        })
        .collect()
}

/// Parses the campaign text format; unspecified keys keep their defaults.
pub fn parse_config(text: &str) -> Result<CampaignConfig> {
    parse_config_over(text, CampaignConfig::default())
}

/// Like [`parse_config`], with unspecified keys taken from `base`.
pub fn parse_config_over(text: &str, base: CampaignConfig) -> Result<CampaignConfig> {
    let mut cfg = base;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() || (line.starts_with('[') && line.ends_with(']')) {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Config {
            line: line_no,
            field: line.to_string(),
            message: "expected `key = value`".into(),
        })?;
        let key = key.trim();
        let value = value.trim();
        let fail = |message: String| Error::Config {
            line: line_no,
            field: key.to_string(),
            message,
        };
        match key {
            "dims" => cfg.dims = parse_dims(value).map_err(fail)?,
            "trials" => {
                cfg.trials = value
                    .parse()
                    .map_err(|_| fail(format!("`{value}` is not an integer")))?
            }
            "seed" => {
                cfg.seed = value
                    .parse()
                    .map_err(|_| fail(format!("`{value}` is not an integer")))?
            }
            "tol" => {
                cfg.tol = value
                    .parse()
                    .map_err(|_| fail(format!("`{value}` is not a number")))?
            }
            "relations" => {
                cfg.relations = if value == "all" {
                    Relation::ALL.to_vec()
                } else {
                    let mut rels = Vec::new();
                    for name in list(value) {
                        let r: Relation = name.parse().map_err(|e: Error| fail(e.to_string()))?;
                        if !rels.contains(&r) {
                            rels.push(r);
                        }
                    }
                    rels
                }
            }
            "ensemble" => {
                cfg.ensembles = list(value)
                    .map(str::parse)
                    .collect::<std::result::Result<_, _>>()
                    .map_err(fail)?
            }
            "bases" => {
                cfg.bases = match value {
                    "random" => Some(BasisChoice::Random),
                    "mub" => Some(BasisChoice::Mub),
                    "auto" => None,
                    other => return Err(fail(format!("unknown basis choice `{other}`"))),
                }
            }
            "env_rank" => {
                cfg.env_rank = match value {
                    "random" => EnvRank::Random,
                    n => EnvRank::Fixed(
                        n.parse()
                            .map_err(|_| fail(format!("`{n}` is not an integer")))?,
                    ),
                }
            }
            _ => return Err(fail("unknown key".into())),
        }
    }
    cfg.validate()?;
    Ok(cfg)
}
