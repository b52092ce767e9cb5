use serde::{Deserialize, Serialize};

use crate::channels::{dephasings_commute, monitor};
use crate::entropy::{irreality, uncertainty};
use crate::relations::{mu_bound, DEFAULT_TOL};
use crate::states::{BipartiteState, ObservableBasis};
use crate::{Error, Result};

/// ℑ(X) and H(Y|B) along a monitoring path ε ↦ M_Y^ε(ρ).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepTrace {
    pub eps_grid: Vec<f64>,
    pub irreality_x: Vec<f64>,
    pub uncertainty_y: Vec<f64>,
    pub bound_q: f64,
    /// Φ_X and Φ_Y commute, which makes `irreality_x` non-increasing.
    pub commuting: bool,
    /// `irreality_x` is non-increasing to the default tolerance.
    pub monotone: bool,
}

impl SweepTrace {
    /// `ℑ(X|M_Y^ε ρ) + H(Y|B) − q` per grid point.
    pub fn bound_slack(&self) -> Vec<f64> {
        self.irreality_x
            .iter()
            .zip(&self.uncertainty_y)
            .map(|(i, h)| i + h - self.bound_q)
            .collect()
    }

    fn first_increase(&self, tol: f64) -> Option<(usize, f64)> {
        self.irreality_x
            .windows(2)
            .enumerate()
            .find(|(_, w)| w[1] > w[0] + tol)
            .map(|(k, w)| (k + 1, w[0] - w[1]))
    }

    /// H(Y|B) constant and the monitored bound satisfied at every point;
    /// irreality non-increasing when the dephasings commute. All to `tol`.
    pub fn check(&self, tol: f64) -> Result<()> {
        if self.commuting {
            if let Some((k, slack)) = self.first_increase(tol) {
                return Err(Error::TheoremViolation {
                    relation: format!("monitoring monotonicity at eps = {}", self.eps_grid[k]),
                    slack,
                    tol,
                });
            }
        }
        for (k, slack) in self.bound_slack().into_iter().enumerate() {
            if !(slack >= -tol) {
                return Err(Error::TheoremViolation {
                    relation: format!("monitor_bound at eps = {}", self.eps_grid[k]),
                    slack,
                    tol,
                });
            }
        }
        if let Some(&first) = self.uncertainty_y.first() {
            for (k, &h) in self.uncertainty_y.iter().enumerate() {
                if (h - first).abs() > tol {
                    return Err(Error::TheoremViolation {
                        relation: format!("H(Y|B) invariance at eps = {}", self.eps_grid[k]),
                        slack: -(h - first).abs(),
                        tol,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Evaluates the trace on an ascending grid in `[0, 1]` and checks its
/// invariants at the default tolerance. For non-commuting X and Y the
/// irreality may rise along the path; this is reported in `monotone`
/// rather than treated as an error.
pub fn monitoring_sweep(
    x: &ObservableBasis,
    y: &ObservableBasis,
    state: &BipartiteState,
    grid: &[f64],
) -> Result<SweepTrace> {
    if let Some(&bad) = grid.iter().find(|e| !(0.0..=1.0).contains(*e)) {
        return Err(Error::OutOfRange {
            name: "eps",
            value: bad,
        });
    }
    if grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::Token {
            token: format!("{grid:?}"),
            message: "grid must be ascending".into(),
        });
    }
    let bound_q = mu_bound(x, y)?;
    let mut irreality_x = Vec::with_capacity(grid.len());
    let mut uncertainty_y = Vec::with_capacity(grid.len());
    for &eps in grid {
        let monitored = monitor(y, eps, state)?;
        irreality_x.push(irreality(x, &monitored)?);
        uncertainty_y.push(uncertainty(y, &monitored)?);
    }
    let mut trace = SweepTrace {
        eps_grid: grid.to_vec(),
        irreality_x,
        uncertainty_y,
        bound_q,
        commuting: dephasings_commute(x, y)?,
        monotone: true,
    };
    trace.monotone = trace.first_increase(DEFAULT_TOL).is_none();
    trace.check(DEFAULT_TOL)?;
    Ok(trace)
}

/// `start:stop:step` → `start, start + step, …` up to `stop` inclusive.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let bad = |message: &str| Error::Token {
        token: spec.to_string(),
        message: message.to_string(),
    };
    let parts: Vec<f64> = spec
        .split(':')
        .map(|p| p.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| bad("expected start:stop:step"))?;
    let [start, stop, step] = parts[..] else {
        return Err(bad("expected start:stop:step"));
    };
    if !(step > 0.0) || stop < start {
        return Err(bad("need step > 0 and stop >= start"));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count)
        .map(|k| (start + k as f64 * step).min(stop))
        .collect())
}
