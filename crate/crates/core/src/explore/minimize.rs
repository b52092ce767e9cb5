use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::nelder_mead::{nelder_mead, NelderMeadOptions};
use crate::relations::{Evaluation, Relation, DEFAULT_TOL};
use crate::rng::StreamRng;
use crate::states::{self, orthonormalize, BipartiteState, ObservableBasis};
use crate::{CMatrix, Error, Result, C64};

#[derive(Clone, Debug)]
pub struct MinimizeOptions {
    pub restarts: usize,
    pub seed: u64,
    /// A best slack below `−tol` is reported as a violation.
    pub tol: f64,
    pub nelder_mead: NelderMeadOptions,
    /// Local searches per restart, each starting from the previous optimum.
    pub polish_rounds: usize,
    /// `None` uses the global rayon pool.
    pub workers: Option<usize>,
}

impl Default for MinimizeOptions {
    fn default() -> Self {
        Self {
            restarts: 50,
            seed: 0,
            tol: DEFAULT_TOL,
            nelder_mead: NelderMeadOptions::default(),
            polish_rounds: 3,
            workers: None,
        }
    }
}

/// Replayable point: the pure state, both bases and, for the monitoring
/// bound, ε.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Argmin {
    pub relation: Relation,
    #[serde(rename = "dA")]
    pub d_a: usize,
    #[serde(rename = "dB")]
    pub d_b: usize,
    pub slack: f64,
    pub state: BipartiteState,
    pub x: ObservableBasis,
    pub y: ObservableBasis,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps: Option<f64>,
}

impl Argmin {
    /// Re-evaluates the stored point from scratch.
    pub fn replay(&self) -> Result<f64> {
        let eval = Evaluation::compute(&self.x, &self.y, &self.state, self.eps)?;
        Ok(eval.slack(self.relation))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Minimum {
    pub best_slack: f64,
    pub argmin: Argmin,
    /// Final slack of every restart, by restart index.
    pub restart_slacks: Vec<f64>,
    pub evaluations: usize,
}

/// X is pinned to the computational basis: a unitary on A acting on the
/// state and both bases leaves every relation unchanged.
struct Layout {
    relation: Relation,
    d_a: usize,
    d_b: usize,
}

impl Layout {
    fn state_len(&self) -> usize {
        2 * self.d_a * self.d_b
    }

    fn len(&self) -> usize {
        self.state_len()
            + self.d_a * self.d_a
            + usize::from(self.relation == Relation::MonitorBound)
    }

    fn decode(
        &self,
        p: &[f64],
    ) -> Result<(
        BipartiteState,
        ObservableBasis,
        ObservableBasis,
        Option<f64>,
    )> {
        let n = self.state_len();
        let psi: Vec<C64> = p[..n].chunks(2).map(|c| C64::new(c[0], c[1])).collect();
        let state = BipartiteState::from_pure(self.d_a, self.d_b, &psi)?;
        let y = basis_from_generator(self.d_a, &p[n..n + self.d_a * self.d_a])?;
        let eps =
            (self.relation == Relation::MonitorBound).then(|| p[self.len() - 1].sin().powi(2));
        Ok((state, states::computational_basis(self.d_a)?, y, eps))
    }

    fn slack(&self, p: &[f64]) -> f64 {
        self.decode(p)
            .and_then(|(s, x, y, eps)| Evaluation::compute(&x, &y, &s, eps))
            .map(|e| e.slack(self.relation))
            .unwrap_or(f64::NAN)
    }
}

/// Unitary Q factor of `I + iH` for the Hermitian `H` packed in `d²` reals:
/// diagonal first, then real and imaginary parts of the upper triangle.
fn basis_from_generator(d: usize, g: &[f64]) -> Result<ObservableBasis> {
    let mut h = CMatrix::from_real_diag(&g[..d]);
    let mut k = d;
    for i in 0..d {
        for j in i + 1..d {
            let z = C64::new(g[k], g[k + 1]);
            h[(i, j)] = z;
            h[(j, i)] = z.conj();
            k += 2;
        }
    }
    let m = CMatrix::from_fn(d, |i, j| {
        C64::i() * h[(i, j)] + if i == j { 1.0 } else { 0.0 }
    });
    let q = orthonormalize(&m)
        .ok_or_else(|| Error::InvalidState("degenerate basis generator".into()))?;
    ObservableBasis::new(q)
}

/// Searches pure states and a second basis for the smallest slack of
/// `relation` by restarted simplex descent. Restart `r` starts from stream
/// `r` of `seed`; the result does not depend on the worker count.
///
/// Returns [`Error::TheoremViolation`] if the best slack is below `−tol`.
pub fn minimize_slack(
    relation: Relation,
    d_a: usize,
    d_b: usize,
    opts: &MinimizeOptions,
) -> Result<Minimum> {
    if opts.restarts < 1 {
        return Err(Error::Config {
            line: 0,
            field: "restarts".into(),
            message: "must be at least 1".into(),
        });
    }
    if d_a < 2 || d_b < 1 {
        return Err(Error::BadDimension(if d_a < 2 { d_a } else { d_b }));
    }
    let layout = Layout { relation, d_a, d_b };
    let run = || -> Vec<(f64, Vec<f64>, usize)> {
        (0..opts.restarts)
            .into_par_iter()
            .map(|r| {
                let mut rng = StreamRng::new(opts.seed, r as u64);
                let mut x: Vec<f64> = (0..layout.len()).map(|_| rng.normal()).collect();
                let mut evals = 0;
                let mut value = f64::INFINITY;
                for _ in 0..opts.polish_rounds.max(1) {
                    let res = nelder_mead(|p| layout.slack(p), &x, &opts.nelder_mead);
                    evals += res.evals;
                    let improved = res.value < value;
                    x = res.x;
                    value = res.value;
                    if !improved {
                        break;
                    }
                }
                (value, x, evals)
            })
            .collect()
    };
    let runs = match opts.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };

    let mut best = 0;
    for (i, r) in runs.iter().enumerate() {
        if r.0 < runs[best].0 {
            best = i;
        }
    }
    let (state, x, y, eps) = layout.decode(&runs[best].1)?;
    let mut argmin = Argmin {
        relation,
        d_a,
        d_b,
        slack: f64::NAN,
        state,
        x,
        y,
        eps,
    };
    // Recompute from the decoded objects so the stored slack is exactly
    // what a replay produces.
    argmin.slack = argmin.replay()?;
    let best_slack = argmin.slack;
    if !(best_slack >= -opts.tol) {
        return Err(Error::TheoremViolation {
            relation: relation.name().to_string(),
            slack: best_slack,
            tol: opts.tol,
        });
    }
    Ok(Minimum {
        best_slack,
        argmin,
        restart_slacks: runs.iter().map(|r| r.0).collect(),
        evaluations: runs.iter().map(|r| r.2).sum(),
    })
}
