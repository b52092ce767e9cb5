use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{BasisChoice, CampaignConfig, Ensemble, EnvRank, NamedState};
use crate::relations::{Evaluation, Relation};
use crate::rng::StreamRng;
use crate::states::{self, BipartiteState, ObservableBasis};
use crate::Result;

pub const HISTOGRAM_BINS: usize = 64;

/// Fixed-bin slack histogram over `[lo, hi)` with under/overflow counters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub lo: f64,
    pub hi: f64,
    pub underflow: u64,
    pub bins: Vec<u64>,
    pub overflow: u64,
}

impl Histogram {
    fn new(hi: f64) -> Self {
        Self {
            lo: 0.0,
            hi,
            underflow: 0,
            bins: vec![0; HISTOGRAM_BINS],
            overflow: 0,
        }
    }

    fn add(&mut self, x: f64) {
        if !(x >= self.lo) {
            self.underflow += 1;
        } else if x >= self.hi {
            self.overflow += 1;
        } else {
            let k = ((x - self.lo) / (self.hi - self.lo) * HISTOGRAM_BINS as f64) as usize;
            self.bins[k.min(HISTOGRAM_BINS - 1)] += 1;
        }
    }

    pub fn total(&self) -> u64 {
        self.underflow + self.overflow + self.bins.iter().sum::<u64>()
    }
}

/// Enough to regenerate one trial with [`trial_inputs`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialDescriptor {
    pub seed: u64,
    pub trial: usize,
    #[serde(rename = "dA")]
    pub d_a: usize,
    #[serde(rename = "dB")]
    pub d_b: usize,
    pub ensemble: Ensemble,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationSummary {
    pub relation: Relation,
    pub min_slack: f64,
    pub argmin: TrialDescriptor,
    pub violations: u64,
    pub histogram: Histogram,
}

/// Slacks of every configured relation for one trial, in config order.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialRecord {
    pub descriptor: TrialDescriptor,
    pub eps: f64,
    pub slacks: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignResult {
    pub config: CampaignConfig,
    pub total_trials: usize,
    pub relations: Vec<RelationSummary>,
    #[serde(skip)]
    pub records: Vec<TrialRecord>,
}

impl CampaignResult {
    pub fn total_violations(&self) -> u64 {
        self.relations.iter().map(|r| r.violations).sum()
    }

    pub fn summary(&self, relation: Relation) -> Option<&RelationSummary> {
        self.relations.iter().find(|r| r.relation == relation)
    }
}

/// State, bases and ε of one trial.
pub struct TrialInputs {
    pub descriptor: TrialDescriptor,
    pub state: BipartiteState,
    pub x: ObservableBasis,
    pub y: ObservableBasis,
    pub eps: f64,
}

/// Trial `i` cycles through `dims` fastest, then `ensembles`, and draws
/// from stream `i` of `cfg.seed`.
pub fn trial_inputs(cfg: &CampaignConfig, trial: usize) -> Result<TrialInputs> {
    let (d_a, d_b) = cfg.dims[trial % cfg.dims.len()];
    let ensemble = cfg.ensembles[(trial / cfg.dims.len()) % cfg.ensembles.len()];
    let mut rng = StreamRng::new(cfg.seed, trial as u64);
    let state = match ensemble {
        Ensemble::HaarPure => states::haar_random_pure_with(d_a, d_b, &mut rng)?,
        Ensemble::InducedMixed => {
            let rank = match cfg.env_rank {
                EnvRank::Random => rng.int_inclusive(1, d_a * d_b),
                EnvRank::Fixed(r) => r,
            };
            states::random_mixed_with(d_a, d_b, rank, &mut rng)?
        }
        Ensemble::Named(NamedState::MaxEntangled) => states::max_entangled(d_a)?,
        Ensemble::Named(NamedState::MaxMixed) => states::max_mixed(d_a, d_b)?,
    };
    let (x, y) = match cfg.basis_choice(ensemble) {
        BasisChoice::Random => (
            states::random_basis_with(d_a, &mut rng)?,
            states::random_basis_with(d_a, &mut rng)?,
        ),
        BasisChoice::Mub => (
            states::computational_basis(d_a)?,
            states::fourier_basis(d_a)?,
        ),
    };
    let eps = rng.uniform();
    Ok(TrialInputs {
        descriptor: TrialDescriptor {
            seed: cfg.seed,
            trial,
            d_a,
            d_b,
            ensemble,
        },
        state,
        x,
        y,
        eps,
    })
}

fn run_trial(cfg: &CampaignConfig, trial: usize) -> Result<TrialRecord> {
    let inputs = trial_inputs(cfg, trial)?;
    let eps = cfg
        .relations
        .contains(&Relation::MonitorBound)
        .then_some(inputs.eps);
    let eval = Evaluation::compute(&inputs.x, &inputs.y, &inputs.state, eps)?;
    Ok(TrialRecord {
        descriptor: inputs.descriptor,
        eps: inputs.eps,
        slacks: cfg.relations.iter().map(|&r| eval.slack(r)).collect(),
    })
}

/// Runs on the global rayon pool.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignResult> {
    cfg.validate()?;
    let records = (0..cfg.trials)
        .into_par_iter()
        .map(|i| run_trial(cfg, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(aggregate(cfg, records))
}

/// Runs on a dedicated pool of `workers` threads. The result does not
/// depend on `workers`.
pub fn run_campaign_with_workers(cfg: &CampaignConfig, workers: usize) -> Result<CampaignResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| run_campaign(cfg))
}

fn aggregate(cfg: &CampaignConfig, records: Vec<TrialRecord>) -> CampaignResult {
    let max_d_a = cfg.dims.iter().map(|d| d.0).max().unwrap_or(2);
    let hi = 4.0 * (max_d_a as f64).ln();
    let relations = cfg
        .relations
        .iter()
        .enumerate()
        .map(|(k, &relation)| {
            let mut histogram = Histogram::new(hi);
            let mut violations = 0;
            let mut best = 0usize;
            for (i, rec) in records.iter().enumerate() {
                let s = rec.slacks[k];
                histogram.add(s);
                if !(s >= -cfg.tol) {
                    violations += 1;
                }
                let current = records[best].slacks[k];
                if s < current || (current.is_nan() && !s.is_nan()) {
                    best = i;
                }
            }
            RelationSummary {
                relation,
                min_slack: records[best].slacks[k],
                argmin: records[best].descriptor.clone(),
                violations,
                histogram,
            }
        })
        .collect();
    CampaignResult {
        config: cfg.clone(),
        total_trials: records.len(),
        relations,
        records,
    }
}
