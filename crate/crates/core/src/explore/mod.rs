//! Verification campaigns, monitoring sweeps and slack minimization.

mod campaign;
mod minimize;
mod nelder_mead;
mod sweep;

pub use campaign::{
    run_campaign, run_campaign_with_workers, trial_inputs, CampaignResult, Histogram,
    RelationSummary, TrialDescriptor, TrialInputs, TrialRecord, HISTOGRAM_BINS,
};
pub use minimize::{minimize_slack, Argmin, MinimizeOptions, Minimum};
pub use nelder_mead::{nelder_mead, NelderMeadOptions, NelderMeadResult};
pub use sweep::{monitoring_sweep, parse_grid, SweepTrace};
