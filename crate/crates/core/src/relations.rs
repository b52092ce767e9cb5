//! The Maassen–Uffink bound and the uncertainty/irreality relations,
//! each evaluated with an explicit signed slack.
//!
//! | relation        | statement |
//! |-----------------|-----------|
//! | `memory_ur`     | H(X\|B) + H(Y\|B) ≥ q + H(A\|B) |
//! | `constraint1`   | ℑ(X) = H(X\|B) − H(A\|B) |
//! | `constraint2`   | H(X\|B) − ℑ(X) = H(Y\|B) − ℑ(Y) = H(A\|B) |
//! | `mixed_ur`      | ℑ(X) + H(Y\|B) ≥ q and H(X\|B) + ℑ(Y) ≥ q |
//! | `irreality_ur`  | ℑ(X) + ℑ(Y) ≥ q − H(A\|B) |
//! | `combined_ur`   | H(X\|B) + ℑ(X) + H(Y\|B) + ℑ(Y) ≥ 2q |
//! | `monitor_bound` | ℑ(X \| M_Y^ε(ρ)) + H(Y\|B) ≥ q |
//!
//! with `q = −2 ln max_{ij} |⟨x_i|y_j⟩|`.
//!
//! The two identities are checked across two independent evaluations of
//! S(ρ_XB): the full-matrix spectrum used by ℑ and H(X|B), and the block
//! form `H(p) + Σ p_i S(σ_B^{(i)})` of the dephased state.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::channels::{dephase, dephased_decomposition, monitor};
use crate::entropy::{irreality, shannon, vn_entropy};
use crate::states::{BipartiteState, ObservableBasis};
use crate::{Error, Result};

/// Default verdict tolerance in nats.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Registered relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    MemoryUr,
    Constraint1,
    Constraint2,
    MixedUr,
    IrrealityUr,
    CombinedUr,
    MonitorBound,
}

impl Relation {
    pub const ALL: [Relation; 7] = [
        Relation::MemoryUr,
        Relation::Constraint1,
        Relation::Constraint2,
        Relation::MixedUr,
        Relation::IrrealityUr,
        Relation::CombinedUr,
        Relation::MonitorBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::MemoryUr => "memory_ur",
            Relation::Constraint1 => "constraint1",
            Relation::Constraint2 => "constraint2",
            Relation::MixedUr => "mixed_ur",
            Relation::IrrealityUr => "irreality_ur",
            Relation::CombinedUr => "combined_ur",
            Relation::MonitorBound => "monitor_bound",
        }
    }

    /// Short command-line alias.
    pub fn alias(self) -> &'static str {
        match self {
            Relation::MemoryUr => "eq5",
            Relation::Constraint1 => "eq7",
            Relation::Constraint2 => "eq8",
            Relation::MixedUr => "eq9",
            Relation::IrrealityUr => "eq10",
            Relation::CombinedUr => "eq11",
            Relation::MonitorBound => "eq16",
        }
    }

    pub fn is_identity(self) -> bool {
        matches!(self, Relation::Constraint1 | Relation::Constraint2)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        Relation::ALL
            .into_iter()
            .find(|r| r.name() == key || r.alias() == key)
            .ok_or_else(|| Error::UnknownRelation(s.to_string()))
    }
}

/// `lhs ≥ rhs` with its signed slack.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub satisfied: bool,
    pub tol: f64,
}

impl InequalityReport {
    pub fn new(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let slack = lhs - rhs;
        Self {
            name: name.into(),
            lhs,
            rhs,
            slack,
            satisfied: slack >= -tol,
            tol,
        }
    }
}

/// Absolute residual of an identity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub residual: f64,
    pub holds: bool,
    pub tol: f64,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>, residual: f64, tol: f64) -> Self {
        Self {
            name: name.into(),
            residual,
            holds: residual <= tol,
            tol,
        }
    }
}

/// Any relation verdict.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Report {
    Inequality(InequalityReport),
    Identity(IdentityReport),
}

impl Report {
    pub fn name(&self) -> &str {
        match self {
            Report::Inequality(r) => &r.name,
            Report::Identity(r) => &r.name,
        }
    }

    /// Slack for inequalities, minus the residual for identities.
    pub fn slack(&self) -> f64 {
        match self {
            Report::Inequality(r) => r.slack,
            Report::Identity(r) => -r.residual,
        }
    }

    pub fn passed(&self) -> bool {
        match self {
            Report::Inequality(r) => r.satisfied,
            Report::Identity(r) => r.holds,
        }
    }
}

fn check_pair(x: &ObservableBasis, y: &ObservableBasis) -> Result<()> {
    if x.d() != y.d() {
        return Err(Error::DimensionMismatch {
            expected: x.d(),
            got: y.d(),
        });
    }
    Ok(())
}

/// `c = max_{i,j} |⟨x_i|y_j⟩|`.
pub fn mu_overlap(x: &ObservableBasis, y: &ObservableBasis) -> Result<f64> {
    check_pair(x, y)?;
    let overlaps = x.vectors().dagger().matmul(y.vectors())?;
    Ok(overlaps
        .as_slice()
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max))
}

/// Maassen–Uffink bound `q = −2 ln c`.
pub fn mu_bound(x: &ObservableBasis, y: &ObservableBasis) -> Result<f64> {
    Ok(-2.0 * mu_overlap(x, y)?.ln())
}

/// S(Φ_X(ρ)) from the block form of the dephased state.
fn dephased_entropy_by_blocks(x: &ObservableBasis, state: &BipartiteState) -> Result<f64> {
    let dec = dephased_decomposition(x, state)?;
    let mut h = shannon(&dec.probs)?;
    for (p, sigma) in dec.probs.iter().zip(&dec.cond_states) {
        if let Some(sigma) = sigma {
            h += p * vn_entropy(sigma)?;
        }
    }
    Ok(h)
}

/// Entropies needed by every relation for one `(ρ, X, Y[, ε])`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Evaluation {
    pub h_ab: f64,
    pub h_b: f64,
    /// S(Φ_X(ρ)) from the full spectrum.
    pub h_xb: f64,
    pub h_yb: f64,
    /// S(Φ_X(ρ)) from the block form.
    pub h_xb_blocks: f64,
    pub h_yb_blocks: f64,
    pub q: f64,
    pub eps: Option<f64>,
    /// ℑ(X | M_Y^ε(ρ)) when `eps` is set.
    pub monitored_irreality_x: Option<f64>,
}

impl Evaluation {
    pub fn compute(
        x: &ObservableBasis,
        y: &ObservableBasis,
        state: &BipartiteState,
        eps: Option<f64>,
    ) -> Result<Self> {
        check_pair(x, y)?;
        let h_ab = vn_entropy(state.rho())?;
        let h_b = vn_entropy(&state.reduced_b())?;
        let h_xb = vn_entropy(dephase(x, state)?.rho())?;
        let h_yb = vn_entropy(dephase(y, state)?.rho())?;
        let h_xb_blocks = dephased_entropy_by_blocks(x, state)?;
        let h_yb_blocks = dephased_entropy_by_blocks(y, state)?;
        let q = mu_bound(x, y)?;
        let monitored_irreality_x = match eps {
            Some(e) => Some(irreality(x, &monitor(y, e, state)?)?),
            None => None,
        };
        Ok(Self {
            h_ab,
            h_b,
            h_xb,
            h_yb,
            h_xb_blocks,
            h_yb_blocks,
            q,
            eps,
            monitored_irreality_x,
        })
    }

    pub fn cond_entropy(&self) -> f64 {
        self.h_ab - self.h_b
    }

    pub fn uncertainty_x(&self) -> f64 {
        self.h_xb - self.h_b
    }

    pub fn uncertainty_y(&self) -> f64 {
        self.h_yb - self.h_b
    }

    pub fn irreality_x(&self) -> f64 {
        self.h_xb - self.h_ab
    }

    pub fn irreality_y(&self) -> f64 {
        self.h_yb - self.h_ab
    }

    pub fn memory_ur(&self, tol: f64) -> InequalityReport {
        InequalityReport::new(
            Relation::MemoryUr.name(),
            self.uncertainty_x() + self.uncertainty_y(),
            self.q + self.cond_entropy(),
            tol,
        )
    }

    pub fn constraint1(&self, tol: f64) -> IdentityReport {
        let uncertainty_blocks = self.h_xb_blocks - self.h_b;
        let residual = (self.irreality_x() - (uncertainty_blocks - self.cond_entropy())).abs();
        IdentityReport::new(Relation::Constraint1.name(), residual, tol)
    }

    /// Largest of the three pairwise deviations among
    /// H(X|B) − ℑ(X), H(Y|B) − ℑ(Y) and H(A|B).
    pub fn constraint2(&self, tol: f64) -> IdentityReport {
        let side_x = (self.h_xb_blocks - self.h_b) - self.irreality_x();
        let side_y = (self.h_yb_blocks - self.h_b) - self.irreality_y();
        let hab = self.cond_entropy();
        let residual = (side_x - side_y)
            .abs()
            .max((side_x - hab).abs())
            .max((side_y - hab).abs());
        IdentityReport::new(Relation::Constraint2.name(), residual, tol)
    }

    /// Both orderings: `ℑ(X) + H(Y|B) ≥ q` then `H(X|B) + ℑ(Y) ≥ q`.
    pub fn mixed_ur(&self, tol: f64) -> [InequalityReport; 2] {
        [
            InequalityReport::new(
                "mixed_ur[irreality_x+uncertainty_y]",
                self.irreality_x() + self.uncertainty_y(),
                self.q,
                tol,
            ),
            InequalityReport::new(
                "mixed_ur[uncertainty_x+irreality_y]",
                self.uncertainty_x() + self.irreality_y(),
                self.q,
                tol,
            ),
        ]
    }

    pub fn irreality_ur(&self, tol: f64) -> InequalityReport {
        InequalityReport::new(
            Relation::IrrealityUr.name(),
            self.irreality_x() + self.irreality_y(),
            self.q - self.cond_entropy(),
            tol,
        )
    }

    pub fn combined_ur(&self, tol: f64) -> InequalityReport {
        InequalityReport::new(
            Relation::CombinedUr.name(),
            self.uncertainty_x() + self.irreality_x() + self.uncertainty_y() + self.irreality_y(),
            2.0 * self.q,
            tol,
        )
    }

    /// `None` unless the evaluation was computed with an ε.
    pub fn monitor_bound(&self, tol: f64) -> Option<InequalityReport> {
        self.monitored_irreality_x.map(|irr| {
            InequalityReport::new(
                Relation::MonitorBound.name(),
                irr + self.uncertainty_y(),
                self.q,
                tol,
            )
        })
    }

    /// All reports for one relation.
    pub fn reports(&self, relation: Relation, tol: f64) -> Vec<Report> {
        match relation {
            Relation::MemoryUr => vec![Report::Inequality(self.memory_ur(tol))],
            Relation::Constraint1 => vec![Report::Identity(self.constraint1(tol))],
            Relation::Constraint2 => vec![Report::Identity(self.constraint2(tol))],
            Relation::MixedUr => self
                .mixed_ur(tol)
                .into_iter()
                .map(Report::Inequality)
                .collect(),
            Relation::IrrealityUr => vec![Report::Inequality(self.irreality_ur(tol))],
            Relation::CombinedUr => vec![Report::Inequality(self.combined_ur(tol))],
            Relation::MonitorBound => self
                .monitor_bound(tol)
                .map(Report::Inequality)
                .into_iter()
                .collect(),
        }
    }

    /// Single figure of merit: the smallest slack among the relation's
    /// reports (identities contribute `−residual`). NaN if the relation
    /// needs an ε that was not supplied.
    pub fn slack(&self, relation: Relation) -> f64 {
        self.reports(relation, DEFAULT_TOL)
            .iter()
            .map(Report::slack)
            .reduce(f64::min)
            .unwrap_or(f64::NAN)
    }
}

pub fn check_memory_ur(
    x: &ObservableBasis,
    y: &ObservableBasis,
    state: &BipartiteState,
    tol: f64,
) -> Result<InequalityReport> {
    Ok(Evaluation::compute(x, y, state, None)?.memory_ur(tol))
}

pub fn check_constraint1(
    x: &ObservableBasis,
    state: &BipartiteState,
    tol: f64,
) -> Result<IdentityReport> {
    Ok(Evaluation::compute(x, x, state, None)?.constraint1(tol))
}

pub fn check_constraint2(
    x: &ObservableBasis,
    y: &ObservableBasis,
    state: &BipartiteState,
    tol: f64,
) -> Result<IdentityReport> {
    Ok(Evaluation::compute(x, y, state, None)?.constraint2(tol))
}

pub fn check_mixed_ur(
    x: &ObservableBasis,
    y: &ObservableBasis,
    state: &BipartiteState,
    tol: f64,
) -> Result<[InequalityReport; 2]> {
    Ok(Evaluation::compute(x, y, state, None)?.mixed_ur(tol))
}

pub fn check_irreality_ur(
    x: &ObservableBasis,
    y: &ObservableBasis,
    state: &BipartiteState,
    tol: f64,
) -> Result<InequalityReport> {
    Ok(Evaluation::compute(x, y, state, None)?.irreality_ur(tol))
}

pub fn check_combined_ur(
    x: &ObservableBasis,
    y: &ObservableBasis,
    state: &BipartiteState,
    tol: f64,
) -> Result<InequalityReport> {
    Ok(Evaluation::compute(x, y, state, None)?.combined_ur(tol))
}

/// ℑ(X | M_Y^ε(ρ)) + H(Y|B) ≥ q, with H(Y|B) taken on the unmonitored ρ.
pub fn check_monitor_bound(
    x: &ObservableBasis,
    y: &ObservableBasis,
    eps: f64,
    state: &BipartiteState,
    tol: f64,
) -> Result<InequalityReport> {
    Ok(Evaluation::compute(x, y, state, Some(eps))?
        .monitor_bound(tol)
        .expect("eps supplied"))
}

/// ΔRe(X) = ℑ(X|before) − ℑ(X|after) = −ΔIm(X).
pub fn reality_change(
    x: &ObservableBasis,
    before: &BipartiteState,
    after: &BipartiteState,
) -> Result<f64> {
    if before.d_a() != after.d_a() || before.d_b() != after.d_b() {
        return Err(Error::DimensionMismatch {
            expected: before.rho().dim(),
            got: after.rho().dim(),
        });
    }
    Ok(irreality(x, before)? - irreality(x, after)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::uncertainty;
    use crate::states::*;
    use std::f64::consts::LN_2;

    fn mub(d: usize) -> (ObservableBasis, ObservableBasis) {
        (computational_basis(d).unwrap(), fourier_basis(d).unwrap())
    }

    #[test]
    fn relation_names_parse() {
        for r in Relation::ALL {
            assert_eq!(r.name().parse::<Relation>().unwrap(), r);
            assert_eq!(r.alias().parse::<Relation>().unwrap(), r);
        }
        assert_eq!("EQ11".parse::<Relation>().unwrap(), Relation::CombinedUr);
        assert!(matches!(
            "eq12".parse::<Relation>(),
            Err(Error::UnknownRelation(_))
        ));
    }

    #[test]
    fn report_json_shape() {
        let r = InequalityReport::new("combined_ur", 1.5, 1.0, 1e-9);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["slack"], 0.5);
        assert_eq!(v["satisfied"], true);
        assert_eq!(v.as_object().unwrap().len(), 6);
        let bad = InequalityReport::new("x", 1.0, 1.0 + 2e-9, 1e-9);
        assert!(!bad.satisfied);
        assert!(IdentityReport::new("c", 1e-9, 1e-9).holds);
        assert!(!IdentityReport::new("c", 1.1e-9, 1e-9).holds);
    }

    #[test]
    fn overlap_and_bound() {
        let (x, y) = mub(3);
        assert!((mu_overlap(&x, &x).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(mu_bound(&x, &x).unwrap().abs(), 0.0);
        assert!((mu_overlap(&x, &y).unwrap() - 3f64.powf(-0.5)).abs() < 1e-12);
        let (x2, y2) = mub(2);
        assert!((mu_bound(&x2, &y2).unwrap() - LN_2).abs() < 1e-12);
        let (x5, y5) = mub(5);
        assert!((mu_bound(&x5, &y5).unwrap() - 5f64.ln()).abs() < 1e-10);
        assert!(mu_overlap(&x, &x2).is_err());
    }

    #[test]
    fn overlap_matches_exhaustive_scan() {
        let x = random_basis(2, 100).unwrap();
        let y = random_basis(2, 101).unwrap();
        let mut best = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                let (a, b) = (x.ket(i), y.ket(j));
                let ip: crate::C64 = a.iter().zip(&b).map(|(u, v)| u.conj() * v).sum();
                best = best.max(ip.norm());
            }
        }
        assert!((mu_overlap(&x, &y).unwrap() - best).abs() < 1e-15);
        let q = mu_bound(&x, &y).unwrap();
        assert!((-1e-12..=LN_2 + 1e-9).contains(&q));
    }

    #[test]
    fn bound_is_symmetric() {
        let x = random_basis(4, 1).unwrap();
        let y = random_basis(4, 2).unwrap();
        assert!((mu_bound(&x, &y).unwrap() - mu_bound(&y, &x).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn saturation_on_max_entangled() {
        let (x, y) = mub(2);
        let s = max_entangled(2).unwrap();
        let mem = check_memory_ur(&x, &y, &s, DEFAULT_TOL).unwrap();
        assert!(mem.lhs.abs() < 1e-9 && mem.rhs.abs() < 1e-9 && mem.slack.abs() < 1e-9);
        for r in check_mixed_ur(&x, &y, &s, DEFAULT_TOL).unwrap() {
            assert!(r.slack.abs() < 1e-9);
        }
        let irr = check_irreality_ur(&x, &y, &s, DEFAULT_TOL).unwrap();
        assert!((irr.lhs - 2.0 * LN_2).abs() < 1e-9 && irr.slack.abs() < 1e-9);
        for d in 2..=4 {
            let (x, y) = mub(d);
            let c = check_combined_ur(&x, &y, &max_entangled(d).unwrap(), DEFAULT_TOL).unwrap();
            assert!(c.slack.abs() < 1e-9, "d = {d}: {c:?}");
        }
        let c2 = check_constraint2(&x, &y, &s, DEFAULT_TOL).unwrap();
        assert!(c2.holds);
        let side = uncertainty(&x, &s).unwrap() - irreality(&x, &s).unwrap();
        assert!((side + LN_2).abs() < 1e-9);
    }

    #[test]
    fn saturation_on_max_mixed() {
        for d in 2..=4 {
            let (x, y) = mub(d);
            let s = max_mixed(d, d).unwrap();
            let m = check_memory_ur(&x, &y, &s, DEFAULT_TOL).unwrap();
            let ln_d = (d as f64).ln();
            assert!((m.lhs - 2.0 * ln_d).abs() < 1e-9 && m.slack.abs() < 1e-9);
            assert!(
                check_irreality_ur(&x, &y, &s, DEFAULT_TOL)
                    .unwrap()
                    .slack
                    .abs()
                    < 1e-9
            );
            assert!(
                check_combined_ur(&x, &y, &s, DEFAULT_TOL)
                    .unwrap()
                    .slack
                    .abs()
                    < 1e-9
            );
            for r in check_mixed_ur(&x, &y, &s, DEFAULT_TOL).unwrap() {
                assert!(r.slack.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn identities_on_named_states() {
        let x = computational_basis(2).unwrap();
        for s in [
            max_entangled(2).unwrap(),
            max_mixed(2, 2).unwrap(),
            werner(0.5).unwrap(),
        ] {
            let r = check_constraint1(&x, &s, DEFAULT_TOL).unwrap();
            assert!(r.holds && r.residual <= 1e-9);
            assert!(check_constraint2(&x, &x, &s, DEFAULT_TOL).unwrap().residual < 1e-12);
        }
    }

    #[test]
    fn werner_irreality_relation() {
        let (x, y) = mub(2);
        let s = werner(0.5).unwrap();
        let r = check_irreality_ur(&x, &y, &s, DEFAULT_TOL).unwrap();
        let expected_lhs = irreality(&x, &s).unwrap() + irreality(&y, &s).unwrap();
        assert!((r.lhs - expected_lhs).abs() < 1e-12);
        assert!(r.satisfied);
    }

    #[test]
    fn monitor_bound_cases() {
        let (x, y) = mub(2);
        let s = random_mixed(2, 2, 2, 44).unwrap();
        let at_zero = check_monitor_bound(&x, &y, 0.0, &s, DEFAULT_TOL).unwrap();
        let mixed = check_mixed_ur(&x, &y, &s, DEFAULT_TOL).unwrap();
        assert!((at_zero.slack - mixed[0].slack).abs() < 1e-12);

        let bell = max_entangled(2).unwrap();
        for eps in [0.0, 0.25, 0.5, 1.0] {
            let r = check_monitor_bound(&x, &y, eps, &bell, DEFAULT_TOL).unwrap();
            let monitored_irr = r.lhs - uncertainty(&y, &bell).unwrap();
            assert!(monitored_irr >= LN_2 - 1e-9);
            assert!(r.slack.abs() < 1e-9);
        }
    }

    #[test]
    fn reality_change_cases() {
        let x = computational_basis(2).unwrap();
        let y = fourier_basis(2).unwrap();
        let bell = max_entangled(2).unwrap();
        assert_eq!(reality_change(&x, &bell, &bell).unwrap(), 0.0);
        let realized = monitor(&x, 1.0, &bell).unwrap();
        assert!((reality_change(&x, &bell, &realized).unwrap() - LN_2).abs() < 1e-9);
        for eps in [0.1, 0.5, 0.9] {
            let after = monitor(&y, eps, &bell).unwrap();
            assert!(reality_change(&x, &bell, &after).unwrap().abs() < 1e-9);
        }
    }

    #[test]
    fn reality_change_upper_bound() {
        for seed in 0..20 {
            let s = random_mixed(3, 2, 3, seed).unwrap();
            let x = random_basis(3, 1000 + seed).unwrap();
            let y = random_basis(3, 2000 + seed).unwrap();
            let eps = (seed as f64 + 0.5) / 20.0;
            let after = monitor(&y, eps, &s).unwrap();
            let delta = reality_change(&x, &s, &after).unwrap();
            let bound = irreality(&x, &s).unwrap() + uncertainty(&y, &s).unwrap()
                - mu_bound(&x, &y).unwrap();
            assert!(delta >= -1e-9);
            assert!(delta <= bound + 1e-9);
        }
    }

    #[test]
    fn evaluation_slack_matches_reports() {
        let s = haar_random_pure(2, 2, 5).unwrap();
        let (x, y) = (random_basis(2, 6).unwrap(), random_basis(2, 7).unwrap());
        let e = Evaluation::compute(&x, &y, &s, Some(0.4)).unwrap();
        assert_eq!(e.slack(Relation::CombinedUr), e.combined_ur(1e-9).slack);
        let m = e.mixed_ur(1e-9);
        assert_eq!(e.slack(Relation::MixedUr), m[0].slack.min(m[1].slack));
        assert_eq!(
            e.slack(Relation::Constraint1),
            -e.constraint1(1e-9).residual
        );
        let no_eps = Evaluation::compute(&x, &y, &s, None).unwrap();
        assert!(no_eps.slack(Relation::MonitorBound).is_nan());
    }
}
