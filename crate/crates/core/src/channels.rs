//! Dephasing Φ_X and monitoring M_Y^ε acting on subsystem A.
//!
//! Both maps are applied as explicit conjugations by the rank-one
//! projectors `P_i ⊗ 1_B`, and outputs are replaced by their Hermitian
//! part so long compositions stay Hermitian to machine precision.

use serde::Serialize;

use crate::states::{BipartiteState, ObservableBasis};
use crate::{CMatrix, Error, Result};

/// Probabilities at or below this carry no conditional state.
pub const NULL_BRANCH_TOL: f64 = 1e-12;

fn check_basis(x: &ObservableBasis, state: &BipartiteState) -> Result<()> {
    if x.d() != state.d_a() {
        return Err(Error::DimensionMismatch {
            expected: state.d_a(),
            got: x.d(),
        });
    }
    Ok(())
}

/// `P_i ⊗ 1_B` for every basis vector.
fn lifted_projectors(x: &ObservableBasis, d_b: usize) -> Vec<CMatrix> {
    let id_b = CMatrix::identity(d_b);
    (0..x.d()).map(|i| x.projector(i).kron(&id_b)).collect()
}

/// Φ_X(ρ) = Σ_i (P_i ⊗ 1) ρ (P_i ⊗ 1).
pub fn dephase(x: &ObservableBasis, state: &BipartiteState) -> Result<BipartiteState> {
    check_basis(x, state)?;
    let n = state.rho().dim();
    let out = lifted_projectors(x, state.d_b())
        .iter()
        .fold(CMatrix::zeros(n), |acc, k| &acc + &(&(k * state.rho()) * k));
    Ok(BipartiteState::from_parts(
        state.d_a(),
        state.d_b(),
        out.hermitian_part(),
    ))
}

/// Block form `Φ_X(ρ) = Σ_i p_i |x_i⟩⟨x_i| ⊗ σ_B^{(i)}` of a dephased state.
#[derive(Clone, Debug, Serialize)]
pub struct DephasedDecomposition {
    pub probs: Vec<f64>,
    /// `None` where `p_i ≤ 1e-12`.
    pub cond_states: Vec<Option<CMatrix>>,
}

impl DephasedDecomposition {
    /// Rebuilds `Σ_i p_i |x_i⟩⟨x_i| ⊗ σ_B^{(i)}`.
    pub fn reconstruct(&self, x: &ObservableBasis) -> Result<CMatrix> {
        let d_b = self
            .cond_states
            .iter()
            .flatten()
            .map(|s| s.dim())
            .next()
            .ok_or_else(|| Error::InvalidState("no populated branch".into()))?;
        let mut out = CMatrix::zeros(x.d() * d_b);
        for (i, (p, sigma)) in self.probs.iter().zip(&self.cond_states).enumerate() {
            if let Some(sigma) = sigma {
                out = &out + &x.projector(i).kron(sigma).scale(*p);
            }
        }
        Ok(out)
    }
}

pub fn dephased_decomposition(
    x: &ObservableBasis,
    state: &BipartiteState,
) -> Result<DephasedDecomposition> {
    check_basis(x, state)?;
    let (d_a, d_b) = (state.d_a(), state.d_b());
    let mut probs = Vec::with_capacity(d_a);
    let mut cond_states = Vec::with_capacity(d_a);
    for k in lifted_projectors(x, d_b) {
        let branch = &(&k * state.rho()) * &k;
        let p = branch.trace().re;
        probs.push(p);
        if p > NULL_BRANCH_TOL {
            let sigma = branch
                .partial_trace_a(d_a, d_b)?
                .scale(1.0 / p)
                .hermitian_part();
            cond_states.push(Some(sigma));
        } else {
            cond_states.push(None);
        }
    }
    Ok(DephasedDecomposition { probs, cond_states })
}

fn check_eps(eps: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::OutOfRange {
            name: "eps",
            value: eps,
        });
    }
    Ok(())
}

/// M_Y^ε(ρ) = (1 − ε) ρ + ε Φ_Y(ρ).
pub fn monitor(y: &ObservableBasis, eps: f64, state: &BipartiteState) -> Result<BipartiteState> {
    check_eps(eps)?;
    let dephased = dephase(y, state)?;
    let mixed = &state.rho().scale(1.0 - eps) + &dephased.rho().scale(eps);
    Ok(BipartiteState::from_parts(
        state.d_a(),
        state.d_b(),
        mixed.hermitian_part(),
    ))
}

/// `n` successive applications of M_Y^ε.
pub fn monitor_n(
    y: &ObservableBasis,
    eps: f64,
    n: usize,
    state: &BipartiteState,
) -> Result<BipartiteState> {
    check_eps(eps)?;
    check_basis(y, state)?;
    let mut current = state.clone();
    for _ in 0..n {
        current = monitor(y, eps, &current)?;
    }
    Ok(current)
}

/// Tolerance for [`dephasings_commute`].
pub const COMMUTE_TOL: f64 = 1e-10;

fn pinch(x: &ObservableBasis, m: &CMatrix) -> CMatrix {
    (0..x.d()).fold(CMatrix::zeros(x.d()), |acc, i| {
        let p = x.projector(i);
        &acc + &(&(&p * m) * &p)
    })
}

/// Whether Φ_X ∘ Φ_Y = Φ_Y ∘ Φ_X, checked on every matrix unit of A.
/// Holds for `Y = X` (up to relabeling) and for mutually unbiased pairs.
/// In that case monitoring by Y cannot raise the irreality of X.
pub fn dephasings_commute(x: &ObservableBasis, y: &ObservableBasis) -> Result<bool> {
    let d = x.d();
    if y.d() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: y.d(),
        });
    }
    for k in 0..d {
        for l in 0..d {
            let mut e = CMatrix::zeros(d);
            e[(k, l)] = crate::C64::new(1.0, 0.0);
            if pinch(x, &pinch(y, &e)).max_abs_diff(&pinch(y, &pinch(x, &e))) > COMMUTE_TOL {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
