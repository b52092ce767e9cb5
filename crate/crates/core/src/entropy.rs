//! Entropy functionals, all in nats.

use serde::{Deserialize, Serialize};

use crate::channels::dephase;
use crate::eigen::{herm_eig, herm_eigenvalues};
use crate::states::{BipartiteState, ObservableBasis};
use crate::{CMatrix, Error, Result};

/// Eigenvalues in `[-CLIP_TOL, 0)` are treated as zero.
pub const CLIP_TOL: f64 = 1e-10;

const NORMALIZATION_TOL: f64 = 1e-8;

/// Eigenvalues of σ at or below this are outside its support.
pub const SUPPORT_TOL: f64 = 1e-12;

/// Weight of ρ outside supp σ above which D(ρ‖σ) is infinite.
pub const LEAKAGE_TOL: f64 = 1e-9;

/// `−Σ p_i ln p_i` with `0 ln 0 = 0`.
///
/// Entries in `[-1e-10, 0)` are clipped to zero and the vector is
/// renormalized; the sum must be within `1e-8` of one.
pub fn shannon(p: &[f64]) -> Result<f64> {
    let clipped = clip_distribution(p)?;
    Ok(clipped
        .iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| -x * x.ln())
        .sum())
}

fn clip_distribution(p: &[f64]) -> Result<Vec<f64>> {
    if p.is_empty() {
        return Err(Error::NotDistribution("empty".into()));
    }
    if let Some(x) = p.iter().find(|x| !(**x >= -CLIP_TOL) || !x.is_finite()) {
        return Err(Error::NotDistribution(format!("entry {x:e}")));
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::NotDistribution(format!("sums to {sum}")));
    }
    let clipped: Vec<f64> = p.iter().map(|&x| x.max(0.0)).collect();
    let total: f64 = clipped.iter().sum();
    Ok(clipped.into_iter().map(|x| x / total).collect())
}

/// Von Neumann entropy `S(ρ) = −Tr ρ ln ρ` of a density matrix.
pub fn vn_entropy(rho: &CMatrix) -> Result<f64> {
    let spectrum = herm_eigenvalues(rho)?;
    if let Some(&min) = spectrum.first() {
        if min < -CLIP_TOL {
            return Err(Error::InvalidState(format!("negative eigenvalue {min:e}")));
        }
    }
    shannon(&spectrum)
}

/// H(A|B) = S(ρ_AB) − S(ρ_B).
pub fn cond_entropy(state: &BipartiteState) -> Result<f64> {
    Ok(vn_entropy(state.rho())? - vn_entropy(&state.reduced_b())?)
}

/// Quantum relative entropy `D(ρ‖σ) = Tr ρ (ln ρ − ln σ)`.
///
/// `ln σ` is taken on the support of σ (eigenvalues above `1e-12`). If ρ
/// places more than `1e-9` of its weight outside that support the result
/// is `f64::INFINITY`.
pub fn relative_entropy(rho: &CMatrix, sigma: &CMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            got: sigma.dim(),
        });
    }
    let neg_entropy = -vn_entropy(rho)?;
    let eig = herm_eig(sigma)?;
    let n = sigma.dim();
    let mut leakage = 0.0;
    let mut cross = 0.0;
    for k in 0..n {
        let v = eig.vectors.column(k);
        // ⟨v_k|ρ|v_k⟩
        let weight: f64 = (0..n)
            .map(|i| {
                let row: num_complex::Complex64 = (0..n).map(|j| rho[(i, j)] * v[j]).sum();
                (v[i].conj() * row).re
            })
            .sum();
        if eig.values[k] > SUPPORT_TOL {
            cross += weight * eig.values[k].ln();
        } else {
            leakage += weight;
        }
    }
    if leakage > LEAKAGE_TOL {
        return Ok(f64::INFINITY);
    }
    Ok(neg_entropy - cross)
}

/// Uncertainty of X given quantum memory B: H(X|B) = S(Φ_X(ρ)) − S(ρ_B).
pub fn uncertainty(x: &ObservableBasis, state: &BipartiteState) -> Result<f64> {
    let dephased = dephase(x, state)?;
    Ok(vn_entropy(dephased.rho())? - vn_entropy(&state.reduced_b())?)
}

/// Irreality of X: ℑ(X|ρ) = S(Φ_X(ρ)) − S(ρ).
pub fn irreality(x: &ObservableBasis, state: &BipartiteState) -> Result<f64> {
    let dephased = dephase(x, state)?;
    Ok(vn_entropy(dephased.rho())? - vn_entropy(state.rho())?)
}

/// Entropic quantities of one (state, observable) pair, in nats.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntropyProfile {
    #[serde(rename = "hAB")]
    pub h_ab: f64,
    #[serde(rename = "hB")]
    pub h_b: f64,
    #[serde(rename = "hAgB")]
    pub h_a_given_b: f64,
    #[serde(rename = "hXgB")]
    pub h_x_given_b: f64,
    #[serde(rename = "irrealityX")]
    pub irreality_x: f64,
}

impl EntropyProfile {
    /// `|ℑ(X) − (H(X|B) − H(A|B))|`.
    pub fn linear_constraint_residual(&self) -> f64 {
        (self.irreality_x - (self.h_x_given_b - self.h_a_given_b)).abs()
    }
}

pub fn profile(x: &ObservableBasis, state: &BipartiteState) -> Result<EntropyProfile> {
    let h_ab = vn_entropy(state.rho())?;
    let h_b = vn_entropy(&state.reduced_b())?;
    let h_xb = vn_entropy(dephase(x, state)?.rho())?;
    Ok(EntropyProfile {
        h_ab,
        h_b,
        h_a_given_b: h_ab - h_b,
        h_x_given_b: h_xb - h_b,
        irreality_x: h_xb - h_ab,
    })
}
