//! Bipartite density matrices and observable eigenbases.

use serde::{Deserialize, Serialize};

use crate::eigen::herm_eigenvalues;
use crate::matrix::MatrixJson;
use crate::rng::StreamRng;
use crate::{CMatrix, Error, Result, C64};

/// Tolerance for the Hermitian, unit-trace and PSD checks on states.
pub const STATE_TOL: f64 = 1e-10;

/// Tolerance for `‖V†V − I‖_max` on observable bases.
pub const UNITARITY_TOL: f64 = 1e-10;

/// Density matrix on H_A ⊗ H_B, A on the slow index.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StateJson", into = "StateJson")]
pub struct BipartiteState {
    d_a: usize,
    d_b: usize,
    rho: CMatrix,
}

impl BipartiteState {
    /// Validates `rho` as a density matrix on `d_a · d_b` dimensions.
    pub fn new(d_a: usize, d_b: usize, rho: CMatrix) -> Result<Self> {
        check_dims(d_a, d_b)?;
        validate_density(&rho, d_a * d_b)?;
        Ok(Self::from_parts(d_a, d_b, rho.hermitian_part()))
    }

    /// Skips validation. Callers guarantee the invariants up to round-off.
    pub(crate) fn from_parts(d_a: usize, d_b: usize, rho: CMatrix) -> Self {
        debug_assert_eq!(rho.dim(), d_a * d_b);
        Self { d_a, d_b, rho }
    }

    /// `|ψ⟩⟨ψ|` for amplitudes indexed `a·d_B + b`; `ψ` is normalized here.
    pub fn from_pure(d_a: usize, d_b: usize, psi: &[C64]) -> Result<Self> {
        check_dims(d_a, d_b)?;
        if psi.len() != d_a * d_b {
            return Err(Error::DimensionMismatch {
                expected: d_a * d_b,
                got: psi.len(),
            });
        }
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::NotNormalized(norm * norm));
        }
        let unit: Vec<C64> = psi.iter().map(|z| z / norm).collect();
        Ok(Self::from_parts(d_a, d_b, CMatrix::outer(&unit, &unit)?))
    }

    /// `ρ_A ⊗ ρ_B`.
    pub fn product(rho_a: &CMatrix, rho_b: &CMatrix) -> Result<Self> {
        Self::new(rho_a.dim(), rho_b.dim(), rho_a.kron(rho_b))
    }

    pub fn d_a(&self) -> usize {
        self.d_a
    }

    pub fn d_b(&self) -> usize {
        self.d_b
    }

    pub fn rho(&self) -> &CMatrix {
        &self.rho
    }

    pub fn into_rho(self) -> CMatrix {
        self.rho
    }

    /// ρ_B = Tr_A ρ_AB.
    pub fn reduced_b(&self) -> CMatrix {
        self.rho
            .partial_trace_a(self.d_a, self.d_b)
            .expect("dims checked at construction")
    }

    /// ρ_A = Tr_B ρ_AB.
    pub fn reduced_a(&self) -> CMatrix {
        self.rho
            .partial_trace_b(self.d_a, self.d_b)
            .expect("dims checked at construction")
    }

    pub fn purity(&self) -> f64 {
        (&self.rho * &self.rho).trace().re
    }

    /// Re-checks the three density-matrix invariants.
    pub fn validate(&self) -> Result<()> {
        validate_density(&self.rho, self.d_a * self.d_b)
    }
}

fn check_dims(d_a: usize, d_b: usize) -> Result<()> {
    if d_a < 2 {
        return Err(Error::BadDimension(d_a));
    }
    if d_b < 1 {
        return Err(Error::BadDimension(d_b));
    }
    Ok(())
}

/// Hermitian, unit trace and PSD, each to [`STATE_TOL`].
pub fn validate_density(rho: &CMatrix, dim: usize) -> Result<()> {
    if rho.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: rho.dim(),
        });
    }
    if !rho.is_finite() {
        return Err(Error::InvalidState("non-finite entry".into()));
    }
    let defect = rho.hermitian_defect();
    if defect > STATE_TOL {
        return Err(Error::NotHermitian(defect));
    }
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > STATE_TOL || tr.im.abs() > STATE_TOL {
        return Err(Error::InvalidState(format!("trace {tr} differs from 1")));
    }
    let min = herm_eigenvalues(rho)?.first().copied().unwrap_or(0.0);
    if min < -STATE_TOL {
        return Err(Error::InvalidState(format!("negative eigenvalue {min:e}")));
    }
    Ok(())
}

/// Orthonormal eigenbasis {|x_i⟩} of a non-degenerate observable on H_A,
/// stored as the columns of a unitary.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "BasisJson", into = "BasisJson")]
pub struct ObservableBasis {
    vectors: CMatrix,
}

impl ObservableBasis {
    pub fn new(vectors: CMatrix) -> Result<Self> {
        if vectors.dim() < 2 {
            return Err(Error::BadDimension(vectors.dim()));
        }
        let defect = vectors.unitarity_defect();
        if !(defect <= UNITARITY_TOL) {
            return Err(Error::NotUnitary(defect));
        }
        Ok(Self { vectors })
    }

    pub fn d(&self) -> usize {
        self.vectors.dim()
    }

    pub fn vectors(&self) -> &CMatrix {
        &self.vectors
    }

    /// `|x_i⟩`.
    pub fn ket(&self, i: usize) -> Vec<C64> {
        self.vectors.column(i)
    }

    /// `|x_i⟩⟨x_i|`.
    pub fn projector(&self, i: usize) -> CMatrix {
        let k = self.ket(i);
        CMatrix::outer(&k, &k).expect("equal lengths")
    }
}

/// `|Φ⟩ = d^{-1/2} Σ_i |ii⟩`.
pub fn max_entangled(d: usize) -> Result<BipartiteState> {
    if d < 2 {
        return Err(Error::BadDimension(d));
    }
    let amp = 1.0 / (d as f64).sqrt();
    let mut psi = vec![C64::new(0.0, 0.0); d * d];
    for i in 0..d {
        psi[i * d + i] = C64::new(amp, 0.0);
    }
    BipartiteState::from_pure(d, d, &psi)
}

/// `1 / (d_A d_B)`.
pub fn max_mixed(d_a: usize, d_b: usize) -> Result<BipartiteState> {
    check_dims(d_a, d_b)?;
    let n = d_a * d_b;
    Ok(BipartiteState::from_parts(
        d_a,
        d_b,
        CMatrix::identity(n).scale(1.0 / n as f64),
    ))
}

/// `Σ_i c_i |ii⟩` for nonnegative Schmidt coefficients with `Σ c_i² = 1`.
pub fn pure_from_schmidt(coeffs: &[f64]) -> Result<BipartiteState> {
    let d = coeffs.len();
    if d < 2 {
        return Err(Error::BadDimension(d));
    }
    if let Some(c) = coeffs.iter().find(|c| !(**c >= 0.0)) {
        return Err(Error::InvalidState(format!(
            "Schmidt coefficient {c} is negative"
        )));
    }
    let norm2: f64 = coeffs.iter().map(|c| c * c).sum();
    if (norm2 - 1.0).abs() > STATE_TOL {
        return Err(Error::NotNormalized(norm2));
    }
    let mut psi = vec![C64::new(0.0, 0.0); d * d];
    for (i, &c) in coeffs.iter().enumerate() {
        psi[i * d + i] = C64::new(c, 0.0);
    }
    BipartiteState::from_pure(d, d, &psi)
}

/// Two-qubit Werner state `w |Φ⁺⟩⟨Φ⁺| + (1 − w) 1/4`.
pub fn werner(w: f64) -> Result<BipartiteState> {
    if !(0.0..=1.0).contains(&w) {
        return Err(Error::OutOfRange {
            name: "w",
            value: w,
        });
    }
    let bell = max_entangled(2)?.into_rho();
    let noise = CMatrix::identity(4).scale((1.0 - w) / 4.0);
    Ok(BipartiteState::from_parts(2, 2, &bell.scale(w) + &noise))
}

/// Haar-random pure state from normalized complex Gaussian amplitudes.
pub fn haar_random_pure(d_a: usize, d_b: usize, seed: u64) -> Result<BipartiteState> {
    haar_random_pure_with(d_a, d_b, &mut StreamRng::new(seed, 0))
}

pub fn haar_random_pure_with(
    d_a: usize,
    d_b: usize,
    rng: &mut StreamRng,
) -> Result<BipartiteState> {
    check_dims(d_a, d_b)?;
    let psi: Vec<C64> = (0..d_a * d_b).map(|_| rng.complex_normal()).collect();
    BipartiteState::from_pure(d_a, d_b, &psi)
}

/// Induced-measure mixed state: Tr_E of a Haar-random pure state on
/// (H_A ⊗ H_B) ⊗ H_E with `dim H_E = rank_env`.
pub fn random_mixed(d_a: usize, d_b: usize, rank_env: usize, seed: u64) -> Result<BipartiteState> {
    random_mixed_with(d_a, d_b, rank_env, &mut StreamRng::new(seed, 0))
}

pub fn random_mixed_with(
    d_a: usize,
    d_b: usize,
    rank_env: usize,
    rng: &mut StreamRng,
) -> Result<BipartiteState> {
    check_dims(d_a, d_b)?;
    if rank_env < 1 {
        return Err(Error::BadDimension(rank_env));
    }
    let n = d_a * d_b;
    // Amplitudes ψ[s·rank_env + e], system slow, environment fast.
    let g: Vec<C64> = (0..n * rank_env).map(|_| rng.complex_normal()).collect();
    let norm2: f64 = g.iter().map(|z| z.norm_sqr()).sum();
    let rho = CMatrix::from_fn(n, |i, j| {
        (0..rank_env)
            .map(|e| g[i * rank_env + e] * g[j * rank_env + e].conj())
            .sum::<C64>()
            / norm2
    });
    Ok(BipartiteState::from_parts(d_a, d_b, rho.hermitian_part()))
}

/// Eigenbasis of the computational-basis observable.
pub fn computational_basis(d: usize) -> Result<ObservableBasis> {
    if d < 2 {
        return Err(Error::BadDimension(d));
    }
    ObservableBasis::new(CMatrix::identity(d))
}

/// `⟨j|y_k⟩ = d^{-1/2} exp(2πi jk/d)`, mutually unbiased with the
/// computational basis.
pub fn fourier_basis(d: usize) -> Result<ObservableBasis> {
    if d < 2 {
        return Err(Error::BadDimension(d));
    }
    let amp = 1.0 / (d as f64).sqrt();
    let v = CMatrix::from_fn(d, |j, k| {
        // Reduce jk mod d first so the phase stays accurate for larger d.
        let theta = 2.0 * std::f64::consts::PI * ((j * k) % d) as f64 / d as f64;
        C64::from_polar(amp, theta)
    });
    ObservableBasis::new(v)
}

/// Haar-random basis: Q factor of a complex Ginibre matrix with the
/// diagonal of R made real positive.
pub fn random_basis(d: usize, seed: u64) -> Result<ObservableBasis> {
    random_basis_with(d, &mut StreamRng::new(seed, 0))
}

pub fn random_basis_with(d: usize, rng: &mut StreamRng) -> Result<ObservableBasis> {
    if d < 2 {
        return Err(Error::BadDimension(d));
    }
    loop {
        let g = CMatrix::from_fn(d, |_, _| rng.complex_normal());
        if let Some(q) = orthonormalize(&g) {
            return ObservableBasis::new(q);
        }
    }
}

/// Q factor of the QR decomposition of `m`, normalized so that R has a
/// positive real diagonal. Gram–Schmidt with one re-orthogonalization pass.
/// Returns `None` when the columns are numerically dependent.
pub fn orthonormalize(m: &CMatrix) -> Option<CMatrix> {
    let n = m.dim();
    let mut cols: Vec<Vec<C64>> = (0..n).map(|j| m.column(j)).collect();
    for j in 0..n {
        let original = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for _ in 0..2 {
            for k in 0..j {
                let proj: C64 = cols[k]
                    .iter()
                    .zip(&cols[j])
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                let (done, rest) = cols.split_at_mut(j);
                for (x, q) in rest[0].iter_mut().zip(&done[k]) {
                    *x -= proj * q;
                }
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 1e-12 * original.max(f64::MIN_POSITIVE)) {
            return None;
        }
        for x in cols[j].iter_mut() {
            *x /= norm;
        }
    }
    CMatrix::from_columns(&cols).ok()
}

#[derive(Serialize, Deserialize)]
struct StateJson {
    #[serde(rename = "dA")]
    d_a: usize,
    #[serde(rename = "dB")]
    d_b: usize,
    #[serde(flatten)]
    matrix: MatrixJson,
}

impl From<BipartiteState> for StateJson {
    fn from(s: BipartiteState) -> Self {
        StateJson {
            d_a: s.d_a,
            d_b: s.d_b,
            matrix: s.rho.into(),
        }
    }
}

impl TryFrom<StateJson> for BipartiteState {
    type Error = String;

    fn try_from(j: StateJson) -> std::result::Result<Self, String> {
        let rho = CMatrix::try_from(j.matrix)?;
        BipartiteState::new(j.d_a, j.d_b, rho).map_err(|e| e.to_string())
    }
}

#[derive(Serialize, Deserialize)]
struct BasisJson {
    d: usize,
    #[serde(flatten)]
    matrix: MatrixJson,
}

impl From<ObservableBasis> for BasisJson {
    fn from(b: ObservableBasis) -> Self {
        BasisJson {
            d: b.d(),
            matrix: b.vectors.into(),
        }
    }
}

impl TryFrom<BasisJson> for ObservableBasis {
    type Error = String;

    fn try_from(j: BasisJson) -> std::result::Result<Self, String> {
        let v = CMatrix::try_from(j.matrix)?;
        if v.dim() != j.d {
            return Err(format!("header d = {} but matrix dim = {}", j.d, v.dim()));
        }
        ObservableBasis::new(v).map_err(|e| e.to_string())
    }
}
