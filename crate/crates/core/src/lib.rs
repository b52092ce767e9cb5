//! # qir-core
//!
//! Entropic uncertainty and irreality of observables for finite-dimensional
//! bipartite states ρ_AB on H_A ⊗ H_B.
//!
//! For an observable X on subsystem A with eigenbasis {|x_i⟩}, the crate
//! evaluates
//!
//! | quantity | definition |
//! |----------|------------|
//! | H(AB)    | S(ρ_AB) |
//! | H(A\|B)  | S(ρ_AB) − S(ρ_B) |
//! | H(X\|B)  | S(Φ_X(ρ_AB)) − S(ρ_B) |
//! | ℑ(X\|ρ)  | S(Φ_X(ρ_AB)) − S(ρ_AB) |
//!
//! where Φ_X is the dephasing channel in the X basis, together with the
//! memory-assisted uncertainty relation and the uncertainty/irreality
//! relations that follow from it. Every relation is reported with a signed
//! slack (lhs − rhs) so that saturation and violations are visible.
//!
//! All entropies are in nats. Matrices are row-major and the Kronecker
//! ordering is A ⊗ B with A as the slow index.
//!
//! ## Modules
//!
//! - [`matrix`] and [`eigen`]: dense complex linear algebra and a cyclic
//!   Jacobi Hermitian eigensolver.
//! - [`states`]: bipartite density matrices and observable bases.
//! - [`entropy`]: Shannon, von Neumann, conditional and relative entropies.
//! - [`channels`]: dephasing Φ_X and monitoring M_Y^ε.
//! - [`relations`]: the Maassen–Uffink bound and all identities/inequalities.
//! - [`explore`]: random campaigns, monitoring sweeps, slack minimization.

#![forbid(unsafe_code)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channels;
pub mod config;
pub mod eigen;
pub mod entropy;
pub mod explore;
pub mod matrix;
pub mod relations;
pub mod rng;
pub mod states;
pub mod tokens;

mod error;

pub use error::{Error, Result};

pub use channels::{
    dephase, dephased_decomposition, dephasings_commute, monitor, monitor_n, DephasedDecomposition,
};
pub use eigen::{herm_eig, EigenDecomposition};
pub use entropy::{
    cond_entropy, irreality, profile, relative_entropy, shannon, uncertainty, vn_entropy,
    EntropyProfile,
};
pub use matrix::CMatrix;
pub use relations::{IdentityReport, InequalityReport, Relation, DEFAULT_TOL};
pub use states::{BipartiteState, ObservableBasis};

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex64;
