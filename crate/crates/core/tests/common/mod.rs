#![allow(dead_code)]

use qir_core::rng::StreamRng;
use qir_core::{BipartiteState, CMatrix, ObservableBasis, C64};

pub fn random_matrix(d: usize, rng: &mut StreamRng) -> CMatrix {
    CMatrix::from_fn(d, |_, _| rng.complex_normal())
}

pub fn random_hermitian(d: usize, rng: &mut StreamRng) -> CMatrix {
    let g = random_matrix(d, rng);
    CMatrix::from_fn(d, |i, j| (g[(i, j)] + g[(j, i)].conj()) * 0.5)
}

/// Plain triple loop.
pub fn naive_matmul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let n = a.dim();
    let mut out = CMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..n {
                acc += a[(i, k)] * b[(k, j)];
            }
            out[(i, j)] = acc;
        }
    }
    out
}

/// Coefficients `c` of `det(λI − M) = Σ_k c_k λ^k` by Faddeev–LeVerrier.
pub fn char_poly(m: &CMatrix) -> Vec<C64> {
    let n = m.dim();
    let mut c = vec![C64::new(0.0, 0.0); n + 1];
    c[n] = C64::new(1.0, 0.0);
    let mut mk = CMatrix::zeros(n);
    for k in 1..=n {
        let mut prev = mk.clone();
        for i in 0..n {
            prev[(i, i)] += c[n - k + 1];
        }
        mk = naive_matmul(m, &prev);
        c[n - k] = -mk.trace() / k as f64;
    }
    c
}

/// All roots of a monic polynomial by Durand–Kerner iteration.
pub fn poly_roots(c: &[C64]) -> Vec<C64> {
    let n = c.len() - 1;
    let eval = |z: C64| {
        c.iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, &ck| acc * z + ck)
    };
    let seed = C64::new(0.4, 0.9);
    let mut z: Vec<C64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut denom = C64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

/// Spectrum of a Hermitian matrix through its characteristic polynomial.
pub fn oracle_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let mut v: Vec<f64> = poly_roots(&char_poly(m)).iter().map(|z| z.re).collect();
    v.sort_by(f64::total_cmp);
    v
}

pub fn entropy_of(values: &[f64]) -> f64 {
    values
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.ln())
        .sum()
}

/// Tr_A by explicit summation over `ρ[(a, b), (a, b')]`.
pub fn oracle_trace_a(rho: &CMatrix, d_a: usize, d_b: usize) -> CMatrix {
    let mut out = CMatrix::zeros(d_b);
    for b in 0..d_b {
        for bp in 0..d_b {
            for a in 0..d_a {
                out[(b, bp)] += rho[(a * d_b + b, a * d_b + bp)];
            }
        }
    }
    out
}

pub fn oracle_trace_b(rho: &CMatrix, d_a: usize, d_b: usize) -> CMatrix {
    let mut out = CMatrix::zeros(d_a);
    for a in 0..d_a {
        for ap in 0..d_a {
            for b in 0..d_b {
                out[(a, ap)] += rho[(a * d_b + b, ap * d_b + b)];
            }
        }
    }
    out
}

/// `Σ_i (|x_i⟩⟨x_i| ⊗ I) ρ (|x_i⟩⟨x_i| ⊗ I)` written out index by index.
pub fn oracle_dephase(x: &ObservableBasis, state: &BipartiteState) -> CMatrix {
    let (d_a, d_b) = (state.d_a(), state.d_b());
    let rho = state.rho();
    let v = x.vectors();
    let mut out = CMatrix::zeros(d_a * d_b);
    for i in 0..d_a {
        for b in 0..d_b {
            for bp in 0..d_b {
                let mut amp = C64::new(0.0, 0.0);
                for c in 0..d_a {
                    for cp in 0..d_a {
                        amp += v[(c, i)].conj() * rho[(c * d_b + b, cp * d_b + bp)] * v[(cp, i)];
                    }
                }
                for a in 0..d_a {
                    for ap in 0..d_a {
                        out[(a * d_b + b, ap * d_b + bp)] += v[(a, i)] * amp * v[(ap, i)].conj();
                    }
                }
            }
        }
    }
    out
}

pub fn oracle_entropy(m: &CMatrix) -> f64 {
    entropy_of(&oracle_eigenvalues(m))
}
