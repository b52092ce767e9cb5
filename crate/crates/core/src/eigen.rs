//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.
//!
//! Each rotation annihilates one off-diagonal pair (p, q). Writing
//! `a_pq = g·e^{iφ}`, the 2×2 unitary
//!
//! ```text
//!   U = [  c          s·e^{iφ} ]
//!       [ −s·e^{−iφ}  c        ]
//! ```
//!
//! is the real Jacobi rotation conjugated by `diag(1, e^{−iφ})`, so that
//! `U† A U` has a zero in position (p, q). Sweeps run over all pairs in row
//! order until the off-diagonal Frobenius norm drops below
//! `1e-14 · ‖M‖_F`, with a budget of `100 · n²` rotations.

use crate::{CMatrix, Error, Result, C64};

/// Input is symmetrized when its Hermitian defect is at most this.
pub const HERMITIAN_TOL: f64 = 1e-10;

const RELATIVE_OFF_TOL: f64 = 1e-14;

/// Eigenvalues ascending; eigenvector `k` is column `k` of `vectors`.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

impl EigenDecomposition {
    /// `V diag(λ) V†`.
    pub fn reconstruct(&self) -> CMatrix {
        let n = self.values.len();
        let v = &self.vectors;
        CMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| v[(i, k)] * self.values[k] * v[(j, k)].conj())
                .sum()
        })
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Fails with [`Error::NotHermitian`] if `‖M − M†‖_max > 1e-10`; smaller
/// defects are removed by taking the Hermitian part first.
pub fn herm_eig(m: &CMatrix) -> Result<EigenDecomposition> {
    let defect = m.hermitian_defect();
    if defect > HERMITIAN_TOL || !defect.is_finite() {
        return Err(Error::NotHermitian(defect));
    }
    let n = m.dim();
    let mut a = m.hermitian_part();
    let mut v = CMatrix::identity(n);

    let threshold = RELATIVE_OFF_TOL * a.frobenius_norm();
    let budget = 100 * n * n;
    let mut rotations = 0usize;

    while off_diagonal_norm(&a) > threshold {
        // Entries this small cannot lift the off-diagonal norm above the threshold.
        let skip = threshold / n as f64;
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                if a[(p, q)].norm() <= skip {
                    continue;
                }
                if rotations == budget {
                    return Err(Error::NoConvergence(budget));
                }
                rotate(&mut a, &mut v, p, q);
                rotations += 1;
                rotated = true;
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = CMatrix::from_fn(n, |i, k| v[(i, order[k])]);
    Ok(EigenDecomposition { values, vectors })
}

/// Eigenvalues only, ascending.
pub fn herm_eigenvalues(m: &CMatrix) -> Result<Vec<f64>> {
    herm_eig(m).map(|e| e.values)
}

fn off_diagonal_norm(a: &CMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            s += 2.0 * a[(p, q)].norm_sqr();
        }
    }
    s.sqrt()
}

fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let n = a.dim();
    let apq = a[(p, q)];
    let g = apq.norm();
    let phase = apq / g;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let tau = (aqq - app) / (2.0 * g);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let s_ph = phase * s; // s·e^{iφ}
    let s_ph_conj = s_ph.conj();

    // A ← A U (columns p, q).
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * s_ph_conj;
        a[(k, q)] = akp * s_ph + akq * c;
    }
    // A ← U† A (rows p, q).
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * s_ph;
        a[(q, k)] = apk * s_ph_conj + aqk * c;
    }
    a[(p, p)] = C64::new(app - t * g, 0.0);
    a[(q, q)] = C64::new(aqq + t * g, 0.0);
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * s_ph_conj;
        v[(k, q)] = vkp * s_ph + vkq * c;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_input_sorted() {
        let e = herm_eig(&CMatrix::from_real_diag(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(e.values, vec![1.0, 2.0, 3.0]);
        assert!(
            e.reconstruct()
                .max_abs_diff(&CMatrix::from_real_diag(&[3.0, 1.0, 2.0]))
                < 1e-15
        );
    }

    #[test]
    fn pauli_x_eigenpairs() {
        let x = CMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let e = herm_eig(&x).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-15 && (e.values[1] - 1.0).abs() < 1e-15);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        // Up to a global phase: |⟨expected|v⟩| = 1.
        let minus = [C64::new(s, 0.0), C64::new(-s, 0.0)];
        let plus = [C64::new(s, 0.0), C64::new(s, 0.0)];
        for (k, target) in [minus, plus].iter().enumerate() {
            let col = e.vectors.column(k);
            let overlap: C64 = target.iter().zip(&col).map(|(a, b)| a.conj() * b).sum();
            assert!((overlap.norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn complex_two_by_two_matches_quadratic_roots() {
        let m = CMatrix::from_vec(
            2,
            vec![
                C64::new(0.3, 0.0),
                C64::new(0.4, -1.1),
                C64::new(0.4, 1.1),
                C64::new(-1.2, 0.0),
            ],
        )
        .unwrap();
        let (a, d, b2) = (0.3f64, -1.2f64, 0.4f64.powi(2) + 1.1f64.powi(2));
        let mean = 0.5 * (a + d);
        let r = (0.25 * (a - d).powi(2) + b2).sqrt();
        let e = herm_eig(&m).unwrap();
        assert!((e.values[0] - (mean - r)).abs() < 1e-12);
        assert!((e.values[1] - (mean + r)).abs() < 1e-12);
        assert!(e.reconstruct().max_abs_diff(&m) < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = CMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(herm_eig(&m), Err(Error::NotHermitian(d)) if d == 1.0));
    }

    #[test]
    fn tiny_defect_is_symmetrized() {
        let mut m = CMatrix::from_real(2, &[1.0, 0.5, 0.5, 2.0]).unwrap();
        m[(0, 1)] += C64::new(1e-12, 0.0);
        assert!(herm_eig(&m).is_ok());
    }

    #[test]
    fn zero_and_one_dimensional() {
        assert!(herm_eig(&CMatrix::zeros(3))
            .unwrap()
            .values
            .iter()
            .all(|&x| x == 0.0));
        let e = herm_eig(&CMatrix::from_real_diag(&[0.25])).unwrap();
        assert_eq!(e.values, vec![0.25]);
    }

    #[test]
    fn deterministic() {
        let m = CMatrix::from_fn(5, |i, j| {
            let x = (i * 7 + j * 3) as f64 * 0.1;
            if i == j {
                C64::new(x, 0.0)
            } else if i < j {
                C64::new(x.sin(), x.cos())
            } else {
                C64::new(
                    ((j * 7 + i * 3) as f64 * 0.1).sin(),
                    -((j * 7 + i * 3) as f64 * 0.1).cos(),
                )
            }
        });
        let a = herm_eig(&m).unwrap();
        let b = herm_eig(&m).unwrap();
        assert_eq!(a.values, b.values);
        assert_eq!(a.vectors, b.vectors);
        assert!(a.reconstruct().max_abs_diff(&m) < 1e-13);
    }
}
