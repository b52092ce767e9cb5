//! Dense complex square matrices.
//!
//! Storage is row-major. [`CMatrix::kron`] puts the left factor on the slow
//! index, so for a bipartite operator on H_A ⊗ H_B the entry
//! `((a·d_B + b), (a'·d_B + b'))` is `⟨a b| M |a' b'⟩`.
//!
//! On the wire a matrix is `{ "dim": n, "re": [...], "im": [...] }` with the
//! n² real and imaginary parts listed row-major.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::{Error, Result, C64};

/// Dense complex `dim × dim` matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct CMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| {
            if i == j {
                C64::new(1.0, 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    /// Builds a matrix from `dim²` row-major entries.
    pub fn from_vec(dim: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                got: data.len(),
            });
        }
        Ok(Self { dim, data })
    }

    /// Builds a matrix from row-major real entries.
    pub fn from_real(dim: usize, re: &[f64]) -> Result<Self> {
        Self::from_vec(dim, re.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn from_diag(diag: &[C64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for (i, &z) in diag.iter().enumerate() {
            m[(i, i)] = z;
        }
        m
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let d: Vec<C64> = diag.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::from_diag(&d)
    }

    /// `|u⟩⟨v|`.
    pub fn outer(u: &[C64], v: &[C64]) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: u.len(),
                got: v.len(),
            });
        }
        Ok(Self::from_fn(u.len(), |i, j| u[i] * v[j].conj()))
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<C64>]) -> Result<Self> {
        let n = cols.len();
        if let Some(bad) = cols.iter().find(|c| c.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: bad.len(),
            });
        }
        Ok(Self::from_fn(n, |i, j| cols[j][i]))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }

    pub fn diagonal(&self) -> Vec<C64> {
        (0..self.dim).map(|i| self[(i, i)]).collect()
    }

    pub fn matmul(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMatrix {
        CMatrix::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> CMatrix {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Kronecker product `self ⊗ other`, `self` on the slow index.
    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let (na, nb) = (self.dim, other.dim);
        let n = na * nb;
        let mut out = CMatrix::zeros(n);
        for i in 0..na {
            for j in 0..na {
                let a = self[(i, j)];
                for k in 0..nb {
                    for l in 0..nb {
                        out.data[(i * nb + k) * n + j * nb + l] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Tr_A over the slow factor of an operator on H_A ⊗ H_B.
    pub fn partial_trace_a(&self, d_a: usize, d_b: usize) -> Result<CMatrix> {
        self.check_bipartite(d_a, d_b)?;
        Ok(CMatrix::from_fn(d_b, |k, l| {
            (0..d_a).map(|i| self[(i * d_b + k, i * d_b + l)]).sum()
        }))
    }

    /// Tr_B over the fast factor of an operator on H_A ⊗ H_B.
    pub fn partial_trace_b(&self, d_a: usize, d_b: usize) -> Result<CMatrix> {
        self.check_bipartite(d_a, d_b)?;
        Ok(CMatrix::from_fn(d_a, |i, j| {
            (0..d_b).map(|k| self[(i * d_b + k, j * d_b + k)]).sum()
        }))
    }

    fn check_bipartite(&self, d_a: usize, d_b: usize) -> Result<()> {
        if self.dim != d_a * d_b {
            return Err(Error::DimensionMismatch {
                expected: d_a * d_b,
                got: self.dim,
            });
        }
        Ok(())
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, s: f64) -> CMatrix {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self − other`; infinite if dims differ.
    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        if self.dim != other.dim {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `max |M − M†|`.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// `(M + M†) / 2`.
    pub fn hermitian_part(&self) -> CMatrix {
        let n = self.dim;
        let mut out = self.clone();
        for i in 0..n {
            out[(i, i)] = C64::new(self[(i, i)].re, 0.0);
            for j in (i + 1)..n {
                let z = (self[(i, j)] + self[(j, i)].conj()) * 0.5;
                out[(i, j)] = z;
                out[(j, i)] = z.conj();
            }
        }
        out
    }

    /// `max |V†V − I|`.
    pub fn unitarity_defect(&self) -> f64 {
        let gram = self.dagger().matmul(self).expect("square");
        gram.max_abs_diff(&CMatrix::identity(self.dim))
    }

    /// `U M U†`.
    pub fn conjugate_by(&self, u: &CMatrix) -> Result<CMatrix> {
        u.matmul(self)?.matmul(&u.dagger())
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

/// Checked matrix product.
pub fn matmul(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    a.matmul(b)
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

/// Panics on dimension mismatch; use [`CMatrix::matmul`] for a checked product.
impl Mul for &CMatrix {
    type Output = CMatrix;

    fn mul(self, rhs: &CMatrix) -> CMatrix {
        self.matmul(rhs).expect("matrix dimensions must agree")
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;

    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions must agree");
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;

    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions must agree");
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Wire form of [`CMatrix`].
#[derive(Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl From<CMatrix> for MatrixJson {
    fn from(m: CMatrix) -> Self {
        MatrixJson {
            dim: m.dim,
            re: m.data.iter().map(|z| z.re).collect(),
            im: m.data.iter().map(|z| z.im).collect(),
        }
    }
}

impl TryFrom<MatrixJson> for CMatrix {
    type Error = String;

    fn try_from(j: MatrixJson) -> std::result::Result<Self, String> {
        let n2 = j.dim * j.dim;
        if j.re.len() != n2 || j.im.len() != n2 {
            return Err(format!(
                "expected {} entries in `re` and `im`, got {} and {}",
                n2,
                j.re.len(),
                j.im.len()
            ));
        }
        if j.re.iter().chain(&j.im).any(|x| !x.is_finite()) {
            return Err("non-finite matrix entry".into());
        }
        Ok(CMatrix {
            dim: j.dim,
            data: j
                .re
                .iter()
                .zip(&j.im)
                .map(|(&r, &i)| C64::new(r, i))
                .collect(),
        })
    }
}
