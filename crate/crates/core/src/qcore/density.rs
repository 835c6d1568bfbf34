use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::linalg::{self, ComplexSquareMatrix, ZERO};
use crate::error::{Error, Result};
use crate::format::{sig17_vec, Sig17};
use crate::tolerance;

/// Which tensor factor to keep in a partial trace. A is always the first factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// A validated bipartite density matrix on `C^dimA ⊗ C^dimB`.
///
/// Construction checks Hermiticity, unit trace and positivity; the spectrum
/// computed during the positivity check is cached.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    mat: ComplexSquareMatrix,
    dim_a: usize,
    dim_b: usize,
    eigenvalues: Vec<f64>,
}

impl DensityMatrix {
    pub fn new(mat: ComplexSquareMatrix, dim_a: usize, dim_b: usize) -> Result<Self> {
        let dim = linalg::ensure_square(&mat)?;
        if dim_a == 0 || dim_b == 0 || dim_a * dim_b != dim {
            return Err(Error::DimensionMismatch { expected: dim_a * dim_b, found: dim });
        }
        if dim > tolerance::MAX_DIM {
            return Err(Error::DimensionTooLarge(dim));
        }
        let deviation = linalg::hermitian_deviation(&mat);
        if deviation > tolerance::HERMITIAN {
            return Err(Error::NotHermitian { deviation, tolerance: tolerance::HERMITIAN });
        }
        let trace = linalg::trace(&mat);
        if (trace.re - 1.0).abs() > tolerance::TRACE || trace.im.abs() > tolerance::TRACE {
            return Err(Error::TraceNotUnit { trace: trace.re, tolerance: tolerance::TRACE });
        }
        let mut eigenvalues = linalg::eigvalsh(&mat)?;
        let min_eigenvalue = eigenvalues.last().copied().unwrap_or(0.0);
        if min_eigenvalue < -tolerance::PSD {
            return Err(Error::NotPositive { min_eigenvalue, tolerance: tolerance::PSD });
        }
        eigenvalues.iter_mut().for_each(|l| *l = l.max(0.0));
        Ok(Self { mat, dim_a, dim_b, eigenvalues })
    }

    /// A single-system state, stored with the trivial split (dim, 1).
    pub fn single(mat: ComplexSquareMatrix) -> Result<Self> {
        let dim = linalg::ensure_square(&mat)?;
        Self::new(mat, dim, 1)
    }

    /// |psi><psi| for a (not necessarily normalized) vector.
    pub fn from_pure(psi: &[Complex64], dim_a: usize, dim_b: usize) -> Result<Self> {
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let n = psi.len();
        let mat = DMatrix::from_fn(n, n, |i, j| psi[i] * psi[j].conj() / (norm * norm));
        Self::new(mat, dim_a, dim_b)
    }

    /// Maximally mixed state I/d on the given split.
    pub fn maximally_mixed(dim_a: usize, dim_b: usize) -> Result<Self> {
        let d = dim_a * dim_b;
        Self::new(linalg::identity(d).unscale(d as f64), dim_a, dim_b)
    }

    /// ρ_A ⊗ ρ_B.
    pub fn product(a: &DensityMatrix, b: &DensityMatrix) -> Result<Self> {
        Self::new(linalg::tensor_product(&a.mat, &b.mat), a.dim(), b.dim())
    }

    pub fn matrix(&self) -> &ComplexSquareMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexSquareMatrix {
        self.mat
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn dim(&self) -> usize {
        self.dim_a * self.dim_b
    }

    /// Eigenvalues, descending, with round-off negatives clamped to 0.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Number of eigenvalues above `threshold`.
    pub fn rank(&self, threshold: f64) -> usize {
        self.eigenvalues.iter().filter(|&&l| l > threshold).count()
    }

    pub fn partial_trace(&self, keep: Subsystem) -> Result<DensityMatrix> {
        partial_trace(self, keep)
    }

    pub fn entropy(&self) -> Result<f64> {
        vn_entropy(self)
    }

    pub fn purity(&self) -> f64 {
        purity(self)
    }

    pub fn to_file(&self) -> DensityFile {
        DensityFile::from(self)
    }
}

/// Reduced state on the kept subsystem.
pub fn partial_trace(rho: &DensityMatrix, keep: Subsystem) -> Result<DensityMatrix> {
    let (da, db) = (rho.dim_a, rho.dim_b);
    if rho.mat.nrows() != da * db {
        return Err(Error::DimensionMismatch { expected: da * db, found: rho.mat.nrows() });
    }
    let m = &rho.mat;
    let reduced = match keep {
        Subsystem::A => DMatrix::from_fn(da, da, |i, j| {
            (0..db).map(|s| m[(i * db + s, j * db + s)]).sum::<Complex64>()
        }),
        Subsystem::B => DMatrix::from_fn(db, db, |s, t| {
            (0..da).map(|i| m[(i * db + s, i * db + t)]).sum::<Complex64>()
        }),
    };
    DensityMatrix::single(reduced)
}

/// −Σ λ log₂ λ over a spectrum, with 0·log 0 = 0. Eigenvalues in
/// `[-PSD, 0)` are clamped to zero; anything lower is an error.
pub fn entropy_of_eigenvalues(eigenvalues: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &l in eigenvalues {
        if l < -tolerance::PSD {
            return Err(Error::NotPositive { min_eigenvalue: l, tolerance: tolerance::PSD });
        }
        if l > 0.0 {
            s -= l * l.log2();
        }
    }
    Ok(s.max(0.0))
}

/// Von Neumann entropy in bits.
pub fn vn_entropy(rho: &DensityMatrix) -> Result<f64> {
    entropy_of_eigenvalues(&rho.eigenvalues)
}

/// tr(ρ²).
pub fn purity(rho: &DensityMatrix) -> f64 {
    // tr(ρ²) = Σ_ij |ρ_ij|² for Hermitian ρ.
    rho.mat.iter().map(|z| z.norm_sqr()).sum()
}

/// tr(Oρ) for a Hermitian observable on the full space.
pub fn expect(o: &ComplexSquareMatrix, rho: &DensityMatrix) -> Result<f64> {
    let dim = linalg::ensure_square(o)?;
    if dim != rho.dim() {
        return Err(Error::DimensionMismatch { expected: rho.dim(), found: dim });
    }
    let deviation = linalg::hermitian_deviation(o);
    if deviation > tolerance::HERMITIAN {
        return Err(Error::NotHermitian { deviation, tolerance: tolerance::HERMITIAN });
    }
    Ok(trace_of_product(o, &rho.mat).re)
}

/// tr(XY) without forming the product.
pub(crate) fn trace_of_product(x: &ComplexSquareMatrix, y: &ComplexSquareMatrix) -> Complex64 {
    let n = x.nrows();
    let mut acc = ZERO;
    for i in 0..n {
        for j in 0..n {
            acc += x[(i, j)] * y[(j, i)];
        }
    }
    acc
}

/// On-disk JSON form: `{ "dimA", "dimB", "re", "im" }` with row-major
/// real and imaginary parts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DensityFile {
    #[serde(rename = "dimA")]
    pub dim_a: usize,
    #[serde(rename = "dimB")]
    pub dim_b: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl From<&DensityMatrix> for DensityFile {
    fn from(rho: &DensityMatrix) -> Self {
        let n = rho.dim();
        let rows = |f: fn(&Complex64) -> f64| -> Vec<Vec<f64>> {
            (0..n).map(|i| (0..n).map(|j| f(&rho.mat[(i, j)])).collect()).collect()
        };
        Self { dim_a: rho.dim_a, dim_b: rho.dim_b, re: rows(|z| z.re), im: rows(|z| z.im) }
    }
}

impl DensityFile {
    /// Validates the matrix against every density-matrix invariant.
    pub fn into_density(self) -> Result<DensityMatrix> {
        let n = self.re.len();
        if self.im.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: self.im.len() });
        }
        for row in self.re.iter().chain(self.im.iter()) {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, cols: row.len() });
            }
        }
        let mat = DMatrix::from_fn(n, n, |i, j| Complex64::new(self.re[i][j], self.im[i][j]));
        DensityMatrix::new(mat, self.dim_a, self.dim_b)
    }

    pub fn from_json(text: &str) -> Result<DensityMatrix> {
        serde_json::from_str::<DensityFile>(text)?.into_density()
    }

    /// JSON with every entry written to 17 significant digits.
    pub fn to_json(&self) -> Result<String> {
        #[derive(Serialize)]
        struct Out {
            #[serde(rename = "dimA")]
            dim_a: usize,
            #[serde(rename = "dimB")]
            dim_b: usize,
            re: Vec<Vec<Sig17>>,
            im: Vec<Vec<Sig17>>,
        }
        let out = Out {
            dim_a: self.dim_a,
            dim_b: self.dim_b,
            re: self.re.iter().map(|r| sig17_vec(r)).collect(),
            im: self.im.iter().map(|r| sig17_vec(r)).collect(),
        };
        Ok(serde_json::to_string_pretty(&out)?)
    }
}
