//! Dense complex matrices: Kronecker products, Hermitian eigensolves and
//! a handful of small helpers used throughout the crate.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tolerance;

/// Square dense complex matrix, row/column indices in the computational basis.
pub type ComplexSquareMatrix = DMatrix<Complex64>;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);

/// Eigen-decomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Real eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors stored as columns, in the order of `eigenvalues`.
    pub eigenvectors: ComplexSquareMatrix,
}

impl Spectrum {
    /// V diag(λ) V†.
    pub fn reconstruct(&self) -> ComplexSquareMatrix {
        let v = &self.eigenvectors;
        let mut scaled = v.clone();
        for (j, &l) in self.eigenvalues.iter().enumerate() {
            scaled.column_mut(j).scale_mut(l);
        }
        scaled * v.adjoint()
    }
}

pub fn identity(dim: usize) -> ComplexSquareMatrix {
    DMatrix::identity(dim, dim)
}

pub fn pauli_x() -> ComplexSquareMatrix {
    DMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO])
}

pub fn pauli_y() -> ComplexSquareMatrix {
    DMatrix::from_row_slice(2, 2, &[ZERO, -I, I, ZERO])
}

pub fn pauli_z() -> ComplexSquareMatrix {
    DMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, -ONE])
}

/// Pauli matrix by index 1, 2, 3 (x, y, z).
pub fn pauli(index: usize) -> ComplexSquareMatrix {
    match index {
        1 => pauli_x(),
        2 => pauli_y(),
        3 => pauli_z(),
        _ => panic!("pauli index must be 1, 2 or 3, got {index}"),
    }
}

/// Kronecker product `a ⊗ b`; block (i, j) of the result is `a[(i, j)] * b`.
pub fn tensor_product(a: &ComplexSquareMatrix, b: &ComplexSquareMatrix) -> ComplexSquareMatrix {
    a.kronecker(b)
}

pub(crate) fn ensure_square(m: &ComplexSquareMatrix) -> Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    Ok(m.nrows())
}

/// max |m_ij - conj(m_ji)|.
pub fn hermitian_deviation(m: &ComplexSquareMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

fn ensure_hermitian(m: &ComplexSquareMatrix) -> Result<()> {
    ensure_square(m)?;
    let deviation = hermitian_deviation(m);
    if deviation > tolerance::HERMITIAN {
        return Err(Error::NotHermitian { deviation, tolerance: tolerance::HERMITIAN });
    }
    Ok(())
}

/// (m + m†) / 2.
pub fn hermitian_part(m: &ComplexSquareMatrix) -> ComplexSquareMatrix {
    (m + m.adjoint()).scale(0.5)
}

pub fn trace(m: &ComplexSquareMatrix) -> Complex64 {
    m.diagonal().iter().sum()
}

/// max |U†U - I|.
pub fn unitarity_deviation(u: &ComplexSquareMatrix) -> f64 {
    let gram = u.adjoint() * u;
    let n = gram.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { ONE } else { ZERO };
            worst = worst.max((gram[(i, j)] - target).norm());
        }
    }
    worst
}

pub fn ensure_unitary(u: &ComplexSquareMatrix) -> Result<()> {
    ensure_square(u)?;
    let deviation = unitarity_deviation(u);
    if deviation > tolerance::UNITARY {
        return Err(Error::NotUnitary { deviation });
    }
    Ok(())
}

/// Full eigen-decomposition of a Hermitian matrix, eigenvalues descending.
pub fn eigh(m: &ComplexSquareMatrix) -> Result<Spectrum> {
    ensure_hermitian(m)?;
    let n = m.nrows();
    let decomposition = hermitian_part(m).symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| decomposition.eigenvalues[b].total_cmp(&decomposition.eigenvalues[a]));

    let eigenvalues = order.iter().map(|&k| decomposition.eigenvalues[k]).collect();
    let mut eigenvectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        eigenvectors.set_column(dst, &decomposition.eigenvectors.column(src));
    }
    Ok(Spectrum { eigenvalues, eigenvectors })
}

/// Eigenvalues only, descending. Uses a closed form for 1x1 and 2x2.
pub fn eigvalsh(m: &ComplexSquareMatrix) -> Result<Vec<f64>> {
    ensure_hermitian(m)?;
    let mut values = match m.nrows() {
        0 => Vec::new(),
        1 => vec![m[(0, 0)].re],
        2 => {
            let (hi, lo) = herm2_eigenvalues(m[(0, 0)].re, m[(1, 1)].re, m[(0, 1)]);
            vec![hi, lo]
        }
        _ => hermitian_part(m).symmetric_eigenvalues().iter().copied().collect(),
    };
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Eigenvalues (larger, smaller) of the Hermitian matrix [[a, b], [b*, d]].
#[inline]
pub(crate) fn herm2_eigenvalues(a: f64, d: f64, b: Complex64) -> (f64, f64) {
    let mean = 0.5 * (a + d);
    let half_gap = 0.5 * (a - d);
    let radius = (half_gap * half_gap + b.norm_sqr()).sqrt();
    (mean + radius, mean - radius)
}
