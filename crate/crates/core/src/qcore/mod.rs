//! Dense linear algebra and entropy primitives for bipartite density matrices.

mod density;
mod linalg;

pub use density::{
    entropy_of_eigenvalues, expect, partial_trace, purity, vn_entropy, DensityFile, DensityMatrix, Subsystem,
};
pub(crate) use density::trace_of_product;
pub use linalg::{
    eigh, eigvalsh, ensure_unitary, hermitian_deviation, hermitian_part, identity, pauli, pauli_x, pauli_y,
    pauli_z, tensor_product, trace, unitarity_deviation, ComplexSquareMatrix, Spectrum,
};
pub(crate) use linalg::herm2_eigenvalues;
