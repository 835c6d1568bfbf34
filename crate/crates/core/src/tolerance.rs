//! Numerical tolerances shared by every module.

/// Max |rho_ij - conj(rho_ji)| accepted for a density matrix.
pub const HERMITIAN: f64 = 1e-10;

/// Max |tr(rho) - 1| accepted for a density matrix.
pub const TRACE: f64 = 1e-10;

/// Smallest eigenvalue accepted for a density matrix. Eigenvalues in
/// `[-PSD, 0)` are treated as solver noise and clamped to zero.
pub const PSD: f64 = 1e-8;

/// Outcomes with probability below this carry no conditioned state.
pub const ZERO_PROBABILITY: f64 = 1e-12;

/// Imaginary residue discarded from a real-valued trace.
pub const IMAG_RESIDUE: f64 = 1e-10;

/// Smallest admissible denominator tr(P_f rho) of a weak value.
pub const WEAK_DENOMINATOR: f64 = 1e-12;

/// Largest accepted condition estimate of the moment system.
pub const MAX_CONDITION: f64 = 1e12;

/// Slack around [0, 1] before a weak probability is flagged invalid.
pub const PROBABILITY_SLACK: f64 = 1e-9;

/// Largest supported total dimension (one qubit plus a six-qubit register).
pub const MAX_DIM: usize = 128;

/// Max |U^dag U - I| accepted for a unitary.
pub const UNITARY: f64 = 1e-10;

/// Coincidence test |tr(O rho^2) - <O> tr(rho^2)|.
pub const COINCIDENCE: f64 = 1e-10;

/// Negative discord values in `[-DISCORD_CLAMP, 0)` are reported as zero.
pub const DISCORD_CLAMP: f64 = 1e-9;
