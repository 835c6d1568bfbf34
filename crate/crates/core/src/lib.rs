//! Quantum discord and weak quantum discord of bipartite states.
//!
//! Discord is computed for states with a qubit on subsystem A by
//! optimizing projective measurements on A. Weak discord keeps the optimal
//! measurement and the conditioned states of B but replaces the outcome
//! probabilities with weak-value estimates under the post-selection
//! P_f = (1−α)ρ + α·I, so that α = 1 recovers ordinary discord.
//!
//! ```
//! use weakdiscord_core::states::{bell_diagonal, BellDiagonalParams};
//! use weakdiscord_core::{discord, weak_discord};
//!
//! let rho = bell_diagonal(BellDiagonalParams::new(1.0, -1.0, 1.0)?)?;
//! let d = discord(&rho)?;
//! assert!((d.discord - 1.0).abs() < 1e-9);
//! let w = weak_discord(&rho, 0.5)?;
//! assert!((w.weak_discord.unwrap() - d.discord).abs() < 1e-9);
//! # Ok::<(), weakdiscord_core::Error>(())
//! ```

pub mod correlations;
pub mod error;
pub mod experiment;
pub mod format;
pub mod qcore;
pub mod states;
pub mod tolerance;
pub mod weak;

pub use correlations::{
    classical_correlation, classical_work, conditional_entropy, discord, measurement_outcome, mutual_information,
    quantum_work, DiscordResult, Outcome, QubitMeasurement,
};
pub use error::{Error, Result};
pub use qcore::{ComplexSquareMatrix, DensityFile, DensityMatrix, Subsystem};
pub use weak::{
    alternative_weak_discord, coincidence_condition, disturbance_probability, make_post_selection, qubit_weak_value,
    weak_discord, weak_discord_with, weak_expect, weak_probabilities, PostSelection, WeakDiscordResult,
    WeakObservable,
};
