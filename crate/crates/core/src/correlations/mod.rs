//! Entropic correlations of a bipartite state: mutual information,
//! measurement-conditioned entropy on a qubit A, discord optimized over
//! projective qubit measurements, and the Maxwell-demon work quantities.

mod optimize;

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qcore::{
    self, herm2_eigenvalues, identity, partial_trace, tensor_product, vn_entropy, ComplexSquareMatrix,
    DensityMatrix, Subsystem,
};
use crate::tolerance;

pub use optimize::{GRID_PHI, GRID_THETA, REFINE_STARTS, REFINE_TOLERANCE};

/// Outcome label of a two-outcome qubit measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub const BOTH: [Outcome; 2] = [Outcome::Plus, Outcome::Minus];

    fn sign(self) -> f64 {
        match self {
            Outcome::Plus => 1.0,
            Outcome::Minus => -1.0,
        }
    }
}

/// Projective qubit measurement Π± = ½(I ± n̂·σ) along the Bloch axis
/// n̂ = (sinθ cosφ, sinθ sinφ, cosθ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitMeasurement {
    pub theta: f64,
    pub phi: f64,
}

impl QubitMeasurement {
    /// Any real angles are accepted and reduced to θ ∈ [0, π], φ ∈ [0, 2π)
    /// describing the same axis.
    pub fn new(theta: f64, phi: f64) -> Self {
        let mut theta = theta.rem_euclid(2.0 * PI);
        let mut phi = phi;
        if theta > PI {
            theta = 2.0 * PI - theta;
            phi += PI;
        }
        Self { theta, phi: phi.rem_euclid(2.0 * PI) }
    }

    /// Measurement along Pauli axis 1, 2 or 3 (x, y, z).
    pub fn along_pauli(axis: usize) -> Self {
        match axis {
            1 => Self::new(PI / 2.0, 0.0),
            2 => Self::new(PI / 2.0, PI / 2.0),
            3 => Self::new(0.0, 0.0),
            _ => panic!("pauli axis must be 1, 2 or 3, got {axis}"),
        }
    }

    pub fn axis(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }

    /// 2x2 projector for one outcome.
    pub fn projector(&self, outcome: Outcome) -> ComplexSquareMatrix {
        let [x, y, z] = self.axis();
        let s = outcome.sign();
        let h = |v: f64| Complex64::new(0.5 * v, 0.0);
        DMatrix::from_row_slice(
            2,
            2,
            &[
                h(1.0 + s * z),
                Complex64::new(0.5 * s * x, -0.5 * s * y),
                Complex64::new(0.5 * s * x, 0.5 * s * y),
                h(1.0 - s * z),
            ],
        )
    }

    /// (Π₊ − Π₋) ⊗ I_B, the ±1-valued observable on the joint space.
    pub fn observable(&self, dim_b: usize) -> ComplexSquareMatrix {
        let local = self.projector(Outcome::Plus) - self.projector(Outcome::Minus);
        tensor_product(&local, &identity(dim_b))
    }
}

/// Probability and conditioned state of B for one measurement outcome on A.
#[derive(Debug, Clone)]
pub struct OutcomeResult {
    pub prob: f64,
    /// `None` when `prob` is below the zero-probability threshold.
    pub state: Option<DensityMatrix>,
}

/// Optimized discord of a state with a qubit on A.
#[derive(Debug, Clone)]
pub struct DiscordResult {
    pub mutual_info: f64,
    pub max_j: f64,
    pub discord: f64,
    pub optimal: QubitMeasurement,
    /// Outcome probabilities (+, −) of the optimal measurement.
    pub probs: Vec<f64>,
    /// Entropies of the conditioned states of B, 0 for zero-probability outcomes.
    pub cond_entropies: Vec<f64>,
    pub entropy_a: f64,
    pub entropy_b: f64,
    pub entropy_ab: f64,
}

fn require_qubit(rho: &DensityMatrix) -> Result<()> {
    if rho.dim_a() != 2 {
        return Err(Error::QubitRequired(rho.dim_a()));
    }
    Ok(())
}

/// The three entropies S(A), S(B), S(AB).
fn entropies(rho: &DensityMatrix) -> Result<(f64, f64, f64)> {
    let sa = vn_entropy(&partial_trace(rho, Subsystem::A)?)?;
    let sb = vn_entropy(&partial_trace(rho, Subsystem::B)?)?;
    let sab = vn_entropy(rho)?;
    Ok((sa, sb, sab))
}

/// I(A:B) = S(A) + S(B) − S(AB), in bits.
pub fn mutual_information(rho: &DensityMatrix) -> Result<f64> {
    let (sa, sb, sab) = entropies(rho)?;
    Ok(sa + sb - sab)
}

/// Lüders update for one outcome: p = tr[(Π⊗I)ρ] and
/// ρ_B|k = tr_A[(Π⊗I)ρ(Π⊗I)] / p.
pub fn measurement_outcome(rho: &DensityMatrix, m: QubitMeasurement, k: Outcome) -> Result<OutcomeResult> {
    require_qubit(rho)?;
    let p = tensor_product(&m.projector(k), &identity(rho.dim_b()));
    let projected = &p * rho.matrix() * &p;
    let prob = qcore::trace(&projected).re;
    if prob < tolerance::ZERO_PROBABILITY {
        return Ok(OutcomeResult { prob, state: None });
    }
    let joint = DensityMatrix::new(projected.unscale(prob), 2, rho.dim_b())?;
    let state = partial_trace(&joint, Subsystem::B)?;
    Ok(OutcomeResult { prob, state: Some(state) })
}

/// S(B|A) = Σ_k p_k S(ρ_B|k) for the given measurement on A.
pub fn conditional_entropy(rho: &DensityMatrix, m: QubitMeasurement) -> Result<f64> {
    require_qubit(rho)?;
    Ok(ConditionalBlocks::new(rho).conditional_entropy(m.axis()))
}

/// J(A:B) = S(B) − S(B|A) for the given measurement on A.
pub fn classical_correlation(rho: &DensityMatrix, m: QubitMeasurement) -> Result<f64> {
    let sb = vn_entropy(&partial_trace(rho, Subsystem::B)?)?;
    Ok(sb - conditional_entropy(rho, m)?)
}

/// D = I − max J over projective measurements on the qubit A.
///
/// The maximum is located on a 64×128 (θ, φ) grid over the upper Bloch
/// hemisphere and refined by Nelder–Mead from the five best nodes.
pub fn discord(rho: &DensityMatrix) -> Result<DiscordResult> {
    require_qubit(rho)?;
    let (sa, sb, sab) = entropies(rho)?;
    let blocks = ConditionalBlocks::new(rho);
    let parallel = rho.dim_b() > 2;
    let best = optimize::minimize_on_sphere(
        |theta, phi| blocks.conditional_entropy(QubitMeasurement { theta, phi }.axis()),
        parallel,
    );
    let optimal = QubitMeasurement { theta: best.theta, phi: best.phi };
    let outcomes = blocks.outcomes(optimal.axis());
    let cond = outcomes[0].0 * outcomes[0].1 + outcomes[1].0 * outcomes[1].1;

    let mutual_info = sa + sb - sab;
    let max_j = sb - cond;
    let mut discord = mutual_info - max_j;
    if (-tolerance::DISCORD_CLAMP..0.0).contains(&discord) {
        discord = 0.0;
    }
    Ok(DiscordResult {
        mutual_info,
        max_j,
        discord,
        optimal,
        probs: outcomes.iter().map(|o| o.0).collect(),
        cond_entropies: outcomes.iter().map(|o| o.1).collect(),
        entropy_a: sa,
        entropy_b: sb,
        entropy_ab: sab,
    })
}

/// W_c = log₂ d_AB − S(A) − S(B|A), in units of k_B T ln 2.
pub fn classical_work(rho: &DensityMatrix, m: QubitMeasurement) -> Result<f64> {
    require_qubit(rho)?;
    let sa = vn_entropy(&partial_trace(rho, Subsystem::A)?)?;
    Ok((rho.dim() as f64).log2() - sa - conditional_entropy(rho, m)?)
}

/// W_q = log₂ d_AB − S(AB).
pub fn quantum_work(rho: &DensityMatrix) -> Result<f64> {
    Ok((rho.dim() as f64).log2() - vn_entropy(rho)?)
}

/// Unnormalized conditioned states of B as functions of the axis:
/// σ± = ½ρ_B ± ½(n_x X + n_y Y + n_z Z) with X = ρ₁₀+ρ₀₁,
/// Y = i(ρ₀₁−ρ₁₀), Z = ρ₀₀−ρ₁₁ built from the A-blocks ρ_ij of ρ.
pub(crate) struct ConditionalBlocks {
    kind: BlockKind,
}

enum BlockKind {
    /// dim B = 2: each block stored as (a, d, b) of [[a, b], [b*, d]].
    Qubit([(f64, f64, Complex64); 4]),
    General([ComplexSquareMatrix; 4]),
}

impl ConditionalBlocks {
    pub(crate) fn new(rho: &DensityMatrix) -> Self {
        let db = rho.dim_b();
        let m = rho.matrix();
        let block = |i: usize, j: usize| m.view((i * db, j * db), (db, db)).into_owned();
        let (r00, r01, r10, r11) = (block(0, 0), block(0, 1), block(1, 0), block(1, 1));
        let half_b = (&r00 + &r11).scale(0.5);
        let x = &r10 + &r01;
        let y = (&r01 - &r10) * Complex64::new(0.0, 1.0);
        let z = &r00 - &r11;
        let mats = [half_b, x, y, z];
        let kind = if db == 2 {
            BlockKind::Qubit(mats.map(|b| (b[(0, 0)].re, b[(1, 1)].re, b[(0, 1)])))
        } else {
            BlockKind::General(mats)
        };
        Self { kind }
    }

    /// (probability, entropy of the normalized conditioned state) for (+, −).
    pub(crate) fn outcomes(&self, n: [f64; 3]) -> [(f64, f64); 2] {
        match &self.kind {
            BlockKind::Qubit(b) => {
                let [h, x, y, z] = b;
                let mix = |s: f64| {
                    let c = 0.5 * s;
                    let a = h.0 + c * (n[0] * x.0 + n[1] * y.0 + n[2] * z.0);
                    let d = h.1 + c * (n[0] * x.1 + n[1] * y.1 + n[2] * z.1);
                    let off = h.2 + (x.2 * n[0] + y.2 * n[1] + z.2 * n[2]) * c;
                    let (l1, l2) = herm2_eigenvalues(a, d, off);
                    normalized_entropy(a + d, [l1, l2].into_iter())
                };
                [mix(1.0), mix(-1.0)]
            }
            BlockKind::General(b) => {
                let [h, x, y, z] = b;
                let dir = x.scale(n[0]) + y.scale(n[1]) + z.scale(n[2]);
                let mix = |s: f64| {
                    let sigma = h + dir.scale(0.5 * s);
                    let p = qcore::trace(&sigma).re;
                    if p < tolerance::ZERO_PROBABILITY {
                        return (p, 0.0);
                    }
                    let eig = qcore::hermitian_part(&sigma).symmetric_eigenvalues();
                    normalized_entropy(p, eig.iter().copied())
                };
                [mix(1.0), mix(-1.0)]
            }
        }
    }

    pub(crate) fn conditional_entropy(&self, n: [f64; 3]) -> f64 {
        let [(p1, s1), (p2, s2)] = self.outcomes(n);
        p1 * s1 + p2 * s2
    }
}

/// (p, S(σ/p)) from the eigenvalues of an unnormalized σ with trace p.
/// The parent state is already validated, so negative eigenvalues here are
/// rounding noise and are dropped.
fn normalized_entropy(p: f64, eigenvalues: impl Iterator<Item = f64>) -> (f64, f64) {
    if p < tolerance::ZERO_PROBABILITY {
        return (p, 0.0);
    }
    let s = eigenvalues
        .map(|l| l / p)
        .filter(|&mu| mu > 0.0)
        .map(|mu| -mu * mu.log2())
        .sum::<f64>();
    (p, s.max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{pauli_z, purity};
    use crate::states::{
        bell_analytics, bell_diagonal, random_mixed, random_pure, werner, BellDiagonalParams, RandomStateSpec,
    };
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn bell_state() -> DensityMatrix {
        bell_diagonal(BellDiagonalParams::new(1.0, -1.0, 1.0).unwrap()).unwrap()
    }

    /// ½(|00⟩⟨00| + |11⟩⟨11|)
    fn classical_pair() -> DensityMatrix {
        let d = nalgebra::DVector::from_vec(vec![c(0.5), c(0.0), c(0.0), c(0.5)]);
        DensityMatrix::new(DMatrix::from_diagonal(&d), 2, 2).unwrap()
    }

    fn product_state() -> DensityMatrix {
        let a = DensityMatrix::single((identity(2) + pauli_z().scale(0.4)).scale(0.5)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let b = random_mixed(RandomStateSpec::new(3, rng.random()).unwrap()).unwrap();
        let b = partial_trace(&b, Subsystem::B).unwrap();
        DensityMatrix::product(&a, &b).unwrap()
    }

    fn random_axis(rng: &mut ChaCha8Rng) -> QubitMeasurement {
        QubitMeasurement::new(rng.random_range(0.0..PI), rng.random_range(0.0..2.0 * PI))
    }

    #[test]
    fn mutual_information_examples() {
        assert!(mutual_information(&product_state()).unwrap().abs() < 1e-12);
        assert!((mutual_information(&bell_state()).unwrap() - 2.0).abs() < 1e-12);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let p = BellDiagonalParams::sample(&mut rng);
            let want = bell_analytics(p).unwrap().mutual_info;
            let got = mutual_information(&bell_diagonal(p).unwrap()).unwrap();
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn bell_diagonal_outcomes_are_unbiased() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let rho = bell_diagonal(BellDiagonalParams::sample(&mut rng)).unwrap();
            let m = random_axis(&mut rng);
            for k in Outcome::BOTH {
                assert!((measurement_outcome(&rho, m, k).unwrap().prob - 0.5).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn classical_pair_z_outcome() {
        let out = measurement_outcome(&classical_pair(), QubitMeasurement::along_pauli(3), Outcome::Plus).unwrap();
        assert!((out.prob - 0.5).abs() < 1e-15);
        let state = out.state.unwrap();
        assert!((state.matrix()[(0, 0)].re - 1.0).abs() < 1e-15);
        assert!(state.matrix()[(1, 1)].norm() < 1e-15);
    }

    #[test]
    fn zero_probability_outcome_has_no_state() {
        let up = DensityMatrix::from_pure(&[c(1.0), c(0.0), c(0.0), c(0.0)], 2, 2).unwrap();
        let out = measurement_outcome(&up, QubitMeasurement::along_pauli(3), Outcome::Minus).unwrap();
        assert!(out.prob.abs() < 1e-15 && out.state.is_none());
        assert_eq!(conditional_entropy(&up, QubitMeasurement::along_pauli(3)).unwrap(), 0.0);
    }

    #[test]
    fn outcome_matches_direct_matrix_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for seed in 0..10 {
            let rho = random_mixed(RandomStateSpec::new(1 + seed % 4, seed as u64).unwrap()).unwrap();
            let m = random_axis(&mut rng);
            let [nx, ny, nz] = m.axis();
            for (k, s) in [(Outcome::Plus, 1.0), (Outcome::Minus, -1.0)] {
                // Π = ½(I + s n·σ) written out, then (Π⊗I)ρ(Π⊗I) by explicit index sums.
                let pi = [
                    [Complex64::new(0.5 * (1.0 + s * nz), 0.0), Complex64::new(0.5 * s * nx, -0.5 * s * ny)],
                    [Complex64::new(0.5 * s * nx, 0.5 * s * ny), Complex64::new(0.5 * (1.0 - s * nz), 0.0)],
                ];
                let big = |r: usize, col: usize| if r % 2 == col % 2 { pi[r / 2][col / 2] } else { c(0.0) };
                let mut projected = [[c(0.0); 4]; 4];
                for i in 0..4 {
                    for j in 0..4 {
                        for a in 0..4 {
                            for b in 0..4 {
                                projected[i][j] += big(i, a) * rho.matrix()[(a, b)] * big(b, j);
                            }
                        }
                    }
                }
                let prob: f64 = (0..4).map(|i| projected[i][i].re).sum();
                let out = measurement_outcome(&rho, m, k).unwrap();
                assert!((out.prob - prob).abs() < 1e-13);
                let state = out.state.unwrap();
                for s1 in 0..2 {
                    for s2 in 0..2 {
                        let want = (projected[s1][s2] + projected[2 + s1][2 + s2]) / prob;
                        assert!((state.matrix()[(s1, s2)] - want).norm() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn conditional_entropy_fast_route_matches_lueders_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let mut states = vec![random_mixed(RandomStateSpec::new(3, 5).unwrap()).unwrap()];
        states.push(random_pure(2, 3, 6).unwrap());
        states.push(crate::states::random_dqc1(2, 7).unwrap());
        for rho in &states {
            for _ in 0..10 {
                let m = random_axis(&mut rng);
                let mut want = 0.0;
                for k in Outcome::BOTH {
                    let out = measurement_outcome(rho, m, k).unwrap();
                    if let Some(state) = out.state {
                        want += out.prob * vn_entropy(&state).unwrap();
                    }
                }
                assert!((conditional_entropy(rho, m).unwrap() - want).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn conditional_entropy_examples() {
        let prod = product_state();
        let sb = vn_entropy(&partial_trace(&prod, Subsystem::B).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..5 {
            assert!((conditional_entropy(&prod, random_axis(&mut rng)).unwrap() - sb).abs() < 1e-10);
        }
        assert!(conditional_entropy(&classical_pair(), QubitMeasurement::along_pauli(3)).unwrap().abs() < 1e-15);

        for _ in 0..20 {
            let p = BellDiagonalParams::sample(&mut rng);
            let rho = bell_diagonal(p).unwrap();
            let m = QubitMeasurement::along_pauli(p.strongest_axis());
            let want = 1.0 - bell_analytics(p).unwrap().max_j;
            assert!((conditional_entropy(&rho, m).unwrap() - want).abs() < 1e-10);
        }
    }

    #[test]
    fn qubit_required() {
        let rho = DensityMatrix::maximally_mixed(3, 2).unwrap();
        assert!(matches!(discord(&rho), Err(Error::QubitRequired(3))));
        assert!(matches!(
            measurement_outcome(&rho, QubitMeasurement::along_pauli(1), Outcome::Plus),
            Err(Error::QubitRequired(3))
        ));
        assert!(conditional_entropy(&rho, QubitMeasurement::along_pauli(1)).is_err());
        assert!(classical_work(&rho, QubitMeasurement::along_pauli(1)).is_err());
    }

    #[test]
    fn discord_examples() {
        let prod = discord(&product_state()).unwrap();
        assert!(prod.discord.abs() < 1e-9);
        let bell = discord(&bell_state()).unwrap();
        assert!((bell.discord - 1.0).abs() < 1e-9);
        assert!((bell.mutual_info - 2.0).abs() < 1e-12);
        assert!((bell.probs.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn discord_matches_bell_analytics() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..100 {
            let p = BellDiagonalParams::sample(&mut rng);
            let got = discord(&bell_diagonal(p).unwrap()).unwrap();
            let want = bell_analytics(p).unwrap();
            assert!((got.discord - want.discord).abs() < 1e-6, "{p:?}: {} vs {}", got.discord, want.discord);
        }
    }

    #[test]
    fn discord_of_pure_state_is_entanglement_entropy() {
        for seed in 0..30 {
            let rho = random_pure(2, 2, seed).unwrap();
            let sa = vn_entropy(&partial_trace(&rho, Subsystem::A).unwrap()).unwrap();
            assert!((discord(&rho).unwrap().discord - sa).abs() < 1e-4);
        }
    }

    #[test]
    fn work_examples() {
        let z = QubitMeasurement::along_pauli(3);
        assert!((classical_work(&classical_pair(), z).unwrap() - 1.0).abs() < 1e-12);
        let mixed = DensityMatrix::maximally_mixed(2, 2).unwrap();
        assert!(classical_work(&mixed, QubitMeasurement::new(0.3, 1.1)).unwrap().abs() < 1e-12);
        assert!(quantum_work(&mixed).unwrap().abs() < 1e-12);

        let bell = bell_state();
        let d = discord(&bell).unwrap();
        assert!((classical_work(&bell, d.optimal).unwrap() - 1.0).abs() < 1e-9);
        assert!((quantum_work(&bell).unwrap() - 2.0).abs() < 1e-12);

        for c in [-0.3, 0.1, 0.25] {
            let p = BellDiagonalParams::new(c, c, c).unwrap();
            let s: f64 = -p.eigenvalues().iter().filter(|&&l| l > 0.0).map(|l| l * l.log2()).sum::<f64>();
            assert!((quantum_work(&werner(c).unwrap()).unwrap() - (2.0 - s)).abs() < 1e-12);
        }
    }

    #[test]
    fn demon_identity_and_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for seed in 0..40u64 {
            let rho = random_mixed(RandomStateSpec::new(1 + (seed % 4) as usize, seed).unwrap()).unwrap();
            let d = discord(&rho).unwrap();
            let wq = quantum_work(&rho).unwrap();
            let wc = classical_work(&rho, d.optimal).unwrap();
            assert!((d.discord - (wq - wc)).abs() < 1e-9);
            assert!(d.discord >= 0.0);
            assert!(d.discord <= d.entropy_a.min(d.entropy_b) + 1e-9);
            assert!((d.discord - (d.mutual_info - d.max_j)).abs() < 1e-9);
            let ce = conditional_entropy(&rho, d.optimal).unwrap();
            assert!(ce >= 0.0 && ce <= d.entropy_b + 1e-9);
            for _ in 0..100 {
                let j = classical_correlation(&rho, random_axis(&mut rng)).unwrap();
                assert!(d.max_j >= j - 1e-9);
            }
            if seed % 4 == 0 {
                assert!((purity(&rho) - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn werner_is_isotropic() {
        let mut rng = ChaCha8Rng::seed_from_u64(90);
        for c in [-1.0 / 3.0, -0.1, 0.2, 1.0 / 3.0] {
            let rho = werner(c).unwrap();
            let j0 = classical_correlation(&rho, QubitMeasurement::along_pauli(3)).unwrap();
            for _ in 0..20 {
                let j = classical_correlation(&rho, random_axis(&mut rng)).unwrap();
                assert!((j - j0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn optimal_angles_are_deterministic_and_canonical() {
        let rho = random_mixed(RandomStateSpec::new(4, 17).unwrap()).unwrap();
        let a = discord(&rho).unwrap();
        let b = discord(&rho).unwrap();
        assert_eq!(a.optimal, b.optimal);
        assert!((0.0..=PI / 2.0).contains(&a.optimal.theta));
        assert!((0.0..2.0 * PI).contains(&a.optimal.phi));
    }

    proptest! {
        #[test]
        fn projectors_form_a_measurement(theta in -10.0f64..10.0, phi in -10.0f64..10.0) {
            let m = QubitMeasurement::new(theta, phi);
            prop_assert!((0.0..=PI).contains(&m.theta) && (0.0..2.0 * PI).contains(&m.phi));
            let p = m.projector(Outcome::Plus);
            let q = m.projector(Outcome::Minus);
            prop_assert!((&p + &q - identity(2)).norm() < 1e-12);
            prop_assert!((&p * &p - &p).norm() < 1e-12);
            prop_assert!((&q * &q - &q).norm() < 1e-12);
            prop_assert!((&p * &q).norm() < 1e-12);
            // Same axis as the raw angles.
            let raw = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
            for (x, y) in m.axis().iter().zip(raw) {
                prop_assert!((x - y).abs() < 1e-12);
            }
        }
    }
}
