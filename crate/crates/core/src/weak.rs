//! Weak values under the post-selection P_f = (1−α)ρ + α·I, weak outcome
//! probabilities, and the weak quantum discord built from them.

use nalgebra::{DMatrix, DVector};

use crate::correlations::{discord, DiscordResult, Outcome, QubitMeasurement};
use crate::error::{Error, Result};
use crate::qcore::{
    self, eigvalsh, expect, hermitian_deviation, hermitian_part, identity, partial_trace, purity, tensor_product,
    trace_of_product, vn_entropy, ComplexSquareMatrix, DensityMatrix, Subsystem,
};
use crate::tolerance;

/// The post-selection operator P_f = (1−α)ρ + α·I on the joint space.
#[derive(Debug, Clone)]
pub struct PostSelection {
    alpha: f64,
    pf: ComplexSquareMatrix,
}

impl PostSelection {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn operator(&self) -> &ComplexSquareMatrix {
        &self.pf
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidAlpha(alpha));
    }
    Ok(())
}

fn ensure_psd(m: &ComplexSquareMatrix) -> Result<()> {
    let min_eigenvalue = eigvalsh(m)?.last().copied().unwrap_or(0.0);
    if min_eigenvalue < -tolerance::PSD {
        return Err(Error::NotPositive { min_eigenvalue, tolerance: tolerance::PSD });
    }
    Ok(())
}

/// Builds P_f and checks that P_f and (1−α)(I−ρ) are both positive.
pub fn make_post_selection(rho: &DensityMatrix, alpha: f64) -> Result<PostSelection> {
    check_alpha(alpha)?;
    let eye = identity(rho.dim());
    let pf = rho.matrix().scale(1.0 - alpha) + eye.scale(alpha);
    ensure_psd(&pf)?;
    ensure_psd(&(eye - rho.matrix()).scale(1.0 - alpha))?;
    Ok(PostSelection { alpha, pf })
}

fn check_observable(o: &ComplexSquareMatrix, rho: &DensityMatrix) -> Result<()> {
    if o.nrows() != o.ncols() {
        return Err(Error::NotSquare { rows: o.nrows(), cols: o.ncols() });
    }
    if o.nrows() != rho.dim() {
        return Err(Error::DimensionMismatch { expected: rho.dim(), found: o.nrows() });
    }
    let deviation = hermitian_deviation(o);
    if deviation > tolerance::HERMITIAN {
        return Err(Error::NotHermitian { deviation, tolerance: tolerance::HERMITIAN });
    }
    Ok(())
}

/// ⟨O⟩_w = tr(P_f O ρ) / tr(P_f ρ).
pub fn weak_expect(o: &ComplexSquareMatrix, rho: &DensityMatrix, ps: &PostSelection) -> Result<f64> {
    check_observable(o, rho)?;
    if ps.pf.nrows() != rho.dim() {
        return Err(Error::DimensionMismatch { expected: rho.dim(), found: ps.pf.nrows() });
    }
    let denominator = trace_of_product(&ps.pf, rho.matrix()).re;
    if denominator <= tolerance::WEAK_DENOMINATOR {
        return Err(Error::TraceOrthogonal(denominator));
    }
    // P_f commutes with ρ, so the numerator is real up to rounding.
    let numerator = trace_of_product(&(&ps.pf * o), rho.matrix()).re;
    Ok(numerator / denominator)
}

/// Qubit closed form ⟨O⟩_w = [(1−α)tr(Oρ²) + α⟨O⟩] / [(1−α)tr(ρ²) + α]
/// for O = (Π₊ − Π₋) ⊗ I.
pub fn qubit_weak_value(rho: &DensityMatrix, m: QubitMeasurement, alpha: f64) -> Result<f64> {
    if rho.dim_a() != 2 {
        return Err(Error::QubitRequired(rho.dim_a()));
    }
    check_alpha(alpha)?;
    let o = m.observable(rho.dim_b());
    let rho_sq = rho.matrix() * rho.matrix();
    let o_rho_sq = trace_of_product(&o, &rho_sq).re;
    let mean = expect(&o, rho)?;
    Ok(((1.0 - alpha) * o_rho_sq + alpha * mean) / ((1.0 - alpha) * purity(rho) + alpha))
}

/// tr(Oρ²) = ⟨O⟩·tr(ρ²) within the coincidence tolerance; when it holds the
/// weak value of O equals its expectation for every α.
pub fn coincidence_condition(rho: &DensityMatrix, o: &ComplexSquareMatrix) -> Result<bool> {
    Ok(coincidence_gap(rho, o)? <= tolerance::COINCIDENCE)
}

/// |tr(Oρ²) − ⟨O⟩·tr(ρ²)|.
pub fn coincidence_gap(rho: &DensityMatrix, o: &ComplexSquareMatrix) -> Result<f64> {
    let mean = expect(o, rho)?;
    let rho_sq = rho.matrix() * rho.matrix();
    Ok((trace_of_product(o, &rho_sq).re - mean * purity(rho)).abs())
}

/// O = Σ a_k Π_k ⊗ I_B given by a complete set of orthogonal projectors on A
/// and distinct eigenvalues.
#[derive(Debug, Clone)]
pub struct WeakObservable {
    projectors: Vec<ComplexSquareMatrix>,
    eigenvalues: Vec<f64>,
}

const PROJECTOR_TOLERANCE: f64 = 1e-12;

impl WeakObservable {
    pub fn new(projectors: Vec<ComplexSquareMatrix>, eigenvalues: Vec<f64>) -> Result<Self> {
        let d = projectors.len();
        if d == 0 || eigenvalues.len() != d {
            return Err(Error::InvalidObservable(format!(
                "{d} projectors but {} eigenvalues",
                eigenvalues.len()
            )));
        }
        let mut total = ComplexSquareMatrix::zeros(d, d);
        for (j, pj) in projectors.iter().enumerate() {
            if pj.nrows() != d || pj.ncols() != d {
                return Err(Error::InvalidObservable(format!("projector {j} is not {d}x{d}")));
            }
            for (k, pk) in projectors.iter().enumerate() {
                let target = if j == k { pk.clone() } else { ComplexSquareMatrix::zeros(d, d) };
                if (pj * pk - target).camax() > PROJECTOR_TOLERANCE {
                    return Err(Error::InvalidObservable(format!("projectors {j} and {k} are not orthogonal")));
                }
            }
            total += pj;
        }
        if (total - identity(d)).camax() > PROJECTOR_TOLERANCE {
            return Err(Error::InvalidObservable("projectors do not sum to the identity".into()));
        }
        for j in 0..d {
            for k in j + 1..d {
                if eigenvalues[j] == eigenvalues[k] {
                    return Err(Error::InvalidObservable(format!("eigenvalue {} repeated", eigenvalues[j])));
                }
            }
        }
        Ok(Self { projectors, eigenvalues })
    }

    /// Eigenvalues a_k = k for k = 0..d_A−1.
    pub fn with_integer_eigenvalues(projectors: Vec<ComplexSquareMatrix>) -> Result<Self> {
        let eigenvalues = (0..projectors.len()).map(|k| k as f64).collect();
        Self::new(projectors, eigenvalues)
    }

    /// (Π₊, Π₋) with eigenvalues (+1, −1).
    pub fn from_measurement(m: QubitMeasurement) -> Self {
        Self {
            projectors: vec![m.projector(Outcome::Plus), m.projector(Outcome::Minus)],
            eigenvalues: vec![1.0, -1.0],
        }
    }

    pub fn projectors(&self) -> &[ComplexSquareMatrix] {
        &self.projectors
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn dim_a(&self) -> usize {
        self.projectors.len()
    }

    /// O^n = Σ a_k^n Π_k ⊗ I_B.
    pub fn power(&self, n: u32, dim_b: usize) -> ComplexSquareMatrix {
        let d = self.dim_a();
        let mut local = ComplexSquareMatrix::zeros(d, d);
        for (p, &a) in self.projectors.iter().zip(&self.eigenvalues) {
            local += p.scale(a.powi(n as i32));
        }
        tensor_product(&local, &identity(dim_b))
    }

    fn is_signed_qubit(&self) -> bool {
        self.eigenvalues == [1.0, -1.0]
    }
}

/// Weak outcome probabilities and whether they all lie in [0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct WeakProbabilities {
    pub probs: Vec<f64>,
    pub valid: bool,
}

/// Solves ⟨O^n⟩_w = Σ_k a_k^n p_k^w for n = 0..d_A−1. A qubit observable
/// with eigenvalues ±1 uses p± = (1 ± ⟨O⟩_w)/2.
pub fn weak_probabilities(rho: &DensityMatrix, wo: &WeakObservable, ps: &PostSelection) -> Result<WeakProbabilities> {
    let d = wo.dim_a();
    if d != rho.dim_a() {
        return Err(Error::DimensionMismatch { expected: rho.dim_a(), found: d });
    }
    let probs = if wo.is_signed_qubit() {
        let w = weak_expect(&wo.power(1, rho.dim_b()), rho, ps)?;
        vec![0.5 * (1.0 + w), 0.5 * (1.0 - w)]
    } else {
        let moments = (0..d as u32)
            .map(|n| weak_expect(&wo.power(n, rho.dim_b()), rho, ps))
            .collect::<Result<Vec<_>>>()?;
        solve_moments(wo.eigenvalues(), &moments)?
    };
    let slack = tolerance::PROBABILITY_SLACK;
    let valid = probs.iter().all(|p| (-slack..=1.0 + slack).contains(p));
    Ok(WeakProbabilities { probs, valid })
}

/// Gaussian elimination (LU with partial pivoting) on the Vandermonde
/// system V p = m, V[n][k] = a_k^n.
fn solve_moments(nodes: &[f64], moments: &[f64]) -> Result<Vec<f64>> {
    let d = nodes.len();
    let v = DMatrix::from_fn(d, d, |n, k| nodes[k].powi(n as i32));
    let lu = v.clone().lu();
    let inverse = lu.try_inverse().ok_or(Error::IllConditioned(f64::INFINITY))?;
    let norm1 = |m: &DMatrix<f64>| m.column_iter().map(|c| c.abs().sum()).fold(0.0, f64::max);
    let condition = norm1(&v) * norm1(&inverse);
    if !condition.is_finite() || condition > tolerance::MAX_CONDITION {
        return Err(Error::IllConditioned(condition));
    }
    let solution = lu.solve(&DVector::from_column_slice(moments)).ok_or(Error::IllConditioned(condition))?;
    Ok(solution.iter().copied().collect())
}

/// Weak discord evaluated at one α.
#[derive(Debug, Clone)]
pub struct WeakDiscordResult {
    pub alpha: f64,
    /// Weak probabilities for (Π₊, Π₋) of the optimal measurement.
    pub weak_probs: Vec<f64>,
    /// `None` when a weak probability falls outside [0, 1].
    pub weak_discord: Option<f64>,
    pub coincides: bool,
    pub prob_valid: bool,
}

/// D_w = S(A) − S(AB) + Σ_k p_k^w S(ρ_B|a_k), using the measurement that
/// maximizes J. Runs the discord optimizer first.
pub fn weak_discord(rho: &DensityMatrix, alpha: f64) -> Result<WeakDiscordResult> {
    check_alpha(alpha)?;
    let d = discord(rho)?;
    weak_discord_with(rho, &d, alpha)
}

/// As [`weak_discord`], reusing the optimal measurement and conditioned
/// entropies of an existing discord evaluation of the same state.
pub fn weak_discord_with(rho: &DensityMatrix, d: &DiscordResult, alpha: f64) -> Result<WeakDiscordResult> {
    if rho.dim_a() != 2 {
        return Err(Error::QubitRequired(rho.dim_a()));
    }
    let ps = make_post_selection(rho, alpha)?;
    let wo = WeakObservable::from_measurement(d.optimal);
    let wp = weak_probabilities(rho, &wo, &ps)?;
    let coincides = coincidence_condition(rho, &wo.power(1, rho.dim_b()))?;
    let weak_discord = wp.valid.then(|| {
        let conditioned: f64 = wp.probs.iter().zip(&d.cond_entropies).map(|(p, s)| p * s).sum();
        d.entropy_a - d.entropy_ab + conditioned
    });
    Ok(WeakDiscordResult { alpha, weak_probs: wp.probs, weak_discord, coincides, prob_valid: wp.valid })
}

/// ρ' = P_f ρ P_f† / tr(P_f ρ P_f†), the state after the post-selection.
pub fn post_measurement_state(rho: &DensityMatrix, alpha: f64) -> Result<DensityMatrix> {
    let ps = make_post_selection(rho, alpha)?;
    let updated = &ps.pf * rho.matrix() * ps.pf.adjoint();
    let norm = qcore::trace(&updated).re;
    if norm <= tolerance::WEAK_DENOMINATOR {
        return Err(Error::TraceOrthogonal(norm));
    }
    DensityMatrix::new(hermitian_part(&updated).unscale(norm), rho.dim_a(), rho.dim_b())
}

/// I(A:B) − [S(ρ_B) − S(ρ'_B)] with ρ' the post-selected state. Not the
/// weak discord used elsewhere in this crate; it ignores what the
/// measurement reveals about A.
pub fn alternative_weak_discord(rho: &DensityMatrix, alpha: f64) -> Result<f64> {
    let updated = post_measurement_state(rho, alpha)?;
    let sa = vn_entropy(&partial_trace(rho, Subsystem::A)?)?;
    let sb = vn_entropy(&partial_trace(rho, Subsystem::B)?)?;
    let sab = vn_entropy(rho)?;
    let sb_after = vn_entropy(&partial_trace(&updated, Subsystem::B)?)?;
    let mutual_info = sa + sb - sab;
    Ok(mutual_info - (sb - sb_after))
}

/// p_f = tr(P_f ρ P_f†), the probability that the post-selection succeeds.
pub fn disturbance_probability(rho: &DensityMatrix, alpha: f64) -> Result<f64> {
    let ps = make_post_selection(rho, alpha)?;
    let updated = &ps.pf * rho.matrix() * ps.pf.adjoint();
    Ok(qcore::trace(&updated).re)
}
