//! Constructors and samplers for the state families studied here, with the
//! closed forms known for Bell-diagonal states.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::qcore::{
    ensure_unitary, hermitian_part, identity, pauli, tensor_product, ComplexSquareMatrix, DensityMatrix,
};

const SIMPLEX_SLACK: f64 = 1e-12;

/// Correlation coefficients of ¼(I⊗I + Σ c_j σ_j⊗σ_j).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellDiagonalParams {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl BellDiagonalParams {
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self> {
        let p = Self { c1, c2, c3 };
        p.validate()?;
        Ok(p)
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.c1, self.c2, self.c3]
    }

    /// Accepts every triple whose state is positive semi-definite: all λ_ab
    /// ≥ 0, a tetrahedron with the Bell states at its vertices. It contains
    /// the octahedron |c1|+|c2|+|c3| ≤ 1.
    fn validate(&self) -> Result<()> {
        let c = self.as_array();
        if c.iter().any(|x| !x.is_finite()) {
            return Err(Error::SimplexViolation(f64::NAN));
        }
        let min = self.eigenvalues().into_iter().fold(f64::INFINITY, f64::min);
        if min < -SIMPLEX_SLACK {
            return Err(Error::SimplexViolation(min));
        }
        Ok(())
    }

    /// Uniform sample from the octahedron |c1|+|c2|+|c3| ≤ 1.
    pub fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let c: [f64; 3] = std::array::from_fn(|_| rng.random_range(-1.0..=1.0));
            if c.iter().map(|x| x.abs()).sum::<f64>() <= 1.0 {
                return Self { c1: c[0], c2: c[1], c3: c[2] };
            }
        }
    }

    /// λ_ab = ¼[1 + (−1)^a c1 − (−1)^(a+b) c2 + (−1)^b c3], ordered ab = 00, 01, 10, 11.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let sign = |k: u32| if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        let mut out = [0.0; 4];
        for a in 0..2u32 {
            for b in 0..2u32 {
                out[(2 * a + b) as usize] =
                    0.25 * (1.0 + sign(a) * self.c1 - sign(a + b) * self.c2 + sign(b) * self.c3);
            }
        }
        out
    }

    /// Index (1, 2, 3) of the largest |c_j|, smallest index on ties.
    pub fn strongest_axis(&self) -> usize {
        let c = self.as_array();
        let mut best = 0;
        for j in 1..3 {
            if c[j].abs() > c[best].abs() {
                best = j;
            }
        }
        best + 1
    }
}

/// Closed-form correlations of a Bell-diagonal state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellAnalytics {
    pub mutual_info: f64,
    pub max_j: f64,
    pub discord: f64,
}

pub fn bell_diagonal(p: BellDiagonalParams) -> Result<DensityMatrix> {
    p.validate()?;
    let mut m = identity(4);
    for (j, c) in p.as_array().into_iter().enumerate() {
        let s = pauli(j + 1);
        m += tensor_product(&s, &s).scale(c);
    }
    DensityMatrix::new(m.scale(0.25), 2, 2)
}

fn xlog2x(x: f64) -> f64 {
    if x > 0.0 {
        x * x.log2()
    } else {
        0.0
    }
}

/// I = Σ λ log₂(4λ); max J = ½[(1+c)log₂(1+c) + (1−c)log₂(1−c)] with c = max|c_j|.
pub fn bell_analytics(p: BellDiagonalParams) -> Result<BellAnalytics> {
    p.validate()?;
    let mutual_info: f64 = p.eigenvalues().iter().map(|&l| if l > 0.0 { l * (4.0 * l).log2() } else { 0.0 }).sum();
    let cs = p.as_array()[p.strongest_axis() - 1].abs().min(1.0);
    let max_j = 0.5 * (xlog2x(1.0 + cs) + xlog2x(1.0 - cs));
    Ok(BellAnalytics { mutual_info, max_j, discord: mutual_info - max_j })
}

/// Werner state: Bell-diagonal with c1 = c2 = c3 = c, requires 3|c| ≤ 1.
pub fn werner(c: f64) -> Result<DensityMatrix> {
    if c.is_nan() || 3.0 * c.abs() > 1.0 + SIMPLEX_SLACK {
        return Err(Error::SimplexViolation(3.0 * c.abs()));
    }
    bell_diagonal(BellDiagonalParams::new(c, c, c)?)
}

/// Haar-random unitary from the QR decomposition of a complex Ginibre
/// matrix, with the phases of diag(R) absorbed into Q.
pub fn haar_unitary(dim: usize, seed: u64) -> ComplexSquareMatrix {
    haar_unitary_with(dim, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn haar_unitary_with<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexSquareMatrix {
    assert!(dim >= 1, "unitary dimension must be positive");
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let ginibre = DMatrix::from_fn(dim, dim, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re * scale, im * scale)
    });
    let qr = ginibre.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..dim {
        let d = r[(j, j)];
        let n = d.norm();
        let phase = if n > 0.0 { d / n } else { Complex64::new(1.0, 0.0) };
        q.column_mut(j).iter_mut().for_each(|z| *z *= phase);
    }
    q
}

/// Rank and seed of a random two-qubit mixed state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomStateSpec {
    pub rank: usize,
    pub seed: u64,
}

impl RandomStateSpec {
    pub fn new(rank: usize, seed: u64) -> Result<Self> {
        if !(1..=4).contains(&rank) {
            return Err(Error::InvalidRank(rank));
        }
        Ok(Self { rank, seed })
    }
}

/// Two-qubit state U·diag(λ)·U† with `rank` nonzero weights drawn i.i.d.
/// Uniform(0, 1) and normalized, conjugated by a Haar unitary.
pub fn random_mixed(spec: RandomStateSpec) -> Result<DensityMatrix> {
    let spec = RandomStateSpec::new(spec.rank, spec.seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut weights = [0.0f64; 4];
    for w in weights.iter_mut().take(spec.rank) {
        // Uniform on (0, 1]; the lower end is excluded so the rank is exact.
        *w = 1.0 - rng.random::<f64>();
    }
    let total: f64 = weights.iter().sum();
    let diag = DVector::from_iterator(4, weights.iter().map(|w| Complex64::new(w / total, 0.0)));
    let u = haar_unitary_with(4, &mut rng);
    let rho = &u * DMatrix::from_diagonal(&diag) * u.adjoint();
    DensityMatrix::new(hermitian_part(&rho), 2, 2)
}

/// Haar-random pure state on C^dimA ⊗ C^dimB.
pub fn random_pure(dim_a: usize, dim_b: usize, seed: u64) -> Result<DensityMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let psi: Vec<Complex64> = (0..dim_a * dim_b)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(re, im)
        })
        .collect();
    DensityMatrix::from_pure(&psi, dim_a, dim_b)
}

/// One-clean-qubit state 2^-(n+1) [ |0⟩⟨0|⊗I + |1⟩⟨1|⊗I + |0⟩⟨1|⊗U† + |1⟩⟨0|⊗U ]
/// for a unitary U on n register qubits.
pub fn dqc1(u: &ComplexSquareMatrix) -> Result<DensityMatrix> {
    ensure_unitary(u)?;
    let d = u.nrows();
    if !d.is_power_of_two() {
        return Err(Error::InvalidConfig(format!("register dimension {d} is not a power of two")));
    }
    let norm = 1.0 / (2 * d) as f64;
    let mut m = DMatrix::zeros(2 * d, 2 * d);
    let eye = identity(d).scale(norm);
    m.view_mut((0, 0), (d, d)).copy_from(&eye);
    m.view_mut((d, d), (d, d)).copy_from(&eye);
    m.view_mut((0, d), (d, d)).copy_from(&u.adjoint().scale(norm));
    m.view_mut((d, 0), (d, d)).copy_from(&u.scale(norm));
    DensityMatrix::new(m, 2, d)
}

/// DQC1 state for a Haar-random unitary on `register_qubits` qubits.
pub fn random_dqc1(register_qubits: u32, seed: u64) -> Result<DensityMatrix> {
    dqc1(&haar_unitary(1usize << register_qubits, seed))
}
