//! Global minimization of a smooth function on the Bloch sphere: a coarse
//! (θ, φ) grid over the upper hemisphere followed by Nelder–Mead refinement
//! from the best grid points.

use std::f64::consts::{FRAC_PI_2, PI};

use rayon::prelude::*;

pub const GRID_THETA: usize = 64;
pub const GRID_PHI: usize = 128;
pub const REFINE_STARTS: usize = 5;
pub const REFINE_TOLERANCE: f64 = 1e-10;
const REFINE_DIAMETER: f64 = 1e-6;
const REFINE_MAX_ITER: usize = 1000;
/// Candidates whose values differ by less than this are considered tied.
const TIE: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Optimum {
    pub theta: f64,
    pub phi: f64,
    pub value: f64,
}

/// Grid nodes: θ_i = i·(π/2)/(GRID_THETA−1), φ_j = 2πj/GRID_PHI. The pole
/// keeps a single node and the equator keeps only φ < π, since the
/// antipodal pair (π−θ, φ+π) gives the same value.
pub(crate) fn hemisphere_grid() -> Vec<(f64, f64)> {
    let dtheta = FRAC_PI_2 / (GRID_THETA - 1) as f64;
    let dphi = 2.0 * PI / GRID_PHI as f64;
    let mut nodes = Vec::with_capacity(GRID_THETA * GRID_PHI);
    for i in 0..GRID_THETA {
        let theta = i as f64 * dtheta;
        let n_phi = match i {
            0 => 1,
            _ if i == GRID_THETA - 1 => GRID_PHI / 2,
            _ => GRID_PHI,
        };
        for j in 0..n_phi {
            nodes.push((theta, j as f64 * dphi));
        }
    }
    nodes
}

/// Maps any (θ, φ) to the same axis up to sign with θ ∈ [0, π/2] and
/// φ ∈ [0, 2π). Axes on the equator keep φ ∈ [0, π).
pub(crate) fn fold_to_hemisphere(theta: f64, phi: f64) -> (f64, f64) {
    let mut theta = theta.rem_euclid(2.0 * PI);
    let mut phi = phi;
    if theta > PI {
        theta = 2.0 * PI - theta;
        phi += PI;
    }
    if theta > FRAC_PI_2 {
        theta = PI - theta;
        phi += PI;
    }
    let mut phi = phi.rem_euclid(2.0 * PI);
    if theta == FRAC_PI_2 && phi >= PI {
        phi -= PI;
    }
    if theta == 0.0 {
        phi = 0.0;
    }
    (theta, phi)
}

fn better(a: &Optimum, b: &Optimum) -> bool {
    if (a.value - b.value).abs() > TIE {
        return a.value < b.value;
    }
    (a.theta, a.phi) < (b.theta, b.phi)
}

/// Minimizes `f(θ, φ)` over the sphere. `parallel` evaluates the grid on
/// the rayon pool; the result does not depend on it.
pub(crate) fn minimize_on_sphere<F>(f: F, parallel: bool) -> Optimum
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    let grid = hemisphere_grid();
    let values: Vec<f64> = if parallel {
        grid.par_iter().map(|&(t, p)| f(t, p)).collect()
    } else {
        grid.iter().map(|&(t, p)| f(t, p)).collect()
    };

    let mut order: Vec<usize> = (0..grid.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));

    let step = [FRAC_PI_2 / (GRID_THETA - 1) as f64, 2.0 * PI / GRID_PHI as f64];
    let mut best: Option<Optimum> = None;
    for &k in order.iter().take(REFINE_STARTS) {
        let (t0, p0) = grid[k];
        let (x, value) = nelder_mead(|x| f(x[0], x[1]), [t0, p0], step, REFINE_TOLERANCE);
        let (theta, phi) = fold_to_hemisphere(x[0], x[1]);
        let candidate = Optimum { theta, phi, value };
        if best.as_ref().is_none_or(|b| better(&candidate, b)) {
            best = Some(candidate);
        }
    }
    best.expect("grid is never empty")
}

/// Nelder–Mead in two dimensions with the standard coefficients
/// (reflection 1, expansion 2, contraction ½, shrink ½). Stops when the
/// simplex values agree within `tol` and its diameter is below 1e-6.
pub(crate) fn nelder_mead<F>(f: F, start: [f64; 2], step: [f64; 2], tol: f64) -> ([f64; 2], f64)
where
    F: Fn([f64; 2]) -> f64,
{
    let mut simplex = [start, [start[0] + step[0], start[1]], [start[0], start[1] + step[1]]];
    let mut values = simplex.map(&f);

    for _ in 0..REFINE_MAX_ITER {
        // Sort vertices by value; stable on ties so the start vertex stays first.
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        simplex = idx.map(|i| simplex[i]);
        values = idx.map(|i| values[i]);

        let spread = values[2] - values[0];
        let diameter = (1..3)
            .map(|i| ((simplex[i][0] - simplex[0][0]).powi(2) + (simplex[i][1] - simplex[0][1]).powi(2)).sqrt())
            .fold(0.0, f64::max);
        if spread <= tol && diameter <= REFINE_DIAMETER {
            break;
        }

        let centroid = [(simplex[0][0] + simplex[1][0]) / 2.0, (simplex[0][1] + simplex[1][1]) / 2.0];
        let toward = |coef: f64| {
            [
                centroid[0] + coef * (simplex[2][0] - centroid[0]),
                centroid[1] + coef * (simplex[2][1] - centroid[1]),
            ]
        };

        let reflected = toward(-1.0);
        let fr = f(reflected);
        if fr < values[0] {
            let expanded = toward(-2.0);
            let fe = f(expanded);
            if fe < fr {
                simplex[2] = expanded;
                values[2] = fe;
            } else {
                simplex[2] = reflected;
                values[2] = fr;
            }
            continue;
        }
        if fr < values[1] {
            simplex[2] = reflected;
            values[2] = fr;
            continue;
        }
        let (contracted, fc) = if fr < values[2] {
            let x = toward(-0.5);
            (x, f(x))
        } else {
            let x = toward(0.5);
            (x, f(x))
        };
        if fc < values[2].min(fr) {
            simplex[2] = contracted;
            values[2] = fc;
            continue;
        }
        for i in 1..3 {
            simplex[i] = [
                simplex[0][0] + 0.5 * (simplex[i][0] - simplex[0][0]),
                simplex[0][1] + 0.5 * (simplex[i][1] - simplex[0][1]),
            ];
            values[i] = f(simplex[i]);
        }
    }

    let best = (0..3).min_by(|&a, &b| values[a].total_cmp(&values[b])).unwrap();
    (simplex[best], values[best])
}
