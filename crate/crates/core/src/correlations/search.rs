//! Minimization of the dissonance objective over product measurement bases.
//!
//! The pinched state `Π(rho)` is diagonal in the product basis, with
//! eigenvalues equal to the outcome probabilities
//! `p(i, j) = <e_i f_j| rho |e_i f_j>`. The search evaluates
//! `H(p) - S(rho)` directly from those probabilities: fixing the A axis
//! gives two conditional operators `M_i = <e_i| rho |e_i>` on B, and then
//! `p(i, j) = (t_i + s_j v_i·n_B) / 2` in their Bloch form. This is the
//! same quantity as [`classical_objective`](super::classical_objective)
//! without a 4x4 eigendecomposition per point.

use std::cmp::Ordering;
use std::f64::consts::FRAC_PI_2;

use rayon::prelude::*;

use super::axis::{axis_grid, MeasurementAxis};
use super::dephase::{clamp_round_off, dephase, require_two_qubit, ClassicalState};
use super::simplex::{nelder_mead, SimplexOptions};
use crate::error::{Error, Result};
use crate::matcore::{neg_xlog2x, vn_entropy, DensityMatrix};

/// Objective values within this distance of the minimum count as ties.
pub const TIE_TOL: f64 = 1e-12;

/// Number of distinct grid minima refined by the simplex descent.
pub const REFINE_STARTS: usize = 5;

/// Smallest accepted `grid_n`.
pub const MIN_GRID_N: usize = 8;

const SIMPLEX: SimplexOptions = SimplexOptions {
    spread_tol: 1e-8,
    max_iterations: 500,
};

/// Bloch form `(t I + v·σ)/2` of one conditional operator on B.
#[derive(Debug, Clone, Copy)]
struct Conditional {
    t: f64,
    v: [f64; 3],
}

impl Conditional {
    #[inline]
    fn entropy_given(&self, n: &[f64; 3]) -> f64 {
        let proj = self.v[0] * n[0] + self.v[1] * n[1] + self.v[2] * n[2];
        neg_xlog2x(0.5 * (self.t + proj)) + neg_xlog2x(0.5 * (self.t - proj))
    }
}

/// Evaluates `H(p(axis_a, axis_b))` for a fixed two-qubit state.
struct PinchedEntropy<'a> {
    rho: &'a DensityMatrix,
    /// `S(rho)`, the lower bound of `H(p)`.
    floor: f64,
}

impl PinchedEntropy<'_> {
    fn conditionals(&self, axis_a: &MeasurementAxis) -> [Conditional; 2] {
        let m = self.rho.matrix();
        axis_a.basis().map(|e| {
            // M[j, l] = sum_{k, r} conj(e_k) rho[(k j), (r l)] e_r
            let mut blk = [[num_complex::Complex64::new(0.0, 0.0); 2]; 2];
            for (j, row) in blk.iter_mut().enumerate() {
                for (l, out) in row.iter_mut().enumerate() {
                    for k in 0..2 {
                        for r in 0..2 {
                            *out += e[k].conj() * m[(2 * k + j, 2 * r + l)] * e[r];
                        }
                    }
                }
            }
            Conditional {
                t: blk[0][0].re + blk[1][1].re,
                v: [
                    2.0 * blk[0][1].re,
                    -2.0 * blk[0][1].im,
                    blk[0][0].re - blk[1][1].re,
                ],
            }
        })
    }

    fn eval(&self, axis_a: &MeasurementAxis, axis_b: &MeasurementAxis) -> f64 {
        let cond = self.conditionals(axis_a);
        let n = axis_b.unit_vector();
        cond[0].entropy_given(&n) + cond[1].entropy_given(&n)
    }
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    value: f64,
    a: MeasurementAxis,
    b: MeasurementAxis,
}

impl Candidate {
    fn axes_cmp(&self, other: &Candidate) -> Ordering {
        self.a
            .canonical_cmp(&other.a)
            .then(self.b.canonical_cmp(&other.b))
    }

    fn same_axes(&self, other: &Candidate) -> bool {
        const SAME: f64 = 1e-12;
        self.a.same_measurement(&other.a, SAME) && self.b.same_measurement(&other.b, SAME)
    }
}

/// Per-row minima of one A axis against every B axis.
struct RowScan {
    min: f64,
    /// Lowest few `(value, b index)`, ordered by value then index.
    best: Vec<(f64, usize)>,
}

const ROW_KEEP: usize = 2 * REFINE_STARTS;

fn scan_row(eval: &PinchedEntropy<'_>, a: &MeasurementAxis, grid_b: &[[f64; 3]]) -> RowScan {
    let cond = eval.conditionals(a);
    let mut best: Vec<(f64, usize)> = Vec::with_capacity(ROW_KEEP + 1);
    let mut min = f64::INFINITY;
    for (ib, n) in grid_b.iter().enumerate() {
        let h = cond[0].entropy_given(n) + cond[1].entropy_given(n);
        min = min.min(h);
        if best.len() < ROW_KEEP || h < best[best.len() - 1].0 {
            let pos = best.partition_point(|&(v, _)| v <= h);
            best.insert(pos, (h, ib));
            best.truncate(ROW_KEEP);
        }
    }
    RowScan { min, best }
}

/// Minimizes `S(rho ‖ Π(rho))` over product measurement bases.
///
/// A coarse `grid_n x 2 grid_n` grid per party is scanned exhaustively.
/// With `refine`, the [`REFINE_STARTS`] lowest distinct grid points seed a
/// Nelder-Mead descent in `(theta_a, phi_a, theta_b, phi_b)`. Among all
/// candidates within [`TIE_TOL`] of the lowest value the one with the
/// smallest canonical axes wins, so the result does not depend on
/// evaluation order.
pub fn closest_classical(
    rho: &DensityMatrix,
    grid_n: usize,
    refine: bool,
) -> Result<(ClassicalState, f64)> {
    require_two_qubit(rho)?;
    if grid_n < MIN_GRID_N {
        return Err(Error::InvalidConfig(format!(
            "grid_n must be at least {MIN_GRID_N}, got {grid_n}"
        )));
    }
    let s_rho = vn_entropy(rho)?;
    let eval = PinchedEntropy { rho, floor: s_rho };

    let grid = axis_grid(grid_n);
    let grid_vecs: Vec<[f64; 3]> = grid.iter().map(|a| a.unit_vector()).collect();
    let rows: Vec<RowScan> = grid
        .par_iter()
        .map(|a| scan_row(&eval, a, &grid_vecs))
        .collect();

    let global_min = rows.iter().map(|r| r.min).fold(f64::INFINITY, f64::min);
    if !global_min.is_finite() {
        return Err(Error::InvalidConfig(
            "objective is not finite on the grid".into(),
        ));
    }

    // First grid point in scan order within the tie window.
    let grid_best = rows
        .iter()
        .enumerate()
        .find(|(_, r)| r.min <= global_min + TIE_TOL)
        .map(|(ia, _)| {
            let cond = eval.conditionals(&grid[ia]);
            let ib = grid_vecs
                .iter()
                .position(|n| {
                    cond[0].entropy_given(n) + cond[1].entropy_given(n) <= global_min + TIE_TOL
                })
                .expect("row attains its minimum");
            Candidate {
                value: eval.eval(&grid[ia], &grid[ib]),
                a: grid[ia],
                b: grid[ib],
            }
        })
        .expect("grid is non-empty");

    let mut candidates = vec![grid_best];
    if refine {
        let mut pool: Vec<(f64, usize, usize)> = rows
            .iter()
            .enumerate()
            .flat_map(|(ia, r)| r.best.iter().map(move |&(v, ib)| (v, ia, ib)))
            .collect();
        pool.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));

        let mut starts: Vec<Candidate> = Vec::with_capacity(REFINE_STARTS);
        for (value, ia, ib) in pool {
            let c = Candidate {
                value,
                a: grid[ia],
                b: grid[ib],
            };
            if starts.iter().all(|s| !s.same_axes(&c)) {
                starts.push(c);
                if starts.len() == REFINE_STARTS {
                    break;
                }
            }
        }

        let step = FRAC_PI_2 / (grid_n as f64 - 1.0);
        for start in starts {
            candidates.push(refine_from(&eval, start, step));
        }
    }

    let lowest = candidates
        .iter()
        .map(|c| c.value)
        .fold(f64::INFINITY, f64::min);
    let winner = candidates
        .iter()
        .filter(|c| c.value <= lowest + TIE_TOL)
        .min_by(|x, y| x.axes_cmp(y))
        .copied()
        .expect("at least the grid candidate");

    let chi = dephase(rho, winner.a, winner.b)?;
    let q = clamp_round_off(vn_entropy(chi.rho())? - s_rho);
    Ok((chi, q))
}

/// Nelder-Mead from a grid point. A converged descent is restarted from
/// its best vertex with a simplex of the size it shrank to, for as long as
/// restarts keep improving and the iteration budget lasts. Restarts stop at
/// a spread of `1e-3` times the current value when that is below the base
/// tolerance: near pure marginals the objective behaves like
/// `δ² log(1/δ²)` and a fixed `1e-8` spread leaves `q` around `1e-9`.
fn refine_from(eval: &PinchedEntropy<'_>, start: Candidate, step: f64) -> Candidate {
    let f = |x: &[f64; 4]| {
        let a = MeasurementAxis::new(x[0], x[1]);
        let b = MeasurementAxis::new(x[2], x[3]);
        eval.eval(&a, &b)
    };
    let mut x = [
        start.a.theta(),
        start.a.phi(),
        start.b.theta(),
        start.b.phi(),
    ];
    let mut fx = start.value;
    let mut step = step;
    let mut spread_tol = SIMPLEX.spread_tol;
    let mut budget = SIMPLEX.max_iterations;
    while budget > 0 {
        let opts = SimplexOptions {
            spread_tol,
            max_iterations: budget,
        };
        let r = nelder_mead(&f, x, step, opts);
        budget -= r.iterations.min(budget);
        let improved = r.f < fx - TIE_TOL;
        if r.f < fx {
            x = r.x;
            fx = r.f;
        }
        if !r.converged || (!improved && r.iterations > 0) {
            break;
        }
        let tighter = (1e-3 * (fx - eval.floor)).clamp(f64::MIN_POSITIVE, SIMPLEX.spread_tol);
        if r.iterations == 0 && tighter >= spread_tol {
            break;
        }
        spread_tol = tighter;
        step = r.size.max(1e-12);
    }
    let a = MeasurementAxis::new(x[0], x[1]);
    let b = MeasurementAxis::new(x[2], x[3]);
    Candidate {
        value: eval.eval(&a, &b),
        a,
        b,
    }
}
