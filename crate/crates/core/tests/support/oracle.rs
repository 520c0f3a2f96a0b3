//! Brute-force reference computations for tests.
//!
//! Nothing here calls into the crate's eigensolver, entropy, dephasing, or
//! search code. States are read only through their raw matrix entries.

#![allow(dead_code, clippy::needless_range_loop)]

use std::f64::consts::{FRAC_PI_2, PI};

/// Raw row-major 4x4 complex entries as `(re, im)` pairs.
pub type Raw4 = [[(f64, f64); 4]; 4];

pub fn raw_entries(m: &dissonance_core::ComplexMatrix) -> Raw4 {
    assert_eq!(m.dim(), 4);
    let mut out = [[(0.0, 0.0); 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            let z = m[(i, j)];
            *e = (z.re, z.im);
        }
    }
    out
}

/// Eigenvalues of a real symmetric matrix by textbook cyclic Jacobi.
pub fn real_symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = 0.5 * (2.0 * a[p][q]).atan2(a[q][q] - a[p][p]);
                let (s, c) = theta.sin_cos();
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut vals: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    vals.sort_by(|x, y| y.total_cmp(x));
    vals
}

/// Eigenvalues of a 4x4 Hermitian matrix via its real 8x8 embedding
/// `[[Re, -Im], [Im, Re]]`, whose spectrum is the Hermitian one doubled.
pub fn hermitian4_eigenvalues(m: &Raw4) -> [f64; 4] {
    let mut big = vec![vec![0.0; 8]; 8];
    for i in 0..4 {
        for j in 0..4 {
            let (re, im) = m[i][j];
            big[i][j] = re;
            big[i + 4][j + 4] = re;
            big[i][j + 4] = -im;
            big[i + 4][j] = im;
        }
    }
    let vals = real_symmetric_eigenvalues(big);
    [vals[0], vals[2], vals[4], vals[6]]
}

pub fn h(x: f64) -> f64 {
    if x > 0.0 {
        -x * x.log2()
    } else {
        0.0
    }
}

pub fn entropy4(m: &Raw4) -> f64 {
    hermitian4_eigenvalues(m)
        .iter()
        .map(|&x| h(x.max(0.0)))
        .sum()
}

/// Pauli decomposition `rho = (I + r_a·σ ⊗ I + I ⊗ r_b·σ + sum T_ij σ_i ⊗ σ_j) / 4`.
#[derive(Debug, Clone, Copy)]
pub struct Bloch {
    pub ra: [f64; 3],
    pub rb: [f64; 3],
    pub t: [[f64; 3]; 3],
}

type C = (f64, f64);

fn cmul(a: C, b: C) -> C {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn pauli(k: usize) -> [[C; 2]; 2] {
    match k {
        0 => [[(1.0, 0.0), (0.0, 0.0)], [(0.0, 0.0), (1.0, 0.0)]],
        1 => [[(0.0, 0.0), (1.0, 0.0)], [(1.0, 0.0), (0.0, 0.0)]],
        2 => [[(0.0, 0.0), (0.0, -1.0)], [(0.0, 1.0), (0.0, 0.0)]],
        _ => [[(1.0, 0.0), (0.0, 0.0)], [(0.0, 0.0), (-1.0, 0.0)]],
    }
}

/// `tr(rho (σ_x ⊗ σ_y))` with index 0 for the identity.
fn expectation(m: &Raw4, x: usize, y: usize) -> f64 {
    let (px, py) = (pauli(x), pauli(y));
    let mut acc = (0.0, 0.0);
    for r in 0..4 {
        for c in 0..4 {
            let op = cmul(px[c / 2][r / 2], py[c % 2][r % 2]);
            let term = cmul(m[r][c], op);
            acc = (acc.0 + term.0, acc.1 + term.1);
        }
    }
    acc.0
}

impl Bloch {
    pub fn of(m: &Raw4) -> Self {
        let mut b = Bloch {
            ra: [0.0; 3],
            rb: [0.0; 3],
            t: [[0.0; 3]; 3],
        };
        for i in 0..3 {
            b.ra[i] = expectation(m, i + 1, 0);
            b.rb[i] = expectation(m, 0, i + 1);
            for j in 0..3 {
                b.t[i][j] = expectation(m, i + 1, j + 1);
            }
        }
        b
    }

    /// Conditional weights for A axis `na`: `(t_i, w_i)` with
    /// `p(i, j) = (t_i + s_j w_i·n_b) / 2`.
    fn conditionals(&self, na: &[f64; 3]) -> [(f64, [f64; 3]); 2] {
        let a_dot = dot(na, &self.ra);
        let mut tn = [0.0; 3];
        for j in 0..3 {
            tn[j] = (0..3).map(|i| na[i] * self.t[i][j]).sum();
        }
        [1.0, -1.0].map(|s| {
            let t = 0.5 * (1.0 + s * a_dot);
            let w = [
                0.5 * (self.rb[0] + s * tn[0]),
                0.5 * (self.rb[1] + s * tn[1]),
                0.5 * (self.rb[2] + s * tn[2]),
            ];
            (t, w)
        })
    }

    /// Joint outcome probabilities, ordered `(+,+), (+,-), (-,+), (-,-)`.
    pub fn probabilities(&self, na: &[f64; 3], nb: &[f64; 3]) -> [f64; 4] {
        let a = dot(na, &self.ra);
        let b = dot(nb, &self.rb);
        let mut corr = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                corr += na[i] * self.t[i][j] * nb[j];
            }
        }
        [
            0.25 * (1.0 + a + b + corr),
            0.25 * (1.0 + a - b - corr),
            0.25 * (1.0 - a + b - corr),
            0.25 * (1.0 - a - b + corr),
        ]
    }

    pub fn pinched_entropy(&self, na: &[f64; 3], nb: &[f64; 3]) -> f64 {
        self.probabilities(na, nb).iter().map(|&p| h(p)).sum()
    }
}

pub fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn unit(theta: f64, phi: f64) -> [f64; 3] {
    [
        theta.sin() * phi.cos(),
        theta.sin() * phi.sin(),
        theta.cos(),
    ]
}

/// Full `grid_n x 2 grid_n` axis grid over `[0, π/2] x [0, 2π)`.
pub fn grid(grid_n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(grid_n * 2 * grid_n);
    for it in 0..grid_n {
        let theta = it as f64 * FRAC_PI_2 / (grid_n as f64 - 1.0);
        for ip in 0..2 * grid_n {
            out.push((theta, ip as f64 * PI / grid_n as f64));
        }
    }
    out
}

#[derive(Debug, Clone, Copy)]
pub struct GridMin {
    pub q: f64,
    pub axis_a: (f64, f64),
    pub axis_b: (f64, f64),
    pub rows_scanned: usize,
}

/// Minimum of `S(Π(rho)) - S(rho)` over the product grid.
///
/// A rows are visited in increasing order of a lower bound (each
/// conditional binary entropy is smallest when `n_b` is parallel to its
/// Bloch vector) and skipped once the bound reaches the best value found,
/// which leaves the minimum unchanged.
pub fn brute_force_min(m: &Raw4, grid_n: usize) -> GridMin {
    let bloch = Bloch::of(m);
    let s_rho = entropy4(m);
    let axes = grid(grid_n);
    let vecs: Vec<[f64; 3]> = axes.iter().map(|&(t, p)| unit(t, p)).collect();

    let mut rows: Vec<(f64, usize)> = vecs
        .iter()
        .enumerate()
        .map(|(ia, na)| {
            let lb: f64 = bloch
                .conditionals(na)
                .iter()
                .map(|(t, w)| {
                    let x = dot(w, w).sqrt();
                    h(0.5 * (t + x)) + h(0.5 * (t - x))
                })
                .sum();
            (lb, ia)
        })
        .collect();
    rows.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));

    let mut best = (f64::INFINITY, 0, 0);
    let mut scanned = 0;
    for (lb, ia) in rows {
        if lb >= best.0 {
            break;
        }
        scanned += 1;
        let cond = bloch.conditionals(&vecs[ia]);
        for (ib, nb) in vecs.iter().enumerate() {
            let mut hsum = 0.0;
            for (t, w) in &cond {
                let x = dot(w, nb);
                hsum += h(0.5 * (t + x)) + h(0.5 * (t - x));
            }
            if hsum < best.0 {
                best = (hsum, ia, ib);
            }
        }
    }
    GridMin {
        q: best.0 - s_rho,
        axis_a: axes[best.1],
        axis_b: axes[best.2],
        rows_scanned: scanned,
    }
}

/// Unpruned reference for [`brute_force_min`], using the plain four-term
/// probability formula.
pub fn exhaustive_min(m: &Raw4, grid_n: usize) -> f64 {
    let bloch = Bloch::of(m);
    let vecs: Vec<[f64; 3]> = grid(grid_n).iter().map(|&(t, p)| unit(t, p)).collect();
    let mut best = f64::INFINITY;
    for na in &vecs {
        for nb in &vecs {
            best = best.min(bloch.pinched_entropy(na, nb));
        }
    }
    best - entropy4(m)
}

/// Trace distance between two 4x4 Hermitian matrices.
pub fn trace_distance4(a: &Raw4, b: &Raw4) -> f64 {
    let mut d = [[(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            d[i][j] = (a[i][j].0 - b[i][j].0, a[i][j].1 - b[i][j].1);
        }
    }
    0.5 * hermitian4_eigenvalues(&d)
        .iter()
        .map(|x| x.abs())
        .sum::<f64>()
}
