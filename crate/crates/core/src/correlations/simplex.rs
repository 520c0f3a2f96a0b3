//! Nelder-Mead simplex descent on `R^N`.

#[derive(Debug, Clone, Copy)]
pub struct SimplexOptions {
    /// Converged once `max f - min f` over the simplex falls below this.
    pub spread_tol: f64,
    pub max_iterations: usize,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        Self {
            spread_tol: 1e-8,
            max_iterations: 500,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SimplexResult<const N: usize> {
    pub x: [f64; N],
    pub f: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Largest distance from the best vertex to another vertex at exit.
    pub size: f64,
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

/// Minimizes `f` from an axis-aligned simplex `x0, x0 + step e_k`.
pub fn nelder_mead<const N: usize>(
    mut f: impl FnMut(&[f64; N]) -> f64,
    x0: [f64; N],
    step: f64,
    opts: SimplexOptions,
) -> SimplexResult<N> {
    let mut pts: Vec<([f64; N], f64)> = Vec::with_capacity(N + 1);
    pts.push((x0, f(&x0)));
    for k in 0..N {
        let mut x = x0;
        x[k] += step;
        pts.push((x, f(&x)));
    }

    let mut iterations = 0;
    let mut converged = false;
    loop {
        // Stable sort keeps earlier vertices first on equal values.
        pts.sort_by(|a, b| a.1.total_cmp(&b.1));
        if pts[N].1 - pts[0].1 < opts.spread_tol {
            converged = true;
            break;
        }
        if iterations >= opts.max_iterations {
            break;
        }
        iterations += 1;

        let mut centroid = [0.0; N];
        for (x, _) in &pts[..N] {
            for k in 0..N {
                centroid[k] += x[k] / N as f64;
            }
        }
        let along = |t: f64, worst: &[f64; N]| {
            let mut x = [0.0; N];
            for k in 0..N {
                x[k] = centroid[k] + t * (worst[k] - centroid[k]);
            }
            x
        };

        let worst = pts[N].0;
        let xr = along(-REFLECT, &worst);
        let fr = f(&xr);
        if fr < pts[0].1 {
            let xe = along(-EXPAND, &worst);
            let fe = f(&xe);
            pts[N] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < pts[N - 1].1 {
            pts[N] = (xr, fr);
        } else {
            let (xc, fc) = if fr < pts[N].1 {
                let xc = along(-CONTRACT, &worst);
                (xc, f(&xc))
            } else {
                let xc = along(CONTRACT, &worst);
                (xc, f(&xc))
            };
            if fc < pts[N].1.min(fr) {
                pts[N] = (xc, fc);
            } else {
                let best = pts[0].0;
                for (x, fx) in pts.iter_mut().skip(1) {
                    for k in 0..N {
                        x[k] = best[k] + SHRINK * (x[k] - best[k]);
                    }
                    *fx = f(x);
                }
            }
        }
    }

    let best = pts[0];
    let size = pts[1..]
        .iter()
        .map(|(x, _)| {
            x.iter()
                .zip(&best.0)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max);
    SimplexResult {
        x: best.0,
        f: best.1,
        iterations,
        converged,
        size,
    }
}
