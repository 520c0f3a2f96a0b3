use std::cmp::Ordering;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use crate::matcore::{c, ComplexMatrix};

/// A Bloch-sphere axis defining the projective measurement
/// `P_0 = (I + n·σ)/2`, `P_1 = (I - n·σ)/2`.
///
/// `n` and `-n` give the same measurement, so axes are kept on the upper
/// hemisphere: `theta` in `[0, π/2]`, `phi` in `[0, 2π)`, and `phi = 0` at
/// the pole.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasurementAxis {
    theta: f64,
    phi: f64,
}

impl MeasurementAxis {
    /// The computational (σ_z) axis.
    pub const Z: MeasurementAxis = MeasurementAxis {
        theta: 0.0,
        phi: 0.0,
    };

    /// Canonicalizes arbitrary angles onto the upper hemisphere.
    pub fn new(theta: f64, phi: f64) -> Self {
        Self::from_vector(spherical(theta, phi))
    }

    pub fn from_vector(n: [f64; 3]) -> Self {
        let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        assert!(
            norm > 0.0 && norm.is_finite(),
            "axis vector must be nonzero and finite"
        );
        let mut n = [n[0] / norm, n[1] / norm, n[2] / norm];
        if n[2] < 0.0 {
            n = [-n[0], -n[1], -n[2]];
        }
        let theta = n[2].clamp(-1.0, 1.0).acos().min(FRAC_PI_2);
        let rho = (n[0] * n[0] + n[1] * n[1]).sqrt();
        let mut phi = if rho <= 1e-15 {
            0.0
        } else {
            n[1].atan2(n[0]).rem_euclid(TAU)
        };
        if phi >= TAU {
            phi = 0.0;
        }
        let theta = if rho <= 1e-15 { 0.0 } else { theta };
        Self { theta, phi }
    }

    /// Uses the angles as given. Callers guarantee they are canonical.
    pub(crate) const fn from_canonical(theta: f64, phi: f64) -> Self {
        Self { theta, phi }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// `(sinθ cosφ, sinθ sinφ, cosθ)`
    pub fn unit_vector(&self) -> [f64; 3] {
        spherical(self.theta, self.phi)
    }

    /// Orthonormal eigenbasis `(|n+>, |n->)` of `n·σ`.
    pub fn basis(&self) -> [[Complex64; 2]; 2] {
        let (s, co) = (0.5 * self.theta).sin_cos();
        let e = Complex64::from_polar(1.0, self.phi);
        [[c(co, 0.0), e * s], [c(s, 0.0), -e * co]]
    }

    /// `P_outcome = (I + (-1)^outcome n·σ)/2`
    pub fn projector(&self, outcome: usize) -> ComplexMatrix {
        let [x, y, z] = self.unit_vector();
        let sign = if outcome == 0 { 1.0 } else { -1.0 };
        ComplexMatrix::from_fn(2, |i, j| {
            let pauli = match (i, j) {
                (0, 0) => c(z, 0.0),
                (0, 1) => c(x, -y),
                (1, 0) => c(x, y),
                _ => c(-z, 0.0),
            };
            let id = if i == j { c(1.0, 0.0) } else { c(0.0, 0.0) };
            (id + pauli * sign) * 0.5
        })
    }

    /// Whether both axes define the same measurement, up to `tol` in `1 - |n·n'|`.
    pub fn same_measurement(&self, other: &MeasurementAxis, tol: f64) -> bool {
        let (u, v) = (self.unit_vector(), other.unit_vector());
        let dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
        1.0 - dot.abs() <= tol
    }

    /// Order used to break ties: smaller `theta`, then smaller `phi`.
    pub fn canonical_cmp(&self, other: &MeasurementAxis) -> Ordering {
        self.theta
            .total_cmp(&other.theta)
            .then(self.phi.total_cmp(&other.phi))
    }
}

impl Default for MeasurementAxis {
    fn default() -> Self {
        Self::Z
    }
}

fn spherical(theta: f64, phi: f64) -> [f64; 3] {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    [st * cp, st * sp, ct]
}

/// The coarse search grid for one party: `grid_n` polar angles spanning
/// `[0, π/2]` by `2 grid_n` azimuths spanning `[0, 2π)`, in scan order
/// (polar outer, azimuth inner). The pole appears once since every azimuth
/// names the same axis there.
pub fn axis_grid(grid_n: usize) -> Vec<MeasurementAxis> {
    let n_phi = 2 * grid_n;
    let d_theta = FRAC_PI_2 / (grid_n as f64 - 1.0);
    let d_phi = 2.0 * PI / n_phi as f64;
    let mut out = Vec::with_capacity((grid_n - 1) * n_phi + 1);
    out.push(MeasurementAxis::Z);
    for it in 1..grid_n {
        let theta = if it == grid_n - 1 {
            FRAC_PI_2
        } else {
            it as f64 * d_theta
        };
        for ip in 0..n_phi {
            out.push(MeasurementAxis::from_canonical(theta, ip as f64 * d_phi));
        }
    }
    out
}
