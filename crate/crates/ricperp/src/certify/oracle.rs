//! Dense direction-grid cross-checks for the sphere certifiers (`n ≤ 3`).
//!
//! The unit sphere modulo phase is swept with the first coordinate real and
//! nonnegative:
//!
//! - `n = 2`: `x = (cos θ, sin θ e^{iφ})`, step 0.02 rad;
//! - `n = 3`: `x = (cos θ₁, sin θ₁ cos θ₂ e^{iφ₁}, sin θ₁ sin θ₂ e^{iφ₂})`,
//!   step 0.08 rad (the four-parameter grid is already ~3·10⁶ points).
//!
//! Polar ranges `[0, π/2]` include both endpoints exactly, so extrema on the
//! coordinate axes are hit with zero discretization error.

use super::{objective_value, Functional};
use crate::curvature::KahlerCurvatureTensor;
use crate::error::{Error, Result};
use crate::threads;
use crate::C64;
use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use std::f64::consts::{FRAC_PI_2, TAU};

const STEP_N2: f64 = 0.02;
const STEP_N3: f64 = 0.08;

/// Inclusive sweep of `[0, π/2]`: `i·step` clamped so the last point is
/// exactly `π/2`.
fn polar_points(step: f64) -> Vec<f64> {
    let count = (FRAC_PI_2 / step).ceil() as usize;
    (0..=count).map(|i| (i as f64 * step).min(FRAC_PI_2)).collect()
}

/// Half-open sweep of `[0, 2π)`.
fn phase_points(step: f64) -> Vec<f64> {
    let count = (TAU / step).ceil() as usize;
    (0..count).map(|i| i as f64 * step).collect()
}

/// Minimum of the signed objective over the grid, with its argmin. Earliest
/// grid point wins ties, so the result is deterministic.
pub(crate) fn grid_scan(
    t: &KahlerCurvatureTensor,
    kind: Functional,
) -> Result<(f64, DVector<C64>)> {
    let n = t.n();
    let ric = t.ricci_orthonormal();
    match n {
        1 => {
            let x = DVector::from_vec(vec![C64::new(1.0, 0.0)]);
            Ok((objective_value(kind, t, &ric, &x), x))
        }
        2 => Ok(scan_n2(t, &ric, kind)),
        3 => Ok(scan_n3(t, &ric, kind)),
        _ => Err(Error::InvalidParameter(format!(
            "direction grid supports n ≤ 3, got n = {n}"
        ))),
    }
}

fn scan_n2(t: &KahlerCurvatureTensor, ric: &DMatrix<C64>, kind: Functional) -> (f64, DVector<C64>) {
    let mut best = f64::INFINITY;
    let mut arg = DVector::from_vec(vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0)]);
    for &theta in &polar_points(STEP_N2) {
        let (ct, st) = (theta.cos(), theta.sin());
        for &phi in &phase_points(STEP_N2) {
            let x = DVector::from_vec(vec![C64::new(ct, 0.0), C64::from_polar(st, phi)]);
            let v = objective_value(kind, t, ric, &x);
            if v.total_cmp(&best).is_lt() {
                best = v;
                arg = x;
            }
        }
    }
    (best, arg)
}

fn scan_n3(t: &KahlerCurvatureTensor, ric: &DMatrix<C64>, kind: Functional) -> (f64, DVector<C64>) {
    let thetas = polar_points(STEP_N3);
    let phis = phase_points(STEP_N3);
    // One task per θ₁ slice; slices are reduced in order, so ties resolve to
    // the lexicographically first grid point.
    let slices: Vec<(f64, DVector<C64>)> = threads::install(|| {
        thetas
            .par_iter()
            .map(|&t1| {
                let (c1, s1) = (t1.cos(), t1.sin());
                let mut best = f64::INFINITY;
                let mut arg = DVector::from_vec(vec![
                    C64::new(1.0, 0.0),
                    C64::new(0.0, 0.0),
                    C64::new(0.0, 0.0),
                ]);
                for &t2 in &thetas {
                    let (c2, s2) = (t2.cos(), t2.sin());
                    for &p1 in &phis {
                        let z1 = C64::from_polar(s1 * c2, p1);
                        for &p2 in &phis {
                            let x = DVector::from_vec(vec![
                                C64::new(c1, 0.0),
                                z1,
                                C64::from_polar(s1 * s2, p2),
                            ]);
                            let v = objective_value(kind, t, ric, &x);
                            if v.total_cmp(&best).is_lt() {
                                best = v;
                                arg = x;
                            }
                        }
                    }
                }
                (best, arg)
            })
            .collect()
    });
    let mut out = (f64::INFINITY, DVector::from_vec(vec![
        C64::new(1.0, 0.0),
        C64::new(0.0, 0.0),
        C64::new(0.0, 0.0),
    ]));
    for s in slices {
        if s.0.total_cmp(&out.0).is_lt() {
            out = s;
        }
    }
    out
}

/// Grid minimum of `Ric^⊥`; the tensor must be in an orthonormal frame.
pub fn grid_min_ric_perp(t: &KahlerCurvatureTensor) -> Result<(f64, DVector<C64>)> {
    grid_scan(t, Functional::RicPerpMin)
}

/// Grid maximum of holomorphic sectional curvature; the tensor must be in an
/// orthonormal frame.
pub fn grid_max_holo_sect(t: &KahlerCurvatureTensor) -> Result<(f64, DVector<C64>)> {
    let (neg, x) = grid_scan(t, Functional::HoloSectMax)?;
    Ok((-neg, x))
}
