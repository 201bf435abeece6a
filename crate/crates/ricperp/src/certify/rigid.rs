//! Classifier for tensors with identically vanishing `Ric^⊥`.
//!
//! If `Ric^⊥ ≡ 0` then `|X|² Ric(X, X̄) = R(X, X̄, X, X̄)` for every direction,
//! and polarization identifies the tensor with the reconstruction
//! `¼(Ric_{i j̄} g_{k l̄} + Ric_{k l̄} g_{i j̄} + Ric_{i l̄} g_{k j̄} + Ric_{k j̄} g_{i l̄})`
//! of [`ric_operator_tensor`]; contracting forces `S = 0` and, for `n ≥ 3`,
//! `(n − 2)·Ric = 0`, i.e. the zero tensor. For `n = 2` the surviving tensors
//! are flat or the curvature of a product of two curves with opposite
//! constant curvatures (conformally flat with `S = 0`).
//!
//! The classifier checks these facts numerically in that order and reports
//! [`FlatClass::Inconsistent`] when the stages contradict each other — a
//! state exact data cannot reach, kept as a guard against tolerance abuse.

use crate::curvature::ops::{ric_operator_tensor, ric_perp_orthonormal};
use crate::curvature::{orthonormalize, HermitianForm, KahlerCurvatureTensor};
use crate::error::{Error, Result};
use crate::C64;
use nalgebra::DVector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

/// Outcome of [`flat_ric_perp_classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlatClass {
    /// The tensor vanishes (within tolerance).
    Flat,
    /// `n = 2`, `Ric^⊥ ≡ 0`, tensor nonzero: locally a product of two curves
    /// with opposite constant curvatures.
    N2ConformallySplit,
    /// Some sampled direction has `|Ric^⊥| > tol`.
    NotRicPerpFlat,
    /// Numerically contradictory input (stages disagree within tolerances).
    Inconsistent,
}

impl std::fmt::Display for FlatClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FlatClass::Flat => "flat",
            FlatClass::N2ConformallySplit => "n2_conformally_split",
            FlatClass::NotRicPerpFlat => "not_ric_perp_flat",
            FlatClass::Inconsistent => "inconsistent",
        };
        f.write_str(s)
    }
}

const RANDOM_SAMPLES: usize = 400;
const SAMPLE_SEED: u64 = 0x52495044; // fixed so the classifier is a pure function

fn sample_directions(n: usize, random_count: usize) -> Vec<DVector<C64>> {
    let zero = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let mut dirs = Vec::new();
    for i in 0..n {
        let mut e = DVector::from_element(n, zero);
        e[i] = one;
        dirs.push(e);
    }
    // Pair mixes catch off-diagonal structure that coordinate axes miss.
    for i in 0..n {
        for j in (i + 1)..n {
            for delta in [one, -one, C64::new(0.0, 1.0), C64::new(0.0, -1.0)] {
                let mut e = DVector::from_element(n, zero);
                e[i] = one;
                e[j] = delta;
                dirs.push(e / C64::new(2.0f64.sqrt(), 0.0));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    for _ in 0..random_count {
        let v = DVector::from_fn(n, |_, _| {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            C64::new(re, im)
        });
        let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            dirs.push(v / C64::new(norm, 0.0));
        }
    }
    dirs
}

fn max_abs(t: &KahlerCurvatureTensor) -> f64 {
    t.data().iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest `|Ric^⊥|` over a deterministic direction sample (coordinate axes,
/// pair mixes, and `extra_random` seeded random unit directions).
pub fn ric_perp_sample_sup(
    r: &KahlerCurvatureTensor,
    g: &HermitianForm,
    extra_random: usize,
) -> Result<f64> {
    let (t, _) = orthonormalize(r, g)?;
    let mut sup = 0.0f64;
    for x in sample_directions(t.n(), extra_random) {
        sup = sup.max(ric_perp_orthonormal(&t, &x).abs());
    }
    Ok(sup)
}

/// Classifies a tensor by the consequences of `Ric^⊥ ≡ 0`.
///
/// Stages: sampled `|Ric^⊥| > tol·scale` → [`FlatClass::NotRicPerpFlat`];
/// then the scalar curvature and the reconstruction residual
/// `max |R − ¼(Ric ∧̄ g)|` must vanish (within `10·tol·scale`) or the input
/// is [`FlatClass::Inconsistent`]; finally `n ≥ 3` must be flat, and `n = 2`
/// splits into flat and [`FlatClass::N2ConformallySplit`]. `scale` is
/// `max(1, max |R_{i j̄ k l̄}|)`. Requires `n ≥ 2`.
pub fn flat_ric_perp_classify(
    r: &KahlerCurvatureTensor,
    g: &HermitianForm,
    tol: f64,
) -> Result<FlatClass> {
    let (t, _) = orthonormalize(r, g)?;
    let n = t.n();
    if n < 2 {
        return Err(Error::OutOfTheoremRange(
            "the Ric^⊥-flat classifier needs n ≥ 2".into(),
        ));
    }
    let scale = max_abs(&t).max(1.0);
    let mut sup = 0.0f64;
    for x in sample_directions(n, RANDOM_SAMPLES) {
        sup = sup.max(ric_perp_orthonormal(&t, &x).abs());
    }
    if sup > tol * scale {
        return Ok(FlatClass::NotRicPerpFlat);
    }
    let ric = t.ricci_orthonormal();
    let s = ric.trace().re;
    let reconstruction = ric_operator_tensor(&ric, &HermitianForm::identity(n))?;
    let resid = t
        .data()
        .iter()
        .zip(reconstruction.data().iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    if s.abs() > 10.0 * tol * scale * n as f64 || resid > 10.0 * tol * scale {
        return Ok(FlatClass::Inconsistent);
    }
    let flat = max_abs(&t) <= 10.0 * tol * scale;
    Ok(if flat {
        FlatClass::Flat
    } else if n == 2 {
        FlatClass::N2ConformallySplit
    } else {
        FlatClass::Inconsistent
    })
}
