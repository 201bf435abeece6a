//! Property-based invariants over randomly generated tensors, directions,
//! and bundle data. Each property encodes a structural fact that must hold
//! for every input, not just the curated examples.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ricperp::certify::{max_holo_sect, min_ric_perp, CertifyOptions};
use ricperp::curvature::ops::{holo_sect, ric_perp, ric_perp_orthonormal, ricci};
use ricperp::curvature::qop::nu_max;
use ricperp::curvature::{
    orthonormalize, random_symmetrized, HermitianForm, KahlerCurvatureTensor,
};
use ricperp::io::TensorDocument;
use ricperp::models::SplitBundleModel;
use ricperp::projbundle::condition_margin_split;

fn tensor(n: usize, seed: u64) -> KahlerCurvatureTensor {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_symmetrized(n, &mut rng)
}

fn unit(n: usize, seed: u64) -> DVector<C64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = DVector::from_fn(n, |_, _| {
        C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
    });
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v / C64::new(norm.max(1e-12), 0.0)
}

/// Random unitary via Gram–Schmidt on a seeded complex matrix.
fn unitary(n: usize, seed: u64) -> DMatrix<C64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cols: Vec<DVector<C64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v = DVector::from_fn(n, |_, _| {
            C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
        });
        for c in &cols {
            let overlap: C64 = c.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
            v -= c * overlap;
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            cols.push(v / C64::new(norm, 0.0));
        }
    }
    DMatrix::from_fn(n, n, |i, j| cols[j][i])
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 48,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    /// Averaging raw data over the symmetry group is idempotent: a
    /// symmetrized tensor has zero symmetry residual and re-symmetrizes to
    /// itself up to summation rounding (re-averaging eight equal values
    /// rounds at each partial sum, so entries may drift by an ulp).
    #[test]
    fn symmetrization_is_idempotent(seed in any::<u64>(), n in 2usize..=4) {
        let t = tensor(n, seed);
        prop_assert_eq!(t.symmetry_residual(), 0.0);
        let again = KahlerCurvatureTensor::symmetrized_from_raw(n, t.data()).unwrap();
        for (a, b) in again.data().iter().zip(t.data()) {
            prop_assert!((a - b).norm() <= 1e-14 * b.norm().max(1.0), "{} vs {}", a, b);
        }
    }

    /// Ric^perp and H are frame-independent: transforming the tensor by a
    /// unitary and the direction by its inverse leaves both values fixed.
    #[test]
    fn curvature_values_are_unitarily_invariant(seed in any::<u64>(), n in 2usize..=4) {
        let t = tensor(n, seed);
        let g = HermitianForm::identity(n);
        let u = unitary(n, seed ^ 0x9e3779b97f4a7c15);
        let tu = t.transform(&u);
        let x = unit(n, seed.wrapping_add(1));
        // transform(P) pulls back along P: the direction x in the new frame
        // corresponds to P·x in the old one.
        let px = &u * &x;
        let a = ric_perp(&t, &g, &px).unwrap();
        let b = ric_perp(&tu, &g, &x).unwrap();
        prop_assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0), "Ric^perp {} vs {}", a, b);
        let ha = holo_sect(&t, &g, &px).unwrap();
        let hb = holo_sect(&tu, &g, &x).unwrap();
        prop_assert!((ha - hb).abs() <= 1e-9 * ha.abs().max(1.0), "H {} vs {}", ha, hb);
    }

    /// Phase invariance: Ric^perp(e^{iθ}·x) = Ric^perp(x).
    #[test]
    fn ric_perp_ignores_the_phase(seed in any::<u64>(), theta in 0.0..std::f64::consts::TAU) {
        let t = tensor(3, seed);
        let x = unit(3, seed.wrapping_add(7));
        let rotated = x.map(|z| z * C64::from_polar(1.0, theta));
        let a = ric_perp_orthonormal(&t, &x);
        let b = ric_perp_orthonormal(&t, &rotated);
        prop_assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0));
    }

    /// The eigenvalue bound dominates holomorphic sectional curvature:
    /// H(x) ≤ ν for every direction.
    #[test]
    fn nu_dominates_holomorphic_sectional_curvature(seed in any::<u64>(), n in 2usize..=4) {
        let t = tensor(n, seed);
        let g = HermitianForm::identity(n);
        let nu = nu_max(&t, &g).unwrap();
        for k in 0..20u64 {
            let x = unit(n, seed.wrapping_add(k));
            prop_assert!(holo_sect(&t, &g, &x).unwrap() <= nu + 1e-8);
        }
    }

    /// The certified maximum of H also stays below ν.
    #[test]
    fn certified_h_max_stays_below_nu(seed in any::<u64>()) {
        let t = tensor(3, seed);
        let g = HermitianForm::identity(3);
        let opts = CertifyOptions { restarts: 8, ..CertifyOptions::seeded(seed) };
        let h = max_holo_sect(&t, &g, &opts).unwrap();
        prop_assert!(h.value <= nu_max(&t, &g).unwrap() + 1e-8);
    }

    /// Reported witnesses re-evaluate to the reported value.
    #[test]
    fn witnesses_reevaluate_to_the_reported_value(seed in any::<u64>()) {
        let t = tensor(3, seed);
        let g = HermitianForm::identity(3);
        let opts = CertifyOptions { restarts: 8, ..CertifyOptions::seeded(seed) };
        let rep = min_ric_perp(&t, &g, &opts).unwrap();
        let x = rep.witness.as_direction().unwrap();
        prop_assert!((ric_perp(&t, &g, &x).unwrap() - rep.value).abs() <= 1e-8);
    }

    /// Orthonormalization is faithful: evaluating in the transformed frame
    /// reproduces the metric evaluation in the original frame.
    #[test]
    fn orthonormalize_preserves_ric_perp(seed in any::<u64>()) {
        let n = 3usize;
        let t = tensor(n, seed);
        // Random Hermitian positive-definite metric: A·A* + I.
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcdef);
        let a = DMatrix::from_fn(n, n, |_, _| {
            C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
        });
        let gm = &a * a.adjoint() + DMatrix::<C64>::identity(n, n);
        let g = HermitianForm::new(gm).unwrap();
        let (ton, p) = orthonormalize(&t, &g).unwrap();
        let x = unit(n, seed.wrapping_add(3));
        let a1 = ric_perp_orthonormal(&ton, &x);
        let a2 = ric_perp(&t, &g, &(&p * &x)).unwrap();
        prop_assert!((a1 - a2).abs() <= 1e-8 * a1.abs().max(1.0), "{} vs {}", a1, a2);
    }

    /// Twisting every summand by the same line bundle shifts all degrees by
    /// a constant and leaves the split-bundle margin unchanged.
    #[test]
    fn split_margin_is_twist_invariant(
        n in 1usize..=5,
        shift in -4i64..=4,
        raw in proptest::collection::vec(-3i64..=3, 2..=5),
    ) {
        let degrees: Vec<f64> = raw.iter().map(|&d| d as f64).collect();
        let shifted: Vec<f64> = raw.iter().map(|&d| (d + shift) as f64).collect();
        let base = SplitBundleModel::new(n, degrees).unwrap();
        let twisted = SplitBundleModel::new(n, shifted).unwrap();
        prop_assert_eq!(condition_margin_split(&base).0, condition_margin_split(&twisted).0);
    }

    /// Tensor files survive a save/load/save cycle byte for byte, and the
    /// loaded tensor is the one that was saved.
    #[test]
    fn tensor_files_round_trip(seed in any::<u64>(), n in 1usize..=3) {
        let t = tensor(n, seed);
        let doc = TensorDocument::new(t, None);
        let text = doc.to_json_string();
        let back = TensorDocument::from_json_str(&text).unwrap();
        prop_assert_eq!(back.to_json_string(), text);
        prop_assert_eq!(back.tensor.data(), doc.tensor.data());
    }

    /// The Ricci form of a symmetrized tensor is Hermitian.
    #[test]
    fn ricci_form_is_hermitian(seed in any::<u64>(), n in 2usize..=4) {
        let t = tensor(n, seed);
        let ric = ricci(&t, &HermitianForm::identity(n)).unwrap();
        for i in 0..n {
            for j in 0..n {
                let d = (ric[(i, j)] - ric[(j, i)].conj()).norm();
                prop_assert!(d <= 1e-12);
            }
        }
    }
}
