//! Rigidity of Ric^⊥-flat metrics. The key algebraic fact: for any Kähler
//! curvature tensor R with Ricci form Ric, the tensor
//!
//!   R_Ric = ¼(Ric ∧̄ g)   (the unique tensor with quartic Ric(X,X̄)·|X|²)
//!
//! satisfies H_{R_Ric − R}(X) = Ric^⊥(X) for every unit X. So Ric^⊥ ≡ 0
//! forces R = R_Ric as algebraic tensors, and contracting that identity
//! kills the scalar curvature; for n ≥ 3 the only solution is the flat
//! tensor, while n = 2 leaves the curvature of a product of two curves with
//! opposite constant curvatures.
//!
//! Run with: cargo run -p ricperp --example rigidity_classify

use nalgebra::DVector;
use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ricperp::certify::{flat_ric_perp_classify, ric_perp_sample_sup};
use ricperp::curvature::ops::{holo_sect, ric_perp, ricci, ric_operator_tensor};
use ricperp::curvature::{random_symmetrized, HermitianForm, KahlerCurvatureTensor};
use ricperp::models;

fn main() -> ricperp::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let n = 3;
    let g = HermitianForm::identity(n);

    // The pointwise identity H_{R_Ric − R} = Ric^⊥ on random tensors.
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let r = random_symmetrized(n, &mut rng);
        let ric = ricci(&r, &g)?;
        let r_ric = ric_operator_tensor(&ric, &g)?;
        let diff = KahlerCurvatureTensor::from_raw(
            n,
            r_ric
                .data()
                .iter()
                .zip(r.data())
                .map(|(a, b)| a - b)
                .collect(),
        )?;
        for _ in 0..100 {
            let x = random_unit(&mut rng, n);
            let err = (holo_sect(&diff, &g, &x)? - ric_perp(&r, &g, &x)?).abs();
            worst = worst.max(err);
        }
    }
    println!("max |H_(R_Ric − R)(X) − Ric^⊥(X)| over 20 tensors × 100 directions: {worst:.2e}");

    // Classification by consequence of Ric^⊥ ≡ 0.
    let zero = KahlerCurvatureTensor::zeros(3);
    println!(
        "\nzero tensor (n=3):        {}",
        flat_ric_perp_classify(&zero, &HermitianForm::identity(3), 1e-10)?
    );

    let (cp, gcp) = models::curve_product(1.0, -1.0)?;
    println!(
        "curve product (1,-1):     {}  (sampled sup |Ric^⊥| = {:.2e})",
        flat_ric_perp_classify(&cp, &gcp, 1e-10)?,
        ric_perp_sample_sup(&cp, &gcp, 100)?
    );

    let (fs, gfs) = models::fubini_study(3)?;
    println!(
        "projective space P^3:     {}",
        flat_ric_perp_classify(&fs, &gfs, 1e-10)?
    );

    // An n = 3 tensor of the reconstruction shape with S = 0: its orthogonal
    // Ricci curvature works out to ¼·Ric(X,X̄), so any nonzero Ricci weights
    // still fail Ric^⊥-flatness — the only tensor passing all three
    // conditions (reconstruction shape, S = 0, Ric^⊥ ≡ 0) is the flat one.
    for weights in [[1.0, 1.0, -2.0], [0.0, 0.0, 0.0]] {
        let ric = nalgebra::DMatrix::from_fn(3, 3, |i, j| {
            if i == j {
                C64::new(weights[i], 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        });
        let candidate = ric_operator_tensor(&ric, &HermitianForm::identity(3))?;
        let class = flat_ric_perp_classify(&candidate, &HermitianForm::identity(3), 1e-10)?;
        println!("reconstruction from Ricci weights {weights:?}: {class}");
    }
    Ok(())
}

fn random_unit(rng: &mut ChaCha8Rng, n: usize) -> DVector<C64> {
    let v = DVector::from_fn(n, |_, _| {
        C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
    });
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v / C64::new(norm, 0.0)
}
