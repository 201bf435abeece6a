//! Builds the standard model spaces and prints their curvature constants:
//! the Einstein constant μ (Ricci = μ·g), the top eigenvalue ν of the
//! curvature operator on symmetric 2-tensors, and the dimension. All models
//! use the normalization where projective space has holomorphic sectional
//! curvature 2.
//!
//! Run with: cargo run -p ricperp --example model_spaces

use ricperp::curvature::ops::einstein_check;
use ricperp::curvature::qop::nu_max;
use ricperp::models;

fn main() -> ricperp::Result<()> {
    println!("{:<34} {:>4} {:>8} {:>8}", "model", "dim", "mu", "nu");

    for n in 2..=6 {
        let (r, g) = models::fubini_study(n)?;
        let e = einstein_check(&r, &g, 1e-12)?;
        let nu = nu_max(&r, &g)?;
        println!(
            "{:<34} {:>4} {:>8.3} {:>8.3}",
            format!("projective space P^{n}"),
            n,
            e.mu,
            nu
        );
        assert!(e.einstein, "projective space must be Einstein");
    }

    for (p, q) in [(2, 2), (2, 3)] {
        let (r, g) = models::grassmannian(p, q)?;
        let e = einstein_check(&r, &g, 1e-10)?;
        let nu = nu_max(&r, &g)?;
        println!(
            "{:<34} {:>4} {:>8.3} {:>8.3}",
            format!("grassmannian type ({p},{q})"),
            p * q,
            e.mu,
            nu
        );
    }

    for rank in [2, 3] {
        let (r, g) = models::lagrangian_grassmannian(rank)?;
        let e = einstein_check(&r, &g, 1e-10)?;
        let nu = nu_max(&r, &g)?;
        println!(
            "{:<34} {:>4} {:>8.3} {:>8.3}",
            format!("lagrangian type r={rank}"),
            rank * (rank + 1) / 2,
            e.mu,
            nu
        );
    }

    // The product of curves with opposite constant curvature is the basic
    // non-Einstein example: Ricci is diag(k1, k2).
    let (r, g) = models::curve_product(1.0, -1.0)?;
    let e = einstein_check(&r, &g, 1e-10)?;
    println!(
        "{:<34} {:>4} {:>8} {:>8.3}",
        "curve product (1, -1)",
        2,
        if e.einstein { "yes" } else { "not E." },
        nu_max(&r, &g)?
    );

    // Sanity: the rank-one grassmannian type is projective space itself.
    let (g1, _) = models::grassmannian(1, 4)?;
    let (fs, _) = models::fubini_study(4)?;
    let max_diff = g1
        .data()
        .iter()
        .zip(fs.data())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0f64, f64::max);
    println!("\ngrassmannian(1,4) vs projective space P^4: max entry diff = {max_diff:.1e}");
    Ok(())
}
