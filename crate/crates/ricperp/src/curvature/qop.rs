//! The Hermitian operator `Q` on `S²T` induced by a Kähler curvature tensor.
//!
//! With the inner product
//! `(X·Y, conj(Z·W)) = ½(⟨X,Z̄⟩⟨Y,W̄⟩ + ⟨X,W̄⟩⟨Y,Z̄⟩)`
//! on symmetric 2-tensors, `Q` is defined by
//! `(Q(X·Y), conj(Z·W)) = R(X, Z̄, Y, W̄)`.
//!
//! Its largest eigenvalue `ν` dominates the holomorphic sectional curvature:
//! at a unit decomposable element `X·X` the Rayleigh quotient equals `H(X)`,
//! so `H ≤ ν` pointwise.

use super::{orthonormalize, HermitianForm, KahlerCurvatureTensor};
use crate::error::Result;
use crate::C64;
use nalgebra::DMatrix;

/// Orthonormal basis of `S²T`: `e_i·e_i` and `√2·e_i·e_j` for `i < j`,
/// in lexicographic pair order.
pub fn sym_pair_basis(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Matrix of `Q` in the [`sym_pair_basis`] of a g-orthonormal frame.
/// Hermitian of size `n(n+1)/2`.
pub fn q_operator(r: &KahlerCurvatureTensor, g: &HermitianForm) -> Result<DMatrix<C64>> {
    let (t, _) = orthonormalize(r, g)?;
    let n = t.n();
    let pairs = sym_pair_basis(n);
    let m = pairs.len();
    let sqrt2 = 2.0_f64.sqrt();
    let coeff = |i: usize, j: usize| if i == j { 1.0 } else { sqrt2 };
    let mut q = DMatrix::from_element(m, m, C64::new(0.0, 0.0));
    for (p, &(i, j)) in pairs.iter().enumerate() {
        for (s, &(k, l)) in pairs.iter().enumerate() {
            // (Q(e_k·e_l), conj(e_i·e_j)) = R_{k ī l j̄}.
            q[(p, s)] = t.get(k, i, l, j) * (coeff(i, j) * coeff(k, l));
        }
    }
    Ok(q)
}

/// Largest eigenvalue of [`q_operator`].
pub fn nu_max(r: &KahlerCurvatureTensor, g: &HermitianForm) -> Result<f64> {
    let q = q_operator(r, g)?;
    Ok(hermitian_eigenvalues(&q)
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max))
}

/// Eigenvalues of a Hermitian complex matrix (real, unsorted).
pub fn hermitian_eigenvalues(m: &DMatrix<C64>) -> Vec<f64> {
    // Symmetrize against rounding so the decomposition sees an exactly
    // Hermitian input.
    let h = (m + m.adjoint()) * C64::new(0.5, 0.0);
    let eig = nalgebra::linalg::SymmetricEigen::new(h);
    eig.eigenvalues.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn fs(n: usize) -> KahlerCurvatureTensor {
        KahlerCurvatureTensor::from_fn_symmetrized(n, |i, j, k, l| {
            let d = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };
            c(d(i, j) * d(k, l) + d(i, l) * d(k, j), 0.0)
        })
    }

    #[test]
    fn fs_q_operator_is_twice_identity() {
        for n in 2..=4 {
            let g = HermitianForm::identity(n);
            let q = q_operator(&fs(n), &g).unwrap();
            let m = n * (n + 1) / 2;
            assert_eq!(q.nrows(), m);
            for p in 0..m {
                for s in 0..m {
                    let want = if p == s { 2.0 } else { 0.0 };
                    assert_relative_eq!(q[(p, s)].re, want, epsilon = 1e-13);
                    assert_relative_eq!(q[(p, s)].im, 0.0, epsilon = 1e-13);
                }
            }
            assert_relative_eq!(nu_max(&fs(n), &g).unwrap(), 2.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn q_matrix_is_hermitian_for_random_tensors() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let t = crate::curvature::random_symmetrized(3, &mut rng);
        let g = HermitianForm::identity(3);
        let q = q_operator(&t, &g).unwrap();
        let res = (&q - q.adjoint()).norm();
        assert!(res < 1e-12, "residual {res}");
    }

    #[test]
    fn nu_scales_linearly() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let t = crate::curvature::random_symmetrized(3, &mut rng);
        let g = HermitianForm::identity(3);
        let nu = nu_max(&t, &g).unwrap();
        // Positive scaling multiplies every eigenvalue of Q.
        let nu3 = nu_max(&t.scale(3.0), &g).unwrap();
        assert_relative_eq!(nu3, 3.0 * nu, epsilon = 1e-9);
    }

    #[test]
    fn nu_dominates_holo_sect_on_samples() {
        use nalgebra::DVector;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = HermitianForm::identity(3);
        for _ in 0..5 {
            let t = crate::curvature::random_symmetrized(3, &mut rng);
            let nu = nu_max(&t, &g).unwrap();
            for _ in 0..1000 {
                let x = DVector::from_fn(3, |_, _| {
                    c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
                });
                let nsq: f64 = x.iter().map(|z| z.norm_sqr()).sum();
                if nsq < 1e-3 {
                    continue;
                }
                let h = t.quartic(&x) / (nsq * nsq);
                assert!(h <= nu + 1e-10, "H = {h} exceeds nu = {nu}");
            }
        }
    }
}
