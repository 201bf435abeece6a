//! Scalar- and form-valued operations on curvature tensors.
//!
//! Every operation accepts a tensor together with the metric of the frame the
//! tensor is written in. Non-identity metrics are reduced to the identity case
//! through a single Cholesky frame change.

use super::{orthonormalize, HermitianForm, KahlerCurvatureTensor};
use crate::error::{Error, Result};
use crate::C64;
use nalgebra::{DMatrix, DVector};

/// Unitary frame with real weights, the argument of the quadratic bisectional
/// curvature form.
#[derive(Debug, Clone)]
pub struct FrameAndWeights {
    u: DMatrix<C64>,
    a: DVector<f64>,
}

/// Tolerance for accepting a frame matrix as unitary.
pub const UNITARY_TOL: f64 = 1e-9;

impl FrameAndWeights {
    pub fn new(u: DMatrix<C64>, a: DVector<f64>) -> Result<Self> {
        if u.nrows() != u.ncols() {
            return Err(Error::DimensionMismatch {
                context: "frame matrix must be square",
                expected: u.nrows(),
                got: u.ncols(),
            });
        }
        if a.len() != u.nrows() {
            return Err(Error::DimensionMismatch {
                context: "weight vector length must match frame dimension",
                expected: u.nrows(),
                got: a.len(),
            });
        }
        let gram = u.adjoint() * &u;
        let mut residual = 0.0f64;
        for i in 0..u.nrows() {
            for j in 0..u.ncols() {
                let want = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
                residual = residual.max((gram[(i, j)] - want).norm());
            }
        }
        if residual > UNITARY_TOL {
            return Err(Error::NonUnitaryFrame(residual));
        }
        Ok(Self { u, a })
    }

    pub fn identity_frame(a: DVector<f64>) -> Self {
        let n = a.len();
        Self {
            u: DMatrix::identity(n, n),
            a,
        }
    }

    pub fn frame(&self) -> &DMatrix<C64> {
        &self.u
    }

    pub fn weights(&self) -> &DVector<f64> {
        &self.a
    }
}

fn to_orthonormal(
    r: &KahlerCurvatureTensor,
    g: &HermitianForm,
) -> Result<(KahlerCurvatureTensor, DMatrix<C64>, DMatrix<C64>)> {
    let (t, p) = orthonormalize(r, g)?;
    let p_inv = p.clone().try_inverse().ok_or(Error::SingularMetric)?;
    Ok((t, p, p_inv))
}

/// Ricci form `Ric_{i j̄} = Σ_{k,l} g^{l k̄} R_{i j̄ k l̄}`, returned in the
/// original frame.
pub fn ricci(r: &KahlerCurvatureTensor, g: &HermitianForm) -> Result<DMatrix<C64>> {
    if g.is_identity(0.0) {
        return Ok(r.ricci_orthonormal());
    }
    let (t, _, p_inv) = to_orthonormal(r, g)?;
    let ric_on = t.ricci_orthonormal();
    // Ric' = Pᵀ·Ric·conj(P) in the orthonormal frame, so map back.
    Ok(p_inv.transpose() * ric_on * p_inv.conjugate())
}

/// Scalar curvature `S = Σ g^{j ī} Ric_{i j̄}` (frame invariant).
pub fn scalar_curvature(r: &KahlerCurvatureTensor, g: &HermitianForm) -> Result<f64> {
    let (t, _, _) = to_orthonormal(r, g)?;
    Ok(t.ricci_orthonormal().trace().re)
}

/// Holomorphic sectional curvature `H(X) = R(X,X̄,X,X̄)/|X|⁴_g`.
pub fn holo_sect(r: &KahlerCurvatureTensor, g: &HermitianForm, x: &DVector<C64>) -> Result<f64> {
    if x.len() != r.n() {
        return Err(Error::DimensionMismatch {
            context: "direction length must match tensor dimension",
            expected: r.n(),
            got: x.len(),
        });
    }
    let nsq = g.norm_sq(x);
    if nsq <= 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(r.quartic_with_metric(g, x)? / (nsq * nsq))
}

impl KahlerCurvatureTensor {
    fn quartic_with_metric(&self, g: &HermitianForm, x: &DVector<C64>) -> Result<f64> {
        if g.is_identity(0.0) {
            return Ok(self.quartic(x));
        }
        let (t, _, p_inv) = to_orthonormal(self, g)?;
        let x_on = &p_inv * x;
        Ok(t.quartic(&x_on))
    }
}

/// Orthogonal Ricci curvature in direction `X`, normalized to be scale
/// invariant: `Ric(X,X̄)/|X|² - R(X,X̄,X,X̄)/|X|⁴`.
pub fn ric_perp(r: &KahlerCurvatureTensor, g: &HermitianForm, x: &DVector<C64>) -> Result<f64> {
    if x.len() != r.n() {
        return Err(Error::DimensionMismatch {
            context: "direction length must match tensor dimension",
            expected: r.n(),
            got: x.len(),
        });
    }
    let nsq = g.norm_sq(x);
    if nsq <= 0.0 {
        return Err(Error::ZeroVector);
    }
    let (t, _, p_inv) = to_orthonormal(r, g)?;
    let x_on = &p_inv * x;
    Ok(ric_perp_orthonormal(&t, &x_on))
}

/// Identity-metric fast path for [`ric_perp`]; `x` need not be normalized.
pub fn ric_perp_orthonormal(r: &KahlerCurvatureTensor, x: &DVector<C64>) -> f64 {
    let nsq: f64 = x.iter().map(|z| z.norm_sqr()).sum();
    let ric = r.ricci_orthonormal();
    let mut rxx = C64::new(0.0, 0.0);
    for i in 0..r.n() {
        for j in 0..r.n() {
            rxx += ric[(i, j)] * x[i] * x[j].conj();
        }
    }
    rxx.re / nsq - r.quartic(x) / (nsq * nsq)
}

/// Quadratic bisectional curvature form
/// `QB(U, a) = Σ_{i,j} R_{i ī j j̄}(U) (a_i - a_j)²` over the rotated frame.
/// The tensor must be written in an orthonormal frame.
pub fn qb_form(r: &KahlerCurvatureTensor, fw: &FrameAndWeights) -> Result<f64> {
    let n = r.n();
    if fw.u.nrows() != n {
        return Err(Error::DimensionMismatch {
            context: "frame dimension must match tensor dimension",
            expected: n,
            got: fw.u.nrows(),
        });
    }
    let diag = rotated_diagonal_pairs(r, &fw.u);
    let mut qb = 0.0;
    for i in 0..n {
        for j in 0..n {
            let d = fw.a[i] - fw.a[j];
            qb += diag[(i, j)] * d * d;
        }
    }
    Ok(qb)
}

/// `R_{i ī j j̄}` in the rotated frame `e'_i = Σ_p U_{p i} e_p`, for all (i, j).
/// These entries are real by conjugate symmetry.
pub(crate) fn rotated_diagonal_pairs(r: &KahlerCurvatureTensor, u: &DMatrix<C64>) -> DMatrix<f64> {
    let n = r.n();
    // For each i contract the first two slots with column i, then evaluate the
    // remaining (k,l) form on column j: O(n^5) overall.
    let mut out = DMatrix::zeros(n, n);
    for i in 0..n {
        let mut a = DMatrix::from_element(n, n, C64::new(0.0, 0.0));
        for p in 0..n {
            if u[(p, i)].norm_sqr() == 0.0 {
                continue;
            }
            for q in 0..n {
                let w = u[(p, i)] * u[(q, i)].conj();
                if w.norm_sqr() == 0.0 {
                    continue;
                }
                for k in 0..n {
                    for l in 0..n {
                        a[(k, l)] += w * r.get(p, q, k, l);
                    }
                }
            }
        }
        for j in 0..n {
            let mut s = C64::new(0.0, 0.0);
            for k in 0..n {
                for l in 0..n {
                    s += a[(k, l)] * u[(k, j)] * u[(l, j)].conj();
                }
            }
            out[(i, j)] = s.re;
        }
    }
    out
}

/// Curvature of a product metric: block direct sum of tensors and metrics.
pub fn product_tensor(
    r1: &KahlerCurvatureTensor,
    g1: &HermitianForm,
    r2: &KahlerCurvatureTensor,
    g2: &HermitianForm,
) -> Result<(KahlerCurvatureTensor, HermitianForm)> {
    if r1.n() != g1.n() || r2.n() != g2.n() {
        return Err(Error::DimensionMismatch {
            context: "factor metric and tensor dimensions differ",
            expected: r1.n(),
            got: g1.n(),
        });
    }
    let n = r1.n() + r2.n();
    let mut g = DMatrix::from_element(n, n, C64::new(0.0, 0.0));
    g.view_mut((0, 0), (r1.n(), r1.n())).copy_from(g1.matrix());
    g.view_mut((r1.n(), r1.n()), (r2.n(), r2.n())).copy_from(g2.matrix());
    Ok((r1.direct_sum(r2), HermitianForm::new(g)?))
}

/// The unique algebraic Kähler curvature tensor with quartic form
/// `Ric(X,X̄)·|X|²_g`:
/// `¼(Ric_{i j̄} g_{k l̄} + Ric_{k l̄} g_{i j̄} + Ric_{i l̄} g_{k j̄} + Ric_{k j̄} g_{i l̄})`.
pub fn ric_operator_tensor(ric: &DMatrix<C64>, g: &HermitianForm) -> Result<KahlerCurvatureTensor> {
    let n = g.n();
    if ric.nrows() != n || ric.ncols() != n {
        return Err(Error::DimensionMismatch {
            context: "Ricci form dimension must match metric",
            expected: n,
            got: ric.nrows(),
        });
    }
    let gm = g.matrix();
    Ok(KahlerCurvatureTensor::from_fn_symmetrized(n, |i, j, k, l| {
        0.25 * (ric[(i, j)] * gm[(k, l)]
            + ric[(k, l)] * gm[(i, j)]
            + ric[(i, l)] * gm[(k, j)]
            + ric[(k, j)] * gm[(i, l)])
    }))
}

/// Result of testing `Ric = μ·g`.
#[derive(Debug, Clone, Copy)]
pub struct EinsteinCheck {
    /// Mean diagonal of the Ricci form in a g-orthonormal frame.
    pub mu: f64,
    /// Largest entrywise deviation `|Ric - μ·g|` in that frame.
    pub residual: f64,
    pub einstein: bool,
}

pub fn einstein_check(r: &KahlerCurvatureTensor, g: &HermitianForm, tol: f64) -> Result<EinsteinCheck> {
    let (t, _, _) = to_orthonormal(r, g)?;
    let ric = t.ricci_orthonormal();
    let n = t.n();
    let mu = ric.trace().re / n as f64;
    let mut residual = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { C64::new(mu, 0.0) } else { C64::new(0.0, 0.0) };
            residual = residual.max((ric[(i, j)] - want).norm());
        }
    }
    Ok(EinsteinCheck {
        mu,
        residual,
        einstein: residual <= tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::random_symmetrized;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    /// Constant-curvature projective-space pattern, built inline so these
    /// tests are independent of the model constructors.
    fn fs(n: usize) -> KahlerCurvatureTensor {
        KahlerCurvatureTensor::from_fn_symmetrized(n, |i, j, k, l| {
            let d = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };
            c(d(i, j) * d(k, l) + d(i, l) * d(k, j), 0.0)
        })
    }

    fn unit(v: Vec<C64>) -> DVector<C64> {
        let x = DVector::from_vec(v);
        let n = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        x / c(n, 0.0)
    }

    #[test]
    fn fs_ricci_is_exactly_n_plus_one() {
        for n in 2..=6 {
            let g = HermitianForm::identity(n);
            let ric = ricci(&fs(n), &g).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let want = if i == j { (n + 1) as f64 } else { 0.0 };
                    assert_eq!(ric[(i, j)], c(want, 0.0));
                }
            }
            let check = einstein_check(&fs(n), &g, 0.0).unwrap();
            assert_eq!(check.mu, (n + 1) as f64);
            assert!(check.einstein);
        }
    }

    #[test]
    fn fs_scalar_curvature() {
        let g = HermitianForm::identity(3);
        assert_eq!(scalar_curvature(&fs(3), &g).unwrap(), 12.0);
    }

    #[test]
    fn fs_holo_sect_is_two_everywhere() {
        let g = HermitianForm::identity(3);
        let t = fs(3);
        let dirs = [
            unit(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]),
            unit(vec![c(1.0, 0.5), c(-0.2, 0.3), c(0.1, -0.7)]),
            unit(vec![c(0.0, 1.0), c(1.0, 0.0), c(0.0, -1.0)]),
        ];
        for x in &dirs {
            assert_relative_eq!(holo_sect(&t, &g, x).unwrap(), 2.0, epsilon = 1e-12);
            assert_relative_eq!(ric_perp(&t, &g, x).unwrap(), 2.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn zero_direction_is_rejected() {
        let g = HermitianForm::identity(2);
        let x = DVector::from_vec(vec![c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(holo_sect(&fs(2), &g, &x), Err(Error::ZeroVector)));
    }

    #[test]
    fn product_of_p1s_has_zero_ric_perp_in_factor_directions() {
        let g1 = HermitianForm::identity(1);
        let (t, g) = product_tensor(&fs(1), &g1, &fs(1), &g1).unwrap();
        let x = unit(vec![c(1.0, 0.0), c(0.0, 0.0)]);
        assert_relative_eq!(ric_perp(&t, &g, &x).unwrap(), 0.0, epsilon = 1e-14);
        // Mixed direction: Ric = 2, H = 2(t²+(1-t)²) with t = 1/2.
        let m = unit(vec![c(1.0, 0.0), c(1.0, 0.0)]);
        assert_relative_eq!(ric_perp(&t, &g, &m).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn qb_form_fs_identity_frame() {
        let t = fs(2);
        let fw = FrameAndWeights::identity_frame(DVector::from_vec(vec![1.0, 0.0]));
        assert_relative_eq!(qb_form(&t, &fw).unwrap(), 2.0, epsilon = 1e-14);
    }

    #[test]
    fn qb_indicator_weights_recover_ric_perp() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let t = random_symmetrized(3, &mut rng);
        // Random unitary frame via QR of a random matrix.
        let m = DMatrix::from_fn(3, 3, |i, j| c(((3 * i + j) as f64).sin(), ((i + 5 * j) as f64).cos()));
        let qr = m.qr();
        let u = qr.q();
        let fw = FrameAndWeights::new(u.clone(), DVector::from_vec(vec![1.0, 0.0, 0.0])).unwrap();
        let qb = qb_form(&t, &fw).unwrap();
        let x = u.column(0).into_owned();
        assert_relative_eq!(qb, 2.0 * ric_perp_orthonormal(&t, &x), epsilon = 1e-10);
    }

    #[test]
    fn qb_rejects_non_unitary_frame() {
        let u = DMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(matches!(
            FrameAndWeights::new(u, DVector::from_vec(vec![1.0, 0.0])),
            Err(Error::NonUnitaryFrame(_))
        ));
    }

    #[test]
    fn ric_operator_tensor_quartic_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let g = HermitianForm::identity(3);
        for _ in 0..20 {
            let t = random_symmetrized(3, &mut rng);
            let ric = ricci(&t, &g).unwrap();
            let rr = ric_operator_tensor(&ric, &g).unwrap();
            rr.validate(0.0).unwrap();
            for _ in 0..25 {
                let x = unit(vec![
                    c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
                    c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
                    c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
                ]);
                let mut rxx = C64::new(0.0, 0.0);
                for i in 0..3 {
                    for j in 0..3 {
                        rxx += ric[(i, j)] * x[i] * x[j].conj();
                    }
                }
                assert_relative_eq!(rr.quartic(&x), rxx.re, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn scale_tensor_scales_quantities() {
        let t = fs(2).scale(3.0);
        let g = HermitianForm::identity(2);
        let x = unit(vec![c(1.0, 0.0), c(0.5, 0.5)]);
        assert_relative_eq!(holo_sect(&t, &g, &x).unwrap(), 6.0, epsilon = 1e-12);
    }

    #[test]
    fn non_identity_metric_matches_orthonormal_values() {
        // The same geometry written in a stretched frame must give identical
        // scalars at corresponding directions.
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let t = random_symmetrized(2, &mut rng);
        let p0 = DMatrix::from_row_slice(2, 2, &[c(1.5, 0.0), c(0.3, 0.2), c(0.0, 0.0), c(0.8, 0.0)]);
        let t2 = t.transform(&p0);
        let g2 = HermitianForm::new(p0.transpose() * p0.conjugate()).unwrap();
        let g1 = HermitianForm::identity(2);
        for _ in 0..10 {
            let y = DVector::from_vec(vec![
                c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
                c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
            ]);
            let x = &p0 * &y;
            assert_relative_eq!(
                ric_perp(&t2, &g2, &y).unwrap(),
                ric_perp(&t, &g1, &x).unwrap(),
                epsilon = 1e-9
            );
            assert_relative_eq!(
                holo_sect(&t2, &g2, &y).unwrap(),
                holo_sect(&t, &g1, &x).unwrap(),
                epsilon = 1e-9
            );
        }
        assert_relative_eq!(
            scalar_curvature(&t2, &g2).unwrap(),
            scalar_curvature(&t, &g1).unwrap(),
            epsilon = 1e-9
        );
    }
}
