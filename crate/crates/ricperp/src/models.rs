//! Curvature tensors of standard model spaces, and bundle curvature data for
//! the projectivized-bundle machinery.
//!
//! Normalization: the projective-space tensor has holomorphic sectional
//! curvature ≡ 2 and Ricci form `(n+1)·g`. All other constructors are scaled
//! compatibly (a unit line through a rank-one matrix in the Grassmannian
//! models again has `H = 2`).

use crate::curvature::{HermitianForm, KahlerCurvatureTensor};
use crate::error::{Error, Result};
use crate::C64;

fn d(a: usize, b: usize) -> f64 {
    if a == b {
        1.0
    } else {
        0.0
    }
}

/// Projective space `P^n`: `R_{i j̄ k l̄} = δ_ij δ_kl + δ_il δ_kj`.
pub fn fubini_study(n: usize) -> Result<(KahlerCurvatureTensor, HermitianForm)> {
    if n == 0 {
        return Err(Error::InvalidParameter("fubini_study requires n ≥ 1".into()));
    }
    let t = KahlerCurvatureTensor::from_fn_symmetrized(n, |i, j, k, l| {
        C64::new(d(i, j) * d(k, l) + d(i, l) * d(k, j), 0.0)
    });
    Ok((t, HermitianForm::identity(n)))
}

/// Grassmannian `Gr(p, p+q)` curvature on `p×q` matrices (tangent index
/// `(i,α)` flattened as `i·q + α`):
/// `R = δ_ij δ_kl δ_αδ δ_γβ + δ_il δ_kj δ_αβ δ_γδ`.
///
/// Einstein with `μ = p + q`; `H(X) = 2·tr((XX*)²)/tr(XX*)² ≤ 2` with
/// equality exactly at rank-one `X`.
pub fn grassmannian(p: usize, q: usize) -> Result<(KahlerCurvatureTensor, HermitianForm)> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParameter("grassmannian requires p, q ≥ 1".into()));
    }
    let n = p * q;
    let row = move |a: usize| a / q;
    let col = move |a: usize| a % q;
    let t = KahlerCurvatureTensor::from_fn_symmetrized(n, |a, b, c_, e| {
        let (i, al) = (row(a), col(a));
        let (j, be) = (row(b), col(b));
        let (k, ga) = (row(c_), col(c_));
        let (l, de) = (row(e), col(e));
        C64::new(
            d(i, j) * d(k, l) * d(al, de) * d(ga, be) + d(i, l) * d(k, j) * d(al, be) * d(ga, de),
            0.0,
        )
    });
    Ok((t, HermitianForm::identity(n)))
}

/// The symmetric-matrix analogue `Sp(r)/U(r)` (Lagrangian Grassmannian):
/// restriction of [`grassmannian`]`(r, r)` to the symmetric matrices, in the
/// orthonormal basis `E_ii` and `(E_ij + E_ji)/√2` (i < j). Dimension
/// `r(r+1)/2`, Einstein with `μ = r + 1`.
pub fn lagrangian_grassmannian(r: usize) -> Result<(KahlerCurvatureTensor, HermitianForm)> {
    if r == 0 {
        return Err(Error::InvalidParameter(
            "lagrangian_grassmannian requires r ≥ 1".into(),
        ));
    }
    let basis = sym_matrix_basis(r);
    let n = basis.len();
    // R(A,B̄,C,D̄) = tr(A D* C B*) + tr(A B* C D*); the basis matrices are real
    // symmetric, so the adjoints are the matrices themselves.
    let t = KahlerCurvatureTensor::from_fn_symmetrized(n, |a, b, c_, e| {
        let (sa, sb, sc, sd) = (&basis[a], &basis[b], &basis[c_], &basis[e]);
        let v = trace4(r, sa, sd, sc, sb) + trace4(r, sa, sb, sc, sd);
        C64::new(v, 0.0)
    });
    Ok((t, HermitianForm::identity(n)))
}

/// Real symmetric basis matrices, row-major `r×r`, unit norm for
/// `⟨A,B⟩ = tr(A Bᵀ)`.
fn sym_matrix_basis(r: usize) -> Vec<Vec<f64>> {
    let mut basis = Vec::with_capacity(r * (r + 1) / 2);
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..r {
        for j in i..r {
            let mut m = vec![0.0; r * r];
            if i == j {
                m[i * r + i] = 1.0;
            } else {
                m[i * r + j] = inv_sqrt2;
                m[j * r + i] = inv_sqrt2;
            }
            basis.push(m);
        }
    }
    basis
}

fn trace4(r: usize, a: &[f64], b: &[f64], c: &[f64], e: &[f64]) -> f64 {
    let mul = |x: &[f64], y: &[f64]| -> Vec<f64> {
        let mut out = vec![0.0; r * r];
        for i in 0..r {
            for k in 0..r {
                let xik = x[i * r + k];
                if xik == 0.0 {
                    continue;
                }
                for j in 0..r {
                    out[i * r + j] += xik * y[k * r + j];
                }
            }
        }
        out
    };
    let ab = mul(a, b);
    let cd = mul(c, e);
    let mut tr = 0.0;
    for i in 0..r {
        for j in 0..r {
            tr += ab[i * r + j] * cd[j * r + i];
        }
    }
    tr
}

/// Product of two curves with constant holomorphic sectional curvatures
/// `k1`, `k2`: the only nonzero entries are `R_{1 1̄ 1 1̄} = k1`,
/// `R_{2 2̄ 2 2̄} = k2`.
pub fn curve_product(k1: f64, k2: f64) -> Result<(KahlerCurvatureTensor, HermitianForm)> {
    if !k1.is_finite() || !k2.is_finite() {
        return Err(Error::InvalidParameter("curve curvatures must be finite".into()));
    }
    let mut t = KahlerCurvatureTensor::zeros(2);
    t.set(0, 0, 0, 0, C64::new(k1, 0.0));
    t.set(1, 1, 1, 1, C64::new(k2, 0.0));
    Ok((t, HermitianForm::identity(2)))
}

/// Curvature data of a Hermitian vector bundle `(E, h)` of rank `r` over an
/// `n`-dimensional base, at a point in a frame where `h = identity`:
/// `entry(α, β, i, j) = R^h_{α β̄ i j̄}` (Hermitian in `(α,β)` jointly with
/// `(i,j)`).
#[derive(Debug, Clone)]
pub struct BundleCurvature {
    r: usize,
    n: usize,
    data: Vec<C64>,
}

impl BundleCurvature {
    pub fn zeros(r: usize, n: usize) -> Self {
        Self {
            r,
            n,
            data: vec![C64::new(0.0, 0.0); r * r * n * n],
        }
    }

    pub fn from_fn(r: usize, n: usize, f: impl Fn(usize, usize, usize, usize) -> C64) -> Result<Self> {
        let mut b = Self::zeros(r, n);
        for al in 0..r {
            for be in 0..r {
                for i in 0..n {
                    for j in 0..n {
                        let id = b.idx(al, be, i, j);
                        b.data[id] = f(al, be, i, j);
                    }
                }
            }
        }
        b.validate()?;
        Ok(b)
    }

    #[inline]
    fn idx(&self, al: usize, be: usize, i: usize, j: usize) -> usize {
        ((al * self.r + be) * self.n + i) * self.n + j
    }

    #[inline]
    pub fn get(&self, al: usize, be: usize, i: usize, j: usize) -> C64 {
        self.data[self.idx(al, be, i, j)]
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn base_dim(&self) -> usize {
        self.n
    }

    /// Hermitian symmetry `R^h_{α β̄ i j̄} = conj(R^h_{β ᾱ j ī})` and finiteness.
    pub fn validate(&self) -> Result<()> {
        for (idx, z) in self.data.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite(idx));
            }
        }
        for al in 0..self.r {
            for be in 0..self.r {
                for i in 0..self.n {
                    for j in 0..self.n {
                        let res = (self.get(al, be, i, j) - self.get(be, al, j, i).conj()).norm();
                        if res > crate::curvature::SYMMETRY_TOL {
                            return Err(Error::SymmetryViolation {
                                kind: crate::error::SymmetryKind::Hermitian,
                                indices: (al, be, i, j),
                                residual: res,
                                tol: crate::curvature::SYMMETRY_TOL,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Determinant line bundle curvature as an `n×n` form:
    /// `R(det E)_{i j̄} = Σ_α R^h_{α ᾱ i j̄}`.
    pub fn det_curvature(&self) -> nalgebra::DMatrix<C64> {
        nalgebra::DMatrix::from_fn(self.n, self.n, |i, j| {
            let mut s = C64::new(0.0, 0.0);
            for al in 0..self.r {
                s += self.get(al, al, i, j);
            }
            s
        })
    }

    /// Reorders the bundle frame so that index `gamma` comes first. Used to
    /// adapt split-bundle data to a fiber point on the `gamma`-th factor.
    pub fn with_leading_index(&self, gamma: usize) -> Result<Self> {
        if gamma >= self.r {
            return Err(Error::InvalidParameter(format!(
                "bundle index {gamma} out of range 0..{}",
                self.r
            )));
        }
        let mut perm: Vec<usize> = (0..self.r).collect();
        perm.swap(0, gamma);
        let mut b = Self::zeros(self.r, self.n);
        for al in 0..self.r {
            for be in 0..self.r {
                for i in 0..self.n {
                    for j in 0..self.n {
                        let v = self.get(perm[al], perm[be], i, j);
                        let id = b.idx(al, be, i, j);
                        b.data[id] = v;
                    }
                }
            }
        }
        Ok(b)
    }
}

/// Direct sum of line bundles `O(a_1) ⊕ … ⊕ O(a_r)` over `P^n` with the
/// standard metrics: `R^h_{α β̄ i j̄} = a_α δ_αβ δ_ij` at the adapted point.
#[derive(Debug, Clone)]
pub struct SplitBundleModel {
    pub base_dim: usize,
    pub degrees: Vec<f64>,
}

impl SplitBundleModel {
    pub fn new(base_dim: usize, degrees: Vec<f64>) -> Result<Self> {
        if base_dim == 0 {
            return Err(Error::InvalidParameter("base dimension must be ≥ 1".into()));
        }
        if degrees.len() < 2 {
            return Err(Error::InvalidParameter("split bundle needs rank ≥ 2".into()));
        }
        if degrees.iter().any(|a| !a.is_finite()) {
            return Err(Error::InvalidParameter("degrees must be finite".into()));
        }
        Ok(Self { base_dim, degrees })
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn curvature(&self) -> BundleCurvature {
        let r = self.rank();
        let n = self.base_dim;
        let deg = self.degrees.clone();
        BundleCurvature::from_fn(r, n, move |al, be, i, j| {
            C64::new(deg[al] * d(al, be) * d(i, j), 0.0)
        })
        .expect("split data is Hermitian by construction")
    }
}

/// Curvature of the tangent bundle of `P^n` as bundle data:
/// `R^h_{α β̄ i j̄} = R^{FS}_{i j̄ α β̄}`.
pub fn pn_tangent_bundle_curvature(n: usize) -> Result<BundleCurvature> {
    if n == 0 {
        return Err(Error::InvalidParameter("base dimension must be ≥ 1".into()));
    }
    BundleCurvature::from_fn(n, n, |al, be, i, j| {
        C64::new(d(i, j) * d(al, be) + d(i, be) * d(al, j), 0.0)
    })
}

/// Curvature of the cotangent bundle of `P^n`:
/// `R^h_{α β̄ i j̄} = -R^{FS}_{i j̄ β ᾱ}`.
pub fn pn_cotangent_bundle_curvature(n: usize) -> Result<BundleCurvature> {
    if n == 0 {
        return Err(Error::InvalidParameter("base dimension must be ≥ 1".into()));
    }
    BundleCurvature::from_fn(n, n, |al, be, i, j| {
        C64::new(-(d(i, j) * d(be, al) + d(i, al) * d(be, j)), 0.0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::ops::{einstein_check, holo_sect, ric_perp, ricci, scalar_curvature};
    use crate::curvature::qop::nu_max;
    use approx::assert_relative_eq;
    use nalgebra::DVector;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn unit(v: Vec<C64>) -> DVector<C64> {
        let x = DVector::from_vec(v);
        let n = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        x / c(n, 0.0)
    }

    #[test]
    fn fubini_study_is_exact() {
        let (t, g) = fubini_study(3).unwrap();
        assert_eq!(t.symmetry_residual(), 0.0);
        let check = einstein_check(&t, &g, 0.0).unwrap();
        assert_eq!(check.mu, 4.0);
        assert!(check.einstein);
        // One complex dimension: the curve of holomorphic sectional
        // curvature 2 has a single entry.
        let (t1, _) = fubini_study(1).unwrap();
        assert_eq!(t1.get(0, 0, 0, 0), c(2.0, 0.0));
    }

    #[test]
    fn grassmannian_reduces_to_fs_for_p_equals_one() {
        let (t1, _) = grassmannian(1, 3).unwrap();
        let (t2, _) = fubini_study(3).unwrap();
        assert_eq!(t1.data(), t2.data());
    }

    #[test]
    fn grassmannian_2_2_is_einstein_mu_4() {
        let (t, g) = grassmannian(2, 2).unwrap();
        assert_eq!(t.symmetry_residual(), 0.0);
        let ric = ricci(&t, &g).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 4.0 } else { 0.0 };
                assert_eq!(ric[(i, j)], c(want, 0.0));
            }
        }
    }

    #[test]
    fn grassmannian_h_values() {
        let (t, g) = grassmannian(2, 2).unwrap();
        // Rank-one X = E_11: H = 2.
        let x = unit(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_relative_eq!(holo_sect(&t, &g, &x).unwrap(), 2.0, epsilon = 1e-12);
        // X = diag(1,1)/√2 (full rank): H = 1.
        let y = unit(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert_relative_eq!(holo_sect(&t, &g, &y).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn lagrangian_grassmannian_r3_constants() {
        let (t, g) = lagrangian_grassmannian(3).unwrap();
        assert_eq!(t.n(), 6);
        assert_eq!(t.symmetry_residual(), 0.0);
        t.validate(0.0).unwrap();
        let check = einstein_check(&t, &g, 1e-12).unwrap();
        assert_relative_eq!(check.mu, 4.0, epsilon = 1e-12);
        assert!(check.einstein);
        // The Q spectrum splits along S²(S²C³) = S⁴C³ ⊕ S_{(2,2)}C³:
        // eigenvalue 2 with multiplicity 15 (squares of rank-one directions
        // sit here, so the bound H ≤ ν is attained) and -1 with
        // multiplicity 6 on the determinant-type directions.
        assert_relative_eq!(nu_max(&t, &g).unwrap(), 2.0, epsilon = 1e-8);
        let q = crate::curvature::qop::q_operator(&t, &g).unwrap();
        let mut eigs = crate::curvature::qop::hermitian_eigenvalues(&q);
        eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(eigs.len(), 21);
        for ev in &eigs[..6] {
            assert_relative_eq!(*ev, -1.0, epsilon = 1e-8);
        }
        for ev in &eigs[6..] {
            assert_relative_eq!(*ev, 2.0, epsilon = 1e-8);
        }
        // Rank-one symmetric matrix E_11 realizes H = 2 (basis index 0).
        let x = unit(vec![
            c(1.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
        ]);
        assert_relative_eq!(holo_sect(&t, &g, &x).unwrap(), 2.0, epsilon = 1e-12);
        assert_relative_eq!(ric_perp(&t, &g, &x).unwrap(), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn lagrangian_grassmannian_r2_matches_restriction_dims() {
        let (t, _) = lagrangian_grassmannian(2).unwrap();
        assert_eq!(t.n(), 3);
    }

    #[test]
    fn lagrangian_grassmannian_einstein_scalar_is_r_plus_one() {
        for r in 2..=4usize {
            let (t, g) = lagrangian_grassmannian(r).unwrap();
            assert_eq!(t.n(), r * (r + 1) / 2);
            let check = einstein_check(&t, &g, 1e-10).unwrap();
            assert!(check.einstein, "r = {r} not Einstein");
            assert_relative_eq!(check.mu, (r + 1) as f64, epsilon = 1e-10);
        }
    }

    #[test]
    fn curve_product_values() {
        let (t, g) = curve_product(1.0, -1.0).unwrap();
        let e1 = unit(vec![c(1.0, 0.0), c(0.0, 0.0)]);
        assert_relative_eq!(holo_sect(&t, &g, &e1).unwrap(), 1.0, epsilon = 1e-14);
        // Orthogonal Ricci curvature vanishes identically for opposite
        // constant curvatures.
        for k in 0..100 {
            let s = k as f64 / 99.0;
            let phase = C64::from_polar(1.0, 6.28 * s);
            let x = unit(vec![c((1.0 - s).sqrt(), 0.0), phase * s.sqrt()]);
            assert_relative_eq!(ric_perp(&t, &g, &x).unwrap(), 0.0, epsilon = 1e-12);
        }
        assert_relative_eq!(
            scalar_curvature(&t, &g).unwrap(),
            0.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn split_bundle_curvature_is_diagonal() {
        let m = SplitBundleModel::new(3, vec![0.0, 0.0, -1.0]).unwrap();
        let b = m.curvature();
        assert_eq!(b.rank(), 3);
        assert_eq!(b.base_dim(), 3);
        assert_eq!(b.get(2, 2, 1, 1), c(-1.0, 0.0));
        assert_eq!(b.get(0, 1, 0, 0), c(0.0, 0.0));
        let det = b.det_curvature();
        assert_eq!(det[(0, 0)], c(-1.0, 0.0));
    }

    #[test]
    fn tangent_bundle_xi_slice_over_p2() {
        let b = pn_tangent_bundle_curvature(2).unwrap();
        // v = e_1: R^h_{v v̄ i j̄} = diag(2, 1).
        assert_eq!(b.get(0, 0, 0, 0), c(2.0, 0.0));
        assert_eq!(b.get(0, 0, 1, 1), c(1.0, 0.0));
        assert_eq!(b.get(0, 0, 0, 1), c(0.0, 0.0));
    }

    #[test]
    fn cotangent_bundle_sign() {
        let b = pn_cotangent_bundle_curvature(3).unwrap();
        assert_eq!(b.get(0, 0, 0, 0), c(-2.0, 0.0));
        assert_eq!(b.get(1, 1, 0, 0), c(-1.0, 0.0));
        // det(Ω) = K has curvature -(n+1)·g.
        let det = b.det_curvature();
        assert_eq!(det[(0, 0)], c(-4.0, 0.0));
    }

    #[test]
    fn bundle_reorder_moves_gamma_first() {
        let m = SplitBundleModel::new(2, vec![3.0, 1.0, -2.0]).unwrap();
        let b = m.curvature().with_leading_index(2).unwrap();
        assert_eq!(b.get(0, 0, 0, 0), c(-2.0, 0.0));
        assert_eq!(b.get(2, 2, 0, 0), c(3.0, 0.0));
        assert_eq!(b.get(1, 1, 0, 0), c(1.0, 0.0));
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(fubini_study(0).is_err());
        assert!(grassmannian(0, 2).is_err());
        assert!(SplitBundleModel::new(3, vec![1.0]).is_err());
        assert!(curve_product(f64::NAN, 0.0).is_err());
    }
}
