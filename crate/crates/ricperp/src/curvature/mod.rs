//! Algebraic Kähler curvature tensors at a point.
//!
//! A tensor is stored in a fixed complex frame as the array
//! `R[i][j][k][l] = R_{i j̄ k l̄}` and must satisfy
//!
//! - conjugate symmetry: `R_{i j̄ k l̄} = conj(R_{j ī l k̄})`,
//! - first-pair symmetry: `R_{i j̄ k l̄} = R_{k j̄ i l̄}`,
//! - second-pair symmetry: `R_{i j̄ k l̄} = R_{i l̄ k j̄}`.
//!
//! Metrics other than the identity are handled by transforming once to a
//! g-orthonormal frame (Cholesky); every derived quantity is computed there.

pub mod ops;
pub mod qop;

use crate::error::{Error, Result, SymmetryKind};
use crate::C64;
use nalgebra::{DMatrix, DVector};

/// Hermitian positive (semi)definite form, e.g. a metric at a point.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianForm {
    mat: DMatrix<C64>,
}

/// Tolerance for declaring a stored form Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;

impl HermitianForm {
    /// Wraps a matrix, checking Hermitian symmetry within [`HERMITIAN_TOL`].
    pub fn new(mat: DMatrix<C64>) -> Result<Self> {
        if mat.nrows() != mat.ncols() {
            return Err(Error::DimensionMismatch {
                context: "hermitian form must be square",
                expected: mat.nrows(),
                got: mat.ncols(),
            });
        }
        for (idx, z) in mat.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite(idx));
            }
        }
        for i in 0..mat.nrows() {
            for j in 0..=i {
                let res = (mat[(i, j)] - mat[(j, i)].conj()).norm();
                if res > HERMITIAN_TOL {
                    return Err(Error::SymmetryViolation {
                        kind: SymmetryKind::Hermitian,
                        indices: (i, j, 0, 0),
                        residual: res,
                        tol: HERMITIAN_TOL,
                    });
                }
            }
        }
        Ok(Self { mat })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            mat: DMatrix::identity(n, n),
        }
    }

    pub fn n(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.mat
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
                if (self.mat[(i, j)] - want).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// Squared norm `|X|²_g = Σ g_{i j̄} X_i conj(X_j)`.
    pub fn norm_sq(&self, x: &DVector<C64>) -> f64 {
        let mut s = C64::new(0.0, 0.0);
        for i in 0..self.n() {
            for j in 0..self.n() {
                s += self.mat[(i, j)] * x[i] * x[j].conj();
            }
        }
        s.re
    }
}

/// Algebraic Kähler curvature tensor `R[i][j][k][l] = R_{i j̄ k l̄}` in a fixed frame.
#[derive(Debug, Clone, PartialEq)]
pub struct KahlerCurvatureTensor {
    n: usize,
    data: Vec<C64>,
}

/// Default symmetry-validation tolerance for loaded tensors.
pub const SYMMETRY_TOL: f64 = 1e-9;

/// The 8-element symmetry group acting on index quadruples: pair swaps and
/// conjugation. `true` marks elements that conjugate the value.
const SYMMETRY_GROUP: [(fn(usize, usize, usize, usize) -> (usize, usize, usize, usize), bool); 8] = [
    (|i, j, k, l| (i, j, k, l), false),
    (|i, j, k, l| (k, j, i, l), false),
    (|i, j, k, l| (i, l, k, j), false),
    (|i, j, k, l| (k, l, i, j), false),
    (|i, j, k, l| (j, i, l, k), true),
    (|i, j, k, l| (j, k, l, i), true),
    (|i, j, k, l| (l, i, j, k), true),
    (|i, j, k, l| (l, k, j, i), true),
];

impl KahlerCurvatureTensor {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![C64::new(0.0, 0.0); n * n * n * n],
        }
    }

    /// Wraps raw data (row-major `[i][j][k][l]`) without symmetry checks;
    /// call [`KahlerCurvatureTensor::validate`] before trusting the result.
    pub fn from_raw(n: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != n * n * n * n {
            return Err(Error::DimensionMismatch {
                context: "tensor data length must be n^4",
                expected: n * n * n * n,
                got: data.len(),
            });
        }
        Ok(Self { n, data })
    }

    /// Builds a tensor from an entry function, evaluating it once per symmetry
    /// orbit and filling the rest of the orbit by copy/conjugation. The result
    /// satisfies all three Kähler symmetries exactly (residual 0.0), provided
    /// `f` is symmetric up to rounding.
    pub fn from_fn_symmetrized(n: usize, f: impl Fn(usize, usize, usize, usize) -> C64) -> Self {
        let mut t = Self::zeros(n);
        let mut done = vec![false; n * n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let id = t.idx(i, j, k, l);
                        if done[id] {
                            continue;
                        }
                        let mut v = f(i, j, k, l);
                        // A conjugating group element fixing the base tuple
                        // forces a real value.
                        let force_real = SYMMETRY_GROUP
                            .iter()
                            .any(|(g, c)| *c && g(i, j, k, l) == (i, j, k, l));
                        if force_real {
                            v = C64::new(v.re, 0.0);
                        }
                        for (g, c) in SYMMETRY_GROUP {
                            let (a, b, cc, d) = g(i, j, k, l);
                            let id2 = t.idx(a, b, cc, d);
                            t.data[id2] = if c { v.conj() } else { v };
                            done[id2] = true;
                        }
                    }
                }
            }
        }
        t
    }

    /// Averages raw data over the full symmetry group. Useful for producing
    /// valid test tensors from arbitrary input.
    pub fn symmetrized_from_raw(n: usize, raw: &[C64]) -> Result<Self> {
        if raw.len() != n * n * n * n {
            return Err(Error::DimensionMismatch {
                context: "tensor data length must be n^4",
                expected: n * n * n * n,
                got: raw.len(),
            });
        }
        let at = |i: usize, j: usize, k: usize, l: usize| raw[((i * n + j) * n + k) * n + l];
        Ok(Self::from_fn_symmetrized(n, |i, j, k, l| {
            let mut s = C64::new(0.0, 0.0);
            for (g, c) in SYMMETRY_GROUP {
                let (a, b, cc, d) = g(i, j, k, l);
                let v = at(a, b, cc, d);
                s += if c { v.conj() } else { v };
            }
            s / 8.0
        }))
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        debug_assert!(i < self.n && j < self.n && k < self.n && l < self.n);
        ((i * self.n + j) * self.n + k) * self.n + l
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> C64 {
        self.data[self.idx(i, j, k, l)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, v: C64) {
        let id = self.idx(i, j, k, l);
        self.data[id] = v;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    /// Checks finiteness and the three Kähler symmetries within `tol`,
    /// reporting the worst violation.
    pub fn validate(&self, tol: f64) -> Result<()> {
        for (idx, z) in self.data.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite(idx));
            }
        }
        let mut worst = 0.0f64;
        let mut worst_at = (0, 0, 0, 0);
        let mut worst_kind = SymmetryKind::Conjugate;
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let v = self.get(i, j, k, l);
                        let checks = [
                            (SymmetryKind::Conjugate, self.get(j, i, l, k).conj()),
                            (SymmetryKind::FirstPair, self.get(k, j, i, l)),
                            (SymmetryKind::SecondPair, self.get(i, l, k, j)),
                        ];
                        for (kind, other) in checks {
                            let res = (v - other).norm();
                            if res > worst {
                                worst = res;
                                worst_at = (i, j, k, l);
                                worst_kind = kind;
                            }
                        }
                    }
                }
            }
        }
        if worst > tol {
            return Err(Error::SymmetryViolation {
                kind: worst_kind,
                indices: worst_at,
                residual: worst,
                tol,
            });
        }
        Ok(())
    }

    /// Worst symmetry residual over all entries (0.0 for exactly symmetric data).
    pub fn symmetry_residual(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let v = self.get(i, j, k, l);
                        worst = worst
                            .max((v - self.get(j, i, l, k).conj()).norm())
                            .max((v - self.get(k, j, i, l)).norm())
                            .max((v - self.get(i, l, k, j)).norm());
                    }
                }
            }
        }
        worst
    }

    /// Frame change `R'_{a b̄ c d̄} = Σ R_{i j̄ k l̄} P_{ia} conj(P_{jb}) P_{kc} conj(P_{ld})`,
    /// where the columns of `P` are the new frame vectors in the old frame.
    pub fn transform(&self, p: &DMatrix<C64>) -> Self {
        let n = self.n;
        assert_eq!(p.nrows(), n, "frame matrix must match tensor dimension");
        assert_eq!(p.ncols(), n, "frame matrix must be square");
        // Contract one slot at a time: O(n^5) instead of O(n^8).
        let mut cur = self.data.clone();
        for slot in 0..4 {
            let mut next = vec![C64::new(0.0, 0.0); n * n * n * n];
            // Contraction order is l, k, j, i (the last index of `cur`), so the
            // barred slots l and j are the even passes.
            let conjugate = slot % 2 == 0;
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        for new in 0..n {
                            let mut s = C64::new(0.0, 0.0);
                            for old in 0..n {
                                // `cur` is indexed with the slot being replaced
                                // rotated to the last position.
                                let coeff = if conjugate { p[(old, new)].conj() } else { p[(old, new)] };
                                s += cur[((a * n + b) * n + c) * n + old] * coeff;
                            }
                            // Rotate indices so the next slot to contract is last.
                            next[((new * n + a) * n + b) * n + c] = s;
                        }
                    }
                }
            }
            cur = next;
        }
        Self { n, data: cur }
    }

    /// Entrywise scaling (the curvature of the rescaled metric `c·g` in a
    /// frame that is orthonormal for `g`).
    pub fn scale(&self, c: f64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    /// `R(X, Ȳ, Z, W̄)`, fully multilinear evaluation.
    pub fn eval(&self, x: &DVector<C64>, y: &DVector<C64>, z: &DVector<C64>, w: &DVector<C64>) -> C64 {
        let n = self.n;
        let mut total = C64::new(0.0, 0.0);
        for i in 0..n {
            if x[i].norm_sqr() == 0.0 {
                continue;
            }
            for j in 0..n {
                let xy = x[i] * y[j].conj();
                if xy.norm_sqr() == 0.0 {
                    continue;
                }
                let mut inner = C64::new(0.0, 0.0);
                for k in 0..n {
                    for l in 0..n {
                        inner += self.get(i, j, k, l) * z[k] * w[l].conj();
                    }
                }
                total += xy * inner;
            }
        }
        total
    }

    /// `R(X, X̄, Y, Ȳ)` (real by the symmetries).
    pub fn bisect(&self, x: &DVector<C64>, y: &DVector<C64>) -> f64 {
        self.eval(x, x, y, y).re
    }

    /// The quartic form `R(X, X̄, X, X̄)`.
    pub fn quartic(&self, x: &DVector<C64>) -> f64 {
        self.eval(x, x, x, x).re
    }

    /// Ricci form in an orthonormal frame: `Ric_{i j̄} = Σ_k R_{i j̄ k k̄}`.
    pub fn ricci_orthonormal(&self) -> DMatrix<C64> {
        let n = self.n;
        DMatrix::from_fn(n, n, |i, j| {
            let mut s = C64::new(0.0, 0.0);
            for k in 0..n {
                s += self.get(i, j, k, k);
            }
            s
        })
    }

    /// Direct sum with another tensor (curvature of a product metric in the
    /// block frame).
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n1 = self.n;
        let n = n1 + other.n;
        let mut t = Self::zeros(n);
        for i in 0..n1 {
            for j in 0..n1 {
                for k in 0..n1 {
                    for l in 0..n1 {
                        t.set(i, j, k, l, self.get(i, j, k, l));
                    }
                }
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                for k in 0..other.n {
                    for l in 0..other.n {
                        t.set(n1 + i, n1 + j, n1 + k, n1 + l, other.get(i, j, k, l));
                    }
                }
            }
        }
        t
    }
}

/// Transforms `(R, g)` to a g-orthonormal frame. Returns the transformed
/// tensor together with the frame matrix `P`: a vector with components `X'`
/// in the orthonormal frame has components `P·X'` in the original frame.
pub fn orthonormalize(
    r: &KahlerCurvatureTensor,
    g: &HermitianForm,
) -> Result<(KahlerCurvatureTensor, DMatrix<C64>)> {
    if g.n() != r.n() {
        return Err(Error::DimensionMismatch {
            context: "metric and tensor dimensions differ",
            expected: r.n(),
            got: g.n(),
        });
    }
    if g.is_identity(0.0) {
        return Ok((r.clone(), DMatrix::identity(r.n(), r.n())));
    }
    let chol = nalgebra::linalg::Cholesky::new(g.matrix().clone()).ok_or(Error::SingularMetric)?;
    let l = chol.l();
    let l_inv = l.clone().try_inverse().ok_or(Error::SingularMetric)?;
    // With g = L·L^H, the frame P = (L^{-1})ᵀ satisfies Pᵀ·g·conj(P) = I.
    let p = l_inv.transpose();
    Ok((r.transform(&p), p))
}

/// Draws a random valid tensor by symmetrizing i.i.d. complex Gaussian
/// entries. Deterministic for a fixed RNG state.
pub fn random_symmetrized(n: usize, rng: &mut impl rand::Rng) -> KahlerCurvatureTensor {
    use rand_distr::{Distribution, StandardNormal};
    let raw: Vec<C64> = (0..n * n * n * n)
        .map(|_| {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            C64::new(re, im)
        })
        .collect();
    KahlerCurvatureTensor::symmetrized_from_raw(n, &raw).expect("length is n^4 by construction")
}
