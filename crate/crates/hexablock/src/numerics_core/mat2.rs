use super::{Cx, HexError, HexResult};
use serde::{Deserialize, Serialize};

/// A 2×2 complex matrix `[[a11, a12], [a21, a22]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mat2 {
    pub a11: Cx,
    pub a12: Cx,
    pub a21: Cx,
    pub a22: Cx,
}

impl Mat2 {
    pub fn new(a11: Cx, a12: Cx, a21: Cx, a22: Cx) -> Self {
        Mat2 { a11, a12, a21, a22 }
    }

    pub fn identity() -> Self {
        let o = Cx::new(1.0, 0.0);
        let z = Cx::new(0.0, 0.0);
        Mat2::new(o, z, z, o)
    }

    pub fn zero() -> Self {
        let z = Cx::new(0.0, 0.0);
        Mat2::new(z, z, z, z)
    }

    pub fn diag(d1: Cx, d2: Cx) -> Self {
        let z = Cx::new(0.0, 0.0);
        Mat2::new(d1, z, z, d2)
    }

    /// Build from rows `[[r0c0, r0c1], [r1c0, r1c1]]`.
    pub fn from_rows(rows: [[Cx; 2]; 2]) -> Self {
        Mat2::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    pub fn rows(&self) -> [[Cx; 2]; 2] {
        [[self.a11, self.a12], [self.a21, self.a22]]
    }

    pub fn trace(&self) -> Cx {
        self.a11 + self.a22
    }

    pub fn det(&self) -> Cx {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    pub fn adjoint(&self) -> Self {
        Mat2::new(self.a11.conj(), self.a21.conj(), self.a12.conj(), self.a22.conj())
    }

    pub fn scale(&self, c: Cx) -> Self {
        Mat2::new(self.a11 * c, self.a12 * c, self.a21 * c, self.a22 * c)
    }

    pub fn scale_re(&self, c: f64) -> Self {
        self.scale(Cx::new(c, 0.0))
    }

    pub fn add(&self, o: &Mat2) -> Self {
        Mat2::new(self.a11 + o.a11, self.a12 + o.a12, self.a21 + o.a21, self.a22 + o.a22)
    }

    pub fn sub(&self, o: &Mat2) -> Self {
        Mat2::new(self.a11 - o.a11, self.a12 - o.a12, self.a21 - o.a21, self.a22 - o.a22)
    }

    pub fn mul(&self, o: &Mat2) -> Self {
        Mat2::new(
            self.a11 * o.a11 + self.a12 * o.a21,
            self.a11 * o.a12 + self.a12 * o.a22,
            self.a21 * o.a11 + self.a22 * o.a21,
            self.a21 * o.a12 + self.a22 * o.a22,
        )
    }

    /// Inverse, failing when `|det|` is below `1e-300`.
    pub fn inverse(&self) -> HexResult<Mat2> {
        let d = self.det();
        if d.norm() < 1e-300 {
            return Err(HexError::Singular("matrix is not invertible".into()));
        }
        Ok(Mat2::new(self.a22 / d, -self.a12 / d, -self.a21 / d, self.a11 / d))
    }

    /// Squared Frobenius norm.
    pub fn frobenius_sq(&self) -> f64 {
        self.a11.norm_sqr() + self.a12.norm_sqr() + self.a21.norm_sqr() + self.a22.norm_sqr()
    }

    /// Both singular values `(σ₁ ≥ σ₂)` in closed form:
    /// `σ₁ ± σ₂ = √(‖A‖_F² ± 2|det A|)`.
    pub fn singular_values(&self) -> (f64, f64) {
        let t = self.frobenius_sq();
        let d = self.det().norm();
        let plus = (t + 2.0 * d).max(0.0).sqrt();
        let minus = (t - 2.0 * d).max(0.0).sqrt();
        ((plus + minus) / 2.0, ((plus - minus) / 2.0).max(0.0))
    }

    /// Operator (spectral) norm.
    pub fn op_norm(&self) -> f64 {
        self.singular_values().0
    }

    /// Eigenvalues via the stable quadratic formula.
    pub fn eigenvalues(&self) -> (Cx, Cx) {
        super::quadratic_roots(self.trace(), self.det())
    }

    /// Spectral radius.
    pub fn spectral_radius(&self) -> f64 {
        let (l1, l2) = self.eigenvalues();
        l1.norm().max(l2.norm())
    }

    pub fn max_abs_diff(&self, o: &Mat2) -> f64 {
        let d = self.sub(o);
        d.a11.norm().max(d.a12.norm()).max(d.a21.norm()).max(d.a22.norm())
    }

    /// Principal square root of a Hermitian positive semidefinite matrix:
    /// `√M = (M + √det·I)/√(tr + 2√det)`.
    pub fn psd_sqrt(&self) -> HexResult<Mat2> {
        let det = self.det().re.max(0.0);
        let sd = det.sqrt();
        let denom = self.trace().re + 2.0 * sd;
        if denom <= 0.0 {
            if self.frobenius_sq() == 0.0 {
                return Ok(Mat2::zero());
            }
            return Err(HexError::Domain("matrix is not positive semidefinite".into()));
        }
        Ok(self.add(&Mat2::identity().scale_re(sd)).scale_re(1.0 / denom.sqrt()))
    }
}

/// Whether `[[z1, w], [0, z2]]` is a contraction (`strict`: norm < 1),
/// decided by `|z1|, |z2| ≤ 1` and `|w|² ≤ (1 − |z1|²)(1 − |z2|²)`.
pub fn upper_tri_contraction(z1: Cx, w: Cx, z2: Cx, strict: bool) -> bool {
    let (r1, r2) = (1.0 - z1.norm_sqr(), 1.0 - z2.norm_sqr());
    if strict {
        r1 > 0.0 && r2 > 0.0 && w.norm_sqr() < r1 * r2
    } else {
        r1 >= 0.0 && r2 >= 0.0 && w.norm_sqr() <= r1 * r2
    }
}

/// Matricial Möbius map
/// `M_Z(X) = (I − ZZ*)^{-1/2} (X − Z) (I − Z*X)^{-1} (I − Z*Z)^{1/2}`, for `‖Z‖ < 1`.
pub fn matricial_mobius(z: &Mat2, x: &Mat2) -> HexResult<Mat2> {
    if z.op_norm() >= 1.0 {
        return Err(HexError::Domain("matricial Möbius map needs a strict contraction Z".into()));
    }
    let id = Mat2::identity();
    let left = id.sub(&z.mul(&z.adjoint())).psd_sqrt()?.inverse()?;
    let right = id.sub(&z.adjoint().mul(z)).psd_sqrt()?;
    let mid = id.sub(&z.adjoint().mul(x)).inverse()?;
    Ok(left.mul(&x.sub(z)).mul(&mid).mul(&right))
}
