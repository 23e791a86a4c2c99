//! The fractional maps ψ_{z₁,z₂}, Ψ, Φ_z and κ, the closed-form maximizer of
//! |κ| over the bidisc, and the cost K★ driving hexablock membership.

use crate::numerics_core::{Cx, HexError, HexResult, HexaPoint, TetraPoint};
use serde::{Deserialize, Serialize};

/// Interior margin below which the maximizer refuses to run.
pub const REFUSAL_MARGIN: f64 = 1e-9;

/// Tolerated negative roundoff in the maximizer discriminants.
const DISC_CLAMP: f64 = 1e-12;

/// A pair of points of the closed unit disc.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscPair {
    pub z1: Cx,
    pub z2: Cx,
}

impl DiscPair {
    /// Validates `|z1|, |z2| ≤ 1 + 1e-12`.
    pub fn new(z1: Cx, z2: Cx) -> HexResult<DiscPair> {
        if z1.norm() > 1.0 + 1e-12 || z2.norm() > 1.0 + 1e-12 {
            return Err(HexError::Domain(format!("disc pair outside closed bidisc: |z1|={}, |z2|={}", z1.norm(), z2.norm())));
        }
        Ok(DiscPair { z1, z2 })
    }
}

/// The closed-form maximizer of |κ(·,·,x)| over 𝔻².
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaximizerResult {
    pub z1_star: Cx,
    pub z2_star: Cx,
    pub beta1: Cx,
    pub beta2: Cx,
    pub k_star: f64,
    pub d1: f64,
    pub d2: f64,
}

/// Denominator `1 − x₁z₁ − x₂z₂ + x₃z₁z₂`.
#[inline]
pub fn kappa_denominator(z1: Cx, z2: Cx, x: &TetraPoint) -> Cx {
    Cx::new(1.0, 0.0) - x.x1 * z1 - x.x2 * z2 + x.x3 * z1 * z2
}

/// κ(z₁,z₂,x) = √((1−|z₁|²)(1−|z₂|²)) / (1 − x₁z₁ − x₂z₂ + x₃z₁z₂).
pub fn kappa(z1: Cx, z2: Cx, x: &TetraPoint) -> HexResult<Cx> {
    let w = ((1.0 - z1.norm_sqr()).max(0.0) * (1.0 - z2.norm_sqr()).max(0.0)).sqrt();
    if w == 0.0 {
        return Ok(Cx::new(0.0, 0.0));
    }
    let den = kappa_denominator(z1, z2, x);
    if den.norm() < 1e-14 {
        return Err(HexError::Singular("kappa denominator vanishes; point is outside the closed tetrablock".into()));
    }
    Ok(Cx::new(w, 0.0) / den)
}

/// ψ_{z₁,z₂}(a,x) = a·κ(z₁,z₂,x).
pub fn psi_eval(pair: &DiscPair, p: &HexaPoint) -> HexResult<Cx> {
    Ok(p.a * kappa(pair.z1, pair.z2, &p.x())?)
}

/// Ψ(z,x) = (x₃z − x₁)/(x₂z − 1), the constant x₁ on triangular points.
pub fn big_psi_eval(z: Cx, x: &TetraPoint) -> HexResult<Cx> {
    let num = x.x3 * z - x.x1;
    let den = x.x2 * z - 1.0;
    let tri = (x.x1 * x.x2 - x.x3).norm() <= 1e-14 * (1.0 + x.x3.norm());
    if tri {
        return Ok(x.x1);
    }
    if den.norm() < 1e-14 {
        return Err(HexError::Singular("pole of Psi: x2 z = 1".into()));
    }
    Ok(num / den)
}

/// Φ_z(s,p) = (2zp − s)/(2 − zs).
pub fn phi_eval(z: Cx, s: Cx, p: Cx) -> HexResult<Cx> {
    let den = 2.0 - z * s;
    if den.norm() < 1e-14 {
        return Err(HexError::Singular("pole of Phi: z s = 2".into()));
    }
    Ok((2.0 * z * p - s) / den)
}

/// Interior margin of the tetrablock used to gate the maximizer:
/// `1 − |x₃|² − |x₁ − x̄₂x₃| − |x₂ − x̄₁x₃|`.
pub fn tetra_cross_margin(x: &TetraPoint) -> f64 {
    1.0 - x.x3.norm_sqr() - (x.x1 - x.x2.conj() * x.x3).norm() - (x.x2 - x.x1.conj() * x.x3).norm()
}

/// The unique maximizer of |κ(·,·,x)| over 𝔻² for x in the open tetrablock.
pub fn maximizer(x: &TetraPoint) -> HexResult<MaximizerResult> {
    let m = tetra_cross_margin(x);
    if !(m > REFUSAL_MARGIN) {
        return Err(HexError::Domain(format!("maximizer requires an interior tetrablock point with margin > {REFUSAL_MARGIN}, got {m:e}")));
    }
    let q = 1.0 - x.x3.norm_sqr();
    let beta1 = (x.x1 - x.x2.conj() * x.x3) / q;
    let beta2 = (x.x2 - x.x1.conj() * x.x3) / q;
    let (b1, b2) = (beta1.norm_sqr(), beta2.norm_sqr());
    let clamp = |d: f64| -> HexResult<f64> {
        if d >= 0.0 {
            Ok(d)
        } else if d >= -DISC_CLAMP {
            Ok(0.0)
        } else {
            Err(HexError::ConsistencyFault(format!("negative maximizer discriminant {d:e}")))
        }
    };
    let d1 = clamp((1.0 + b1 - b2).powi(2) - 4.0 * b1)?;
    let d2 = clamp((1.0 - b1 + b2).powi(2) - 4.0 * b2)?;
    let z1_star = 2.0 * beta1.conj() / (1.0 + b1 - b2 + d1.sqrt());
    let z2_star = 2.0 * beta2.conj() / (1.0 - b1 + b2 + d2.sqrt());
    let k_star = kappa(z1_star, z2_star, x)?.norm();
    Ok(MaximizerResult { z1_star, z2_star, beta1, beta2, k_star, d1, d2 })
}

/// K★(x) = max over 𝔻² of |κ(·,·,x)|, via the closed-form maximizer.
pub fn k_star(x: &TetraPoint) -> HexResult<f64> {
    Ok(maximizer(x)?.k_star)
}

/// Residual of the critical-point equations
/// `z̄₁ = (x₁ − x₃z₂)/(1 − x₂z₂)`, `z̄₂ = (x₂ − x₃z₁)/(1 − x₁z₁)`.
pub fn stationarity_residual(x: &TetraPoint, z1: Cx, z2: Cx) -> f64 {
    let r1 = z1.conj() - (x.x1 - x.x3 * z2) / (1.0 - x.x2 * z2);
    let r2 = z2.conj() - (x.x2 - x.x3 * z1) / (1.0 - x.x1 * z1);
    r1.norm().max(r2.norm())
}

/// Supremum of |κ(·,·,x)| over 𝔻² for any x in the closed tetrablock,
/// in closed form (infinite when the supremum diverges).
///
/// With `A = 1−|x₁|²`, `B = |x₂ − x̄₁x₃|`, `C = |x₂|² − |x₃|²` the value is
/// `S² = 2 / (A − C + √((A+C)² − 4B²))`.  It agrees with [`k_star`] on the
/// open tetrablock and extends continuously to its closure.
pub fn sup_kappa(x: &TetraPoint) -> f64 {
    let a = 1.0 - x.x1.norm_sqr();
    let b = (x.x2 - x.x1.conj() * x.x3).norm();
    let c = x.x2.norm_sqr() - x.x3.norm_sqr();
    let disc = ((a + c).powi(2) - 4.0 * b * b).max(0.0);
    let den = a - c + disc.sqrt();
    if den <= 0.0 {
        f64::INFINITY
    } else {
        (2.0 / den).sqrt()
    }
}

/// sup |κ| for x in the distinguished boundary with |x₁| < 1: `1/√(1−|x₁|²)`.
pub fn sup_on_be(x: &TetraPoint) -> HexResult<f64> {
    if x.x1.norm() >= 1.0 {
        return Err(HexError::Domain("sup_on_bE requires |x1| < 1".into()));
    }
    let off = (x.x1 - x.x2.conj() * x.x3).norm().max((x.x3.norm() - 1.0).abs()).max(x.x2.norm() - 1.0);
    if off > 1e-9 {
        return Err(HexError::Domain(format!("point is not in the distinguished boundary (defect {off:e})")));
    }
    Ok(1.0 / (1.0 - x.x1.norm_sqr()).sqrt())
}

/// Pluriharmonic-type exhaustion `u(x) = 2 log K★(x)`.
pub fn hartogs_u(x: &TetraPoint) -> HexResult<f64> {
    Ok(2.0 * k_star(x)?.ln())
}
