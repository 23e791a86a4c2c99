//! Membership, closure, interior, boundary-part and distinguished-boundary
//! classification for H_μ, H_N and the hexablock ℍ; structured singular
//! values for the tetra, penta and hexa structures.

use serde::{Deserialize, Serialize};

use crate::domains_classic::{finite, penta_interior_margin, tetra_closure_margin, tetra_distinguished_defect, tetra_interior_margin, AGREE_THR};
use crate::numerics_core::{lift_point, pi_hexa, pi_penta, pi_tetra, Cx, HexError, HexResult, HexaPoint, Mat2, TetraPoint};
use crate::psi_kappa::{maximizer, sup_kappa};

pub use crate::psi_kappa::hartogs_u;

/// A membership decision with its signed margin (positive inside).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Membership {
    pub member: bool,
    pub margin: f64,
}

impl Membership {
    fn new(member: bool, margin: f64) -> Self {
        Membership { member, margin: finite(margin) }
    }
}

/// The quantities `β = 1 − |x₁|² − |x₂|² + |x₃|²`, `w² = x₁x₂ − x₃` and the
/// interval `(m, M) = ((β ∓ √(β² − 4|w|⁴))/2)` governing H_N.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormedParams {
    pub beta: f64,
    pub wsq: Cx,
    pub m: f64,
    pub big_m: f64,
    /// `β² − 4|w|⁴` before clamping at zero.
    pub discriminant: f64,
}

impl NormedParams {
    pub fn of(x: &TetraPoint) -> NormedParams {
        let beta = 1.0 - x.x1.norm_sqr() - x.x2.norm_sqr() + x.x3.norm_sqr();
        let wsq = x.x1 * x.x2 - x.x3;
        let discriminant = beta * beta - 4.0 * wsq.norm_sqr();
        let r = discriminant.max(0.0).sqrt();
        NormedParams { beta, wsq, m: (beta - r) / 2.0, big_m: (beta + r) / 2.0, discriminant }
    }
}

/// Boundary parts of ∂ℍ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryPart {
    /// `a = 0`, `x ∈ ∂𝔼`.
    D0,
    /// `a ≠ 0`, `|ψ_{z₁,z₂}| = 1` at some interior `(z₁, z₂)`.
    D1,
    /// `a ≠ 0`, `x ∈ ∂𝔼`, `sup |ψ| ≤ 1`.
    D2,
}

/// Boundary-part flags with the interior witness realising `|ψ| = 1` for ∂₁.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryClassification {
    pub parts: Vec<BoundaryPart>,
    pub witness: Option<(Cx, Cx)>,
}

/// Full classification of a point of ℂ⁴.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HexaVerdict {
    pub h_mu: Membership,
    pub h_mu_closure: Membership,
    pub h_mu_interior: Membership,
    pub h_n: Membership,
    pub h_n_closure: Membership,
    pub h_n_interior: Membership,
    pub h: Membership,
    pub h_closure: Membership,
    pub boundary_parts: Vec<BoundaryPart>,
    pub boundary_witness: Option<(Cx, Cx)>,
    pub b_h: Membership,
    pub h_p: Membership,
}

fn a_is_zero(p: &HexaPoint, tol: f64) -> bool {
    p.a.norm() <= tol
}

fn triangular_residual(x: &TetraPoint) -> f64 {
    (x.x1 * x.x2 - x.x3).norm()
}

/// Triangularity test `|x₁x₂ − x₃| < tol·(1 + |x₃|)` (with a roundoff floor).
pub fn is_triangular(x: &TetraPoint, tol: f64) -> bool {
    triangular_residual(x) <= tol.max(1e-12) * (1.0 + x.x3.norm())
}

/// `1 − |a|·sup_{𝔻²}|κ(·,·,x)|`, equal to one when `a = 0`.
fn psi_margin(p: &HexaPoint) -> f64 {
    if p.a.norm() == 0.0 {
        1.0
    } else {
        1.0 - p.a.norm() * sup_kappa(&p.x())
    }
}

/// H_μ: `x ∈ 𝔼`, `|a|K★(x) < 1` and, if `a = 0`, `x₁x₂ = x₃`.
pub fn hmu_member(p: &HexaPoint, tol: f64) -> Membership {
    let x = p.x();
    let t = tetra_interior_margin(&x);
    if a_is_zero(p, tol) {
        if is_triangular(&x, tol) {
            Membership::new(t > tol, t)
        } else {
            Membership::new(false, -triangular_residual(&x))
        }
    } else {
        let m = t.min(psi_margin(p));
        Membership::new(m > tol, m)
    }
}

/// Closure of H_μ (which equals the closure of ℍ): `x ∈ 𝔼̄` and `sup |ψ| ≤ 1`.
pub fn hmu_closure_member(p: &HexaPoint, tol: f64) -> Membership {
    let x = p.x();
    let m = tetra_closure_margin(&x).min(psi_margin(p));
    Membership::new(m >= -tol, m)
}

/// Operator-norm margin `1 − ‖A‖` of the unique lift (requires `a ≠ 0`).
pub fn lift_margin(p: &HexaPoint) -> HexResult<f64> {
    Ok(1.0 - lift_point(p)?.op_norm())
}

/// H_N (open) or its closure: `x ∈ 𝔼` (resp. 𝔼̄) and either `a = 0` with
/// `x₁x₂ = x₃`, or `m < |a|² < M` (resp. `≤`).
pub fn hn_member(p: &HexaPoint, closed: bool, tol: f64) -> Membership {
    let x = p.x();
    let t = if closed { tetra_closure_margin(&x) } else { tetra_interior_margin(&x) };
    let pass = |m: f64| if closed { m >= -tol } else { m > tol };
    if a_is_zero(p, tol) {
        if is_triangular(&x, tol) {
            return Membership::new(pass(t), t);
        }
        return Membership::new(false, -triangular_residual(&x));
    }
    let np = NormedParams::of(&x);
    let a2 = p.a.norm_sqr();
    let m = t.min(a2 - np.m).min(np.big_m - a2);
    Membership::new(pass(m), m)
}

/// ℍ (open): `x ∈ 𝔼` and `|a|K★(x) < 1`; closed: delegates to the closure of H_μ.
pub fn h_member(p: &HexaPoint, closed: bool, tol: f64) -> Membership {
    if closed {
        return hmu_closure_member(p, tol);
    }
    let m = tetra_interior_margin(&p.x()).min(psi_margin(p));
    Membership::new(m > tol, m)
}

/// Distinguished boundary bℍ: `x ∈ b𝔼` and `|a|² + |x₁|² = 1`.
pub fn bh_member(p: &HexaPoint, tol: f64) -> Membership {
    let defect = (p.a.norm_sqr() + p.x1.norm_sqr() - 1.0).abs().max(tetra_distinguished_defect(&p.x()));
    Membership::new(-defect >= -tol, -defect)
}

/// Parametric test against `(−e^{iθ}z, w, e^{iθ}w̄, e^{iθ})`, `|z|² + |w|² = 1`.
pub fn hp_member(p: &HexaPoint, tol: f64) -> Membership {
    let e = if p.x3.norm() > 0.0 { p.x3 / p.x3.norm() } else { Cx::new(1.0, 0.0) };
    let z = -p.a * e.conj();
    let w = p.x1;
    let defect = (p.x3.norm() - 1.0).abs().max((p.x2 - e * w.conj()).norm()).max((z.norm_sqr() + w.norm_sqr() - 1.0).abs());
    Membership::new(-defect >= -tol, -defect)
}

/// `(−e^{iθ}z, w, e^{iθ}w̄, e^{iθ})`.
pub fn hp_param(theta: f64, z: Cx, w: Cx) -> HexResult<HexaPoint> {
    if (z.norm_sqr() + w.norm_sqr() - 1.0).abs() > 1e-9 {
        return Err(HexError::Domain("hp_param needs |z|^2 + |w|^2 = 1".into()));
    }
    let e = Cx::from_polar(1.0, theta);
    Ok(HexaPoint::new(-e * z, w, e * w.conj(), e))
}

/// Boundary parts of a point of ∂ℍ = ℍ̄ ∖ ℍ.  ∂₁ and ∂₂ overlap exactly on
/// points over the distinguished boundary of 𝔼, where |κ| is maximal along
/// interior points.
pub fn classify_boundary(p: &HexaPoint, tol: f64) -> HexResult<BoundaryClassification> {
    if !h_member(p, true, tol).member || h_member(p, false, tol).member {
        return Err(HexError::Domain("point is not in the boundary of the hexablock".into()));
    }
    let x = p.x();
    let on_de = tetra_interior_margin(&x) <= tol;
    let mut parts = Vec::new();
    let mut witness = None;
    if a_is_zero(p, tol) {
        if on_de {
            parts.push(BoundaryPart::D0);
        }
    } else {
        let sup_one = psi_margin(p).abs() <= tol.max(1e-12) * 10.0;
        if !on_de {
            if sup_one {
                let m = maximizer(&x)?;
                witness = Some((m.z1_star, m.z2_star));
            }
        } else if sup_one && tetra_distinguished_defect(&x) <= tol.max(1e-12) && x.x1.norm() < 1.0 {
            witness = Some((x.x1.conj(), Cx::new(0.0, 0.0)));
        }
        if witness.is_some() {
            parts.push(BoundaryPart::D1);
        }
        if on_de {
            parts.push(BoundaryPart::D2);
        }
    }
    if parts.is_empty() {
        return Err(HexError::ConsistencyFault("boundary point belongs to no boundary part".into()));
    }
    Ok(BoundaryClassification { parts, witness })
}

/// Evaluate every flag and check the inclusion lattice
/// int H_N ⊆ int H_μ ⊆ ℍ, H_N ⊆ H_μ ⊆ ℍ ⊆ ℍ̄, bℍ ⊆ ∂ℍ and bℍ = H_p.
pub fn hexa_classify(p: &HexaPoint, tol: f64) -> HexResult<HexaVerdict> {
    let nz = !a_is_zero(p, tol);
    let h_mu = hmu_member(p, tol);
    let h_mu_closure = hmu_closure_member(p, tol);
    let h_mu_interior = Membership::new(h_mu.member && nz, if nz { h_mu.margin } else { -p.a.norm() });
    let h_n = hn_member(p, false, tol);
    let h_n_closure = hn_member(p, true, tol);
    let h_n_interior = Membership::new(h_n.member && nz, if nz { h_n.margin } else { -p.a.norm() });
    let h = h_member(p, false, tol);
    let h_closure = hmu_closure_member(p, tol);
    let b_h = bh_member(p, tol);
    let h_p = hp_member(p, tol);

    let clear_in = |m: &Membership| m.member && m.margin > AGREE_THR;
    let clear_out = |m: &Membership| !m.member && m.margin < -AGREE_THR;
    let pairs = [
        ("int H_N", &h_n_interior, "int H_mu", &h_mu_interior),
        ("int H_mu", &h_mu_interior, "H", &h),
        ("H_N", &h_n, "H_mu", &h_mu),
        ("H_mu", &h_mu, "H", &h),
        ("H", &h, "closure of H", &h_closure),
        ("closure of H_N", &h_n_closure, "closure of H", &h_closure),
    ];
    for (ni, inner, no, outer) in pairs {
        if clear_in(inner) && clear_out(outer) {
            return Err(HexError::ConsistencyFault(format!("{ni} holds but {no} fails")));
        }
    }
    if nz {
        let lm = lift_margin(p)?;
        if (h_n.margin > AGREE_THR && lm < -AGREE_THR) || (h_n.margin < -AGREE_THR && lm > AGREE_THR) {
            return Err(HexError::ConsistencyFault(format!("H_N interval criterion {:e} disagrees with lift norm margin {lm:e}", h_n.margin)));
        }
    }
    if (b_h.margin >= -1e-12 && h_p.margin < -1e-6 - 100.0 * tol) || (h_p.margin >= -1e-12 && b_h.margin < -1e-6 - 100.0 * tol) {
        return Err(HexError::ConsistencyFault("distinguished-boundary criterion and parametrisation disagree".into()));
    }
    if b_h.margin >= -1e-12 && h.margin > AGREE_THR {
        return Err(HexError::ConsistencyFault("distinguished-boundary point classified as interior".into()));
    }
    let (boundary_parts, boundary_witness) = if h_closure.member && !h.member {
        let bc = classify_boundary(p, tol)?;
        (bc.parts, bc.witness)
    } else {
        (vec![], None)
    };
    Ok(HexaVerdict { h_mu, h_mu_closure, h_mu_interior, h_n, h_n_closure, h_n_interior, h, h_closure, boundary_parts, boundary_witness, b_h, h_p })
}

/// Matrix structures for the structured singular value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MuStructure {
    Tetra,
    Penta,
    Hexa,
}

fn strict_criterion(a: &Mat2, structure: MuStructure) -> bool {
    match structure {
        MuStructure::Tetra => tetra_interior_margin(&pi_tetra(a)) > 0.0,
        MuStructure::Penta => {
            let q = pi_penta(a);
            penta_interior_margin(q.a, q.s, q.p) > 0.0
        }
        MuStructure::Hexa => hmu_member(&pi_hexa(a), 0.0).member,
    }
}

/// Structured singular value by bisection on `t ∈ [r(A), ‖A‖]`:
/// `μ(A) < t` iff the scaled point of `A/t` satisfies the structure's
/// strict membership criterion.
pub fn mu_value(a: &Mat2, structure: MuStructure) -> f64 {
    let norm = a.op_norm();
    if norm == 0.0 {
        return 0.0;
    }
    let tol = 1e-12 * norm;
    let mut hi = norm * (1.0 + 1e-9);
    let mut lo = a.spectral_radius() * (1.0 - 1e-12);
    let holds = |t: f64| strict_criterion(&a.scale_re(1.0 / t), structure);
    if lo > 0.0 && holds(lo) {
        return lo;
    }
    if !holds(hi) {
        return norm;
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if holds(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if hi <= tol {
        0.0
    } else {
        0.5 * (lo + hi)
    }
}

/// Spectral radius of `A`.
pub fn spectral_radius(a: &Mat2) -> f64 {
    a.spectral_radius()
}
