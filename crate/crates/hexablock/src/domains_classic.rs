//! Classification of points of the symmetrized bidisc Γ, the tetrablock 𝔼
//! and the pentablock ℙ (interior / boundary / distinguished boundary /
//! exterior), together with the composition law ⋄, the map τ and the
//! embeddings tying these domains to the hexablock.
//!
//! Each classifier evaluates several independent equivalent criteria,
//! checks that they agree wherever their margins are decisive, and reports
//! the consensus region with every margin.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::hexablock;
use crate::numerics_core::{quadratic_roots, Cx, DiscAut, G2Point, HexError, HexResult, HexaPoint, PentaPoint, TetraPoint};
use crate::psi_kappa::sup_kappa;

/// Margins whose modulus exceeds this value must agree in sign.
pub const AGREE_THR: f64 = 1e-7;

/// An equality criterion "holds" when its (non-positive) margin is at least this.
const EQ_HOLD: f64 = -1e-12;

/// Region of a point relative to a domain Ω.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    Interior,
    Boundary,
    DistinguishedBoundary,
    ExteriorOfClosure,
}

impl Region {
    /// Whether the point lies in the closed domain.
    pub fn in_closure(self) -> bool {
        self != Region::ExteriorOfClosure
    }
    /// Whether the point lies in the topological boundary.
    pub fn on_boundary(self) -> bool {
        matches!(self, Region::Boundary | Region::DistinguishedBoundary)
    }
    pub fn as_str(self) -> &'static str {
        match self {
            Region::Interior => "interior",
            Region::Boundary => "boundary",
            Region::DistinguishedBoundary => "distinguished_boundary",
            Region::ExteriorOfClosure => "exterior_of_closure",
        }
    }
}

/// Classification result: consensus region, every criterion margin
/// (keyed `family.criterion`) and witnesses realising the criteria.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionVerdict {
    pub region: Region,
    pub margins: BTreeMap<String, f64>,
    pub witnesses: BTreeMap<String, Cx>,
}

/// Replace infinities by the largest finite values so margins stay serialisable.
pub(crate) fn finite(m: f64) -> f64 {
    if m.is_nan() {
        f64::MIN
    } else {
        m.clamp(f64::MIN, f64::MAX)
    }
}

/// Criterion families for one point; the first entry of `interior`,
/// `closure` and `distinguished` is the primary criterion.
struct Families {
    interior: Vec<(&'static str, f64)>,
    closure: Vec<(&'static str, f64)>,
    boundary: Vec<(&'static str, f64)>,
    distinguished: Vec<(&'static str, f64)>,
}

fn check_sign_family(family: &str, entries: &[(&'static str, f64)]) -> HexResult<()> {
    let pos = entries.iter().find(|(_, m)| *m > AGREE_THR);
    let neg = entries.iter().find(|(_, m)| *m < -AGREE_THR);
    if let (Some(p), Some(n)) = (pos, neg) {
        return Err(HexError::ConsistencyFault(format!("{family} criteria disagree: {} = {:e} but {} = {:e}", p.0, p.1, n.0, n.1)));
    }
    Ok(())
}

fn check_equality_family(family: &str, entries: &[(&'static str, f64)], tol: f64) -> HexResult<()> {
    let fail_thr = -(1e-6 + 100.0 * tol);
    let hold = entries.iter().find(|(_, m)| *m >= EQ_HOLD);
    let fail = entries.iter().find(|(_, m)| *m < fail_thr);
    if let (Some(h), Some(f)) = (hold, fail) {
        return Err(HexError::ConsistencyFault(format!("{family} criteria disagree: {} holds but {} = {:e}", h.0, f.0, f.1)));
    }
    Ok(())
}

fn decide(fam: Families, tol: f64, witnesses: BTreeMap<String, Cx>) -> HexResult<RegionVerdict> {
    check_sign_family("interior", &fam.interior)?;
    check_sign_family("closure", &fam.closure)?;
    check_equality_family("boundary", &fam.boundary, tol)?;
    check_equality_family("distinguished", &fam.distinguished, tol)?;
    let int_m = fam.interior[0].1;
    let clo_m = fam.closure[0].1;
    let dis_m = fam.distinguished[0].1;
    // a decisively interior or exterior point cannot satisfy a boundary equation
    if int_m > AGREE_THR || clo_m < -AGREE_THR {
        if let Some((n, _)) = fam.boundary.iter().chain(fam.distinguished.iter()).find(|(_, m)| *m >= EQ_HOLD) {
            return Err(HexError::ConsistencyFault(format!("boundary criterion {n} holds at a point off the boundary")));
        }
    }
    // interior criteria imply closure criteria
    if int_m > AGREE_THR && clo_m < -AGREE_THR {
        return Err(HexError::ConsistencyFault("interior criterion holds but closure criterion fails".into()));
    }
    let region = if int_m > tol {
        Region::Interior
    } else if clo_m >= -tol {
        if dis_m >= -tol {
            Region::DistinguishedBoundary
        } else {
            Region::Boundary
        }
    } else {
        Region::ExteriorOfClosure
    };
    let mut margins = BTreeMap::new();
    for (family, entries) in [("interior", &fam.interior), ("closure", &fam.closure), ("boundary", &fam.boundary), ("distinguished", &fam.distinguished)] {
        for (name, m) in entries {
            margins.insert(format!("{family}.{name}"), finite(*m));
        }
    }
    Ok(RegionVerdict { region, margins, witnesses })
}

// ---------------------------------------------------------------------------
// Symmetrized bidisc

fn g2_families(s: Cx, p: Cx) -> (Families, BTreeMap<String, Cx>) {
    let (l1, l2) = quadratic_roots(s, p);
    let q = (s - s.conj() * p).norm();
    let sum_form = 4.0 - s.norm_sqr() - 2.0 * q - (s * s - 4.0 * p).norm();
    let mod_form = 1.0 - p.norm_sqr() - q;
    let eigen = 1.0 - l1.norm().max(l2.norm());
    let mut w = BTreeMap::new();
    w.insert("lambda1".to_string(), l1);
    w.insert("lambda2".to_string(), l2);
    let mut interior = vec![("sum_form", sum_form), ("mod_form", mod_form), ("eigen_form", eigen)];
    let mut closure = vec![("sum_form", sum_form), ("mod_form", mod_form.min(2.0 - s.norm())), ("eigen_form", eigen)];
    let den = 1.0 - p.norm_sqr();
    if den > 1e-6 {
        let beta = (s - s.conj() * p) / den;
        w.insert("beta".to_string(), beta);
        let bm = (1.0 - p.norm()).min(1.0 - beta.norm());
        interior.push(("beta_form", bm));
        closure.push(("beta_form", bm));
    } else if p.norm() > 1.0 {
        interior.push(("beta_form", 1.0 - p.norm()));
        closure.push(("beta_form", 1.0 - p.norm()));
    }
    let distinguished = vec![
        ("unitary_form", -((p.norm() - 1.0).abs().max(q).max((s.norm() - 2.0).max(0.0)))),
        ("eigen_form", -((l1.norm() - 1.0).abs().max((l2.norm() - 1.0).abs()))),
    ];
    (Families { interior, closure, boundary: vec![], distinguished }, w)
}

/// Classify `(s, p)` relative to the symmetrized bidisc.
pub fn g2_classify(s: Cx, p: Cx, tol: f64) -> HexResult<RegionVerdict> {
    let (fam, w) = g2_families(s, p);
    decide(fam, tol, w)
}

/// Primary (interior, closure, distinguished) margins of Γ.
pub(crate) fn g2_primary(s: Cx, p: Cx) -> (f64, f64, f64) {
    let (f, _) = g2_families(s, p);
    (f.interior[0].1, f.closure[0].1, f.distinguished[0].1)
}

// ---------------------------------------------------------------------------
// Tetrablock

/// Primary interior margin of 𝔼: `1 − |x₃|² − |x₁ − x̄₂x₃| − |x₂ − x̄₁x₃|`.
pub fn tetra_interior_margin(x: &TetraPoint) -> f64 {
    crate::psi_kappa::tetra_cross_margin(x)
}

/// Primary closure margin of 𝔼:
/// `min(1 + |x₁|² − |x₂|² − |x₃|² − 2|x₁ − x̄₂x₃|, 1 − |x₁|)`.
pub fn tetra_closure_margin(x: &TetraPoint) -> f64 {
    det_form(x.x1, x.x2, x.x3)
}

/// Defect from the distinguished boundary b𝔼 (zero on b𝔼):
/// `max(|x₁ − x̄₂x₃|, ||x₃| − 1|, (|x₂| − 1)⁺)`.
pub fn tetra_distinguished_defect(x: &TetraPoint) -> f64 {
    (x.x1 - x.x2.conj() * x.x3).norm().max((x.x3.norm() - 1.0).abs()).max((x.x2.norm() - 1.0).max(0.0))
}

fn det_form(x1: Cx, x2: Cx, x3: Cx) -> f64 {
    (1.0 + x1.norm_sqr() - x2.norm_sqr() - x3.norm_sqr() - 2.0 * (x1 - x2.conj() * x3).norm()).min(1.0 - x1.norm())
}

fn tetra_families(x: &TetraPoint) -> (Families, BTreeMap<String, Cx>) {
    let (x1, x2, x3) = (x.x1, x.x2, x.x3);
    let d12 = (x1 - x2.conj() * x3).norm();
    let d21 = (x2 - x1.conj() * x3).norm();
    let tri = (x1 * x2 - x3).norm();
    let skew = 1.0 - x1.norm_sqr() - x2.norm_sqr() + x3.norm_sqr() - 2.0 * tri;
    let cross = 1.0 - x3.norm_sqr() - d12 - d21;
    let mut w = BTreeMap::new();
    let mut interior = vec![
        ("cross_form", cross),
        ("x1_mod_form", 1.0 - x1.norm_sqr() - d21 - tri),
        ("x2_mod_form", 1.0 - x2.norm_sqr() - d12 - tri),
        ("x1_det_form", det_form(x1, x2, x3)),
        ("x2_det_form", det_form(x2, x1, x3)),
        ("skew_form", skew.min(1.0 - x3.norm())),
    ];
    let mut closure = vec![("x1_det_form", det_form(x1, x2, x3)), ("x2_det_form", det_form(x2, x1, x3))];
    let den = 1.0 - x3.norm_sqr();
    if den > 1e-6 {
        let b1 = (x1 - x2.conj() * x3) / den;
        let b2 = (x2 - x1.conj() * x3) / den;
        w.insert("beta1".to_string(), b1);
        w.insert("beta2".to_string(), b2);
        let bm = (1.0 - b1.norm() - b2.norm()).min(1.0 - x3.norm());
        interior.push(("beta_decomposition", bm));
        closure.push(("beta_decomposition", bm));
    } else if x3.norm() > 1.0 {
        interior.push(("beta_decomposition", 1.0 - x3.norm()));
        closure.push(("beta_decomposition", 1.0 - x3.norm()));
    }
    let pos = |v: f64| (v - 1.0).max(0.0);
    let boundary = vec![
        ("x2_sum_form", -((x2.norm_sqr() + d12 + tri - 1.0).abs().max(pos(x1.norm())))),
        ("x1_sum_form", -((x1.norm_sqr() + d21 + tri - 1.0).abs().max(pos(x2.norm())))),
        ("skew_zero_form", -(skew.abs().max(pos(x1.norm())).max(pos(x2.norm())).max(pos(x3.norm())))),
        ("cross_zero_form", -(cross.abs().max(pos(x1.norm())).max(pos(x2.norm())))),
    ];
    let clo = det_form(x1, x2, x3);
    let distinguished = vec![
        ("unitary_form", -tetra_distinguished_defect(x)),
        ("closure_unimodular_x3", -((-clo).max(0.0).max((x3.norm() - 1.0).abs()))),
    ];
    (Families { interior, closure, boundary, distinguished }, w)
}

/// Classify a point relative to the tetrablock.
pub fn tetra_classify(x: &TetraPoint, tol: f64) -> HexResult<RegionVerdict> {
    let (fam, w) = tetra_families(x);
    decide(fam, tol, w)
}

// ---------------------------------------------------------------------------
// Pentablock

/// The constants `c± = ½|1 − λ̄₂λ₁| ± ½√((1 − |λ₁|²)(1 − |λ₂|²))`.
pub fn penta_c_pm(s: Cx, p: Cx) -> (f64, f64) {
    let (l1, l2) = quadratic_roots(s, p);
    let h = 0.5 * (1.0 - l2.conj() * l1).norm();
    let r = 0.5 * ((1.0 - l1.norm_sqr()) * (1.0 - l2.norm_sqr())).max(0.0).sqrt();
    (h - r, h + r)
}

fn penta_families(a: Cx, s: Cx, p: Cx) -> (Families, BTreeMap<String, Cx>) {
    let (g_int, g_clo, g_dis) = g2_primary(s, p);
    let (l1, l2) = quadratic_roots(s, p);
    let (_, cp) = penta_c_pm(s, p);
    let sup = sup_kappa(&TetraPoint::new(s / 2.0, s / 2.0, p));
    let psi_m = if a.norm() == 0.0 { 1.0 } else { 1.0 - a.norm() * sup };
    let cm = cp - a.norm();
    let bp = -(a.norm_sqr() + s.norm_sqr() / 4.0 - 1.0).abs();
    let eig = -((l1.norm() - 1.0).abs().max((l2.norm() - 1.0).abs()));
    let mut w = BTreeMap::new();
    w.insert("lambda1".to_string(), l1);
    w.insert("lambda2".to_string(), l2);
    let fam = Families {
        interior: vec![("c_plus_form", g_int.min(cm)), ("psi_sup_form", g_int.min(psi_m))],
        closure: vec![("c_plus_form", g_clo.min(cm)), ("psi_sup_form", g_clo.min(psi_m))],
        boundary: vec![],
        distinguished: vec![("gamma_sphere_form", g_dis.min(bp)), ("eigen_sphere_form", eig.min(bp))],
    };
    (fam, w)
}

/// Classify `(a, s, p)` relative to the pentablock.
pub fn penta_classify(a: Cx, s: Cx, p: Cx, tol: f64) -> HexResult<RegionVerdict> {
    let (fam, w) = penta_families(a, s, p);
    decide(fam, tol, w)
}

/// Primary pentablock interior margin.
pub(crate) fn penta_interior_margin(a: Cx, s: Cx, p: Cx) -> f64 {
    penta_families(a, s, p).0.interior[0].1
}

// ---------------------------------------------------------------------------
// Composition law, τ, embeddings and retractions

/// `x ⋄ y = (x₁ − x₃y₁, y₂ − x₂y₃, x₁y₂ − x₃y₃)/(1 − x₂y₁)`, characterised by
/// `Ψ(·, x) ∘ Ψ(·, y) = Ψ(·, x ⋄ y)`.
pub fn diamond(x: &TetraPoint, y: &TetraPoint) -> HexResult<TetraPoint> {
    let den = 1.0 - x.x2 * y.x1;
    if den.norm() < 1e-12 {
        return Err(HexError::Singular("diamond product undefined: x2 y1 = 1".into()));
    }
    Ok(TetraPoint::new((x.x1 - x.x3 * y.x1) / den, (y.x2 - x.x2 * y.x3) / den, (x.x1 * y.x2 - x.x3 * y.x3) / den))
}

/// `τ(v) = (ωα, ᾱ, ω)` for `v = ωB_α`; satisfies `v = Ψ(·, τ(v))`.
pub fn tau_of(v: &DiscAut) -> TetraPoint {
    let (omega, alpha) = v.omega_alpha();
    TetraPoint::new(omega * alpha, alpha.conj(), omega)
}

/// `(a, x) ↦ (a, x, 0, 0)` from the closed unit ball of ℂ².
pub fn embed_biball(a: Cx, x: Cx) -> HexResult<HexaPoint> {
    if a.norm_sqr() + x.norm_sqr() > 1.0 + 1e-12 {
        return Err(HexError::Domain("point is outside the closed unit ball".into()));
    }
    Ok(HexaPoint::new(a, x, Cx::new(0.0, 0.0), Cx::new(0.0, 0.0)))
}

/// `(s, p) ↦ (0, s/2, s/2, p)` from Γ.
pub fn embed_g2(g: &G2Point, tol: f64) -> HexResult<HexaPoint> {
    if !g2_classify(g.s, g.p, tol)?.region.in_closure() {
        return Err(HexError::Domain("point is outside the closed symmetrized bidisc".into()));
    }
    Ok(HexaPoint::new(Cx::new(0.0, 0.0), g.s / 2.0, g.s / 2.0, g.p))
}

/// `x ↦ (0, x)` from the closed tetrablock.
pub fn embed_tetra(x: &TetraPoint, tol: f64) -> HexResult<HexaPoint> {
    if !tetra_classify(x, tol)?.region.in_closure() {
        return Err(HexError::Domain("point is outside the closed tetrablock".into()));
    }
    Ok(HexaPoint::from_parts(Cx::new(0.0, 0.0), *x))
}

/// `(a, s, p) ↦ (a, s/2, s/2, p)` from the closed pentablock.
pub fn embed_penta(q: &PentaPoint, tol: f64) -> HexResult<HexaPoint> {
    if !penta_classify(q.a, q.s, q.p, tol)?.region.in_closure() {
        return Err(HexError::Domain("point is outside the closed pentablock".into()));
    }
    Ok(HexaPoint::new(q.a, q.s / 2.0, q.s / 2.0, q.p))
}

fn require_closed_hexa(h: &HexaPoint, tol: f64) -> HexResult<()> {
    if !hexablock::h_member(h, true, tol).member {
        return Err(HexError::Domain("point is outside the closed hexablock".into()));
    }
    Ok(())
}

/// `(a, x) ↦ (x₁ + x₂, x₃)`.
pub fn retract_g2(h: &HexaPoint, tol: f64) -> HexResult<G2Point> {
    require_closed_hexa(h, tol)?;
    Ok(G2Point::new(h.x1 + h.x2, h.x3))
}

/// `(a, x) ↦ x`.
pub fn retract_tetra(h: &HexaPoint, tol: f64) -> HexResult<TetraPoint> {
    require_closed_hexa(h, tol)?;
    Ok(h.x())
}

/// `(a, x) ↦ (a, x₁ + x₂, x₃)`.
pub fn retract_penta(h: &HexaPoint, tol: f64) -> HexResult<PentaPoint> {
    require_closed_hexa(h, tol)?;
    Ok(PentaPoint::new(h.a, h.x1 + h.x2, h.x3))
}

/// For `(a, s, p) ∈ ℙ`, a point of H_N over `(a, s, p)`: the symmetric point
/// `(a, s/2, s/2, p)` when `c₋ < |a| < c₊`, otherwise the point shifted
/// along `ζ₀√(|w|² − |a|²)` with `w = (λ₁ − λ₂)/2` and `ζ₀` the phase of `λ₁ − λ₂`.
pub fn penta_hn_witness(a: Cx, s: Cx, p: Cx, tol: f64) -> HexResult<HexaPoint> {
    if penta_classify(a, s, p, tol)?.region != Region::Interior {
        return Err(HexError::Domain("point is not in the open pentablock".into()));
    }
    let (cm, cp) = penta_c_pm(s, p);
    let sym = HexaPoint::new(a, s / 2.0, s / 2.0, p);
    let out = if cm < a.norm() && a.norm() < cp {
        sym
    } else {
        let (l1, l2) = quadratic_roots(s, p);
        let diff = l1 - l2;
        let zeta0 = if diff.norm() > 0.0 { diff / diff.norm() } else { Cx::new(1.0, 0.0) };
        let wabs2 = (diff / 2.0).norm_sqr();
        let shift = zeta0 * (wabs2 - a.norm_sqr()).max(0.0).sqrt();
        HexaPoint::new(a, s / 2.0 + shift, s / 2.0 - shift, p)
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics_core::{cis, cx};
    use crate::psi_kappa::big_psi_eval;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const T: f64 = 1e-9;

    fn c(re: f64) -> Cx {
        cx(re, 0.0)
    }

    #[test]
    fn g2_examples() {
        assert_eq!(g2_classify(c(0.0), c(0.0), T).unwrap().region, Region::Interior);
        assert_eq!(g2_classify(c(2.0), c(1.0), T).unwrap().region, Region::DistinguishedBoundary);
        assert_eq!(g2_classify(c(0.0), c(1.0), T).unwrap().region, Region::DistinguishedBoundary);
        assert_eq!(g2_classify(c(1.0), c(0.0), T).unwrap().region, Region::Boundary);
        assert_eq!(g2_classify(c(3.0), c(0.0), T).unwrap().region, Region::ExteriorOfClosure);
    }

    #[test]
    fn g2_root_swap_invariance() {
        let (l1, l2) = (cx(0.3, 0.4), cx(-0.5, 0.2));
        let a = g2_classify(l1 + l2, l1 * l2, T).unwrap();
        let b = g2_classify(l2 + l1, l2 * l1, T).unwrap();
        assert_eq!(a.region, b.region);
    }

    #[test]
    fn tetra_examples() {
        for alpha in [c(0.5), cx(0.0, 0.9), cx(-0.3, 0.3)] {
            assert_eq!(tetra_classify(&TetraPoint::new(c(0.0), c(0.0), alpha), T).unwrap().region, Region::Interior);
        }
        let i = cx(0.0, 1.0);
        assert_eq!(tetra_classify(&TetraPoint::new(i, i, i), T).unwrap().region, Region::ExteriorOfClosure);
        for r in [0.1, 0.5, 0.9] {
            let v = tetra_classify(&TetraPoint::new(c(r), c(0.0), c(1.0 - r)), T).unwrap();
            assert_eq!(v.region, Region::Boundary);
        }
        assert_eq!(tetra_classify(&TetraPoint::new(c(0.0), c(0.0), c(1.0)), T).unwrap().region, Region::DistinguishedBoundary);
        assert_eq!(tetra_classify(&TetraPoint::new(c(0.0), c(0.0), c(2.0)), T).unwrap().region, Region::ExteriorOfClosure);
    }

    #[test]
    fn tetra_beta_witnesses_reconstruct_point() {
        let x = TetraPoint::new(cx(0.2, 0.1), cx(-0.1, 0.3), cx(0.05, -0.2));
        let v = tetra_classify(&x, T).unwrap();
        let (b1, b2) = (v.witnesses["beta1"], v.witnesses["beta2"]);
        assert!((b1 + b2.conj() * x.x3 - x.x1).norm() < 1e-14);
        assert!((b2 + b1.conj() * x.x3 - x.x2).norm() < 1e-14);
    }

    #[test]
    fn penta_examples() {
        assert_eq!(penta_classify(c(0.0), c(0.0), c(0.0), T).unwrap().region, Region::Interior);
        assert_eq!(penta_classify(c(1.0), c(0.0), c(-1.0), T).unwrap().region, Region::DistinguishedBoundary);
        assert_eq!(penta_classify(c(1.0), c(0.0), c(0.5), T).unwrap().region, Region::Boundary);
        assert_eq!(penta_classify(c(1.5), c(0.0), c(0.0), T).unwrap().region, Region::ExteriorOfClosure);
    }

    #[test]
    fn random_points_classify_without_fault() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..3000 {
            let mut r = |b: f64| cx(rng.gen_range(-b..b), rng.gen_range(-b..b));
            g2_classify(r(2.2), r(1.2), T).unwrap();
            tetra_classify(&TetraPoint::new(r(1.2), r(1.2), r(1.2)), T).unwrap();
            penta_classify(r(1.2), r(2.2), r(1.2), T).unwrap();
        }
    }

    #[test]
    fn diamond_laws() {
        let x = TetraPoint::new(cx(0.2, 0.1), cx(-0.3, 0.2), cx(0.1, 0.1));
        let id = TetraPoint::new(c(0.0), c(0.0), c(-1.0));
        let d = diamond(&id, &x).unwrap();
        assert!(d.dist(&x) < 1e-15);
        let d = diamond(&x, &TetraPoint::new(c(0.0), c(0.0), c(0.0))).unwrap();
        assert!(d.dist(&TetraPoint::new(x.x1, c(0.0), c(0.0))) < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut tested = 0;
        while tested < 50 {
            let mut r = || cx(rng.gen_range(-0.7..0.7), rng.gen_range(-0.7..0.7));
            let (x, y) = (TetraPoint::new(r(), r(), r()), TetraPoint::new(r(), r(), r()));
            if tetra_interior_margin(&x) < 0.0 || tetra_interior_margin(&y) < 0.0 {
                continue;
            }
            tested += 1;
            let xy = diamond(&x, &y).unwrap();
            for k in 0..64 {
                let z = cis(k as f64 * 0.1) * (0.05 + 0.9 * (k as f64) / 64.0);
                let lhs = big_psi_eval(z, &xy).unwrap();
                let rhs = big_psi_eval(big_psi_eval(z, &y).unwrap(), &x).unwrap();
                assert!((lhs - rhs).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn tau_represents_disc_automorphism() {
        assert!(tau_of(&DiscAut::identity()).dist(&TetraPoint::new(c(0.0), c(0.0), c(-1.0))) < 1e-15);
        let (xi, z) = (cis(0.8), cx(0.3, -0.4));
        let v = DiscAut::new(xi, z).unwrap();
        assert!(tau_of(&v).dist(&TetraPoint::new(-xi * z, z.conj(), -xi)) < 1e-15);
        let t = tau_of(&v);
        assert_ne!(tetra_classify(&t, T).unwrap().region, Region::ExteriorOfClosure);
        for k in 0..64 {
            let l = cis(k as f64) * 0.7;
            assert!((big_psi_eval(l, &t).unwrap() - v.eval(l)).norm() < 1e-13);
        }
    }

    #[test]
    fn embeddings_and_retractions() {
        let q = PentaPoint::new(cx(0.2, 0.1), cx(0.3, -0.2), cx(0.1, 0.05));
        let h = embed_penta(&q, T).unwrap();
        assert_eq!(retract_penta(&h, T).unwrap(), q);
        let g = G2Point::new(cx(0.4, 0.3), cx(-0.2, 0.1));
        assert_eq!(retract_g2(&embed_g2(&g, T).unwrap(), T).unwrap(), g);
        let x = TetraPoint::new(c(0.0), c(0.0), cx(0.3, 0.6));
        let h = embed_tetra(&x, T).unwrap();
        assert!(hexablock::h_member(&h, false, T).member);
        assert_eq!(retract_tetra(&h, T).unwrap(), x);
        assert!(embed_biball(c(0.8), c(0.8)).is_err());
        assert!(embed_tetra(&TetraPoint::new(c(2.0), c(0.0), c(0.0)), T).is_err());
        assert!(retract_penta(&HexaPoint::new(c(2.0), c(0.0), c(0.0), c(0.0)), T).is_err());
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..500 {
            let (a, x) = (cx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)), cx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
            let inside = a.norm_sqr() + x.norm_sqr() < 1.0;
            let h = HexaPoint::new(a, x, c(0.0), c(0.0));
            assert_eq!(hexablock::h_member(&h, false, 0.0).member, inside);
        }
    }

    #[test]
    fn penta_witness_lies_in_hn() {
        let h = penta_hn_witness(c(0.0), c(0.0), c(0.0), T).unwrap();
        assert!(h.dist(&HexaPoint::new(c(0.0), c(0.0), c(0.0), c(0.0))) == 0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let (mut sym, mut shifted) = (0, 0);
        while sym + shifted < 400 {
            let mut r = |b: f64| cx(rng.gen_range(-b..b), rng.gen_range(-b..b));
            let (a, s, p) = (r(1.0), r(2.0), r(1.0));
            if penta_interior_margin(a, s, p) <= 1e-6 {
                continue;
            }
            let (cm, cp) = penta_c_pm(s, p);
            let h = penta_hn_witness(a, s, p, T).unwrap();
            if cm < a.norm() && a.norm() < cp {
                sym += 1;
                assert_eq!(h, HexaPoint::new(a, s / 2.0, s / 2.0, p));
            } else {
                shifted += 1;
            }
            assert!((h.x1 + h.x2 - s).norm() < 1e-12 && h.x3 == p && h.a == a);
            assert!(hexablock::hn_member(&h, false, 0.0).member || hexablock::hn_member(&h, true, 1e-9).member);
        }
        assert!(sym > 0 && shifted > 0);
    }
}
