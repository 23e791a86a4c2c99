//! Real-coordinate geometry: membership in ℍ ∩ ℝ⁴ through the potential
//! `K = 1/sup|κ|`, concavity probes for `K`, the six boundary faces
//! `C₁…C₆` over the faces `Δ₁…Δ₄` of the real tetrahedron, the
//! classification of `∂𝔼 ∖ b𝔼` into `∂₂𝔼`/`∂₃𝔼`, the defining function
//! `ρ` with its Levi form, and the real pentablock sets `𝔗₁, 𝔗₂, 𝔈, 𝔖₁, 𝔖₂`.

use crate::automorphisms::TetraAut;
use crate::domains_classic::{tetra_classify, Region};
use crate::hexablock::is_triangular;
use crate::numerics_core::{phase_of, Cx, DiscAut, HexError, HexResult, HexaPoint, TetraPoint};
use crate::psi_kappa::sup_kappa;
use nalgebra::{Matrix3, SymmetricEigen};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Relative tolerance for the equality `|a|·sup|κ| = 1` defining C₅/C₆.
pub const C56_TOL: f64 = 1e-7;
/// Tolerance for a point lying on a tetrahedron face.
pub const FACE_TOL: f64 = 1e-9;

/// Vertices of the closed real tetrahedron `𝔼̄ ∩ ℝ³`.
pub const TETRA_VERTICES: [[f64; 3]; 4] = [[1.0, 1.0, 1.0], [-1.0, -1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0]];

/// Coefficients `(c₁, c₂, c₃)` of the face forms `Δⱼ: c·x + 1 = 0`.
const FACE_FORMS: [[f64; 3]; 4] = [[-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0], [1.0, 1.0, 1.0], [1.0, -1.0, -1.0]];

fn rc(v: f64) -> Cx {
    Cx::new(v, 0.0)
}

/// A point of ℝ⁴ viewed inside ℂ⁴.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RealHexaPoint {
    pub a: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl RealHexaPoint {
    pub fn new(a: f64, x1: f64, x2: f64, x3: f64) -> Self {
        RealHexaPoint { a, x1, x2, x3 }
    }

    pub fn x(&self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn to_complex(&self) -> HexaPoint {
        HexaPoint::new(rc(self.a), rc(self.x1), rc(self.x2), rc(self.x3))
    }

    /// Real part of a complex point (errors if any imaginary part exceeds `tol`).
    pub fn from_complex(p: &HexaPoint, tol: f64) -> HexResult<Self> {
        if p.coords().iter().any(|c| c.im.abs() > tol) {
            return Err(HexError::Domain("point is not real".into()));
        }
        Ok(RealHexaPoint::new(p.a.re, p.x1.re, p.x2.re, p.x3.re))
    }
}

/// The four affine forms `c·x + 1` (nonnegative exactly on the closed tetrahedron).
pub fn face_forms(x: [f64; 3]) -> [f64; 4] {
    FACE_FORMS.map(|c| c[0] * x[0] + c[1] * x[1] + c[2] * x[2] + 1.0)
}

/// `K(x) = 1/sup|κ|` on the closed real tetrahedron (0 where the supremum
/// is infinite); `None` outside it.
pub fn k_real(x: [f64; 3]) -> Option<f64> {
    if face_forms(x).iter().any(|&f| f < -FACE_TOL) {
        return None;
    }
    let s = sup_kappa(&TetraPoint::new(rc(x[0]), rc(x[1]), rc(x[2])));
    Some(if s.is_finite() { 1.0 / s } else { 0.0 })
}

/// Real membership verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealVerdict {
    pub region: Region,
    /// `min(smallest face form, K(x) − |a|)`; positive exactly on the interior.
    pub margin: f64,
    pub k: Option<f64>,
}

/// Membership in ℍ ∩ ℝ⁴: the tetrahedron forms are positive and `|a| < K(x)`.
pub fn real_h_member(p: &RealHexaPoint, tol: f64) -> RealVerdict {
    let forms = face_forms(p.x());
    let fmin = forms.iter().cloned().fold(f64::INFINITY, f64::min);
    let k = k_real(p.x());
    let margin = match k {
        Some(k) => fmin.min(k - p.a.abs()),
        None => fmin,
    };
    let region = if margin > tol {
        Region::Interior
    } else if margin >= -tol {
        Region::Boundary
    } else {
        Region::ExteriorOfClosure
    };
    RealVerdict { region, margin, k }
}

/// Labels of the boundary sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Face {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
}

impl Face {
    pub fn as_str(self) -> &'static str {
        match self {
            Face::C1 => "C1",
            Face::C2 => "C2",
            Face::C3 => "C3",
            Face::C4 => "C4",
            Face::C5 => "C5",
            Face::C6 => "C6",
        }
    }
}

/// A face label with the defect of its defining equality (0 is exact).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FaceLabel {
    pub label: Face,
    pub margin: f64,
}

/// Every boundary set containing `p`: `Cⱼ` (j ≤ 4) when `x ∈ Δⱼ` and
/// `|a|·sup|κ| ≤ 1`; `C₅`/`C₆` when `x` is in the open tetrahedron and
/// `±a·sup|κ| = 1` (relative tolerance [`C56_TOL`]).
pub fn face_classify(p: &RealHexaPoint) -> Vec<FaceLabel> {
    let forms = face_forms(p.x());
    let mut out = Vec::new();
    if forms.iter().any(|&f| f < -FACE_TOL) {
        return out;
    }
    let s = sup_kappa(&TetraPoint::new(rc(p.x1), rc(p.x2), rc(p.x3)));
    let scaled = if p.a == 0.0 { 0.0 } else { p.a.abs() * s };
    let faces = [Face::C1, Face::C2, Face::C3, Face::C4];
    for (j, &f) in forms.iter().enumerate() {
        if f.abs() <= FACE_TOL && scaled <= 1.0 + C56_TOL {
            out.push(FaceLabel { label: faces[j], margin: f.abs() });
        }
    }
    if forms.iter().all(|&f| f > FACE_TOL) {
        let defect = (scaled - 1.0).abs();
        if defect <= C56_TOL {
            out.push(FaceLabel { label: if p.a >= 0.0 { Face::C5 } else { Face::C6 }, margin: defect });
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Sampling helpers for the probes

fn random_barycentric(rng: &mut ChaCha8Rng, k: usize) -> Vec<f64> {
    let w: Vec<f64> = (0..k).map(|_| -rng.gen_range(1e-12..1.0f64).ln()).collect();
    let s: f64 = w.iter().sum();
    w.into_iter().map(|v| v / s).collect()
}

fn combine(vertices: &[[f64; 3]], w: &[f64]) -> [f64; 3] {
    let mut x = [0.0; 3];
    for (v, t) in vertices.iter().zip(w) {
        for i in 0..3 {
            x[i] += t * v[i];
        }
    }
    x
}

/// Uniform point of the real tetrahedron.
pub fn random_tetra_real(rng: &mut ChaCha8Rng) -> [f64; 3] {
    combine(&TETRA_VERTICES, &random_barycentric(rng, 4))
}

/// Vertices of face `Δⱼ` (`j ∈ 0..4`).
pub fn face_vertices(j: usize) -> Vec<[f64; 3]> {
    TETRA_VERTICES.iter().copied().filter(|v| face_forms(*v)[j].abs() < 1e-12).collect()
}

/// Uniform point of face `Δⱼ`.
pub fn random_face_point(rng: &mut ChaCha8Rng, j: usize) -> [f64; 3] {
    let mut x = combine(&face_vertices(j), &random_barycentric(rng, 3));
    // project onto the face plane to remove roundoff
    let c = FACE_FORMS[j];
    let f = face_forms(x)[j] / 3.0;
    for i in 0..3 {
        x[i] -= f * c[i];
    }
    x
}

/// Random point of ℍ̄ ∩ ℝ⁴: `x` in the tetrahedron, `a` uniform in `[−K, K]`.
pub fn random_real_closed_point(rng: &mut ChaCha8Rng) -> RealHexaPoint {
    let x = random_tetra_real(rng);
    let k = k_real(x).unwrap_or(0.0);
    RealHexaPoint::new(rng.gen_range(-1.0..=1.0) * k, x[0], x[1], x[2])
}

/// Random point of ∂ℍ ∩ ℝ⁴: either `a = ±K(x)` over the open tetrahedron
/// or `x` on a face with `|a| ≤ K(x)`.
pub fn random_real_boundary_point(rng: &mut ChaCha8Rng) -> RealHexaPoint {
    if rng.gen_bool(0.5) {
        let x = random_tetra_real(rng);
        let k = k_real(x).unwrap_or(0.0);
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        RealHexaPoint::new(sign * k, x[0], x[1], x[2])
    } else {
        let j = rng.gen_range(0..4);
        let x = random_face_point(rng, j);
        let k = k_real(x).unwrap_or(0.0);
        RealHexaPoint::new(rng.gen_range(-1.0..=1.0) * k, x[0], x[1], x[2])
    }
}

/// Outcome of a sampling probe.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub samples: usize,
    /// Samples where the tested property applied.
    pub applicable: usize,
    pub violations: usize,
    /// Largest violation observed (0 if none).
    pub max_excess: f64,
}

/// Extreme-set probe for `C₁…C₄`: for `p ∈ Cⱼ`, `q ∈ ℍ̄ ∩ ℝ⁴` (on the same
/// face half of the time) and `t ∈ (0, 1)`, whenever `tp + (1 − t)q ∈ Cⱼ`
/// both endpoints must lie in `Cⱼ`.
pub fn extreme_set_probe(rng: &mut ChaCha8Rng, samples: usize) -> ProbeReport {
    let faces = [Face::C1, Face::C2, Face::C3, Face::C4];
    let mut rep = ProbeReport { samples, applicable: 0, violations: 0, max_excess: 0.0 };
    let in_face = |p: &RealHexaPoint, f: Face| face_classify(p).iter().any(|l| l.label == f);
    let on_face = |rng: &mut ChaCha8Rng, j: usize| {
        let x = random_face_point(rng, j);
        let k = k_real(x).unwrap_or(0.0);
        RealHexaPoint::new(rng.gen_range(-1.0..=1.0) * k, x[0], x[1], x[2])
    };
    for _ in 0..samples {
        let j = rng.gen_range(0..4);
        let p = on_face(rng, j);
        let q = if rng.gen_bool(0.5) { on_face(rng, j) } else { random_real_closed_point(rng) };
        let t = rng.gen_range(0.01..0.99);
        let m = RealHexaPoint::new(
            t * p.a + (1.0 - t) * q.a,
            t * p.x1 + (1.0 - t) * q.x1,
            t * p.x2 + (1.0 - t) * q.x2,
            t * p.x3 + (1.0 - t) * q.x3,
        );
        if in_face(&m, faces[j]) {
            rep.applicable += 1;
            if !(in_face(&p, faces[j]) && in_face(&q, faces[j])) {
                rep.violations += 1;
                rep.max_excess = rep.max_excess.max(face_forms(q.x())[j].abs().max(face_forms(p.x())[j].abs()));
            }
        }
    }
    rep
}

/// Concavity probe of `K` along random segments of the tetrahedron:
/// counts `t K(x) + (1 − t) K(y) − K(tx + (1 − t)y) > threshold`. This is
/// an empirical check, not a proof.
pub fn concavity_segment_probe(rng: &mut ChaCha8Rng, samples: usize, threshold: f64) -> ProbeReport {
    let mut rep = ProbeReport { samples, applicable: samples, violations: 0, max_excess: 0.0 };
    for _ in 0..samples {
        let (x, y) = (random_tetra_real(rng), random_tetra_real(rng));
        let t = rng.gen_range(0.0..1.0);
        let m = [0, 1, 2].map(|i| t * x[i] + (1.0 - t) * y[i]);
        let k = |v| k_real(v).unwrap_or(0.0);
        let excess = t * k(x) + (1.0 - t) * k(y) - k(m);
        if excess > threshold {
            rep.violations += 1;
        }
        rep.max_excess = rep.max_excess.max(excess);
    }
    rep
}

/// Central-difference Hessian of `K` with Richardson refinement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HessianProbe {
    pub hessian: [[f64; 3]; 3],
    pub eigenvalues: [f64; 3],
    /// All eigenvalues at most the tolerance (numerically negative semidefinite).
    pub negative_semidefinite: bool,
}

fn fd_hessian(f: &dyn Fn([f64; 3]) -> f64, x: [f64; 3], h: f64) -> [[f64; 3]; 3] {
    let at = |d: [f64; 3]| f([x[0] + d[0], x[1] + d[1], x[2] + d[2]]);
    let mut hs = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut e = [[0.0; 3]; 4];
            for (k, (si, sj)) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)].into_iter().enumerate() {
                e[k][i] += si * h;
                e[k][j] += sj * h;
            }
            hs[i][j] = (at(e[0]) - at(e[1]) - at(e[2]) + at(e[3])) / (4.0 * h * h);
        }
    }
    hs
}

/// Hessian probe of `K` at `x` (interior of the tetrahedron) with step `h`.
pub fn hessian_probe_k(x: [f64; 3], h: f64, tol: f64) -> HexResult<HessianProbe> {
    if face_forms(x).iter().any(|&f| f <= 2.0 * h) {
        return Err(HexError::Domain("point too close to the tetrahedron boundary for the step".into()));
    }
    let k = |v: [f64; 3]| k_real(v).unwrap_or(f64::NAN);
    let (h1, h2) = (fd_hessian(&k, x, h), fd_hessian(&k, x, h / 2.0));
    let mut hs = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            hs[i][j] = (4.0 * h2[i][j] - h1[i][j]) / 3.0;
        }
    }
    for i in 0..3 {
        for j in 0..i {
            let m = 0.5 * (hs[i][j] + hs[j][i]);
            hs[i][j] = m;
            hs[j][i] = m;
        }
    }
    let m = Matrix3::from_fn(|i, j| hs[i][j]);
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().cloned().collect();
    ev.sort_by(|a, b| a.total_cmp(b));
    let eigenvalues = [ev[0], ev[1], ev[2]];
    Ok(HessianProbe { hessian: hs, eigenvalues, negative_semidefinite: eigenvalues[2] <= tol })
}

// ---------------------------------------------------------------------------
// Defining function and Levi form

/// `ρ(x) = 4|x₁x₂ − x₃|² − (1 − |x₁|² − |x₂|² + |x₃|²)²`.
pub fn rho(x: &[Cx; 3]) -> f64 {
    let u = x[0] * x[1] - x[2];
    let v = 1.0 - x[0].norm_sqr() - x[1].norm_sqr() + x[2].norm_sqr();
    4.0 * u.norm_sqr() - v * v
}

/// `ρ`, its complex gradient `∂ρ/∂xᵢ`, the complex Hessian
/// `∂²ρ/∂xᵢ∂x̄ⱼ`, the Levi form `Σ ∂²ρ/∂xᵢ∂x̄ⱼ wᵢw̄ⱼ` and the pairing
/// `Σ ∂ρ/∂xᵢ wᵢ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LeviData {
    pub rho: f64,
    pub gradient: [Cx; 3],
    pub hessian: [[Cx; 3]; 3],
    pub levi: f64,
    pub pairing: Cx,
}

/// Evaluate [`LeviData`] on the chart `1 − |x₁|² − |x₂|² + |x₃|² > 0`,
/// `x₁x₂ ≠ x₃`.
pub fn rho_and_levi(x: &[Cx; 3], w: &[Cx; 3]) -> HexResult<LeviData> {
    let [x1, x2, x3] = *x;
    let u = x1 * x2 - x3;
    let v = 1.0 - x1.norm_sqr() - x2.norm_sqr() + x3.norm_sqr();
    if v <= 0.0 || u.norm() == 0.0 {
        return Err(HexError::Domain("point outside the chart of the defining function".into()));
    }
    let ub = u.conj();
    let gradient = [4.0 * x2 * ub + 2.0 * v * x1.conj(), 4.0 * x1 * ub + 2.0 * v * x2.conj(), -4.0 * ub - 2.0 * v * x3.conj()];
    let h11 = rc(4.0 * x2.norm_sqr() - 2.0 * x1.norm_sqr() + 2.0 * v);
    let h22 = rc(4.0 * x1.norm_sqr() - 2.0 * x2.norm_sqr() + 2.0 * v);
    let h33 = rc(4.0 - 2.0 * x3.norm_sqr() - 2.0 * v);
    let h12 = 2.0 * x1.conj() * x2;
    let h13 = -4.0 * x2 + 2.0 * x1.conj() * x3;
    let h23 = -4.0 * x1 + 2.0 * x2.conj() * x3;
    let hessian = [[h11, h12, h13], [h12.conj(), h22, h23], [h13.conj(), h23.conj(), h33]];
    let mut levi = Cx::new(0.0, 0.0);
    let mut pairing = Cx::new(0.0, 0.0);
    for i in 0..3 {
        pairing += gradient[i] * w[i];
        for j in 0..3 {
            levi += hessian[i][j] * w[i] * w[j].conj();
        }
    }
    Ok(LeviData { rho: rho(x), gradient, hessian, levi: levi.re, pairing })
}

// ---------------------------------------------------------------------------
// Parts of the tetrablock boundary

/// Part of `∂𝔼 ∖ b𝔼`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DePart {
    /// Non-triangular boundary points (contained in 𝔻³).
    Part2,
    /// Triangular boundary points.
    Part3,
}

/// Classification with, for `∂₂𝔼`, the normal form: the automorphism
/// `τ_{v, id}` with `v(λ) = (λ − x₁)/(1 − x̄₁λ)` followed by the rotation
/// `(y₁, y₂, y₃) ↦ (ξ₁y₁, ξ₂y₂, ξ₁ξ₂y₃)` maps `x` to `(0, r, 1 − r)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DePartResult {
    pub part: DePart,
    pub r: Option<f64>,
    pub automorphism: Option<TetraAut>,
    pub rotation: Option<(Cx, Cx)>,
}

impl DePartResult {
    /// Image of `x` under the normal-form map (∂₂𝔼 only).
    pub fn normal_form(&self, x: &TetraPoint) -> HexResult<TetraPoint> {
        let (Some(t), Some((r1, r2))) = (self.automorphism, self.rotation) else {
            return Err(HexError::Domain("no normal form for triangular boundary points".into()));
        };
        let y = t.apply(x)?;
        Ok(TetraPoint::new(r1 * y.x1, r2 * y.x2, r1 * r2 * y.x3))
    }
}

/// Classify `x ∈ ∂𝔼 ∖ b𝔼` as `∂₂𝔼` (non-triangular) or `∂₃𝔼` (triangular).
pub fn de_part_classify(x: &TetraPoint, tol: f64) -> HexResult<DePartResult> {
    let v = tetra_classify(x, tol)?;
    if v.region != Region::Boundary {
        return Err(HexError::Domain(format!("point is not in the boundary minus the distinguished boundary ({})", v.region.as_str())));
    }
    if is_triangular(x, tol.max(1e-12)) {
        return Ok(DePartResult { part: DePart::Part3, r: None, automorphism: None, rotation: None });
    }
    if x.x1.norm() >= 1.0 {
        return Err(HexError::ConsistencyFault("non-triangular boundary point with |x1| >= 1".into()));
    }
    let t = TetraAut::new(DiscAut { xi: rc(1.0), z: x.x1 }, DiscAut::identity(), false);
    let y = t.apply(x)?;
    let (p2, p3) = (phase_of(y.x2), phase_of(y.x3));
    let xi2 = p2.conj();
    let xi1 = p3.conj() / xi2;
    Ok(DePartResult { part: DePart::Part2, r: Some(y.x2.norm()), automorphism: Some(t), rotation: Some((xi1, xi2)) })
}

/// Points `yₙ = (εx₁ + (1−ε)x̄₁x₃, (1−ε)x₁ + εx̄₁x₃, x₃)`, `ε = 1 − 1/n`,
/// approaching a point of `∂₃𝔼` with `|x₁| = 1`.
pub fn part3_density_sequence(x: &TetraPoint, n: usize) -> TetraPoint {
    let e = 1.0 - 1.0 / n as f64;
    let w = x.x1.conj() * x.x3;
    TetraPoint::new(e * x.x1 + (1.0 - e) * w, (1.0 - e) * x.x1 + e * w, x.x3)
}

// ---------------------------------------------------------------------------
// Real pentablock

/// Labels of the real pentablock boundary sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PentaSet {
    T1,
    T2,
    E,
    S1,
    S2,
}

/// Whether `(s, p)` lies in the open real symmetrized bidisc.
pub fn g2_real_open(s: f64, p: f64) -> bool {
    s.abs() < 1.0 + p && p < 1.0
}

/// `|1 − (½s²/(1+p)) / (1 + √(1 − (s/(1+p))²))|`, the height of `𝔖₁`.
pub fn s1_height(s: f64, p: f64) -> f64 {
    let q = s / (1.0 + p);
    (1.0 - (0.5 * s * s / (1.0 + p)) / (1.0 + (1.0 - q * q).max(0.0).sqrt())).abs()
}

/// Every set among `𝔗₁, 𝔗₂, 𝔈, 𝔖₁, 𝔖₂` containing `(a, s, p)` (within `tol`).
pub fn penta_real_sets(a: f64, s: f64, p: f64, tol: f64) -> Vec<PentaSet> {
    let mut out = Vec::new();
    if (p - (s - 1.0)).abs() <= tol && (-tol..=2.0 + tol).contains(&s) && a.abs() <= 1.0 - s / 2.0 + tol {
        out.push(PentaSet::T1);
    }
    if (p - (-s - 1.0)).abs() <= tol && (-2.0 - tol..=tol).contains(&s) && a.abs() <= 1.0 + s / 2.0 + tol {
        out.push(PentaSet::T2);
    }
    if (p - 1.0).abs() <= tol && a * a + s * s / 4.0 <= 1.0 + tol {
        out.push(PentaSet::E);
    }
    if g2_real_open(s, p) {
        let h = s1_height(s, p);
        if (a - h).abs() <= tol * h.max(1.0) && a >= 0.0 {
            out.push(PentaSet::S1);
        }
        if (a + h).abs() <= tol * h.max(1.0) && a <= 0.0 {
            out.push(PentaSet::S2);
        }
    }
    out
}

/// Whether `𝔖₁ ⟺ C₅` and `𝔖₂ ⟺ C₆` hold at `(a, s, p)` under
/// `(a, s, p) ↦ (a, s/2, s/2, p)`.
pub fn penta_c56_correspondence(a: f64, s: f64, p: f64) -> bool {
    let sets = penta_real_sets(a, s, p, C56_TOL);
    let faces = face_classify(&RealHexaPoint::new(a, s / 2.0, s / 2.0, p));
    let has = |f: Face| faces.iter().any(|l| l.label == f);
    sets.contains(&PentaSet::S1) == has(Face::C5) && sets.contains(&PentaSet::S2) == has(Face::C6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics_core::cx;
    use crate::psi_kappa::k_star;
    use crate::sampling::rng_from_seed;

    #[test]
    fn k_values() {
        assert!((k_real([0.0, 0.0, 0.0]).unwrap() - 1.0).abs() < 1e-15);
        assert!((k_real([0.5, 0.5, 0.25]).unwrap() - 0.75).abs() < 1e-12);
        let mut rng = rng_from_seed(1);
        for _ in 0..200 {
            let x = random_tetra_real(&mut rng);
            let ks = k_star(&TetraPoint::new(rc(x[0]), rc(x[1]), rc(x[2])));
            if let Ok(ks) = ks {
                assert!((k_real(x).unwrap() - 1.0 / ks).abs() < 1e-10);
            }
        }
        assert!(k_real([1.0, 1.0, -1.0]).is_none());
    }

    #[test]
    fn real_membership() {
        assert_eq!(real_h_member(&RealHexaPoint::new(0.0, 0.0, 0.0, 0.0), 1e-12).region, Region::Interior);
        for (x1, x2) in [(0.3, -0.5), (0.9, 0.1), (-0.7, -0.7)] {
            let b = ((1.0f64 - x1 * x1) * (1.0 - x2 * x2)).sqrt();
            let inside = real_h_member(&RealHexaPoint::new(0.999 * b, x1, x2, x1 * x2), 1e-12);
            let outside = real_h_member(&RealHexaPoint::new(1.001 * b, x1, x2, x1 * x2), 1e-12);
            let on = real_h_member(&RealHexaPoint::new(b, x1, x2, x1 * x2), 1e-12);
            assert_eq!(inside.region, Region::Interior);
            assert_eq!(outside.region, Region::ExteriorOfClosure);
            assert_eq!(on.region, Region::Boundary);
        }
    }

    #[test]
    fn face_examples() {
        for r in [0.1, 0.5, 0.9] {
            let l: Vec<Face> = face_classify(&RealHexaPoint::new(1.0, 0.0, 0.0, r)).iter().map(|l| l.label).collect();
            assert_eq!(l, vec![Face::C5]);
            let l: Vec<Face> = face_classify(&RealHexaPoint::new(-1.0, 0.0, 0.0, r)).iter().map(|l| l.label).collect();
            assert_eq!(l, vec![Face::C6]);
        }
        let mut rng = rng_from_seed(2);
        let x = random_face_point(&mut rng, 0);
        let l: Vec<Face> = face_classify(&RealHexaPoint::new(0.0, x[0], x[1], x[2])).iter().map(|l| l.label).collect();
        assert_eq!(l, vec![Face::C1]);
        for _ in 0..300 {
            let p = random_real_boundary_point(&mut rng);
            assert!(!face_classify(&p).is_empty(), "{p:?}");
            assert_eq!(real_h_member(&p, 1e-9).region, Region::Boundary);
        }
        for j in 0..4 {
            assert_eq!(face_vertices(j).len(), 3);
        }
    }

    #[test]
    fn probes_report_no_violations() {
        let mut rng = rng_from_seed(5);
        let e = extreme_set_probe(&mut rng, 300);
        assert_eq!(e.violations, 0);
        assert!(e.applicable > 50);
        let c = concavity_segment_probe(&mut rng, 300, 1e-6);
        assert_eq!(c.violations, 0, "{c:?}");
        let h = hessian_probe_k([0.0, 0.0, 0.0], 1e-3, 1e-4).unwrap();
        assert!(h.eigenvalues.iter().all(|e| e.is_finite()));
        assert!(h.negative_semidefinite);
    }

    #[test]
    fn levi_examples() {
        for k in 1..10 {
            let r = k as f64 / 10.0;
            let d = rho_and_levi(&[rc(0.0), rc(r), rc(1.0 - r)], &[rc(1.0), rc(1.0), rc(0.0)]).unwrap();
            assert!((d.levi - 2.0 * (2.0 - r).powi(2)).abs() < 1e-12);
            assert!(d.pairing.norm() < 1e-12);
            assert!(d.rho.abs() < 1e-12);
        }
        assert!(rho_and_levi(&[rc(0.5), rc(0.5), rc(0.25)], &[rc(1.0), rc(0.0), rc(0.0)]).is_err());
        let mut rng = rng_from_seed(9);
        for _ in 0..50 {
            let x = [0, 1, 2].map(|_| crate::sampling::random_disc(&mut rng, 0.7));
            let Ok(d) = rho_and_levi(&x, &[rc(1.0), rc(0.0), rc(0.0)]) else { continue };
            let fd = crate::oracles::wirtinger_hessian_fd(&rho, &x, 1e-4);
            for i in 0..3 {
                for j in 0..3 {
                    assert!((fd[i][j] - d.hessian[i][j]).norm() < 1e-6, "{i}{j}: {} vs {}", fd[i][j], d.hessian[i][j]);
                }
            }
        }
    }

    #[test]
    fn boundary_parts() {
        for r in [0.2, 0.5, 0.8] {
            let x = TetraPoint::new(rc(1.0), rc(r), rc(r));
            assert_eq!(de_part_classify(&x, 1e-10).unwrap().part, DePart::Part3);
            let y = TetraPoint::new(rc(0.0), rc(r), rc(1.0 - r));
            let res = de_part_classify(&y, 1e-10).unwrap();
            assert_eq!(res.part, DePart::Part2);
            assert!((res.r.unwrap() - r).abs() < 1e-12);
            // a rotated and moved copy maps back to the same normal form
            let t = TetraAut::new(DiscAut { xi: cx(0.6, 0.8), z: cx(0.2, -0.3) }, DiscAut { xi: cx(0.0, 1.0), z: cx(-0.1, 0.4) }, false);
            let z = t.apply(&y).unwrap();
            let res = de_part_classify(&z, 1e-9).unwrap();
            assert_eq!(res.part, DePart::Part2);
            let nf = res.normal_form(&z).unwrap();
            let rr = res.r.unwrap();
            assert!(nf.dist(&TetraPoint::new(rc(0.0), rc(rr), rc(1.0 - rr))) < 1e-9, "{nf:?}");
            // density sequence
            for n in [10usize, 100, 1000] {
                let yn = part3_density_sequence(&x, n);
                assert_eq!(de_part_classify(&yn, 1e-9).unwrap().part, DePart::Part2);
            }
            assert!(part3_density_sequence(&x, 100000).dist(&x) < 1e-4);
        }
    }

    #[test]
    fn penta_real_examples() {
        let a0 = (2.0 + 5f64.sqrt()) / (3.0 + 5f64.sqrt());
        assert!(penta_real_sets(a0, 1.0, 0.5, 1e-12).contains(&PentaSet::S1));
        assert!(!penta_real_sets(a0, 0.0, 0.5, 1e-12).contains(&PentaSet::S1));
        assert!(penta_real_sets(1.0, 0.0, 0.5, 1e-12).contains(&PentaSet::S1));
        assert!(!penta_real_sets(1.0, 0.0, 1.0, 1e-12).contains(&PentaSet::S1));
        assert!(penta_real_sets(0.0, 2.0, 1.0, 1e-12).contains(&PentaSet::T1));
        assert!(penta_real_sets(0.5, 1.0, 1.0, 1e-12).contains(&PentaSet::E));
        assert!(penta_real_sets(-a0, 1.0, 0.5, 1e-12).contains(&PentaSet::S2));
        for (a, s, p) in [(a0, 1.0, 0.5), (-a0, 1.0, 0.5), (a0, 0.0, 0.5), (1.0, 0.0, 0.2)] {
            assert!(penta_c56_correspondence(a, s, p));
        }
    }
}
