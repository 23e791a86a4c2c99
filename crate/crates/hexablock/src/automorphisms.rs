//! Automorphisms: the tetrablock maps `τ_{v,χ}` and `τ_{v,χ,F}`, the
//! hexablock subgroup `{T_{v,χ,ω}, T_{v,χ,F,ω}}` with closed-form inversion
//! and composition, the pentablock maps `f_{ω,v}`, and the constructive
//! parameter recovery that generates the distinguished boundaries b𝔼 and
//! H_p from a single base point.
//!
//! Parameters follow the normal forms `v = −ξ₁B_{z₁}` and `χ = −ξ₂B_{−z̄₂}`
//! with `B_α(λ) = (λ − α)/(ᾱλ − 1)`; in terms of [`DiscAut`] this means
//! `ξ₁ = v.xi`, `z₁ = v.z`, `ξ₂ = chi.xi` and `z₂ = −conj(chi.z)`.

use crate::hexablock::h_member;
use crate::numerics_core::{phase_of, Cx, DiscAut, HexError, HexResult, HexaPoint, PentaPoint, TetraPoint};
use serde::{Deserialize, Serialize};

/// Denominators below this modulus are reported as singular.
const SINGULAR: f64 = 1e-14;

/// Slack used by [`hexa_aut_apply`] when checking that the input lies in ℍ̄.
pub const APPLY_DOMAIN_TOL: f64 = 1e-8;

fn one() -> Cx {
    Cx::new(1.0, 0.0)
}

/// The parameters `(ξ₁, z₁, ξ₂, z₂)` of the pair `(v, χ)`.
fn params(v: &DiscAut, chi: &DiscAut) -> (Cx, Cx, Cx, Cx) {
    (v.xi, v.z, chi.xi, -chi.z.conj())
}

/// Common denominator `1 − z̄₁x₁ − ξ₂z̄₂x₂ + ξ₂z̄₁z̄₂x₃`.
fn common_den(v: &DiscAut, chi: &DiscAut, x: &TetraPoint) -> HexResult<Cx> {
    let (_, z1, xi2, z2) = params(v, chi);
    let den = (one() - z1.conj() * x.x1) - xi2 * z2.conj() * (x.x2 - z1.conj() * x.x3);
    if den.norm() < SINGULAR || !den.is_finite() {
        return Err(HexError::Singular(format!("automorphism denominator {den} vanishes")));
    }
    Ok(den)
}

/// `τ_{v,χ}(x)` without the flip.
fn tau_plain(v: &DiscAut, chi: &DiscAut, x: &TetraPoint) -> HexResult<TetraPoint> {
    let (xi1, z1, xi2, z2) = params(v, chi);
    let den = common_den(v, chi, x)?;
    let (x1, x2, x3) = (x.x1, x.x2, x.x3);
    let t1 = xi1 * ((x1 - z1) + xi2 * z2.conj() * (z1 * x2 - x3)) / den;
    let t2 = (z2 * (z1.conj() * x1 - one()) + xi2 * (x2 - z1.conj() * x3)) / den;
    let t3 = xi1 * (z2 * (z1 - x1) - xi2 * (z1 * x2 - x3)) / den;
    Ok(TetraPoint::new(t1, t2, t3))
}

// ---------------------------------------------------------------------------
// Tetrablock automorphisms

/// Tetrablock automorphism `τ_{v,χ}` (or `τ_{v,χ,F} = τ_{v,χ} ∘ F` when
/// `flip` is set, where `F` swaps the first two coordinates).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TetraAut {
    pub v: DiscAut,
    pub chi: DiscAut,
    pub flip: bool,
}

impl TetraAut {
    pub fn new(v: DiscAut, chi: DiscAut, flip: bool) -> Self {
        TetraAut { v, chi, flip }
    }

    pub fn identity() -> Self {
        TetraAut::new(DiscAut::identity(), DiscAut::identity(), false)
    }

    /// The flip `(x₁, x₂, x₃) ↦ (x₂, x₁, x₃)`.
    pub fn flip_only() -> Self {
        TetraAut::new(DiscAut::identity(), DiscAut::identity(), true)
    }

    pub fn apply(&self, x: &TetraPoint) -> HexResult<TetraPoint> {
        tetra_aut_apply(self, x)
    }
}

/// Apply a tetrablock automorphism (flip first when set).
pub fn tetra_aut_apply(t: &TetraAut, x: &TetraPoint) -> HexResult<TetraPoint> {
    let y = if t.flip { x.flipped() } else { *x };
    tau_plain(&t.v, &t.chi, &y)
}

// ---------------------------------------------------------------------------
// Hexablock automorphisms

/// Hexablock automorphism `T_{v,χ,ω}` (or `T_{v,χ,F,ω} = T_{v,χ,ω} ∘ F̂`
/// when `flip` is set, where `F̂` swaps `x₁` and `x₂`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HexaAut {
    pub v: DiscAut,
    pub chi: DiscAut,
    pub omega: Cx,
    pub flip: bool,
}

impl HexaAut {
    /// Validated constructor; `ω` must be unimodular.
    pub fn new(v: DiscAut, chi: DiscAut, omega: Cx, flip: bool) -> HexResult<Self> {
        if (omega.norm() - 1.0).abs() > 1e-8 {
            return Err(HexError::Domain(format!("omega must be unimodular (got modulus {})", omega.norm())));
        }
        let v = DiscAut::new(v.xi, v.z)?;
        let chi = DiscAut::new(chi.xi, chi.z)?;
        Ok(HexaAut { v, chi, omega: omega / omega.norm(), flip })
    }

    /// `T_{−B₀, −B₀, 1}`.
    pub fn identity() -> Self {
        HexaAut { v: DiscAut::identity(), chi: DiscAut::identity(), omega: one(), flip: false }
    }

    /// The normal-form parameters `(ξ₁, z₁, ξ₂, z₂)`.
    pub fn params(&self) -> (Cx, Cx, Cx, Cx) {
        params(&self.v, &self.chi)
    }

    /// Build from `(ξ₁, z₁, ξ₂, z₂, ω, flip)`.
    pub fn from_params(xi1: Cx, z1: Cx, xi2: Cx, z2: Cx, omega: Cx, flip: bool) -> HexResult<Self> {
        HexaAut::new(DiscAut { xi: xi1, z: z1 }, DiscAut { xi: xi2, z: -z2.conj() }, omega, flip)
    }

    /// The induced tetrablock automorphism.
    pub fn tetra_part(&self) -> TetraAut {
        TetraAut::new(self.v, self.chi, self.flip)
    }

    /// Apply without the ℍ̄ membership check (only singularities are
    /// reported).
    pub fn map(&self, p: &HexaPoint) -> HexResult<HexaPoint> {
        let x = if self.flip { p.x().flipped() } else { p.x() };
        let (_, z1, xi2, z2) = self.params();
        let den = common_den(&self.v, &self.chi, &x)?;
        let a = self.omega * xi2 * p.a * ((1.0 - z1.norm_sqr()) * (1.0 - z2.norm_sqr())).sqrt() / den;
        Ok(HexaPoint::from_parts(a, tau_plain(&self.v, &self.chi, &x)?))
    }

    pub fn apply(&self, p: &HexaPoint) -> HexResult<HexaPoint> {
        hexa_aut_apply(self, p)
    }

    pub fn invert(&self) -> HexaAut {
        hexa_aut_invert(self)
    }

    pub fn compose(&self, other: &HexaAut) -> HexaAut {
        hexa_aut_compose(self, other)
    }

    /// Distance between normal forms (maximum over parameter differences,
    /// infinite when the flip parities differ).
    pub fn dist(&self, o: &HexaAut) -> f64 {
        if self.flip != o.flip {
            return f64::INFINITY;
        }
        self.v.dist(&o.v).max(self.chi.dist(&o.chi)).max((self.omega - o.omega).norm())
    }
}

/// Apply a hexablock automorphism to a point of ℍ̄.
pub fn hexa_aut_apply(t: &HexaAut, p: &HexaPoint) -> HexResult<HexaPoint> {
    let m = h_member(p, true, APPLY_DOMAIN_TOL);
    if !m.member {
        return Err(HexError::Domain(format!("point is outside the closed hexablock (margin {:.3e})", m.margin)));
    }
    t.map(p)
}

/// Closed-form inverse: `T_{v,χ,ω}⁻¹ = T_{v⁻¹, χ⁻¹, ω̄}` and
/// `T_{v,χ,F,ω}⁻¹ = T_{(χ_*)⁻¹, (v_*)⁻¹, F, ω̄ξ₁ξ̄₂}`.
pub fn hexa_aut_invert(t: &HexaAut) -> HexaAut {
    if t.flip {
        let (xi1, _, xi2, _) = t.params();
        HexaAut {
            v: t.chi.star().invert(),
            chi: t.v.star().invert(),
            omega: phase_of(t.omega.conj() * xi1 * xi2.conj()),
            flip: true,
        }
    } else {
        HexaAut { v: t.v.invert(), chi: t.chi.invert(), omega: t.omega.conj(), flip: false }
    }
}

/// Product of two non-flip maps: writing `T₁ = T_{v, χ⁻¹, ω}` and
/// `T₂ = T_{ζ⁻¹, Y, θ}`, `T₁ ∘ T₂ = T_{v∘ζ⁻¹, Y∘χ⁻¹, ωθγ̄}` with
/// `γ = phase(1 − z̄₁α₁) · phase(1 − z₂ᾱ₂)`.
fn compose_plain(v1: &DiscAut, c1: &DiscAut, w1: Cx, v2: &DiscAut, c2: &DiscAut, w2: Cx) -> HexaAut {
    let z1 = v1.z;
    let z2 = -c1.invert().z.conj();
    let alpha1 = v2.invert().z;
    let alpha2 = -c2.z.conj();
    let gamma = phase_of(one() - z1.conj() * alpha1) * phase_of(one() - z2 * alpha2.conj());
    HexaAut { v: v1.compose(v2), chi: c2.compose(c1), omega: phase_of(w1 * w2 * gamma.conj()), flip: false }
}

/// `F̂ ∘ T_{v,χ,ω} = T_{χ_*, v_*, ωξ̄₁ξ₂} ∘ F̂`, returned as the non-flip
/// factor `T_{χ_*, v_*, ωξ̄₁ξ₂}`.
fn flip_conjugate(v: &DiscAut, chi: &DiscAut, omega: Cx) -> (DiscAut, DiscAut, Cx) {
    (chi.star(), v.star(), phase_of(omega * v.xi.conj() * chi.xi))
}

/// Product of two flip maps in closed form: writing `T₁ = T_{v, χ⁻¹, F, ω}`
/// and `T₂ = T_{ζ, Y⁻¹, F, θ}`,
/// `T₁ ∘ T₂ = T_{v∘(Y_*)⁻¹, ζ_*∘χ⁻¹, ωθβ̄}` with
/// `β = η₁η₂ · phase(1 − z̄₁η̄₂α₂) · phase(1 − z₂η̄₁ᾱ₁)`.
fn compose_flip_flip(t1: &HexaAut, t2: &HexaAut) -> HexaAut {
    let (_, z1, _, _) = t1.params();
    let z2 = -t1.chi.invert().z.conj();
    let (eta1, alpha1) = (t2.v.xi, t2.v.z);
    let y = t2.chi.invert();
    let (eta2, alpha2) = (y.xi, -y.z.conj());
    let beta = eta1 * eta2 * phase_of(one() - z1.conj() * eta2.conj() * alpha2) * phase_of(one() - z2 * eta1.conj() * alpha1.conj());
    HexaAut {
        v: t1.v.compose(&t2.chi.star()),
        chi: t2.v.star().compose(&t1.chi),
        omega: phase_of(t1.omega * t2.omega * beta.conj()),
        flip: false,
    }
}

/// Closed-form normal form of `T₁ ∘ T₂`; the flip parity is the XOR of the
/// parities. Mixed cases are reduced with `F̂² = id` and [`flip_conjugate`].
pub fn hexa_aut_compose(t1: &HexaAut, t2: &HexaAut) -> HexaAut {
    match (t1.flip, t2.flip) {
        (false, false) => compose_plain(&t1.v, &t1.chi, t1.omega, &t2.v, &t2.chi, t2.omega),
        (false, true) => {
            let mut r = compose_plain(&t1.v, &t1.chi, t1.omega, &t2.v, &t2.chi, t2.omega);
            r.flip = true;
            r
        }
        (true, false) => {
            let (v, chi, w) = flip_conjugate(&t2.v, &t2.chi, t2.omega);
            let mut r = compose_plain(&t1.v, &t1.chi, t1.omega, &v, &chi, w);
            r.flip = true;
            r
        }
        (true, true) => compose_flip_flip(t1, t2),
    }
}

// ---------------------------------------------------------------------------
// Pentablock automorphisms

/// `f_{ω,v}(a, s, p) = ξ/(1 − z̄s + z̄²p) · (ω(1 − |z|²)a,
/// −2z + (1 + |z|²)s − 2z̄p, ξ(z² − zs + p))` for `v = −ξB_z`.
pub fn penta_aut_apply(omega: Cx, v: &DiscAut, q: &PentaPoint) -> HexResult<PentaPoint> {
    let (xi, z) = (v.xi, v.z);
    let den = one() - z.conj() * q.s + z.conj() * z.conj() * q.p;
    if den.norm() < SINGULAR || !den.is_finite() {
        return Err(HexError::Singular(format!("pentablock automorphism denominator {den} vanishes")));
    }
    let f = xi / den;
    let zz = z.norm_sqr();
    Ok(PentaPoint::new(
        f * omega * (1.0 - zz) * q.a,
        f * (-2.0 * z + (1.0 + zz) * q.s - 2.0 * z.conj() * q.p),
        f * xi * (z * z - z * q.s + q.p),
    ))
}

/// The same map routed through the hexablock: `e_* ∘ T_{v, v_*, ω} ∘ e₀`
/// with `e₀(a, s, p) = (a, s/2, s/2, p)` and `e_*(a, x) = (a, x₁ + x₂, x₃)`.
pub fn penta_aut_via_hexa(omega: Cx, v: &DiscAut, q: &PentaPoint) -> HexResult<PentaPoint> {
    let t = HexaAut { v: *v, chi: v.star(), omega, flip: false };
    let h = t.map(&HexaPoint::new(q.a, q.s / 2.0, q.s / 2.0, q.p))?;
    Ok(PentaPoint::new(h.a, h.x1 + h.x2, h.x3))
}

/// Defect from `K₀ = {(a, s, p) : (s, p) ∈ bΓ, |a|² + |s|²/4 = 1}` (zero on
/// K₀), with `bΓ = {|p| = 1, s = s̄p, |s| ≤ 2}`.
pub fn k0_defect(q: &PentaPoint) -> f64 {
    let sphere = (q.a.norm_sqr() + q.s.norm_sqr() / 4.0 - 1.0).abs();
    let bgamma = (q.p.norm() - 1.0).abs().max((q.s - q.s.conj() * q.p).norm()).max((q.s.norm() - 2.0).max(0.0));
    sphere.max(bgamma)
}

// ---------------------------------------------------------------------------
// Generation of the distinguished boundaries

/// Base point from which a distinguished-boundary point is generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseOrbit {
    /// b𝔼 triangular part, generated from `(1, 1, 1)` (or H_p from `(0, 1, 1, 1)`).
    Triangular,
    /// b𝔼 non-triangular part, generated from `(0, 0, 1)` (or H_p from `(1, 0, 0, 1)`).
    NonTriangular,
}

impl BaseOrbit {
    pub fn tetra_base(&self) -> TetraPoint {
        let (o, z) = (one(), Cx::new(0.0, 0.0));
        match self {
            BaseOrbit::Triangular => TetraPoint::new(o, o, o),
            BaseOrbit::NonTriangular => TetraPoint::new(z, z, o),
        }
    }

    pub fn hexa_base(&self) -> HexaPoint {
        let (o, z) = (one(), Cx::new(0.0, 0.0));
        match self {
            BaseOrbit::Triangular => HexaPoint::new(z, o, o, o),
            BaseOrbit::NonTriangular => HexaPoint::new(o, z, z, o),
        }
    }
}

/// Points of b𝔼 with `|x₂| ≥ 1 − TRIANGULAR_CUTOFF` are treated as
/// triangular by the parameter recovery.
const TRIANGULAR_CUTOFF: f64 = 1e-12;

/// Recover `(v, χ)` with `x = τ_{v,χ}(base)` for a point `x ∈ b𝔼`:
/// triangular points use `z₁ = z₂ = 0`, `ξ = (x₁, x₂)` on `(1, 1, 1)`;
/// otherwise `z₁ = −x₁x̄₃`, `z₂ = 0`, `ξ = (x₃, 1)` on `(0, 0, 1)`.
pub fn be_parameters(x: &TetraPoint, tol: f64) -> HexResult<(TetraAut, BaseOrbit)> {
    let defect = crate::domains_classic::tetra_distinguished_defect(x);
    if defect > tol.max(1e-12) {
        return Err(HexError::Domain(format!("point is not on the distinguished boundary (defect {defect:.3e})")));
    }
    if x.x2.norm() >= 1.0 - TRIANGULAR_CUTOFF {
        let v = DiscAut { xi: phase_of(x.x1), z: Cx::new(0.0, 0.0) };
        let chi = DiscAut { xi: phase_of(x.x2), z: Cx::new(0.0, 0.0) };
        Ok((TetraAut::new(v, chi, false), BaseOrbit::Triangular))
    } else {
        let x3 = phase_of(x.x3);
        let v = DiscAut { xi: x3, z: -x.x1 * x3.conj() };
        Ok((TetraAut::new(v, DiscAut::identity(), false), BaseOrbit::NonTriangular))
    }
}

/// Recover `T` with `p = T(base)` for a point `p ∈ H_p`, using the same
/// parameters as [`be_parameters`] and `ω = phase(a)`.
pub fn hp_parameters(p: &HexaPoint, tol: f64) -> HexResult<(HexaAut, BaseOrbit)> {
    let m = crate::hexablock::hp_member(p, tol.max(1e-12));
    if !m.member {
        return Err(HexError::Domain(format!("point is not in H_p (margin {:.3e})", m.margin)));
    }
    let (t, base) = be_parameters(&p.x(), tol)?;
    Ok((HexaAut { v: t.v, chi: t.chi, omega: phase_of(p.a), flip: false }, base))
}
