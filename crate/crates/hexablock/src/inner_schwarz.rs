//! Rational inner functions into the closed tetrablock and hexablock
//! (Fejér–Riesz pipeline), rational inner–outer splitting, and the two-point
//! Schwarz interpolation problem `f(0) = 0`, `f(λ₀) = target`.
//!
//! A rational 𝔼̄-inner function is stored as polynomials `(E₁, E₂, D)` with
//! degree bound `n`: `x = (E₁/D, E₂/D, D^{~n}/D)` where
//! `g^{~n}(λ) = λⁿ conj(g(1/λ̄))`. An ℍ̄-inner function adds an outer
//! numerator `A` with `|A|² = |D|² − |E₁|²` on the circle and an inner factor
//! (`c·B` or an explicit `a_in`), so that `a = c B A / D`.

use crate::domains_classic::tetra_distinguished_defect;
use crate::hexablock::h_member;
use crate::numerics_core::{
    cis, fejer_riesz, lift_point, phase_of, poly_reflect, BlaschkeProduct, Cx, FejerRieszMode, HexError, HexResult, HexaPoint, Mat2, PentaPoint, Poly,
    TetraPoint, TrigPoly,
};
use crate::psi_kappa::sup_kappa;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Circle samples used by the validators.
pub const CIRCLE_SAMPLES: usize = 512;
/// Interior samples used by the validators.
pub const INTERIOR_SAMPLES: usize = 100;
/// Tolerance for the circle identities (`|a|² + |x₁|² = 1`, b𝔼).
pub const CIRCLE_TOL: f64 = 1e-6;
/// Tolerance for the interior ℍ̄ margin.
pub const INTERIOR_TOL: f64 = 1e-8;
/// Tolerance for endpoint residuals of Schwarz interpolants.
pub const ENDPOINT_TOL: f64 = 1e-7;

fn one() -> Cx {
    Cx::new(1.0, 0.0)
}

fn zero() -> Cx {
    Cx::new(0.0, 0.0)
}

/// `k`-th of `m` equally spaced points on the unit circle.
fn circle_point(k: usize, m: usize) -> Cx {
    cis(TAU * k as f64 / m as f64)
}

/// Deterministic interior samples (golden-angle spiral, radius < 1).
fn interior_points(m: usize) -> impl Iterator<Item = Cx> {
    (0..m).map(move |k| cis(2.399_963_229_728_653 * k as f64) * (0.999 * ((k as f64 + 0.5) / m as f64).sqrt()))
}

/// Closed-disc grid (radial × angular, including the circle).
fn closed_disc_grid() -> impl Iterator<Item = Cx> {
    (0..=32).flat_map(|i| (0..128).map(move |j| cis(TAU * j as f64 / 128.0) * (i as f64 / 32.0)))
}

// ---------------------------------------------------------------------------
// Tetrablock-inner data

/// Rational 𝔼̄-inner function `(E₁/D, E₂/D, D^{~n}/D)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalTetraInner {
    pub e1: Poly,
    pub e2: Poly,
    pub d: Poly,
    pub n: usize,
}

impl RationalTetraInner {
    pub fn new(e1: Poly, e2: Poly, d: Poly, n: usize) -> Self {
        RationalTetraInner { e1, e2, d, n }
    }

    /// Build from `E₂` and `D`, setting `E₁ = E₂^{~n}`.
    pub fn from_e2(e2: Poly, d: Poly, n: usize) -> HexResult<Self> {
        let e1 = poly_reflect(&e2, n)?;
        Ok(RationalTetraInner { e1, e2, d, n })
    }

    /// `D^{~n}`.
    pub fn d_reflected(&self) -> HexResult<Poly> {
        poly_reflect(&self.d, self.n)
    }

    pub fn eval(&self, lambda: Cx) -> HexResult<TetraPoint> {
        tetra_inner_eval(self, lambda)
    }

    pub fn validate(&self) -> TetraInnerReport {
        tetra_inner_validate(self)
    }
}

/// Evaluate `(E₁/D, E₂/D, D^{~n}/D)` at a point of the closed disc.
pub fn tetra_inner_eval(t: &RationalTetraInner, lambda: Cx) -> HexResult<TetraPoint> {
    let d = t.d.eval(lambda);
    if d.norm() < 1e-14 || !d.is_finite() {
        return Err(HexError::Singular(format!("D vanishes at {lambda}")));
    }
    Ok(TetraPoint::new(t.e1.eval(lambda) / d, t.e2.eval(lambda) / d, t.d_reflected()?.eval(lambda) / d))
}

/// Outcome of [`tetra_inner_validate`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TetraInnerReport {
    pub valid: bool,
    /// Minimum of `|D|` over a closed-disc grid.
    pub min_d_modulus: f64,
    /// Smallest root modulus of `D` (infinite for constant `D`).
    pub min_d_root_modulus: f64,
    /// Largest coefficient of `E₁ − E₂^{~n}`.
    pub reflection_defect: f64,
    /// `max |E₁/D|` and `max |E₂/D|` on the circle.
    pub max_e1_ratio: f64,
    pub max_e2_ratio: f64,
    /// Largest b𝔼 defect of the circle images.
    pub max_be_defect: f64,
    pub failures: Vec<String>,
}

/// Check the three invariant families of 𝔼̄-inner data: `D` zero-free on the
/// closed disc, `E₁ = E₂^{~n}`, `|E₁|, |E₂| ≤ |D|` on the circle, and circle
/// images in b𝔼 within [`CIRCLE_TOL`].
pub fn tetra_inner_validate(t: &RationalTetraInner) -> TetraInnerReport {
    let mut failures = Vec::new();
    let scale = t.d.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max).max(1e-300);
    let min_d_modulus = closed_disc_grid().map(|l| t.d.eval(l).norm()).fold(f64::INFINITY, f64::min);
    let min_d_root_modulus = t.d.roots().iter().map(|r| r.norm()).fold(f64::INFINITY, f64::min);
    if t.d.is_zero() || min_d_modulus <= 1e-9 * scale || min_d_root_modulus <= 1.0 {
        failures.push(format!("D vanishes on the closed disc (min |D| = {min_d_modulus:.3e}, min root modulus = {min_d_root_modulus:.6})"));
    }
    let reflection_defect = match poly_reflect(&t.e2, t.n) {
        Ok(r) => t.e1.sub(&r).coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max),
        Err(e) => {
            failures.push(format!("E2 exceeds the degree bound: {e}"));
            f64::INFINITY
        }
    };
    if reflection_defect > 1e-9 * scale {
        failures.push(format!("E1 is not the reflection of E2 (defect {reflection_defect:.3e})"));
    }
    for (name, p) in [("D", &t.d), ("E1", &t.e1)] {
        if p.degree().unwrap_or(0) > t.n {
            failures.push(format!("{name} exceeds the degree bound n = {}", t.n));
        }
    }
    let (mut r1, mut r2, mut be) = (0.0f64, 0.0f64, 0.0f64);
    for k in 0..CIRCLE_SAMPLES {
        let l = circle_point(k, CIRCLE_SAMPLES);
        let d = t.d.eval(l).norm();
        r1 = r1.max(t.e1.eval(l).norm() / d);
        r2 = r2.max(t.e2.eval(l).norm() / d);
        be = be.max(tetra_inner_eval(t, l).map(|x| tetra_distinguished_defect(&x)).unwrap_or(f64::INFINITY));
    }
    if r1 > 1.0 + CIRCLE_TOL || r2 > 1.0 + CIRCLE_TOL {
        failures.push(format!("|E_j| exceeds |D| on the circle (max ratios {r1:.6}, {r2:.6})"));
    }
    if !(be <= CIRCLE_TOL) {
        failures.push(format!("circle image leaves the distinguished boundary (defect {be:.3e})"));
    }
    TetraInnerReport {
        valid: failures.is_empty(),
        min_d_modulus,
        min_d_root_modulus,
        reflection_defect,
        max_e1_ratio: r1,
        max_e2_ratio: r2,
        max_be_defect: be,
        failures,
    }
}

/// Degree of the finite Blaschke product `x₃ = D^{~n}/D`: the number of
/// zeros of `D^{~n}` in the open disc (with multiplicity).
pub fn x3_blaschke_degree(t: &RationalTetraInner) -> HexResult<usize> {
    let r = t.d_reflected()?;
    let deficit = t.n - r.degree().unwrap_or(0);
    Ok(deficit + r.roots().iter().filter(|z| z.norm() < 1.0).count())
}

// ---------------------------------------------------------------------------
// Hexablock-inner data

/// Rational ℍ̄-inner function `(c B A/D, E₁/D, E₂/D, D^{~n}/D)`, or, when
/// `a_in` is set, `(a_in A/D, …)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalHexaInner {
    pub tetra: RationalTetraInner,
    /// Outer numerator `A` with `|A|² = |D|² − |E₁|²` on the circle.
    pub a_poly: Poly,
    pub b: BlaschkeProduct,
    pub c: Cx,
    pub a_in: Option<BlaschkeProduct>,
}

impl RationalHexaInner {
    /// The inner factor multiplying `A/D`.
    pub fn inner_factor(&self, lambda: Cx) -> Cx {
        match &self.a_in {
            Some(ai) => ai.eval(lambda),
            None => self.c * self.b.eval(lambda),
        }
    }

    pub fn eval(&self, lambda: Cx) -> HexResult<HexaPoint> {
        let x = tetra_inner_eval(&self.tetra, lambda)?;
        let a = self.inner_factor(lambda) * self.a_poly.eval(lambda) / self.tetra.d.eval(lambda);
        Ok(HexaPoint::from_parts(a, x))
    }

    pub fn validate(&self) -> HexaInnerReport {
        hexa_inner_validate(self)
    }

    /// Replace the `a` coordinate by its outer part `A/D`.
    pub fn outer_replacement(&self) -> RationalHexaInner {
        RationalHexaInner { tetra: self.tetra.clone(), a_poly: self.a_poly.clone(), b: BlaschkeProduct::one(), c: one(), a_in: None }
    }
}

/// Outer factor `A` of `|D|² − |E₁|²` (zero polynomial when that difference
/// vanishes identically up to roundoff).
fn outer_numerator(t: &RationalTetraInner) -> HexResult<Poly> {
    let dd = TrigPoly::abs_sq(&t.d);
    let f = dd.sub(&TrigPoly::abs_sq(&t.e1));
    if f.max_abs_coeff() <= 1e-12 * dd.max_abs_coeff() {
        return Ok(Poly::zero());
    }
    fejer_riesz(&f, FejerRieszMode::NonStrict).map_err(|e| match e {
        HexError::Infeasible(m) => HexError::Domain(format!("invalid inner data: |D|^2 - |E1|^2 is negative on the circle ({m})")),
        other => other,
    })
}

/// Assemble `f = (cB·A/D, E₁/D, E₂/D, D^{~n}/D)` with `A` from the
/// Fejér–Riesz factorisation of `|D|² − |E₁|²`.
pub fn hexa_inner_construct(t: &RationalTetraInner, b: &BlaschkeProduct, c: Cx) -> HexResult<RationalHexaInner> {
    let rep = tetra_inner_validate(t);
    if !rep.valid {
        return Err(HexError::Domain(format!("tetrablock data is not inner: {}", rep.failures.join("; "))));
    }
    if (c.norm() - 1.0).abs() > 1e-8 {
        return Err(HexError::Domain("the phase c must be unimodular".into()));
    }
    let a_poly = outer_numerator(t)?;
    Ok(RationalHexaInner { tetra: t.clone(), a_poly, b: b.clone(), c: c / c.norm(), a_in: None })
}

/// Outcome of [`hexa_inner_validate`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HexaInnerReport {
    pub valid: bool,
    /// `max ||a|² + |x₁|² − 1|` over the circle samples.
    pub max_circle_norm_defect: f64,
    /// Largest b𝔼 defect of `(x₁, x₂, x₃)` over the circle samples.
    pub max_circle_be_defect: f64,
    /// Smallest closed-ℍ membership margin over the interior samples.
    pub min_interior_margin: f64,
    pub tetra: TetraInnerReport,
    pub failures: Vec<String>,
}

/// Validate an ℍ̄-inner function on [`CIRCLE_SAMPLES`] circle points and
/// [`INTERIOR_SAMPLES`] interior points, plus its 𝔼̄ projection.
pub fn hexa_inner_validate(f: &RationalHexaInner) -> HexaInnerReport {
    let tetra = tetra_inner_validate(&f.tetra);
    let mut failures: Vec<String> = tetra.failures.iter().map(|s| format!("projection: {s}")).collect();
    let (mut nd, mut bd) = (0.0f64, 0.0f64);
    for k in 0..CIRCLE_SAMPLES {
        match f.eval(circle_point(k, CIRCLE_SAMPLES)) {
            Ok(p) => {
                nd = nd.max((p.a.norm_sqr() + p.x1.norm_sqr() - 1.0).abs());
                bd = bd.max(tetra_distinguished_defect(&p.x()));
            }
            Err(_) => {
                nd = f64::INFINITY;
                bd = f64::INFINITY;
            }
        }
    }
    if !(nd <= CIRCLE_TOL) {
        failures.push(format!("|a|^2 + |x1|^2 = 1 fails on the circle (defect {nd:.3e})"));
    }
    if !(bd <= CIRCLE_TOL) {
        failures.push(format!("circle image leaves the distinguished boundary (defect {bd:.3e})"));
    }
    let mut mi = f64::INFINITY;
    for l in interior_points(INTERIOR_SAMPLES) {
        mi = mi.min(f.eval(l).map(|p| h_member(&p, true, 0.0).margin).unwrap_or(f64::NEG_INFINITY));
    }
    if !(mi >= -INTERIOR_TOL) {
        failures.push(format!("interior image leaves the closed hexablock (margin {mi:.3e})"));
    }
    HexaInnerReport { valid: failures.is_empty(), max_circle_norm_defect: nd, max_circle_be_defect: bd, min_interior_margin: mi, tetra, failures }
}

// ---------------------------------------------------------------------------
// Inner–outer factorisation

/// `num/den = a_in · out_num/den` with `a_in` the Blaschke product over the
/// zeros of `num` in the open disc.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InnerOuter {
    pub a_in: BlaschkeProduct,
    pub out_num: Poly,
    pub out_den: Poly,
}

impl InnerOuter {
    pub fn outer_eval(&self, lambda: Cx) -> Cx {
        self.out_num.eval(lambda) / self.out_den.eval(lambda)
    }
}

/// Split a rational function bounded by one on the closed disc into its
/// inner (finite Blaschke) and outer parts.
pub fn rational_inner_outer(num: &Poly, den: &Poly) -> HexResult<InnerOuter> {
    if den.is_zero() || den.roots().iter().any(|r| r.norm() <= 1.0) {
        return Err(HexError::Domain("denominator vanishes on the closed disc".into()));
    }
    let sup = (0..CIRCLE_SAMPLES).map(|k| {
        let l = circle_point(k, CIRCLE_SAMPLES);
        num.eval(l).norm() / den.eval(l).norm()
    });
    let sup = sup.fold(0.0, f64::max);
    if sup > 1.0 + 1e-9 {
        return Err(HexError::Domain(format!("function exceeds modulus one on the circle (max {sup:.6})")));
    }
    let num_t = num.trimmed();
    let Some(deg) = num_t.degree() else {
        return Ok(InnerOuter { a_in: BlaschkeProduct::one(), out_num: Poly::zero(), out_den: den.clone() });
    };
    let lead = num_t.coeffs[deg];
    let roots = num_t.roots();
    let (inside, outside): (Vec<Cx>, Vec<Cx>) = roots.iter().partition(|r| r.norm() < 1.0);
    let mut out_num = Poly::from_roots(lead, &outside);
    for r in &inside {
        out_num = out_num.mul(&Poly::new(vec![one(), -r.conj()]));
    }
    Ok(InnerOuter { a_in: BlaschkeProduct { phase: one(), zeros: inside }, out_num, out_den: den.clone() })
}

// ---------------------------------------------------------------------------
// Explicit inner data

/// Blaschke product `g(λ) = λ·m(λ)` with `g(λ₀) = w`, for `|w| ≤ |λ₀|`;
/// `m` is the disc automorphism with `m(λ₀) = w/λ₀` (a constant when
/// `|w| = |λ₀|`).
pub fn scalar_interpolant(lambda0: Cx, w: Cx) -> HexResult<BlaschkeProduct> {
    let eta = w / lambda0;
    if eta.norm() > 1.0 + 1e-10 {
        return Err(HexError::Domain(format!("|w| exceeds |lambda0| ({} > {})", w.norm(), lambda0.norm())));
    }
    if eta.norm() >= 1.0 - 1e-10 {
        return Ok(BlaschkeProduct { phase: phase_of(eta), zeros: vec![zero()] });
    }
    let (kappa, alpha) = mobius_through(lambda0, eta);
    Ok(BlaschkeProduct { phase: kappa, zeros: vec![zero(), alpha] })
}

/// The disc automorphism `m = (φ + η)/(1 + η̄φ)`, `φ(λ) = (λ − λ₀)/(1 − λ̄₀λ)`,
/// written as `κ (λ − α)/(1 − ᾱλ)`; it satisfies `m(λ₀) = η`.
fn mobius_through(lambda0: Cx, eta: Cx) -> (Cx, Cx) {
    let alpha = (lambda0 - eta) / (one() - lambda0.conj() * eta);
    let kappa = (one() - lambda0.conj() * eta) / (one() - lambda0 * eta.conj());
    (phase_of(kappa), alpha)
}

/// `(Π (1 − ᾱλ), Π (λ − α))` over the zeros of a Blaschke product.
fn blaschke_polys(b: &BlaschkeProduct) -> (Poly, Poly) {
    let q = b.zeros.iter().fold(Poly::constant(one()), |acc, a| acc.mul(&Poly::new(vec![one(), -a.conj()])));
    let p = Poly::from_roots(one(), &b.zeros);
    (q, p)
}

/// 𝔼̄-inner data for `(g₁, g₂, g₁g₂)` with `g₁, g₂` finite Blaschke
/// products: `D = κQ₁Q₂`, `E₁ = κc₁P₁Q₂`, `E₂ = κc₂Q₁P₂`, `n = deg g₁ + deg g₂`,
/// `κ̄² = c₁c₂`.
pub fn tetra_inner_from_triangular(g1: &BlaschkeProduct, g2: &BlaschkeProduct) -> RationalTetraInner {
    let (q1, p1) = blaschke_polys(g1);
    let (q2, p2) = blaschke_polys(g2);
    let kappa = (g1.phase * g2.phase).sqrt().conj();
    RationalTetraInner {
        e1: p1.mul(&q2).scale(kappa * g1.phase),
        e2: q1.mul(&p2).scale(kappa * g2.phase),
        d: q1.mul(&q2).scale(kappa),
        n: g1.degree() + g2.degree(),
    }
}

/// 𝔼̄-inner data for `(0, 0, g)` with `g` a finite Blaschke product.
pub fn tetra_inner_from_x3(g: &BlaschkeProduct) -> RationalTetraInner {
    let (q, _) = blaschke_polys(g);
    let d = q.scale(g.phase.sqrt().conj());
    let n = g.degree();
    RationalTetraInner { e1: Poly::zero(), e2: Poly::zero(), d, n }
}

// ---------------------------------------------------------------------------
// Schwarz problem

/// Two-point problem: find a rational ℍ̄-inner `f` with `f(0) = 0` and
/// `f(λ₀) = target`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchwarzProblem {
    pub lambda0: Cx,
    pub target: HexaPoint,
}

/// Name of the tetrablock Schwarz inequality.
pub const TETRA_INEQUALITY: &str = "tetrablock Schwarz inequality: max{(|x1-conj(x2)x3|+|x1x2-x3|)/(1-|x2|^2), (|x2-conj(x1)x3|+|x1x2-x3|)/(1-|x1|^2)} <= |lambda0|";
/// Name of the supremum bound.
pub const PSI_INEQUALITY: &str = "psi supremum bound: sup |psi_{z1,z2}(a,x1,x2,x3)| <= |lambda0|";
/// Name of the ball retraction bound.
pub const BALL_INEQUALITY: &str = "ball retraction bound: |a|^2 + max(|x1|,|x2|)^2 <= |lambda0|^2";

impl SchwarzProblem {
    /// Validated constructor: `0 < |λ₀| < 1` and target in ℍ.
    pub fn new(lambda0: Cx, target: HexaPoint) -> HexResult<Self> {
        let r = lambda0.norm();
        if !(r > 0.0 && r < 1.0) {
            return Err(HexError::Domain(format!("lambda0 must satisfy 0 < |lambda0| < 1 (got {r})")));
        }
        let m = h_member(&target, false, 0.0);
        if !m.member {
            return Err(HexError::Domain(format!("target is not in the open hexablock (margin {:.3e})", m.margin)));
        }
        Ok(SchwarzProblem { lambda0, target })
    }
}

/// Margins of the Schwarz conditions (nonnegative means satisfied).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchwarzReport {
    /// Consensus of the necessary conditions: tetrablock inequality, the
    /// supremum bound and the ball retraction bound.
    pub feasible: bool,
    /// First violated inequality, when infeasible.
    pub violated: Option<String>,
    pub tetra_margin: f64,
    /// `|λ₀| − |a|·sup|κ|` (supremum bound).
    pub psi_sup_margin: f64,
    /// Closed-ℍ margin of `(a/λ₀, x)` (scaled membership).
    pub scaled_membership_margin: f64,
    /// `|λ₀|√(1 − |x₁|²) − |a|` (bound on `|a|`).
    pub a_bound_margin: f64,
    /// `|λ₀|² − |a|² − max(|x₁|, |x₂|)²`.
    pub ball_margin: f64,
    /// Whether the supremum bound, scaled membership and the bound on `|a|` agree.
    pub conditions_agree: bool,
}

/// `max{(|x₁ − x̄₂x₃| + |x₁x₂ − x₃|)/(1 − |x₂|²), (|x₂ − x̄₁x₃| + |x₁x₂ − x₃|)/(1 − |x₁|²)}`.
pub fn tetra_schwarz_value(x: &TetraPoint) -> f64 {
    let tri = (x.x1 * x.x2 - x.x3).norm();
    let l = ((x.x1 - x.x2.conj() * x.x3).norm() + tri) / (1.0 - x.x2.norm_sqr());
    let r = ((x.x2 - x.x1.conj() * x.x3).norm() + tri) / (1.0 - x.x1.norm_sqr());
    l.max(r)
}

/// Evaluate the Schwarz conditions at tolerance `tol`.
pub fn schwarz_feasible(prob: &SchwarzProblem, tol: f64) -> SchwarzReport {
    let (l0, p) = (prob.lambda0.norm(), prob.target);
    let x = p.x();
    let tetra_margin = l0 - tetra_schwarz_value(&x);
    let s = sup_kappa(&x);
    let psi_sup_margin = if p.a.norm() == 0.0 { l0 } else { l0 - p.a.norm() * s };
    let scaled = HexaPoint::from_parts(p.a / prob.lambda0, x);
    let scaled_membership_margin = h_member(&scaled, true, 0.0).margin;
    let a_bound_margin = l0 * (1.0 - x.x1.norm_sqr()).max(0.0).sqrt() - p.a.norm();
    let ball_margin = l0 * l0 - p.a.norm_sqr() - x.x1.norm().max(x.x2.norm()).powi(2);
    let violated = if tetra_margin < -tol {
        Some(TETRA_INEQUALITY)
    } else if psi_sup_margin < -tol {
        Some(PSI_INEQUALITY)
    } else if ball_margin < -tol {
        Some(BALL_INEQUALITY)
    } else {
        None
    };
    let verdicts = [psi_sup_margin >= -tol, scaled_membership_margin >= -tol, a_bound_margin >= -tol];
    SchwarzReport {
        feasible: violated.is_none(),
        violated: violated.map(String::from),
        tetra_margin,
        psi_sup_margin,
        scaled_membership_margin,
        a_bound_margin,
        ball_margin,
        conditions_agree: verdicts.iter().all(|&v| v == verdicts[0]),
    }
}

/// Which construction produced a Schwarz interpolant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SchwarzCase {
    /// `x₁ = x₂ = 0` (includes `|x₃| = |λ₀|`): `x = (0, 0, λ·m)`.
    Diagonal,
    /// Triangular target with `a = 0`: `x = (g₁, g₂, g₁g₂)`.
    Triangular,
    /// Matrix realisation `λ·M_C(φ I)` of the unique lift.
    MatrixLift,
    /// Lift of user-supplied 𝔼̄-inner data.
    SuppliedLift,
}

/// A constructed interpolant with its endpoint residuals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchwarzSolution {
    pub case: SchwarzCase,
    pub f: RationalHexaInner,
    /// `max |f(0)|`.
    pub residual_at_zero: f64,
    /// `max |f(λ₀) − target|`.
    pub residual_at_lambda0: f64,
    pub report: HexaInnerReport,
}

/// Lift 𝔼̄-inner data `h` with `h(0) = 0` to an ℍ̄-inner `f` with
/// `f(0) = 0` and `a(λ₀) = a`: with `A/D(λ₀) = c₂ρ` and `η₀ = a/(λ₀ρ)`, the
/// Blaschke product is `c̄₂ λ B₀` where `B₀ = (φ + η₀)/(1 + η̄₀φ)`.
pub fn lift_tetra_inner(t: &RationalTetraInner, lambda0: Cx, a: Cx) -> HexResult<RationalHexaInner> {
    let base = hexa_inner_construct(t, &BlaschkeProduct::power(1), one())?;
    let r = base.a_poly.eval(lambda0) / t.d.eval(lambda0);
    let rho = r.norm();
    if rho <= 1e-14 {
        if a.norm() > 1e-14 {
            return Err(HexError::Unsupported(format!(
                "the supplied tetrablock data has A = 0, so only a = 0 can be reached (requested |a| = {:.6})",
                a.norm()
            )));
        }
        return Ok(base);
    }
    let c2 = r / rho;
    let eta = a / (lambda0 * rho);
    if eta.norm() > 1.0 + 1e-9 {
        return Err(HexError::Unsupported(format!(
            "|a| = {:.6} exceeds the lift bound |lambda0||A(lambda0)/D(lambda0)| = {:.6}",
            a.norm(),
            lambda0.norm() * rho
        )));
    }
    let b = if eta.norm() >= 1.0 - 1e-10 {
        BlaschkeProduct { phase: c2.conj() * phase_of(eta), zeros: vec![zero()] }
    } else {
        let (kappa, alpha) = mobius_through(lambda0, eta);
        BlaschkeProduct { phase: c2.conj() * kappa, zeros: vec![zero(), alpha] }
    };
    Ok(RationalHexaInner { b, ..base })
}

type PolyMat = [[Poly; 2]; 2];

fn pm_mul(a: &PolyMat, b: &PolyMat) -> PolyMat {
    let e = |i: usize, j: usize| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn pm_const(m: &Mat2) -> PolyMat {
    let c = Poly::constant;
    [[c(m.a11), c(m.a12)], [c(m.a21), c(m.a22)]]
}

/// ℍ̄-inner interpolant `π(λ·W(λ))` with `W = M_C(φ I)` the matricial Möbius
/// image of `φ(λ) = (λ − λ₀)/(1 − λ̄₀λ)` and `C = lift/λ₀`; requires
/// `‖lift‖ < |λ₀|`. Writing `W = N/Δ` with `Δ = q² + pq·conj(tr C) +
/// p²·conj(det C)`, `p = λ − λ₀`, `q = 1 − λ̄₀λ`, the data are `D = Δ`,
/// `E₁ = λN₁₁`, `E₂ = λN₂₂`, `n = 4` and `a = λN₂₁/Δ`.
pub fn matrix_lift_interpolant(lambda0: Cx, lift: &Mat2) -> HexResult<RationalHexaInner> {
    let c = lift.scale(one() / lambda0);
    if c.op_norm() >= 1.0 {
        return Err(HexError::Unsupported("the matrix lift needs ||lift|| < |lambda0|".into()));
    }
    let id = Mat2::identity();
    let k = id.sub(&c.mul(&c.adjoint())).psd_sqrt()?.inverse()?;
    let l = id.sub(&c.adjoint().mul(&c)).psd_sqrt()?;
    let p = Poly::new(vec![-lambda0, one()]);
    let q = Poly::new(vec![one(), -lambda0.conj()]);
    let ct = c.adjoint();
    let tr_conj = c.trace().conj();
    // pI + qC
    let m1: PolyMat = [
        [p.add(&q.scale(c.a11)), q.scale(c.a12)],
        [q.scale(c.a21), p.add(&q.scale(c.a22))],
    ];
    // (q + p conj(tr C)) I − p C*
    let diag = q.add(&p.scale(tr_conj));
    let m2: PolyMat = [
        [diag.sub(&p.scale(ct.a11)), p.scale(-ct.a12)],
        [p.scale(-ct.a21), diag.sub(&p.scale(ct.a22))],
    ];
    let n = pm_mul(&pm_mul(&pm_const(&k), &pm_mul(&m1, &m2)), &pm_const(&l));
    let delta = q.mul(&q).add(&p.mul(&q).scale(tr_conj)).add(&p.mul(&p).scale(c.det().conj()));
    let tetra = RationalTetraInner { e1: n[0][0].shift(1), e2: n[1][1].shift(1), d: delta.clone(), n: 4 };
    let io = rational_inner_outer(&n[1][0].shift(1), &delta)?;
    Ok(RationalHexaInner { tetra, a_poly: io.out_num, b: BlaschkeProduct::one(), c: one(), a_in: Some(io.a_in) })
}

/// Endpoint residuals `(max|f(0)|, max|f(λ₀) − target|)`.
pub fn endpoint_residuals(f: &RationalHexaInner, prob: &SchwarzProblem) -> HexResult<(f64, f64)> {
    let f0 = f.eval(zero())?;
    let f1 = f.eval(prob.lambda0)?;
    Ok((f0.coords().iter().map(|c| c.norm()).fold(0.0, f64::max), f1.dist(&prob.target)))
}

/// Construct a rational ℍ̄-inner interpolant. Supported cases: supplied
/// 𝔼̄-inner data, `x₁ = x₂ = 0`, triangular targets with `a = 0`, and
/// targets whose matrix lift has norm below `|λ₀|`. Anything else is
/// reported as unsupported, never approximated.
pub fn schwarz_construct(prob: &SchwarzProblem, supplied_tetra: Option<&RationalTetraInner>, tol: f64) -> HexResult<SchwarzSolution> {
    let rep = schwarz_feasible(prob, tol);
    if let Some(ineq) = rep.violated {
        return Err(HexError::SchwarzInfeasible { inequality: ineq });
    }
    let (l0, p) = (prob.lambda0, prob.target);
    let x = p.x();
    let (case, f) = if let Some(t) = supplied_tetra {
        let h0 = tetra_inner_eval(t, zero())?;
        let h1 = tetra_inner_eval(t, l0)?;
        if h0.coords().iter().any(|c| c.norm() > 1e-9) {
            return Err(HexError::Domain("supplied tetrablock data must vanish at 0".into()));
        }
        if h1.dist(&x) > ENDPOINT_TOL {
            return Err(HexError::Domain(format!("supplied tetrablock data misses the target at lambda0 by {:.3e}", h1.dist(&x))));
        }
        (SchwarzCase::SuppliedLift, lift_tetra_inner(t, l0, p.a)?)
    } else if x.x1.norm() <= 1e-12 && x.x2.norm() <= 1e-12 {
        let t = tetra_inner_from_x3(&scalar_interpolant(l0, x.x3)?);
        (SchwarzCase::Diagonal, lift_tetra_inner(&t, l0, p.a)?)
    } else if p.a.norm() <= 1e-14 && x.skew() <= 1e-12 * (1.0 + x.x3.norm()) {
        let t = tetra_inner_from_triangular(&scalar_interpolant(l0, x.x1)?, &scalar_interpolant(l0, x.x2)?);
        (SchwarzCase::Triangular, lift_tetra_inner(&t, l0, p.a)?)
    } else if let Some(lift) = lift_point(&p).ok().filter(|m| p.a.norm() > 1e-14 && m.op_norm() < l0.norm() * (1.0 - 1e-12)) {
        (SchwarzCase::MatrixLift, matrix_lift_interpolant(l0, &lift)?)
    } else {
        return Err(HexError::Unsupported(
            "general synthesis requires an external tetrablock-inner interpolant: supply tetra-inner data to lift".into(),
        ));
    };
    let (r0, r1) = endpoint_residuals(&f, prob)?;
    let report = hexa_inner_validate(&f);
    if r0 > ENDPOINT_TOL || r1 > ENDPOINT_TOL || !report.valid {
        return Err(HexError::Degenerate(format!(
            "constructed interpolant failed its checks (residuals {r0:.3e}, {r1:.3e}; {})",
            report.failures.join("; ")
        )));
    }
    Ok(SchwarzSolution { case, f, residual_at_zero: r0, residual_at_lambda0: r1, report })
}

// ---------------------------------------------------------------------------
// Pentablock bridge

/// Rational ℙ̄-inner function `(a, E/D, D^{~n}/D)` with `a` as in
/// [`RationalHexaInner`]; it corresponds to the ℍ̄-inner function
/// `(a, E/2D, E/2D, D^{~n}/D)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalPentaInner {
    pub e: Poly,
    pub d: Poly,
    pub n: usize,
    pub a_poly: Poly,
    pub b: BlaschkeProduct,
    pub c: Cx,
    pub a_in: Option<BlaschkeProduct>,
}

impl RationalPentaInner {
    pub fn eval(&self, lambda: Cx) -> HexResult<PentaPoint> {
        let h = penta_inner_to_hexa(self).eval(lambda)?;
        Ok(PentaPoint::new(h.a, h.x1 + h.x2, h.x3))
    }
}

/// `(a, s, p) ↦ (a, s/2, s/2, p)` on inner data (`E₁ = E₂ = E/2`).
pub fn penta_inner_to_hexa(f: &RationalPentaInner) -> RationalHexaInner {
    let half = f.e.scale(Cx::new(0.5, 0.0));
    RationalHexaInner {
        tetra: RationalTetraInner { e1: half.clone(), e2: half, d: f.d.clone(), n: f.n },
        a_poly: f.a_poly.clone(),
        b: f.b.clone(),
        c: f.c,
        a_in: f.a_in.clone(),
    }
}

/// Inverse bridge for symmetric data (`E₁ = E₂`), with `E = 2E₁`.
pub fn penta_inner_from_hexa(f: &RationalHexaInner) -> HexResult<RationalPentaInner> {
    let t = &f.tetra;
    let scale = t.d.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let asym = t.e1.sub(&t.e2).coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if asym > 1e-9 * scale {
        return Err(HexError::Domain(format!("hexablock data is not symmetric (|E1 - E2| = {asym:.3e})")));
    }
    Ok(RationalPentaInner {
        e: t.e1.scale(Cx::new(2.0, 0.0)),
        d: t.d.clone(),
        n: t.n,
        a_poly: f.a_poly.clone(),
        b: f.b.clone(),
        c: f.c,
        a_in: f.a_in.clone(),
    })
}

/// Validate ℙ̄-inner data on both sides of the bridge: the embedded
/// ℍ̄-inner function must validate and the circle images must lie in
/// `K₀ = {(s, p) ∈ bΓ, |a|² + |s|²/4 = 1}`.
pub fn penta_inner_validate(f: &RationalPentaInner) -> (bool, HexaInnerReport, f64) {
    let rep = hexa_inner_validate(&penta_inner_to_hexa(f));
    let k0 = (0..CIRCLE_SAMPLES)
        .map(|k| f.eval(circle_point(k, CIRCLE_SAMPLES)).map(|q| crate::automorphisms::k0_defect(&q)).unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    (rep.valid && k0 <= CIRCLE_TOL, rep, k0)
}

/// The pentablock Schwarz conditions stated directly in `(a, s, p)`:
/// `(|λ₀|√(1 − |s|²/4) − |a|, |λ₀| − (2|s − s̄p| + |s² − 4p|)/(4 − |s|²))`.
pub fn penta_schwarz_margins(lambda0: Cx, q: &PentaPoint) -> (f64, f64) {
    let l0 = lambda0.norm();
    let a_margin = l0 * (1.0 - q.s.norm_sqr() / 4.0).max(0.0).sqrt() - q.a.norm();
    let t = (2.0 * (q.s - q.s.conj() * q.p).norm() + (q.s * q.s - 4.0 * q.p).norm()) / (4.0 - q.s.norm_sqr());
    (a_margin, l0 - t)
}

/// Pentablock Schwarz feasibility, delegated to the embedded hexablock
/// problem at `(a, s/2, s/2, p)`.
pub fn penta_schwarz_feasible(lambda0: Cx, q: &PentaPoint, tol: f64) -> HexResult<SchwarzReport> {
    let prob = SchwarzProblem::new(lambda0, HexaPoint::new(q.a, q.s / 2.0, q.s / 2.0, q.p))?;
    Ok(schwarz_feasible(&prob, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics_core::cx;
    use crate::sampling::{random_disc, random_unimodular, rng_from_seed};

    fn c(re: f64) -> Cx {
        cx(re, 0.0)
    }

    #[test]
    fn trivial_tetra_examples() {
        for k in 1..4 {
            let t = RationalTetraInner::new(Poly::zero(), Poly::zero(), Poly::constant(one()), k);
            let rep = t.validate();
            assert!(rep.valid, "{:?}", rep.failures);
            let l = cx(0.3, -0.4);
            assert!(t.eval(l).unwrap().dist(&TetraPoint::new(zero(), zero(), l.powi(k as i32))) < 1e-15);
        }
        let t = RationalTetraInner::new(Poly::zero(), Poly::zero(), Poly::new(vec![c(2.0), c(1.0)]), 1);
        assert!(t.validate().valid);
        let l = cx(0.2, 0.5);
        assert!((t.eval(l).unwrap().x3 - (1.0 + 2.0 * l) / (2.0 + l)).norm() < 1e-15);
        assert_eq!(x3_blaschke_degree(&t).unwrap(), 1);
        // D vanishing inside the disc is rejected
        let bad = RationalTetraInner::new(Poly::zero(), Poly::zero(), Poly::new(vec![c(0.5), c(1.0)]), 1);
        assert!(!bad.validate().valid);
    }

    #[test]
    fn hexa_inner_examples() {
        for (m, n) in [(1usize, 1usize), (2, 3), (3, 1)] {
            let t = RationalTetraInner::new(Poly::zero(), Poly::zero(), Poly::constant(one()), n);
            let f = hexa_inner_construct(&t, &BlaschkeProduct::power(m), one()).unwrap();
            assert!(f.a_poly.trimmed().coeffs.len() == 1 && (f.a_poly.coeff(0).norm() - 1.0).abs() < 1e-12);
            let l = cx(0.4, 0.3);
            let v = f.eval(l).unwrap();
            let expect = HexaPoint::new(l.powi(m as i32) * f.a_poly.coeff(0), zero(), zero(), l.powi(n as i32));
            assert!(v.dist(&expect) < 1e-12);
            assert!(f.validate().valid, "{:?}", f.validate().failures);
            let mut g = f.clone();
            g.c = c(1.1);
            assert!(!g.validate().valid);
        }
        // (0, h1, h2, h1 h2) with diagonal Blaschke data
        let h1 = BlaschkeProduct::new(cis(0.4), vec![cx(0.3, 0.2), cx(-0.5, 0.1)]).unwrap();
        let h2 = BlaschkeProduct::new(cis(-1.0), vec![cx(0.1, -0.6)]).unwrap();
        let t = tetra_inner_from_triangular(&h1, &h2);
        let f = hexa_inner_construct(&t, &BlaschkeProduct::one(), one()).unwrap();
        assert!(f.a_poly.is_zero());
        let rep = f.validate();
        assert!(rep.valid, "{:?}", rep.failures);
        let l = cx(0.2, -0.7);
        let v = f.eval(l).unwrap();
        let expect = HexaPoint::new(zero(), h1.eval(l), h2.eval(l), h1.eval(l) * h2.eval(l));
        assert!(v.dist(&expect) < 1e-12);
    }

    fn random_tetra_data(seed: u64, n: usize) -> RationalTetraInner {
        let mut rng = rng_from_seed(seed);
        let roots: Vec<Cx> = (0..n).map(|_| random_unimodular(&mut rng) * rand::Rng::gen_range(&mut rng, 1.2..3.0)).collect();
        let d = Poly::from_roots(one(), &roots);
        let e2 = Poly::new((0..=n).map(|_| random_disc(&mut rng, 1.0)).collect());
        let ratio = (0..4096).map(|k| e2.eval(circle_point(k, 4096)).norm() / d.eval(circle_point(k, 4096)).norm()).fold(0.0, f64::max);
        RationalTetraInner::from_e2(e2.scale(c(0.9 / ratio)), d, n).unwrap()
    }

    #[test]
    fn random_inner_pipeline_validates() {
        for seed in 0..20 {
            let n = 1 + (seed as usize % 4);
            let t = random_tetra_data(seed, n);
            assert!(t.validate().valid, "{:?}", t.validate().failures);
            assert_eq!(x3_blaschke_degree(&t).unwrap(), n);
            let b = BlaschkeProduct::new(cis(seed as f64), vec![cx(0.2, 0.1 * seed as f64 / 20.0), cx(-0.4, 0.3)]).unwrap();
            let f = hexa_inner_construct(&t, &b, cis(0.3)).unwrap();
            let rep = f.validate();
            assert!(rep.valid, "seed {seed}: {:?}", rep.failures);
            assert!(f.outer_replacement().validate().valid);
            // A is zero-free on the open disc
            assert!(f.a_poly.roots().iter().all(|r| r.norm() >= 1.0 - 1e-9));
        }
    }

    #[test]
    fn inner_outer_examples() {
        let io = rational_inner_outer(&Poly::new(vec![zero(), c(0.5)]), &Poly::constant(one())).unwrap();
        assert_eq!(io.a_in.zeros.len(), 1);
        assert!(io.a_in.zeros[0].norm() < 1e-15);
        assert!((io.outer_eval(cx(0.3, 0.1)) - c(0.5)).norm() < 1e-14);
        let io = rational_inner_outer(&Poly::new(vec![c(0.5), c(0.1)]), &Poly::constant(one())).unwrap();
        assert!(io.a_in.zeros.is_empty());
        // (1/3)(λ − 1/2)/(1 − λ/2)
        let num = Poly::new(vec![c(-1.0 / 6.0), c(1.0 / 3.0)]);
        let den = Poly::new(vec![one(), c(-0.5)]);
        let io = rational_inner_outer(&num, &den).unwrap();
        for k in 0..64 {
            let l = circle_point(k, 64);
            assert!((io.a_in.eval(l).norm() - 1.0).abs() < 1e-12);
            assert!((io.outer_eval(l).norm() - 1.0 / 3.0).abs() < 1e-12);
        }
        for l in interior_points(50) {
            assert!((io.a_in.eval(l) * io.outer_eval(l) - num.eval(l) / den.eval(l)).norm() < 1e-9);
        }
        assert!(rational_inner_outer(&num, &Poly::new(vec![c(0.5), one()])).is_err());
        assert!(rational_inner_outer(&Poly::constant(c(2.0)), &Poly::constant(one())).is_err());
    }

    #[test]
    fn mobius_through_hits_eta() {
        let mut rng = rng_from_seed(3);
        for _ in 0..100 {
            let (l0, eta) = (random_disc(&mut rng, 0.95), random_disc(&mut rng, 1.0));
            let (kappa, alpha) = mobius_through(l0, eta);
            let m = |l: Cx| kappa * (l - alpha) / (one() - alpha.conj() * l);
            assert!((m(l0) - eta).norm() < 1e-10);
            let phi = |l: Cx| (l - l0) / (one() - l0.conj() * l);
            let l = cx(0.1, 0.3);
            assert!((m(l) - (phi(l) + eta) / (one() + eta.conj() * phi(l))).norm() < 1e-10);
        }
    }

    #[test]
    fn schwarz_feasibility_examples() {
        let l0 = c(0.5);
        let zero_target = SchwarzProblem::new(l0, HexaPoint::new(zero(), zero(), zero(), zero())).unwrap();
        assert!(schwarz_feasible(&zero_target, 1e-12).feasible);
        let p = SchwarzProblem::new(l0, HexaPoint::new(c(0.3), zero(), zero(), cis(1.0) * 0.5)).unwrap();
        assert!(schwarz_feasible(&p, 1e-12).feasible);
        let p = SchwarzProblem::new(l0, HexaPoint::new(c(0.495), c(0.2), zero(), zero())).unwrap();
        let r = schwarz_feasible(&p, 1e-12);
        assert!(!r.feasible && r.a_bound_margin < 0.0);
        // the bound on |a| and the supremum bound disagree: the bound on |a| is not sufficient
        let p = SchwarzProblem::new(l0, HexaPoint::new(c(0.49), zero(), c(0.3), zero())).unwrap();
        let r = schwarz_feasible(&p, 1e-12);
        assert!(r.a_bound_margin > 0.0 && r.psi_sup_margin < 0.0 && !r.conditions_agree && !r.feasible);
        assert_eq!(r.violated.as_deref(), Some(PSI_INEQUALITY));
        // the ball retraction bound is also necessary
        let p = SchwarzProblem::new(l0, HexaPoint::new(c(0.45), c(0.4), zero(), zero())).unwrap();
        let r = schwarz_feasible(&p, 1e-12);
        assert!(r.psi_sup_margin > 0.0 && r.tetra_margin > 0.0 && r.ball_margin < 0.0);
        assert_eq!(r.violated.as_deref(), Some(BALL_INEQUALITY));
        assert!(SchwarzProblem::new(c(0.0), HexaPoint::new(zero(), zero(), zero(), zero())).is_err());
    }

    #[test]
    fn schwarz_constructions() {
        let l0 = c(0.5);
        let p = SchwarzProblem::new(l0, HexaPoint::new(c(0.25), zero(), zero(), c(0.5))).unwrap();
        let s = schwarz_construct(&p, None, 1e-12).unwrap();
        assert_eq!(s.case, SchwarzCase::Diagonal);
        assert!(s.residual_at_lambda0 < 1e-12);
        let p = SchwarzProblem::new(l0, HexaPoint::new(zero(), c(0.25), c(0.25), c(1.0 / 16.0))).unwrap();
        let s = schwarz_construct(&p, None, 1e-12).unwrap();
        assert_eq!(s.case, SchwarzCase::Triangular);
        assert!(s.residual_at_lambda0 < 1e-12);
        let p = SchwarzProblem::new(l0, HexaPoint::new(c(0.2), c(0.25), c(0.1), c(0.025))).unwrap();
        let s = schwarz_construct(&p, None, 1e-12).unwrap();
        assert_eq!(s.case, SchwarzCase::MatrixLift);
        assert!(s.residual_at_lambda0 < 1e-10, "{}", s.residual_at_lambda0);
        // every point of a constructed interpolant satisfies the necessary conditions
        for mu in [cx(0.3, 0.1), cx(-0.6, 0.2)] {
            let q = s.f.eval(mu).unwrap();
            assert!(schwarz_feasible(&SchwarzProblem::new(mu, q).unwrap(), 1e-9).feasible);
        }
        let bad = SchwarzProblem::new(l0, HexaPoint::new(c(0.6), zero(), zero(), zero())).unwrap();
        assert!(matches!(schwarz_construct(&bad, None, 1e-12), Err(HexError::SchwarzInfeasible { .. })));
    }

    #[test]
    fn supplied_lift_reaches_both_endpoints() {
        for seed in 0..10 {
            let mut rng = rng_from_seed(100 + seed);
            let n = 2 + seed as usize % 3;
            // E₂ and D of degree ≤ n − 1 with E₂(0) = 0, so h(0) = 0
            let roots: Vec<Cx> = (0..n - 1).map(|_| random_unimodular(&mut rng) * 2.0).collect();
            let d = Poly::from_roots(one(), &roots);
            let mut e2 = Poly::new((0..n).map(|_| random_disc(&mut rng, 1.0)).collect());
            e2.coeffs[0] = zero();
            let ratio = (0..4096).map(|k| e2.eval(circle_point(k, 4096)).norm() / d.eval(circle_point(k, 4096)).norm()).fold(0.0, f64::max);
            let t = RationalTetraInner::from_e2(e2.scale(c(0.8 / ratio)), d, n).unwrap();
            let l0 = random_disc(&mut rng, 0.9);
            let x = t.eval(l0).unwrap();
            let base = hexa_inner_construct(&t, &BlaschkeProduct::one(), one()).unwrap();
            let bound = l0.norm() * (base.a_poly.eval(l0) / t.d.eval(l0)).norm();
            let a = random_unimodular(&mut rng) * bound * rand::Rng::gen_range(&mut rng, 0.0..1.0);
            let prob = SchwarzProblem::new(l0, HexaPoint::from_parts(a, x)).unwrap();
            let s = schwarz_construct(&prob, Some(&t), 1e-9).unwrap();
            assert_eq!(s.case, SchwarzCase::SuppliedLift);
            assert!(s.residual_at_zero < 1e-9 && s.residual_at_lambda0 < 1e-9);
        }
    }

    #[test]
    fn pentablock_bridge() {
        let n = 2;
        let f = RationalPentaInner {
            e: Poly::zero(),
            d: Poly::constant(one()),
            n,
            a_poly: Poly::constant(one()),
            b: BlaschkeProduct::power(1),
            c: one(),
            a_in: None,
        };
        let h = penta_inner_to_hexa(&f);
        let l = cx(0.3, 0.2);
        assert!(h.eval(l).unwrap().dist(&HexaPoint::new(l, zero(), zero(), l * l)) < 1e-15);
        let (ok, _, k0) = penta_inner_validate(&f);
        assert!(ok && k0 < 1e-12);
        assert_eq!(penta_inner_from_hexa(&h).unwrap(), f);
        // symmetric tetra data: E = 2E₁
        let g = BlaschkeProduct::new(one(), vec![cx(0.3, 0.1)]).unwrap();
        let t = tetra_inner_from_triangular(&g, &g);
        let hf = hexa_inner_construct(&t, &BlaschkeProduct::one(), one()).unwrap();
        let pf = penta_inner_from_hexa(&hf).unwrap();
        assert!(penta_inner_validate(&pf).0);
        let q = pf.eval(l).unwrap();
        assert!((q.s - 2.0 * g.eval(l)).norm() < 1e-12 && (q.p - g.eval(l).powi(2)).norm() < 1e-12);
    }

    #[test]
    fn pentablock_schwarz_conditions_match_embedded_problem() {
        let mut rng = rng_from_seed(12);
        let mut checked = 0;
        for _ in 0..400 {
            let (l1, l2) = (random_disc(&mut rng, 0.9), random_disc(&mut rng, 0.9));
            let (s, p) = (l1 + l2, l1 * l2);
            let a = random_disc(&mut rng, 0.6);
            let q = PentaPoint::new(a, s, p);
            let l0 = random_disc(&mut rng, 0.99);
            let Ok(rep) = penta_schwarz_feasible(l0, &q, 0.0) else { continue };
            let (am, tm) = penta_schwarz_margins(l0, &q);
            assert!((am - rep.a_bound_margin).abs() < 1e-12);
            assert!((tm - rep.tetra_margin).abs() < 1e-12);
            checked += 1;
        }
        assert!(checked > 100);
    }
}
