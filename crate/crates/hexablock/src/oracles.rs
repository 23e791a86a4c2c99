//! Independent brute-force references.  Nothing here calls the closed-form
//! machinery it is used to validate: suprema and infima are found by polar
//! grid sweeps followed by deterministic local pattern-search refinement.

use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::numerics_core::{Cx, HexaPoint, Mat2};

/// Grid parameters shared by every oracle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub radial_points: usize,
    pub angular_points: usize,
    pub refinement_levels: usize,
    /// Rotates the angular grid; identical specs give bit-identical results.
    pub seed: u64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { radial_points: 10, angular_points: 16, refinement_levels: 3, seed: 0 }
    }
}

impl GridSpec {
    fn angle_offset(&self) -> f64 {
        // deterministic offset in [0, 1) angular cells derived from the seed
        let h = self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 11;
        (h as f64 / (1u64 << 53) as f64) * TAU / self.angular_points.max(1) as f64
    }

    /// Polar grid of the disc of radius `scale`; `closed` adds the boundary ring.
    fn polar(&self, scale: f64, closed: bool) -> Vec<Cx> {
        let nr = self.radial_points.max(1);
        let na = self.angular_points.max(1);
        let off = self.angle_offset();
        let mut pts = vec![Cx::new(0.0, 0.0)];
        for i in 1..=nr {
            let r = if closed { i as f64 / nr as f64 } else { (i as f64 - 0.5) / nr as f64 } * scale;
            for j in 0..na {
                pts.push(Cx::from_polar(r, off + TAU * j as f64 / na as f64));
            }
        }
        pts
    }
}

/// Sub-refinements (step halvings) per refinement level.
const HALVINGS_PER_LEVEL: usize = 4;
/// Maximum recentring moves before a step is halved.
const MAX_MOVES: usize = 200;
/// Offsets per real dimension in the local stencil.
const STENCIL: [f64; 5] = [-2.0, -1.0, 0.0, 1.0, 2.0];

/// Disc automorphism `ζ ↦ (ζ + c)/(1 + c̄ζ)` recentring steps at `c`.
fn mobius_step(c: Cx, zeta: Cx) -> Cx {
    (zeta + c) / (1.0 + c.conj() * zeta)
}

/// Deterministic local pattern search over two complex variables.
/// `better(a, b)` says whether value `a` improves on `b`; `step(c, d)` maps a
/// centre and displacement to a candidate.  Returns the improved (value, point).
fn pattern_search(
    f: &dyn Fn(Cx, Cx) -> f64,
    better: &dyn Fn(f64, f64) -> bool,
    step: &dyn Fn(Cx, Cx) -> Cx,
    start: (f64, Cx, Cx),
    h0: f64,
    levels: usize,
) -> (f64, Cx, Cx) {
    let (mut best, mut b1, mut b2) = start;
    let mut h = h0;
    for _ in 0..levels * HALVINGS_PER_LEVEL {
        for _ in 0..MAX_MOVES {
            let (c1, c2) = (b1, b2);
            let mut moved = false;
            for &p in &STENCIL {
                for &q in &STENCIL {
                    let z1 = step(c1, Cx::new(p * h, q * h));
                    for &r in &STENCIL {
                        for &s in &STENCIL {
                            let z2 = step(c2, Cx::new(r * h, s * h));
                            let v = f(z1, z2);
                            if better(v, best) {
                                best = v;
                                b1 = z1;
                                b2 = z2;
                                moved = true;
                            }
                        }
                    }
                }
            }
            if !moved {
                break;
            }
        }
        h *= 0.5;
    }
    (best, b1, b2)
}

fn psi_abs(p: &HexaPoint, z1: Cx, z2: Cx) -> f64 {
    let w = (1.0 - z1.norm_sqr()).max(0.0) * (1.0 - z2.norm_sqr()).max(0.0);
    if w == 0.0 {
        return 0.0;
    }
    let den = 1.0 - p.x1 * z1 - p.x2 * z2 + p.x3 * z1 * z2;
    p.a.norm() * w.sqrt() / den.norm()
}

/// Estimate `sup_{𝔻²} |ψ_{z₁,z₂}(p)|` with its argmax.  Level 0 is the polar
/// sweep alone; each further level performs four step halvings of a
/// hyperbolically scaled pattern search around the running argmax.
pub fn grid_sup_psi(p: &HexaPoint, spec: &GridSpec) -> (f64, (Cx, Cx)) {
    let grid = spec.polar(1.0, false);
    let mut best = (f64::NEG_INFINITY, Cx::new(0.0, 0.0), Cx::new(0.0, 0.0));
    for &z1 in &grid {
        for &z2 in &grid {
            let v = psi_abs(p, z1, z2);
            if v > best.0 {
                best = (v, z1, z2);
            }
        }
    }
    let f = |z1: Cx, z2: Cx| psi_abs(p, z1, z2);
    let (v, z1, z2) = pattern_search(&f, &|a, b| a > b, &mobius_step, best, 0.25, spec.refinement_levels);
    (v, (z1, z2))
}

/// Result of the definitional tetrablock test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DefinitionalVerdict {
    /// Minimum of `|1 − x₁z₁ − x₂z₂ + x₃z₁z₂|` found over the closed bidisc.
    pub min_abs: f64,
    pub argmin: (Cx, Cx),
    /// `min_abs > tol`: the point is a candidate member of 𝔼 (grids certify
    /// non-membership robustly, membership only approximately).
    pub candidate: bool,
}

/// Project onto the closed unit disc.
fn clamp_disc(z: Cx) -> Cx {
    let r = z.norm();
    if r > 1.0 {
        z / r
    } else {
        z
    }
}

/// The defining condition of 𝔼: the polynomial `1 − x₁z₁ − x₂z₂ + x₃z₁z₂`
/// has no zero on the closed bidisc.
pub fn tetra_definitional(x: [Cx; 3], spec: &GridSpec, tol: f64) -> DefinitionalVerdict {
    let f = |z1: Cx, z2: Cx| (1.0 - x[0] * z1 - x[1] * z2 + x[2] * z1 * z2).norm();
    let grid = spec.polar(1.0, true);
    let mut best = (f64::INFINITY, Cx::new(0.0, 0.0), Cx::new(0.0, 0.0));
    for &z1 in &grid {
        for &z2 in &grid {
            let v = f(z1, z2);
            if v < best.0 {
                best = (v, z1, z2);
            }
        }
    }
    let h0 = 0.5 / spec.radial_points.max(1) as f64;
    let (v, z1, z2) = pattern_search(&f, &|a, b| a < b, &|c, d| clamp_disc(c + d), best, h0, spec.refinement_levels);
    DefinitionalVerdict { min_abs: v, argmin: (z1, z2), candidate: v > tol }
}

/// Local minimisation of `g(z₁, z₂)` over `|zᵢ| ≤ u`, started from the best
/// few polar grid points.
fn min_over_bidisc(g: &dyn Fn(Cx, Cx) -> f64, u: f64, spec: &GridSpec) -> f64 {
    let clamp = |c: Cx, d: Cx| {
        let z = c + d;
        let r = z.norm();
        if r > u {
            z * (u / r)
        } else {
            z
        }
    };
    let grid = spec.polar(u, true);
    let mut cands: Vec<(f64, usize, usize)> = Vec::with_capacity(grid.len() * grid.len());
    for (i, &z1) in grid.iter().enumerate() {
        for (j, &z2) in grid.iter().enumerate() {
            cands.push((g(z1, z2), i, j));
        }
    }
    cands.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let h0 = 0.5 * u / spec.radial_points.max(1) as f64;
    let mut best = f64::INFINITY;
    for &(v, i, j) in cands.iter().take(4) {
        let (m, _, _) = pattern_search(g, &|a, b| a < b, &clamp, (v, grid[i], grid[j]), h0, spec.refinement_levels.max(1) + 1);
        best = best.min(m);
    }
    best
}

/// One-variable analogue of [`min_over_bidisc`].
fn min_over_disc(g: &dyn Fn(Cx) -> f64, u: f64, spec: &GridSpec) -> f64 {
    let clamp = |c: Cx, d: Cx| {
        let z = c + d;
        let r = z.norm();
        if r > u {
            z * (u / r)
        } else {
            z
        }
    };
    let grid = spec.polar(u, true);
    let mut cands: Vec<(f64, usize)> = grid.iter().enumerate().map(|(i, &z)| (g(z), i)).collect();
    cands.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let h0 = 0.5 * u / spec.radial_points.max(1) as f64;
    let f = |z: Cx, _: Cx| g(z);
    let mut best = f64::INFINITY;
    for &(v, i) in cands.iter().take(4) {
        let (m, _, _) = pattern_search_1d(&f, &clamp, (v, grid[i]), h0, spec.refinement_levels.max(1) + 1);
        best = best.min(m);
    }
    best
}

/// One-variable pattern search (minimisation).
fn pattern_search_1d(f: &dyn Fn(Cx, Cx) -> f64, step: &dyn Fn(Cx, Cx) -> Cx, start: (f64, Cx), h0: f64, levels: usize) -> (f64, Cx, Cx) {
    let zero = Cx::new(0.0, 0.0);
    let (mut best, mut b) = start;
    let mut h = h0;
    for _ in 0..levels * HALVINGS_PER_LEVEL * 2 {
        for _ in 0..MAX_MOVES {
            let c = b;
            let mut moved = false;
            for &p in &STENCIL {
                for &q in &STENCIL {
                    let z = step(c, Cx::new(p * h, q * h));
                    let v = f(z, zero);
                    if v < best {
                        best = v;
                        b = z;
                        moved = true;
                    }
                }
            }
            if !moved {
                break;
            }
        }
        h *= 0.5;
    }
    (best, b, zero)
}

/// Structured singular value for the upper-triangular structure from its
/// definition `1/inf{‖X‖ : X upper triangular, det(I − AX) = 0}`.
///
/// With `X = [[z₁, w], [0, z₂]]`, `det(I − AX)` is affine in `w`, so `w` is
/// solved for and `‖X‖` minimised over `(z₁, z₂)`; every minimiser satisfies
/// `|zᵢ| ≤ 1/|a₂₁|`, the cost of `z = 0`.
pub fn mu_bruteforce(a: &Mat2, spec: &GridSpec) -> f64 {
    let (a11, a12, a21, a22) = (a.a11, a.a12, a.a21, a.a22);
    let det = a11 * a22 - a12 * a21;
    if a21.norm() == 0.0 {
        // det(I − AX) = (1 − a₁₁z₁)(1 − a₂₂z₂): the zero curves are z₁ = 1/a₁₁, z₂ = 1/a₂₂
        return a11.norm().max(a22.norm());
    }
    let g = |z1: Cx, z2: Cx| {
        let w = (1.0 - a11 * z1 - a22 * z2 + det * z1 * z2) / a21;
        Mat2::new(z1, w, Cx::new(0.0, 0.0), z2).op_norm()
    };
    let u = 1.0 / a21.norm();
    let m = min_over_bidisc(&g, u, spec);
    if m.is_finite() && m > 0.0 {
        1.0 / m
    } else {
        0.0
    }
}

/// Definitional structured singular value for the diagonal structure:
/// the least `ρ` such that `1 − a₁₁z₁ − a₂₂z₂ + det(A) z₁z₂ = 0` has a solution
/// with `|z₁|, |z₂| ≤ ρ`, found by bisection on `ρ`.  For fixed `z₁` the
/// equation gives `z₂ = (1 − a₁₁z₁)/(a₂₂ − det(A) z₁)`, so feasibility at `ρ`
/// is `min_{|z₁| ≤ ρ} |z₂(z₁)| ≤ ρ` (a smooth minimisation).
pub fn mu_bruteforce_diagonal(a: &Mat2, spec: &GridSpec) -> f64 {
    let (a11, a22) = (a.a11, a.a22);
    let det = a.a11 * a.a22 - a.a12 * a.a21;
    // any zero of det(I − zA) gives a feasible scalar X; its size bounds the search
    let mut u = f64::INFINITY;
    for l in eig(a) {
        if l.norm() > 0.0 {
            u = u.min(1.0 / l.norm());
        }
    }
    for d in [a11, a22] {
        if d.norm() > 0.0 {
            u = u.min(1.0 / d.norm());
        }
    }
    if !u.is_finite() {
        return 0.0;
    }
    let z2_abs = |z1: Cx| {
        let den = a22 - det * z1;
        if den.norm() < 1e-300 {
            return f64::INFINITY;
        }
        ((1.0 - a11 * z1) / den).norm()
    };
    let fine = GridSpec { radial_points: spec.radial_points * 2, angular_points: spec.angular_points * 2, ..*spec };
    let feasible = |rho: f64| min_over_disc(&z2_abs, rho, &fine) <= rho;
    let (mut lo, mut hi) = (0.0, u * (1.0 + 1e-12));
    if !feasible(hi) {
        hi = u;
    }
    for _ in 0..50 {
        let mid = 0.5 * (lo + hi);
        if feasible(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    1.0 / hi
}

/// Definitional structured singular value for the structure spanned by the
/// identity and `E₁₂`: `X = [[z, w], [0, z]]`, `w = det(I − zA)/a₂₁`.
pub fn mu_bruteforce_scalar_plus_nilpotent(a: &Mat2, spec: &GridSpec) -> f64 {
    let r = eig(a).iter().fold(0.0f64, |m, l| m.max(l.norm()));
    if a.a21.norm() == 0.0 {
        // the w-term drops out of det(I − AX): only scalar X remain
        return r;
    }
    let mut u = 1.0 / a.a21.norm();
    if r > 0.0 {
        u = u.min(1.0 / r);
    }
    let g = |z: Cx| {
        let d = (1.0 - z * a.a11) * (1.0 - z * a.a22) - z * z * a.a12 * a.a21;
        let w = d / a.a21;
        Mat2::new(z, w, Cx::new(0.0, 0.0), z).op_norm()
    };
    let m = min_over_disc(&g, u, spec).min(u);
    1.0 / m
}

/// Eigenvalues by the quadratic formula (independent of the library routine).
fn eig(a: &Mat2) -> [Cx; 2] {
    let t = a.a11 + a.a22;
    let d = a.a11 * a.a22 - a.a12 * a.a21;
    let q = (t * t - 4.0 * d).sqrt();
    [(t + q) / 2.0, (t - q) / 2.0]
}

/// Complex Hessian `∂²f/∂xᵢ∂x̄ⱼ` of a real function on ℂ³ by central
/// finite differences in the real coordinates `xᵢ = uᵢ + i vᵢ`:
/// `∂²f/∂xᵢ∂x̄ⱼ = ¼[f_{uᵢuⱼ} + f_{vᵢvⱼ} + i(f_{uᵢvⱼ} − f_{vᵢuⱼ})]`.
pub fn wirtinger_hessian_fd(f: &dyn Fn(&[Cx; 3]) -> f64, x: &[Cx; 3], h: f64) -> [[Cx; 3]; 3] {
    // real coordinate k ∈ 0..6: (k / 2)-th variable, real part for even k
    let dir = |k: usize| {
        let mut d = [Cx::new(0.0, 0.0); 3];
        d[k / 2] = if k % 2 == 0 { Cx::new(1.0, 0.0) } else { Cx::new(0.0, 1.0) };
        d
    };
    let at = |a: [Cx; 3], sa: f64, b: [Cx; 3], sb: f64| {
        let p = [0, 1, 2].map(|i| x[i] + a[i] * (sa * h) + b[i] * (sb * h));
        f(&p)
    };
    let second = |k: usize, l: usize| {
        let (a, b) = (dir(k), dir(l));
        (at(a, 1.0, b, 1.0) - at(a, 1.0, b, -1.0) - at(a, -1.0, b, 1.0) + at(a, -1.0, b, -1.0)) / (4.0 * h * h)
    };
    let mut out = [[Cx::new(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let (ui, vi, uj, vj) = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1);
            out[i][j] = Cx::new(second(ui, uj) + second(vi, vj), second(ui, vj) - second(vi, uj)) * 0.25;
        }
    }
    out
}
