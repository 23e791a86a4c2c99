//! Seeded random generators for points, matrices and automorphism
//! parameters, plus CSV export of sampled point clouds.
//!
//! Every generator takes an explicit `ChaCha8Rng`, so results are fully
//! determined by the seed.

use crate::hexablock::{h_member, hp_param, mu_value, MuStructure};
use crate::inner_schwarz::RationalTetraInner;
use crate::numerics_core::{cis, pi_hexa, pi_tetra, BlaschkeProduct, Cx, DiscAut, HexError, HexResult, HexaPoint, Mat2, Poly, TetraPoint};
use crate::real_slice::{face_classify, random_real_boundary_point, real_h_member, RealHexaPoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic generator for a seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point of the open disc of radius `r_max`.
pub fn random_disc(rng: &mut ChaCha8Rng, r_max: f64) -> Cx {
    let r = r_max * rng.gen_range(0.0..1.0f64).sqrt();
    cis(rng.gen_range(0.0..std::f64::consts::TAU)) * r
}

/// Uniform point of the unit circle.
pub fn random_unimodular(rng: &mut ChaCha8Rng) -> Cx {
    cis(rng.gen_range(0.0..std::f64::consts::TAU))
}

/// Random complex number with real and imaginary parts in `[−b, b)`.
pub fn random_box(rng: &mut ChaCha8Rng, b: f64) -> Cx {
    Cx::new(rng.gen_range(-b..b), rng.gen_range(-b..b))
}

/// Random disc automorphism with zero of modulus below `r_max`.
pub fn random_disc_aut(rng: &mut ChaCha8Rng, r_max: f64) -> DiscAut {
    DiscAut { xi: random_unimodular(rng), z: random_disc(rng, r_max) }
}

/// Random matrix with entries in the box `[−1, 1)²`.
pub fn random_mat2(rng: &mut ChaCha8Rng) -> Mat2 {
    Mat2::new(random_box(rng, 1.0), random_box(rng, 1.0), random_box(rng, 1.0), random_box(rng, 1.0))
}

/// Point of ℍ̄: the image of a random matrix rescaled to hexablock structured
/// singular value `scale` (interior for `scale < 1`, topological boundary for
/// `scale = 1`). Near corners of the boundary the closure margin depends on
/// the square root of the scaling error, so for `scale ≤ 1` candidates
/// failing the closed test at `1e-12` are resampled.
pub fn random_hexa_point(rng: &mut ChaCha8Rng, scale: f64) -> HexaPoint {
    loop {
        let m = random_mat2(rng);
        let mu = mu_value(&m, MuStructure::Hexa);
        if mu > 1e-3 {
            let p = pi_hexa(&m.scale_re(scale / mu));
            if scale > 1.0 || h_member(&p, true, 1e-12).member {
                return p;
            }
        }
    }
}

/// Point of ℍ̄ with `a = 0`: a triangular point `(0, x1, x2, x1 x2)` with
/// `|x1|, |x2| < r_max`.
pub fn random_triangular_hexa_point(rng: &mut ChaCha8Rng, r_max: f64) -> HexaPoint {
    let (x1, x2) = (random_disc(rng, r_max), random_disc(rng, r_max));
    HexaPoint::new(Cx::new(0.0, 0.0), x1, x2, x1 * x2)
}

/// Point of 𝔼̄ as the image of a random matrix rescaled to tetrablock
/// structured singular value `scale`.
pub fn random_tetra_point(rng: &mut ChaCha8Rng, scale: f64) -> TetraPoint {
    loop {
        let m = random_mat2(rng);
        let mu = mu_value(&m, MuStructure::Tetra);
        if mu > 1e-3 {
            return pi_tetra(&m.scale_re(scale / mu));
        }
    }
}

/// Random point of H_p through its parametrisation.
pub fn random_hp_point(rng: &mut ChaCha8Rng) -> HexaPoint {
    let t = rng.gen_range(0.0..1.0f64);
    let z = random_unimodular(rng) * t.sqrt();
    let w = random_unimodular(rng) * (1.0 - t).sqrt();
    hp_param(rng.gen_range(0.0..std::f64::consts::TAU), z, w).expect("parameters lie on the sphere")
}

/// Random point of the distinguished boundary b𝔼: triangular
/// (`x1, x2 ∈ 𝕋`, `x3 = x1 x2`) with probability 1/2, otherwise
/// `x3 ∈ 𝕋`, `|x2| < 1`, `x1 = x̄2 x3`.
pub fn random_be_point(rng: &mut ChaCha8Rng) -> TetraPoint {
    if rng.gen_bool(0.5) {
        let (x1, x2) = (random_unimodular(rng), random_unimodular(rng));
        TetraPoint::new(x1, x2, x1 * x2)
    } else {
        let x3 = random_unimodular(rng);
        let x2 = random_disc(rng, 1.0);
        TetraPoint::new(x2.conj() * x3, x2, x3)
    }
}

/// Random finite Blaschke product of degree `deg` with zeros in the disc of
/// radius `r_max`.
pub fn random_blaschke(rng: &mut ChaCha8Rng, deg: usize, r_max: f64) -> BlaschkeProduct {
    BlaschkeProduct { phase: random_unimodular(rng), zeros: (0..deg).map(|_| random_disc(rng, r_max)).collect() }
}

/// Random valid 𝔼̄-inner data of degree `n ≥ 1`: `D` with roots of modulus
/// in `[1.2, 3]`, a random `E₂` scaled to `max |E₂/D| = ratio` on the
/// circle (`ratio ≤ 1`), and `E₁ = E₂^{~n}`. With `vanish_at_zero` the
/// data satisfy `h(0) = 0` (then `deg D ≤ n − 1` and `E₂(0) = 0`).
pub fn random_tetra_inner(rng: &mut ChaCha8Rng, n: usize, ratio: f64, vanish_at_zero: bool) -> RationalTetraInner {
    let d_deg = if vanish_at_zero { n - 1 } else { n };
    let roots: Vec<Cx> = (0..d_deg).map(|_| random_unimodular(rng) * rng.gen_range(1.2..3.0)).collect();
    let d = Poly::from_roots(Cx::new(1.0, 0.0), &roots);
    let mut e2 = Poly::new((0..=d_deg).map(|_| random_disc(rng, 1.0)).collect());
    if vanish_at_zero {
        e2.coeffs[0] = Cx::new(0.0, 0.0);
    }
    const M: usize = 4096;
    let max_ratio = (0..M)
        .map(|k| {
            let l = cis(std::f64::consts::TAU * k as f64 / M as f64);
            e2.eval(l).norm() / d.eval(l).norm()
        })
        .fold(0.0, f64::max);
    let e2 = e2.scale(Cx::new(ratio / max_ratio.max(1e-300), 0.0));
    RationalTetraInner::from_e2(e2, d, n).expect("degree of E2 is at most n")
}

/// Which point cloud [`real_slice_csv`] samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealSample {
    /// Uniform points of the box `[−1.1, 1.1]⁴` with their region.
    Slice,
    /// Points of `∂ℍ ∩ ℝ⁴` with their face labels.
    Boundary,
}

/// CSV header written by [`real_slice_csv`].
pub const CSV_COLUMNS: [&str; 8] = ["a", "x1", "x2", "x3", "region", "faces", "margin", "k"];

/// Deterministic CSV of `count` sampled real points. Columns: the four
/// coordinates, the region in ℍ ∩ ℝ⁴, the face labels separated by `|`,
/// the membership margin and `K(x)` (empty outside the tetrahedron).
pub fn real_slice_csv(kind: RealSample, seed: u64, count: usize) -> HexResult<String> {
    let mut rng = rng_from_seed(seed);
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| HexError::Degenerate(format!("csv output failed: {e}"));
    w.write_record(CSV_COLUMNS).map_err(io)?;
    for _ in 0..count {
        let p = match kind {
            RealSample::Slice => RealHexaPoint::new(rng.gen_range(-1.1..1.1), rng.gen_range(-1.1..1.1), rng.gen_range(-1.1..1.1), rng.gen_range(-1.1..1.1)),
            RealSample::Boundary => random_real_boundary_point(&mut rng),
        };
        let v = real_h_member(&p, 1e-9);
        let faces: Vec<&str> = face_classify(&p).iter().map(|l| l.label.as_str()).collect();
        let k = v.k.map(|k| k.to_string()).unwrap_or_default();
        w.write_record([
            p.a.to_string(),
            p.x1.to_string(),
            p.x2.to_string(),
            p.x3.to_string(),
            v.region.as_str().to_string(),
            faces.join("|"),
            v.margin.to_string(),
            k,
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| HexError::Degenerate(format!("csv output failed: {e}")))?;
    String::from_utf8(bytes).map_err(|e| HexError::Degenerate(e.to_string()))
}
