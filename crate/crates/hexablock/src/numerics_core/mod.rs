//! Shared numerical primitives: complex scalars, 2×2 matrices, polynomials,
//! Fejér–Riesz factorisation, disc automorphisms, Blaschke products and the
//! coordinate projections from matrices to the domains.

mod disc;
mod fejer_riesz;
mod mat2;
mod points;
mod poly;

pub use disc::{disc_aut_compose, disc_aut_eval, disc_aut_invert, disc_aut_star, BlaschkeProduct, DiscAut};
pub use fejer_riesz::{fejer_riesz, FejerRieszMode};
pub use mat2::{matricial_mobius, upper_tri_contraction, Mat2};
pub use points::{lift_point, pi_gamma, pi_hexa, pi_penta, pi_tetra, G2Point, HexaPoint, PentaPoint, TetraPoint};
pub use poly::{poly_reflect, Poly, TrigPoly};

use thiserror::Error;

/// Complex scalar used throughout the crate.
pub type Cx = num_complex::Complex64;

/// Default tolerance for membership decisions and echoed in CLI output.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Shorthand constructor.
#[inline]
pub fn cx(re: f64, im: f64) -> Cx {
    Cx::new(re, im)
}

/// Unit-modulus complex number `e^{iθ}`.
#[inline]
pub fn cis(theta: f64) -> Cx {
    Cx::from_polar(1.0, theta)
}

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HexError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no unique lift: the a-coordinate vanishes, so the matrix preimage is not determined")]
    NoUniqueLift,
    #[error("degree {degree} exceeds the reflection degree {n}")]
    DegreeExceeded { degree: usize, n: usize },
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error("singular evaluation: {0}")]
    Singular(String),
    #[error("consistency fault: {0}")]
    ConsistencyFault(String),
    #[error("schwarz problem infeasible: violates {inequality}")]
    SchwarzInfeasible { inequality: String },
    #[error("unsupported construction: {0}")]
    Unsupported(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

/// Result alias.
pub type HexResult<T> = Result<T, HexError>;

/// `true` when `|z|` is within `tol` of one.
#[inline]
pub fn is_unimodular(z: Cx, tol: f64) -> bool {
    (z.norm() - 1.0).abs() <= tol
}

/// Normalise a nonzero complex number to unit modulus (returns 1 for zero).
#[inline]
pub fn phase_of(z: Cx) -> Cx {
    let r = z.norm();
    if r == 0.0 {
        Cx::new(1.0, 0.0)
    } else {
        z / r
    }
}

/// Numerically stable roots of `λ² − s λ + p`.
pub fn quadratic_roots(s: Cx, p: Cx) -> (Cx, Cx) {
    let disc = (s * s - 4.0 * p).sqrt();
    // choose the sign that avoids cancellation
    let q = if (s.conj() * disc).re >= 0.0 { (s + disc) / 2.0 } else { (s - disc) / 2.0 };
    if q.norm() == 0.0 {
        (Cx::new(0.0, 0.0), Cx::new(0.0, 0.0))
    } else {
        (q, p / q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_roots_reproduce_coefficients() {
        let cases = [(cx(1.0, 2.0), cx(-0.3, 0.1)), (cx(2.0, 0.0), cx(1.0, 0.0)), (cx(0.0, 0.0), cx(0.0, 0.0)), (cx(1e8, 0.0), cx(1.0, 0.0))];
        for (s, p) in cases {
            let (l1, l2) = quadratic_roots(s, p);
            assert!((l1 + l2 - s).norm() <= 1e-9 * (1.0 + s.norm()));
            assert!((l1 * l2 - p).norm() <= 1e-9 * (1.0 + p.norm()));
        }
    }

    #[test]
    fn phase_of_is_unimodular() {
        assert!(is_unimodular(phase_of(cx(3.0, -4.0)), 1e-15));
        assert_eq!(phase_of(cx(0.0, 0.0)), cx(1.0, 0.0));
    }
}
