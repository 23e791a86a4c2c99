use super::{Cx, HexError, HexResult, Mat2};
use serde::{Deserialize, Serialize};

/// A point `(a, x1, x2, x3)` of ℂ⁴ (hexablock coordinates).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HexaPoint {
    pub a: Cx,
    pub x1: Cx,
    pub x2: Cx,
    pub x3: Cx,
}

/// A point `(x1, x2, x3)` of ℂ³ (tetrablock coordinates).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TetraPoint {
    pub x1: Cx,
    pub x2: Cx,
    pub x3: Cx,
}

/// A point `(a, s, p)` of ℂ³ (pentablock coordinates).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PentaPoint {
    pub a: Cx,
    pub s: Cx,
    pub p: Cx,
}

/// A point `(s, p)` of ℂ² (symmetrized-bidisc coordinates).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct G2Point {
    pub s: Cx,
    pub p: Cx,
}

impl HexaPoint {
    pub fn new(a: Cx, x1: Cx, x2: Cx, x3: Cx) -> Self {
        HexaPoint { a, x1, x2, x3 }
    }
    pub fn x(&self) -> TetraPoint {
        TetraPoint::new(self.x1, self.x2, self.x3)
    }
    pub fn from_parts(a: Cx, x: TetraPoint) -> Self {
        HexaPoint::new(a, x.x1, x.x2, x.x3)
    }
    pub fn coords(&self) -> [Cx; 4] {
        [self.a, self.x1, self.x2, self.x3]
    }
    pub fn dist(&self, o: &HexaPoint) -> f64 {
        self.coords().iter().zip(o.coords().iter()).map(|(p, q)| (p - q).norm()).fold(0.0, f64::max)
    }
}

impl TetraPoint {
    pub fn new(x1: Cx, x2: Cx, x3: Cx) -> Self {
        TetraPoint { x1, x2, x3 }
    }
    pub fn coords(&self) -> [Cx; 3] {
        [self.x1, self.x2, self.x3]
    }
    /// Swap the first two coordinates.
    pub fn flipped(&self) -> Self {
        TetraPoint::new(self.x2, self.x1, self.x3)
    }
    /// `|x1 x2 − x3|`, the distance from triangularity.
    pub fn skew(&self) -> f64 {
        (self.x1 * self.x2 - self.x3).norm()
    }
    pub fn dist(&self, o: &TetraPoint) -> f64 {
        self.coords().iter().zip(o.coords().iter()).map(|(p, q)| (p - q).norm()).fold(0.0, f64::max)
    }
}

impl PentaPoint {
    pub fn new(a: Cx, s: Cx, p: Cx) -> Self {
        PentaPoint { a, s, p }
    }
    pub fn dist(&self, o: &PentaPoint) -> f64 {
        (self.a - o.a).norm().max((self.s - o.s).norm()).max((self.p - o.p).norm())
    }
}

impl G2Point {
    pub fn new(s: Cx, p: Cx) -> Self {
        G2Point { s, p }
    }
}

/// `π(A) = (a21, a11, a22, det A)`.
pub fn pi_hexa(m: &Mat2) -> HexaPoint {
    HexaPoint::new(m.a21, m.a11, m.a22, m.det())
}

/// `π_𝔼(A) = (a11, a22, det A)`.
pub fn pi_tetra(m: &Mat2) -> TetraPoint {
    TetraPoint::new(m.a11, m.a22, m.det())
}

/// `π_ℙ(A) = (a21, tr A, det A)`.
pub fn pi_penta(m: &Mat2) -> PentaPoint {
    PentaPoint::new(m.a21, m.trace(), m.det())
}

/// `π_Γ(A) = (tr A, det A)`.
pub fn pi_gamma(m: &Mat2) -> G2Point {
    G2Point::new(m.trace(), m.det())
}

/// The unique matrix `A` with `π(A) = p` when `a ≠ 0`:
/// `[[x1, (x1 x2 − x3)/a], [a, x2]]`.
pub fn lift_point(p: &HexaPoint) -> HexResult<Mat2> {
    if p.a.norm() == 0.0 {
        return Err(HexError::NoUniqueLift);
    }
    Ok(Mat2::new(p.x1, (p.x1 * p.x2 - p.x3) / p.a, p.a, p.x2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics_core::cx;

    #[test]
    fn lift_inverts_projection() {
        let a = Mat2::new(cx(0.1, 0.2), cx(-0.3, 0.05), cx(0.4, -0.1), cx(0.0, 0.3));
        let back = lift_point(&pi_hexa(&a)).unwrap();
        assert!(back.max_abs_diff(&a) < 1e-15);
        assert_eq!(lift_point(&HexaPoint::new(cx(0.0, 0.0), cx(0.1, 0.0), cx(0.0, 0.0), cx(0.0, 0.0))), Err(HexError::NoUniqueLift));
    }

    #[test]
    fn projections_agree() {
        let a = Mat2::new(cx(0.1, 0.2), cx(-0.3, 0.05), cx(0.4, -0.1), cx(0.0, 0.3));
        let h = pi_hexa(&a);
        let t = pi_tetra(&a);
        let p = pi_penta(&a);
        let g = pi_gamma(&a);
        assert_eq!(h.x(), t);
        assert_eq!(p.s, g.s);
        assert_eq!(p.a, h.a);
        assert_eq!(g.p, t.x3);
    }
}
