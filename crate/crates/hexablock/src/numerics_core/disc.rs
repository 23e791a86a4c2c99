use super::{Cx, HexError, HexResult, Poly};
use serde::{Deserialize, Serialize};

/// Disc automorphism in normal form `v = −ξ B_z`, i.e.
/// `v(λ) = ξ (λ − z)/(1 − z̄ λ)` with `|ξ| = 1`, `|z| < 1`
/// (`B_z(λ) = (λ − z)/(z̄ λ − 1)`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscAut {
    pub xi: Cx,
    pub z: Cx,
}

impl DiscAut {
    /// Validated constructor; `ξ` is renormalised to unit modulus.
    pub fn new(xi: Cx, z: Cx) -> HexResult<DiscAut> {
        if z.norm() >= 1.0 || !z.is_finite() {
            return Err(HexError::Domain(format!("disc automorphism needs |z| < 1 (got {})", z.norm())));
        }
        if (xi.norm() - 1.0).abs() > 1e-8 {
            return Err(HexError::Domain(format!("disc automorphism needs |xi| = 1 (got {})", xi.norm())));
        }
        Ok(DiscAut { xi: xi / xi.norm(), z })
    }

    /// The identity map (`ξ = 1`, `z = 0`, i.e. `−B_0`).
    pub fn identity() -> DiscAut {
        DiscAut { xi: Cx::new(1.0, 0.0), z: Cx::new(0.0, 0.0) }
    }

    /// From the `ω B_α` form.
    pub fn from_omega_alpha(omega: Cx, alpha: Cx) -> DiscAut {
        DiscAut { xi: -omega, z: alpha }
    }

    /// The `(ω, α)` with `v = ω B_α`.
    pub fn omega_alpha(&self) -> (Cx, Cx) {
        (-self.xi, self.z)
    }

    pub fn eval(&self, lambda: Cx) -> Cx {
        disc_aut_eval(self, lambda)
    }

    pub fn compose(&self, other: &DiscAut) -> DiscAut {
        disc_aut_compose(self, other)
    }

    pub fn invert(&self) -> DiscAut {
        disc_aut_invert(self)
    }

    pub fn star(&self) -> DiscAut {
        disc_aut_star(self)
    }

    /// Parameter distance (phase and zero).
    pub fn dist(&self, o: &DiscAut) -> f64 {
        (self.xi - o.xi).norm().max((self.z - o.z).norm())
    }
}

/// `v(λ) = ξ (λ − z)/(1 − z̄ λ)`.
pub fn disc_aut_eval(v: &DiscAut, lambda: Cx) -> Cx {
    v.xi * (lambda - v.z) / (Cx::new(1.0, 0.0) - v.z.conj() * lambda)
}

/// `v1 ∘ v2` in closed form: for `v_i = ω_i B_{α_i}`,
/// `v1 ∘ v2 = ω B_α` with `ω = −ω1 ω2 (1 − ω̄2 α1 ᾱ2)/(1 − ω2 ᾱ1 α2)` and
/// `α = ω̄2 (α1 − α2 ω2)/(α1 ᾱ2 ω̄2 − 1)`.
pub fn disc_aut_compose(v1: &DiscAut, v2: &DiscAut) -> DiscAut {
    let one = Cx::new(1.0, 0.0);
    let (w1, a1) = v1.omega_alpha();
    let (w2, a2) = v2.omega_alpha();
    let num = one - w2.conj() * a1 * a2.conj();
    let den = one - w2 * a1.conj() * a2;
    let omega = -w1 * w2 * num / den;
    let alpha = w2.conj() * (a1 - a2 * w2) / (a1 * a2.conj() * w2.conj() - one);
    DiscAut::from_omega_alpha(omega / omega.norm(), alpha)
}

/// `v⁻¹`: for `v = ω B_α`, `v⁻¹ = ω̄ B_{ωα}`.
pub fn disc_aut_invert(v: &DiscAut) -> DiscAut {
    let (w, a) = v.omega_alpha();
    DiscAut::from_omega_alpha(w.conj(), w * a)
}

/// Involution: `(ω B_α)_* = ω B_{ω̄ ᾱ}`.
pub fn disc_aut_star(v: &DiscAut) -> DiscAut {
    let (w, a) = v.omega_alpha();
    DiscAut::from_omega_alpha(w, w.conj() * a.conj())
}

/// Finite Blaschke product `phase · Π (λ − α)/(1 − ᾱ λ)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlaschkeProduct {
    pub phase: Cx,
    pub zeros: Vec<Cx>,
}

impl BlaschkeProduct {
    pub fn new(phase: Cx, zeros: Vec<Cx>) -> HexResult<Self> {
        if (phase.norm() - 1.0).abs() > 1e-8 {
            return Err(HexError::Domain("Blaschke phase must be unimodular".into()));
        }
        if let Some(z) = zeros.iter().find(|z| z.norm() >= 1.0) {
            return Err(HexError::Domain(format!("Blaschke zero {z} is not in the open disc")));
        }
        Ok(BlaschkeProduct { phase: phase / phase.norm(), zeros })
    }

    /// The constant 1.
    pub fn one() -> Self {
        BlaschkeProduct { phase: Cx::new(1.0, 0.0), zeros: vec![] }
    }

    /// `λ^m`.
    pub fn power(m: usize) -> Self {
        BlaschkeProduct { phase: Cx::new(1.0, 0.0), zeros: vec![Cx::new(0.0, 0.0); m] }
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn eval(&self, lambda: Cx) -> Cx {
        self.zeros.iter().fold(self.phase, |acc, &a| acc * (lambda - a) / (Cx::new(1.0, 0.0) - a.conj() * lambda))
    }

    /// `(numerator, denominator)` with numerator `phase · Π (λ − α)` and
    /// denominator `Π (1 − ᾱ λ)`.
    pub fn as_poly_pair(&self) -> (Poly, Poly) {
        let num = Poly::from_roots(self.phase, &self.zeros);
        let den = self.zeros.iter().fold(Poly::constant(Cx::new(1.0, 0.0)), |acc, &a| acc.mul(&Poly::new(vec![Cx::new(1.0, 0.0), -a.conj()])));
        (num, den)
    }

    pub fn mul(&self, o: &BlaschkeProduct) -> BlaschkeProduct {
        let mut zeros = self.zeros.clone();
        zeros.extend_from_slice(&o.zeros);
        BlaschkeProduct { phase: self.phase * o.phase, zeros }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics_core::{cis, cx};

    fn samples() -> Vec<DiscAut> {
        (0..12).map(|k| DiscAut::new(cis(0.7 * k as f64 + 0.1), cx(0.8 * (1.3 * k as f64).sin(), 0.5 * (0.9 * k as f64).cos())).unwrap()).collect()
    }

    fn pts() -> Vec<Cx> {
        (0..9).map(|k| cx(0.9 * (k as f64).cos(), 0.4 * (2.0 * k as f64).sin())).collect()
    }

    #[test]
    fn identity_and_constructor_guard() {
        let id = DiscAut::identity();
        for l in pts() {
            assert!((id.eval(l) - l).norm() < 1e-15);
        }
        assert!(DiscAut::new(cx(1.0, 0.0), cx(1.0, 0.0)).is_err());
    }

    #[test]
    fn composition_closed_form_matches_pointwise() {
        for v1 in samples() {
            for v2 in samples() {
                let c = v1.compose(&v2);
                for l in pts() {
                    assert!((c.eval(l) - v1.eval(v2.eval(l))).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn group_laws() {
        let s = samples();
        for v in &s {
            let e = v.compose(&v.invert());
            assert!(e.dist(&DiscAut::identity()) < 1e-12, "{e:?}");
            assert!(v.star().star().dist(v) < 1e-14);
            for w in &s {
                for u in &s[..3] {
                    let left = v.compose(&w.compose(u));
                    let right = v.compose(w).compose(u);
                    for l in pts() {
                        assert!((left.eval(l) - right.eval(l)).norm() < 1e-12);
                    }
                }
                // star reverses composition order; inverse commutes with star
                assert!(v.compose(w).star().dist(&w.star().compose(&v.star())) < 1e-12);
            }
            assert!(v.invert().star().dist(&v.star().invert()) < 1e-12);
        }
    }

    #[test]
    fn blaschke_is_unimodular_on_circle() {
        let b = BlaschkeProduct::new(cis(0.3), vec![cx(0.5, 0.1), cx(-0.2, 0.7)]).unwrap();
        for k in 0..32 {
            assert!((b.eval(cis(k as f64 * 0.2)).norm() - 1.0).abs() < 1e-13);
        }
        let (n, d) = b.as_poly_pair();
        let l = cx(0.3, -0.2);
        assert!((n.eval(l) / d.eval(l) - b.eval(l)).norm() < 1e-14);
    }
}
