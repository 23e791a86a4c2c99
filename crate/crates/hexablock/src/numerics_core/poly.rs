use super::{Cx, HexError, HexResult};
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

/// Complex polynomial with ascending coefficients `c[0] + c[1] λ + …`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct Poly {
    pub coeffs: Vec<Cx>,
}

/// Relative threshold below which trailing coefficients count as zero.
const TRIM_REL: f64 = 1e-14;

impl Poly {
    pub fn new(coeffs: Vec<Cx>) -> Self {
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: Cx) -> Self {
        Poly { coeffs: vec![c] }
    }

    /// The monomial `c λ^k`.
    pub fn monomial(c: Cx, k: usize) -> Self {
        let mut coeffs = vec![Cx::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// `lead · Π (λ − r)`.
    pub fn from_roots(lead: Cx, roots: &[Cx]) -> Self {
        let mut p = Poly::constant(lead);
        for &r in roots {
            p = p.mul(&Poly::new(vec![-r, Cx::new(1.0, 0.0)]));
        }
        p
    }

    fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Degree after discarding negligible trailing coefficients; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        let m = self.max_abs();
        if m == 0.0 {
            return None;
        }
        (0..self.coeffs.len()).rev().find(|&k| self.coeffs[k].norm() > TRIM_REL * m)
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Copy with negligible trailing coefficients removed.
    pub fn trimmed(&self) -> Poly {
        match self.degree() {
            None => Poly::zero(),
            Some(d) => Poly::new(self.coeffs[..=d].to_vec()),
        }
    }

    /// Coefficient of `λ^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Cx {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn eval(&self, lambda: Cx) -> Cx {
        self.coeffs.iter().rev().fold(Cx::new(0.0, 0.0), |acc, &c| acc * lambda + c)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn scale(&self, c: Cx) -> Poly {
        Poly::new(self.coeffs.iter().map(|&x| x * c).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![Cx::new(0.0, 0.0); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Multiply by `λ^k`.
    pub fn shift(&self, k: usize) -> Poly {
        let mut coeffs = vec![Cx::new(0.0, 0.0); k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly::new(coeffs)
    }

    /// All complex roots (with multiplicity) from the eigenvalues of the
    /// companion matrix.
    pub fn roots(&self) -> Vec<Cx> {
        let p = self.trimmed();
        let d = match p.degree() {
            None | Some(0) => return vec![],
            Some(d) => d,
        };
        let lead = p.coeffs[d];
        let mut comp = DMatrix::<Cx>::zeros(d, d);
        for i in 1..d {
            comp[(i, i - 1)] = Cx::new(1.0, 0.0);
        }
        for i in 0..d {
            comp[(i, d - 1)] = -p.coeffs[i] / lead;
        }
        let schur = comp.schur();
        let (_, t) = schur.unpack();
        (0..d).map(|i| t[(i, i)]).map(|r| polish_root(&p, r)).collect()
    }

    /// Maximum of `|p|` on `samples` equally spaced points of the unit circle.
    pub fn max_on_circle(&self, samples: usize) -> f64 {
        (0..samples).map(|k| self.eval(super::cis(2.0 * std::f64::consts::PI * k as f64 / samples as f64)).norm()).fold(0.0, f64::max)
    }
}

/// A few guarded Newton steps; the update is accepted only when it reduces |p|.
fn polish_root(p: &Poly, mut r: Cx) -> Cx {
    let dp = derivative(p);
    for _ in 0..3 {
        let f = p.eval(r);
        let g = dp.eval(r);
        if g.norm() == 0.0 {
            break;
        }
        let cand = r - f / g;
        if p.eval(cand).norm() < f.norm() {
            r = cand;
        } else {
            break;
        }
    }
    r
}

fn derivative(p: &Poly) -> Poly {
    if p.coeffs.len() <= 1 {
        return Poly::zero();
    }
    Poly::new(p.coeffs.iter().enumerate().skip(1).map(|(k, &c)| c * k as f64).collect())
}

/// The reflection `g^{~n}(λ) = λⁿ · conj(g(1/λ̄))`; fails when `deg g > n`.
pub fn poly_reflect(g: &Poly, n: usize) -> HexResult<Poly> {
    if let Some(d) = g.degree() {
        if d > n {
            return Err(HexError::DegreeExceeded { degree: d, n });
        }
    }
    Ok(Poly::new((0..=n).map(|k| g.coeff(n - k).conj()).collect()))
}

/// Trigonometric polynomial `Σ_{k=-n}^{n} c_k λ^k`, stored with offset `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrigPoly {
    /// `coeffs[k + n]` is the coefficient of `λ^k`.
    pub coeffs: Vec<Cx>,
}

impl TrigPoly {
    /// Half-degree `n`.
    pub fn n(&self) -> usize {
        (self.coeffs.len().saturating_sub(1)) / 2
    }

    /// Coefficient of `λ^k`.
    pub fn coeff(&self, k: i64) -> Cx {
        let n = self.n() as i64;
        if k.abs() > n {
            Cx::new(0.0, 0.0)
        } else {
            self.coeffs[(k + n) as usize]
        }
    }

    /// `|p|²` on the circle: `c_k = Σ_j p_{j+k} conj(p_j)`.
    pub fn abs_sq(p: &Poly) -> TrigPoly {
        let d = p.coeffs.len().saturating_sub(1);
        let n = d as i64;
        let coeffs = (-n..=n)
            .map(|k| {
                let mut s = Cx::new(0.0, 0.0);
                for j in 0..=d as i64 {
                    let i = j + k;
                    if i >= 0 && i <= n {
                        s += p.coeff(i as usize) * p.coeff(j as usize).conj();
                    }
                }
                s
            })
            .collect();
        TrigPoly { coeffs }
    }

    pub fn sub(&self, o: &TrigPoly) -> TrigPoly {
        let n = self.n().max(o.n()) as i64;
        TrigPoly { coeffs: (-n..=n).map(|k| self.coeff(k) - o.coeff(k)).collect() }
    }

    /// Value at a point of the unit circle (real part; the imaginary part
    /// vanishes for Hermitian-symmetric coefficients).
    pub fn eval_circle(&self, lambda: Cx) -> f64 {
        let n = self.n() as i64;
        let mut s = Cx::new(0.0, 0.0);
        for k in -n..=n {
            s += self.coeff(k) * lambda.powi(k as i32);
        }
        s.re
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics_core::cx;

    #[test]
    fn roots_of_known_polynomial() {
        let roots = [cx(2.0, 1.0), cx(-0.5, 0.0), cx(0.0, -3.0)];
        let p = Poly::from_roots(cx(1.5, -0.5), &roots);
        let mut found = p.roots();
        assert_eq!(found.len(), 3);
        for r in roots {
            let (i, d) = found.iter().enumerate().map(|(i, f)| (i, (f - r).norm())).fold((0, f64::MAX), |a, b| if b.1 < a.1 { b } else { a });
            assert!(d < 1e-12, "{r} not found");
            found.remove(i);
        }
    }

    #[test]
    fn reflection_matches_definition_and_degree_guard() {
        let g = Poly::new(vec![cx(1.0, 2.0), cx(0.5, -1.0)]);
        let r = poly_reflect(&g, 3).unwrap();
        let lam = cx(0.3, 0.4);
        let expect = lam.powi(3) * g.eval(Cx::new(1.0, 0.0) / lam.conj()).conj();
        assert!((r.eval(lam) - expect).norm() < 1e-13);
        assert_eq!(poly_reflect(&g, 0), Err(HexError::DegreeExceeded { degree: 1, n: 0 }));
        // involution
        assert!(poly_reflect(&r, 3).unwrap().sub(&g).is_zero());
    }

    #[test]
    fn abs_sq_matches_pointwise() {
        let p = Poly::new(vec![cx(1.0, 0.5), cx(-0.2, 0.3), cx(0.1, 0.0)]);
        let t = TrigPoly::abs_sq(&p);
        for k in 0..16 {
            let l = crate::numerics_core::cis(k as f64 * 0.4);
            assert!((t.eval_circle(l) - p.eval(l).norm_sqr()).abs() < 1e-14);
        }
    }
}
