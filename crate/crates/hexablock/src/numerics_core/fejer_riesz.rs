use super::{cis, Cx, HexError, HexResult, Poly, TrigPoly};

/// Whether the factor may vanish on the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FejerRieszMode {
    /// Zeros on the circle allowed (factor zero-free on the open disc).
    NonStrict,
    /// The trigonometric polynomial must exceed `tol · max|c_k|` on the
    /// circle; the factor is then zero-free on the closed disc.
    Strict { tol: f64 },
}

const CHECK_SAMPLES: usize = 4096;
const SCALE_SAMPLES: usize = 64;

/// Fejér–Riesz factorisation: given `f ≥ 0` on the unit circle, returns a
/// polynomial `D` with `|D|² = f` on the circle, no zeros in the open unit
/// disc and a real positive leading coefficient.
///
/// Errors: `Infeasible` when `f` takes negative values on the circle;
/// `Degenerate` in strict mode when `f` (nearly) vanishes on the circle.
pub fn fejer_riesz(f: &TrigPoly, mode: FejerRieszMode) -> HexResult<Poly> {
    let scale = f.max_abs_coeff();
    if scale == 0.0 {
        return match mode {
            FejerRieszMode::NonStrict => Ok(Poly::zero()),
            FejerRieszMode::Strict { .. } => Err(HexError::Degenerate("trigonometric polynomial is identically zero".into())),
        };
    }
    let min_val = (0..CHECK_SAMPLES)
        .map(|k| f.eval_circle(cis(2.0 * std::f64::consts::PI * k as f64 / CHECK_SAMPLES as f64)))
        .fold(f64::INFINITY, f64::min);
    if min_val < -1e-9 * scale {
        return Err(HexError::Infeasible(format!("trigonometric polynomial is negative on the circle (minimum {min_val:.3e})")));
    }
    if let FejerRieszMode::Strict { tol } = mode {
        if min_val <= tol * scale {
            return Err(HexError::Degenerate(format!("trigonometric polynomial nearly vanishes on the circle (minimum {min_val:.3e})")));
        }
    }
    let n_eff = (0..=f.n() as i64).rev().find(|&k| f.coeff(k).norm() > 1e-14 * scale).unwrap_or(0) as usize;
    if n_eff == 0 {
        return Ok(Poly::constant(Cx::new(f.coeff(0).re.max(0.0).sqrt(), 0.0)));
    }
    let q = Poly::new((0..=2 * n_eff as i64).map(|j| f.coeff(j - n_eff as i64)).collect());
    let mut roots = q.roots();
    if roots.len() != 2 * n_eff {
        return Err(HexError::Degenerate("root count mismatch in spectral factorisation".into()));
    }
    roots.sort_by(|a, b| b.norm().partial_cmp(&a.norm()).unwrap());
    let (outer, inner) = roots.split_at(n_eff);
    let mut used = vec![false; inner.len()];
    let mut reps = Vec::with_capacity(n_eff);
    for &rho in outer {
        let target = Cx::new(1.0, 0.0) / rho.conj();
        let (best, _) = inner
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(i, s)| (i, (s - target).norm()))
            .fold((usize::MAX, f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a });
        let rep = if best == usize::MAX || inner[best].norm() == 0.0 {
            rho
        } else {
            used[best] = true;
            (rho + Cx::new(1.0, 0.0) / inner[best].conj()) / 2.0
        };
        let rep = if rep.norm() < 1.0 { rep / rep.norm() } else { rep };
        if let FejerRieszMode::Strict { tol } = mode {
            if rep.norm() - 1.0 <= tol {
                return Err(HexError::Degenerate("spectral factor has a zero on the unit circle".into()));
            }
        }
        reps.push(rep);
    }
    let d = Poly::from_roots(Cx::new(1.0, 0.0), &reps);
    let (mut num, mut den) = (0.0, 0.0);
    for k in 0..SCALE_SAMPLES {
        let l = cis(2.0 * std::f64::consts::PI * (k as f64 + 0.5) / SCALE_SAMPLES as f64);
        num += f.eval_circle(l).max(0.0);
        den += d.eval(l).norm_sqr();
    }
    Ok(d.scale(Cx::new((num / den).sqrt(), 0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics_core::cx;

    #[test]
    fn classic_example_five_plus_two_lambda() {
        // 5 + 2λ + 2λ⁻¹ = |2 + λ|²
        let f = TrigPoly { coeffs: vec![cx(2.0, 0.0), cx(5.0, 0.0), cx(2.0, 0.0)] };
        let d = fejer_riesz(&f, FejerRieszMode::Strict { tol: 1e-8 }).unwrap();
        for k in 0..64 {
            let l = cis(k as f64 * 0.1);
            assert!((d.eval(l).norm() - (cx(2.0, 0.0) + l).norm()).abs() < 1e-10);
        }
    }

    #[test]
    fn negative_polynomial_is_infeasible() {
        let f = TrigPoly { coeffs: vec![cx(2.0, 0.0), cx(1.0, 0.0), cx(2.0, 0.0)] };
        assert!(matches!(fejer_riesz(&f, FejerRieszMode::NonStrict), Err(HexError::Infeasible(_))));
    }

    #[test]
    fn circle_zero_allowed_only_in_nonstrict_mode() {
        // |1 + λ|² = 2 + λ + λ⁻¹
        let f = TrigPoly { coeffs: vec![cx(1.0, 0.0), cx(2.0, 0.0), cx(1.0, 0.0)] };
        assert!(matches!(fejer_riesz(&f, FejerRieszMode::Strict { tol: 1e-8 }), Err(HexError::Degenerate(_))));
        let d = fejer_riesz(&f, FejerRieszMode::NonStrict).unwrap();
        for k in 0..64 {
            let l = cis(k as f64 * 0.1);
            assert!((d.eval(l).norm() - (cx(1.0, 0.0) + l).norm()).abs() < 1e-7);
        }
    }

    #[test]
    fn zero_polynomial_factors_to_zero() {
        let f = TrigPoly { coeffs: vec![cx(0.0, 0.0); 3] };
        assert!(fejer_riesz(&f, FejerRieszMode::NonStrict).unwrap().is_zero());
    }
}
