//! Fejér–Riesz factorisation of a positive trigonometric polynomial and
//! basic disc automorphism algebra.

use hexablock::numerics_core::{cis, cx, fejer_riesz, DiscAut, FejerRieszMode, TrigPoly};

fn main() -> Result<(), hexablock::HexError> {
    // f(λ) = 2λ⁻¹ + 5 + 2λ = |2 + λ|² on the circle
    let f = TrigPoly { coeffs: vec![cx(2.0, 0.0), cx(5.0, 0.0), cx(2.0, 0.0)] };
    let d = fejer_riesz(&f, FejerRieszMode::Strict { tol: 1e-12 })?;
    println!("D(λ) coefficients: {:?}", d.coeffs);
    for k in 0..4 {
        let l = cis(k as f64 * 0.8);
        println!("  |D|² = {:.12}   f = {:.12}", d.eval(l).norm_sqr(), f.eval_circle(l));
    }
    let v = DiscAut::new(cis(0.3), cx(0.2, -0.4))?;
    let w = v.compose(&v.invert());
    println!("v ∘ v⁻¹ (0.1 + 0.2i) = {}", w.eval(cx(0.1, 0.2)));
    Ok(())
}
