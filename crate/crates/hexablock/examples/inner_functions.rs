//! Rational inner functions: tetrablock data lifted to the hexablock and
//! validated on the circle and in the disc.

use hexablock::inner_schwarz::{hexa_inner_construct, hexa_inner_validate};
use hexablock::numerics_core::{cis, cx, BlaschkeProduct};
use hexablock::sampling::{random_tetra_inner, rng_from_seed};

fn main() -> Result<(), hexablock::HexError> {
    let mut rng = rng_from_seed(5);
    let t = random_tetra_inner(&mut rng, 3, 0.9, false);
    println!("E1 = {:?}\nE2 = {:?}\nD = {:?}", t.e1.coeffs, t.e2.coeffs, t.d.coeffs);
    let b = BlaschkeProduct::new(cis(0.2), vec![cx(0.3, -0.1)])?;
    let f = hexa_inner_construct(&t, &b, cis(1.0))?;
    println!("A = {:?}", f.a_poly.coeffs);
    let r = hexa_inner_validate(&f);
    println!(
        "valid = {}, circle |a|²+|x1|² defect = {:.2e}, bE defect = {:.2e}, min interior margin = {:.3e}",
        r.valid, r.max_circle_norm_defect, r.max_circle_be_defect, r.min_interior_margin
    );
    println!("f(0.4i) = {:?}", f.eval(cx(0.0, 0.4))?.coords());
    Ok(())
}
