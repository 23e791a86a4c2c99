//! Real slice geometry: membership, face labels, the Levi form and the
//! real pentablock sets.

use hexablock::numerics_core::cx;
use hexablock::real_slice::{face_classify, k_real, penta_real_sets, real_h_member, rho_and_levi, RealHexaPoint};
use hexablock::sampling::{real_slice_csv, RealSample};

fn main() -> Result<(), hexablock::HexError> {
    for p in [RealHexaPoint::new(0.5, 0.0, 0.0, 0.0), RealHexaPoint::new(0.0, 1.0, 1.0, 1.0), RealHexaPoint::new(1.0, 0.0, 0.0, 0.0)] {
        let v = real_h_member(&p, 1e-9);
        let faces: Vec<&str> = face_classify(&p).iter().map(|l| l.label.as_str()).collect();
        println!("(a, x) = ({}, {:?}): {:?}, faces {faces:?}", p.a, p.x(), v.region);
    }
    println!("K(0.5, 0.5, 0.25) = {:?}", k_real([0.5, 0.5, 0.25]));
    let r = 0.3;
    let d = rho_and_levi(&[cx(0.0, 0.0), cx(r, 0.0), cx(1.0 - r, 0.0)], &[cx(1.0, 0.0), cx(1.0, 0.0), cx(0.0, 0.0)])?;
    println!("Levi form at (0, {r}, {}) = {} (2(2-r)^2 = {})", 1.0 - r, d.levi, 2.0 * (2.0 - r) * (2.0 - r));
    let a0 = (2.0 + 5f64.sqrt()) / (3.0 + 5f64.sqrt());
    println!("pentablock sets at (a0, 1, 1/2): {:?}", penta_real_sets(a0, 1.0, 0.5, 1e-12));
    print!("{}", real_slice_csv(RealSample::Boundary, 1, 3)?);
    Ok(())
}
