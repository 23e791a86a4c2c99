//! Membership of sample points in the symmetrized bidisc, tetrablock,
//! pentablock and hexablock, with margins.

use hexablock::domains_classic::{g2_classify, penta_classify, tetra_classify};
use hexablock::hexablock::hexa_classify;
use hexablock::numerics_core::{cx, HexaPoint, TetraPoint};

fn main() -> Result<(), hexablock::HexError> {
    let tol = 1e-9;
    let z = cx(0.0, 0.0);
    println!("G2 (s, p) = (2, 1): {:?}", g2_classify(cx(2.0, 0.0), cx(1.0, 0.0), tol)?.region);
    println!("E (0, 0, 0.5): {:?}", tetra_classify(&TetraPoint::new(z, z, cx(0.5, 0.0)), tol)?.region);
    println!("P (0.1, 0.2, 0.05): {:?}", penta_classify(cx(0.1, 0.0), cx(0.2, 0.0), cx(0.05, 0.0), tol)?.region);
    for p in [
        HexaPoint::new(z, z, z, cx(0.5, 0.0)),
        HexaPoint::new(cx(0.3, 0.1), cx(0.2, 0.0), cx(0.0, 0.2), cx(0.1, 0.0)),
        HexaPoint::new(cx(1.0, 0.0), z, z, cx(1.0, 0.0)),
    ] {
        let v = hexa_classify(&p, tol)?;
        println!(
            "H {:?}: H_mu {} H_N {} H {} closure {} bH {} parts {:?}",
            p.coords(),
            v.h_mu.member,
            v.h_n.member,
            v.h.member,
            v.h_closure.member,
            v.b_h.member,
            v.boundary_parts
        );
    }
    Ok(())
}
