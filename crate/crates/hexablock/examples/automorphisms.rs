//! Hexablock automorphisms: application, inversion and composition.

use hexablock::automorphisms::HexaAut;
use hexablock::numerics_core::{cis, cx, DiscAut, HexaPoint};

fn main() -> Result<(), hexablock::HexError> {
    let t = HexaAut::new(DiscAut::new(cis(0.4), cx(0.2, 0.1))?, DiscAut::new(cis(-1.0), cx(-0.3, 0.2))?, cis(0.7), true)?;
    let s = HexaAut::new(DiscAut::new(cis(1.1), cx(0.0, -0.4))?, DiscAut::identity(), cis(2.0), false)?;
    let p = HexaPoint::new(cx(0.2, 0.1), cx(0.3, 0.0), cx(-0.1, 0.2), cx(0.05, 0.02));
    let q = t.apply(&p)?;
    println!("T(p) = {:?}", q.coords());
    println!("round trip error = {:.2e}", t.invert().apply(&q)?.dist(&p));
    let direct = t.compose(&s).apply(&p)?;
    let stepwise = t.apply(&s.apply(&p)?)?;
    println!("composition error = {:.2e}", direct.dist(&stepwise));
    println!("T∘S parameters (xi1, z1, xi2, z2) = {:?}", t.compose(&s).params());
    Ok(())
}
