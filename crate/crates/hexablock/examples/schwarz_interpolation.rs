//! Schwarz-type interpolation: feasibility check and construction of an
//! inner interpolant with f(0) = 0 and f(λ₀) = target.

use hexablock::inner_schwarz::{schwarz_construct, schwarz_feasible, SchwarzProblem};
use hexablock::numerics_core::{cx, HexaPoint};

fn main() -> Result<(), hexablock::HexError> {
    let l0 = cx(0.5, 0.0);
    let z = cx(0.0, 0.0);
    for target in [
        HexaPoint::new(cx(0.25, 0.0), z, z, cx(0.0, 0.5)),
        HexaPoint::new(z, cx(0.25, 0.0), cx(0.2, 0.1), cx(0.05, 0.025)),
        HexaPoint::new(cx(0.2, 0.0), cx(0.25, 0.0), cx(0.1, 0.0), cx(0.025, 0.0)),
        HexaPoint::new(cx(0.6, 0.0), z, z, z),
        HexaPoint::new(cx(0.1, 0.0), cx(0.2, 0.0), cx(0.2, 0.0), cx(0.1, 0.0)),
    ] {
        let prob = SchwarzProblem::new(l0, target)?;
        let rep = schwarz_feasible(&prob, 1e-9);
        match schwarz_construct(&prob, None, 1e-9) {
            Ok(s) => println!("{:?}: {:?}, residuals {:.1e} / {:.1e}", target.coords(), s.case, s.residual_at_zero, s.residual_at_lambda0),
            Err(e) => println!("{:?}: feasible = {}, {e}", target.coords(), rep.feasible),
        }
    }
    Ok(())
}
