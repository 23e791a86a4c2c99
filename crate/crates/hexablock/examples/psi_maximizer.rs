//! Closed-form maximiser of |κ| over the bidisc, checked against the grid
//! oracle.

use hexablock::numerics_core::{cx, HexaPoint, TetraPoint};
use hexablock::oracles::{grid_sup_psi, GridSpec};
use hexablock::psi_kappa::{maximizer, stationarity_residual, sup_kappa};

fn main() -> Result<(), hexablock::HexError> {
    let x = TetraPoint::new(cx(0.3, 0.1), cx(-0.2, 0.25), cx(0.1, -0.05));
    let m = maximizer(&x)?;
    println!("z1* = {}, z2* = {}, K* = {:.12}", m.z1_star, m.z2_star, m.k_star);
    println!("closed form sup |kappa| = {:.12}", sup_kappa(&x));
    println!("stationarity residual = {:.2e}", stationarity_residual(&x, m.z1_star, m.z2_star));
    let (oracle, _) = grid_sup_psi(&HexaPoint::from_parts(cx(1.0, 0.0), x), &GridSpec::default());
    println!("grid oracle = {oracle:.12}");
    Ok(())
}
