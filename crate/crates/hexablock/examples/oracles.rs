//! Independent brute-force references: the definitional tetrablock test and
//! the grid estimate of the ψ supremum.

use hexablock::numerics_core::{cx, HexaPoint};
use hexablock::oracles::{grid_sup_psi, tetra_definitional, GridSpec};

fn main() {
    let spec = GridSpec::default();
    for x in [[cx(0.0, 0.0), cx(0.0, 0.0), cx(0.5, 0.0)], [cx(1.0, 0.0), cx(1.0, 0.0), cx(1.0, 0.0)], [cx(0.9, 0.0), cx(0.9, 0.0), cx(0.0, 0.0)]] {
        println!("{x:?}: {:?}", tetra_definitional(x, &spec, 1e-9));
    }
    let p = HexaPoint::new(cx(0.4, 0.0), cx(0.2, 0.0), cx(0.1, 0.1), cx(0.0, 0.05));
    let (sup, (z1, z2)) = grid_sup_psi(&p, &spec);
    println!("sup |psi| ≈ {sup:.10} at ({z1}, {z2})");
}
