//! Structured singular values for the diagonal, scalar-plus-nilpotent and
//! upper-triangular structures, compared with the brute-force oracle.

use hexablock::hexablock::{mu_value, MuStructure};
use hexablock::numerics_core::{cx, Mat2};
use hexablock::oracles::{mu_bruteforce, GridSpec};

fn main() {
    let mats = [
        Mat2::new(cx(0.0, 0.0), cx(5.0, 0.0), cx(0.0, 0.0), cx(0.0, 0.0)),
        Mat2::new(cx(0.0, 0.0), cx(2.0, 0.0), cx(-0.25, 0.0), cx(0.0, 0.0)),
        Mat2::new(cx(0.3, 0.1), cx(-0.5, 0.2), cx(0.4, 0.0), cx(0.1, -0.6)),
    ];
    for a in mats {
        println!(
            "r = {:.6}  mu_tetra = {:.6}  mu_penta = {:.6}  mu_hexa = {:.6}  oracle = {:.6}  norm = {:.6}",
            a.spectral_radius(),
            mu_value(&a, MuStructure::Tetra),
            mu_value(&a, MuStructure::Penta),
            mu_value(&a, MuStructure::Hexa),
            mu_bruteforce(&a, &GridSpec::default()),
            a.op_norm()
        );
    }
}
