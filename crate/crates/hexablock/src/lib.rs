//! Numerics for the hexablock and its classical relatives.
//!
//! The hexablock ℍ ⊂ ℂ⁴ is the image of the 2×2 matrices with structured
//! singular value below one under `A ↦ (a21, a11, a22, det A)`.  This crate
//! provides membership tests with explicit margins for the symmetrized bidisc
//! Γ, the tetrablock 𝔼, the pentablock ℙ and the hexablock family, the
//! structured singular values themselves, automorphism groups, rational inner
//! functions, Schwarz-type interpolation, real-slice geometry and independent
//! brute-force oracles used to validate every closed form.
//!
//! Complex numbers are [`Cx`] (`num_complex::Complex64`); every fallible
//! operation returns [`HexError`].

pub mod numerics_core;
pub mod domains_classic;
pub mod psi_kappa;
pub mod hexablock;
pub mod automorphisms;
pub mod inner_schwarz;
pub mod real_slice;
pub mod oracles;
pub mod sampling;
pub mod cli;

pub use numerics_core::{Cx, HexError, HexResult, DEFAULT_TOL};
