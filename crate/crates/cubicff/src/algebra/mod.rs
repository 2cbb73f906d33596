//! Finite fields, polynomials over them, factorization and residue-field helpers.

mod factor;
mod field;
mod poly;
mod residue;

pub use factor::{monic_irreducibles, monic_polys, Factorization};
pub use field::{Fe, FieldCtx, Fq, GEN_SYMBOL, MAX_ORDER};
pub use poly::Poly;
pub use residue::{poly_crt, residue_root};
