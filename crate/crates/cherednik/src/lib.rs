//! Exact computations with type A rational Cherednik algebras.
//!
//! * [`affine_perm`]: extended affine symmetric group, minimal coset
//!   representatives, the order on labels, `m`-stability.
//! * [`rca_oracle`]: Dunkl operators on polynomials; the brute-force model.
//! * [`weight_modules`]: standard, simple and `t = 0` modules in weight bases.
//! * [`bgg`]: the BGG complex of hook standard modules.
//! * [`hilb`]: torus fixed points of Hilbert schemes on `x^m = y^n`.

pub mod affine_perm;
pub mod algebra;
pub mod bgg;
pub mod cli;
pub mod error;
pub mod hilb;
pub mod lincomb;
pub mod linalg;
pub mod poly;
pub mod rca_oracle;
pub mod scalar;
pub mod tableau;
pub mod weight_modules;

pub use error::{Error, Result};
pub use lincomb::LinComb;
pub use scalar::Q;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/affine-permutations.md")]
    mod affine_permutations {}
    #[doc = include_str!("../../../book/src/polynomial-representation.md")]
    mod polynomial_representation {}
    #[doc = include_str!("../../../book/src/weight-modules.md")]
    mod weight_modules {}
    #[doc = include_str!("../../../book/src/bgg.md")]
    mod bgg {}
    #[doc = include_str!("../../../book/src/hilbert-schemes.md")]
    mod hilbert_schemes {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
