//! tentfield: fixed points of the up-down maps `g_{p,I}`, the finite fields
//! `F_{p^n}`, and an explicit bijection between them that turns `g` into the
//! Frobenius map `a -> a^p`.
//!
//! - [`ffield`]: polynomials over `F_p`, field contexts, Frobenius, counting
//!   irreducibles.
//! - [`dynamics`]: exact evaluation of `g_{p,I}`, fixed points, base-`p`
//!   expansions, orbits and periodic-point counts.
//! - [`bijection`]: the permutations `π_{p^n,I}` and the bijection tables.
//! - [`chebyshev`]: Chebyshev polynomials and the transported bijection.
//! - [`cli`]: the `tentfield` command-line front end and SVG plots.

pub mod arith;
pub mod bijection;
pub mod chebyshev;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod ffield;

pub use error::{Error, Result};
