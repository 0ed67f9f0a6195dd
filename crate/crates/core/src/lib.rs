//! Finite fields, polynomials and superelliptic curves: point counts,
//! L-polynomials, Newton polygons, Hasse–Witt matrices and the arithmetic
//! side conditions around ordinary reduction.

pub mod arith;
pub mod cache;
pub mod cartier;
pub mod commands;
pub mod curve;
pub mod finite_field;
pub mod poly;
pub mod ring;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/finite-fields.md")]
    mod finite_fields {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/curves-and-zeta.md")]
    mod curves_and_zeta {}
    #[doc = include_str!("../../../book/src/newton-polygons.md")]
    mod newton_polygons {}
    #[doc = include_str!("../../../book/src/cartier-manin.md")]
    mod cartier_manin {}
    #[doc = include_str!("../../../book/src/arithmetic-checks.md")]
    mod arithmetic_checks {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
