//! Number-theoretic side conditions: Morse polynomials, splitting of primes
//! in cyclotomic and quadratic fields, root-of-unity detection and the
//! valuation lemma for Frobenius eigenvalue products.

mod lemma;
mod morse;
mod split;
mod unity;

use thiserror::Error;

pub use lemma::{
    lemma_direct_check, lemma_oracle_polynomial, lemma_structural_check, module_rank,
    subset_product_poly, LemmaVerdict,
};
pub use morse::{critical_value_poly, is_morse, MorseFailure, MorseReport};
pub use split::{
    is_fundamental_discriminant, jacobi, splits_completely_cyclotomic, splits_quadratic, NumberField,
    SplitReport,
};
pub use unity::{euler_phi, is_root_of_unity_algebraic, root_of_unity_order};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("f must have degree at least 2")]
    DegreeTooSmall,
    #[error("derivative of f is zero or drops degree (p divides deg f)")]
    DegenerateDerivative,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = {p} ramifies (divides {modulus})")]
    Ramified { p: u64, modulus: i64 },
    #[error("quadratic splitting needs an odd prime")]
    EvenPrime,
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),
    #[error("d = {0} is even; the lemma needs odd d")]
    EvenD(u32),
    #[error("d = {d} is outside 1..={max}")]
    DOutOfRange { d: u32, max: u32 },
    #[error("L-polynomial fails the functional equation")]
    FunctionalEquation,
    #[error("subset-product polynomial for g = {g}, d = {d} is beyond the supported range (g <= 2, d <= 3)")]
    BudgetExceeded { g: u32, d: u32 },
    #[error("2·dim = {twice_dim} is not divisible by [E:Q] = {degree}")]
    NonIntegralRank { twice_dim: u32, degree: u32 },
}
