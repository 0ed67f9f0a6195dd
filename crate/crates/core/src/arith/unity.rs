use num_bigint::BigInt;
use num_traits::Zero;

use crate::finite_field::prime_factors;
use crate::poly::{cyclotomic_table, resultant, Poly, PolyRing};
use crate::ring::Integers;

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n).into_iter().fold(n, |acc, p| acc / p * (p - 1))
}

/// Smallest `n` such that some root of `m` is a primitive `n`-th root of
/// unity, if any.
///
/// Works on the squarefree part of the primitive part of `m`. A root of
/// unity of order `n` has degree `φ(n)`, so only `n` with
/// `φ(n) ≤ deg` are candidates, and `φ(n) ≥ √(n/2)` bounds them by
/// `n ≤ 2·deg²`. Each candidate is tested by `Res(m, Φ_n) = 0`.
pub fn root_of_unity_order(m: &Poly<BigInt>) -> Option<u64> {
    let z = PolyRing::new(Integers);
    let m = z.squarefree_part(&z.primitive_part(m));
    let deg = m.degree().filter(|&d| d > 0)? as u64;
    let candidates: Vec<u64> = (1..=2 * deg * deg).filter(|&n| euler_phi(n) <= deg).collect();
    let table = cyclotomic_table(&candidates);
    candidates
        .into_iter()
        .find(|n| resultant(&z, &m, &table[n]).is_zero())
}

/// Whether some root of `m` is a root of unity.
pub fn is_root_of_unity_algebraic(m: &Poly<BigInt>) -> bool {
    root_of_unity_order(m).is_some()
}
