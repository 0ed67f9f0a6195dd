use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{Poly, PolyRing};
use crate::ring::{Integers, Ring};

/// Root-squaring (Graeffe) transform.
///
/// Writing `P(x) = E(x^2) + x·O(x^2)`, the polynomial
/// `G(y) = (-1)^n (E(y)^2 - y·O(y)^2)` satisfies `G(x^2) = (-1)^n P(x)P(-x)`,
/// so its roots are the squares of the roots of `P` and its leading
/// coefficient is `lc(P)^2`.
pub fn graeffe<R: Ring>(ring: &PolyRing<R>, p: &Poly<R::Elem>) -> Poly<R::Elem> {
    let Some(n) = p.degree() else {
        return Poly::zero();
    };
    let k = ring.base();
    let even = ring.from_coeffs(p.coeffs().iter().step_by(2).cloned().collect());
    let odd = ring.from_coeffs(p.coeffs().iter().skip(1).step_by(2).cloned().collect());
    let e2 = ring.mul(&even, &even);
    let yo2 = ring.mul(&ring.x(), &ring.mul(&odd, &odd));
    let g = ring.sub(&e2, &yo2);
    if n % 2 == 1 {
        ring.from_coeffs(g.coeffs().iter().map(|c| k.neg(c)).collect())
    } else {
        g
    }
}

/// `Φ_n` by exact division of `x^n - 1` by `Φ_d` for the proper divisors `d`.
pub fn cyclotomic(n: u64) -> Poly<BigInt> {
    assert!(n >= 1, "cyclotomic index must be positive");
    cyclotomic_table(&[n]).remove(&n).unwrap()
}

/// `Φ_d` for every divisor `d` of every requested index, sharing work.
pub fn cyclotomic_table(indices: &[u64]) -> BTreeMap<u64, Poly<BigInt>> {
    let z = PolyRing::new(Integers);
    let mut needed: Vec<u64> = indices.iter().flat_map(|&n| divisors(n)).collect();
    needed.sort_unstable();
    needed.dedup();
    let mut table: BTreeMap<u64, Poly<BigInt>> = BTreeMap::new();
    // ascending order: every proper divisor is already present
    for n in needed {
        let mut acc = z.sub(&z.monomial(BigInt::from(1), n as usize), &z.one());
        for d in divisors(n).into_iter().filter(|&d| d < n) {
            acc = z
                .div_exact_int(&acc, &table[&d])
                .expect("x^n - 1 is the product of the Φ_d");
        }
        table.insert(n, acc);
    }
    table
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
