#![allow(dead_code)]

use froblab::curve::SuperellipticCurve;
use froblab::finite_field::PrimeField;
use froblab::poly::{Poly, PolyRing};

/// All `y^2 = a x^3 + b x^2 + c x + d` with `a ≠ 0` and a squarefree cubic,
/// over `p ∈ {5, 7, 11, 13}`, then `y^3 = x^3 + 1` over `p ∈ {7, 13}`.
pub fn small_corpus() -> Vec<SuperellipticCurve> {
    let mut out = Vec::new();
    for p in [5u64, 7, 11, 13] {
        let field = PrimeField::new(p).unwrap();
        let ring = PolyRing::new(field);
        for a in 1..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        let f = ring.from_coeffs(vec![d, c, b, a]);
                        if let Ok(curve) = SuperellipticCurve::new(field, 2, f) {
                            out.push(curve);
                        }
                    }
                }
            }
        }
    }
    for p in [7u64, 13] {
        out.push(SuperellipticCurve::from_integer_model(p, 3, &Poly::from_i64s(&[1, 0, 0, 1])).unwrap());
    }
    out
}

/// Genus-2 curves `y^2 = x^5 + a x + b` (squarefree) over `p ∈ {5, 7, 11, 13}`.
pub fn genus_two_corpus() -> Vec<SuperellipticCurve> {
    let mut out = Vec::new();
    for p in [5u64, 7, 11, 13] {
        let field = PrimeField::new(p).unwrap();
        let ring = PolyRing::new(field);
        for a in 0..p {
            for b in 0..p {
                let f = ring.from_coeffs(vec![b, a, 0, 0, 0, 1]);
                if let Ok(curve) = SuperellipticCurve::new(field, 2, f) {
                    out.push(curve);
                }
            }
        }
    }
    out
}

/// `#{y ∈ F_p : y^m = c}` by enumeration.
pub fn naive_root_count(p: u64, c: u64, m: u32) -> u64 {
    (0..p).filter(|&y| pow_mod(y, m as u64, p) == c % p).count() as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Affine points of `y^m = f(x)` over `F_p` by double enumeration, plus the
/// points at infinity read off the smooth model (`m | n`: roots of
/// `u^m = lc f`; `m = 2`, `n` odd: one point).
pub fn naive_count(p: u64, m: u32, f: &[u64]) -> u64 {
    let eval = |x: u64| f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p);
    let mut n = 0;
    for x in 0..p {
        let v = eval(x);
        for y in 0..p {
            if pow_mod(y, m as u64, p) == v {
                n += 1;
            }
        }
    }
    let deg = f.len() - 1;
    let lc = *f.last().unwrap();
    n + if deg % m as usize == 0 {
        naive_root_count(p, lc, m)
    } else {
        assert!(m == 2 && deg % 2 == 1);
        1
    }
}
