use serde::Serialize;

use super::ArithError;
use crate::finite_field::is_prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NumberField {
    /// `Q(ζ_n)`.
    Cyclotomic { conductor: u64 },
    /// `Q(√D)` for a fundamental discriminant `D`.
    Quadratic { discriminant: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    pub p: u64,
    pub field: NumberField,
    pub splits: bool,
}

/// `p` splits completely in `Q(ζ_n)` iff `p ≡ 1 (mod n)`.
pub fn splits_completely_cyclotomic(p: u64, n: u64) -> Result<SplitReport, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p));
    }
    if n == 0 {
        return Err(ArithError::ZeroConductor);
    }
    if n % p == 0 {
        return Err(ArithError::Ramified { p, modulus: n as i64 });
    }
    Ok(SplitReport {
        p,
        field: NumberField::Cyclotomic { conductor: n },
        splits: p % n == 1 % n,
    })
}

/// `D ≡ 1 (mod 4)` squarefree, or `D = 4k` with `k ≡ 2, 3 (mod 4)` squarefree;
/// `D = 1` is excluded.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    fn squarefree(n: i64) -> bool {
        let n = n.unsigned_abs();
        let mut k = 2u64;
        while k * k <= n {
            if n % (k * k) == 0 {
                return false;
            }
            k += 1;
        }
        true
    }
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => squarefree(d),
        0 => matches!((d / 4).rem_euclid(4), 2 | 3) && squarefree(d / 4),
        _ => false,
    }
}

/// Jacobi symbol `(a | n)` for odd positive `n`, by quadratic reciprocity.
pub fn jacobi(a: i64, n: u64) -> i8 {
    assert!(n % 2 == 1, "Jacobi symbol needs odd n");
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut sign = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// An odd prime `p ∤ D` splits in `Q(√D)` iff `(D | p) = 1`.
pub fn splits_quadratic(p: u64, d: i64) -> Result<SplitReport, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p));
    }
    if p == 2 {
        return Err(ArithError::EvenPrime);
    }
    if !is_fundamental_discriminant(d) {
        return Err(ArithError::NotFundamental(d));
    }
    if d.rem_euclid(p as i64) == 0 {
        return Err(ArithError::Ramified { p, modulus: d });
    }
    Ok(SplitReport {
        p,
        field: NumberField::Quadratic { discriminant: d },
        splits: jacobi(d, p) == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_examples() {
        assert!(splits_completely_cyclotomic(73, 24).unwrap().splits);
        assert!(splits_completely_cyclotomic(5, 4).unwrap().splits);
        assert!(!splits_completely_cyclotomic(7, 8).unwrap().splits);
        assert!(splits_completely_cyclotomic(3, 1).unwrap().splits);
        assert_eq!(
            splits_completely_cyclotomic(3, 24),
            Err(ArithError::Ramified { p: 3, modulus: 24 })
        );
        assert_eq!(splits_completely_cyclotomic(9, 4), Err(ArithError::NotPrime(9)));
    }

    #[test]
    fn quadratic_examples() {
        assert!(splits_quadratic(73, -4).unwrap().splits);
        assert!(splits_quadratic(73, -3).unwrap().splits);
        assert!(!splits_quadratic(7, -4).unwrap().splits);
        assert_eq!(splits_quadratic(3, -3), Err(ArithError::Ramified { p: 3, modulus: -3 }));
        assert_eq!(splits_quadratic(2, -3), Err(ArithError::EvenPrime));
        assert_eq!(splits_quadratic(7, -1), Err(ArithError::NotFundamental(-1)));
    }

    #[test]
    fn fundamental_discriminants() {
        let good = [-3, -4, -7, -8, 5, 8, 12, 13, -15, -20, -24];
        let bad = [0, 1, -1, 2, 3, -12, 9, 16, -16, 20];
        assert!(good.iter().all(|&d| is_fundamental_discriminant(d)));
        assert!(bad.iter().all(|&d| !is_fundamental_discriminant(d)));
    }

    #[test]
    fn jacobi_values() {
        assert_eq!(jacobi(2, 7), 1);
        assert_eq!(jacobi(3, 7), -1);
        assert_eq!(jacobi(-1, 13), 1);
        assert_eq!(jacobi(6, 9), 0);
        assert_eq!(jacobi(1001, 9907), -1);
    }
}
