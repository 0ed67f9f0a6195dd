use serde::Serialize;

use super::ArithError;
use crate::finite_field::PrimeField;
use crate::poly::{resultant, Poly, PolyRing};
use crate::ring::Ring;

/// Which half of the Morse condition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MorseFailure {
    /// (a) `f'` has a repeated root.
    DerivativeNotSquarefree,
    /// (b) two critical points share a critical value.
    RepeatedCriticalValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorseReport {
    pub derivative_squarefree: bool,
    pub critical_values_distinct: bool,
    pub morse: bool,
    /// First failing component, `None` when Morse.
    pub witness: Option<MorseFailure>,
}

/// `c(y) = Res_x(f'(x), y - f(x))`, whose roots are the critical values of
/// `f` (with multiplicity).
pub fn critical_value_poly(field: &PrimeField, f: &Poly<u64>) -> Poly<u64> {
    let fy = PolyRing::new(*field);
    let fyx = PolyRing::new(fy.clone());
    let df = fy.derivative(f);
    let a = fyx.from_coeffs(df.coeffs().iter().map(|&c| fy.constant(c)).collect());
    // y - f(x) as a polynomial in x over F_p[y]
    let mut b: Vec<Poly<u64>> = f.coeffs().iter().map(|&c| fy.constant(field.neg(&c))).collect();
    b[0] = fy.add(&b[0], &fy.x());
    let b = fyx.from_coeffs(b);
    resultant(&fyx, &a, &b)
}

/// Morse test over `F_p`: `f'` squarefree and the critical values pairwise
/// distinct (`c(y)` squarefree).
pub fn is_morse(field: &PrimeField, f: &Poly<u64>) -> Result<MorseReport, ArithError> {
    let ring = PolyRing::new(*field);
    let n = f.degree().unwrap_or(0);
    if n < 2 {
        return Err(ArithError::DegreeTooSmall);
    }
    let df = ring.derivative(f);
    if df.is_zero() || n as u64 % field.p() == 0 {
        return Err(ArithError::DegenerateDerivative);
    }
    let derivative_squarefree = df.degree() == Some(0) || ring.is_squarefree(&df);
    let c = critical_value_poly(field, f);
    let critical_values_distinct = c.degree() == Some(0) || ring.is_squarefree(&c);
    let witness = if !derivative_squarefree {
        Some(MorseFailure::DerivativeNotSquarefree)
    } else if !critical_values_distinct {
        Some(MorseFailure::RepeatedCriticalValue)
    } else {
        None
    };
    Ok(MorseReport {
        derivative_squarefree,
        critical_values_distinct,
        morse: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn reduce(p: u64, f: &[i64]) -> (PrimeField, Poly<u64>) {
        let k = PrimeField::new(p).unwrap();
        (k, k.reduce_poly(&Poly::<BigInt>::from_i64s(f)))
    }

    #[test]
    fn morse_examples() {
        let (k, f) = reduce(73, &[0, -1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let r = is_morse(&k, &f).unwrap();
        assert!(r.morse && r.witness.is_none());

        let (k, f) = reduce(7, &[0, 0, 0, 1]);
        let r = is_morse(&k, &f).unwrap();
        assert_eq!(r.witness, Some(MorseFailure::DerivativeNotSquarefree));

        let (k, f) = reduce(13, &[0, 0, -2, 0, 1]);
        let r = is_morse(&k, &f).unwrap();
        assert!(r.derivative_squarefree);
        assert_eq!(r.witness, Some(MorseFailure::RepeatedCriticalValue));
    }

    #[test]
    fn critical_values_of_quartic() {
        // x^4 - 2x^2 over F_13: critical values 0, -1, -1
        let (k, f) = reduce(13, &[0, 0, -2, 0, 1]);
        let c = critical_value_poly(&k, &f);
        let r = PolyRing::new(k);
        assert_eq!(r.monic(&c), r.from_coeffs(vec![0, 1, 2, 1]));
    }

    #[test]
    fn degenerate_inputs() {
        let (k, f) = reduce(7, &[1, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(is_morse(&k, &f), Err(ArithError::DegenerateDerivative));
        let (k, f) = reduce(7, &[1, 1]);
        assert_eq!(is_morse(&k, &f), Err(ArithError::DegreeTooSmall));
    }
}
