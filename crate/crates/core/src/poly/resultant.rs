use num_bigint::BigInt;

use super::{Poly, PolyRing};
use crate::ring::{Field, IntegralDomain, Integers};

/// `Res(a, b) = lc(a)^deg(b) · ∏ b(α)` over the roots `α` of `a`, computed
/// with the subresultant pseudo-remainder sequence. Only exact divisions in
/// the coefficient domain are performed, so this works over `Z`, `F_p[y]`
/// and any other [`IntegralDomain`].
///
/// Returns zero when either argument is zero.
pub fn resultant<D: IntegralDomain>(ring: &PolyRing<D>, a: &Poly<D::Elem>, b: &Poly<D::Elem>) -> D::Elem {
    let k = ring.base();
    let (Some(mut da), Some(mut db)) = (a.degree(), b.degree()) else {
        return k.zero();
    };
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        negate ^= da % 2 == 1 && db % 2 == 1;
    }
    let mut g = k.one();
    let mut h = k.one();
    while db > 0 {
        let delta = da - db;
        negate ^= da % 2 == 1 && db % 2 == 1;
        let r = ring.prem(&a, &b);
        let Some(dr) = r.degree() else {
            return k.zero();
        };
        let divisor = k.mul(&g, &k.pow(&h, delta as u64));
        let next: Vec<_> = r
            .coeffs()
            .iter()
            .map(|c| k.div_exact(c, &divisor).expect("subresultant division is exact"))
            .collect();
        a = b;
        b = ring.from_coeffs(next);
        da = db;
        db = dr;
        g = a.leading().unwrap().clone();
        // h <- h^(1 - delta) g^delta
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => k
                .div_exact(&k.pow(&g, delta as u64), &k.pow(&h, delta as u64 - 1))
                .expect("subresultant division is exact"),
        };
    }
    // b is a nonzero constant: result h^(1 - deg a) lc(b)^deg a
    let lb = b.leading().unwrap();
    let out = if da == 0 {
        k.one()
    } else {
        k.div_exact(&k.pow(lb, da as u64), &k.pow(&h, da as u64 - 1))
            .expect("subresultant division is exact")
    };
    if negate {
        k.neg(&out)
    } else {
        out
    }
}

/// Resultant over a field by the Euclidean recurrence
/// `Res(a, b) = (-1)^(deg a · deg b) lc(b)^(deg a - deg r) Res(b, r)`, `r = a mod b`.
pub fn resultant_field<F: Field>(ring: &PolyRing<F>, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> F::Elem {
    let k = ring.base();
    let mut acc = k.one();
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
            return k.zero();
        };
        if da == 0 {
            return k.mul(&acc, &k.pow(a.leading().unwrap(), db as u64));
        }
        if db == 0 {
            return k.mul(&acc, &k.pow(b.leading().unwrap(), da as u64));
        }
        let r = ring.rem(&a, &b);
        let Some(dr) = r.degree() else {
            return k.zero();
        };
        if da % 2 == 1 && db % 2 == 1 {
            acc = k.neg(&acc);
        }
        acc = k.mul(&acc, &k.pow(b.leading().unwrap(), (da - dr) as u64));
        a = b;
        b = r;
    }
}

/// `disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &Poly<BigInt>) -> BigInt {
    let z = PolyRing::new(Integers);
    let n = f.degree().expect("nonzero polynomial");
    let res = resultant(&z, f, &z.derivative(f));
    let d = Integers.div_exact(&res, f.leading().unwrap()).expect("lc(f) divides Res(f, f')");
    if (n * (n.saturating_sub(1)) / 2) % 2 == 1 {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::PrimeField;

    #[test]
    fn small_resultants() {
        let z = PolyRing::new(Integers);
        let r = |a: &[i64], b: &[i64]| resultant(&z, &Poly::from_i64s(a), &Poly::from_i64s(b));
        assert_eq!(r(&[-2, 1], &[-3, 1]), BigInt::from(-1));
        assert_eq!(r(&[1, 0, 1], &[-1, 0, 1]), BigInt::from(4));
        assert_eq!(r(&[5], &[1, 2, 3]), BigInt::from(25));
        assert_eq!(r(&[1, 1], &[]), BigInt::from(0));
        assert_eq!(r(&[0, -1, 1], &[0, 1]), BigInt::from(0));
    }

    #[test]
    fn discriminant_of_x3_minus_x() {
        assert_eq!(discriminant(&Poly::from_i64s(&[0, -1, 0, 1])), BigInt::from(4));
        // x^2 + bx + c: b^2 - 4c
        assert_eq!(discriminant(&Poly::from_i64s(&[5, 2, 1])), BigInt::from(-16));
    }

    #[test]
    fn field_resultant_agrees_with_reduction() {
        let f = PrimeField::new(101).unwrap();
        let zp = PolyRing::new(f);
        let z = PolyRing::new(Integers);
        let a = Poly::from_i64s(&[3, -7, 0, 2, 5]);
        let b = Poly::from_i64s(&[-1, 4, 9]);
        let over_z = resultant(&z, &a, &b);
        let over_f = resultant_field(&zp, &f.reduce_poly(&a), &f.reduce_poly(&b));
        assert_eq!(f.reduce_bigint(&over_z), over_f);
        let generic = resultant(&zp, &f.reduce_poly(&a), &f.reduce_poly(&b));
        assert_eq!(generic, over_f);
    }
}
