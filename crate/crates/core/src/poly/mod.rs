//! Dense univariate polynomials over an arbitrary coefficient ring.
//!
//! A [`Poly`] is plain data (coefficients, lowest degree first, no trailing
//! zeros). Arithmetic lives on [`PolyRing`], which carries the coefficient
//! ring context. `PolyRing<R>` is itself a [`Ring`], so polynomials over
//! `F_p[y]` are available for free (the Morse criterion needs them).

mod cyclotomic;
mod parse;
mod resultant;
mod roots;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::ring::{Field, IntegralDomain, Integers, Ring};

pub use cyclotomic::{cyclotomic, cyclotomic_table, graeffe};
pub use parse::{parse_poly, ParseError};
pub use resultant::{discriminant, resultant, resultant_field};
pub use roots::{roots_over_field, ROOT_SPLITTING_SEED};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("quotient is not exact over the coefficient ring")]
    InexactDivision,
}

/// Dense polynomial, coefficients lowest degree first.
///
/// Invariant: the last coefficient is nonzero; the zero polynomial has no
/// coefficients and degree `None`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

impl Poly<BigInt> {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        PolyRing::new(Integers).from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

/// Arithmetic context for polynomials with coefficients in `R`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyRing<R> {
    base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    /// Build from coefficients (lowest first), stripping trailing zeros.
    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn x(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn monomial(&self, c: R::Elem, e: usize) -> Poly<R::Elem> {
        let mut coeffs = vec![self.base.zero(); e];
        coeffs.push(c);
        self.from_coeffs(coeffs)
    }

    pub fn scale(&self, f: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(f.coeffs.iter().map(|a| self.base.mul(a, c)).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, f: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
        f.coeffs
            .iter()
            .rev()
            .fold(self.base.zero(), |acc, c| self.base.add(&self.base.mul(&acc, x), c))
    }

    pub fn derivative(&self, f: &Poly<R::Elem>) -> Poly<R::Elem> {
        let coeffs = f
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.base.mul(&self.base.from_i64(i as i64), c))
            .collect();
        self.from_coeffs(coeffs)
    }

    /// `f(c·T)`.
    pub fn scale_variable(&self, f: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        let mut power = self.base.one();
        let mut coeffs = Vec::with_capacity(f.coeffs.len());
        for a in &f.coeffs {
            coeffs.push(self.base.mul(a, &power));
            power = self.base.mul(&power, c);
        }
        self.from_coeffs(coeffs)
    }

    /// `T^deg f · f(1/T)`.
    pub fn reverse(&self, f: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.from_coeffs(f.coeffs.iter().rev().cloned().collect())
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) · a mod b`.
    pub fn prem(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        let db = b.degree().expect("pseudo-division by zero polynomial");
        let Some(da) = a.degree() else {
            return Poly::zero();
        };
        if da < db {
            return a.clone();
        }
        let lb = b.leading().unwrap().clone();
        let mut r = a.coeffs.clone();
        let mut remaining = da - db + 1;
        while r.len() > db {
            let lr = r.last().unwrap().clone();
            let shift = r.len() - 1 - db;
            for c in r.iter_mut() {
                *c = self.base.mul(c, &lb);
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                let t = self.base.mul(&lr, bc);
                r[shift + i] = self.base.sub(&r[shift + i], &t);
            }
            while r.last().is_some_and(|c| self.base.is_zero(c)) {
                r.pop();
            }
            remaining -= 1;
        }
        let scale = self.base.pow(&lb, remaining as u64);
        let r: Vec<_> = r.iter().map(|c| self.base.mul(c, &scale)).collect();
        self.from_coeffs(r)
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_i64(n))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = self.base.zero();
        let coeffs = (0..n)
            .map(|i| {
                let x = a.coeffs.get(i).unwrap_or(&zero);
                let y = b.coeffs.get(i).unwrap_or(&zero);
                self.base.add(x, y)
            })
            .collect();
        self.from_coeffs(coeffs)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = self.base.zero();
        let coeffs = (0..n)
            .map(|i| {
                let x = a.coeffs.get(i).unwrap_or(&zero);
                let y = b.coeffs.get(i).unwrap_or(&zero);
                self.base.sub(x, y)
            })
            .collect();
        self.from_coeffs(coeffs)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.from_coeffs(a.coeffs.iter().map(|c| self.base.neg(c)).collect())
    }
    /// Schoolbook product.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }
}

impl<F: Field> PolyRing<F> {
    /// Quotient and remainder with `deg r < deg b`.
    pub fn divmod(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> Result<(Poly<F::Elem>, Poly<F::Elem>), PolyError> {
        let db = b.degree().ok_or(PolyError::DivisionByZero)?;
        let inv_lb = self
            .base
            .inv(b.leading().unwrap())
            .expect("leading coefficient is nonzero");
        let mut r = a.coeffs.clone();
        if r.len() <= db {
            return Ok((Poly::zero(), a.clone()));
        }
        let mut q = vec![self.base.zero(); r.len() - db];
        while r.len() > db {
            let lr = r.last().unwrap().clone();
            let shift = r.len() - 1 - db;
            if !self.base.is_zero(&lr) {
                let c = self.base.mul(&lr, &inv_lb);
                for (i, bc) in b.coeffs.iter().enumerate() {
                    r[shift + i] = self.base.sub(&r[shift + i], &self.base.mul(&c, bc));
                }
                q[shift] = c;
            }
            r.pop();
        }
        Ok((self.from_coeffs(q), self.from_coeffs(r)))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.divmod(a, b).expect("nonzero divisor").1
    }

    pub fn monic(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        match f.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = self.base.inv(lc).expect("nonzero");
                self.scale(f, &inv)
            }
        }
    }

    /// Monic gcd by Euclid; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `g = s·a + t·b` monic.
    pub fn ext_gcd(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divmod(&r0, &r1).expect("nonzero");
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = self.base.inv(lc).expect("nonzero");
                (self.scale(&r0, &inv), self.scale(&s0, &inv), self.scale(&t0, &inv))
            }
        }
    }

    /// `f^e mod m` by square-and-multiply.
    pub fn pow_mod(&self, f: &Poly<F::Elem>, mut e: u64, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut base = self.rem(f, m);
        let mut acc = self.rem(&self.one(), m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &base), m);
            }
            e >>= 1;
            if e > 0 {
                base = self.rem(&self.mul(&base, &base), m);
            }
        }
        acc
    }

    /// `gcd(f, f') = 1`. A vanishing derivative (a `p`-th power) is never squarefree.
    pub fn is_squarefree(&self, f: &Poly<F::Elem>) -> bool {
        if f.degree().unwrap_or(0) == 0 {
            return false;
        }
        let df = self.derivative(f);
        !df.is_zero() && self.gcd(f, &df).degree() == Some(0)
    }
}

impl<D: IntegralDomain> IntegralDomain for PolyRing<D> {
    /// Long division with exact coefficient quotients.
    fn div_exact(&self, a: &Poly<D::Elem>, b: &Poly<D::Elem>) -> Option<Poly<D::Elem>> {
        let db = b.degree()?;
        if a.is_zero() {
            return Some(Poly::zero());
        }
        let lb = b.leading().unwrap();
        let mut r = a.coeffs.clone();
        if r.len() <= db {
            return None;
        }
        let mut q = vec![self.base.zero(); r.len() - db];
        while r.len() > db {
            let lr = r.last().unwrap().clone();
            let shift = r.len() - 1 - db;
            if !self.base.is_zero(&lr) {
                let c = self.base.div_exact(&lr, lb)?;
                for (i, bc) in b.coeffs.iter().enumerate() {
                    r[shift + i] = self.base.sub(&r[shift + i], &self.base.mul(&c, bc));
                }
                q[shift] = c;
            }
            r.pop();
        }
        r.iter().all(|c| self.base.is_zero(c)).then(|| self.from_coeffs(q))
    }
}

impl PolyRing<Integers> {
    /// Nonnegative gcd of the coefficients.
    pub fn content(&self, f: &Poly<BigInt>) -> BigInt {
        f.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `f / content(f)` with positive leading coefficient.
    pub fn primitive_part(&self, f: &Poly<BigInt>) -> Poly<BigInt> {
        if f.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content(f);
        if f.leading().unwrap().is_negative() {
            c = -c;
        }
        self.from_coeffs(f.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Exact quotient `a / b` over `Z`.
    pub fn div_exact_int(&self, a: &Poly<BigInt>, b: &Poly<BigInt>) -> Result<Poly<BigInt>, PolyError> {
        let db = b.degree().ok_or(PolyError::DivisionByZero)?;
        let lb = b.leading().unwrap();
        let mut r = a.coeffs.clone();
        if a.is_zero() {
            return Ok(Poly::zero());
        }
        if r.len() <= db {
            return Err(PolyError::InexactDivision);
        }
        let mut q = vec![BigInt::zero(); r.len() - db];
        while r.len() > db {
            let lr = r.last().unwrap().clone();
            let shift = r.len() - 1 - db;
            if !lr.is_zero() {
                let (c, rem) = lr.div_rem(lb);
                if !rem.is_zero() {
                    return Err(PolyError::InexactDivision);
                }
                for (i, bc) in b.coeffs.iter().enumerate() {
                    r[shift + i] -= &c * bc;
                }
                q[shift] = c;
            }
            r.pop();
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::InexactDivision);
        }
        Ok(self.from_coeffs(q))
    }

    /// Primitive gcd over `Z[x]` (primitive remainder sequence), positive
    /// leading coefficient.
    pub fn gcd_int(&self, a: &Poly<BigInt>, b: &Poly<BigInt>) -> Poly<BigInt> {
        if a.is_zero() {
            return self.primitive_part(b);
        }
        if b.is_zero() {
            return self.primitive_part(a);
        }
        let cont = self.content(a).gcd(&self.content(b));
        let (mut x, mut y) = (self.primitive_part(a), self.primitive_part(b));
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            let r = self.prem(&x, &y);
            x = y;
            y = self.primitive_part(&r);
        }
        self.scale(&x, &cont)
    }

    /// `f / gcd(f, f')`, primitive.
    pub fn squarefree_part(&self, f: &Poly<BigInt>) -> Poly<BigInt> {
        let g = self.gcd_int(f, &self.derivative(f));
        if g.degree().unwrap_or(0) == 0 {
            return self.primitive_part(f);
        }
        let pf = self.primitive_part(f);
        let pg = self.primitive_part(&g);
        self.primitive_part(&self.div_exact_int(&pf, &pg).expect("Gauss: primitive divisor divides exactly"))
    }
}

impl fmt::Display for Poly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().map(|c| (c.is_negative(), c.abs().to_string(), c.abs().is_one())))
    }
}

impl fmt::Display for Poly<u64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().map(|&c| (false, c.to_string(), c == 1)))
    }
}

/// Writes `(negative, |c|, |c| == 1)` terms highest degree first in `x`.
fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl DoubleEndedIterator<Item = (bool, String, bool)> + ExactSizeIterator,
) -> fmt::Result {
    let n = terms.len();
    let mut first = true;
    for (rev_i, (neg, abs, unit)) in terms.rev().enumerate() {
        let e = n - 1 - rev_i;
        if abs == "0" {
            continue;
        }
        let sign = match (first, neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let body = match (e, unit) {
            (0, _) => abs,
            (1, true) => "x".to_string(),
            (1, false) => format!("{abs}*x"),
            (e, true) => format!("x^{e}"),
            (e, false) => format!("{abs}*x^{e}"),
        };
        write!(f, "{sign}{body}")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
