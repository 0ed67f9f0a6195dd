//! Prime fields `F_p` and extension fields `F_p[t]/(m(t))`.
//!
//! Residues are always kept canonical (in `[0, p)`), so element equality is
//! structural. The characteristic is bounded below `2^31` so that a product
//! of two residues fits in a `u64`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::poly::{Poly, PolyRing};
use crate::ring::{Field, FiniteField, IntegralDomain, Ring};

/// Largest supported extension degree.
pub const MAX_EXT_DEGREE: usize = 12;

/// Exclusive upper bound on the characteristic.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is unsupported (need an odd prime below 2^31)")]
    UnsupportedCharacteristic(u64),
    #[error("extension degree {0} is unsupported (1..={MAX_EXT_DEGREE})")]
    UnsupportedDegree(u32),
    #[error("field of order {p}^{k} does not fit in 64 bits")]
    CardinalityOverflow { p: u64, k: u32 },
    #[error("modulus must be monic and irreducible of degree k")]
    InvalidModulus,
    #[error("coefficient vector has {0} entries, expected at most the extension degree")]
    InvalidElement(usize),
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &sp in &SMALL {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        r
    };
    'witness: for &a in &SMALL {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `F_p` for an odd prime `p < 2^31`. Elements are residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= MAX_CHARACTERISTIC || p < 3 {
            return Err(FieldError::UnsupportedCharacteristic(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits")
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn to_signed(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// Reduce an integer polynomial coefficient-wise.
    pub fn reduce_poly(&self, f: &Poly<BigInt>) -> Poly<u64> {
        let coeffs = f.coeffs().iter().map(|c| self.reduce_bigint(c)).collect();
        PolyRing::new(*self).from_coeffs(coeffs)
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
}

impl IntegralDomain for PrimeField {
    fn div_exact(&self, a: &u64, b: &u64) -> Option<u64> {
        self.div(a, b).ok()
    }
}

impl Field for PrimeField {
    /// Extended Euclid on `(a, p)`.
    fn inv(&self, a: &u64) -> Result<u64, FieldError> {
        if *a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce_i64(t0))
    }
}

impl FiniteField for PrimeField {
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn degree(&self) -> u32 {
        1
    }
    fn cardinality(&self) -> u64 {
        self.p
    }
    fn element(&self, index: u64) -> u64 {
        index % self.p
    }
    fn index_of(&self, a: &u64) -> u64 {
        *a
    }
    fn embed(&self, c: u64) -> u64 {
        c % self.p
    }
}

/// Element of an [`ExtField`]: coefficients of `1, t, ..., t^(k-1)`.
///
/// Elements are tagged with `(p, k)` so that mixing elements of different
/// fields is detected by the checked operations.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtElem {
    p: u32,
    k: u8,
    c: [u32; MAX_EXT_DEGREE],
}

impl ExtElem {
    pub fn coeffs(&self) -> &[u32] {
        &self.c[..self.k as usize]
    }
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs().iter().enumerate() {
            if c == 0 {
                continue;
            }
            terms.push(match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}t^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

/// `F_{p^k} = F_p[t]/(m(t))` with `m` monic irreducible of degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField {
    base: PrimeField,
    k: u32,
    /// Monic modulus, low degree first, length `k + 1`.
    modulus: Vec<u64>,
    q: u64,
}

impl ExtField {
    /// The extension of degree `k` defined by [`find_irreducible`].
    pub fn new(base: PrimeField, k: u32) -> Result<Self, FieldError> {
        Self::check_degree(base, k)?;
        let m = find_irreducible(&base, k);
        Self::with_modulus(base, &m)
    }

    pub fn with_modulus(base: PrimeField, modulus: &Poly<u64>) -> Result<Self, FieldError> {
        let k = modulus.degree().ok_or(FieldError::InvalidModulus)? as u32;
        Self::check_degree(base, k)?;
        if modulus.leading() != Some(&1) || !is_irreducible(&base, modulus) {
            return Err(FieldError::InvalidModulus);
        }
        Ok(Self {
            base,
            k,
            modulus: modulus.coeffs().to_vec(),
            q: base.p.pow(k),
        })
    }

    fn check_degree(base: PrimeField, k: u32) -> Result<(), FieldError> {
        if k == 0 || k as usize > MAX_EXT_DEGREE {
            return Err(FieldError::UnsupportedDegree(k));
        }
        base.p
            .checked_pow(k)
            .map(|_| ())
            .ok_or(FieldError::CardinalityOverflow { p: base.p, k })
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn modulus(&self) -> Poly<u64> {
        PolyRing::new(self.base).from_coeffs(self.modulus.clone())
    }

    fn blank(&self) -> ExtElem {
        ExtElem {
            p: self.base.p as u32,
            k: self.k as u8,
            c: [0; MAX_EXT_DEGREE],
        }
    }

    /// Build an element from low-first coefficients (reduced mod `p`).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<ExtElem, FieldError> {
        if coeffs.len() > self.k as usize {
            return Err(FieldError::InvalidElement(coeffs.len()));
        }
        let mut e = self.blank();
        for (slot, &c) in e.c.iter_mut().zip(coeffs) {
            *slot = (c % self.base.p) as u32;
        }
        Ok(e)
    }

    /// The class of `t`.
    pub fn generator(&self) -> ExtElem {
        if self.k == 1 {
            // t = -m_0 in F_p[t]/(t + m_0)
            return self.embed(self.base.neg(&self.modulus[0]));
        }
        let mut e = self.blank();
        e.c[1] = 1;
        e
    }

    pub fn contains(&self, a: &ExtElem) -> bool {
        a.p as u64 == self.base.p && a.k as u32 == self.k
    }

    fn check(&self, a: &ExtElem, b: &ExtElem) -> Result<(), FieldError> {
        if self.contains(a) && self.contains(b) {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    pub fn checked_add(&self, a: &ExtElem, b: &ExtElem) -> Result<ExtElem, FieldError> {
        self.check(a, b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_sub(&self, a: &ExtElem, b: &ExtElem) -> Result<ExtElem, FieldError> {
        self.check(a, b)?;
        Ok(self.sub(a, b))
    }

    pub fn checked_mul(&self, a: &ExtElem, b: &ExtElem) -> Result<ExtElem, FieldError> {
        self.check(a, b)?;
        Ok(self.mul(a, b))
    }

    fn as_poly(&self, a: &ExtElem) -> Poly<u64> {
        PolyRing::new(self.base).from_coeffs(a.coeffs().iter().map(|&c| c as u64).collect())
    }
}

impl Ring for ExtField {
    type Elem = ExtElem;

    fn zero(&self) -> ExtElem {
        self.blank()
    }
    fn one(&self) -> ExtElem {
        self.embed(1)
    }
    fn from_i64(&self, n: i64) -> ExtElem {
        self.embed(self.base.reduce_i64(n))
    }
    fn is_zero(&self, a: &ExtElem) -> bool {
        a.c.iter().all(|&c| c == 0)
    }
    fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        debug_assert!(self.contains(a) && self.contains(b));
        let p = self.base.p as u32;
        let mut r = self.blank();
        for i in 0..self.k as usize {
            let s = a.c[i] + b.c[i];
            r.c[i] = if s >= p { s - p } else { s };
        }
        r
    }
    fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        debug_assert!(self.contains(a) && self.contains(b));
        let p = self.base.p as u32;
        let mut r = self.blank();
        for i in 0..self.k as usize {
            r.c[i] = if a.c[i] >= b.c[i] {
                a.c[i] - b.c[i]
            } else {
                a.c[i] + p - b.c[i]
            };
        }
        r
    }
    fn neg(&self, a: &ExtElem) -> ExtElem {
        self.sub(&self.zero(), a)
    }
    fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        debug_assert!(self.contains(a) && self.contains(b));
        let p = self.base.p;
        let k = self.k as usize;
        let mut prod = [0u64; 2 * MAX_EXT_DEGREE - 1];
        for i in 0..k {
            let ai = a.c[i] as u64;
            if ai == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + ai * b.c[j] as u64) % p;
            }
        }
        // t^k = -(m_0 + ... + m_{k-1} t^{k-1})
        for d in (k..2 * k - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..k {
                let m = self.modulus[i];
                if m != 0 {
                    prod[d - k + i] = (prod[d - k + i] + (p - m) * c) % p;
                }
            }
        }
        let mut r = self.blank();
        for i in 0..k {
            r.c[i] = prod[i] as u32;
        }
        r
    }
}

impl IntegralDomain for ExtField {
    fn div_exact(&self, a: &ExtElem, b: &ExtElem) -> Option<ExtElem> {
        self.div(a, b).ok()
    }
}

impl Field for ExtField {
    /// Extended gcd of the representative with the modulus in `F_p[t]`.
    fn inv(&self, a: &ExtElem) -> Result<ExtElem, FieldError> {
        if !self.contains(a) {
            return Err(FieldError::FieldMismatch);
        }
        if self.is_zero(a) {
            return Err(FieldError::DivisionByZero);
        }
        let ring = PolyRing::new(self.base);
        let (g, s, _) = ring.ext_gcd(&self.as_poly(a), &self.modulus());
        debug_assert_eq!(g.degree(), Some(0));
        let mut e = self.blank();
        for (slot, &c) in e.c.iter_mut().zip(s.coeffs()) {
            *slot = c as u32;
        }
        Ok(e)
    }

    fn div(&self, a: &ExtElem, b: &ExtElem) -> Result<ExtElem, FieldError> {
        self.check(a, b)?;
        Ok(self.mul(a, &self.inv(b)?))
    }
}

impl FiniteField for ExtField {
    fn characteristic(&self) -> u64 {
        self.base.p
    }
    fn degree(&self) -> u32 {
        self.k
    }
    fn cardinality(&self) -> u64 {
        self.q
    }
    fn element(&self, mut index: u64) -> ExtElem {
        let p = self.base.p;
        let mut e = self.blank();
        for i in 0..self.k as usize {
            e.c[i] = (index % p) as u32;
            index /= p;
        }
        e
    }
    fn index_of(&self, a: &ExtElem) -> u64 {
        a.coeffs()
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.base.p + c as u64)
    }
    fn embed(&self, c: u64) -> ExtElem {
        let mut e = self.blank();
        e.c[0] = (c % self.base.p) as u32;
        e
    }
}

/// Rabin's test: `f | t^(p^n) - t` and `gcd(f, t^(p^(n/r)) - t) = 1` for
/// every prime `r | n`, where `n = deg f`.
pub fn is_irreducible(field: &PrimeField, f: &Poly<u64>) -> bool {
    let ring = PolyRing::new(*field);
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = ring.monic(f);
    let t = ring.x();
    // frob[i] = t^(p^i) mod f
    let mut frob = vec![ring.rem(&t, &f)];
    for i in 1..=n {
        let next = ring.pow_mod(&frob[i - 1], field.p(), &f);
        frob.push(next);
    }
    if !ring.is_zero(&ring.rem(&ring.sub(&frob[n], &t), &f)) {
        return false;
    }
    prime_factors(n as u64).into_iter().all(|r| {
        let h = ring.sub(&frob[n / r as usize], &t);
        ring.gcd(&f, &h).degree() == Some(0)
    })
}

/// Smallest monic irreducible polynomial of degree `k` over `F_p`, with the
/// lower coefficients read as base-`p` digits of a counter (constant term
/// least significant).
pub fn find_irreducible(field: &PrimeField, k: u32) -> Poly<u64> {
    assert!(k >= 1, "degree must be positive");
    let ring = PolyRing::new(*field);
    let p = field.p();
    let mut index = 0u64;
    loop {
        let mut coeffs = Vec::with_capacity(k as usize + 1);
        let mut rest = index;
        for _ in 0..k {
            coeffs.push(rest % p);
            rest /= p;
        }
        coeffs.push(1);
        let f = ring.from_coeffs(coeffs);
        if is_irreducible(field, &f) {
            return f;
        }
        index += 1;
    }
}

/// Number of `y` in the field with `y^m = c`.
///
/// `1` when `c = 0`; otherwise with `e = gcd(m, q - 1)` it is `e` if
/// `c^((q-1)/e) = 1` and `0` else.
pub fn mth_root_count<F: FiniteField>(field: &F, c: &F::Elem, m: u64) -> u64 {
    assert!(m > 0, "m must be positive");
    if field.is_zero(c) {
        return 1;
    }
    let q1 = field.cardinality() - 1;
    let e = m.gcd(&q1);
    if field.is_one(&field.pow(c, q1 / e)) {
        e
    } else {
        0
    }
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
