//! Superelliptic curves `y^m = f(x)` over `F_p`: genus, point counts over
//! `F_{p^k}`, L-polynomials and Newton polygons.

mod lpoly;
mod newton;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use thiserror::Error;

use crate::finite_field::{mth_root_count, ExtField, FieldError, PrimeField};
use crate::poly::{parse_poly, ParseError, Poly, PolyRing};
use crate::ring::{FiniteField, Ring};

pub use lpoly::{
    l_polynomial, l_polynomial_from_counts, l_polynomial_with_budget, weil_verify, LPolyError,
    LPolynomial, PointCount, WeilReport, ZetaComputation, DEFAULT_VALIDATION_BUDGET, WEIL_TOLERANCE,
};
pub use newton::{is_ordinary_newton, newton_polygon, NewtonPolygon};

/// Largest field the point counter will enumerate.
pub const COUNT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("exponent m = {0} must be at least 2")]
    ExponentTooSmall(u32),
    #[error("p = {p} divides m = {m}; the cover is not tame")]
    WildCover { p: u64, m: u32 },
    #[error("f must have degree at least 2")]
    DegreeTooSmall,
    #[error("f is not squarefree over F_p")]
    NotSquarefree,
    #[error("points at infinity for m = {m}, deg f = {n} are not supported (need m | n, or m = 2 with n odd)")]
    UnsupportedInfinityShape { m: u32, n: usize },
    #[error("counting over F_(p^{k}) exceeds the enumeration budget")]
    BudgetExceeded { k: u32 },
    #[error("point counts give a non-integral L-polynomial coefficient b_{index}")]
    NonIntegralCoefficient { index: usize },
    #[error("L-polynomial predicts N_{k} = {predicted}, direct count gives {counted}")]
    InconsistentCounts { k: u32, predicted: i128, counted: u64 },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    LPoly(#[from] LPolyError),
}

/// How the smooth model looks above `x = ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InfinityShape {
    /// `m | n`: points are the `u` with `u^m = lc(f)`.
    DividesDegree,
    /// `m = 2`, `n` odd: a single rational branch point.
    OddHyperelliptic,
}

/// The curve `y^m = f(x)` over `F_p`, with `p ∤ m` and `f` squarefree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperellipticCurve {
    field: PrimeField,
    m: u32,
    f: Poly<u64>,
}

impl SuperellipticCurve {
    pub fn new(field: PrimeField, m: u32, f: Poly<u64>) -> Result<Self, CurveError> {
        if m < 2 {
            return Err(CurveError::ExponentTooSmall(m));
        }
        if m as u64 % field.p() == 0 {
            return Err(CurveError::WildCover { p: field.p(), m });
        }
        if f.degree().unwrap_or(0) < 2 {
            return Err(CurveError::DegreeTooSmall);
        }
        if !PolyRing::new(field).is_squarefree(&f) {
            return Err(CurveError::NotSquarefree);
        }
        Ok(Self { field, m, f })
    }

    /// Reduce an integer model modulo `p`.
    pub fn from_integer_model(p: u64, m: u32, f: &Poly<BigInt>) -> Result<Self, CurveError> {
        let field = PrimeField::new(p)?;
        Self::new(field, m, field.reduce_poly(f))
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn f(&self) -> &Poly<u64> {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.f.degree().expect("nonzero by construction")
    }

    pub fn genus(&self) -> u32 {
        superelliptic_genus(self.m, self.degree())
    }

    pub fn infinity_shape(&self) -> Option<InfinityShape> {
        let n = self.degree();
        if n % self.m as usize == 0 {
            Some(InfinityShape::DividesDegree)
        } else if self.m == 2 && n % 2 == 1 {
            Some(InfinityShape::OddHyperelliptic)
        } else {
            None
        }
    }

    /// The model `y^m = f(x + c)`.
    pub fn translate(&self, c: u64) -> Self {
        let ring = PolyRing::new(self.field);
        let shift = ring.from_coeffs(vec![c % self.p(), 1]);
        // Horner in the polynomial ring
        let g = self
            .f
            .coeffs()
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, a| ring.add(&ring.mul(&acc, &shift), &ring.constant(*a)));
        Self {
            field: self.field,
            m: self.m,
            f: g,
        }
    }
}

/// Riemann-Hurwitz for `y^m = f(x)`, `f` squarefree of degree `n`:
/// `g = (n(m-1) - m - gcd(m, n))/2 + 1`.
pub fn superelliptic_genus(m: u32, n: usize) -> u32 {
    let (m, n) = (m as i64, n as i64);
    let g = (n * (m - 1) - m - m.gcd(&n)) / 2 + 1;
    g.max(0) as u32
}

/// Parse `y^m = <poly in x>` into `(m, f)`.
pub fn parse_curve_spec(s: &str) -> Result<(u32, Poly<BigInt>), ParseError> {
    let err = |position: usize, message: &str| ParseError {
        position,
        message: message.to_string(),
    };
    let Some(eq) = s.find('=') else {
        return Err(err(s.chars().count(), "expected '='"));
    };
    let lhs = &s[..eq];
    let lhs_offset = lhs.len() - lhs.trim_start().len();
    let lhs = lhs.trim();
    let mut chars = lhs.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return Err(err(lhs_offset, "expected 'y^m' on the left")),
    }
    let rest = chars.as_str().trim_start();
    let m = if rest.is_empty() {
        1
    } else if let Some(digits) = rest.strip_prefix('^') {
        digits
            .trim()
            .parse::<u32>()
            .map_err(|_| err(lhs_offset + 2, "expected an integer exponent"))?
    } else {
        return Err(err(lhs_offset + 1, "expected '^'"));
    };
    let rhs_start = s[..eq + 1].chars().count();
    let f = parse_poly(&s[eq + 1..]).map_err(|e| ParseError {
        position: e.position + rhs_start,
        message: e.message,
    })?;
    Ok((m, f))
}

fn field_size(p: u64, k: u32) -> Option<u64> {
    p.checked_pow(k).filter(|&q| q <= COUNT_BUDGET)
}

/// Number of points of the smooth projective model over `F_{p^k}`:
/// `Σ_x #{y : y^m = f(x)}` plus the points at infinity.
pub fn count_points(curve: &SuperellipticCurve, k: u32) -> Result<u64, CurveError> {
    if k == 0 {
        return Err(CurveError::BudgetExceeded { k });
    }
    field_size(curve.p(), k).ok_or(CurveError::BudgetExceeded { k })?;
    if k == 1 {
        count_points_in(curve, curve.field())
    } else {
        let ext = ExtField::new(*curve.field(), k).map_err(|e| match e {
            FieldError::UnsupportedDegree(_) | FieldError::CardinalityOverflow { .. } => {
                CurveError::BudgetExceeded { k }
            }
            other => other.into(),
        })?;
        count_points_in(curve, &ext)
    }
}

/// Point count over an arbitrary finite field of characteristic `p`.
pub fn count_points_in<F: FiniteField>(curve: &SuperellipticCurve, field: &F) -> Result<u64, CurveError> {
    assert_eq!(field.characteristic(), curve.p(), "field characteristic must match the curve");
    let shape = curve.infinity_shape().ok_or(CurveError::UnsupportedInfinityShape {
        m: curve.m,
        n: curve.degree(),
    })?;
    if field.cardinality() > COUNT_BUDGET {
        return Err(CurveError::BudgetExceeded { k: field.degree() });
    }
    let coeffs: Vec<F::Elem> = curve.f.coeffs().iter().map(|&c| field.embed(c)).collect();
    let m = curve.m as u64;
    let affine: u64 = (0..field.cardinality())
        .into_par_iter()
        .map(|i| {
            let x = field.element(i);
            let y = coeffs
                .iter()
                .rev()
                .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, &x), c));
            mth_root_count(field, &y, m)
        })
        .sum();
    let infinity = match shape {
        InfinityShape::DividesDegree => {
            mth_root_count(field, &field.embed(*curve.f.leading().unwrap()), m)
        }
        InfinityShape::OddHyperelliptic => 1,
    };
    Ok(affine + infinity)
}
