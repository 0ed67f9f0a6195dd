use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

use super::LPolynomial;

/// `p`-adic Newton polygon of the Frobenius eigenvalues, normalized so that
/// the slopes are `v_q(α_i) ∈ [0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    valuations: Vec<Ratio<i64>>,
}

impl NewtonPolygon {
    /// From slopes given directly; they are sorted ascending.
    pub fn from_valuations(mut valuations: Vec<Ratio<i64>>) -> Self {
        valuations.sort();
        Self { valuations }
    }

    /// `v_q(α_i)` for all `2g` eigenvalues, ascending.
    pub fn valuations(&self) -> &[Ratio<i64>] {
        &self.valuations
    }

    /// Number of slope-0 eigenvalues.
    pub fn p_rank(&self) -> usize {
        self.valuations.iter().filter(|v| v.is_zero()).count()
    }

    /// Slopes are exactly `g` zeros and `g` ones.
    pub fn is_ordinary(&self) -> bool {
        let n = self.valuations.len();
        let g = n / 2;
        let zeros = self.p_rank();
        let ones = self.valuations.iter().filter(|v| **v == Ratio::from_integer(1)).count();
        n % 2 == 0 && zeros == g && ones == g
    }
}

fn valuation(c: &BigInt, p: u64) -> Option<i64> {
    if c.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut c = c.clone();
    let mut v = 0;
    loop {
        let (q, r) = c.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        c = q;
        v += 1;
    }
}

/// Lower convex hull of `(j, v_p(c_j)/k)` for `∏(T - α_i) = Σ c_j T^j`.
/// A segment of slope `s` and length `ℓ` contributes `ℓ` eigenvalues of
/// valuation `-s`.
pub fn newton_polygon(l: &LPolynomial) -> NewtonPolygon {
    let (p, k) = l.characteristic();
    let eigen = l.eigen_poly();
    let points: Vec<(i64, Ratio<i64>)> = eigen
        .coeffs()
        .iter()
        .enumerate()
        .filter_map(|(j, c)| valuation(c, p).map(|v| (j as i64, Ratio::new(v, k as i64))))
        .collect();
    let mut hull: Vec<(i64, Ratio<i64>)> = Vec::new();
    for pt in points {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            let cross = (y2 - y1) * (pt.0 - x1) - (pt.1 - y1) * (x2 - x1);
            if cross >= Ratio::zero() {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut valuations = Vec::new();
    for w in hull.windows(2) {
        let len = w[1].0 - w[0].0;
        let slope = (w[1].1 - w[0].1) / len;
        valuations.extend(std::iter::repeat_n(-slope, len as usize));
    }
    NewtonPolygon::from_valuations(valuations)
}

/// Ordinarity from the L-polynomial: the slopes are `g` zeros and `g` ones.
pub fn is_ordinary_newton(l: &LPolynomial) -> bool {
    newton_polygon(l).is_ordinary()
}
