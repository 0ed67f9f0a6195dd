use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

use super::{is_root_of_unity_algebraic, ArithError};
use crate::curve::{newton_polygon, LPolynomial};
use crate::poly::{graeffe, resultant, Poly, PolyRing};
use crate::ring::{Integers, Ring};

/// Outcome of the valuation lemma checks for one L-polynomial and odd `d`:
/// is `q^(-d) b^2` a root of unity for some product `b` of `d` eigenvalues?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaVerdict {
    pub lpoly: LPolynomial,
    pub d: u32,
    pub ordinary: bool,
    /// Every achieved `ord_q(q^(-d) b^2) = -d + 2·Σ v_q(α_i)`, ascending.
    pub valuation_range: Vec<Ratio<i64>>,
    /// `ordinary` and every achieved value is an odd integer. Abstains
    /// (false) on non-ordinary input without claiming the conclusion fails.
    pub structural_pass: bool,
    /// `Some(true)` when no `q^(-d) b^2` is a root of unity, by the
    /// resultant oracle; `None` when not computed.
    pub direct_oracle: Option<bool>,
}

fn check_d(l: &LPolynomial, d: u32) -> Result<(), ArithError> {
    if d % 2 == 0 {
        return Err(ArithError::EvenD(d));
    }
    let max = 2 * l.genus();
    if d > max {
        return Err(ArithError::DOutOfRange { d, max });
    }
    if !l.satisfies_functional_equation() {
        return Err(ArithError::FunctionalEquation);
    }
    Ok(())
}

/// Certificate from the Newton polygon: for ordinary input every `d`-subset
/// has `ord = -d + 2s` with `s` an integer, hence odd and nonzero, so no
/// `q^(-d) b^2` is a root of unity.
pub fn lemma_structural_check(l: &LPolynomial, d: u32) -> Result<LemmaVerdict, ArithError> {
    check_d(l, d)?;
    let np = newton_polygon(l);
    // reachable[j] = sums of j slopes
    let mut reachable: Vec<BTreeSet<Ratio<i64>>> = vec![BTreeSet::new(); d as usize + 1];
    reachable[0].insert(Ratio::zero());
    for v in np.valuations() {
        for j in (1..=d as usize).rev() {
            let next: Vec<_> = reachable[j - 1].iter().map(|s| s + v).collect();
            reachable[j].extend(next);
        }
    }
    let d_r = Ratio::from_integer(d as i64);
    let valuation_range: Vec<Ratio<i64>> = reachable[d as usize]
        .iter()
        .map(|s| -d_r + s * 2)
        .collect();
    let ordinary = np.is_ordinary();
    let all_odd = valuation_range
        .iter()
        .all(|o| o.is_integer() && o.to_integer() % 2 != 0);
    Ok(LemmaVerdict {
        lpoly: l.clone(),
        d,
        ordinary,
        valuation_range,
        structural_pass: ordinary && all_odd,
        direct_oracle: None,
    })
}

/// `X(y)` and `Y` as polynomials in `y` over `Z[x]`, `Res_y(X(y), y^deg Y · Y(x/y))`:
/// roots are the products `αβ`.
fn root_product(x: &Poly<BigInt>, y: &Poly<BigInt>) -> Poly<BigInt> {
    let zx = PolyRing::new(Integers);
    let zxy = PolyRing::new(zx.clone());
    let a = zxy.from_coeffs(x.coeffs().iter().map(|c| zx.constant(c.clone())).collect());
    let dy = y.degree().expect("nonzero");
    // coefficient of y^i is Y_(dy-i) x^(dy-i)
    let b = zxy.from_coeffs(
        (0..=dy)
            .map(|i| zx.monomial(y.coeffs()[dy - i].clone(), dy - i))
            .collect(),
    );
    resultant(&zxy, &a, &b)
}

/// `Res_y(A(y), x - y^3)`: roots are the cubes `α^3`.
fn root_cube(a: &Poly<BigInt>) -> Poly<BigInt> {
    let zx = PolyRing::new(Integers);
    let zxy = PolyRing::new(zx.clone());
    let ay = zxy.from_coeffs(a.coeffs().iter().map(|c| zx.constant(c.clone())).collect());
    let b = zxy.from_coeffs(vec![zx.x(), zx.zero(), zx.zero(), zx.constant(-BigInt::one())]);
    resultant(&zxy, &ay, &b)
}

/// Integer polynomial whose roots are the products of `d` distinct
/// eigenvalues (each subset possibly repeated).
///
/// `d = 1` gives the eigenvalue polynomial. For `g = 2`, `d = 3`: the
/// ordered pair products `α_iα_j` are `Res_y(A(y), y^4 A(x/y))`; removing
/// the squares leaves `i ≠ j`; multiplying by `A` again and removing the
/// `α_i^2 α_k` terms leaves every 3-subset six times.
pub fn subset_product_poly(l: &LPolynomial, d: u32) -> Result<Poly<BigInt>, ArithError> {
    check_d(l, d)?;
    let g = l.genus();
    let z = PolyRing::new(Integers);
    let a = l.eigen_poly();
    match (g, d) {
        (_, 1) => Ok(a),
        (2, 3) => {
            let exact = |num: &Poly<BigInt>, den: &Poly<BigInt>| {
                z.div_exact_int(num, den).expect("product-of-roots division is exact")
            };
            let squares = graeffe(&z, &a);
            let pairs = exact(&root_product(&a, &a), &squares);
            let with_repeats = root_product(&pairs, &a);
            // α_i^2 α_k with i ≠ k
            let overlap = exact(&root_product(&squares, &a), &root_cube(&a));
            Ok(exact(&with_repeats, &z.mul(&overlap, &overlap)))
        }
        _ => Err(ArithError::BudgetExceeded { g, d }),
    }
}

/// Primitive integer polynomial whose roots are the `q^(-d) b^2`.
pub fn lemma_oracle_polynomial(l: &LPolynomial, d: u32) -> Result<Poly<BigInt>, ArithError> {
    let z = PolyRing::new(Integers);
    let subset = subset_product_poly(l, d)?;
    let squared = graeffe(&z, &subset);
    let qd = BigInt::from(l.q()).pow(d);
    Ok(z.primitive_part(&z.scale_variable(&squared, &qd)))
}

/// Direct check by the root-of-unity oracle (`g ≤ 2`, `d ≤ 3`), alongside
/// the structural certificate.
pub fn lemma_direct_check(l: &LPolynomial, d: u32) -> Result<LemmaVerdict, ArithError> {
    let oracle = lemma_oracle_polynomial(l, d)?;
    let mut verdict = lemma_structural_check(l, d)?;
    verdict.direct_oracle = Some(!is_root_of_unity_algebraic(&oracle));
    Ok(verdict)
}

/// `r = 2·dim / [E:Q]`, the number of eigenvalues in each product.
pub fn module_rank(dim: u32, field_degree: u32) -> Result<u32, ArithError> {
    let twice_dim = 2 * dim;
    if field_degree == 0 || twice_dim % field_degree != 0 {
        return Err(ArithError::NonIntegralRank {
            twice_dim,
            degree: field_degree,
        });
    }
    Ok(twice_dim / field_degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i128], q: u64) -> LPolynomial {
        LPolynomial::new(c.to_vec(), q).unwrap()
    }

    fn r(n: i64) -> Ratio<i64> {
        Ratio::from_integer(n)
    }

    #[test]
    fn structural_examples() {
        let v = lemma_structural_check(&lp(&[1, 2, 5], 5), 1).unwrap();
        assert!(v.structural_pass);
        assert_eq!(v.valuation_range, vec![r(-1), r(1)]);
        let v = lemma_structural_check(&lp(&[1, 1, 7], 7), 1).unwrap();
        assert!(v.structural_pass);
        assert_eq!(v.valuation_range, vec![r(-1), r(1)]);
        let v = lemma_structural_check(&lp(&[1, 0, 5], 5), 1).unwrap();
        assert!(!v.structural_pass);
        assert_eq!(v.valuation_range, vec![r(0)]);
    }

    #[test]
    fn hypothesis_errors() {
        let l = lp(&[1, 2, 5], 5);
        assert_eq!(lemma_structural_check(&l, 2), Err(ArithError::EvenD(2)));
        assert_eq!(lemma_structural_check(&l, 3), Err(ArithError::DOutOfRange { d: 3, max: 2 }));
        let bad = LPolynomial::from_raw(vec![1, 1, 2], 5).unwrap();
        assert_eq!(lemma_structural_check(&bad, 1), Err(ArithError::FunctionalEquation));
        let g3 = lp(&[1, 0, 0, 0, 0, 0, 125], 5);
        assert_eq!(lemma_direct_check(&g3, 3), Err(ArithError::BudgetExceeded { g: 3, d: 3 }));
    }

    #[test]
    fn oracle_chain() {
        assert_eq!(lemma_oracle_polynomial(&lp(&[1, 2, 5], 5), 1).unwrap(), Poly::from_i64s(&[5, 6, 5]));
        assert_eq!(lemma_oracle_polynomial(&lp(&[1, 1, 7], 7), 1).unwrap(), Poly::from_i64s(&[7, 13, 7]));
        // α^2 = -5: both roots become -1
        assert_eq!(lemma_oracle_polynomial(&lp(&[1, 0, 5], 5), 1).unwrap(), Poly::from_i64s(&[1, 2, 1]));
        assert_eq!(lemma_direct_check(&lp(&[1, 2, 5], 5), 1).unwrap().direct_oracle, Some(true));
        assert_eq!(lemma_direct_check(&lp(&[1, 0, 5], 5), 1).unwrap().direct_oracle, Some(false));
    }

    #[test]
    fn triple_products_genus_two() {
        // (1 + 2T + 5T^2)(1 + T + 5T^2): α from both factors, q = 5
        let l = lp(&[1, 3, 12, 15, 25], 5);
        let s = subset_product_poly(&l, 3).unwrap();
        assert_eq!(s.degree(), Some(24));
        // α_1α_2α_3α_4 = q^2, so the triple products are 25/α_j
        let z = PolyRing::new(Integers);
        let a = l.eigen_poly();
        // x^4 A(25/x) has exactly these roots
        let inv = z.from_coeffs(
            a.coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| c * BigInt::from(25).pow(j as u32))
                .rev()
                .collect(),
        );
        let inv = z.primitive_part(&inv);
        assert_eq!(z.squarefree_part(&s), z.squarefree_part(&inv));
        let v = lemma_direct_check(&l, 3).unwrap();
        assert!(v.structural_pass);
        assert_eq!(v.direct_oracle, Some(true));
    }

    #[test]
    fn module_rank_values() {
        assert_eq!(module_rank(7, 2), Ok(7));
        assert_eq!(module_rank(1, 2), Ok(1));
        assert!(module_rank(3, 4).is_err());
    }
}
