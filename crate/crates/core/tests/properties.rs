//! Invariants and independent oracles.

mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use froblab::arith::{
    critical_value_poly, is_morse, is_root_of_unity_algebraic, jacobi, lemma_direct_check, lemma_structural_check,
    splits_completely_cyclotomic, splits_quadratic,
};
use froblab::cache::{Cache, CacheKey, CacheRecord};
use froblab::cartier::{hasse_witt_matrix, p_rank, CartierMatrix, FpMatrix};
use froblab::curve::{
    count_points, count_points_in, l_polynomial, l_polynomial_with_budget, newton_polygon, weil_verify, PointCount, SuperellipticCurve,
};
use froblab::finite_field::{is_irreducible, is_prime, mth_root_count, ExtField, PrimeField};
use froblab::poly::{
    cyclotomic, cyclotomic_table, discriminant, graeffe, parse_poly, resultant, resultant_field, roots_over_field,
    Poly, PolyRing,
};
use froblab::ring::{FiniteField, Integers, Ring};

fn z() -> PolyRing<Integers> {
    PolyRing::new(Integers)
}

/// Determinant of the Sylvester matrix by Gaussian elimination over `Q`.
fn sylvester_resultant(a: &Poly<BigInt>, b: &Poly<BigInt>) -> BigInt {
    let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a.coeffs().iter().rev().enumerate() {
            rows[i][i + j] = BigRational::from_integer(c.clone());
        }
    }
    for i in 0..m {
        for (j, c) in b.coeffs().iter().rev().enumerate() {
            rows[n + i][i + j] = BigRational::from_integer(c.clone());
        }
    }
    let mut det = BigRational::one();
    for col in 0..size {
        let Some(piv) = (col..size).find(|&r| !rows[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if piv != col {
            rows.swap(piv, col);
            det = -det;
        }
        let pv = rows[col][col].clone();
        det *= &pv;
        for r in col + 1..size {
            let factor = &rows[r][col] / &pv;
            if factor.is_zero() {
                continue;
            }
            for j in col..size {
                let t = &factor * &rows[col][j];
                rows[r][j] -= t;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

fn int_poly(max_deg: usize) -> impl Strategy<Value = Poly<BigInt>> {
    (prop::collection::vec(-9i64..=9, 0..=max_deg), 1i64..=5, any::<bool>()).prop_map(|(mut c, lc, neg)| {
        c.push(if neg { -lc } else { lc });
        Poly::from_i64s(&c)
    })
}

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13])
}

fn ext_field() -> impl Strategy<Value = ExtField> {
    prop::sample::select(vec![(3u64, 2u32), (3, 3), (5, 2), (7, 2), (2 * 5 + 1, 2), (3, 4)])
        .prop_map(|(p, k)| ExtField::new(PrimeField::new(p).unwrap(), k).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_matches_sylvester(a in int_poly(4), b in int_poly(4)) {
        prop_assert_eq!(resultant(&z(), &a, &b), sylvester_resultant(&a, &b));
    }

    #[test]
    fn resultant_symmetry_and_multiplicativity(a in int_poly(3), b in int_poly(3), c in int_poly(3)) {
        let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
        let ab = resultant(&z(), &a, &b);
        let ba = resultant(&z(), &b, &a);
        prop_assert_eq!(&ab, &if (m * n) % 2 == 1 { -ba } else { ba });
        let abc = resultant(&z(), &a, &z().mul(&b, &c));
        prop_assert_eq!(abc, ab * resultant(&z(), &a, &c));
    }

    #[test]
    fn resultant_reduces_mod_p(a in int_poly(4), b in int_poly(4), p in small_prime()) {
        let k = PrimeField::new(p).unwrap();
        let r = PolyRing::new(k);
        let (ap, bp) = (k.reduce_poly(&a), k.reduce_poly(&b));
        // degrees must survive reduction for the identity to hold
        prop_assume!(ap.degree() == a.degree() && bp.degree() == b.degree());
        prop_assert_eq!(resultant_field(&r, &ap, &bp), k.reduce_bigint(&resultant(&z(), &a, &b)));
        prop_assert_eq!(resultant(&r, &ap, &bp), resultant_field(&r, &ap, &bp));
    }

    #[test]
    fn discriminant_from_roots(roots in prop::collection::vec(-6i64..=6, 1..=5)) {
        let f = roots.iter().fold(Poly::from_i64s(&[1]), |acc, &r| z().mul(&acc, &Poly::from_i64s(&[-r, 1])));
        let mut expected = BigInt::one();
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                expected *= BigInt::from((roots[i] - roots[j]).pow(2));
            }
        }
        prop_assert_eq!(discriminant(&f), expected);
    }

    #[test]
    fn roots_match_construction(p in small_prime(), roots in prop::collection::vec(0u64..13, 0..=6), lc in 1u64..13) {
        let k = PrimeField::new(p).unwrap();
        let r = PolyRing::new(k);
        let roots: Vec<u64> = roots.into_iter().map(|x| x % p).collect();
        let lc = lc % p;
        prop_assume!(lc != 0 && !roots.is_empty());
        let f = roots.iter().fold(r.constant(lc), |acc, &x| r.mul(&acc, &r.from_coeffs(vec![k.neg(&x), 1])));
        let mut expected = roots.clone();
        expected.sort_unstable();
        prop_assert_eq!(roots_over_field(&r, &f), expected);
    }

    #[test]
    fn roots_match_brute_force(p in small_prime(), c in prop::collection::vec(0u64..13, 2..=7)) {
        let k = PrimeField::new(p).unwrap();
        let r = PolyRing::new(k);
        let f = r.from_coeffs(c.into_iter().map(|x| x % p).collect());
        prop_assume!(f.degree().unwrap_or(0) >= 1);
        let mut found = roots_over_field(&r, &f);
        found.dedup();
        let brute: Vec<u64> = (0..p).filter(|x| r.eval(&f, x) == 0).collect();
        prop_assert_eq!(found, brute);
    }

    #[test]
    fn extension_field_axioms(field in ext_field(), i in any::<u64>(), j in any::<u64>(), l in any::<u64>()) {
        let q = field.cardinality();
        let (a, b, c) = (field.element(i % q), field.element(j % q), field.element(l % q));
        prop_assert_eq!(field.mul(&a, &field.add(&b, &c)), field.add(&field.mul(&a, &b), &field.mul(&a, &c)));
        prop_assert_eq!(field.mul(&field.mul(&a, &b), &c), field.mul(&a, &field.mul(&b, &c)));
        prop_assert_eq!(field.pow(&a, q), a.clone());
        prop_assert_eq!(field.element(field.index_of(&a)), a.clone());
        if !field.is_zero(&a) {
            prop_assert!(field.is_one(&field.mul(&a, &froblab::ring::Field::inv(&field, &a).unwrap())));
        }
    }

    #[test]
    fn mth_roots_match_enumeration(field in ext_field(), m in 1u64..=12, i in any::<u64>()) {
        let q = field.cardinality();
        let c = field.element(i % q);
        let brute = field.enumerate().filter(|y| field.pow(y, m) == c).count() as u64;
        prop_assert_eq!(mth_root_count(&field, &c, m), brute);
    }

    #[test]
    fn prime_field_mth_roots(p in small_prime(), m in 1u64..=12, c in 0u64..13) {
        let k = PrimeField::new(p).unwrap();
        let c = c % p;
        prop_assert_eq!(mth_root_count(&k, &c, m), common::naive_root_count(p, c, m as u32));
    }

    #[test]
    fn counts_match_naive(
        p in small_prime(),
        shape in prop::sample::select(vec![(2u32, 3usize), (2, 4), (2, 5), (3, 3), (3, 6), (4, 4), (2, 6)]),
        c in prop::collection::vec(0u64..13, 7),
    ) {
        let (m, n) = shape;
        let k = PrimeField::new(p).unwrap();
        let mut coeffs: Vec<u64> = c[..n].iter().map(|x| x % p).collect();
        coeffs.push(1 + c[6] % (p - 1));
        let Ok(curve) = SuperellipticCurve::new(k, m, PolyRing::new(k).from_coeffs(coeffs.clone())) else {
            return Ok(());
        };
        prop_assert_eq!(count_points(&curve, 1).unwrap(), common::naive_count(p, m, &coeffs));
    }

    #[test]
    fn extension_counts_match_naive(
        p in prop::sample::select(vec![3u64, 5, 7]),
        m in prop::sample::select(vec![2u32, 3]),
        c in prop::collection::vec(0u64..7, 4),
    ) {
        let k = PrimeField::new(p).unwrap();
        let mut coeffs: Vec<u64> = c[..3].iter().map(|x| x % p).collect();
        coeffs.push(1 + c[3] % (p - 1));
        let Ok(curve) = SuperellipticCurve::new(k, m, PolyRing::new(k).from_coeffs(coeffs.clone())) else {
            return Ok(());
        };
        let ext = ExtField::new(k, 2).unwrap();
        let emb: Vec<_> = coeffs.iter().map(|&a| ext.embed(a)).collect();
        let eval = |x: &_| emb.iter().rev().fold(ext.zero(), |acc, a| ext.add(&ext.mul(&acc, x), a));
        let mut affine = 0u64;
        for x in ext.enumerate() {
            let v = eval(&x);
            affine += ext.enumerate().filter(|y| ext.pow(y, m as u64) == v).count() as u64;
        }
        let lc = ext.embed(*coeffs.last().unwrap());
        let infinity = ext.enumerate().filter(|u| ext.pow(u, m as u64) == lc).count() as u64;
        let infinity = if m == 2 { 1 } else { infinity };
        prop_assert_eq!(count_points_in(&curve, &ext).unwrap(), affine + infinity);
    }

    #[test]
    fn graeffe_identity(f in int_poly(6)) {
        let r = z();
        let n = f.degree().unwrap();
        let g = graeffe(&r, &f);
        let x2 = Poly::from_i64s(&[0, 0, 1]);
        let g_of_x2 = g.coeffs().iter().rev().fold(Poly::zero(), |acc, c| r.add(&r.mul(&acc, &x2), &r.constant(c.clone())));
        let f_neg = r.scale_variable(&f, &BigInt::from(-1));
        let mut rhs = r.mul(&f, &f_neg);
        if n % 2 == 1 {
            rhs = r.neg(&rhs);
        }
        prop_assert_eq!(g_of_x2, rhs);
    }

    #[test]
    fn parser_round_trip(f in int_poly(7)) {
        prop_assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn determinant_matches_leibniz(p in small_prime(), n in 1usize..=4, entries in prop::collection::vec(-20i64..20, 16)) {
        let k = PrimeField::new(p).unwrap();
        let rows: Vec<Vec<i64>> = (0..n).map(|i| entries[i * n..i * n + n].to_vec()).collect();
        let m = FpMatrix::from_rows(k, &rows).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total: i64 = 0;
        permutations(&mut perm, 0, &mut |pm| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| pm[i] > pm[j]).count();
            let term: i64 = (0..n).map(|i| rows[i][pm[i]]).product();
            total += if inversions % 2 == 0 { term } else { -term };
        });
        prop_assert_eq!(m.det().unwrap(), total.rem_euclid(p as i64) as u64);
        prop_assert_eq!(m.rank() == n, m.det().unwrap() != 0);
    }

    #[test]
    fn p_rank_is_basis_independent(p in prop::sample::select(vec![5u64, 7, 13]), n in 1usize..=4, a in prop::collection::vec(0i64..13, 16), s in prop::collection::vec(0i64..13, 16)) {
        let k = PrimeField::new(p).unwrap();
        let mk = |v: &[i64]| FpMatrix::from_rows(k, &(0..n).map(|i| v[i * n..i * n + n].to_vec()).collect::<Vec<_>>()).unwrap();
        let (a, s) = (mk(&a), mk(&s));
        let Some(s_inv) = s.inverse() else { return Ok(()) };
        let conj = s.mul(&a).unwrap().mul(&s_inv).unwrap();
        let r1 = p_rank(&CartierMatrix::from_blocks(k, vec![a]).unwrap());
        let r2 = p_rank(&CartierMatrix::from_blocks(k, vec![conj]).unwrap());
        prop_assert_eq!(r1, r2);
    }

    #[test]
    fn morse_critical_values_by_evaluation(p in prop::sample::select(vec![11u64, 13, 17, 19]), pts in prop::collection::vec(0u64..19, 2..=4), c0 in 0u64..19) {
        // f' = ∏ (x - r_i) with distinct r_i in F_p, so critical points are rational
        let k = PrimeField::new(p).unwrap();
        let r = PolyRing::new(k);
        let mut pts: Vec<u64> = pts.into_iter().map(|x| x % p).collect();
        pts.sort_unstable();
        pts.dedup();
        prop_assume!(pts.len() >= 2 && pts.len() + 1 < p as usize);
        let df = pts.iter().fold(r.one(), |acc, &x| r.mul(&acc, &r.from_coeffs(vec![k.neg(&x), 1])));
        let mut f = vec![c0 % p];
        for (i, c) in df.coeffs().iter().enumerate() {
            f.push(k.mul(c, &k.inv_u64(i as u64 + 1)));
        }
        let f = r.from_coeffs(f);
        prop_assert_eq!(r.derivative(&f), df);
        let mut values: Vec<u64> = pts.iter().map(|x| r.eval(&f, x)).collect();
        values.sort_unstable();
        let distinct = values.windows(2).all(|w| w[0] != w[1]);
        let report = is_morse(&k, &f).unwrap();
        prop_assert!(report.derivative_squarefree);
        prop_assert_eq!(report.critical_values_distinct, distinct);
        // c(y) vanishes exactly at the critical values
        let c = critical_value_poly(&k, &f);
        for v in &values {
            prop_assert_eq!(r.eval(&c, v), 0);
        }
    }

    #[test]
    fn cache_round_trip(p in small_prime(), m in 2u32..5, f in prop::collection::vec(0u64..13, 1..6), counts in prop::collection::vec(0u64..1000, 0..4), lp in any::<bool>(), hw in prop::option::of(any::<bool>()), rank in prop::option::of(0usize..8)) {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("c.jsonl"));
        let mut rec = CacheRecord::new(CacheKey { p, m, f });
        rec.counts = counts.into_iter().enumerate().map(|(i, n)| PointCount { k: i as u32 + 1, n }).collect();
        rec.lpoly = lp.then(|| vec![1, 2, p as i128]);
        rec.hasse_witt_ordinary = hw;
        rec.p_rank = rank;
        cache.append(&rec).unwrap();
        let loaded = cache.load().unwrap();
        prop_assert_eq!(loaded.warnings, 0);
        prop_assert_eq!(loaded.records, vec![rec]);
    }
}

trait InvU64 {
    fn inv_u64(&self, a: u64) -> u64;
}

impl InvU64 for PrimeField {
    fn inv_u64(&self, a: u64) -> u64 {
        froblab::ring::Field::inv(self, &(a % self.p())).unwrap()
    }
}

fn permutations(v: &mut Vec<usize>, start: usize, f: &mut impl FnMut(&[usize])) {
    if start == v.len() {
        f(v);
        return;
    }
    for i in start..v.len() {
        v.swap(start, i);
        permutations(v, start + 1, f);
        v.swap(start, i);
    }
}

/// Random curves with `g ≤ 3`, `p ≤ 17`, `p ≡ 1 (mod m)`.
fn cartier_comparable_curve() -> impl Strategy<Value = SuperellipticCurve> {
    let families = vec![
        (2u32, 3usize, vec![3u64, 5, 7, 11, 13, 17]),
        (2, 5, vec![3, 5, 7, 11, 13]),
        (2, 6, vec![5, 7, 11]),
        (2, 7, vec![3, 5, 7]),
        (3, 3, vec![7, 13]),
        (4, 4, vec![5, 13]),
    ];
    prop::sample::select(families)
        .prop_flat_map(|(m, n, primes)| (Just(m), Just(n), prop::sample::select(primes), prop::collection::vec(0u64..17, n + 1)))
        .prop_filter_map("squarefree model", |(m, n, p, c)| {
            let k = PrimeField::new(p).unwrap();
            let mut coeffs: Vec<u64> = c[..n].iter().map(|x| x % p).collect();
            coeffs.push(1 + c[n] % (p - 1));
            SuperellipticCurve::new(k, m, PolyRing::new(k).from_coeffs(coeffs)).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Two independent routes to ordinarity: Newton polygon of the
    /// L-polynomial from point counts, and the Hasse–Witt matrix.
    #[test]
    fn newton_matches_cartier(curve in cartier_comparable_curve()) {
        let l = l_polynomial_with_budget(&curve, 20_000).unwrap().lpoly;
        prop_assert!(weil_verify(&l).passed());
        let np = newton_polygon(&l);
        let hw = hasse_witt_matrix(&curve).unwrap();
        prop_assert_eq!(hw.genus(), curve.genus() as usize);
        prop_assert_eq!(np.p_rank(), p_rank(&hw));
        prop_assert_eq!(np.is_ordinary(), hw.det() != 0);
        let v = np.valuations();
        for i in 0..v.len() {
            prop_assert_eq!(v[i] + v[v.len() - 1 - i], num_rational::Ratio::from_integer(1));
        }
    }

    #[test]
    fn structural_ords_have_parity(curve in cartier_comparable_curve(), d_index in 0u32..4) {
        let l = l_polynomial_with_budget(&curve, 20_000).unwrap().lpoly;
        let d = 2 * (d_index % l.genus()) + 1;
        let v = lemma_structural_check(&l, d).unwrap();
        if v.ordinary {
            prop_assert!(v.structural_pass);
            for o in &v.valuation_range {
                prop_assert!(o.is_integer());
                prop_assert!((o.to_integer() + d as i64) % 2 == 0);
                prop_assert!(o.to_integer() % 2 != 0);
            }
        } else {
            prop_assert!(!v.structural_pass);
        }
    }
}

#[test]
fn hasse_witt_entry_is_a_p_mod_p() {
    for p in [5u64, 7, 11, 13] {
        let k = PrimeField::new(p).unwrap();
        for a in 0..p {
            for b in 0..p {
                // 4a^3 + 27b^2 ≠ 0
                if (4 * a * a * a + 27 * b * b) % p == 0 {
                    continue;
                }
                let curve = SuperellipticCurve::new(k, 2, PolyRing::new(k).from_coeffs(vec![b, a, 0, 1])).unwrap();
                let ap = p as i64 + 1 - count_points(&curve, 1).unwrap() as i64;
                let entry = hasse_witt_matrix(&curve).unwrap().blocks()[0].get(0, 0);
                assert_eq!(ap.rem_euclid(p as i64) as u64, entry, "p = {p}, a = {a}, b = {b}");
            }
        }
    }
}

#[test]
fn lemma_checks_agree_on_genus_two() {
    let mut direct3 = 0;
    for curve in common::genus_two_corpus().into_iter().filter(|c| c.p() <= 7) {
        let l = l_polynomial(&curve).unwrap();
        for d in [1, 3] {
            let v = lemma_direct_check(&l, d).unwrap();
            if v.ordinary {
                assert!(v.structural_pass, "{:?} d = {d}", l.coeffs());
                assert_eq!(v.direct_oracle, Some(true), "{:?} d = {d}", l.coeffs());
            }
            direct3 += (d == 3) as usize;
        }
    }
    assert!(direct3 > 0);
}

#[test]
fn supersingular_inputs_hit_roots_of_unity() {
    // y^2 = x^3 + x with p ≡ 3 mod 4, y^2 = x^3 + 1 with p ≡ 2 mod 3
    for (p, f) in [(7u64, [0i64, 1, 0, 1]), (11, [0, 1, 0, 1]), (5, [1, 0, 0, 1]), (11, [1, 0, 0, 1]), (17, [1, 0, 0, 1])] {
        let curve = SuperellipticCurve::from_integer_model(p, 2, &Poly::from_i64s(&f)).unwrap();
        let l = l_polynomial(&curve).unwrap();
        assert_eq!(l.coeffs(), &[1, 0, p as i128]);
        let v = lemma_direct_check(&l, 1).unwrap();
        assert!(!v.structural_pass);
        assert_eq!(v.direct_oracle, Some(false));
    }
}

#[test]
fn cyclotomic_products_and_degrees() {
    let table = cyclotomic_table(&(1..=60).collect::<Vec<_>>());
    let r = z();
    for n in 1..=60u64 {
        let prod = table
            .iter()
            .filter(|(d, _)| n % **d == 0)
            .fold(r.one(), |acc, (_, phi)| r.mul(&acc, phi));
        assert_eq!(prod, r.sub(&r.monomial(BigInt::one(), n as usize), &r.one()), "n = {n}");
        let phi_n = (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count();
        assert_eq!(table[&n].degree(), Some(phi_n));
    }
}

#[test]
fn perturbed_cyclotomics_are_not_detected() {
    let r = z();
    for n in 2..=10 {
        let perturbed = r.add(&cyclotomic(n), &r.from_i64(2));
        assert!(!is_root_of_unity_algebraic(&perturbed), "Φ_{n} + 2");
    }
    for n in 1..=30 {
        assert!(is_root_of_unity_algebraic(&cyclotomic(n)));
    }
}

#[test]
fn splitting_crt_and_brute_force() {
    for p in (5..10_000u64).filter(|&p| is_prime(p)) {
        let s24 = splits_completely_cyclotomic(p, 24).unwrap().splits;
        let s3 = splits_completely_cyclotomic(p, 3).unwrap().splits;
        let s8 = splits_completely_cyclotomic(p, 8).unwrap().splits;
        assert_eq!(s24, s3 && s8, "p = {p}");
    }
    for p in (3..500u64).filter(|&p| is_prime(p)) {
        for d in [-3i64, -4, -8, 5, 8] {
            if d.rem_euclid(p as i64) == 0 {
                continue;
            }
            let dm = d.rem_euclid(p as i64) as u64;
            let brute = (0..p).any(|x| x * x % p == dm);
            assert_eq!(splits_quadratic(p, d).unwrap().splits, brute, "D = {d}, p = {p}");
            // Euler's criterion as a third route
            let euler = common::pow_mod(dm, (p - 1) / 2, p) == 1;
            assert_eq!(jacobi(d, p) == 1, euler);
        }
    }
}

#[test]
fn irreducibility_of_low_degree_matches_root_search() {
    for p in [3u64, 5, 7] {
        let k = PrimeField::new(p).unwrap();
        let r = PolyRing::new(k);
        for deg in [2usize, 3] {
            for idx in 0..p.pow(deg as u32) {
                let mut c: Vec<u64> = (0..deg).map(|i| idx / p.pow(i as u32) % p).collect();
                c.push(1);
                let f = r.from_coeffs(c);
                let has_root = (0..p).any(|x| r.eval(&f, &x) == 0);
                assert_eq!(is_irreducible(&k, &f), !has_root, "{f}");
            }
        }
    }
}

#[test]
fn weil_bound_on_corpus_samples() {
    for curve in common::small_corpus().into_iter().step_by(97) {
        let l = l_polynomial(&curve).unwrap();
        let r = weil_verify(&l);
        assert!(r.passed(), "{:?}: {:?}", l.coeffs(), r);
        let a = -l.coeffs()[1];
        assert!(a * a <= 4 * curve.p() as i128, "Hasse bound");
    }
}

#[test]
fn big_integer_resultants_stay_exact() {
    // Res(x^n - 2, x^n - 3) = (-1)^n · ∏ over n-th roots: = (2 - 3)^n up to sign
    let r = z();
    for n in 1..=12usize {
        let a = r.sub(&r.monomial(BigInt::one(), n), &r.from_i64(2));
        let b = r.sub(&r.monomial(BigInt::one(), n), &r.from_i64(3));
        let res = resultant(&r, &a, &b);
        assert_eq!(res.abs(), BigInt::one());
        assert_eq!(res, sylvester_resultant(&a, &b));
    }
}
