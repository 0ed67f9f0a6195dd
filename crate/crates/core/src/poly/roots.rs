use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Poly, PolyRing};
use crate::ring::{FiniteField, Ring};

/// Seed of the equal-degree splitting generator. Fixed so that root lists
/// (and any tie-breaking that depends on them) are reproducible.
pub const ROOT_SPLITTING_SEED: u64 = 0x5eed_f00d_2424;

/// All roots of `f` in `F_q`, with multiplicity, in base-`p` index order.
///
/// `g = gcd(f, x^q - x)` isolates the distinct roots; it is then split into
/// linear factors by Cantor-Zassenhaus (odd `q`), and each root's
/// multiplicity is read off by repeated division.
pub fn roots_over_field<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> Vec<F::Elem> {
    let field = ring.base();
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let f = ring.monic(f);
    let x = ring.x();
    // x^q mod f as k successive p-th powers
    let mut frob = ring.rem(&x, &f);
    for _ in 0..field.degree() {
        frob = ring.pow_mod(&frob, field.characteristic(), &f);
    }
    let g = ring.gcd(&f, &ring.sub(&frob, &x));

    let mut rng = ChaCha8Rng::seed_from_u64(ROOT_SPLITTING_SEED);
    let mut distinct = Vec::new();
    split_linear(ring, &g, &mut rng, &mut distinct);

    let mut out = Vec::new();
    for r in distinct {
        let lin = ring.from_coeffs(vec![field.neg(&r), field.one()]);
        let mut rest = f.clone();
        loop {
            let (q, rem) = ring.divmod(&rest, &lin).expect("nonzero");
            if !rem.is_zero() {
                break;
            }
            out.push(r.clone());
            rest = q;
        }
    }
    out.sort_by_key(|r| field.index_of(r));
    out
}

/// `g` monic, squarefree, a product of distinct linear factors.
fn split_linear<F: FiniteField>(
    ring: &PolyRing<F>,
    g: &Poly<F::Elem>,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<F::Elem>,
) {
    let field = ring.base();
    let Some(n) = g.degree() else { return };
    match n {
        0 => {}
        1 => out.push(field.neg(&g.coeffs()[0])),
        _ => {
            let q = field.cardinality();
            let half = (q - 1) / 2;
            loop {
                let a = ring.from_coeffs(
                    (0..n).map(|_| field.element(rng.gen_range(0..q))).collect(),
                );
                if a.degree().unwrap_or(0) == 0 {
                    continue;
                }
                let b = ring.sub(&ring.pow_mod(&a, half, g), &ring.one());
                let d = ring.gcd(g, &b);
                let dd = d.degree().unwrap_or(0);
                if dd > 0 && dd < n {
                    let (other, _) = ring.divmod(g, &d).expect("nonzero");
                    split_linear(ring, &d, rng, out);
                    split_linear(ring, &other, rng, out);
                    return;
                }
            }
        }
    }
}
