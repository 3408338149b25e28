use conekit::linalg::{rank, SparseVec};
use conekit::poly::parse_poly;
use conekit::{Field, GroebnerBasis, Polynomial, PrimeField, Rationals, WeightedPolyRing};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::collections::HashMap;

fn ring_with(weights: &[u32]) -> WeightedPolyRing<PrimeField> {
    let names: Vec<String> = ["x", "y", "z", "w"][..weights.len()].iter().map(|s| s.to_string()).collect();
    WeightedPolyRing::new(names, weights.to_vec(), PrimeField::default()).unwrap()
}

fn build<F: Field>(ring: &WeightedPolyRing<F>, terms: &[(Vec<u16>, i64)]) -> Polynomial<F> {
    let f = ring.field();
    let terms = terms
        .iter()
        .map(|(e, c)| (ring.monomial(e[..ring.nvars()].to_vec()), f.from_i64(*c)))
        .collect();
    Polynomial::from_terms(f, terms)
}

/// Terms with exponents below 4 in up to four variables.
fn terms() -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u16..4, 4), -60i64..60), 0..8)
}

/// Homogeneous form of degree `d` in the standard graded ring.
fn form(ring: &WeightedPolyRing<PrimeField>, d: u64, coeffs: &[i64]) -> Polynomial<PrimeField> {
    let f = ring.field();
    let terms = ring
        .monomials_of_degree(d)
        .into_iter()
        .zip(coeffs.iter().cycle())
        .map(|(m, c)| (m, f.from_i64(*c)))
        .collect();
    Polynomial::from_terms(f, terms)
}

fn dense_index(ring: &WeightedPolyRing<PrimeField>, d: u64) -> HashMap<conekit::Monomial, usize> {
    ring.monomials_of_degree(d).into_iter().enumerate().map(|(i, m)| (m, i)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_then_parse_is_identity(t in terms(), w in prop::collection::vec(1u32..4, 3)) {
        let ring = ring_with(&w);
        let p = build(&ring, &t);
        let text = ring.format_poly(&p);
        prop_assert_eq!(parse_poly(&ring, &text).unwrap(), p);
    }

    #[test]
    fn print_then_parse_over_rationals(t in terms(), den in 1i64..9) {
        let ring = WeightedPolyRing::standard(&["a", "b", "c"], Rationals).unwrap();
        let q = Rationals;
        let p = build(&ring, &t).scale(&q.from_ratio(&BigInt::from(1), &BigInt::from(den)).unwrap(), &q);
        let text = ring.format_poly(&p);
        prop_assert_eq!(parse_poly(&ring, &text).unwrap(), p);
    }

    #[test]
    fn degree_is_additive(
        w in prop::collection::vec(1u32..4, 3),
        a in prop::collection::vec(-9i64..9, 1..5),
        b in prop::collection::vec(-9i64..9, 1..5),
        da in 0u64..6,
        db in 0u64..6,
    ) {
        let ring = ring_with(&w);
        let f = ring.field();
        let pick = |d: u64, c: &[i64]| {
            let mons = ring.monomials_of_degree(d);
            let terms = mons.into_iter().zip(c).map(|(m, x)| (m, f.from_i64(*x))).collect();
            Polynomial::from_terms(f, terms)
        };
        let (p, q) = (pick(da, &a), pick(db, &b));
        prop_assume!(!p.is_zero() && !q.is_zero());
        let pq = p.mul(&q, f);
        prop_assert!(pq.is_homogeneous());
        prop_assert_eq!(pq.weighted_degree(), Some(da + db));
    }

    #[test]
    fn monomial_counts_match_the_series(w in prop::collection::vec(1u32..5, 1..5)) {
        let ring = ring_with(&w);
        let counts = ring.monomial_counts(20);
        for d in 0..=20u64 {
            let mons = ring.monomials_of_degree(d);
            prop_assert_eq!(mons.len() as u64, counts[d as usize]);
            prop_assert!(mons.iter().all(|m| m.weighted_degree() == d));
        }
    }

    #[test]
    fn ideal_members_reduce_to_zero(
        g in prop::collection::vec(terms(), 1..4),
        mult in prop::collection::vec(terms(), 3),
        other in terms(),
    ) {
        let ring = ring_with(&[1, 1, 1]);
        let f = ring.field();
        let gens: Vec<_> = g.iter().map(|t| build(&ring, t)).collect();
        let gb = GroebnerBasis::compute(&ring, &gens, Default::default()).unwrap();
        let mut comb = Polynomial::zero();
        for (gi, m) in gens.iter().zip(&mult) {
            comb = comb.add(&gi.mul(&build(&ring, m), f), f);
        }
        prop_assert!(gb.contains(&comb).unwrap());
        for gi in &gens {
            prop_assert!(gb.contains(gi).unwrap());
        }
        let h = build(&ring, &other);
        let nf = gb.normal_form(&h).unwrap();
        prop_assert!(gb.contains(&h.sub(&nf, f)).unwrap());
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(nf.terms().iter().all(|(m, _)| gb.is_standard(m)));
        prop_assert_eq!(gb.normal_form(&h.add(&comb, f)).unwrap(), nf);
    }

    #[test]
    fn hilbert_function_matches_linear_algebra(
        degs in prop::collection::vec(1u64..4, 1..4),
        coeffs in prop::collection::vec(-20i64..20, 12),
        shift in 0usize..12,
    ) {
        let ring = ring_with(&[1, 1, 1]);
        let f = ring.field();
        let mut c = coeffs.clone();
        c.rotate_left(shift);
        let gens: Vec<_> = degs.iter().enumerate().map(|(i, &d)| {
            let mut ci = c.clone();
            ci.rotate_left(i * 5);
            form(&ring, d, &ci)
        }).filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let gb = GroebnerBasis::compute(&ring, &gens, Default::default()).unwrap();
        let hf = gb.hilbert_function(0, 7).unwrap();
        for d in 0..=7u64 {
            let idx = dense_index(&ring, d);
            let mut vecs: Vec<SparseVec<u32>> = Vec::new();
            for g in &gens {
                let dg = g.weighted_degree().unwrap();
                if dg > d {
                    continue;
                }
                for m in ring.monomials_of_degree(d - dg) {
                    let p = g.mul_term(&m, &f.one(), f);
                    let mut v: SparseVec<u32> = p.terms().iter().map(|(m, c)| (idx[m], *c)).collect();
                    v.sort_by_key(|e| e.0);
                    vecs.push(v);
                }
            }
            let expected = idx.len() - rank(f, idx.len(), &vecs);
            prop_assert_eq!(hf.get(d as i64), Some(expected as u64), "degree {}", d);
        }
    }
}
