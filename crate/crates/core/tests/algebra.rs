mod common;

use std::collections::BTreeSet;

use common::*;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sqsym::fundamental::{des_signed_perm, f_product, fexpr_to_monomial, minimal_indices, FundamentalIndex};
use sqsym::perm::descent_representative;
use sqsym::sign::Sign;
use sqsym::sqsym::{
    coproduct_expr, dimension, doubling_coproduct_expr, iterated_coproducts, monomial_indices, r_operator, tensor_product, truncate_expand, SqsExpr,
    TruncatedSeries,
};

fn indices_up_to(max_degree: u32) -> Vec<SqsExpr> {
    (0..=max_degree).flat_map(monomial_indices).map(SqsExpr::monomial).collect()
}

#[test]
fn product_is_commutative_on_small_degrees() {
    let pool = indices_up_to(3);
    for a in &pool {
        for b in &pool {
            assert_eq!(a * b, b * a, "{a} * {b}");
        }
    }
}

#[test]
fn product_is_associative_on_small_degrees() {
    let pool = indices_up_to(2);
    for a in &pool {
        for b in &pool {
            let ab = a * b;
            for c in &pool {
                if a.degree().unwrap() + b.degree().unwrap() + c.degree().unwrap() > 4 {
                    continue;
                }
                assert_eq!(&ab * c, a * &(b * c));
            }
        }
    }
}

#[test]
fn product_respects_grading() {
    let pool = indices_up_to(3);
    for a in &pool {
        for b in &pool {
            let total = a.degree().unwrap() + b.degree().unwrap();
            assert!((a * b).terms().keys().all(|m| m.degree() == total));
        }
    }
}

#[test]
fn monomial_index_counts_match_dimensions() {
    for d in 0..=8 {
        assert_eq!(BigUint::from(monomial_indices(d as u32).len()), dimension(d), "degree {d}");
    }
}

/// The unweighted coproduct is multiplicative as long as one factor has no
/// `x_0` part; with both it undercounts the splits of the merged power.
#[test]
fn coproduct_multiplicativity() {
    let pool = indices_up_to(2);
    for a in &pool {
        for b in &pool {
            let left = coproduct_expr(&(a * b));
            let right = tensor_product(&coproduct_expr(a), &coproduct_expr(b));
            let zero_free = |e: &SqsExpr| e.terms().keys().all(|m| m.k == 0);
            if zero_free(a) || zero_free(b) {
                assert_eq!(left, right, "{a} * {b}");
            }
        }
    }
    let m1 = SqsExpr::monomial(mi(1, &[]));
    let split = (mi(1, &[]), mi(1, &[]));
    assert_eq!(coproduct_expr(&(&m1 * &m1))[&split], BigRational::one());
    assert_eq!(tensor_product(&coproduct_expr(&m1), &coproduct_expr(&m1))[&split], BigRational::from_integer(2.into()));
}

#[test]
fn doubling_coproduct_is_multiplicative_and_coassociative() {
    let pool = indices_up_to(2);
    for a in &pool {
        for b in &pool {
            let left = doubling_coproduct_expr(&(a * b));
            let right = tensor_product(&doubling_coproduct_expr(a), &doubling_coproduct_expr(b));
            assert_eq!(left, right, "{a} * {b}");
        }
    }
    for m in (0..=3).flat_map(monomial_indices) {
        let (left, right) = iterated_coproducts(&m);
        assert_eq!(left, right, "{m}");
    }
}

proptest! {
    #[test]
    fn truncation_is_a_ring_map(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_expr(&mut rng, 2);
        let g = random_expr(&mut rng, 2);
        let n = (f.degree().unwrap_or(0) + g.degree().unwrap_or(0)) as usize;
        let lhs = truncate_expand(&(&f * &g), n);
        let rhs = truncate_expand(&f, n).product(&truncate_expand(&g, n)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn variable_deletion_does_not_depend_on_the_variable(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_expr(&mut rng, 3);
        let n = f.degree().unwrap_or(0) as usize + 2;
        let first = r_operator(&f, 1, n).unwrap();
        for i in 2..=n {
            prop_assert_eq!(&r_operator(&f, i, n).unwrap(), &first);
        }
    }

    #[test]
    fn fundamental_products_expand_correctly(
        d1 in 0usize..=3, d2 in 0usize..=2, s1 in 0u32..8, e1 in 0u32..8, s2 in 0u32..4, e2 in 0u32..4
    ) {
        prop_assume!(d1 + d2 <= 5);
        let build = |d: usize, s: u32, e: u32| {
            let strict: BTreeSet<usize> = (0..d).filter(|i| s >> i & 1 == 1).collect();
            let signs = (0..d).map(|i| if e >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect();
            FundamentalIndex::new(strict, signs).unwrap()
        };
        let (f1, f2) = (build(d1, s1, e1), build(d2, s2, e2));
        let product = f_product(&f1, &f2).unwrap();
        prop_assert_eq!(fexpr_to_monomial(&product.to_fexpr()), f1.to_monomial().product(&f2.to_monomial()));
    }
}

/// Direct enumeration of the chain's weakly increasing sequences with values
/// in `0..=n`, strict where required.
fn chain_partitions(fi: &FundamentalIndex, n: usize) -> TruncatedSeries {
    let d = fi.d();
    let mut series = TruncatedSeries::zero(n);
    let mut seq = vec![0usize; d];
    loop {
        let ok = (0..d).all(|j| {
            let prev = if j == 0 { 0 } else { seq[j - 1] };
            if fi.strict().contains(&j) {
                seq[j] > prev
            } else {
                seq[j] >= prev
            }
        });
        if ok {
            let mut exps = vec![0u32; 2 * n + 1];
            for (&v, &s) in seq.iter().zip(fi.signs()) {
                let slot = if s == Sign::Plus { n + v } else { n - v };
                exps[slot] += 1;
            }
            let c = series.terms.entry(exps).or_insert_with(|| BigRational::from_integer(0.into()));
            *c += BigRational::one();
        }
        let mut j = 0;
        while j < d && seq[j] == n {
            seq[j] = 0;
            j += 1;
        }
        if j == d {
            break;
        }
        seq[j] += 1;
    }
    series
}

#[test]
fn fundamental_expansion_matches_chain_enumeration() {
    for d in 0..=4 {
        for fi in all_fundamental_indices(d) {
            let n = d + 2;
            assert_eq!(truncate_expand(&fi.to_monomial(), n), chain_partitions(&fi, n), "{fi}");
        }
    }
}

#[test]
fn reduction_preserves_the_function() {
    for d in 0..=4 {
        for fi in all_fundamental_indices(d) {
            let reduced = fi.reduce_to_minimal();
            assert!(reduced.keys().all(FundamentalIndex::is_minimal), "{fi}");
            assert_eq!(fexpr_to_monomial(&reduced), fi.to_monomial(), "{fi}");
        }
    }
}

#[test]
fn minimal_indices_have_distinct_leading_monomials() {
    for d in 0..=5 {
        let leads: BTreeSet<Vec<u32>> = minimal_indices(d).iter().map(FundamentalIndex::leading_monomial).collect();
        assert_eq!(BigUint::from(leads.len()), dimension(d as usize), "degree {d}");
    }
}

#[test]
fn descent_representatives_realise_every_set() {
    for d in 0..=6usize {
        for mask in 0u32..1 << d {
            let s: BTreeSet<usize> = (0..d).filter(|i| mask >> i & 1 == 1).collect();
            let pi = descent_representative(&s, d).unwrap();
            assert_eq!(des_signed_perm(&pi), s);
        }
    }
}

#[test]
fn text_form_round_trips() {
    for d in 0..=3 {
        for fi in all_fundamental_indices(d) {
            assert_eq!(fi.to_string().parse::<FundamentalIndex>().unwrap(), fi);
        }
    }
    let fi = fi(&[1, 3], "+++-");
    assert_eq!(fi.to_string(), "F[d=4; S={1,3}; eps=+++-]");
    assert!("F[d=2; S={2}; eps=++]".parse::<FundamentalIndex>().is_err());
    assert!("F[d=2; S={}; eps=+]".parse::<FundamentalIndex>().is_err());
}

#[test]
fn monomial_rendering() {
    assert_eq!(SqsExpr::monomial(mi(1, &[(1, 0)])).to_string(), "M[1;(1,0)]");
    assert_eq!(SqsExpr::zero().to_string(), "0");
}
