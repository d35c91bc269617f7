//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sqsym::fundamental::FundamentalIndex;
use sqsym::graph::{Coloring, DirectedEdge, DirectedSignedGraph, SignedEdge};
use sqsym::named::{build_named, random_directed_graph, NamedGraph};
use sqsym::perm::SignedPermutation;
use sqsym::poset::SignedPoset;
use sqsym::sign::Sign;
use sqsym::sqsym::{monomial_indices, MonomialIndex, SqsExpr, TPoly};

pub fn mi(k: u32, cols: &[(u32, u32)]) -> MonomialIndex {
    MonomialIndex::new(k, cols.to_vec()).unwrap()
}

pub fn expr(terms: &[(i64, MonomialIndex)]) -> SqsExpr {
    let mut e = SqsExpr::zero();
    for (c, m) in terms {
        e.add_integer(m.clone(), *c);
    }
    e
}

pub fn fi(s: &[usize], eps: &str) -> FundamentalIndex {
    FundamentalIndex::from_parts(s, eps).unwrap()
}

pub fn perm(w: &[i32]) -> SignedPermutation {
    SignedPermutation::new(w.to_vec()).unwrap()
}

pub fn example2() -> DirectedSignedGraph {
    build_named(&NamedGraph::Example2).unwrap()
}

/// The invariant of the two-vertex example, expanded by hand in the
/// `(a // b)` column notation.
pub fn example2_expected() -> TPoly {
    let mut x = TPoly::zero();
    x.add_at(3, &expr(&[(1, mi(0, &[(1, 0), (1, 0)]))]));
    x.add_at(
        2,
        &expr(&[(2, mi(0, &[(0, 1), (1, 0)])), (1, mi(0, &[(1, 0), (1, 0)])), (1, mi(1, &[(1, 0)]))]),
    );
    x.add_at(
        1,
        &expr(&[(2, mi(0, &[(1, 0), (0, 1)])), (1, mi(0, &[(0, 1), (0, 1)])), (1, mi(1, &[(0, 1)]))]),
    );
    x.add_at(0, &expr(&[(1, mi(0, &[(0, 1), (0, 1)]))]));
    x
}

/// Every directed edge available on `d` vertices.
pub fn all_directed_edges(d: usize) -> Vec<DirectedEdge> {
    let mut out = Vec::new();
    for u in 1..=d {
        out.push(DirectedEdge::introverted(u, u));
        out.push(DirectedEdge::extroverted(u, u));
        for v in u + 1..=d {
            out.push(DirectedEdge::arrow(u, v));
            out.push(DirectedEdge::arrow(v, u));
            out.push(DirectedEdge::introverted(u, v));
            out.push(DirectedEdge::extroverted(u, v));
        }
    }
    out
}

pub fn all_signed_edges(d: usize) -> Vec<SignedEdge> {
    let mut out = Vec::new();
    for u in 1..=d {
        out.push(SignedEdge::new(u, u, Sign::Minus));
        for v in u + 1..=d {
            out.push(SignedEdge::new(u, v, Sign::Plus));
            out.push(SignedEdge::new(u, v, Sign::Minus));
        }
    }
    out
}

pub fn subsets<T: Clone>(items: &[T], max: usize) -> Vec<Vec<T>> {
    fn rec<T: Clone>(items: &[T], max: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        out.push(cur.clone());
        if cur.len() == max {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i].clone());
            rec(items, max, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, max, 0, &mut Vec::new(), &mut out);
    out
}


pub fn seeded_directed_graph(d: usize, seed: u64) -> DirectedSignedGraph {
    random_directed_graph(d, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// An integer point of the region of `π` whose coordinates have distinct
/// absolute values: `|ξ_{π(m)}|` grows with `m` by the given positive gaps.
pub fn point_in_region(pi: &SignedPermutation, gaps: &[i64]) -> Coloring {
    let mut values = vec![0i64; pi.d()];
    let mut level = 0;
    for (m, &x) in pi.word().iter().enumerate() {
        level += gaps[m % gaps.len()].max(1);
        values[x.unsigned_abs() as usize - 1] = level * x.signum() as i64;
    }
    Coloring(values)
}

pub fn random_expr(rng: &mut ChaCha8Rng, max_degree: u32) -> SqsExpr {
    let mut e = SqsExpr::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let deg = rng.gen_range(0..=max_degree);
        let pool = monomial_indices(deg);
        let m = pool[rng.gen_range(0..pool.len())].clone();
        e.add_integer(m, rng.gen_range(-3..=3));
    }
    e
}

pub fn all_fundamental_indices(d: usize) -> Vec<FundamentalIndex> {
    let mut out = Vec::new();
    for smask in 0u32..(1 << d) {
        let strict: BTreeSet<usize> = (0..d).filter(|i| smask & (1 << i) != 0).collect();
        for emask in 0u32..(1 << d) {
            let signs = (0..d).map(|i| if emask & (1 << i) != 0 { Sign::Minus } else { Sign::Plus }).collect();
            out.push(FundamentalIndex::new(strict.clone(), signs).unwrap());
        }
    }
    out
}

/// Every signed poset on `±[d]`, one per distinct relation set.
pub fn all_signed_posets(d: usize) -> Vec<SignedPoset> {
    let elems: Vec<i32> = (1..=d as i32).flat_map(|x| [x, -x]).collect();
    let mut orbits = BTreeSet::new();
    for &x in &elems {
        for &y in &elems {
            if x != y {
                orbits.insert((x, y).min((-y, -x)));
            }
        }
    }
    let orbits: Vec<(i32, i32)> = orbits.into_iter().collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << orbits.len()) {
        let rel: Vec<(i32, i32)> = (0..orbits.len()).filter(|i| mask & (1 << i) != 0).map(|i| orbits[i]).collect();
        if let Ok(p) = SignedPoset::new(d, &rel) {
            if seen.insert(p.relations()) {
                out.push(p);
            }
        }
    }
    out
}
