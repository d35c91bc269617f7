//! The chromatic invariant `X(x; t)` of a directed signed graph, computed
//! three ways, and the permutation statistics behind the fundamental
//! expansion.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::Result;
use crate::fundamental::FundamentalIndex;
use crate::graph::{DirectedSignedGraph, SymmetricGraph};
use crate::limits::Limits;
use crate::perm::{all_signed_permutations, SignedPermutation};
use crate::poset::{poset_from_orientation, Labeling};
use crate::sqsym::{MonomialIndex, TPoly};
use serde::{Deserialize, Serialize};

/// Direct enumeration of canonical proper colorings, each weighted by
/// `t^{asc}`.
pub fn chromatic_oracle(g: &DirectedSignedGraph, limits: &Limits) -> Result<TPoly> {
    limits.check_vertices("coloring enumeration", g.d())?;
    let d = g.d();
    // edges checked once their later endpoint is colored:
    // (other endpoint, sign, tau at this vertex, tau at other)
    let mut by_vertex: Vec<Vec<(usize, i64, i64, i64)>> = vec![Vec::new(); d + 1];
    for e in g.edges() {
        by_vertex[e.v].push((e.u, e.sign.to_i64(), e.tau_v.to_i64(), e.tau_u.to_i64()));
    }
    let mut counts: HashMap<(u32, MonomialIndex), i64> = HashMap::new();
    let mut kappa = vec![0i64; d + 1];
    coloring_rec(d, 1, 0, &by_vertex, &mut kappa, &mut counts);
    Ok(TPoly::from_counts(counts))
}

fn coloring_rec(
    d: usize,
    v: usize,
    asc: u32,
    by_vertex: &[Vec<(usize, i64, i64, i64)>],
    kappa: &mut Vec<i64>,
    counts: &mut HashMap<(u32, MonomialIndex), i64>,
) {
    if v > d {
        if let Some(m) = MonomialIndex::of_canonical_values(&kappa[1..]) {
            *counts.entry((asc, m)).or_insert(0) += 1;
        }
        return;
    }
    'value: for value in -(d as i64)..=d as i64 {
        kappa[v] = value;
        let mut extra = 0;
        for &(u, sign, tau_here, tau_there) in &by_vertex[v] {
            if kappa[u] == sign * value {
                continue 'value;
            }
            if tau_here * value + tau_there * kappa[u] > 0 {
                extra += 1;
            }
        }
        coloring_rec(d, v + 1, asc + extra, by_vertex, kappa, counts);
    }
    kappa[v] = 0;
}

/// Sum over acyclic orientations `τ'` of `t^{#edges where τ' ≠ τ}` times the
/// strict partition enumerator of the orientation's poset.
pub fn chromatic_chambers(g: &DirectedSignedGraph, limits: &Limits) -> Result<TPoly> {
    let mut out = TPoly::zero();
    for orientation in g.underlying().acyclic_orientations(limits)? {
        let p = poset_from_orientation(&orientation)?;
        let omega = Labeling::dual_natural(&p, limits)?;
        let gamma = p.gamma_enumerator(&omega, limits)?;
        let a = orientation_disagreements(g, &orientation);
        out.add_at(a as u32, &gamma);
    }
    Ok(out)
}

/// `g` may carry two oppositely oriented copies of one signed edge; each
/// copy that differs from the chamber orientation counts once.
fn orientation_disagreements(g: &DirectedSignedGraph, orientation: &DirectedSignedGraph) -> usize {
    g.disagreements(orientation)
}

/// `rank(m)`: the length of the longest subword of `π(-d) … π(-1) π(1) … π(d)`
/// ending at `m` whose consecutive letters are adjacent in `sg`. Keys are
/// letters of `±[d]`.
pub fn sigma_rank(sg: &SymmetricGraph, pi: &SignedPermutation) -> BTreeMap<i32, usize> {
    let word = pi.full_word();
    let mut rank = BTreeMap::new();
    for (p, &x) in word.iter().enumerate() {
        let best = word[..p]
            .iter()
            .filter(|&&y| sg.adjacent(x, y))
            .map(|y| rank[y])
            .max()
            .unwrap_or(0);
        rank.insert(x, best + 1);
    }
    rank
}

/// Descent set driven by ranks. At `0` the ranks of `π(-1)` and `π(1)` are
/// compared and ties count as a descent exactly when `π(1) > 0`.
pub fn des_sigma(g: &DirectedSignedGraph, pi: &SignedPermutation) -> BTreeSet<usize> {
    let rank = sigma_rank(&g.underlying().double_cover(), pi);
    des_from_rank(&rank, pi)
}

fn des_from_rank(rank: &BTreeMap<i32, usize>, pi: &SignedPermutation) -> BTreeSet<usize> {
    des_by_key(pi, |x| rank[&x] as i64)
}

/// `rank(m) - rank(-m)`. Strictly increasing along the poset of the region of
/// `π` and odd under negation, so sorting by it yields a signed labeling.
fn balanced_key(rank: &BTreeMap<i32, usize>, m: i32) -> i64 {
    rank[&m] as i64 - rank[&-m] as i64
}

fn des_by_key(pi: &SignedPermutation, key: impl Fn(i32) -> i64) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    if pi.d() == 0 {
        return out;
    }
    let (k_before, k_first) = (key(pi.at(-1)), key(pi.at(1)));
    if k_before < k_first || (k_before == k_first && pi.at(1) > 0) {
        out.insert(0);
    }
    for i in 1..pi.d() as i32 {
        let (a, b) = (pi.at(i), pi.at(i + 1));
        if key(a) < key(b) || (key(a) == key(b) && a < b) {
            out.insert(i as usize);
        }
    }
    out
}

/// Descent set driven by [`balanced_key`] instead of the raw rank. Agrees
/// with [`des_sigma`] whenever the raw ranks already order `±[d]` in a way
/// compatible with negation, e.g. on connected two-vertex graphs.
pub fn des_sigma_balanced(g: &DirectedSignedGraph, pi: &SignedPermutation) -> BTreeSet<usize> {
    let rank = sigma_rank(&g.underlying().double_cover(), pi);
    des_by_key(pi, |x| balanced_key(&rank, x))
}

/// Number of edges on which `g` disagrees with the orientation of the
/// region of `π`.
pub fn inv_count(g: &DirectedSignedGraph, pi: &SignedPermutation) -> Result<usize> {
    let region = g.underlying().region_orientation(pi)?;
    Ok(g.disagreements(&region))
}

/// How ties are resolved when reading a descent set off the ranks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DescentRule {
    /// Compare `rank(m) - rank(-m)`; always yields the invariant.
    #[default]
    Balanced,
    /// Compare raw ranks. Kept for comparison: it can break the symmetry
    /// `m -> -m` when non-adjacent letters share a rank.
    Rank,
}

/// `(t-exponent, F index)` for every signed permutation, in permutation order.
pub fn theorem_terms(g: &DirectedSignedGraph, limits: &Limits) -> Result<Vec<(u32, FundamentalIndex)>> {
    theorem_terms_with(g, DescentRule::Balanced, limits)
}

pub fn theorem_terms_with(
    g: &DirectedSignedGraph,
    rule: DescentRule,
    limits: &Limits,
) -> Result<Vec<(u32, FundamentalIndex)>> {
    limits.check_vertices("signed permutation enumeration", g.d())?;
    let under = g.underlying();
    let cover = under.double_cover();
    all_signed_permutations(g.d())
        .into_iter()
        .map(|pi| {
            let region = under.region_orientation(&pi)?;
            let inv = g.disagreements(&region) as u32;
            let rank = sigma_rank(&cover, &pi);
            let des = match rule {
                DescentRule::Balanced => des_by_key(&pi, |x| balanced_key(&rank, x)),
                DescentRule::Rank => des_from_rank(&rank, &pi),
            };
            Ok((inv, FundamentalIndex::new(des, pi.signs())?))
        })
        .collect()
}

/// `Σ_π t^{inv(π)} F^{sgn π}_{DES(π)}`, expanded into monomials.
pub fn chromatic_theorem(g: &DirectedSignedGraph, limits: &Limits) -> Result<TPoly> {
    chromatic_theorem_with(g, DescentRule::Balanced, limits)
}

pub fn chromatic_theorem_with(g: &DirectedSignedGraph, rule: DescentRule, limits: &Limits) -> Result<TPoly> {
    let mut grouped: BTreeMap<(u32, FundamentalIndex), i64> = BTreeMap::new();
    for term in theorem_terms_with(g, rule, limits)? {
        *grouped.entry(term).or_insert(0) += 1;
    }
    let mut out = TPoly::zero();
    for ((t, fi), mult) in grouped {
        let expansion = fi.to_monomial().scale(&BigRational::from_integer(mult.into()));
        out.add_at(t, &expansion);
    }
    Ok(out)
}

/// Evaluates at `x_i = 1` for `|i| <= m` (else 0) and at `t = t_value`;
/// `M_{k,λ}` becomes `C(m, r)` with `r` columns.
pub fn specialize_count(x: &TPoly, m: u64, t_value: &BigRational) -> BigRational {
    let mut total = BigRational::zero();
    for (&t, e) in x.coeffs() {
        let tp: BigRational = if t == 0 { BigRational::one() } else { t_value.clone().pow(t) };
        for (idx, c) in e.terms() {
            let r = idx.lam.len() as u64;
            let ways = if r > m { BigInt::zero() } else { binomial(BigInt::from(m), BigInt::from(r)) };
            total += c * &tp * BigRational::from_integer(ways);
        }
    }
    total
}

pub fn is_invariant_symmetric(x: &TPoly) -> bool {
    x.is_signed_symmetric()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DirectedEdge;
    use crate::named::{build_named, NamedGraph};
    use crate::sqsym::SqsExpr;

    fn mi(k: u32, cols: &[(u32, u32)]) -> MonomialIndex {
        MonomialIndex::new(k, cols.to_vec()).unwrap()
    }

    fn loop_graph() -> DirectedSignedGraph {
        DirectedSignedGraph::new(1, vec![DirectedEdge::introverted(1, 1)]).unwrap()
    }

    fn loop_invariant() -> TPoly {
        let mut x = TPoly::zero();
        x.add_at(1, &SqsExpr::monomial(mi(0, &[(1, 0)])));
        x.add_at(0, &SqsExpr::monomial(mi(0, &[(0, 1)])));
        x
    }

    #[test]
    fn single_vertex() {
        let lim = Limits::default();
        let g = DirectedSignedGraph::edgeless(1);
        let mut free = SqsExpr::zero();
        for m in [mi(1, &[]), mi(0, &[(1, 0)]), mi(0, &[(0, 1)])] {
            free.add_integer(m, 1);
        }
        let x = TPoly::constant(free);
        assert_eq!(chromatic_oracle(&g, &lim).unwrap(), x);
        assert_eq!(chromatic_chambers(&g, &lim).unwrap(), x);
        assert_eq!(chromatic_theorem(&g, &lim).unwrap(), x);
        assert!(is_invariant_symmetric(&x));
    }

    #[test]
    fn introverted_loop() {
        let lim = Limits::default();
        let g = loop_graph();
        assert_eq!(chromatic_oracle(&g, &lim).unwrap(), loop_invariant());
        assert_eq!(chromatic_chambers(&g, &lim).unwrap(), loop_invariant());
        assert_eq!(chromatic_theorem(&g, &lim).unwrap(), loop_invariant());
        let one = SignedPermutation::new(vec![1]).unwrap();
        let minus = SignedPermutation::new(vec![-1]).unwrap();
        assert_eq!(des_sigma(&g, &one), BTreeSet::from([0]));
        assert_eq!(inv_count(&g, &one).unwrap(), 1);
        assert_eq!(inv_count(&g, &minus).unwrap(), 0);
        let terms = theorem_terms(&g, &lim).unwrap();
        assert!(terms.contains(&(1, FundamentalIndex::from_parts(&[0], "+").unwrap())));
        assert!(terms.contains(&(0, FundamentalIndex::from_parts(&[0], "-").unwrap())));
        let six = specialize_count(&loop_invariant(), 3, &BigRational::one());
        assert_eq!(six, BigRational::from_integer(6.into()));
    }

    #[test]
    fn ranks_on_example() {
        let g = build_named(&NamedGraph::Example2).unwrap();
        let cover = g.underlying().double_cover();
        let pi = SignedPermutation::new(vec![2, 1]).unwrap();
        let rank = sigma_rank(&cover, &pi);
        let along: Vec<usize> = pi.full_word().iter().map(|x| rank[x]).collect();
        assert_eq!(along, vec![1, 2, 2, 3]);
        let edgeless = DirectedSignedGraph::edgeless(3).underlying().double_cover();
        let pi = SignedPermutation::new(vec![3, -1, 2]).unwrap();
        assert!(sigma_rank(&edgeless, &pi).values().all(|&r| r == 1));
    }

    #[test]
    fn counting() {
        let lim = Limits::default();
        let g = build_named(&NamedGraph::Example2).unwrap();
        let x = chromatic_oracle(&g, &lim).unwrap();
        assert_eq!(specialize_count(&x, 1, &BigRational::one()), BigRational::from_integer(2.into()));
        assert_eq!(specialize_count(&x, 0, &BigRational::one()), BigRational::zero());
        let free = chromatic_oracle(&DirectedSignedGraph::edgeless(2), &lim).unwrap();
        assert_eq!(specialize_count(&free, 0, &BigRational::one()), BigRational::one());
    }
}
