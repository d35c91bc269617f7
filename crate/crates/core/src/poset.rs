//! Signed posets on `±[d]`, labelings, linear extensions and the
//! `(P, ω)`-partition enumerators.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::fundamental::FundamentalIndex;
use crate::graph::DirectedSignedGraph;
use crate::limits::Limits;
use crate::perm::{all_signed_permutations, SignedPermutation};
use crate::sqsym::{MonomialIndex, SqsExpr};

/// A partial order on `±[d]` invariant under `x ↦ -x` up to reversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPoset {
    d: usize,
    // less[ix(x) * n + ix(y)] is x <_P y
    less: Vec<bool>,
}

impl SignedPoset {
    /// Closes `relations` (pairs `x <_P y`) under mirroring and transitivity.
    pub fn new(d: usize, relations: &[(i32, i32)]) -> Result<Self> {
        let n = 2 * d + 1;
        let mut p = SignedPoset {
            d,
            less: vec![false; n * n],
        };
        for &(x, y) in relations {
            for z in [x, y] {
                if z == 0 || z.unsigned_abs() as usize > d {
                    return Err(Error::InvalidPoset(format!("element {z} outside ±[{d}]")));
                }
            }
            if x == y {
                return Err(Error::InvalidPoset(format!("relation {x} < {x} is reflexive")));
            }
            p.set(x, y);
            p.set(-y, -x);
        }
        let elems = p.elements();
        for &m in &elems {
            for &a in &elems {
                if p.lt(a, m) {
                    for &b in &elems {
                        if p.lt(m, b) {
                            p.set(a, b);
                        }
                    }
                }
            }
        }
        if let Some(&x) = elems.iter().find(|&&x| p.lt(x, x)) {
            return Err(Error::InvalidPoset(format!("relations contain a cycle through {x}")));
        }
        Ok(p)
    }

    /// The total order `π(-d) < … < π(-1) < π(1) < … < π(d)`.
    pub fn chain(pi: &SignedPermutation) -> SignedPoset {
        let w = pi.full_word();
        let rel: Vec<(i32, i32)> = w.windows(2).map(|p| (p[0], p[1])).collect();
        SignedPoset::new(pi.d(), &rel).expect("a chain is a signed poset")
    }

    fn ix(&self, x: i32) -> usize {
        (x + self.d as i32) as usize
    }

    fn set(&mut self, x: i32, y: i32) {
        let n = 2 * self.d + 1;
        let (i, j) = (self.ix(x), self.ix(y));
        self.less[i * n + j] = true;
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn elements(&self) -> Vec<i32> {
        let d = self.d as i32;
        (-d..=d).filter(|&x| x != 0).collect()
    }

    pub fn lt(&self, x: i32, y: i32) -> bool {
        let n = 2 * self.d + 1;
        self.less[self.ix(x) * n + self.ix(y)]
    }

    /// All strict relations `x <_P y`.
    pub fn relations(&self) -> Vec<(i32, i32)> {
        let elems = self.elements();
        let mut out = Vec::new();
        for &x in &elems {
            for &y in &elems {
                if self.lt(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Cover relations: `x <_P y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(i32, i32)> {
        let elems = self.elements();
        self.relations()
            .into_iter()
            .filter(|&(x, y)| !elems.iter().any(|&z| self.lt(x, z) && self.lt(z, y)))
            .collect()
    }

    /// Every signed permutation whose full word lists smaller elements first.
    pub fn linear_extensions(&self, limits: &Limits) -> Result<Vec<SignedPermutation>> {
        limits.check_vertices("linear extension enumeration", self.d)?;
        let rel = self.relations();
        Ok(all_signed_permutations(self.d)
            .into_iter()
            .filter(|pi| rel.iter().all(|&(x, y)| pi.position(x) < pi.position(y)))
            .collect())
    }

    /// `Γ_{P,ω}`: the sum over canonical `(P, ω)`-partitions `f` of the
    /// monomial `∏_{x=1}^{d} x_{f(x)}`.
    pub fn gamma_enumerator(&self, omega: &Labeling, limits: &Limits) -> Result<SqsExpr> {
        limits.check_vertices("partition enumeration", self.d)?;
        if omega.d() != self.d {
            return Err(Error::InvalidLabeling(format!(
                "labeling on ±[{}] for a poset on ±[{}]",
                omega.d(),
                self.d
            )));
        }
        // Constraints grouped by the larger absolute value so they can be
        // checked as soon as both ends are assigned.
        let mut by_vertex: Vec<Vec<(i32, i32, bool)>> = vec![Vec::new(); self.d + 1];
        for (x, y) in self.relations() {
            let strict = omega.at(x) > omega.at(y);
            let last = x.unsigned_abs().max(y.unsigned_abs()) as usize;
            by_vertex[last].push((x, y, strict));
        }
        let mut counts: HashMap<MonomialIndex, i64> = HashMap::new();
        let mut values = vec![0i64; self.d];
        partition_rec(self.d, 1, &by_vertex, &mut values, &mut counts);
        Ok(SqsExpr::from_counts(counts))
    }
}

fn partition_rec(
    d: usize,
    v: usize,
    by_vertex: &[Vec<(i32, i32, bool)>],
    values: &mut Vec<i64>,
    counts: &mut HashMap<MonomialIndex, i64>,
) {
    if v > d {
        if let Some(m) = MonomialIndex::of_canonical_values(values) {
            *counts.entry(m).or_insert(0) += 1;
        }
        return;
    }
    let f = |values: &[i64], x: i32| x.signum() as i64 * values[x.unsigned_abs() as usize - 1];
    for value in -(d as i64)..=d as i64 {
        values[v - 1] = value;
        let ok = by_vertex[v].iter().all(|&(x, y, strict)| {
            let (fx, fy) = (f(values, x), f(values, y));
            if strict {
                fx < fy
            } else {
                fx <= fy
            }
        });
        if ok {
            partition_rec(d, v + 1, by_vertex, values, counts);
        }
    }
    values[v - 1] = 0;
}

/// A labeling `ω` of `±[d]` with `ω(-x) = -ω(x)`, which is what the
/// condition `ω(i) < ω(j) ⟹ ω(-j) < ω(-i)` forces for a bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling(Vec<i32>);

impl Labeling {
    /// From the values `ω(1), …, ω(d)`.
    pub fn new(values: Vec<i32>) -> Result<Self> {
        SignedPermutation::new(values.clone())
            .map_err(|_| Error::InvalidLabeling(format!("{values:?} is not a bijection of ±[d]")))?;
        Ok(Labeling(values))
    }

    pub fn d(&self) -> usize {
        self.0.len()
    }

    pub fn at(&self, x: i32) -> i32 {
        x.signum() * self.0[x.unsigned_abs() as usize - 1]
    }

    /// Order-preserving: `x <_P y ⟹ ω(x) < ω(y)`.
    pub fn natural(p: &SignedPoset, limits: &Limits) -> Result<Labeling> {
        Labeling::from_extension(p, limits, 1)
    }

    /// Order-reversing: `x <_P y ⟹ ω(x) > ω(y)`.
    pub fn dual_natural(p: &SignedPoset, limits: &Limits) -> Result<Labeling> {
        Labeling::from_extension(p, limits, -1)
    }

    /// A labeling under which exactly the covers in `strict` are strict
    /// (`ω(x) > ω(y)` for a cover `x <_P y`). Mirrors of listed covers count as
    /// listed. Searches all signed permutations of `±[d]`.
    pub fn realizing(p: &SignedPoset, strict: &[(i32, i32)], limits: &Limits) -> Result<Labeling> {
        limits.check_vertices("labeling search", p.d())?;
        let covers = p.covers();
        let mut wanted = BTreeSet::new();
        for &(x, y) in strict {
            if !covers.contains(&(x, y)) {
                return Err(Error::InvalidLabeling(format!("strict pair ({x}, {y}) is not a cover")));
            }
            wanted.insert((x, y));
            wanted.insert((-y, -x));
        }
        all_signed_permutations(p.d())
            .into_iter()
            .map(|w| Labeling(w.word().to_vec()))
            .find(|omega| {
                covers
                    .iter()
                    .all(|&(x, y)| (omega.at(x) > omega.at(y)) == wanted.contains(&(x, y)))
            })
            .ok_or_else(|| Error::InvalidLabeling("no labeling realizes the strict covers".into()))
    }

    /// The values `ω(1), …, ω(d)`.
    pub fn values(&self) -> &[i32] {
        &self.0
    }

    fn from_extension(p: &SignedPoset, limits: &Limits, direction: i32) -> Result<Labeling> {
        let pi = p
            .linear_extensions(limits)?
            .into_iter()
            .next()
            .ok_or_else(|| Error::InvalidPoset("no linear extension".into()))?;
        let mut values = vec![0; p.d()];
        for m in 1..=p.d() as i32 {
            let x = pi.at(m);
            values[x.unsigned_abs() as usize - 1] = direction * x.signum() * m;
        }
        Labeling::new(values)
    }
}

/// The fundamental index whose expansion is `Γ` of the chain `π` under `ω`:
/// joins are strict where `ω ∘ π` descends (with `ω(π(0)) = 0`) and the
/// signs are those of `π`.
pub fn chain_fundamental_index(pi: &SignedPermutation, omega: &Labeling) -> FundamentalIndex {
    let labels: Vec<i32> = pi.word().iter().map(|&x| omega.at(x)).collect();
    let strict: BTreeSet<usize> = (0..pi.d())
        .filter(|&j| {
            let before = if j == 0 { 0 } else { labels[j - 1] };
            before > labels[j]
        })
        .collect();
    FundamentalIndex::new(strict, pi.signs()).expect("descents lie in 0..d")
}

/// The order induced by the directed double cover: an arc `y → x` gives
/// `x <_P y`, so compatible proper colorings are the strict partitions.
pub fn poset_from_orientation(g: &DirectedSignedGraph) -> Result<SignedPoset> {
    if !g.is_acyclic() {
        return Err(Error::Cyclic);
    }
    let rel: Vec<(i32, i32)> = g.double_cover().arcs.iter().map(|&(y, x)| (x, y)).collect();
    SignedPoset::new(g.d(), &rel)
}
