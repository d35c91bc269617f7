//! The arrangement of a signed graph inside the type-B braid arrangement:
//! regions are signed permutations and chambers are unions of regions.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::Result;
use crate::graph::{region_point, DirectedSignedGraph, SignedGraph};
use crate::limits::Limits;
use crate::perm::{all_signed_permutations, SignedPermutation};
use crate::sign::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hyperplane {
    /// `x_i = x_j`
    Equal(usize, usize),
    /// `x_i = -x_j`
    Opposite(usize, usize),
    /// `x_i = 0`
    Zero(usize),
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hyperplane::Equal(i, j) => write!(f, "x{i}=x{j}"),
            Hyperplane::Opposite(i, j) => write!(f, "x{i}=-x{j}"),
            Hyperplane::Zero(i) => write!(f, "x{i}=0"),
        }
    }
}

pub fn hyperplanes_of(g: &SignedGraph) -> BTreeSet<Hyperplane> {
    g.edges()
        .iter()
        .map(|e| match (e.is_loop(), e.sign) {
            (true, _) => Hyperplane::Zero(e.u),
            (false, Sign::Plus) => Hyperplane::Equal(e.u, e.v),
            (false, Sign::Minus) => Hyperplane::Opposite(e.u, e.v),
        })
        .collect()
}

/// The `d` walls of the region of `π`, each with the neighbouring region
/// across it.
pub fn walls(pi: &SignedPermutation) -> Vec<(Hyperplane, SignedPermutation)> {
    let w = pi.word();
    let mut out = Vec::with_capacity(w.len());
    if let Some(&first) = w.first() {
        let mut flipped = w.to_vec();
        flipped[0] = -first;
        out.push((
            Hyperplane::Zero(first.unsigned_abs() as usize),
            SignedPermutation::new(flipped).expect("sign flip keeps a signed permutation"),
        ));
    }
    for m in 0..w.len().saturating_sub(1) {
        let (a, b) = (w[m], w[m + 1]);
        let (i, j) = (a.unsigned_abs() as usize, b.unsigned_abs() as usize);
        let (i, j) = (i.min(j), i.max(j));
        let wall = if a.signum() == b.signum() {
            Hyperplane::Equal(i, j)
        } else {
            Hyperplane::Opposite(i, j)
        };
        let mut swapped = w.to_vec();
        swapped.swap(m, m + 1);
        out.push((wall, SignedPermutation::new(swapped).expect("swap keeps a signed permutation")));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chamber {
    /// Member regions in lexicographic order; the first names the chamber.
    pub regions: Vec<SignedPermutation>,
    /// Ascents of the reference orientation on this chamber (0 when undirected).
    pub asc: usize,
    /// The orientation compatible with the chamber.
    pub orientation: DirectedSignedGraph,
}

impl Chamber {
    pub fn name(&self) -> &SignedPermutation {
        &self.regions[0]
    }

    /// `+`/`-` pairs of incidence signs, one pair per edge.
    pub fn fingerprint(&self) -> String {
        self.orientation
            .edges()
            .iter()
            .map(|e| format!("{}{}", e.tau_u, e.tau_v))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut x = x;
        while self.0[x] != root {
            let next = self.0[x];
            self.0[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Connected components of the region graph after deleting the walls that
/// lie in the graph's arrangement, ordered by their names.
pub fn chambers(g: &SignedGraph, limits: &Limits) -> Result<Vec<Chamber>> {
    chambers_with_reference(g, None, limits)
}

/// As [`chambers`], with ascents measured against `g`'s own orientation.
pub fn chambers_directed(g: &DirectedSignedGraph, limits: &Limits) -> Result<Vec<Chamber>> {
    chambers_with_reference(&g.underlying(), Some(g), limits)
}

fn chambers_with_reference(
    g: &SignedGraph,
    reference: Option<&DirectedSignedGraph>,
    limits: &Limits,
) -> Result<Vec<Chamber>> {
    limits.check_vertices("region graph construction", g.d())?;
    let arrangement = hyperplanes_of(g);
    let regions = all_signed_permutations(g.d());
    let index: HashMap<&SignedPermutation, usize> = regions.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut uf = UnionFind((0..regions.len()).collect());
    for (i, pi) in regions.iter().enumerate() {
        for (wall, neighbour) in walls(pi) {
            if !arrangement.contains(&wall) {
                uf.union(i, index[&neighbour]);
            }
        }
    }
    let mut groups: Vec<Vec<SignedPermutation>> = Vec::new();
    let mut slot_of_root: HashMap<usize, usize> = HashMap::new();
    // regions are in lexicographic order, so roots appear at each chamber's least member
    for (i, pi) in regions.iter().enumerate() {
        let root = uf.find(i);
        let slot = *slot_of_root.entry(root).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[slot].push(pi.clone());
    }
    groups
        .into_iter()
        .map(|members| {
            let orientation = g.region_orientation(&members[0])?;
            let asc = reference
                .map(|r| r.coloring_stats(&region_point(&members[0])).asc)
                .unwrap_or(0);
            Ok(Chamber {
                regions: members,
                asc,
                orientation,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZaslavskyReport {
    pub chambers: usize,
    pub acyclic: usize,
    pub region_map_consistent: bool,
}

impl ZaslavskyReport {
    pub fn holds(&self) -> bool {
        self.chambers == self.acyclic && self.region_map_consistent
    }
}

/// Compares chambers with acyclic orientations: every region of a chamber
/// must induce the chamber's orientation, and distinct chambers distinct
/// acyclic orientations.
pub fn verify_zaslavsky(g: &SignedGraph, limits: &Limits) -> Result<ZaslavskyReport> {
    let chambers = chambers(g, limits)?;
    let acyclic = g.acyclic_orientations(limits)?;
    let mut seen = BTreeSet::new();
    let mut consistent = true;
    for c in &chambers {
        for pi in &c.regions {
            if g.region_orientation(pi)? != c.orientation {
                consistent = false;
            }
        }
        if !c.orientation.is_acyclic() || !acyclic.contains(&c.orientation) {
            consistent = false;
        }
        let taus: Vec<(Sign, Sign)> = c.orientation.edges().iter().map(|e| e.taus()).collect();
        if !seen.insert(taus) {
            consistent = false;
        }
    }
    Ok(ZaslavskyReport {
        chambers: chambers.len(),
        acyclic: acyclic.len(),
        region_map_consistent: consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SignedEdge;
    use crate::named::{build_named, NamedGraph};

    #[test]
    fn example_hyperplanes_and_chambers() {
        let lim = Limits::default();
        let g = build_named(&NamedGraph::Example2).unwrap().underlying();
        assert_eq!(
            hyperplanes_of(&g),
            BTreeSet::from([Hyperplane::Equal(1, 2), Hyperplane::Opposite(1, 2), Hyperplane::Zero(1)])
        );
        assert_eq!(chambers(&g, &lim).unwrap().len(), 6);
        let r = verify_zaslavsky(&g, &lim).unwrap();
        assert_eq!(r, ZaslavskyReport { chambers: 6, acyclic: 6, region_map_consistent: true });
    }

    #[test]
    fn small_cases() {
        let lim = Limits::default();
        assert!(hyperplanes_of(&SignedGraph::edgeless(2)).is_empty());
        let c = chambers(&SignedGraph::edgeless(2), &lim).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].regions.len(), 8);
        let one = SignedGraph::new(2, vec![SignedEdge::new(1, 2, Sign::Plus)]).unwrap();
        assert_eq!(chambers(&one, &lim).unwrap().len(), 2);
        let lp = SignedGraph::new(1, vec![SignedEdge::new(1, 1, Sign::Minus)]).unwrap();
        assert_eq!(
            verify_zaslavsky(&lp, &lim).unwrap(),
            ZaslavskyReport { chambers: 2, acyclic: 2, region_map_consistent: true }
        );
    }

    #[test]
    fn every_region_has_d_walls() {
        for d in 0..=4 {
            let regions = all_signed_permutations(d);
            let expected: usize = (1..=d).product::<usize>() << d;
            assert_eq!(regions.len(), expected);
            for pi in &regions {
                let ws = walls(pi);
                assert_eq!(ws.len(), d);
                for (_, n) in ws {
                    assert!(walls(&n).iter().any(|(_, back)| back == pi));
                }
            }
        }
    }
}
