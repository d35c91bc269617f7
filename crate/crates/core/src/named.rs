//! Named graph constructions: circulant tournaments, their switchings, the
//! two-vertex running example and seeded random graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{DirectedEdge, DirectedSignedGraph, SignedEdge, SignedGraph, SwitchingFunction};
use crate::sign::Sign;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedGraph {
    /// Arcs `v_i → v_{i+p mod d}` for every vertex `i` and `1 <= p <= k`.
    Circulant { d: usize, k: usize },
    /// The circulant switched negatively at each listed vertex.
    SwitchedCirculant {
        d: usize,
        k: usize,
        switched: Vec<usize>,
    },
    /// Two vertices: a positive arc `1 → 2`, an introverted negative edge
    /// `{1,2}` and an introverted negative loop at `1`.
    Example2,
    Random { d: usize, seed: u64 },
}

pub fn build_named(named: &NamedGraph) -> Result<DirectedSignedGraph> {
    match named {
        NamedGraph::Circulant { d, k } => circulant(*d, *k),
        NamedGraph::SwitchedCirculant { d, k, switched } => {
            let base = circulant(*d, *k)?;
            if switched.is_empty() {
                return Err(Error::InvalidParams("no switched vertex given".into()));
            }
            for &v in switched {
                if v == 0 || v > *d {
                    return Err(Error::InvalidParams(format!(
                        "switched vertex {v} outside 1..={d}"
                    )));
                }
            }
            Ok(base.switch(&SwitchingFunction::negate_at(*d, switched)))
        }
        NamedGraph::Example2 => DirectedSignedGraph::new(
            2,
            vec![
                DirectedEdge::arrow(1, 2),
                DirectedEdge::introverted(1, 2),
                DirectedEdge::introverted(1, 1),
            ],
        ),
        NamedGraph::Random { d, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            Ok(random_directed_graph(*d, &mut rng))
        }
    }
}

fn circulant(d: usize, k: usize) -> Result<DirectedSignedGraph> {
    if k == 0 || k + 1 >= d {
        return Err(Error::InvalidParams(format!(
            "circulant needs 1 <= k < d-1, got d={d}, k={k}"
        )));
    }
    let mut edges = Vec::with_capacity(d * k);
    for i in 1..=d {
        for p in 1..=k {
            edges.push(DirectedEdge::arrow(i, (i - 1 + p) % d + 1));
        }
    }
    DirectedSignedGraph::new(d, edges)
}

/// Adds an introverted negative loop at every vertex, which restricts proper
/// colorings to nonzero values.
pub fn with_negative_loops(g: &DirectedSignedGraph) -> Result<DirectedSignedGraph> {
    let mut edges = g.edges().to_vec();
    edges.extend((1..=g.d()).map(|v| DirectedEdge::introverted(v, v)));
    DirectedSignedGraph::new(g.d(), edges)
}

/// If `g` equals a circulant switched at exactly one vertex, returns `(k, v)`.
pub fn recognize_switched_circulant(g: &DirectedSignedGraph) -> Option<(usize, usize)> {
    let d = g.d();
    if d < 3 || !g.edges().len().is_multiple_of(d) {
        return None;
    }
    let k = g.edges().len() / d;
    (1..=d).find_map(|v| {
        let candidate = build_named(&NamedGraph::SwitchedCirculant {
            d,
            k,
            switched: vec![v],
        })
        .ok()?;
        (candidate == *g).then_some((k, v))
    })
}

/// Each vertex pair independently gets no edge, a positive edge, a negative
/// edge or both; each vertex gets a negative loop with probability 1/4.
pub fn random_signed_graph<R: Rng>(d: usize, rng: &mut R) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 1..=d {
        if rng.gen_ratio(1, 4) {
            edges.push(SignedEdge::new(u, u, Sign::Minus));
        }
        for v in u + 1..=d {
            match rng.gen_range(0..4) {
                0 => {}
                1 => edges.push(SignedEdge::new(u, v, Sign::Plus)),
                2 => edges.push(SignedEdge::new(u, v, Sign::Minus)),
                _ => {
                    edges.push(SignedEdge::new(u, v, Sign::Plus));
                    edges.push(SignedEdge::new(u, v, Sign::Minus));
                }
            }
        }
    }
    SignedGraph::new(d, edges).expect("random edges are valid")
}

/// A random signed graph with a uniformly random orientation of each edge.
pub fn random_directed_graph<R: Rng>(d: usize, rng: &mut R) -> DirectedSignedGraph {
    let g = random_signed_graph(d, rng);
    let taus: Vec<(Sign, Sign)> = g
        .edges()
        .iter()
        .map(|e| e.orientations()[rng.gen_range(0..2)])
        .collect();
    g.orient(&taus).expect("one orientation per edge")
}
