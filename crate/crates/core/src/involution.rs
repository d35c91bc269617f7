//! The color-exchanging involution behind the signed symmetry of switched
//! circulant graphs.
//!
//! Colorings of the switched graph are carried to the unswitched circulant,
//! where the vertices colored by a pair of consecutive values split into
//! directed paths and even directed cycles. Each component is kept, has its
//! two colors exchanged, or (for an even path through the switched vertex)
//! triggers a rotation of the whole coloring.

use crate::error::{Error, Result};
use crate::graph::{Coloring, DirectedSignedGraph, SwitchingFunction};
use crate::named::{build_named, recognize_switched_circulant, NamedGraph};

/// `Φ_i` on a proper coloring of a circulant switched at one vertex.
///
/// For `i >= 1` this exchanges the usage counts of `i, i+1` and of
/// `-i, -(i+1)`. For `i = 0` it is the composition of the single-pair
/// exchanges for `(0, 1)`, `(-1, 0)`, `(0, 1)`; that case is experimental
/// and only known to be an ascent-preserving involution.
pub fn phi_involution(g: &DirectedSignedGraph, i: u32, kappa: &Coloring) -> Result<Coloring> {
    let (k, switched) = recognize_switched_circulant(g).ok_or_else(|| {
        Error::InvalidGraph("expected a circulant graph switched at exactly one vertex".into())
    })?;
    if kappa.0.len() != g.d() {
        return Err(Error::InvalidColoring(format!(
            "coloring has {} values for {} vertices",
            kappa.0.len(),
            g.d()
        )));
    }
    if !g.coloring_stats(kappa).proper {
        return Err(Error::InvalidColoring("coloring is not proper".into()));
    }
    let d = g.d();
    let nu = SwitchingFunction::negate_at(d, &[switched]);
    let base = build_named(&NamedGraph::Circulant { d, k })?;
    let unswitched = kappa.switch(&nu);
    let i = i as i64;
    let result = if i >= 1 {
        exchange(&base, &unswitched, &[i, -i - 1], switched)?
    } else {
        let once = exchange(&base, &unswitched, &[0], switched)?;
        let twice = exchange(&base, &once, &[-1], switched)?;
        exchange(&base, &twice, &[0], switched)?
    };
    Ok(result.switch(&nu))
}

/// Applies the component rules for every pair `(lo, lo + 1)` at once.
fn exchange(base: &DirectedSignedGraph, kappa: &Coloring, lows: &[i64], switched: usize) -> Result<Coloring> {
    let d = base.d();
    let mut out = kappa.clone();
    let mut shift = None;
    for &lo in lows {
        for component in components(base, kappa, lo)? {
            let has_switched = component.vertices().contains(&switched);
            match (&component, has_switched) {
                (Component::Path(p), _) if p.len() % 2 == 1 => swap(&mut out, p, lo),
                (Component::Cycle(c), true) => swap(&mut out, c, lo),
                (Component::Path(p), true) => {
                    let at = p.iter().position(|&v| v == switched).unwrap();
                    let partner = p[at ^ 1];
                    shift = Some((switched + d - partner) % d);
                }
                _ => {}
            }
        }
    }
    Ok(match shift {
        None => out,
        Some(s) => Coloring((1..=d).map(|v| out.get((v + d - 1 - s) % d + 1)).collect()),
    })
}

fn swap(kappa: &mut Coloring, vertices: &[usize], lo: i64) {
    for &v in vertices {
        let c = &mut kappa.0[v - 1];
        *c = if *c == lo { lo + 1 } else { lo };
    }
}

enum Component {
    /// Vertices in the direction of the arcs.
    Path(Vec<usize>),
    Cycle(Vec<usize>),
}

impl Component {
    fn vertices(&self) -> &[usize] {
        match self {
            Component::Path(v) | Component::Cycle(v) => v,
        }
    }
}

/// Components of the subgraph induced by the colors `lo` and `lo + 1`.
fn components(base: &DirectedSignedGraph, kappa: &Coloring, lo: i64) -> Result<Vec<Component>> {
    let d = base.d();
    let inside = |v: usize| kappa.get(v) == lo || kappa.get(v) == lo + 1;
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); d + 1];
    let mut pred: Vec<Vec<usize>> = vec![Vec::new(); d + 1];
    for e in base.edges() {
        // every edge of the circulant is a positive arc; tau_v = + marks the head
        let (tail, head) = if e.tau_v.to_i64() > 0 { (e.u, e.v) } else { (e.v, e.u) };
        if inside(tail) && inside(head) {
            succ[tail].push(head);
            pred[head].push(tail);
        }
    }
    let mut seen = vec![false; d + 1];
    let mut out = Vec::new();
    for start in (1..=d).filter(|&v| inside(v)) {
        if seen[start] {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut at = 0;
        while at < members.len() {
            let v = members[at];
            at += 1;
            for &w in succ[v].iter().chain(&pred[v]) {
                if !seen[w] {
                    seen[w] = true;
                    members.push(w);
                }
            }
        }
        let coherent = members.iter().all(|&v| succ[v].len() <= 1 && pred[v].len() <= 1);
        let arcs: usize = members.iter().map(|&v| succ[v].len()).sum();
        let describe = || format!("colors {lo},{} induce a component on {members:?}", lo + 1);
        if !coherent {
            return Err(Error::Structural(format!("{} that is not a directed path or cycle", describe())));
        }
        let walk_from = |first: usize| {
            let mut order = vec![first];
            while let Some(&next) = succ[*order.last().unwrap()].first() {
                if next == first {
                    break;
                }
                order.push(next);
            }
            order
        };
        if arcs + 1 == members.len() {
            let first = *members.iter().find(|&&v| pred[v].is_empty()).unwrap();
            out.push(Component::Path(walk_from(first)));
        } else if members.len() % 2 == 0 {
            let first = *members.iter().min().unwrap();
            out.push(Component::Cycle(walk_from(first)));
        } else {
            return Err(Error::Structural(format!("{} that is an odd cycle", describe())));
        }
    }
    Ok(out)
}
