//! Signed graphs, bidirected orientations, switching, balance, frame circuits
//! and the double cover.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::SignedPermutation;
use crate::sign::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedEdge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl SignedEdge {
    pub fn new(u: usize, v: usize, sign: Sign) -> Self {
        SignedEdge {
            u: u.min(v),
            v: u.max(v),
            sign,
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The two orientations of this edge, in lexicographic order of `(tau_u, tau_v)`.
    pub fn orientations(&self) -> [(Sign, Sign); 2] {
        match self.sign {
            Sign::Plus => [(Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Plus)],
            Sign::Minus => [(Sign::Plus, Sign::Plus), (Sign::Minus, Sign::Minus)],
        }
    }
}

/// An edge together with its incidence signs. `tau = +` means the incidence
/// points into the vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedEdge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
    pub tau_u: Sign,
    pub tau_v: Sign,
}

impl DirectedEdge {
    /// Builds the edge from its incidence signs; the sign is `-tau_u * tau_v`.
    pub fn from_taus(u: usize, v: usize, tau_u: Sign, tau_v: Sign) -> Self {
        let (u, v, tau_u, tau_v) = if u <= v {
            (u, v, tau_u, tau_v)
        } else {
            (v, u, tau_v, tau_u)
        };
        DirectedEdge {
            u,
            v,
            sign: -(tau_u * tau_v),
            tau_u,
            tau_v,
        }
    }

    /// Positive edge directed from `tail` to `head`.
    pub fn arrow(tail: usize, head: usize) -> Self {
        DirectedEdge::from_taus(tail, head, Sign::Minus, Sign::Plus)
    }

    pub fn introverted(u: usize, v: usize) -> Self {
        DirectedEdge::from_taus(u, v, Sign::Plus, Sign::Plus)
    }

    pub fn extroverted(u: usize, v: usize) -> Self {
        DirectedEdge::from_taus(u, v, Sign::Minus, Sign::Minus)
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn undirected(&self) -> SignedEdge {
        SignedEdge {
            u: self.u,
            v: self.v,
            sign: self.sign,
        }
    }

    pub fn taus(&self) -> (Sign, Sign) {
        (self.tau_u, self.tau_v)
    }

    /// `tau_u κ(u) + tau_v κ(v)`; compatible when `<= 0`, an ascent when `> 0`.
    pub fn compatibility_value(&self, kappa: &Coloring) -> i64 {
        self.tau_u.to_i64() * kappa.get(self.u) + self.tau_v.to_i64() * kappa.get(self.v)
    }

    /// The two symmetric arcs `(from, to)` on `±[d]`, pointing from the endpoint
    /// that is larger in every compatible coloring to the smaller one. A loop
    /// yields a single self-mirrored arc.
    pub fn arcs(&self) -> Vec<(i32, i32)> {
        let a = self.tau_u.to_i64() as i32 * self.u as i32;
        let b = -(self.tau_v.to_i64() as i32) * self.v as i32;
        if self.is_loop() {
            vec![(b, a)]
        } else {
            vec![(b, a), (-a, -b)]
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    d: usize,
    edges: Vec<SignedEdge>,
}

impl SignedGraph {
    pub fn new(d: usize, edges: Vec<SignedEdge>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (idx, e) in edges.into_iter().enumerate() {
            let e = SignedEdge::new(e.u, e.v, e.sign);
            check_endpoints(d, e.u, e.v, idx)?;
            if e.is_loop() && e.sign == Sign::Plus {
                return Err(Error::InvalidGraph(format!(
                    "edge {idx}: positive loop at vertex {} admits no proper coloring",
                    e.u
                )));
            }
            if !seen.insert(e) {
                return Err(Error::InvalidGraph(format!(
                    "edge {idx}: duplicate signed edge ({}, {}, {})",
                    e.u, e.v, e.sign
                )));
            }
            normalized.push(e);
        }
        Ok(SignedGraph {
            d,
            edges: normalized,
        })
    }

    pub fn edgeless(d: usize) -> Self {
        SignedGraph {
            d,
            edges: Vec::new(),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &[SignedEdge] {
        &self.edges
    }

    pub fn switch(&self, nu: &SwitchingFunction) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| SignedEdge {
                sign: nu.at(e.u) * e.sign * nu.at(e.v),
                ..*e
            })
            .collect();
        SignedGraph { d: self.d, edges }
    }

    /// Every cycle has positive sign. Signs are propagated along a spanning
    /// forest; a negative loop or a contradicting non-tree edge is a witness
    /// of imbalance.
    pub fn is_balanced(&self) -> bool {
        let mut adj: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); self.d + 1];
        for e in &self.edges {
            if e.is_loop() {
                return false;
            }
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        let mut potential: Vec<Option<Sign>> = vec![None; self.d + 1];
        for root in 1..=self.d {
            if potential[root].is_some() {
                continue;
            }
            potential[root] = Some(Sign::Plus);
            let mut stack = vec![root];
            while let Some(x) = stack.pop() {
                let px = potential[x].unwrap();
                for &(y, s) in &adj[x] {
                    let want = px * s;
                    match potential[y] {
                        None => {
                            potential[y] = Some(want);
                            stack.push(y);
                        }
                        Some(py) if py != want => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// The undirected double cover `G_Σ`; each edge is stored as arcs in both
    /// directions.
    pub fn double_cover(&self) -> SymmetricGraph {
        let mut arcs = BTreeSet::new();
        for e in &self.edges {
            let (i, j) = (e.u as i32, e.v as i32);
            let pairs = match (e.sign, e.is_loop()) {
                (Sign::Minus, true) => vec![(i, -i)],
                (Sign::Plus, _) => vec![(i, j), (-i, -j)],
                (Sign::Minus, false) => vec![(i, -j), (-i, j)],
            };
            for (a, b) in pairs {
                arcs.insert((a, b));
                arcs.insert((b, a));
            }
        }
        SymmetricGraph { d: self.d, arcs }
    }

    pub fn frame_circuits(&self, limits: &Limits) -> Result<Vec<BTreeSet<usize>>> {
        let edges: Vec<SignedEdge> = self.edges.clone();
        frame_circuits_of(self.d, &edges, limits)
    }

    /// Applies one orientation per edge (as produced by [`SignedEdge::orientations`]).
    pub fn orient(&self, taus: &[(Sign, Sign)]) -> Result<DirectedSignedGraph> {
        if taus.len() != self.edges.len() {
            return Err(Error::InvalidParams(format!(
                "{} incidence pairs given for {} edges",
                taus.len(),
                self.edges.len()
            )));
        }
        let edges = self
            .edges
            .iter()
            .zip(taus)
            .map(|(e, &(tu, tv))| DirectedEdge {
                u: e.u,
                v: e.v,
                sign: e.sign,
                tau_u: tu,
                tau_v: tv,
            })
            .collect();
        DirectedSignedGraph::new(self.d, edges)
    }

    /// All acyclic orientations, in lexicographic order over the per-edge
    /// `(tau_u, tau_v)` pairs with `+ < -`, first edge most significant.
    pub fn acyclic_orientations(&self, limits: &Limits) -> Result<Vec<DirectedSignedGraph>> {
        limits.check_vertices("acyclic orientation enumeration", self.d)?;
        let m = self.edges.len();
        if m > limits.max_frame_edges {
            return Err(Error::SizeGuard {
                what: "acyclic orientation enumeration (edges)",
                size: m,
                bound: limits.max_frame_edges,
            });
        }
        let mut out = Vec::new();
        for code in 0u64..(1u64 << m) {
            let edges: Vec<DirectedEdge> = self
                .edges
                .iter()
                .enumerate()
                .map(|(idx, e)| {
                    let choice = ((code >> (m - 1 - idx)) & 1) as usize;
                    let (tau_u, tau_v) = e.orientations()[choice];
                    DirectedEdge {
                        u: e.u,
                        v: e.v,
                        sign: e.sign,
                        tau_u,
                        tau_v,
                    }
                })
                .collect();
            let g = DirectedSignedGraph {
                d: self.d,
                edges,
            };
            if g.is_acyclic() {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// The orientation compatible with every point of the open region
    /// `0 < x_{π(1)} < … < x_{π(d)}` (with `x_{-i} = -x_i`).
    pub fn region_orientation(&self, pi: &SignedPermutation) -> Result<DirectedSignedGraph> {
        if pi.d() != self.d {
            return Err(Error::InvalidParams(format!(
                "permutation {pi} has length {} but the graph has {} vertices",
                pi.d(),
                self.d
            )));
        }
        let point = region_point(pi);
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let [first, second] = e.orientations();
                let value = |(tu, tv): (Sign, Sign)| {
                    tu.to_i64() * point.get(e.u) + tv.to_i64() * point.get(e.v)
                };
                let (tau_u, tau_v) = if value(first) < 0 { first } else { second };
                DirectedEdge {
                    u: e.u,
                    v: e.v,
                    sign: e.sign,
                    tau_u,
                    tau_v,
                }
            })
            .collect();
        Ok(DirectedSignedGraph {
            d: self.d,
            edges,
        })
    }
}

/// The integer point of the region of `π` with `x_{π(m)} = m`.
pub fn region_point(pi: &SignedPermutation) -> Coloring {
    let mut values = vec![0i64; pi.d()];
    for (m, &x) in pi.word().iter().enumerate() {
        values[x.unsigned_abs() as usize - 1] = (m as i64 + 1) * x.signum() as i64;
    }
    Coloring(values)
}

fn check_endpoints(d: usize, u: usize, v: usize, idx: usize) -> Result<()> {
    if u == 0 || v == 0 || u > d || v > d {
        return Err(Error::InvalidGraph(format!(
            "edge {idx}: endpoints ({u}, {v}) outside 1..={d}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedSignedGraph {
    d: usize,
    edges: Vec<DirectedEdge>,
}

impl DirectedSignedGraph {
    pub fn new(d: usize, edges: Vec<DirectedEdge>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (idx, e) in edges.into_iter().enumerate() {
            check_endpoints(d, e.u, e.v, idx)?;
            if e.sign != -(e.tau_u * e.tau_v) {
                return Err(Error::InvalidGraph(format!(
                    "sign != -tau_u*tau_v on edge {idx}"
                )));
            }
            let e = if e.u <= e.v {
                e
            } else {
                DirectedEdge {
                    u: e.v,
                    v: e.u,
                    sign: e.sign,
                    tau_u: e.tau_v,
                    tau_v: e.tau_u,
                }
            };
            if e.is_loop() && e.sign == Sign::Plus {
                return Err(Error::InvalidGraph(format!(
                    "edge {idx}: positive loop at vertex {} admits no proper coloring",
                    e.u
                )));
            }
            if !seen.insert(e) {
                return Err(Error::InvalidGraph(format!(
                    "edge {idx}: duplicate directed edge ({}, {}, {}, {}{})",
                    e.u, e.v, e.sign, e.tau_u, e.tau_v
                )));
            }
            normalized.push(e);
        }
        Ok(DirectedSignedGraph {
            d,
            edges: normalized,
        })
    }

    pub fn edgeless(d: usize) -> Self {
        DirectedSignedGraph {
            d,
            edges: Vec::new(),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &[DirectedEdge] {
        &self.edges
    }

    /// The underlying signed graph; same-sign edges between the same
    /// endpoints collapse to one.
    pub fn underlying(&self) -> SignedGraph {
        let mut seen = BTreeSet::new();
        let edges = self
            .edges
            .iter()
            .map(DirectedEdge::undirected)
            .filter(|e| seen.insert(*e))
            .collect();
        SignedGraph { d: self.d, edges }
    }

    /// Position of each edge's underlying edge in [`Self::underlying`].
    pub fn underlying_index(&self) -> Vec<usize> {
        let under = self.underlying();
        self.edges
            .iter()
            .map(|e| {
                under
                    .edges
                    .iter()
                    .position(|f| *f == e.undirected())
                    .expect("underlying edge present")
            })
            .collect()
    }

    pub fn switch(&self, nu: &SwitchingFunction) -> DirectedSignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| DirectedEdge {
                u: e.u,
                v: e.v,
                sign: nu.at(e.u) * e.sign * nu.at(e.v),
                tau_u: nu.at(e.u) * e.tau_u,
                tau_v: nu.at(e.v) * e.tau_v,
            })
            .collect();
        DirectedSignedGraph { d: self.d, edges }
    }

    pub fn coloring_stats(&self, kappa: &Coloring) -> ColoringStats {
        let mut proper = true;
        let mut incompatible = Vec::new();
        for (idx, e) in self.edges.iter().enumerate() {
            if kappa.get(e.u) == e.sign.to_i64() * kappa.get(e.v) {
                proper = false;
            }
            if e.compatibility_value(kappa) > 0 {
                incompatible.push(idx);
            }
        }
        ColoringStats {
            proper,
            asc: incompatible.len(),
            incompatible_edges: incompatible,
        }
    }

    /// The directed double cover `G_→Σ`.
    pub fn double_cover(&self) -> SymmetricGraph {
        let arcs = self.edges.iter().flat_map(DirectedEdge::arcs).collect();
        SymmetricGraph { d: self.d, arcs }
    }

    /// Acyclic iff the directed double cover has no directed cycle; agreement
    /// with [`Self::is_acyclic_by_frame_circuits`] is checked exhaustively in
    /// the test suite.
    pub fn is_acyclic(&self) -> bool {
        !self.double_cover().has_directed_cycle()
    }

    /// Acyclic iff every frame circuit has a source or a sink.
    pub fn is_acyclic_by_frame_circuits(&self, limits: &Limits) -> Result<bool> {
        let plain: Vec<SignedEdge> = self.edges.iter().map(DirectedEdge::undirected).collect();
        let circuits = frame_circuits_of(self.d, &plain, limits)?;
        Ok(circuits.iter().all(|c| self.has_source_or_sink(c)))
    }

    fn has_source_or_sink(&self, circuit: &BTreeSet<usize>) -> bool {
        let mut incidences: Vec<Vec<Sign>> = vec![Vec::new(); self.d + 1];
        for &idx in circuit {
            let e = &self.edges[idx];
            incidences[e.u].push(e.tau_u);
            incidences[e.v].push(e.tau_v);
        }
        incidences
            .iter()
            .filter(|inc| !inc.is_empty())
            .any(|inc| inc.iter().all(|&s| s == inc[0]))
    }

    /// Vertices of `other` are renumbered after those of `self`.
    pub fn disjoint_union(&self, other: &DirectedSignedGraph) -> DirectedSignedGraph {
        let shift = self.d;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| DirectedEdge {
            u: e.u + shift,
            v: e.v + shift,
            ..*e
        }));
        DirectedSignedGraph {
            d: self.d + other.d,
            edges,
        }
    }

    /// Number of edges whose orientation differs from the orientation
    /// `other` gives to the same underlying edge.
    pub fn disagreements(&self, other: &DirectedSignedGraph) -> usize {
        self.edges
            .iter()
            .filter(|e| {
                let w = other
                    .edges
                    .iter()
                    .find(|f| f.undirected() == e.undirected())
                    .expect("graphs share the underlying edge set");
                w.taus() != e.taus()
            })
            .count()
    }
}

impl fmt::Display for DirectedSignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} [", self.d)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{{{},{}}}{}{}", e.sign, e.u, e.v, e.tau_u, e.tau_v)?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringStats {
    pub proper: bool,
    pub asc: usize,
    pub incompatible_edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwitchingFunction(pub Vec<Sign>);

impl SwitchingFunction {
    pub fn identity(d: usize) -> Self {
        SwitchingFunction(vec![Sign::Plus; d])
    }

    /// `-` exactly on the given (1-based) vertices.
    pub fn negate_at(d: usize, vertices: &[usize]) -> Self {
        let mut s = vec![Sign::Plus; d];
        for &v in vertices {
            s[v - 1] = Sign::Minus;
        }
        SwitchingFunction(s)
    }

    pub fn at(&self, v: usize) -> Sign {
        self.0[v - 1]
    }
}

/// A map from vertices `1..=d` to integers (stored 0-based).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring(pub Vec<i64>);

impl Coloring {
    pub fn get(&self, v: usize) -> i64 {
        self.0[v - 1]
    }

    pub fn switch(&self, nu: &SwitchingFunction) -> Coloring {
        Coloring(
            self.0
                .iter()
                .zip(&nu.0)
                .map(|(&k, &s)| s.to_i64() * k)
                .collect(),
        )
    }

    /// The symmetric coloring of the double cover: `u_i ↦ κ(v_i)`, `u_{-i} ↦ -κ(v_i)`.
    pub fn symmetric_value(&self, i: i32) -> i64 {
        i.signum() as i64 * self.get(i.unsigned_abs() as usize)
    }
}

/// A graph on `±[d]` closed under `(i, j) ↦ (-j, -i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricGraph {
    pub d: usize,
    pub arcs: BTreeSet<(i32, i32)>,
}

impl SymmetricGraph {
    pub fn new(d: usize, arcs: BTreeSet<(i32, i32)>) -> Result<Self> {
        for &(i, j) in &arcs {
            let ok = |x: i32| x != 0 && x.unsigned_abs() as usize <= d;
            if !ok(i) || !ok(j) {
                return Err(Error::InvalidGraph(format!("arc ({i}, {j}) outside ±[{d}]")));
            }
            if !arcs.contains(&(-j, -i)) {
                return Err(Error::InvalidGraph(format!(
                    "arc ({i}, {j}) present without its mirror ({}, {})",
                    -j, -i
                )));
            }
        }
        Ok(SymmetricGraph { d, arcs })
    }

    /// Adjacent in the underlying undirected graph.
    pub fn adjacent(&self, a: i32, b: i32) -> bool {
        self.arcs.contains(&(a, b)) || self.arcs.contains(&(b, a))
    }

    pub fn has_directed_cycle(&self) -> bool {
        let n = 2 * self.d;
        let idx = |x: i32| -> usize {
            if x > 0 {
                self.d + x as usize - 1
            } else {
                (self.d as i32 + x) as usize
            }
        };
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.arcs {
            out[idx(a)].push(idx(b));
        }
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; n];
        for root in 0..n {
            if state[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            state[root] = 1;
            while let Some(&mut (x, ref mut next)) = stack.last_mut() {
                if *next < out[x].len() {
                    let y = out[x][*next];
                    *next += 1;
                    match state[y] {
                        0 => {
                            state[y] = 1;
                            stack.push((y, 0));
                        }
                        1 => return true,
                        _ => {}
                    }
                } else {
                    state[x] = 2;
                    stack.pop();
                }
            }
        }
        false
    }
}

/// Kinds of frame circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameCircuitKind {
    BalancedCycle,
    TightHandcuff,
    LooseHandcuff,
}

/// All edge subsets (as index sets) forming a balanced cycle, a tight
/// handcuff or a loose handcuff. Exhaustive over subsets, so bounded.
pub fn frame_circuits_of(
    d: usize,
    edges: &[SignedEdge],
    limits: &Limits,
) -> Result<Vec<BTreeSet<usize>>> {
    if d > limits.max_frame_vertices {
        return Err(Error::SizeGuard {
            what: "frame circuit scan",
            size: d,
            bound: limits.max_frame_vertices,
        });
    }
    let m = edges.len();
    if m > limits.max_frame_edges {
        return Err(Error::SizeGuard {
            what: "frame circuit scan (edges)",
            size: m,
            bound: limits.max_frame_edges,
        });
    }
    let mut out = Vec::new();
    let mut subset = Vec::with_capacity(m);
    for mask in 1u64..(1u64 << m) {
        subset.clear();
        subset.extend((0..m).filter(|&i| mask & (1 << i) != 0));
        if classify_frame_circuit(d, edges, &subset).is_some() {
            out.push(subset.iter().copied().collect());
        }
    }
    out.sort();
    Ok(out)
}

/// Classifies an edge subset as a frame circuit, if it is one.
pub fn classify_frame_circuit(
    d: usize,
    edges: &[SignedEdge],
    subset: &[usize],
) -> Option<FrameCircuitKind> {
    let mut degree = vec![0usize; d + 1];
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); d + 1];
    for &i in subset {
        let e = &edges[i];
        degree[e.u] += 1;
        degree[e.v] += 1;
        incident[e.u].push(i);
        if !e.is_loop() {
            incident[e.v].push(i);
        }
    }
    let vertices: Vec<usize> = (1..=d).filter(|&v| degree[v] > 0).collect();
    let n = vertices.len();
    let m = subset.len();
    if degree.contains(&1) || !(m == n || m == n + 1) {
        return None;
    }
    if !connected(&vertices, subset, edges) {
        return None;
    }
    let sign_of = |es: &[usize]| es.iter().fold(Sign::Plus, |acc, &i| acc * edges[i].sign);
    if m == n {
        let is_cycle = vertices.iter().all(|&v| degree[v] == 2);
        return (is_cycle && sign_of(subset) == Sign::Plus).then_some(FrameCircuitKind::BalancedCycle);
    }
    let walk = |start: usize, first: usize| -> Option<(usize, Vec<usize>)> {
        let mut used = vec![first];
        let e = &edges[first];
        let mut at = if e.u == start { e.v } else { e.u };
        let mut came = first;
        while at != start && degree[at] == 2 {
            let next = *incident[at].iter().find(|&&i| i != came)?;
            let f = &edges[next];
            used.push(next);
            came = next;
            at = if f.u == at { f.v } else { f.u };
        }
        Some((at, used))
    };
    let hubs4: Vec<usize> = vertices.iter().copied().filter(|&v| degree[v] == 4).collect();
    let hubs3: Vec<usize> = vertices.iter().copied().filter(|&v| degree[v] == 3).collect();
    let rest_are_two = |k: usize| vertices.iter().filter(|&&v| degree[v] == 2).count() == n - k;
    if hubs4.len() == 1 && hubs3.is_empty() && rest_are_two(1) {
        let hub = hubs4[0];
        let (end, first_cycle) = walk(hub, incident[hub][0])?;
        if end != hub {
            return None;
        }
        let second: Vec<usize> = subset
            .iter()
            .copied()
            .filter(|i| !first_cycle.contains(i))
            .collect();
        return (sign_of(&first_cycle) == Sign::Minus && sign_of(&second) == Sign::Minus)
            .then_some(FrameCircuitKind::TightHandcuff);
    }
    if hubs3.len() == 2 && hubs4.is_empty() && rest_are_two(2) {
        let mut cycles = Vec::new();
        for &hub in &hubs3 {
            let cycle = incident[hub]
                .iter()
                .filter_map(|&first| walk(hub, first))
                .find(|(end, _)| *end == hub)
                .map(|(_, es)| es);
            cycles.push(cycle?);
        }
        return cycles
            .iter()
            .all(|c| sign_of(c) == Sign::Minus)
            .then_some(FrameCircuitKind::LooseHandcuff);
    }
    None
}

fn connected(vertices: &[usize], subset: &[usize], edges: &[SignedEdge]) -> bool {
    let Some(&root) = vertices.first() else {
        return true;
    };
    let mut reached = BTreeSet::from([root]);
    let mut changed = true;
    while changed {
        changed = false;
        for &i in subset {
            let e = &edges[i];
            if reached.contains(&e.u) != reached.contains(&e.v) {
                reached.insert(e.u);
                reached.insert(e.v);
                changed = true;
            }
        }
    }
    reached.len() == vertices.len()
}
