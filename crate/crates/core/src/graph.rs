//! Integral gain graphs and the structural operations the counting
//! algorithms consume: balance testing, switching, top-vertex switching,
//! contraction, deletion, rooting, and improper-edge detection.
//!
//! Vertices are the 1-based indices `1..=n`. An edge records an integer
//! gain oriented from tail to head; traversing the edge backwards negates
//! the gain, so `(i, j, g)` and `(j, i, -g)` denote the same object.
//! Canonical storage keeps `tail <= head`, loops keep the nonnegative
//! member of `{g, -g}`, and identical triples are stored once. A
//! multiplicity is retained for provenance but never affects any count:
//! parallel copies of the same triple impose the same impropriety
//! condition.
//!
//! Per-vertex data (colorations, switching functions, potentials, bounds)
//! is passed as slices of length `n` indexed by `vertex - 1`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::Error;

/// A set of edge indices into [`GainGraph::edges`].
pub type EdgeSet = BTreeSet<usize>;

/// A single edge in canonical orientation (`tail <= head`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub gain: i64,
}

impl Edge {
    fn canonical(tail: usize, head: usize, gain: i64) -> Self {
        if tail == head {
            Edge {
                tail,
                head,
                gain: gain.abs(),
            }
        } else if tail < head {
            Edge { tail, head, gain }
        } else {
            Edge {
                tail: head,
                head: tail,
                gain: -gain,
            }
        }
    }

    /// True when both endpoints coincide.
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

/// A switching function `eta`, total on the vertices `1..=n`.
///
/// Switching replaces each gain `g_ij` by `g_ij + eta_j - eta_i` and
/// leaves loops unchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingFunction {
    values: Vec<i64>,
}

impl SwitchingFunction {
    pub fn new(values: Vec<i64>) -> Self {
        SwitchingFunction { values }
    }

    /// The identity switching on `n` vertices.
    pub fn zero(n: usize) -> Self {
        SwitchingFunction { values: vec![0; n] }
    }

    pub fn value(&self, vertex: usize) -> i64 {
        self.values[vertex - 1]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn negated(&self) -> Self {
        SwitchingFunction {
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    /// Pointwise sum; switching by `self` then `other` equals switching by
    /// the composition.
    pub fn composed(&self, other: &SwitchingFunction) -> Self {
        assert_eq!(self.values.len(), other.values.len());
        SwitchingFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// A potential certifying that an edge set is balanced: for every edge
/// `(i, j, g)` of the certified set, `g = value(j) - value(i)`.
///
/// Normalized so that the minimum value on each connected component of
/// the certified set is 0 (vertices isolated in the set get 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Potential {
    values: Vec<i64>,
}

impl Potential {
    pub fn value(&self, vertex: usize) -> i64 {
        self.values[vertex - 1]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// Raw balance certificate kept in the un-normalized form produced by
/// breadth-first propagation, together with the component structure.
pub(crate) struct BalanceData {
    /// Per-vertex potential, arbitrary base point per component.
    pub theta: Vec<i64>,
    /// Per-vertex component representative: the smallest vertex of the
    /// component of the tested edge set containing it.
    pub comp: Vec<usize>,
}

/// An integral gain graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GainGraph {
    n: usize,
    edges: Vec<Edge>,
    multiplicity: Vec<u32>,
}

impl GainGraph {
    /// Builds a graph from raw `(tail, head, gain)` triples, canonicalizing
    /// orientations and collapsing duplicate triples.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self, Error> {
        let mut weighted = Vec::new();
        for (tail, head, gain) in edges {
            for v in [tail, head] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange(v, n));
                }
            }
            weighted.push((Edge::canonical(tail, head, gain), 1));
        }
        Ok(Self::from_weighted(n, weighted))
    }

    /// The empty graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        GainGraph {
            n,
            edges: Vec::new(),
            multiplicity: Vec::new(),
        }
    }

    fn from_weighted(n: usize, mut weighted: Vec<(Edge, u32)>) -> Self {
        weighted.sort_by_key(|(e, _)| *e);
        let mut edges: Vec<Edge> = Vec::with_capacity(weighted.len());
        let mut multiplicity: Vec<u32> = Vec::with_capacity(weighted.len());
        for (e, w) in weighted {
            if edges.last() == Some(&e) {
                *multiplicity.last_mut().unwrap() += w;
            } else {
                edges.push(e);
                multiplicity.push(w);
            }
        }
        GainGraph {
            n,
            edges,
            multiplicity,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Provenance only: how many copies of the canonical triple were
    /// supplied. Never affects a count.
    pub fn multiplicity(&self, index: usize) -> u32 {
        self.multiplicity[index]
    }

    /// The set of all edge indices.
    pub fn all_edges(&self) -> EdgeSet {
        (0..self.edges.len()).collect()
    }

    /// Looks up the index of a triple, in any orientation.
    pub fn edge_index(&self, tail: usize, head: usize, gain: i64) -> Option<usize> {
        self.edges
            .binary_search(&Edge::canonical(tail, head, gain))
            .ok()
    }

    pub fn has_zero_gain_loop(&self) -> bool {
        self.edges.iter().any(|e| e.is_loop() && e.gain == 0)
    }

    /// Indices of the links (non-loop edges) in canonical order.
    pub fn link_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_loop())
            .map(|(i, _)| i)
    }

    fn check_subset(&self, subset: &EdgeSet) -> Result<(), Error> {
        if let Some(&idx) = subset.iter().next_back() {
            if idx >= self.edges.len() {
                return Err(Error::UnknownEdge(idx, self.edges.len()));
            }
        }
        Ok(())
    }

    /// Breadth-first potential propagation over `subset`. Returns `None`
    /// when some circle inside the subset has nonzero gain (this includes
    /// any loop of nonzero gain).
    pub(crate) fn balance_data(&self, subset: &EdgeSet) -> Result<Option<BalanceData>, Error> {
        self.check_subset(subset)?;
        let n = self.n;
        let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
        for &idx in subset {
            let e = self.edges[idx];
            if e.is_loop() {
                if e.gain != 0 {
                    return Ok(None);
                }
                continue;
            }
            adj[e.tail - 1].push((e.head, e.gain));
            adj[e.head - 1].push((e.tail, -e.gain));
        }
        let mut theta = vec![0i64; n];
        let mut comp = vec![0usize; n];
        for start in 1..=n {
            if comp[start - 1] != 0 {
                continue;
            }
            comp[start - 1] = start;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, g) in &adj[v - 1] {
                    let t = theta[v - 1] + g;
                    if comp[w - 1] == 0 {
                        comp[w - 1] = start;
                        theta[w - 1] = t;
                        queue.push_back(w);
                    } else if theta[w - 1] != t {
                        return Ok(None);
                    }
                }
            }
        }
        Ok(Some(BalanceData { theta, comp }))
    }

    /// Tests whether every circle inside `subset` has gain zero, returning
    /// a certifying [`Potential`] when it does.
    pub fn is_balanced(&self, subset: &EdgeSet) -> Result<Option<Potential>, Error> {
        let data = match self.balance_data(subset)? {
            Some(d) => d,
            None => return Ok(None),
        };
        let mut min_of: BTreeMap<usize, i64> = BTreeMap::new();
        for v in 0..self.n {
            let entry = min_of.entry(data.comp[v]).or_insert(i64::MAX);
            *entry = (*entry).min(data.theta[v]);
        }
        let values = (0..self.n)
            .map(|v| data.theta[v] - min_of[&data.comp[v]])
            .collect();
        Ok(Some(Potential { values }))
    }

    /// Applies a switching function: each gain `g_ij` becomes
    /// `g_ij + eta_j - eta_i`; loops are unchanged.
    pub fn switch(&self, eta: &SwitchingFunction) -> GainGraph {
        assert_eq!(eta.values.len(), self.n, "switching function must be total");
        let weighted = self
            .edges
            .iter()
            .zip(&self.multiplicity)
            .map(|(e, &w)| {
                let gain = e.gain + eta.value(e.head) - eta.value(e.tail);
                (Edge::canonical(e.tail, e.head, gain), w)
            })
            .collect();
        Self::from_weighted(self.n, weighted)
    }

    /// The canonical switching function that zeroes all gains on a balanced
    /// edge set: `eta_j` is the maximum gain over paths inside the set
    /// starting at `v_j` (0 for vertices the set does not reach). Each
    /// component's minimum value is 0; the vertices attaining it are the
    /// component's top vertices.
    pub fn top_vertex_switching(&self, subset: &EdgeSet) -> Result<SwitchingFunction, Error> {
        let data = self.balance_data(subset)?.ok_or(Error::Unbalanced)?;
        let mut max_of: BTreeMap<usize, i64> = BTreeMap::new();
        for v in 0..self.n {
            let entry = max_of.entry(data.comp[v]).or_insert(i64::MIN);
            *entry = (*entry).max(data.theta[v]);
        }
        let values = (0..self.n)
            .map(|v| max_of[&data.comp[v]] - data.theta[v])
            .collect();
        Ok(SwitchingFunction { values })
    }

    pub(crate) fn contract_data(&self, subset: &EdgeSet) -> Result<Contraction, Error> {
        let eta = self.top_vertex_switching(subset)?;
        let data = self
            .balance_data(subset)?
            .expect("subset already certified balanced");

        // Blocks of the subset's partition, keyed by component representative.
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 1..=self.n {
            blocks.entry(data.comp[v - 1]).or_default().push(v);
        }
        // Each block collapses to its lowest-indexed top vertex; blocks are
        // then reindexed in representative order.
        let mut reps: Vec<(usize, Vec<usize>)> = blocks
            .into_values()
            .map(|members| {
                let rep = *members
                    .iter()
                    .find(|&&v| eta.value(v) == 0)
                    .expect("every block has a top vertex");
                (rep, members)
            })
            .collect();
        reps.sort_by_key(|(rep, _)| *rep);

        let mut new_index = vec![0usize; self.n];
        for (i, (_, members)) in reps.iter().enumerate() {
            for &v in members {
                new_index[v - 1] = i + 1;
            }
        }

        let weighted = self
            .edges
            .iter()
            .zip(&self.multiplicity)
            .enumerate()
            .filter(|(idx, _)| !subset.contains(idx))
            .map(|(_, (e, &w))| {
                let gain = e.gain + eta.value(e.head) - eta.value(e.tail);
                (
                    Edge::canonical(new_index[e.tail - 1], new_index[e.head - 1], gain),
                    w,
                )
            })
            .collect();
        let graph = Self::from_weighted(reps.len(), weighted);
        Ok(Contraction {
            graph,
            eta,
            new_index,
        })
    }

    /// Contracts a balanced edge set: switch by the top-vertex switching
    /// function, collapse each block to its lowest-indexed top vertex,
    /// drop the contracted edges, and re-endpoint the rest (edges inside a
    /// block become loops with their switched gain). The surviving blocks
    /// are reindexed in order of their representatives.
    pub fn contract(&self, subset: &EdgeSet) -> Result<GainGraph, Error> {
        Ok(self.contract_data(subset)?.graph)
    }

    /// Removes one edge record.
    pub fn delete_edge(&self, index: usize) -> Result<GainGraph, Error> {
        if index >= self.edges.len() {
            return Err(Error::UnknownEdge(index, self.edges.len()));
        }
        let mut edges = self.edges.clone();
        let mut multiplicity = self.multiplicity.clone();
        edges.remove(index);
        multiplicity.remove(index);
        Ok(GainGraph {
            n: self.n,
            edges,
            multiplicity,
        })
    }

    /// The rooting of this graph: the same graph with every vertex bounded
    /// below by 0, i.e. every color must be at least 1.
    pub fn rooting(&self) -> RootedGainGraph {
        RootedGainGraph {
            graph: self.clone(),
            bounds: vec![0; self.n],
        }
    }

    /// The set of edges an integral coloration violates: exactly those with
    /// `x_head = x_tail + gain` (orientation-independent).
    pub fn improper_edges(&self, coloration: &[i64]) -> EdgeSet {
        assert_eq!(coloration.len(), self.n, "coloration must be total");
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| coloration[e.head - 1] == coloration[e.tail - 1] + e.gain)
            .map(|(i, _)| i)
            .collect()
    }

    pub(crate) fn is_proper(&self, coloration: &[i64]) -> bool {
        self.edges
            .iter()
            .all(|e| coloration[e.head - 1] != coloration[e.tail - 1] + e.gain)
    }

    pub(crate) fn is_proper_mod(&self, coloration: &[i64], m: i64) -> bool {
        self.edges
            .iter()
            .all(|e| (coloration[e.head - 1] - coloration[e.tail - 1] - e.gain).rem_euclid(m) != 0)
    }

    /// Reduces all gains modulo `m`, storing links with residues in
    /// `[0, m)` and loops with the smaller of the two equivalent residues.
    /// Triples that collide after reduction collapse.
    pub fn reduce_mod(&self, m: i64) -> GainGraph {
        assert!(m >= 1);
        let weighted = self
            .edges
            .iter()
            .zip(&self.multiplicity)
            .map(|(e, &w)| {
                let r = e.gain.rem_euclid(m);
                let gain = if e.is_loop() { r.min((m - r) % m) } else { r };
                (
                    Edge {
                        tail: e.tail,
                        head: e.head,
                        gain,
                    },
                    w,
                )
            })
            .collect();
        Self::from_weighted(self.n, weighted)
    }

    /// Visits every circle contained in `allowed`, invoking the callback
    /// with the circle's edge indices and its gain in one traversal
    /// direction. Loops are one-edge circles. Circles of length two or
    /// more may be visited once per direction; callers that need each
    /// circle once should deduplicate by edge set.
    pub(crate) fn for_each_circle(&self, allowed: &EdgeSet, mut f: impl FnMut(&[usize], i64)) {
        let n = self.n;
        let mut adj: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); n];
        for &idx in allowed {
            let e = self.edges[idx];
            if e.is_loop() {
                f(&[idx], e.gain);
                continue;
            }
            adj[e.tail - 1].push((idx, e.head, e.gain));
            adj[e.head - 1].push((idx, e.tail, -e.gain));
        }

        // Simple cycles, enumerated from their minimum vertex through
        // strictly larger intermediate vertices.
        fn walk(
            adj: &[Vec<(usize, usize, i64)>],
            start: usize,
            current: usize,
            gain: i64,
            path: &mut Vec<usize>,
            visited: &mut Vec<bool>,
            f: &mut impl FnMut(&[usize], i64),
        ) {
            for &(idx, next, g) in &adj[current - 1] {
                if path.contains(&idx) {
                    continue;
                }
                if next == start {
                    if !path.is_empty() {
                        path.push(idx);
                        f(path, gain + g);
                        path.pop();
                    }
                } else if next > start && !visited[next - 1] {
                    visited[next - 1] = true;
                    path.push(idx);
                    walk(adj, start, next, gain + g, path, visited, f);
                    path.pop();
                    visited[next - 1] = false;
                }
            }
        }

        let mut visited = vec![false; n];
        let mut path = Vec::new();
        for start in 1..=n {
            walk(&adj, start, start, 0, &mut path, &mut visited, &mut f);
        }
    }

    /// The maximum absolute gain over all circles of the graph, 0 when the
    /// graph has no circle. Enumeration is exhaustive; intended for the
    /// small graphs this library targets.
    pub fn max_abs_circle_gain(&self) -> i64 {
        let mut max = 0i64;
        self.for_each_circle(&self.all_edges(), |_, gain| max = max.max(gain.abs()));
        max
    }
}

/// Outcome of a contraction, with enough data to transform bounds.
pub(crate) struct Contraction {
    pub graph: GainGraph,
    pub eta: SwitchingFunction,
    /// Per old vertex: the (1-based) index of the merged vertex it maps to.
    pub new_index: Vec<usize>,
}

/// A gain graph with an implicit root: the color of vertex `v_i` must
/// exceed the bound `h_i`. Root edges are never deleted or contracted;
/// only the bounds are transformed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGainGraph {
    graph: GainGraph,
    bounds: Vec<i64>,
}

impl RootedGainGraph {
    pub fn new(graph: GainGraph, bounds: Vec<i64>) -> Result<Self, Error> {
        if bounds.len() != graph.n() {
            return Err(Error::BoundsMismatch(bounds.len(), graph.n()));
        }
        Ok(RootedGainGraph { graph, bounds })
    }

    pub fn graph(&self) -> &GainGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn bounds(&self) -> &[i64] {
        &self.bounds
    }

    pub fn bound(&self, vertex: usize) -> i64 {
        self.bounds[vertex - 1]
    }

    /// Switching a rooted graph also shifts the bounds: `h_i` becomes
    /// `h_i + eta_i`.
    pub fn switch(&self, eta: &SwitchingFunction) -> RootedGainGraph {
        let bounds = self
            .bounds
            .iter()
            .zip(eta.values())
            .map(|(h, e)| h + e)
            .collect();
        RootedGainGraph {
            graph: self.graph.switch(eta),
            bounds,
        }
    }

    pub fn delete_edge(&self, index: usize) -> Result<RootedGainGraph, Error> {
        Ok(RootedGainGraph {
            graph: self.graph.delete_edge(index)?,
            bounds: self.bounds.clone(),
        })
    }

    /// Contracts a balanced edge set; the merged vertex for block `W`
    /// receives the bound `max_{v_j in W} (h_j + eta_j)`.
    pub fn contract(&self, subset: &EdgeSet) -> Result<RootedGainGraph, Error> {
        let c = self.graph.contract_data(subset)?;
        let mut bounds = vec![i64::MIN; c.graph.n()];
        for v in 1..=self.graph.n() {
            let shifted = self.bounds[v - 1] + c.eta.value(v);
            let slot = &mut bounds[c.new_index[v - 1] - 1];
            *slot = (*slot).max(shifted);
        }
        Ok(RootedGainGraph {
            graph: c.graph,
            bounds,
        })
    }
}
