//! The semilattice of closed balanced edge sets, its Möbius function,
//! block heights, contraction loop data, and the broken-circle forest
//! cross-check.
//!
//! A balanced edge set is closed when it contains every edge whose gain
//! equals the gain of some path joining its endpoints inside the set,
//! paths of length zero included — so every zero-gain loop of the graph
//! lies in every flat, and the bottom flat is the closure of the empty
//! set. Flat identity is the pair (partition, normalized potential): two
//! generating sets with the same closure collapse onto one canonical key.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::graph::{EdgeSet, GainGraph, RootedGainGraph};

/// Default cutoff for flat enumeration. The semilattice can grow
/// super-exponentially; exceeding the cutoff reports
/// [`Error::FlatLimitExceeded`] instead of hanging.
pub const DEFAULT_MAX_FLATS: usize = 1_000_000;

/// A closed balanced edge set together with its derived data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedFlat {
    edges: EdgeSet,
    /// Blocks of the vertex partition, singletons included, sorted by
    /// their minimum vertex; members ascending.
    partition: Vec<Vec<usize>>,
    /// Per-vertex potential normalized per block so top vertices sit at 0
    /// and every other vertex is negative: the negated top-vertex
    /// switching values.
    potential: Vec<i64>,
    /// Per-block height: the maximum gain of a path in the block.
    heights: Vec<i64>,
    /// Gains (absolute values, sorted) of the loops of the contraction by
    /// this flat: switched gains of non-flat edges inside a block, plus
    /// the graph's nonzero-gain loops.
    loop_gains: Vec<i64>,
}

impl BalancedFlat {
    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn partition(&self) -> &[Vec<usize>] {
        &self.partition
    }

    pub fn block_count(&self) -> usize {
        self.partition.len()
    }

    pub fn potential(&self) -> &[i64] {
        &self.potential
    }

    /// The top-vertex switching value of a vertex (the negated potential).
    pub fn eta(&self, vertex: usize) -> i64 {
        -self.potential[vertex - 1]
    }

    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn loop_gains(&self) -> &[i64] {
        &self.loop_gains
    }

    /// Rank inside the semilattice: vertices minus blocks.
    pub fn rank(&self, n: usize) -> usize {
        n - self.partition.len()
    }
}

/// Internal arithmetic for potentials: plain integers, or residues mod m.
#[derive(Clone, Copy)]
enum Arith {
    Int,
    Mod(i64),
}

impl Arith {
    fn add(self, a: i64, b: i64) -> i64 {
        match self {
            Arith::Int => a + b,
            Arith::Mod(m) => (a + b).rem_euclid(m),
        }
    }

    fn sub(self, a: i64, b: i64) -> i64 {
        match self {
            Arith::Int => a - b,
            Arith::Mod(m) => (a - b).rem_euclid(m),
        }
    }

    fn matches(self, gain: i64, diff: i64) -> bool {
        match self {
            Arith::Int => gain == diff,
            Arith::Mod(m) => (gain - diff).rem_euclid(m) == 0,
        }
    }
}

/// Canonical proto-flat: partition as per-vertex representative (the
/// block's minimum vertex) plus normalized per-vertex potential.
#[derive(Clone)]
struct ProtoFlat {
    edges: EdgeSet,
    rep: Vec<usize>,
    theta: Vec<i64>,
}

fn closed_edges(graph: &GainGraph, rep: &[usize], theta: &[i64], arith: Arith) -> EdgeSet {
    graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| {
            rep[e.tail - 1] == rep[e.head - 1]
                && arith.matches(e.gain, arith.sub(theta[e.head - 1], theta[e.tail - 1]))
        })
        .map(|(i, _)| i)
        .collect()
}

/// Renormalizes the potential of one block: integrally the maximum goes to
/// 0 (top vertices at 0, others negative); modularly the representative
/// goes to 0.
fn normalize_block(rep: &[usize], theta: &mut [i64], block_rep: usize, arith: Arith) {
    match arith {
        Arith::Int => {
            let max = theta
                .iter()
                .zip(rep)
                .filter(|(_, &r)| r == block_rep)
                .map(|(&t, _)| t)
                .max()
                .expect("block is nonempty");
            for (t, &r) in theta.iter_mut().zip(rep) {
                if r == block_rep {
                    *t -= max;
                }
            }
        }
        Arith::Mod(m) => {
            let base = theta[block_rep - 1];
            for (t, &r) in theta.iter_mut().zip(rep) {
                if r == block_rep {
                    *t = (*t - base).rem_euclid(m);
                }
            }
        }
    }
}

/// Breadth-first enumeration of all closed balanced edge sets by
/// single-edge augmentation with a canonical-key memo.
fn enumerate_protos(
    graph: &GainGraph,
    arith: Arith,
    max_flats: usize,
) -> Result<Vec<ProtoFlat>, Error> {
    let n = graph.n();
    let mut bottom = ProtoFlat {
        edges: EdgeSet::new(),
        rep: (1..=n).collect(),
        theta: vec![0; n],
    };
    bottom.edges = closed_edges(graph, &bottom.rep, &bottom.theta, arith);

    let mut seen: HashMap<(Vec<usize>, Vec<i64>), usize> = HashMap::new();
    seen.insert((bottom.rep.clone(), bottom.theta.clone()), 0);
    let mut flats = vec![bottom];
    let mut next = 0;
    while next < flats.len() {
        let current = flats[next].clone();
        next += 1;
        for (idx, e) in graph.edges().iter().enumerate() {
            if current.edges.contains(&idx) {
                continue;
            }
            let (rt, rh) = (current.rep[e.tail - 1], current.rep[e.head - 1]);
            if rt == rh {
                // Same block: either the edge is already forced into the
                // flat (it is not) or adding it breaks balance.
                continue;
            }
            let mut rep = current.rep.clone();
            let mut theta = current.theta.clone();
            // Make the potentials agree across the new edge by shifting
            // the head's block, then merge the two blocks.
            let shift = arith.sub(arith.add(theta[e.tail - 1], e.gain), theta[e.head - 1]);
            let merged = rt.min(rh);
            for v in 0..n {
                if rep[v] == rh {
                    theta[v] = arith.add(theta[v], shift);
                }
                if rep[v] == rt || rep[v] == rh {
                    rep[v] = merged;
                }
            }
            normalize_block(&rep, &mut theta, merged, arith);
            let key = (rep, theta);
            if seen.contains_key(&key) {
                continue;
            }
            if flats.len() >= max_flats {
                return Err(Error::FlatLimitExceeded(max_flats));
            }
            let edges = closed_edges(graph, &key.0, &key.1, arith);
            seen.insert(key.clone(), flats.len());
            flats.push(ProtoFlat {
                edges,
                rep: key.0,
                theta: key.1,
            });
        }
    }

    // Deterministic order: a linear extension of inclusion, sorted by
    // canonical key within each size.
    flats.sort_by(|a, b| (a.edges.len(), &a.rep, &a.theta).cmp(&(b.edges.len(), &b.rep, &b.theta)));
    Ok(flats)
}

/// Möbius values by recursion over lower intervals: mu(bottom) = 1 and the
/// values over every lower set sum to zero. Expects the sets sorted by
/// size with the bottom first.
fn mobius_values(edge_sets: &[&EdgeSet], edge_count: usize) -> Vec<BigInt> {
    let words = edge_count.div_ceil(64).max(1);
    let masks: Vec<Vec<u64>> = edge_sets
        .iter()
        .map(|s| {
            let mut mask = vec![0u64; words];
            for &e in s.iter() {
                mask[e / 64] |= 1 << (e % 64);
            }
            mask
        })
        .collect();
    let subset = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x & y == *x);

    let mut mu: Vec<BigInt> = Vec::with_capacity(edge_sets.len());
    for i in 0..edge_sets.len() {
        if i == 0 {
            mu.push(BigInt::one());
            continue;
        }
        let mut sum = BigInt::zero();
        for j in 0..i {
            if edge_sets[j].len() < edge_sets[i].len() && subset(&masks[j], &masks[i]) {
                sum += &mu[j];
            }
        }
        mu.push(-sum);
    }
    mu
}

fn flat_from_proto(graph: &GainGraph, proto: &ProtoFlat) -> BalancedFlat {
    let n = graph.n();
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 1..=n {
        blocks.entry(proto.rep[v - 1]).or_default().push(v);
    }
    let partition: Vec<Vec<usize>> = blocks.into_values().collect();
    let heights = partition
        .iter()
        .map(|block| block.iter().map(|&v| -proto.theta[v - 1]).max().unwrap())
        .collect();
    let mut loop_gains: Vec<i64> = graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(idx, e)| {
            !proto.edges.contains(idx) && proto.rep[e.tail - 1] == proto.rep[e.head - 1]
        })
        .map(|(_, e)| (e.gain - (proto.theta[e.head - 1] - proto.theta[e.tail - 1])).abs())
        .collect();
    loop_gains.sort_unstable();
    BalancedFlat {
        edges: proto.edges.clone(),
        partition,
        potential: proto.theta.clone(),
        heights,
        loop_gains,
    }
}

/// All closed balanced edge sets of a graph, in a fixed linear extension
/// of inclusion, with the Möbius function from the bottom flat.
#[derive(Debug, Clone)]
pub struct FlatSemilattice {
    graph: GainGraph,
    flats: Vec<BalancedFlat>,
    mobius: Vec<BigInt>,
}

impl FlatSemilattice {
    /// Enumerates the semilattice. Fails with
    /// [`Error::FlatLimitExceeded`] when more than `max_flats` flats
    /// exist.
    pub fn enumerate(graph: &GainGraph, max_flats: usize) -> Result<Self, Error> {
        let protos = enumerate_protos(graph, Arith::Int, max_flats)?;
        let edge_sets: Vec<&EdgeSet> = protos.iter().map(|p| &p.edges).collect();
        let mobius = mobius_values(&edge_sets, graph.edge_count());
        let flats = protos.iter().map(|p| flat_from_proto(graph, p)).collect();
        Ok(FlatSemilattice {
            graph: graph.clone(),
            flats,
            mobius,
        })
    }

    pub fn graph(&self) -> &GainGraph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[BalancedFlat] {
        &self.flats
    }

    pub fn flat(&self, index: usize) -> &BalancedFlat {
        &self.flats[index]
    }

    /// Möbius value from the bottom flat to the indexed flat.
    pub fn mobius(&self, index: usize) -> &BigInt {
        &self.mobius[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BalancedFlat, &BigInt)> {
        self.flats.iter().zip(&self.mobius)
    }

    /// Containment order between flats.
    pub fn leq(&self, lower: usize, upper: usize) -> bool {
        self.flats[lower].edges.is_subset(&self.flats[upper].edges)
    }

    /// Sum of Möbius values over all flats contained in `upper`. This is
    /// zero whenever `upper` properly contains the bottom flat.
    pub fn mobius_lower_sum(&self, upper: &EdgeSet) -> BigInt {
        self.iter()
            .filter(|(flat, _)| flat.edges.is_subset(upper))
            .map(|(_, mu)| mu)
            .sum()
    }
}

/// Modular flats: enumerates the closed balanced sets of a mod-`m`
/// reduced graph and returns each flat's block count with its Möbius
/// value.
pub(crate) fn enumerate_modular(
    reduced: &GainGraph,
    m: i64,
    max_flats: usize,
) -> Result<Vec<(usize, BigInt)>, Error> {
    let protos = enumerate_protos(reduced, Arith::Mod(m), max_flats)?;
    let edge_sets: Vec<&EdgeSet> = protos.iter().map(|p| &p.edges).collect();
    let mobius = mobius_values(&edge_sets, reduced.edge_count());
    Ok(protos
        .iter()
        .zip(mobius)
        .map(|(p, mu)| {
            let mut reps: Vec<usize> = p.rep.clone();
            reps.sort_unstable();
            reps.dedup();
            (reps.len(), mu)
        })
        .collect())
}

/// The minimal closed superset of a balanced edge set.
pub fn closure(graph: &GainGraph, subset: &EdgeSet) -> Result<BalancedFlat, Error> {
    let data = graph.balance_data(subset)?.ok_or(Error::Unbalanced)?;
    let n = graph.n();
    let mut theta = data.theta;
    let rep = data.comp;
    // Convert the raw potential to the top-at-zero normal form.
    let mut max_of: BTreeMap<usize, i64> = BTreeMap::new();
    for v in 0..n {
        let entry = max_of.entry(rep[v]).or_insert(i64::MIN);
        *entry = (*entry).max(theta[v]);
    }
    for v in 0..n {
        theta[v] -= max_of[&rep[v]];
    }
    let edges = closed_edges(graph, &rep, &theta, Arith::Int);
    Ok(flat_from_proto(graph, &ProtoFlat { edges, rep, theta }))
}

/// Per-block heights of a flat of the nonroot graph of a rooted gain
/// graph: `max_{v_j in W} (h_j + eta_j)`, aligned with the flat's
/// partition.
pub fn rooted_heights(rooted: &RootedGainGraph, flat: &BalancedFlat) -> Vec<i64> {
    flat.partition()
        .iter()
        .map(|block| {
            block
                .iter()
                .map(|&v| rooted.bound(v) + flat.eta(v))
                .max()
                .unwrap()
        })
        .collect()
}

/// Counts the forests inside a flat that span the flat's partition and
/// contain no broken balanced circle — a balanced circle of the graph
/// minus its last edge in the given ordering. The count equals the
/// absolute Möbius value of the flat for every edge ordering.
///
/// Circles here have length at least two: forests cannot contain loops,
/// and the zero-gain loops present in every flat do not affect the count.
pub fn nbc_forest_count(graph: &GainGraph, flat: &BalancedFlat, ordering: &[usize]) -> BigInt {
    assert_eq!(
        ordering.len(),
        graph.edge_count(),
        "ordering must cover every edge"
    );
    let mut position = vec![usize::MAX; graph.edge_count()];
    for (pos, &idx) in ordering.iter().enumerate() {
        assert!(
            position[idx] == usize::MAX,
            "ordering must be a permutation"
        );
        position[idx] = pos;
    }

    let mut broken: Vec<EdgeSet> = Vec::new();
    graph.for_each_circle(flat.edges(), |circle, gain| {
        if gain == 0 && circle.len() >= 2 {
            let last = *circle.iter().max_by_key(|&&e| position[e]).unwrap();
            let set: EdgeSet = circle.iter().copied().filter(|&e| e != last).collect();
            if !broken.contains(&set) {
                broken.push(set);
            }
        }
    });

    let links: Vec<usize> = flat
        .edges()
        .iter()
        .copied()
        .filter(|&e| !graph.edges()[e].is_loop())
        .collect();
    let rank = graph.n() - flat.block_count();

    fn acyclic(graph: &GainGraph, chosen: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..graph.n()).collect();
        fn find(parent: &mut [usize], v: usize) -> usize {
            if parent[v] != v {
                parent[v] = find(parent, parent[v]);
            }
            parent[v]
        }
        for &idx in chosen {
            let e = graph.edges()[idx];
            let (a, b) = (find(&mut parent, e.tail - 1), find(&mut parent, e.head - 1));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    // Every acyclic subset of the flat's links of full rank spans the
    // flat's partition, so only the size, acyclicity, and the broken
    // circles need checking.
    let mut count = BigInt::zero();
    let mut chosen: Vec<usize> = Vec::with_capacity(rank);
    fn search(
        graph: &GainGraph,
        links: &[usize],
        from: usize,
        rank: usize,
        chosen: &mut Vec<usize>,
        broken: &[EdgeSet],
        count: &mut BigInt,
    ) {
        if chosen.len() == rank {
            if acyclic(graph, chosen)
                && !broken.iter().any(|b| b.iter().all(|e| chosen.contains(e)))
            {
                *count += 1;
            }
            return;
        }
        if links.len() - from < rank - chosen.len() {
            return;
        }
        for i in from..links.len() {
            chosen.push(links[i]);
            search(graph, links, i + 1, rank, chosen, broken, count);
            chosen.pop();
        }
    }
    search(graph, &links, 0, rank, &mut chosen, &broken, &mut count);
    count
}
