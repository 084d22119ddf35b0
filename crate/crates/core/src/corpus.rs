//! Deterministic graph corpus for the verification suites: the named
//! parametric families at small order plus a seeded sample of random
//! gain graphs.
//!
//! Random graphs have at most 4 vertices, at most 6 edges, and gains in
//! `[-2, 2]`. Loops are generated with nonzero gains only: a zero-gain
//! loop collapses every counting function to zero and sits in every flat,
//! so those degenerate inputs are exercised by dedicated unit tests
//! rather than corpus sweeps.

use std::collections::HashSet;

use crate::families::FamilySpec;
use crate::graph::GainGraph;

/// Small deterministic generator (splitmix64).
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// A uniformly shuffled `0..len`.
    pub fn permutation(&mut self, len: usize) -> Vec<usize> {
        let mut order: Vec<usize> = (0..len).collect();
        for i in (1..len).rev() {
            let j = self.below(i as u64 + 1) as usize;
            order.swap(i, j);
        }
        order
    }
}

/// The named families at orders 1 through 4, labeled.
pub fn named_families() -> Vec<(String, GainGraph)> {
    let mut graphs = Vec::new();
    for n in 1..=4u32 {
        let specs = [
            (format!("shi-{n}"), FamilySpec::shi(n)),
            (format!("linial-{n}"), FamilySpec::linial(n)),
            (format!("ext-shi-2-{n}"), FamilySpec::ext_shi(n, 2)),
            (format!("interval-0-2-{n}"), FamilySpec::interval(n, 0, 2)),
            (format!("interval-m1-1-{n}"), FamilySpec::interval(n, -1, 1)),
        ];
        for (label, spec) in specs {
            graphs.push((label, spec.graph().expect("family parameters are valid")));
        }
    }
    graphs
}

/// A seeded sample of distinct random gain graphs.
pub fn random_graphs(count: usize, seed: u64) -> Vec<GainGraph> {
    let mut rng = SplitMix64::new(seed);
    let mut seen: HashSet<GainGraph> = HashSet::new();
    let mut graphs = Vec::with_capacity(count);
    while graphs.len() < count {
        let n = 1 + rng.below(4) as usize;
        let edge_count = rng.below(7) as usize;
        let mut edges = Vec::with_capacity(edge_count);
        for _ in 0..edge_count {
            let tail = 1 + rng.below(n as u64) as usize;
            let head = 1 + rng.below(n as u64) as usize;
            let gain = if tail == head {
                // Nonzero loop gains only.
                let magnitude = rng.range_i64(1, 2);
                if rng.below(2) == 0 {
                    magnitude
                } else {
                    -magnitude
                }
            } else {
                rng.range_i64(-2, 2)
            };
            edges.push((tail, head, gain));
        }
        let graph = GainGraph::new(n, edges).expect("generated indices are in range");
        if seen.insert(graph.clone()) {
            graphs.push(graph);
        }
    }
    graphs
}

/// The standard corpus: every named family at orders up to 4 plus 220
/// random graphs.
pub fn standard_corpus() -> Vec<GainGraph> {
    let mut graphs: Vec<GainGraph> = named_families().into_iter().map(|(_, g)| g).collect();
    graphs.extend(random_graphs(220, 0x5EED_CAFE));
    graphs
}
