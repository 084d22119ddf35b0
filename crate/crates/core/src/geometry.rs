//! The arrangement view: translation between affinographic hyperplane
//! arrangements and gain graphs, brute-force coloration oracles, and the
//! weighted cone decomposition of the positive orthant.
//!
//! The oracles enumerate every coloration in their box and are the ground
//! truth the counting engines are verified against. Their cost is counted
//! in points visited, capped by an explicit budget so a runaway input
//! fails loudly instead of hanging.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::flats::FlatSemilattice;
use crate::graph::GainGraph;

/// Default oracle budget, in points visited.
pub const DEFAULT_MAX_POINTS: u64 = 100_000_000;

/// A finite set of hyperplanes `x_j - x_i = g` in `n` coordinates,
/// canonicalized with `i < j` (so `(j, i, -g)` collapses onto
/// `(i, j, g)`) and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    hyperplanes: Vec<(usize, usize, i64)>,
}

impl Arrangement {
    pub fn new(
        n: usize,
        hyperplanes: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self, Error> {
        let mut canonical = Vec::new();
        for (i, j, g) in hyperplanes {
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange(v, n));
                }
            }
            if i == j {
                return Err(Error::DegenerateHyperplane(i, j));
            }
            canonical.push(if i < j { (i, j, g) } else { (j, i, -g) });
        }
        canonical.sort_unstable();
        canonical.dedup();
        Ok(Arrangement {
            n,
            hyperplanes: canonical,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperplanes(&self) -> &[(usize, usize, i64)] {
        &self.hyperplanes
    }
}

/// One edge per hyperplane: `x_j - x_i = g` becomes the edge `(i, j, g)`.
pub fn arrangement_to_gain_graph(arrangement: &Arrangement) -> GainGraph {
    GainGraph::new(arrangement.n, arrangement.hyperplanes.iter().copied())
        .expect("arrangement indices are validated")
}

/// The inverse translation; defined for loopless graphs only.
pub fn gain_graph_to_arrangement(graph: &GainGraph) -> Result<Arrangement, Error> {
    if graph.edges().iter().any(|e| e.is_loop()) {
        return Err(Error::LoopHasNoHyperplane);
    }
    Arrangement::new(
        graph.n(),
        graph.edges().iter().map(|e| (e.tail, e.head, e.gain)),
    )
}

fn check_budget(points: Option<u128>, max_points: u64) -> Result<u128, Error> {
    match points {
        Some(p) if p < max_points as u128 => Ok(p),
        Some(p) => Err(Error::PointBudgetExceeded {
            needed: p,
            limit: max_points,
        }),
        None => Err(Error::PointBudgetExceeded {
            needed: u128::MAX,
            limit: max_points,
        }),
    }
}

fn count_box(
    lows: &[i64],
    highs: &[i64],
    max_points: u64,
    mut proper: impl FnMut(&[i64]) -> bool,
) -> Result<BigInt, Error> {
    let n = lows.len();
    let mut points: Option<u128> = Some(1);
    for (lo, hi) in lows.iter().zip(highs) {
        let width = if hi >= lo { (hi - lo) as u128 + 1 } else { 0 };
        points = points.and_then(|p| p.checked_mul(width));
    }
    let points = check_budget(points, max_points)?;
    if points == 0 {
        return Ok(BigInt::zero());
    }
    let mut x = lows.to_vec();
    let mut count: u64 = 0;
    loop {
        if proper(&x) {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(BigInt::from(count));
            }
            if x[pos] < highs[pos] {
                x[pos] += 1;
                break;
            }
            x[pos] = lows[pos];
            pos += 1;
        }
    }
}

/// Exhaustive count of proper colorations with colors in `{1, ..., m}`.
pub fn oracle_integral(graph: &GainGraph, m: i64, max_points: u64) -> Result<BigInt, Error> {
    if graph.n() == 0 {
        return Ok(BigInt::one());
    }
    if m <= 0 {
        return Ok(BigInt::zero());
    }
    let lows = vec![1i64; graph.n()];
    let highs = vec![m; graph.n()];
    count_box(&lows, &highs, max_points, |x| graph.is_proper(x))
}

/// Exhaustive count of proper colorations with colors in the integers
/// mod `m`, gains read mod `m`.
pub fn oracle_modular(graph: &GainGraph, m: i64, max_points: u64) -> Result<BigInt, Error> {
    if m < 1 {
        return Err(Error::InvalidModulus(m));
    }
    if graph.n() == 0 {
        return Ok(BigInt::one());
    }
    let lows = vec![0i64; graph.n()];
    let highs = vec![m - 1; graph.n()];
    count_box(&lows, &highs, max_points, |x| graph.is_proper_mod(x, m))
}

/// Exhaustive count of proper colorations with the color of `v_i` drawn
/// from `(h_i, m]`. Serves as the ground truth for interval coloring and
/// for rooted gain graphs in general.
pub fn oracle_interval(
    graph: &GainGraph,
    bounds: &[i64],
    m: i64,
    max_points: u64,
) -> Result<BigInt, Error> {
    if bounds.len() != graph.n() {
        return Err(Error::BoundsMismatch(bounds.len(), graph.n()));
    }
    if graph.n() == 0 {
        return Ok(BigInt::one());
    }
    let lows: Vec<i64> = bounds.iter().map(|h| h + 1).collect();
    let highs = vec![m; graph.n()];
    count_box(&lows, &highs, max_points, |x| graph.is_proper(x))
}

/// A weighted relatively open cone of the orthant decomposition: strict
/// lower bounds on the surviving top vertices and difference equations
/// tying each absorbed vertex to its block's surviving vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    /// The Möbius value of the flat the cone comes from.
    pub weight: BigInt,
    /// Strict constraints `x_i > h_i`, one per surviving vertex.
    pub top_bounds: BTreeMap<usize, i64>,
    /// For each absorbed vertex `v_j`: a pair `(i, g)` meaning
    /// `x_j = x_i - g`, where `v_i` is the block's surviving vertex and
    /// `g` the switching value along the contraction path.
    pub equations: BTreeMap<usize, (usize, i64)>,
}

/// One cone per flat of the graph's rooting: the surviving vertex of each
/// block is its lowest-indexed top vertex, carrying the block height as a
/// strict lower bound; every other vertex is absorbed by an equation.
/// Summed over all cones containing a strictly positive integer point,
/// the weights total 1 exactly on proper colorations and 0 elsewhere.
pub fn cone_decomposition(graph: &GainGraph, max_flats: usize) -> Result<Vec<Cone>, Error> {
    let lat = FlatSemilattice::enumerate(graph, max_flats)?;
    let mut cones = Vec::with_capacity(lat.len());
    for (flat, mu) in lat.iter() {
        let mut top_bounds = BTreeMap::new();
        let mut equations = BTreeMap::new();
        for (block, &height) in flat.partition().iter().zip(flat.heights()) {
            let survivor = *block
                .iter()
                .find(|&&v| flat.eta(v) == 0)
                .expect("every block has a top vertex");
            top_bounds.insert(survivor, height);
            for &v in block {
                if v != survivor {
                    equations.insert(v, (survivor, flat.eta(v)));
                }
            }
        }
        cones.push(Cone {
            weight: mu.clone(),
            top_bounds,
            equations,
        });
    }
    Ok(cones)
}

/// Total weight of the cones containing a strictly positive integer
/// point.
pub fn point_total_weight(cones: &[Cone], point: &[i64]) -> Result<BigInt, Error> {
    if let Some(pos) = point.iter().position(|&c| c <= 0) {
        return Err(Error::VertexOutOfRange(pos + 1, point.len()));
    }
    let mut total = BigInt::zero();
    for cone in cones {
        let in_bounds = cone.top_bounds.iter().all(|(&v, &h)| point[v - 1] > h);
        let on_equations = cone
            .equations
            .iter()
            .all(|(&j, &(i, g))| point[j - 1] == point[i - 1] - g);
        if in_bounds && on_equations {
            total += &cone.weight;
        }
    }
    Ok(total)
}
