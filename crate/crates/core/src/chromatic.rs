//! Counting functions of a gain graph: the integral chromatic function
//! as a piecewise polynomial and by deletion–contraction, the balanced
//! chromatic (characteristic) polynomial and region count, interval
//! coloring, and the modular chromatic function.
//!
//! All counts are exact arbitrary-precision integers. An integral count
//! is the number of proper colorations with colors in `{1, ..., m}`
//! (for a rooted graph, in `(h_i, m]` per vertex); it is 0 for every
//! `m < 0` and, on a nonempty graph, for `m = 0`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::flats::{self, FlatSemilattice};
use crate::graph::{Edge, EdgeSet, GainGraph, RootedGainGraph};

/// One piece of the integral chromatic function: a signed multiple of the
/// product of positive parts `[m - r]^+` over the term's roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseTerm {
    /// `+1` or `-1`; equals `(-1)^(n - d)` where `d` is the number of
    /// roots.
    pub sign: i8,
    /// Positive multiplicity: the absolute Möbius value (merged over flats
    /// sharing the same root multiset).
    pub mu: BigInt,
    /// Weakly decreasing roots; the term contributes only once `m`
    /// exceeds the largest of them.
    pub roots: Vec<i64>,
}

impl PiecewiseTerm {
    /// Product of `(m - r)` over the roots, truncated to 0 unless every
    /// factor is positive.
    pub fn positive_part(&self, m: i64) -> BigInt {
        if self.roots.iter().any(|&r| m <= r) {
            return BigInt::zero();
        }
        self.roots.iter().map(|&r| BigInt::from(m - r)).product()
    }

    /// The same product without truncation.
    pub fn untruncated(&self, m: i64) -> BigInt {
        self.roots.iter().map(|&r| BigInt::from(m - r)).product()
    }
}

/// The integral chromatic function in piecewise-polynomial form:
/// a sum of signed terms, each active from its largest root upward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermSum {
    n: usize,
    terms: Vec<PiecewiseTerm>,
}

impl TermSum {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[PiecewiseTerm] {
        &self.terms
    }

    /// Evaluates the positive-part sum at an integer. Returns 0 for every
    /// `m < 0`.
    pub fn eval(&self, m: i64) -> BigInt {
        if m < 0 {
            return BigInt::zero();
        }
        let mut total = BigInt::zero();
        for term in &self.terms {
            let product = term.positive_part(m);
            if product.is_zero() {
                continue;
            }
            if term.sign >= 0 {
                total += &term.mu * product;
            } else {
                total -= &term.mu * product;
            }
        }
        total
    }

    /// The largest root over all terms; evaluation agrees with
    /// [`TermSum::collapsed_polynomial`] from there on.
    pub fn max_root(&self) -> i64 {
        self.terms
            .iter()
            .flat_map(|t| t.roots.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// The single polynomial the function becomes once `m` is at least
    /// every root: the untruncated sum of all terms.
    pub fn collapsed_polynomial(&self) -> Polynomial {
        let mut poly = Polynomial::zero();
        for term in &self.terms {
            let mut scale = term.mu.clone();
            if term.sign < 0 {
                scale = -scale;
            }
            poly.add_scaled(&Polynomial::from_roots(&term.roots), &scale);
        }
        poly
    }
}

/// Dense univariate integer polynomial, coefficients ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monic product of `(x - r)` over the given roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        let mut coeffs = vec![BigInt::one()];
        for &r in roots {
            let mut next = vec![BigInt::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= BigInt::from(r) * c;
            }
            coeffs = next;
        }
        Polynomial { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add_scaled(&mut self, other: &Polynomial, scale: &BigInt) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (c, o) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *c += o * scale;
        }
        self.trim();
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut value = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            value = value * x + c;
        }
        value
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }
}

/// The integral chromatic function of a rooted gain graph as a
/// [`TermSum`]: one term per closed balanced set of the nonroot graph,
/// with multiplicity the absolute Möbius value and roots the per-block
/// heights `max (h_j + eta_j)`. Terms with equal root multisets are
/// merged. A zero-gain loop forces the all-zero sum: no coloration is
/// ever proper.
pub fn integral_terms(rooted: &RootedGainGraph, max_flats: usize) -> Result<TermSum, Error> {
    let graph = rooted.graph();
    let n = graph.n();
    if graph.has_zero_gain_loop() {
        return Ok(TermSum {
            n,
            terms: Vec::new(),
        });
    }
    let lat = FlatSemilattice::enumerate(graph, max_flats)?;
    let mut merged: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for (flat, mu) in lat.iter() {
        let mut roots = flats::rooted_heights(rooted, flat);
        roots.sort_unstable_by(|a, b| b.cmp(a));
        *merged.entry(roots).or_insert_with(BigInt::zero) += mu;
    }
    let mut terms: Vec<PiecewiseTerm> = merged
        .into_iter()
        .filter(|(_, total)| !total.is_zero())
        .map(|(roots, total)| PiecewiseTerm {
            sign: if total.is_negative() { -1 } else { 1 },
            mu: total.abs(),
            roots,
        })
        .collect();
    terms.sort_by(|a, b| {
        b.roots
            .len()
            .cmp(&a.roots.len())
            .then_with(|| a.roots.cmp(&b.roots))
    });
    Ok(TermSum { n, terms })
}

/// Number of proper colorations of an unrooted graph with colors in
/// `{1, ..., m}`, via the rooting's term sum.
pub fn integral_chromatic(graph: &GainGraph, m: i64, max_flats: usize) -> Result<BigInt, Error> {
    Ok(integral_terms(&graph.rooting(), max_flats)?.eval(m))
}

/// The same count by deletion–contraction on nonroot links, memoized on
/// the canonical rooted graph. The base case is a link-free graph: the
/// product over vertices of 0 for a zero-gain loop and `(m - h)^+`
/// otherwise.
pub fn integral_chromatic_dc(rooted: &RootedGainGraph, m: i64) -> BigInt {
    if m < 0 {
        return BigInt::zero();
    }
    let mut memo: HashMap<(Vec<Edge>, Vec<i64>), BigInt> = HashMap::new();
    dc_rec(rooted, m, &mut memo)
}

fn dc_rec(
    rooted: &RootedGainGraph,
    m: i64,
    memo: &mut HashMap<(Vec<Edge>, Vec<i64>), BigInt>,
) -> BigInt {
    let key = (rooted.graph().edges().to_vec(), rooted.bounds().to_vec());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let value = match rooted.graph().link_indices().next() {
        Some(idx) => {
            let deleted = rooted.delete_edge(idx).expect("link index is valid");
            let contracted = rooted
                .contract(&EdgeSet::from([idx]))
                .expect("a single link is balanced");
            dc_rec(&deleted, m, memo) - dc_rec(&contracted, m, memo)
        }
        None => {
            let mut product = BigInt::one();
            for v in 1..=rooted.n() {
                let zero_loop = rooted
                    .graph()
                    .edges()
                    .iter()
                    .any(|e| e.is_loop() && e.tail == v && e.gain == 0);
                if zero_loop {
                    product = BigInt::zero();
                    break;
                }
                product *= BigInt::from((m - rooted.bound(v)).max(0));
            }
            product
        }
    };
    memo.insert(key, value.clone());
    value
}

/// The balanced chromatic polynomial: the Möbius-weighted sum of
/// `lambda^(block count)` over all flats. Equals the characteristic
/// polynomial of the corresponding affinographic arrangement; monic of
/// degree `n`.
pub fn balanced_chromatic_polynomial(
    graph: &GainGraph,
    max_flats: usize,
) -> Result<Polynomial, Error> {
    let lat = FlatSemilattice::enumerate(graph, max_flats)?;
    let mut coeffs = vec![BigInt::zero(); graph.n() + 1];
    for (flat, mu) in lat.iter() {
        coeffs[flat.block_count()] += mu;
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

/// Number of regions the arrangement cuts: `(-1)^n p(-1)` on the balanced
/// chromatic polynomial.
pub fn region_count(graph: &GainGraph, max_flats: usize) -> Result<BigInt, Error> {
    let p = balanced_chromatic_polynomial(graph, max_flats)?;
    let value = p.eval_i64(-1);
    Ok(if graph.n().is_multiple_of(2) {
        value
    } else {
        -value
    })
}

/// Interval coloring of an ordinary graph: proper colorations with the
/// color of `v_i` in `(h_i, m]`. The graph must carry all-zero gains; the
/// count is the rooted term sum of the graph with bounds `h`.
pub fn interval_chromatic(
    graph: &GainGraph,
    bounds: &[i64],
    m: i64,
    max_flats: usize,
) -> Result<BigInt, Error> {
    assert!(
        graph.edges().iter().all(|e| e.gain == 0),
        "interval coloring requires an all-zero gain graph"
    );
    let rooted = RootedGainGraph::new(graph.clone(), bounds.to_vec())?;
    Ok(integral_terms(&rooted, max_flats)?.eval(m))
}

/// Number of proper colorations with colors in the integers mod `m`,
/// gains reduced mod `m`. Computed over the flats of the reduced graph;
/// a loop whose gain reduces to zero makes every coloration improper.
/// This is the ground-truth modular count.
pub fn modular_chromatic(graph: &GainGraph, m: i64, max_flats: usize) -> Result<BigInt, Error> {
    if m < 1 {
        return Err(Error::InvalidModulus(m));
    }
    let reduced = graph.reduce_mod(m);
    if reduced.has_zero_gain_loop() {
        return Ok(BigInt::zero());
    }
    let flats = flats::enumerate_modular(&reduced, m, max_flats)?;
    let mut total = BigInt::zero();
    for (blocks, mu) in flats {
        total += mu * BigInt::from(m).pow(blocks as u32);
    }
    Ok(total)
}

/// The loop-gain substitution rule evaluated verbatim over the integral
/// flat semilattice: a flat contributes 0 when `m` divides one of its
/// contraction's loop gains and `m^(block count)` otherwise, weighted by
/// its Möbius value.
///
/// This agrees with [`modular_chromatic`] exactly when `m` divides no
/// nonzero loop gain of any flat (equivalently, no nonzero circle gain).
/// At small moduli the two can disagree — `[0,1]K2` at `m = 1` evaluates
/// to 1 here while no proper coloration exists — so both values are
/// surfaced rather than reconciled.
pub fn modular_substitution_rule(
    graph: &GainGraph,
    m: i64,
    max_flats: usize,
) -> Result<BigInt, Error> {
    if m < 1 {
        return Err(Error::InvalidModulus(m));
    }
    let lat = FlatSemilattice::enumerate(graph, max_flats)?;
    let mut total = BigInt::zero();
    for (flat, mu) in lat.iter() {
        if flat.loop_gains().iter().any(|&g| g % m == 0) {
            continue;
        }
        total += mu * BigInt::from(m).pow(flat.block_count() as u32);
    }
    Ok(total)
}

/// The modular deletion–contraction identity for a link `e`: returns the
/// pair `(count of the graph, count of the deletion minus count of the
/// contraction)`; the two components are always equal.
pub fn modular_dc_check(
    graph: &GainGraph,
    edge_index: usize,
    m: i64,
    max_flats: usize,
) -> Result<(BigInt, BigInt), Error> {
    if edge_index >= graph.edge_count() {
        return Err(Error::UnknownEdge(edge_index, graph.edge_count()));
    }
    if graph.edges()[edge_index].is_loop() {
        return Err(Error::LoopNotContractible(edge_index));
    }
    let whole = modular_chromatic(graph, m, max_flats)?;
    let deleted = modular_chromatic(&graph.delete_edge(edge_index)?, m, max_flats)?;
    let contracted =
        modular_chromatic(&graph.contract(&EdgeSet::from([edge_index]))?, m, max_flats)?;
    Ok((whole, deleted - contracted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flats::DEFAULT_MAX_FLATS;
    use crate::geometry::{oracle_integral, DEFAULT_MAX_POINTS};

    fn graph(n: usize, edges: &[(usize, usize, i64)]) -> GainGraph {
        GainGraph::new(n, edges.iter().copied()).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn terms_of(g: &GainGraph) -> TermSum {
        integral_terms(&g.rooting(), DEFAULT_MAX_FLATS).unwrap()
    }

    #[test]
    fn shi_k2_terms() {
        // m^2 - m - (m-1)^+.
        let t = terms_of(&graph(2, &[(1, 2, 0), (1, 2, 1)]));
        assert_eq!(t.terms().len(), 3);
        assert_eq!(
            t.terms()[0],
            PiecewiseTerm {
                sign: 1,
                mu: big(1),
                roots: vec![0, 0]
            }
        );
        assert_eq!(
            t.terms()[1],
            PiecewiseTerm {
                sign: -1,
                mu: big(1),
                roots: vec![0]
            }
        );
        assert_eq!(
            t.terms()[2],
            PiecewiseTerm {
                sign: -1,
                mu: big(1),
                roots: vec![1]
            }
        );
        assert_eq!(t.eval(3), big(4));
    }

    #[test]
    fn linial_k2_terms() {
        // m^2 - (m-1)^+; the count at m = 1 is 1.
        let t = terms_of(&graph(2, &[(1, 2, 1)]));
        assert_eq!(t.terms().len(), 2);
        assert_eq!(
            t.terms()[1],
            PiecewiseTerm {
                sign: -1,
                mu: big(1),
                roots: vec![1]
            }
        );
        assert_eq!(t.eval(1), big(1));
    }

    #[test]
    fn single_vertex_terms() {
        let t = terms_of(&GainGraph::edgeless(1));
        assert_eq!(t.terms().len(), 1);
        assert_eq!(t.terms()[0].roots, vec![0]);
        assert_eq!(t.eval(7), big(7));
    }

    #[test]
    fn eval_examples() {
        // Shi on three vertices: only the descending coloration fits m = 3.
        let shi3 = graph(
            3,
            &[
                (1, 2, 0),
                (1, 2, 1),
                (1, 3, 0),
                (1, 3, 1),
                (2, 3, 0),
                (2, 3, 1),
            ],
        );
        let t = terms_of(&shi3);
        assert_eq!(t.eval(3), big(1));
        assert_eq!(
            t.eval(3),
            oracle_integral(&shi3, 3, DEFAULT_MAX_POINTS).unwrap()
        );

        // Any nonempty sum vanishes at m = 0 and below.
        assert_eq!(t.eval(0), big(0));
        assert_eq!(t.eval(-5), big(0));

        let shi2 = graph(2, &[(1, 2, 0), (1, 2, 1)]);
        assert_eq!(terms_of(&shi2).eval(5), big(16));
    }

    #[test]
    fn empty_graph_counts_one() {
        let t = terms_of(&GainGraph::edgeless(0));
        assert_eq!(t.eval(0), big(1));
        assert_eq!(t.eval(9), big(1));
        assert_eq!(t.eval(-1), big(0));
    }

    #[test]
    fn integral_chromatic_examples() {
        let shi3 = graph(
            3,
            &[
                (1, 2, 0),
                (1, 2, 1),
                (1, 3, 0),
                (1, 3, 1),
                (2, 3, 0),
                (2, 3, 1),
            ],
        );
        assert_eq!(
            integral_chromatic(&shi3, 4, DEFAULT_MAX_FLATS).unwrap(),
            big(8)
        );

        let sym = graph(2, &[(1, 2, -1), (1, 2, 0), (1, 2, 1)]);
        assert_eq!(
            integral_chromatic(&sym, 3, DEFAULT_MAX_FLATS).unwrap(),
            big(2)
        );
        assert_eq!(
            integral_chromatic(&sym, 3, DEFAULT_MAX_FLATS).unwrap(),
            oracle_integral(&sym, 3, DEFAULT_MAX_POINTS).unwrap()
        );

        let looped = graph(2, &[(1, 1, 0), (1, 2, 1)]);
        for m in 0..6 {
            assert_eq!(
                integral_chromatic(&looped, m, DEFAULT_MAX_FLATS).unwrap(),
                big(0)
            );
        }
    }

    #[test]
    fn deletion_contraction_examples() {
        // Deleting the zero edge of rooted [0,1]K2 leaves m^2 - (m-1);
        // contracting it leaves a gain-1 loop worth m. At m = 3: 7 - 3.
        let rooted = graph(2, &[(1, 2, 0), (1, 2, 1)]).rooting();
        assert_eq!(integral_chromatic_dc(&rooted, 3), big(4));

        let single = RootedGainGraph::new(GainGraph::edgeless(1), vec![2]).unwrap();
        assert_eq!(integral_chromatic_dc(&single, 5), big(3));

        let zero_loop = RootedGainGraph::new(graph(1, &[(1, 1, 0)]), vec![0]).unwrap();
        for m in 0..6 {
            assert_eq!(integral_chromatic_dc(&zero_loop, m), big(0));
        }
    }

    #[test]
    fn dc_matches_terms_on_negative_bounds() {
        let rooted = RootedGainGraph::new(graph(2, &[(1, 2, 1)]), vec![-2, 1]).unwrap();
        let t = integral_terms(&rooted, DEFAULT_MAX_FLATS).unwrap();
        for m in 0..8 {
            assert_eq!(integral_chromatic_dc(&rooted, m), t.eval(m));
        }
    }

    #[test]
    fn characteristic_polynomial_examples() {
        let shi2 = graph(2, &[(1, 2, 0), (1, 2, 1)]);
        let p = balanced_chromatic_polynomial(&shi2, DEFAULT_MAX_FLATS).unwrap();
        assert_eq!(p, Polynomial::from_i64_coeffs(&[0, -2, 1]));

        let p = balanced_chromatic_polynomial(&GainGraph::edgeless(3), DEFAULT_MAX_FLATS).unwrap();
        assert_eq!(p, Polynomial::from_i64_coeffs(&[0, 0, 0, 1]));

        // lambda (lambda - 3)^2 = lambda^3 - 6 lambda^2 + 9 lambda.
        let shi3 = graph(
            3,
            &[
                (1, 2, 0),
                (1, 2, 1),
                (1, 3, 0),
                (1, 3, 1),
                (2, 3, 0),
                (2, 3, 1),
            ],
        );
        let p = balanced_chromatic_polynomial(&shi3, DEFAULT_MAX_FLATS).unwrap();
        assert_eq!(p, Polynomial::from_i64_coeffs(&[0, 9, -6, 1]));
    }

    #[test]
    fn region_count_examples() {
        let shi2 = graph(2, &[(1, 2, 0), (1, 2, 1)]);
        assert_eq!(region_count(&shi2, DEFAULT_MAX_FLATS).unwrap(), big(3));
        let shi3 = graph(
            3,
            &[
                (1, 2, 0),
                (1, 2, 1),
                (1, 3, 0),
                (1, 3, 1),
                (2, 3, 0),
                (2, 3, 1),
            ],
        );
        assert_eq!(region_count(&shi3, DEFAULT_MAX_FLATS).unwrap(), big(16));
        assert_eq!(
            region_count(&GainGraph::edgeless(4), DEFAULT_MAX_FLATS).unwrap(),
            big(1)
        );
    }

    #[test]
    fn interval_coloring_examples() {
        // K2 with h = (0, 1): (m - 1)^2.
        let k2 = graph(2, &[(1, 2, 0)]);
        assert_eq!(
            interval_chromatic(&k2, &[0, 1], 3, DEFAULT_MAX_FLATS).unwrap(),
            big(4)
        );

        // h = 0 recovers the ordinary chromatic polynomial.
        assert_eq!(
            interval_chromatic(&k2, &[0, 0], 5, DEFAULT_MAX_FLATS).unwrap(),
            big(20)
        );

        assert_eq!(
            interval_chromatic(&k2, &[0, 0], 1, DEFAULT_MAX_FLATS).unwrap(),
            big(0)
        );
    }

    #[test]
    fn modular_examples() {
        let shi2 = graph(2, &[(1, 2, 0), (1, 2, 1)]);
        assert_eq!(
            modular_chromatic(&shi2, 3, DEFAULT_MAX_FLATS).unwrap(),
            big(3)
        );
        assert_eq!(
            modular_chromatic(&shi2, 1, DEFAULT_MAX_FLATS).unwrap(),
            big(0)
        );

        // Above the largest circle gain the modular count is the
        // characteristic polynomial.
        let p = balanced_chromatic_polynomial(&shi2, DEFAULT_MAX_FLATS).unwrap();
        for m in 2..6 {
            assert_eq!(
                modular_chromatic(&shi2, m, DEFAULT_MAX_FLATS).unwrap(),
                p.eval_i64(m)
            );
        }

        assert_eq!(
            modular_chromatic(&shi2, 0, DEFAULT_MAX_FLATS),
            Err(Error::InvalidModulus(0))
        );
    }

    #[test]
    fn substitution_rule_examples() {
        let shi2 = graph(2, &[(1, 2, 0), (1, 2, 1)]);
        assert_eq!(
            modular_substitution_rule(&shi2, 3, DEFAULT_MAX_FLATS).unwrap(),
            big(3)
        );
        // At m = 1 the rule keeps the bottom term: 1, not the true 0.
        assert_eq!(
            modular_substitution_rule(&shi2, 1, DEFAULT_MAX_FLATS).unwrap(),
            big(1)
        );

        // Parallel gains 0 and 2 at m = 2: the rule yields 4, the truth 2.
        let g = graph(2, &[(1, 2, 0), (1, 2, 2)]);
        assert_eq!(
            modular_substitution_rule(&g, 2, DEFAULT_MAX_FLATS).unwrap(),
            big(4)
        );
        assert_eq!(modular_chromatic(&g, 2, DEFAULT_MAX_FLATS).unwrap(), big(2));
    }

    #[test]
    fn modular_dc_examples() {
        let shi2 = graph(2, &[(1, 2, 0), (1, 2, 1)]);
        assert_eq!(
            modular_dc_check(&shi2, 0, 1, DEFAULT_MAX_FLATS).unwrap(),
            (big(0), big(0))
        );

        let linial = graph(2, &[(1, 2, 1)]);
        assert_eq!(
            modular_dc_check(&linial, 0, 4, DEFAULT_MAX_FLATS).unwrap(),
            (big(12), big(12))
        );

        let k2 = graph(2, &[(1, 2, 0)]);
        assert_eq!(
            modular_dc_check(&k2, 0, 2, DEFAULT_MAX_FLATS).unwrap(),
            (big(2), big(2))
        );

        let looped = graph(1, &[(1, 1, 2)]);
        assert_eq!(
            modular_dc_check(&looped, 0, 2, DEFAULT_MAX_FLATS).unwrap_err(),
            Error::LoopNotContractible(0)
        );
    }

    #[test]
    fn collapsed_polynomial_of_linial() {
        let t = terms_of(&graph(2, &[(1, 2, 1)]));
        assert_eq!(
            t.collapsed_polynomial(),
            Polynomial::from_i64_coeffs(&[1, -1, 1])
        );
        for m in t.max_root()..10 {
            assert_eq!(t.eval(m), t.collapsed_polynomial().eval_i64(m));
        }
    }

    #[test]
    fn polynomial_basics() {
        let p = Polynomial::from_roots(&[1, 1]);
        assert_eq!(p, Polynomial::from_i64_coeffs(&[1, -2, 1]));
        assert_eq!(p.eval_i64(4), big(9));
        assert!(Polynomial::zero().is_zero());
        assert_eq!(Polynomial::from_roots(&[]).degree(), Some(0));
    }
}
