//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Every count asserted here is exact; the brute-force oracles in
//! `affinograph::geometry` are the ground truth throughout. Run with
//! `cargo test -p affinograph-cli --test acceptance`.

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use affinograph::chromatic::{
    balanced_chromatic_polynomial, integral_chromatic, integral_chromatic_dc, integral_terms,
    modular_chromatic, modular_dc_check, modular_substitution_rule, region_count, Polynomial,
};
use affinograph::corpus::{standard_corpus, SplitMix64};
use affinograph::families::{interval_complete_graph, shi_closed_form, zero_b_closed_form};
use affinograph::flats::{nbc_forest_count, FlatSemilattice, DEFAULT_MAX_FLATS};
use affinograph::geometry::{
    cone_decomposition, oracle_integral, oracle_interval, oracle_modular, point_total_weight,
    DEFAULT_MAX_POINTS,
};
use affinograph::GainGraph;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn shi(n: u32) -> GainGraph {
    interval_complete_graph(n, 0, 1).unwrap()
}

#[test]
fn criterion_01_shi_counts() {
    let start = Instant::now();
    for n in 2..=4u32 {
        let graph = shi(n);
        for m in 0..=10i64 {
            let expected = if m >= n as i64 {
                big(m - n as i64 + 1).pow(n)
            } else {
                BigInt::zero()
            };
            let engine = integral_chromatic(&graph, m, DEFAULT_MAX_FLATS).unwrap();
            let oracle = oracle_integral(&graph, m, DEFAULT_MAX_POINTS).unwrap();
            assert_eq!(engine, expected, "shi n={n} m={m}");
            assert_eq!(engine, oracle, "shi n={n} m={m} oracle");
        }
    }
    assert!(start.elapsed() < Duration::from_secs(60));
    println!("criterion 1 (Shi counts vs closed form and oracle): PASS");
}

#[test]
fn criterion_02_extended_shi() {
    let graph = interval_complete_graph(3, -1, 2).unwrap();
    for m in 0..=12i64 {
        let closed = shi_closed_form(3, 2, m);
        let engine = integral_chromatic(&graph, m, DEFAULT_MAX_FLATS).unwrap();
        let oracle = oracle_integral(&graph, m, DEFAULT_MAX_POINTS).unwrap();
        assert_eq!(engine, closed, "ext-shi m={m}");
        assert_eq!(engine, oracle, "ext-shi m={m} oracle");
        let expected = if m >= 3 + 2 {
            big(m - 4).pow(3)
        } else {
            BigInt::zero()
        };
        assert_eq!(closed, expected, "ext-shi threshold m={m}");
    }
    println!("criterion 2 (extended Shi n=3 s=2): PASS");
}

#[test]
fn criterion_03_linial_polynomials() {
    let expected: [&[i64]; 3] = [&[0, 1], &[1, -1, 1], &[-4, 6, -3, 1]];
    for (n, coeffs) in (1u32..=3).zip(expected) {
        let graph = interval_complete_graph(n, 1, 1).unwrap();
        let terms = integral_terms(&graph.rooting(), DEFAULT_MAX_FLATS).unwrap();
        assert_eq!(
            terms.collapsed_polynomial(),
            Polynomial::from_i64_coeffs(coeffs),
            "linial n={n}"
        );
    }
    println!("criterion 3 (Linial eventual polynomials): PASS");
}

#[test]
fn criterion_04_eulerian_formula() {
    for n in 1..=4u32 {
        for b in 1..=3i64 {
            let graph = interval_complete_graph(n, 0, b).unwrap();
            for m in 0..=10i64 {
                let closed = zero_b_closed_form(n, b, m);
                let engine = integral_chromatic(&graph, m, DEFAULT_MAX_FLATS).unwrap();
                let oracle = oracle_integral(&graph, m, DEFAULT_MAX_POINTS).unwrap();
                assert_eq!(closed, engine, "[0,{b}]K{n} m={m}");
                assert_eq!(closed, oracle, "[0,{b}]K{n} m={m} oracle");
            }
        }
    }
    println!("criterion 4 (Eulerian-number formula for [0,b] intervals): PASS");
}

#[test]
fn criterion_05_characteristic_polynomials_and_regions() {
    for n in 1..=5u32 {
        let graph = shi(n);
        let poly = balanced_chromatic_polynomial(&graph, DEFAULT_MAX_FLATS).unwrap();
        let mut roots = vec![0i64];
        roots.extend(std::iter::repeat_n(n as i64, n as usize - 1));
        assert_eq!(poly, Polynomial::from_roots(&roots), "charpoly n={n}");
    }
    for (n, regions) in (2u32..=5).zip([3i64, 16, 125, 1296]) {
        assert_eq!(
            region_count(&shi(n), DEFAULT_MAX_FLATS).unwrap(),
            big(regions)
        );
    }
    println!("criterion 5 (characteristic polynomials and region counts): PASS");
}

#[test]
fn criterion_06_method_equivalence() {
    let start = Instant::now();
    let corpus = standard_corpus();
    assert!(corpus.len() >= 200);
    for graph in &corpus {
        let rooted = graph.rooting();
        let terms = integral_terms(&rooted, DEFAULT_MAX_FLATS).unwrap();
        for m in 0..=8i64 {
            let by_terms = terms.eval(m);
            let by_dc = integral_chromatic_dc(&rooted, m);
            let by_oracle = oracle_integral(graph, m, DEFAULT_MAX_POINTS).unwrap();
            assert_eq!(by_terms, by_dc, "dc mismatch on {graph:?} at m={m}");
            assert_eq!(by_terms, by_oracle, "oracle mismatch on {graph:?} at m={m}");
        }
    }
    assert!(start.elapsed() < Duration::from_secs(300));
    println!(
        "criterion 6 (Mobius/deletion-contraction/oracle agree on {} graphs): PASS",
        corpus.len()
    );
}

#[test]
fn criterion_07_modular_ground_truth() {
    for graph in &standard_corpus() {
        // Flats of the reduction against the oracle.
        for m in 1..=10i64 {
            let by_flats = modular_chromatic(graph, m, DEFAULT_MAX_FLATS).unwrap();
            let by_oracle = oracle_modular(graph, m, DEFAULT_MAX_POINTS).unwrap();
            assert_eq!(
                by_flats, by_oracle,
                "modular mismatch on {graph:?} at m={m}"
            );
        }
        // Above every circle gain the modular count is the characteristic
        // polynomial.
        let ceiling = graph.max_abs_circle_gain();
        let poly = balanced_chromatic_polynomial(graph, DEFAULT_MAX_FLATS).unwrap();
        for m in (ceiling + 1)..=(ceiling + 4) {
            assert_eq!(
                modular_chromatic(graph, m, DEFAULT_MAX_FLATS).unwrap(),
                poly.eval_i64(m),
                "polynomial regime mismatch on {graph:?} at m={m}"
            );
        }
        // Deletion-contraction identity for every link and modulus.
        for idx in graph.link_indices().collect::<Vec<_>>() {
            for m in 1..=10i64 {
                let (whole, split) = modular_dc_check(graph, idx, m, DEFAULT_MAX_FLATS).unwrap();
                assert_eq!(
                    whole, split,
                    "modular dc mismatch on {graph:?} edge {idx} m={m}"
                );
            }
        }
    }
    println!("criterion 7 (modular counts: oracle, polynomial regime, deletion-contraction): PASS");
}

#[test]
fn criterion_08_substitution_rule_caveat() {
    // The documented small-modulus failure: the rule reports 1 coloration
    // of [0,1]K2 mod 1 where none exists.
    let shi2 = shi(2);
    assert_eq!(
        modular_substitution_rule(&shi2, 1, DEFAULT_MAX_FLATS).unwrap(),
        big(1)
    );
    assert_eq!(
        oracle_modular(&shi2, 1, DEFAULT_MAX_POINTS).unwrap(),
        BigInt::zero()
    );

    // On its documented domain the rule is exact: whenever m divides no
    // nonzero loop gain of any flat, it matches the oracle.
    for graph in &standard_corpus() {
        let lat = FlatSemilattice::enumerate(graph, DEFAULT_MAX_FLATS).unwrap();
        let mut gains: Vec<i64> = Vec::new();
        for (flat, _) in lat.iter() {
            gains.extend(flat.loop_gains().iter().copied().filter(|&g| g != 0));
        }
        for m in 1..=10i64 {
            if gains.iter().any(|&g| g % m == 0) {
                continue;
            }
            let rule = modular_substitution_rule(graph, m, DEFAULT_MAX_FLATS).unwrap();
            let oracle = oracle_modular(graph, m, DEFAULT_MAX_POINTS).unwrap();
            assert_eq!(rule, oracle, "rule mismatch on {graph:?} at m={m}");
        }
    }
    println!("criterion 8 (substitution rule: caveat reproduced, safe domain exact): PASS");
}

#[test]
fn criterion_09_cone_partition_of_unity() {
    for n in 2..=3u32 {
        for (lo, hi) in [(0i64, 1i64), (1, 1)] {
            let graph = interval_complete_graph(n, lo, hi).unwrap();
            let cones = cone_decomposition(&graph, DEFAULT_MAX_FLATS).unwrap();
            let size = n as usize;
            let mut x = vec![1i64; size];
            'points: loop {
                let weight = point_total_weight(&cones, &x).unwrap();
                if graph.improper_edges(&x).is_empty() {
                    assert!(weight.is_one(), "proper point {x:?} has weight {weight}");
                } else {
                    assert!(weight.is_zero(), "improper point {x:?} has weight {weight}");
                }
                let mut pos = 0;
                loop {
                    if pos == size {
                        break 'points;
                    }
                    if x[pos] < 8 {
                        x[pos] += 1;
                        break;
                    }
                    x[pos] = 1;
                    pos += 1;
                }
            }
        }
    }
    println!("criterion 9 (cone decomposition certifies every point of [1,8]^n): PASS");
}

#[test]
fn criterion_10_broken_circle_forests() {
    let mut rng = SplitMix64::new(0xF0057);
    for graph in &standard_corpus() {
        let lat = FlatSemilattice::enumerate(graph, DEFAULT_MAX_FLATS).unwrap();
        for _ in 0..3 {
            let ordering = rng.permutation(graph.edge_count());
            for (flat, mu) in lat.iter() {
                assert_eq!(
                    nbc_forest_count(graph, flat, &ordering),
                    mu.abs(),
                    "forest count mismatch on {graph:?}"
                );
            }
        }
    }
    println!("criterion 10 (broken-circle forest counts equal |mu| for random orderings): PASS");
}

#[test]
fn criterion_11_interval_coloring() {
    let mut rng = SplitMix64::new(0x1A7E);
    for graph in &standard_corpus() {
        // Zero out the gains to get an ordinary graph.
        let zeroed =
            GainGraph::new(graph.n(), graph.edges().iter().map(|e| (e.tail, e.head, 0))).unwrap();
        let bounds: Vec<i64> = (0..zeroed.n()).map(|_| rng.range_i64(0, 3)).collect();
        for m in 0..=8i64 {
            let counted =
                affinograph::chromatic::interval_chromatic(&zeroed, &bounds, m, DEFAULT_MAX_FLATS)
                    .unwrap();
            let oracle = oracle_interval(&zeroed, &bounds, m, DEFAULT_MAX_POINTS).unwrap();
            assert_eq!(
                counted, oracle,
                "interval mismatch on {zeroed:?} h={bounds:?} m={m}"
            );
        }
        // All-zero bounds recover the ordinary chromatic polynomial.
        if !zeroed.has_zero_gain_loop() {
            let zeros = vec![0i64; zeroed.n()];
            let chromatic = balanced_chromatic_polynomial(&zeroed, DEFAULT_MAX_FLATS).unwrap();
            for m in 0..=8i64 {
                let counted = affinograph::chromatic::interval_chromatic(
                    &zeroed,
                    &zeros,
                    m,
                    DEFAULT_MAX_FLATS,
                )
                .unwrap();
                assert_eq!(
                    counted,
                    chromatic.eval_i64(m),
                    "chromatic mismatch on {zeroed:?}"
                );
            }
        }
    }
    println!("criterion 11 (interval coloring equals its oracle): PASS");
}

#[test]
fn criterion_12_term_normal_form() {
    for graph in &standard_corpus() {
        let n = graph.n();
        let terms = integral_terms(&graph.rooting(), DEFAULT_MAX_FLATS).unwrap();
        let first = &terms.terms()[0];
        assert_eq!(
            (first.sign, first.roots.clone()),
            (1, vec![0; n]),
            "leading term on {graph:?}"
        );
        assert!(first.mu.is_one());
        for term in terms.terms() {
            assert!(term.mu.is_positive());
            assert_eq!(
                term.sign,
                if (n - term.roots.len()) % 2 == 0 {
                    1
                } else {
                    -1
                }
            );
            assert!(term.roots.windows(2).all(|w| w[0] >= w[1]));
            assert!(term.roots.iter().all(|&r| r >= 0));
            let top = term.roots.first().copied().unwrap_or(0);
            for m in 0..=top {
                assert!(term.positive_part(m).is_zero());
            }
            for m in top..=top + 3 {
                assert_eq!(term.positive_part(m), term.untruncated(m));
            }
        }
    }
    println!("criterion 12 (piecewise terms are in normal form with threshold activation): PASS");
}

#[test]
fn criterion_13_performance_and_budget_guard() {
    let start = Instant::now();
    let shi5 = shi(5);
    let lat = FlatSemilattice::enumerate(&shi5, DEFAULT_MAX_FLATS).unwrap();
    let terms = integral_terms(&shi5.rooting(), DEFAULT_MAX_FLATS).unwrap();
    assert!(lat.len() > 1 && !terms.terms().is_empty());
    assert!(
        start.elapsed() < Duration::from_secs(10),
        "flat enumeration for [0,1]K5 took {:?}",
        start.elapsed()
    );

    // The oracle on [0,1]K8 at m = 10 wants 10^8 points: the budget guard
    // must exit with code 3 instead of enumerating.
    let start = Instant::now();
    let doc = {
        let graph = shi(8);
        let edges: Vec<String> = graph
            .edges()
            .iter()
            .map(|e| format!("[{},{},{}]", e.tail, e.head, e.gain))
            .collect();
        format!("{{\"n\":8,\"edges\":[{}]}}", edges.join(","))
    };
    let mut child = Command::new(env!("CARGO_BIN_EXE_affinograph"))
        .args(["eval", "--m", "10", "--method", "oracle"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(doc.as_bytes())
        .unwrap();
    let output = child.wait_with_output().expect("binary runs");
    assert_eq!(output.status.code(), Some(3), "budget guard must exit 3");
    assert!(
        start.elapsed() < Duration::from_secs(30),
        "budget guard must trip fast"
    );
    println!("criterion 13 (K5 enumeration under 10s; oracle budget guard exits 3): PASS");
}
