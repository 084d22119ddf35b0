//! Browser demo: interactive exploration of gain-graph counting
//! functions. Each exported operation takes plain parameters or a graph
//! document (the same JSON shape the CLI reads) and returns a JSON
//! string; the page in `www/` renders the results on a canvas.
//!
//! The heavy lifting lives in plain functions so the crate also compiles
//! and tests on native targets.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use affinograph::chromatic::{
    balanced_chromatic_polynomial, integral_terms, modular_chromatic, region_count, TermSum,
};
use affinograph::families::FamilySpec;
use affinograph::geometry::{cone_decomposition, point_total_weight};
use affinograph::{GainGraph, RootedGainGraph};

/// Flat cutoff for interactive inputs; generous for the orders the page
/// offers.
const DEMO_MAX_FLATS: usize = 200_000;

#[derive(Serialize)]
struct GraphOut {
    n: usize,
    edges: Vec<[i64; 3]>,
}

#[derive(Serialize)]
struct TermOut {
    sign: i8,
    mu: String,
    roots: Vec<i64>,
}

#[derive(Serialize)]
struct ReportOut {
    graph: GraphOut,
    terms: Vec<TermOut>,
    max_root: i64,
    polynomial: Vec<String>,
    charpoly: Vec<String>,
    regions: String,
}

#[derive(Serialize)]
struct CountRow {
    m: i64,
    integral: String,
    modular: Option<String>,
    polynomial: String,
}

#[derive(Serialize)]
struct CountTableOut {
    rows: Vec<CountRow>,
}

#[derive(Serialize)]
struct SceneConeOut {
    weight: String,
    bounds: Vec<[i64; 2]>,
    equations: Vec<[i64; 3]>,
}

#[derive(Serialize)]
struct ScenePointOut {
    x: i64,
    y: i64,
    proper: bool,
    weight: String,
}

#[derive(Serialize)]
struct SceneOut {
    m: i64,
    lines: Vec<i64>,
    points: Vec<ScenePointOut>,
    cones: Vec<SceneConeOut>,
    count: String,
}

fn graph_out(graph: &GainGraph) -> GraphOut {
    GraphOut {
        n: graph.n(),
        edges: graph
            .edges()
            .iter()
            .map(|e| [e.tail as i64, e.head as i64, e.gain])
            .collect(),
    }
}

fn terms_out(terms: &TermSum) -> Vec<TermOut> {
    terms
        .terms()
        .iter()
        .map(|t| TermOut {
            sign: t.sign,
            mu: t.mu.to_string(),
            roots: t.roots.clone(),
        })
        .collect()
}

fn parse_family(name: &str, n: u32, a: i32, b: i32, s: u32) -> Result<FamilySpec, String> {
    if n < 1 {
        return Err("the order n must be at least 1".into());
    }
    match name {
        "shi" => Ok(FamilySpec::shi(n)),
        "linial" => Ok(FamilySpec::linial(n)),
        "ext-shi" => {
            if s < 1 {
                return Err("the extension parameter s must be at least 1".into());
            }
            Ok(FamilySpec::ext_shi(n, s))
        }
        "interval-Kn" => Ok(FamilySpec::interval(n, a as i64, b as i64)),
        other => Err(format!("unknown family \"{other}\"")),
    }
}

fn parse_document(doc: &str) -> Result<GainGraph, String> {
    #[derive(serde::Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Doc {
        n: usize,
        edges: Vec<[i64; 3]>,
    }
    let doc: Doc = serde_json::from_str(doc).map_err(|e| format!("malformed document: {e}"))?;
    let mut triples = Vec::with_capacity(doc.edges.len());
    for [i, j, g] in doc.edges {
        if i < 1 || j < 1 {
            return Err(format!("vertex index {} out of range", i.min(j)));
        }
        triples.push((i as usize, j as usize, g));
    }
    GainGraph::new(doc.n, triples).map_err(|e| e.to_string())
}

fn family_report_impl(name: &str, n: u32, a: i32, b: i32, s: u32) -> Result<String, String> {
    let spec = parse_family(name, n, a, b, s)?;
    let graph = spec.graph().map_err(|e| e.to_string())?;
    let terms = integral_terms(&graph.rooting(), DEMO_MAX_FLATS).map_err(|e| e.to_string())?;
    let charpoly =
        balanced_chromatic_polynomial(&graph, DEMO_MAX_FLATS).map_err(|e| e.to_string())?;
    let regions = region_count(&graph, DEMO_MAX_FLATS).map_err(|e| e.to_string())?;
    let report = ReportOut {
        graph: graph_out(&graph),
        terms: terms_out(&terms),
        max_root: terms.max_root(),
        polynomial: terms
            .collapsed_polynomial()
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect(),
        charpoly: charpoly.coeffs().iter().map(|c| c.to_string()).collect(),
        regions: regions.to_string(),
    };
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

fn count_table_impl(doc: &str, m_max: u32) -> Result<String, String> {
    let graph = parse_document(doc)?;
    let terms = integral_terms(&graph.rooting(), DEMO_MAX_FLATS).map_err(|e| e.to_string())?;
    let polynomial = terms.collapsed_polynomial();
    let mut rows = Vec::with_capacity(m_max as usize + 1);
    for m in 0..=m_max as i64 {
        let modular = if m >= 1 {
            let count = modular_chromatic(&graph, m, DEMO_MAX_FLATS).map_err(|e| e.to_string())?;
            Some(count.to_string())
        } else {
            None
        };
        rows.push(CountRow {
            m,
            integral: terms.eval(m).to_string(),
            modular,
            polynomial: polynomial.eval_i64(m).to_string(),
        });
    }
    serde_json::to_string(&CountTableOut { rows }).map_err(|e| e.to_string())
}

fn plane_scene_impl(doc: &str, m: i64) -> Result<String, String> {
    let graph = parse_document(doc)?;
    if graph.n() != 2 {
        return Err(format!(
            "the plane view needs exactly 2 vertices, got {}",
            graph.n()
        ));
    }
    let cones = cone_decomposition(&graph, DEMO_MAX_FLATS).map_err(|e| e.to_string())?;
    let mut points = Vec::new();
    for x in 1..=m {
        for y in 1..=m {
            let coloration = [x, y];
            let weight = point_total_weight(&cones, &coloration).map_err(|e| e.to_string())?;
            points.push(ScenePointOut {
                x,
                y,
                proper: graph.improper_edges(&coloration).is_empty(),
                weight: weight.to_string(),
            });
        }
    }
    let rooted = RootedGainGraph::new(graph.clone(), vec![0, 0]).map_err(|e| e.to_string())?;
    let count = integral_terms(&rooted, DEMO_MAX_FLATS)
        .map_err(|e| e.to_string())?
        .eval(m);
    let scene = SceneOut {
        m,
        lines: graph
            .edges()
            .iter()
            .filter(|e| !e.is_loop())
            .map(|e| e.gain)
            .collect(),
        points,
        cones: cones
            .iter()
            .map(|c| SceneConeOut {
                weight: c.weight.to_string(),
                bounds: c.top_bounds.iter().map(|(&v, &h)| [v as i64, h]).collect(),
                equations: c
                    .equations
                    .iter()
                    .map(|(&j, &(i, g))| [j as i64, i as i64, g])
                    .collect(),
            })
            .collect(),
        count: count.to_string(),
    };
    serde_json::to_string(&scene).map_err(|e| e.to_string())
}

/// Piecewise terms, eventual polynomial, characteristic polynomial, and
/// region count of a named family, as JSON.
#[wasm_bindgen]
pub fn family_report(name: &str, n: u32, a: i32, b: i32, s: u32) -> Result<String, JsValue> {
    family_report_impl(name, n, a, b, s).map_err(|e| JsValue::from_str(&e))
}

/// Integral count, modular count, and eventual-polynomial value for every
/// m up to `m_max`, as JSON rows.
#[wasm_bindgen]
pub fn count_table(doc: &str, m_max: u32) -> Result<String, JsValue> {
    count_table_impl(doc, m_max).map_err(|e| JsValue::from_str(&e))
}

/// For a two-vertex graph: the arrangement's lines, the lattice points of
/// `[1,m]^2` with their properness and cone weights, and the cone data,
/// as JSON.
#[wasm_bindgen]
pub fn plane_scene(doc: &str, m: i64) -> Result<String, JsValue> {
    plane_scene_impl(doc, m).map_err(|e| JsValue::from_str(&e))
}
