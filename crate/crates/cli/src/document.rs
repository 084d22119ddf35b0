//! The graph document format: a JSON object with a vertex count and
//! either an edge list or a hyperplane list, optionally rooted by a
//! bounds vector.

use serde::Deserialize;

use affinograph::geometry::{arrangement_to_gain_graph, Arrangement};
use affinograph::{GainGraph, RootedGainGraph};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub n: i64,
    #[serde(default)]
    pub edges: Option<Vec<[i64; 3]>>,
    #[serde(default)]
    pub hyperplanes: Option<Vec<[i64; 3]>>,
    #[serde(default)]
    pub bounds: Option<Vec<i64>>,
}

/// A parsed document: a gain graph, rooted when bounds were present.
pub enum ParsedGraph {
    Unrooted(GainGraph),
    Rooted(RootedGainGraph),
}

impl ParsedGraph {
    pub fn graph(&self) -> &GainGraph {
        match self {
            ParsedGraph::Unrooted(g) => g,
            ParsedGraph::Rooted(r) => r.graph(),
        }
    }

    pub fn bounds(&self) -> Option<&[i64]> {
        match self {
            ParsedGraph::Unrooted(_) => None,
            ParsedGraph::Rooted(r) => Some(r.bounds()),
        }
    }

    /// The rooted view: the graph itself when rooted, its rooting
    /// otherwise.
    pub fn rooted(&self) -> RootedGainGraph {
        match self {
            ParsedGraph::Unrooted(g) => g.rooting(),
            ParsedGraph::Rooted(r) => r.clone(),
        }
    }
}

fn vertex_index(raw: i64, n: usize) -> Result<usize, String> {
    if raw < 1 || raw as u128 > n as u128 {
        return Err(format!("vertex index {raw} out of range 1..={n}"));
    }
    Ok(raw as usize)
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<GraphDocument, String> {
        serde_json::from_str(text).map_err(|e| format!("malformed document: {e}"))
    }

    pub fn build(&self) -> Result<ParsedGraph, String> {
        if self.n < 0 {
            return Err(format!("vertex count {} is negative", self.n));
        }
        let n = self.n as usize;
        let graph = match (&self.edges, &self.hyperplanes) {
            (Some(_), Some(_)) => {
                return Err("exactly one of \"edges\" and \"hyperplanes\" may be present".into())
            }
            (None, None) => {
                return Err("one of \"edges\" and \"hyperplanes\" must be present".into())
            }
            (Some(edges), None) => {
                let mut triples = Vec::with_capacity(edges.len());
                for &[i, j, g] in edges {
                    triples.push((vertex_index(i, n)?, vertex_index(j, n)?, g));
                }
                GainGraph::new(n, triples).map_err(|e| e.to_string())?
            }
            (None, Some(planes)) => {
                let mut triples = Vec::with_capacity(planes.len());
                for &[i, j, g] in planes {
                    triples.push((vertex_index(i, n)?, vertex_index(j, n)?, g));
                }
                let arrangement = Arrangement::new(n, triples).map_err(|e| e.to_string())?;
                arrangement_to_gain_graph(&arrangement)
            }
        };
        match &self.bounds {
            None => Ok(ParsedGraph::Unrooted(graph)),
            Some(bounds) => {
                let rooted =
                    RootedGainGraph::new(graph, bounds.clone()).map_err(|e| e.to_string())?;
                Ok(ParsedGraph::Rooted(rooted))
            }
        }
    }
}
