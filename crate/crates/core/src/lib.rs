//! Exact counting for integral gain graphs and the affinographic
//! hyperplane arrangements they encode.
//!
//! An integral gain graph is a multigraph whose edges carry integer
//! labels that negate under reorientation; it is the combinatorial form
//! of an arrangement of hyperplanes `x_j - x_i = g`. This crate computes,
//! exactly and with arbitrary precision:
//!
//! - the integral chromatic function — the number of proper colorations
//!   with colors in `{1, ..., m}`, equivalently the lattice points of
//!   `[1, m]^n` avoiding every hyperplane — as a piecewise polynomial
//!   ([`chromatic::integral_terms`]) and by deletion–contraction
//!   ([`chromatic::integral_chromatic_dc`]);
//! - the balanced chromatic polynomial (the arrangement's characteristic
//!   polynomial) and its region count;
//! - interval-coloring counts for ordinary graphs with per-vertex lower
//!   bounds;
//! - the modular chromatic function for every positive modulus;
//! - the weighted cone decomposition of the positive orthant that
//!   certifies each lattice point with total weight 1 or 0;
//! - closed forms for the Shi, extended Shi, Linial, and related
//!   interval families.
//!
//! Everything is verified against brute-force enumeration oracles in
//! [`geometry`]; [`corpus`] holds the deterministic graph corpus the
//! verification suites sweep.
//!
//! ```
//! use affinograph::chromatic::{integral_terms, region_count};
//! use affinograph::families::interval_complete_graph;
//! use affinograph::flats::DEFAULT_MAX_FLATS;
//!
//! // The Shi arrangement on four coordinates.
//! let shi4 = interval_complete_graph(4, 0, 1)?;
//! let terms = integral_terms(&shi4.rooting(), DEFAULT_MAX_FLATS)?;
//! assert_eq!(terms.eval(10).to_string(), "2401"); // (10 - 3)^4
//! assert_eq!(region_count(&shi4, DEFAULT_MAX_FLATS)?.to_string(), "125");
//! # Ok::<(), affinograph::Error>(())
//! ```

pub mod chromatic;
pub mod corpus;
pub mod error;
pub mod families;
pub mod flats;
pub mod geometry;
pub mod graph;

pub use crate::error::Error;
pub use crate::graph::{Edge, EdgeSet, GainGraph, Potential, RootedGainGraph, SwitchingFunction};
