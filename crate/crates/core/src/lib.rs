//! Exact combinatorics of edge-colored graphs dual to colored triangulations.
//!
//! A `(d+1)`-colored bipartite graph is stored as `d+1` permutations (see
//! [`ColoredGraph`]). From it this crate derives the bicolored faces, the
//! jackets and their genera, the degree, the edge-face incidence matrix and
//! the first homology, a tree/cotree/crossing split for every jacket, the
//! colored graph of a barycentric subdivision, and exhaustive censuses over
//! all graphs of small order.

pub mod analysis;
pub mod census;
pub mod decomposition;
pub mod error;
pub mod faces;
pub mod graph;
pub mod homology;
pub mod intmat;
pub mod jackets;
pub mod perm;
pub mod subdivision;

pub use analysis::{analyze, GraphAnalysis};
pub use census::{
    enumerate_connected, run_census, CensusConfig, CensusTable, Mode, DEFAULT_BUDGET,
};
pub use decomposition::{count_by_genus, decompose, tree_cotree, TreeCotreeSplit};
pub use error::{Error, Result};
pub use faces::{enumerate_faces, ColorPair, Face, FaceCensus};
pub use graph::{build_graph, ColoredGraph, EdgeId};
pub use homology::{
    homology_report, incidence_matrix, spanning_tree, HomologyReport, IncidenceMatrix,
};
pub use jackets::{
    check_low_genus_bound, degree, enumerate_jackets, DegreeReport, Jacket, JacketCycle, Rational,
};
pub use subdivision::{barycentric_colorize, SimplicialComplex};
