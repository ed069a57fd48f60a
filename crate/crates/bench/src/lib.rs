//! Inputs shared by the benchmarks.

use chromon::{barycentric_colorize, ColoredGraph, SimplicialComplex};

/// Colored graph of the barycentric subdivision of the boundary of the
/// `(d+1)`-simplex.
pub fn subdivided_sphere(d: usize) -> ColoredGraph {
    let sc = SimplicialComplex::boundary_of_simplex(d).expect("valid dimension");
    barycentric_colorize(&sc).expect("sphere boundaries are orientable")
}

/// A connected graph of order 12 at `d = 3` with nontrivial jackets.
pub fn order_twelve() -> ColoredGraph {
    let sigmas = vec![
        vec![0, 1, 2, 3, 4, 5],
        vec![1, 2, 3, 4, 5, 0],
        vec![2, 0, 4, 1, 5, 3],
        vec![5, 3, 1, 0, 2, 4],
    ];
    ColoredGraph::new(3, 12, &sigmas).expect("valid permutations")
}
