//! Tree / cotree / crossing-edge splits of a jacket.
//!
//! For a jacket of genus `g` the edges split into a spanning tree of the
//! graph, a set whose dual edges span the jacket's face graph, and exactly
//! `2g` leftover crossing edges.

use std::collections::BTreeMap;

use crate::census::{enumerate_connected, Mode};
use crate::error::{Error, Result};
use crate::faces::{enumerate_faces, FaceCensus};
use crate::graph::{check_shape, ColoredGraph, EdgeId, UnionFind};
use crate::homology::{rosette_edges, spanning_tree};
use crate::jackets::{jacket_of, Jacket, JacketCycle};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCotreeSplit {
    pub jacket: JacketCycle,
    pub genus: u64,
    pub tree_edges: Vec<EdgeId>,
    pub cotree_edges: Vec<EdgeId>,
    pub crossing_edges: Vec<EdgeId>,
}

/// Splits the edges of `g` with respect to `jacket`.
pub fn tree_cotree(g: &ColoredGraph, jacket: &Jacket) -> Result<TreeCotreeSplit> {
    tree_cotree_with_faces(g, &enumerate_faces(g), jacket)
}

pub fn tree_cotree_with_faces(
    g: &ColoredGraph,
    faces: &FaceCensus,
    jacket: &Jacket,
) -> Result<TreeCotreeSplit> {
    let tree_edges = spanning_tree(g)?;
    let mut dual = UnionFind::new(faces.total);
    let mut cotree_edges = Vec::new();
    let mut crossing_edges = Vec::new();
    // rosette edges come out in (color, black) order
    for e in rosette_edges(g, &tree_edges)? {
        let (left, right) = jacket.cycle.neighbors(e.color);
        let a = faces.face_containing(e, left as usize);
        let b = faces.face_containing(e, right as usize);
        if dual.union(a, b) {
            cotree_edges.push(e);
        } else {
            crossing_edges.push(e);
        }
    }
    if cotree_edges.len() + 1 != jacket.face_count {
        return Err(Error::InternalMismatch(format!(
            "dual tree of jacket {} has {} edges, expected {}",
            jacket.cycle,
            cotree_edges.len(),
            jacket.face_count - 1
        )));
    }
    if crossing_edges.len() as u64 != 2 * jacket.genus {
        return Err(Error::InternalMismatch(format!(
            "jacket {} of genus {} left {} crossing edges",
            jacket.cycle,
            jacket.genus,
            crossing_edges.len()
        )));
    }
    Ok(TreeCotreeSplit {
        jacket: jacket.cycle.clone(),
        genus: jacket.genus,
        tree_edges,
        cotree_edges,
        crossing_edges,
    })
}

/// Parses a jacket cycle such as `0,1,2,3` and splits `g` along it.
pub fn decompose(g: &ColoredGraph, cycle: &str) -> Result<TreeCotreeSplit> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let faces = enumerate_faces(g);
    let cycle = JacketCycle::parse(cycle, g.dimension())?;
    let jacket = jacket_of(g, &faces, cycle)?;
    tree_cotree_with_faces(g, &faces, &jacket)
}

impl TreeCotreeSplit {
    /// `tree:`, `cotree:` and `crossing:` lines listing `(color, black)` pairs.
    pub fn to_text(&self) -> String {
        let group = |label: &str, edges: &[EdgeId]| {
            let mut line = label.to_string();
            for e in edges {
                line.push(' ');
                line.push_str(&e.to_string());
            }
            line.push('\n');
            line
        };
        format!(
            "jacket {} g={}\n{}{}{}",
            self.jacket,
            self.genus,
            group("tree:", &self.tree_edges),
            group("cotree:", &self.cotree_edges),
            group("crossing:", &self.crossing_edges),
        )
    }
}

/// Genus histogram of the jacket `0,1,...,d` over all connected labeled
/// graphs of order `n`.
pub fn count_by_genus(d: usize, n: usize, budget: u128) -> Result<BTreeMap<u64, u64>> {
    let cycle = JacketCycle::all(d).into_iter().next().expect("d >= 2");
    count_by_genus_for(d, n, &cycle, budget)
}

pub fn count_by_genus_for(
    d: usize,
    n: usize,
    cycle: &JacketCycle,
    budget: u128,
) -> Result<BTreeMap<u64, u64>> {
    check_shape(d, n)?;
    let mut histogram = BTreeMap::new();
    for g in enumerate_connected(d, n, Mode::Labeled, budget)? {
        let faces = enumerate_faces(&g);
        let jacket = jacket_of(&g, &faces, cycle.clone())?;
        *histogram.entry(jacket.genus).or_insert(0) += 1;
    }
    Ok(histogram)
}

/// Smallest `K` with `count(g) <= K^n n^(2g)` for every genus in the
/// histogram. Reported only; nothing is asserted about it.
pub fn fitted_growth_constant(histogram: &BTreeMap<u64, u64>, n: usize) -> f64 {
    histogram
        .iter()
        .map(|(&genus, &count)| {
            let log_k = ((count as f64).ln() - 2.0 * genus as f64 * (n as f64).ln()) / n as f64;
            log_k.exp()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::DEFAULT_BUDGET;
    use crate::jackets::{enumerate_jackets, g_max};

    #[test]
    fn dipole_split() {
        let g = ColoredGraph::dipole(3).unwrap();
        let faces = enumerate_faces(&g);
        for jacket in enumerate_jackets(&g, &faces).unwrap() {
            let split = tree_cotree(&g, &jacket).unwrap();
            assert_eq!(split.tree_edges.len(), 1);
            assert_eq!(split.cotree_edges.len(), 3);
            assert!(split.crossing_edges.is_empty());
        }
        let split = decompose(&g, "0,1,2,3").unwrap();
        assert_eq!(
            split.to_text(),
            "jacket 0,1,2,3 g=0\ntree: (0, 0)\ncotree: (1, 0) (2, 0) (3, 0)\ncrossing:\n"
        );
    }

    #[test]
    fn decompose_rejects_bad_input() {
        let g = ColoredGraph::dipole(3).unwrap();
        assert!(matches!(decompose(&g, "0,1,2"), Err(Error::BadJacket(_))));
        let split = ColoredGraph::new(3, 4, &vec![vec![0, 1]; 4]).unwrap();
        assert_eq!(decompose(&split, "0,1,2,3"), Err(Error::Disconnected));
    }

    #[test]
    fn genus_histograms() {
        let h = count_by_genus(3, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(h, BTreeMap::from([(0, 1)]));
        let h = count_by_genus(3, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(h.values().sum::<u64>(), 7);
        for n in [2, 4, 6] {
            let h = count_by_genus(3, n, DEFAULT_BUDGET).unwrap();
            assert!(h.keys().all(|&g| g <= (n / 2) as u64 && g <= g_max(3, n)));
        }
        assert_eq!(count_by_genus(3, 3, DEFAULT_BUDGET), Err(Error::BadOrder(3)));
    }

    #[test]
    fn growth_constant_covers_every_bucket() {
        let n = 6;
        let h = count_by_genus(3, n, DEFAULT_BUDGET).unwrap();
        let k = fitted_growth_constant(&h, n);
        for (&genus, &count) in &h {
            let bound = k.powi(n as i32) * (n as f64).powi(2 * genus as i32);
            assert!(count as f64 <= bound * (1.0 + 1e-9));
        }
    }
}
