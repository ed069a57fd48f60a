//! First homology of a colored graph from its edge-face incidence matrix.
//!
//! Edges are oriented black to white. A face of colors `i < j` crosses its
//! color-`i` edges in that direction (`+1`) and its color-`j` edges against
//! it (`-1`). Setting the tree edges of a spanning tree to zero is the same
//! as deleting their columns, which leaves one column per rosette edge. The
//! graph has trivial rational first homology iff that reduced matrix has
//! rank `|L| = 1 + (d-1)n/2`; it has trivial integral first homology iff in
//! addition all invariant factors are 1.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::faces::{enumerate_faces, FaceCensus};
use crate::graph::{ColoredGraph, EdgeId, UnionFind};
use crate::intmat::IntMatrix;

/// Faces x edges matrix with entries in {+1, -1, 0}. Column `c*p + k` is
/// the color-`c` edge at black vertex `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub matrix: IntMatrix,
}

impl IncidenceMatrix {
    pub fn faces(&self) -> usize {
        self.matrix.rows()
    }

    pub fn edges(&self) -> usize {
        self.matrix.cols()
    }
}

pub fn incidence_matrix(g: &ColoredGraph, faces: &FaceCensus) -> IncidenceMatrix {
    let mut matrix = IntMatrix::zeros(faces.total, g.edge_count());
    for (row, face) in faces.faces.iter().enumerate() {
        for (edge, sign) in face.oriented_edges() {
            matrix.set(row, g.edge_index(edge), sign as i64);
        }
    }
    IncidenceMatrix { matrix }
}

/// Order in which a spanning tree is grown.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TreeOrder {
    /// Breadth-first from black vertex 0, lowest color first.
    #[default]
    BreadthFirstLowColor,
    /// Depth-first from the last white vertex, highest color first.
    DepthFirstHighColor,
}

/// The deterministic breadth-first spanning tree.
pub fn spanning_tree(g: &ColoredGraph) -> Result<Vec<EdgeId>> {
    spanning_tree_with(g, TreeOrder::default())
}

pub fn spanning_tree_with(g: &ColoredGraph, order: TreeOrder) -> Result<Vec<EdgeId>> {
    let p = g.half_order();
    // vertices: black k -> k, white w -> p + w
    let incident = |v: usize, c: usize| -> (EdgeId, usize) {
        if v < p {
            (EdgeId::new(c, v), p + g.sigma(c)[v] as usize)
        } else {
            let k = g.sigma_inverse(c)[v - p] as usize;
            (EdgeId::new(c, k), k)
        }
    };
    let mut seen = vec![false; 2 * p];
    let mut tree = Vec::with_capacity(2 * p - 1);
    match order {
        TreeOrder::BreadthFirstLowColor => {
            let mut queue = VecDeque::from([0]);
            seen[0] = true;
            while let Some(v) = queue.pop_front() {
                for c in 0..g.colors() {
                    let (e, w) = incident(v, c);
                    if !seen[w] {
                        seen[w] = true;
                        tree.push(e);
                        queue.push_back(w);
                    }
                }
            }
        }
        TreeOrder::DepthFirstHighColor => {
            let root = 2 * p - 1;
            let mut stack = vec![(root, g.colors())];
            seen[root] = true;
            while let Some((v, next)) = stack.pop() {
                if next == 0 {
                    continue;
                }
                let c = next - 1;
                stack.push((v, c));
                let (e, w) = incident(v, c);
                if !seen[w] {
                    seen[w] = true;
                    tree.push(e);
                    stack.push((w, g.colors()));
                }
            }
        }
    }
    if tree.len() + 1 != 2 * p {
        return Err(Error::Disconnected);
    }
    Ok(tree)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyReport {
    pub spanning_tree: Vec<EdgeId>,
    /// Columns of the rosette edges, in edge-index order.
    pub reduced_columns: Vec<EdgeId>,
    pub reduced_matrix: IntMatrix,
    /// Rank of the reduced matrix.
    pub rank: usize,
    pub full_rank: usize,
    pub nullity: usize,
    pub face_count: usize,
    pub invariant_factors: Vec<BigInt>,
    pub h1_rational_trivial: bool,
    pub h1_integral_trivial: bool,
}

impl fmt::Display for HomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self.invariant_factors.iter().map(ToString::to_string).collect();
        write!(
            f,
            "rank={} L={} F={} h1Q={} factors={} h1Z={}",
            self.rank,
            self.nullity,
            self.face_count,
            verdict(self.h1_rational_trivial),
            factors.join(","),
            verdict(self.h1_integral_trivial),
        )
    }
}

fn verdict(trivial: bool) -> &'static str {
    if trivial {
        "trivial"
    } else {
        "nontrivial"
    }
}

/// Rosette edges: every edge not in `tree`.
pub fn rosette_edges(g: &ColoredGraph, tree: &[EdgeId]) -> Result<Vec<EdgeId>> {
    let n = g.order();
    let p = g.half_order();
    if tree.len() + 1 != n {
        return Err(Error::InternalMismatch(format!(
            "spanning tree has {} edges, expected {}",
            tree.len(),
            n - 1
        )));
    }
    let mut uf = UnionFind::new(n);
    let mut in_tree = vec![false; g.edge_count()];
    for &e in tree {
        if !uf.union(e.black as usize, p + g.white_of(e) as usize) {
            return Err(Error::InternalMismatch(format!("tree edge {e} closes a cycle")));
        }
        in_tree[g.edge_index(e)] = true;
    }
    Ok((0..g.edge_count())
        .filter(|&i| !in_tree[i])
        .map(|i| g.edge_at(i))
        .collect())
}

pub fn homology_report(
    g: &ColoredGraph,
    m: &IncidenceMatrix,
    tree: &[EdgeId],
) -> Result<HomologyReport> {
    let rosette = rosette_edges(g, tree)?;
    let nullity = rosette.len();
    let columns: Vec<usize> = rosette.iter().map(|&e| g.edge_index(e)).collect();
    let reduced_matrix = m.matrix.select_columns(&columns);
    let face_count = m.faces();

    let rank = reduced_matrix.rank();
    let full_rank = m.matrix.rank();
    if rank != full_rank {
        return Err(Error::GaugeRankMismatch {
            full: full_rank,
            reduced: rank,
        });
    }
    let invariant_factors = reduced_matrix.invariant_factors();
    if invariant_factors.len() != rank {
        return Err(Error::InternalMismatch(format!(
            "{} invariant factors for rank {rank}",
            invariant_factors.len()
        )));
    }
    // fewer faces than rosette edges already rules out full rank
    let h1_rational_trivial = face_count >= nullity && rank == nullity;
    let h1_integral_trivial = h1_rational_trivial && invariant_factors.iter().all(One::is_one);
    Ok(HomologyReport {
        spanning_tree: tree.to_vec(),
        reduced_columns: rosette,
        reduced_matrix,
        rank,
        full_rank,
        nullity,
        face_count,
        invariant_factors,
        h1_rational_trivial,
        h1_integral_trivial,
    })
}

/// Faces, incidence matrix, default tree and report in one call.
pub fn analyze_homology(g: &ColoredGraph) -> Result<HomologyReport> {
    let faces = enumerate_faces(g);
    let m = incidence_matrix(g, &faces);
    let tree = spanning_tree(g)?;
    homology_report(g, &m, &tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn swap_graph() -> ColoredGraph {
        build_graph(3, 4, &[vec![0, 1], vec![1, 0], vec![1, 0], vec![1, 0]]).unwrap()
    }

    #[test]
    fn dipole_incidence() {
        let g = ColoredGraph::dipole(3).unwrap();
        let faces = enumerate_faces(&g);
        let m = incidence_matrix(&g, &faces);
        assert_eq!((m.faces(), m.edges()), (6, 4));
        for (row, face) in faces.faces.iter().enumerate() {
            for c in 0..4 {
                let expected = if c == face.pair.low as usize {
                    1
                } else if c == face.pair.high as usize {
                    -1
                } else {
                    0
                };
                assert_eq!(m.matrix.get(row, c), expected);
            }
        }
        for c in 0..4 {
            assert_eq!((0..6).filter(|&r| m.matrix.get(r, c) != 0).count(), 3);
        }
    }

    #[test]
    fn dipole_homology() {
        let g = ColoredGraph::dipole(3).unwrap();
        let tree = spanning_tree(&g).unwrap();
        assert_eq!(tree, vec![EdgeId::new(0, 0)]);
        let r = analyze_homology(&g).unwrap();
        assert_eq!(r.reduced_columns.len(), 3);
        assert_eq!((r.reduced_matrix.rows(), r.reduced_matrix.cols()), (6, 3));
        assert_eq!(r.rank, 3);
        assert_eq!(r.full_rank, 3);
        assert_eq!(r.invariant_factors, vec![BigInt::one(); 3]);
        assert!(r.h1_rational_trivial && r.h1_integral_trivial);
        assert_eq!(r.to_string(), "rank=3 L=3 F=6 h1Q=trivial factors=1,1,1 h1Z=trivial");
    }

    #[test]
    fn swap_graph_matrix_and_tree() {
        let g = swap_graph();
        let faces = enumerate_faces(&g);
        let m = incidence_matrix(&g, &faces);
        assert_eq!((m.faces(), m.edges()), (9, 8));
        let tree = spanning_tree(&g).unwrap();
        assert_eq!(tree.len(), 3);
        assert_eq!(rosette_edges(&g, &tree).unwrap().len(), 5);
        let alt = spanning_tree_with(&g, TreeOrder::DepthFirstHighColor).unwrap();
        assert_eq!(alt.len(), 3);
        let r1 = homology_report(&g, &m, &tree).unwrap();
        let r2 = homology_report(&g, &m, &alt).unwrap();
        assert_eq!(r1.rank, r2.rank);
        assert_eq!(r1.invariant_factors, r2.invariant_factors);
    }

    #[test]
    fn few_faces_short_circuit() {
        // first d=3, n=8 graph with fewer faces than |L| = 9
        let table = crate::perm::PermutationTable::new(4);
        let ident = table.get(0).to_vec();
        let total = table.len();
        let g = (0..total * total * total)
            .map(|t| {
                let (a, b, c) = (t / (total * total), (t / total) % total, t % total);
                let imgs = [ident.clone(), table.get(a).to_vec(), table.get(b).to_vec(), table.get(c).to_vec()];
                build_graph(3, 8, &imgs).unwrap()
            })
            .find(|g| g.is_connected() && enumerate_faces(g).total < 9)
            .unwrap();
        let r = analyze_homology(&g).unwrap();
        assert_eq!(r.nullity, 9);
        assert!(r.face_count < r.nullity);
        assert!(!r.h1_rational_trivial && !r.h1_integral_trivial);
        assert!(r.rank <= r.face_count);
    }

    #[test]
    fn disconnected_graph_has_no_tree() {
        let g = build_graph(3, 4, &vec![vec![0, 1]; 4]).unwrap();
        assert_eq!(spanning_tree(&g), Err(Error::Disconnected));
        assert_eq!(
            spanning_tree_with(&g, TreeOrder::DepthFirstHighColor),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn bad_trees_are_rejected() {
        let g = swap_graph();
        let faces = enumerate_faces(&g);
        let m = incidence_matrix(&g, &faces);
        let short = vec![EdgeId::new(0, 0)];
        assert!(homology_report(&g, &m, &short).is_err());
        // (1,0) and (2,0) both join black 0 and white 1
        let cyclic = vec![EdgeId::new(1, 0), EdgeId::new(2, 0), EdgeId::new(0, 0)];
        assert!(homology_report(&g, &m, &cyclic).is_err());
    }
}
