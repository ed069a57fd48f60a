//! Bicolored faces: the cycles alternating between two fixed colors.

use serde::{Deserialize, Serialize};

use crate::graph::{ColoredGraph, EdgeId};

/// An unordered color pair stored with `low < high`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColorPair {
    pub low: u32,
    pub high: u32,
}

impl ColorPair {
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "a face needs two distinct colors");
        ColorPair {
            low: a.min(b) as u32,
            high: a.max(b) as u32,
        }
    }

    /// Position of the pair in the lexicographic list of all pairs of `colors` colors.
    pub fn index(&self, colors: usize) -> usize {
        let (i, j) = (self.low as usize, self.high as usize);
        i * colors - i * (i + 1) / 2 + (j - i - 1)
    }
}

/// All `colors * (colors - 1) / 2` pairs in lexicographic order.
pub fn color_pairs(colors: usize) -> Vec<ColorPair> {
    (0..colors)
        .flat_map(|i| (i + 1..colors).map(move |j| ColorPair::new(i, j)))
        .collect()
}

/// One bicolored cycle. `blacks` lists the black vertices in traversal
/// order: from black `k` the face leaves along the low-color edge and returns
/// along the high-color edge to the next black vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub pair: ColorPair,
    pub blacks: Vec<u32>,
}

impl Face {
    /// Length in edges.
    pub fn length(&self) -> usize {
        2 * self.blacks.len()
    }

    /// Edges in traversal order with their sign: `+1` for a low-color edge
    /// (crossed black to white), `-1` for a high-color edge (white to black).
    pub fn oriented_edges(&self) -> impl Iterator<Item = (EdgeId, i8)> + '_ {
        let len = self.blacks.len();
        (0..len).flat_map(move |t| {
            let k = self.blacks[t] as usize;
            let next = self.blacks[(t + 1) % len] as usize;
            [
                (EdgeId::new(self.pair.low as usize, k), 1),
                (EdgeId::new(self.pair.high as usize, next), -1),
            ]
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceCensus {
    pub colors: usize,
    pub faces: Vec<Face>,
    /// `F_ij`, indexed by [`ColorPair::index`].
    pub count_by_pair: Vec<usize>,
    pub total: usize,
    /// `face_of[pair_index * p + k]`: the face of that pair through black `k`.
    face_of: Vec<usize>,
    p: usize,
}

impl FaceCensus {
    pub fn count(&self, pair: ColorPair) -> usize {
        self.count_by_pair[pair.index(self.colors)]
    }

    /// The face of `pair` passing through black vertex `black`.
    pub fn face_through(&self, pair: ColorPair, black: usize) -> usize {
        self.face_of[pair.index(self.colors) * self.p + black]
    }

    /// Index of the face of colors `{edge.color, other}` containing `edge`.
    /// Either color's edge lies in the face through its black endpoint.
    pub fn face_containing(&self, edge: EdgeId, other: usize) -> usize {
        let pair = ColorPair::new(edge.color as usize, other);
        self.face_through(pair, edge.black as usize)
    }

    pub fn pairs(&self) -> Vec<ColorPair> {
        color_pairs(self.colors)
    }
}

/// Enumerates all faces. For the pair `i < j` the faces are the cycles of
/// `sigma[j]^-1 . sigma[i]` on the black vertices.
pub fn enumerate_faces(g: &ColoredGraph) -> FaceCensus {
    let colors = g.colors();
    let p = g.half_order();
    let pairs = color_pairs(colors);
    let mut faces = Vec::new();
    let mut count_by_pair = vec![0; pairs.len()];
    let mut face_of = vec![usize::MAX; pairs.len() * p];
    for (pi, pair) in pairs.iter().enumerate() {
        let si = g.sigma(pair.low as usize);
        let sj_inv = g.sigma_inverse(pair.high as usize);
        for start in 0..p {
            if face_of[pi * p + start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut blacks = Vec::new();
            let mut k = start;
            while face_of[pi * p + k] == usize::MAX {
                face_of[pi * p + k] = id;
                blacks.push(k as u32);
                k = sj_inv[si[k] as usize] as usize;
            }
            faces.push(Face {
                pair: *pair,
                blacks,
            });
            count_by_pair[pi] += 1;
        }
    }
    FaceCensus {
        colors,
        total: faces.len(),
        faces,
        count_by_pair,
        face_of,
        p,
    }
}
