//! Colored graph of the barycentric subdivision of a closed simplicial complex.
//!
//! The simplices of the subdivision are the flags of the input simplices: a
//! flag is an ordering `(u_0, ..., u_d)` of a simplex's vertices, standing for
//! the chain `{u_0} < {u_0,u_1} < ... < {u_0..u_d}`. Exchanging the face of
//! dimension `k < d` swaps `u_k` and `u_{k+1}`; exchanging the top face moves
//! to the simplex glued along `{u_0..u_{d-1}}`. That dimension is the color
//! of the dual edge. Every simplex yields `(d+1)!` flags, so a 3-dimensional
//! complex with `m` tetrahedra gives a graph of order `24 m`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Fields, UnionFind, MAX_DIMENSION, MIN_DIMENSION};
use crate::perm::{self, PermutationTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    d: usize,
    simplices: Vec<Vec<u32>>,
}

/// Gluing data of a validated complex.
struct Gluing {
    /// Vertices of each simplex, ascending.
    sorted: Vec<Vec<u32>>,
    /// `across[s][t]`: the simplex glued to `s` along the facet that omits
    /// `sorted[s][t]`, and the vertex of that simplex opposite the facet.
    across: Vec<Vec<(usize, u32)>>,
}

impl SimplicialComplex {
    pub fn new(d: usize, simplices: Vec<Vec<u32>>) -> Result<Self> {
        if !(MIN_DIMENSION..=MAX_DIMENSION).contains(&d) {
            return Err(Error::BadDimension(d));
        }
        let sc = SimplicialComplex { d, simplices };
        sc.gluing()?;
        Ok(sc)
    }

    /// The boundary of the `(d+1)`-simplex: all `(d+1)`-subsets of `0..=d+1`.
    pub fn boundary_of_simplex(d: usize) -> Result<Self> {
        let simplices = (0..=d as u32 + 1)
            .rev()
            .map(|skip| (0..=d as u32 + 1).filter(|&v| v != skip).collect())
            .collect();
        Self::new(d, simplices)
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn simplices(&self) -> &[Vec<u32>] {
        &self.simplices
    }

    /// Parses `d=<d> m=<count>` followed by one simplex per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));
        let (line_no, header) = lines.next().unwrap_or((1, ""));
        let mut fields = Fields::new(line_no, header);
        let d = fields.key_value("d")?;
        let m = fields.key_value("m")?;
        fields.finish()?;
        let mut simplices = Vec::with_capacity(m);
        for s in 0..m {
            let (line_no, line) = match lines.next() {
                Some((l, text)) if !text.trim().is_empty() => (l, text),
                other => {
                    return Err(Error::Parse {
                        line: other.map_or(s + 2, |(l, _)| l),
                        column: 1,
                        message: format!("expected {m} simplex lines, found {s}"),
                    })
                }
            };
            let mut fields = Fields::new(line_no, line);
            let mut simplex = Vec::with_capacity(d + 1);
            while let Some((col, tok)) = fields.token() {
                if simplex.len() == d + 1 {
                    return Err(Error::Parse {
                        line: line_no,
                        column: col,
                        message: "trailing garbage after simplex".into(),
                    });
                }
                simplex.push(tok.parse::<u32>().map_err(|_| Error::Parse {
                    line: line_no,
                    column: col,
                    message: format!("bad vertex label `{tok}`"),
                })?);
            }
            if simplex.len() != d + 1 {
                return Err(Error::Parse {
                    line: line_no,
                    column: line.len() + 1,
                    message: format!("expected {} vertices, found {}", d + 1, simplex.len()),
                });
            }
            simplices.push(simplex);
        }
        for (line_no, line) in lines {
            if !line.trim().is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: "trailing garbage after last simplex".into(),
                });
            }
        }
        Self::new(d, simplices)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("d={} m={}\n", self.d, self.simplices.len());
        for s in &self.simplices {
            let labels: Vec<String> = s.iter().map(ToString::to_string).collect();
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
        out
    }

    fn gluing(&self) -> Result<Gluing> {
        let d = self.d;
        let mut sorted = Vec::with_capacity(self.simplices.len());
        for (s, simplex) in self.simplices.iter().enumerate() {
            if simplex.len() != d + 1 {
                return Err(Error::BadSimplex {
                    simplex: s,
                    expected: d + 1,
                    found: simplex.len(),
                });
            }
            let mut v = simplex.clone();
            v.sort_unstable();
            if v.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::DegenerateSimplex { simplex: s });
            }
            sorted.push(v);
        }
        if sorted.is_empty() {
            return Err(Error::NotConnected);
        }
        let mut cofaces: HashMap<Vec<u32>, Vec<(usize, u32)>> = HashMap::new();
        let mut facet_keys = Vec::with_capacity(sorted.len());
        for (s, verts) in sorted.iter().enumerate() {
            let mut keys = Vec::with_capacity(d + 1);
            for t in 0..=d {
                let mut facet = verts.clone();
                let opposite = facet.remove(t);
                cofaces.entry(facet.clone()).or_default().push((s, opposite));
                keys.push(facet);
            }
            facet_keys.push(keys);
        }
        // report the first bad facet in input order
        for keys in &facet_keys {
            for key in keys {
                let count = cofaces[key].len();
                if count != 2 {
                    return Err(Error::NotClosed {
                        facet: key.clone(),
                        cofaces: count,
                    });
                }
            }
        }
        let mut uf = UnionFind::new(sorted.len());
        let across: Vec<Vec<(usize, u32)>> = facet_keys
            .iter()
            .enumerate()
            .map(|(s, keys)| {
                keys.iter()
                    .map(|key| {
                        let pair = &cofaces[key];
                        let other = if pair[0].0 == s { pair[1] } else { pair[0] };
                        uf.union(s, other.0);
                        other
                    })
                    .collect()
            })
            .collect();
        if uf.components() != 1 {
            return Err(Error::NotConnected);
        }
        Ok(Gluing { sorted, across })
    }
}

/// Lexicographic rank of a permutation of `0..len`.
fn perm_rank(perm: &[u32]) -> usize {
    let len = perm.len();
    let mut rank = 0;
    for i in 0..len {
        let smaller_later = perm[i + 1..].iter().filter(|&&v| v < perm[i]).count();
        rank = rank * (len - i) + smaller_later;
    }
    rank
}

/// Sign of the ordering `seq` of the vertex set `sorted`.
fn ordering_sign(sorted: &[u32], seq: &[u32]) -> i8 {
    let positions: Vec<u32> = seq
        .iter()
        .map(|v| sorted.binary_search(v).expect("vertex of simplex") as u32)
        .collect();
    perm::sign(&positions)
}

/// Colored graph dual to the barycentric subdivision of `sc`.
pub fn barycentric_colorize(sc: &SimplicialComplex) -> Result<ColoredGraph> {
    let d = sc.d;
    let gluing = sc.gluing()?;
    let m = gluing.sorted.len();

    // Coherent orientation: sign per simplex such that flags adjacent across
    // a facet have opposite parity.
    let mut orientation: Vec<i8> = vec![0; m];
    orientation[0] = 1;
    let mut stack = vec![0];
    while let Some(s) = stack.pop() {
        for t in 0..=d {
            let (other, b) = gluing.across[s][t];
            let mut facet = gluing.sorted[s].clone();
            let a = facet.remove(t);
            let mut here = facet.clone();
            here.push(a);
            let mut there = facet;
            there.push(b);
            let wanted = -orientation[s]
                * ordering_sign(&gluing.sorted[s], &here)
                * ordering_sign(&gluing.sorted[other], &there);
            if orientation[other] == 0 {
                orientation[other] = wanted;
                stack.push(other);
            } else if orientation[other] != wanted {
                return Err(Error::NotBipartite);
            }
        }
    }

    let table = PermutationTable::new(d + 1);
    let per_simplex = table.len();
    let parity_of = |s: usize, k: usize| orientation[s] * perm::sign(table.get(k));
    // flag id s * (d+1)! + k  ->  index within its color class
    let mut class_index = vec![0u32; m * per_simplex];
    let (mut blacks, mut whites) = (0u32, 0u32);
    for s in 0..m {
        for k in 0..per_simplex {
            let slot = &mut class_index[s * per_simplex + k];
            if parity_of(s, k) > 0 {
                *slot = blacks;
                blacks += 1;
            } else {
                *slot = whites;
                whites += 1;
            }
        }
    }
    debug_assert_eq!(blacks, whites);
    let p = blacks as usize;

    let mut images = vec![u32::MAX; (d + 1) * p];
    let mut order = vec![0u32; d + 1];
    for s in 0..m {
        for k in 0..per_simplex {
            if parity_of(s, k) < 0 {
                continue;
            }
            let black = class_index[s * per_simplex + k] as usize;
            let positions = table.get(k);
            for color in 0..=d {
                let neighbor = if color < d {
                    order.copy_from_slice(positions);
                    order.swap(color, color + 1);
                    s * per_simplex + perm_rank(&order)
                } else {
                    // top face: cross the facet omitting the last vertex
                    let omitted = positions[d] as usize;
                    let (other, b) = gluing.across[s][omitted];
                    let target = &gluing.sorted[other];
                    for (t, &pos) in positions[..d].iter().enumerate() {
                        let v = gluing.sorted[s][pos as usize];
                        order[t] = target.binary_search(&v).expect("shared facet") as u32;
                    }
                    order[d] = target.binary_search(&b).expect("opposite vertex") as u32;
                    other * per_simplex + perm_rank(&order)
                };
                let (ns, nk) = (neighbor / per_simplex, neighbor % per_simplex);
                if parity_of(ns, nk) > 0 {
                    return Err(Error::NotBipartite);
                }
                images[color * p + black] = class_index[neighbor];
            }
        }
    }
    let images: Vec<Vec<u32>> = images.chunks(p).map(<[u32]>::to_vec).collect();
    let g = ColoredGraph::new(d, 2 * p, &images)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(g)
}
