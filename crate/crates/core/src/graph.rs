//! Colored graphs stored as one permutation per color.
//!
//! A graph of dimension `d` and order `n` has `p = n/2` black and `p` white
//! vertices. Color `c` contributes the edges `black k -> white sigma[c](k)`,
//! so every vertex meets exactly one edge of every color. Edges are always
//! read in the black-to-white direction.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm;

pub const MIN_DIMENSION: usize = 2;
pub const MAX_DIMENSION: usize = 8;

/// An edge named by its color and its black endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId {
    pub color: u32,
    pub black: u32,
}

impl EdgeId {
    pub fn new(color: usize, black: usize) -> Self {
        EdgeId {
            color: color as u32,
            black: black as u32,
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.color, self.black)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    d: usize,
    p: usize,
    images: Vec<u32>,
    inverses: Vec<u32>,
}

impl ColoredGraph {
    /// Validates and builds a graph from one image sequence per color.
    pub fn new(d: usize, n: usize, images: &[Vec<u32>]) -> Result<Self> {
        check_shape(d, n)?;
        let p = n / 2;
        if images.len() != d + 1 {
            return Err(Error::BadColorCount {
                expected: d + 1,
                found: images.len(),
            });
        }
        let mut flat = Vec::with_capacity((d + 1) * p);
        for (color, seq) in images.iter().enumerate() {
            if seq.len() != p {
                return Err(Error::BadLength {
                    color,
                    expected: p,
                    found: seq.len(),
                });
            }
            if !perm::is_bijection(seq) {
                return Err(Error::NonBijective { color, p });
            }
            flat.extend_from_slice(seq);
        }
        Ok(Self::from_flat_unchecked(d, p, flat))
    }

    /// Builds from a flat `(d+1) * p` image buffer that is already known to
    /// hold `d+1` bijections.
    pub(crate) fn from_flat_unchecked(d: usize, p: usize, images: Vec<u32>) -> Self {
        let mut inverses = vec![0; images.len()];
        for c in 0..=d {
            for k in 0..p {
                inverses[c * p + images[c * p + k] as usize] = k as u32;
            }
        }
        ColoredGraph {
            d,
            p,
            images,
            inverses,
        }
    }

    /// The order-2 graph: one black and one white vertex joined by `d+1` edges.
    pub fn dipole(d: usize) -> Result<Self> {
        Self::new(d, 2, &vec![vec![0]; d + 1])
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn colors(&self) -> usize {
        self.d + 1
    }

    /// Total vertex count `n`.
    pub fn order(&self) -> usize {
        2 * self.p
    }

    /// Number of black (equivalently white) vertices.
    pub fn half_order(&self) -> usize {
        self.p
    }

    pub fn sigma(&self, color: usize) -> &[u32] {
        &self.images[color * self.p..(color + 1) * self.p]
    }

    pub fn sigma_inverse(&self, color: usize) -> &[u32] {
        &self.inverses[color * self.p..(color + 1) * self.p]
    }

    pub fn edge_count(&self) -> usize {
        self.colors() * self.p
    }

    /// `|E| - n + 1`, the edge count of any rosette of a connected graph.
    pub fn nullity(&self) -> usize {
        self.edge_count() + 1 - self.order()
    }

    pub fn edge_index(&self, edge: EdgeId) -> usize {
        edge.color as usize * self.p + edge.black as usize
    }

    pub fn edge_at(&self, index: usize) -> EdgeId {
        EdgeId::new(index / self.p, index % self.p)
    }

    /// White endpoint of an edge.
    pub fn white_of(&self, edge: EdgeId) -> u32 {
        self.sigma(edge.color as usize)[edge.black as usize]
    }

    /// `true` iff all vertices lie in one component.
    pub fn is_connected(&self) -> bool {
        // White vertex w is merged into black sigma[0]^-1(w); the remaining
        // colors then link black k with black sigma[0]^-1(sigma[c](k)).
        let mut uf = UnionFind::new(self.p);
        let inv0 = self.sigma_inverse(0);
        for c in 1..=self.d {
            let s = self.sigma(c);
            for k in 0..self.p {
                uf.union(k, inv0[s[k] as usize] as usize);
            }
        }
        uf.components() == 1
    }

    /// Serializes in the line-oriented graph file format.
    pub fn to_text(&self) -> String {
        let mut out = format!("d={} n={}\n", self.d, self.order());
        for c in 0..=self.d {
            out.push_str(&c.to_string());
            out.push(':');
            for v in self.sigma(c) {
                out.push(' ');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// Parses the graph file format, reporting the offending line and column.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));
        let (line_no, header) = lines.next().unwrap_or((1, ""));
        let mut fields = Fields::new(line_no, header);
        let d = fields.key_value("d")?;
        let n = fields.key_value("n")?;
        fields.finish()?;
        if !(MIN_DIMENSION..=MAX_DIMENSION).contains(&d) {
            return Err(parse_err(line_no, 1, format!("dimension {d} outside 2..=8")));
        }
        if n < 2 || !n.is_multiple_of(2) {
            return Err(parse_err(line_no, 1, format!("order {n} must be even and >= 2")));
        }
        let p = n / 2;
        let mut images = Vec::with_capacity(d + 1);
        for color in 0..=d {
            let Some((line_no, line)) = lines.next() else {
                return Err(parse_err(
                    line_no + color + 1,
                    1,
                    format!("expected {} color lines, found {color}", d + 1),
                ));
            };
            if line.trim().is_empty() {
                return Err(parse_err(
                    line_no,
                    1,
                    format!("expected {} color lines, found {color}", d + 1),
                ));
            }
            let mut fields = Fields::new(line_no, line);
            let (col, label) = fields.token().expect("line is non-empty");
            let Some(label) = label.strip_suffix(':') else {
                return Err(parse_err(line_no, col, "expected `<color>:`"));
            };
            let c: usize = label
                .parse()
                .map_err(|_| parse_err(line_no, col, format!("bad color label `{label}`")))?;
            if c < color {
                return Err(parse_err(line_no, col, format!("duplicate color {c}")));
            }
            if c != color {
                return Err(parse_err(
                    line_no,
                    col,
                    format!("expected color {color}, found {c}"),
                ));
            }
            let mut seq = Vec::with_capacity(p);
            while let Some((col, tok)) = fields.token() {
                let v: u32 = tok
                    .parse()
                    .map_err(|_| parse_err(line_no, col, format!("bad image `{tok}`")))?;
                if seq.len() == p {
                    return Err(parse_err(line_no, col, "trailing garbage after images"));
                }
                if v as usize >= p {
                    return Err(parse_err(line_no, col, format!("image {v} out of range 0..{p}")));
                }
                seq.push(v);
            }
            if seq.len() != p {
                return Err(parse_err(
                    line_no,
                    line.len() + 1,
                    format!("expected {p} images, found {}", seq.len()),
                ));
            }
            images.push(seq);
        }
        for (line_no, line) in lines {
            if !line.trim().is_empty() {
                let col = line.len() - line.trim_start().len() + 1;
                return Err(parse_err(line_no, col, "trailing garbage after last color line"));
            }
        }
        match Self::new(d, n, &images) {
            Err(Error::NonBijective { color, .. }) => Err(parse_err(
                color + 2,
                1,
                format!("color {color} images do not form a permutation"),
            )),
            other => other,
        }
    }
}

impl FromStr for ColoredGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Builds a graph from explicit image sequences.
pub fn build_graph(d: usize, n: usize, images: &[Vec<u32>]) -> Result<ColoredGraph> {
    ColoredGraph::new(d, n, images)
}

pub(crate) fn check_shape(d: usize, n: usize) -> Result<()> {
    if !(MIN_DIMENSION..=MAX_DIMENSION).contains(&d) {
        return Err(Error::BadDimension(d));
    }
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::BadOrder(n));
    }
    Ok(())
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace tokenizer that remembers 1-based columns.
pub(crate) struct Fields<'a> {
    line_no: usize,
    line: &'a str,
    pos: usize,
}

impl<'a> Fields<'a> {
    pub(crate) fn new(line_no: usize, line: &'a str) -> Self {
        let line = line.strip_suffix('\r').unwrap_or(line);
        Fields {
            line_no,
            line,
            pos: 0,
        }
    }

    pub(crate) fn token(&mut self) -> Option<(usize, &'a str)> {
        let rest = &self.line[self.pos..];
        let start = self.pos + (rest.len() - rest.trim_start().len());
        if start >= self.line.len() {
            self.pos = self.line.len();
            return None;
        }
        let tail = &self.line[start..];
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        self.pos = start + len;
        Some((start + 1, &tail[..len]))
    }

    /// Reads a `key=<usize>` token.
    pub(crate) fn key_value(&mut self, key: &str) -> Result<usize> {
        let line_no = self.line_no;
        let Some((col, tok)) = self.token() else {
            return Err(parse_err(line_no, self.line.len() + 1, format!("missing `{key}=`")));
        };
        let value = tok
            .strip_prefix(key)
            .and_then(|t| t.strip_prefix('='))
            .ok_or_else(|| parse_err(line_no, col, format!("expected `{key}=<int>`, found `{tok}`")))?;
        value
            .parse()
            .map_err(|_| parse_err(line_no, col, format!("bad integer in `{tok}`")))
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        match self.token() {
            None => Ok(()),
            Some((col, _)) => Err(parse_err(self.line_no, col, "trailing garbage")),
        }
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; `false` if they were already one.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.components -= 1;
        true
    }

    pub(crate) fn components(&self) -> usize {
        self.components
    }
}
