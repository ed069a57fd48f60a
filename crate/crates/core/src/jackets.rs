//! Jackets, their genera, and the degree of a colored graph.
//!
//! A jacket is a cyclic order of the `d+1` colors taken up to rotation and
//! reversal. Its ribbon graph keeps every vertex and edge and uses as faces
//! the bicolored faces whose two colors are adjacent in the cycle, so the
//! genus follows from Euler's relation `2 - 2g = n - |E| + F_J`. Jackets
//! also encode a splitting of the dual pseudo-manifold into two handlebodies;
//! that structure is not built here.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::faces::{ColorPair, FaceCensus};
use crate::graph::ColoredGraph;
use crate::perm;

pub type Rational = Ratio<i64>;

/// A color cycle in canonical form: starts at color 0 and its second entry
/// is smaller than its last.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct JacketCycle(Vec<u32>);

impl JacketCycle {
    /// Canonicalizes an arbitrary cyclic order of the colors `0..=d`.
    pub fn new(colors: &[u32], d: usize) -> Result<Self> {
        if colors.len() != d + 1 || !perm::is_bijection(colors) {
            return Err(Error::BadJacket(format!(
                "{colors:?} is not a cyclic order of the colors 0..={d}"
            )));
        }
        let start = colors.iter().position(|&c| c == 0).unwrap();
        let mut cycle: Vec<u32> = colors[start..].iter().chain(&colors[..start]).copied().collect();
        if d >= 2 && cycle[1] > cycle[d] {
            cycle[1..].reverse();
        }
        Ok(JacketCycle(cycle))
    }

    /// Parses a comma-separated color list such as `0,1,2,3`.
    pub fn parse(text: &str, d: usize) -> Result<Self> {
        let colors = text
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::BadJacket(format!("`{text}` is not a comma-separated color list")))?;
        Self::new(&colors, d)
    }

    /// All `d!/2` canonical cycles in lexicographic order.
    pub fn all(d: usize) -> Vec<JacketCycle> {
        let mut rest: Vec<u32> = (1..=d as u32).collect();
        let mut out = Vec::new();
        loop {
            if rest[0] < rest[d - 1] {
                let mut cycle = vec![0];
                cycle.extend_from_slice(&rest);
                out.push(JacketCycle(cycle));
            }
            if !perm::next_permutation(&mut rest) {
                break;
            }
        }
        out
    }

    pub fn colors(&self) -> &[u32] {
        &self.0
    }

    /// The `d+1` color pairs adjacent in the cycle.
    pub fn adjacent_pairs(&self) -> impl Iterator<Item = ColorPair> + '_ {
        let len = self.0.len();
        (0..len).map(move |t| ColorPair::new(self.0[t] as usize, self.0[(t + 1) % len] as usize))
    }

    /// The two neighbors of `color` in the cycle.
    pub fn neighbors(&self, color: u32) -> (u32, u32) {
        let len = self.0.len();
        let t = self.0.iter().position(|&c| c == color).expect("color in cycle");
        (self.0[(t + len - 1) % len], self.0[(t + 1) % len])
    }
}

impl fmt::Display for JacketCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, c) in self.0.iter().enumerate() {
            if t > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Jacket {
    pub cycle: JacketCycle,
    pub face_count: usize,
    pub genus: u64,
}

/// `floor((2 + n(d-1)) / 4)`, the largest genus a jacket can have.
pub fn g_max(d: usize, n: usize) -> u64 {
    ((2 + n * (d - 1)) / 4) as u64
}

/// Genus from Euler's relation; `None` when it is not a non-negative integer.
pub fn jacket_genus(d: usize, n: usize, face_count: usize) -> Option<u64> {
    // 2g = 2 + (d-1)n/2 - F_J
    let twice = (2 + (d - 1) * n / 2) as i64 - face_count as i64;
    if twice < 0 || twice % 2 != 0 {
        None
    } else {
        Some((twice / 2) as u64)
    }
}

pub fn jacket_of(g: &ColoredGraph, faces: &FaceCensus, cycle: JacketCycle) -> Result<Jacket> {
    let face_count: usize = cycle.adjacent_pairs().map(|pair| faces.count(pair)).sum();
    let genus = jacket_genus(g.dimension(), g.order(), face_count).ok_or_else(|| {
        Error::InternalMismatch(format!(
            "jacket {cycle} has F_J = {face_count}, which gives no integral genus"
        ))
    })?;
    Ok(Jacket {
        cycle,
        face_count,
        genus,
    })
}

/// All `d!/2` jackets of a connected graph.
pub fn enumerate_jackets(g: &ColoredGraph, faces: &FaceCensus) -> Result<Vec<Jacket>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    JacketCycle::all(g.dimension())
        .into_iter()
        .map(|cycle| jacket_of(g, faces, cycle))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub genera: Vec<(JacketCycle, u64)>,
    /// Sum of the jacket genera.
    pub degree_sum: u64,
    /// `(d-1)! [d/2 + d(d-1)n/8 - |F|/2]`.
    pub degree_closed_form: Rational,
    pub min_genus: u64,
    /// `((d-1)/d)(1 + (d-2)n/4)`.
    pub low_genus_bound: Rational,
    /// `(d-1)! [(d-1)/2 + (d-1)(d-2)n/8]`, the degree ceiling for graphs
    /// with trivial first homology.
    pub degree_bound: Rational,
}

impl DegreeReport {
    pub fn degree(&self) -> u64 {
        self.degree_sum
    }
}

fn factorial_i64(k: usize) -> i64 {
    (1..=k as i64).product()
}

/// The closed form of the degree in terms of the total face count.
pub fn degree_closed_form(d: usize, n: usize, total_faces: usize) -> Rational {
    let (d, n, f) = (d as i64, n as i64, total_faces as i64);
    Rational::from_integer(factorial_i64(d as usize - 1))
        * (Rational::new(d, 2) + Rational::new(d * (d - 1) * n, 8) - Rational::new(f, 2))
}

pub fn low_genus_bound(d: usize, n: usize) -> Rational {
    let (d, n) = (d as i64, n as i64);
    Rational::new(d - 1, d) * (Rational::from_integer(1) + Rational::new((d - 2) * n, 4))
}

pub fn degree_bound(d: usize, n: usize) -> Rational {
    let (d, n) = (d as i64, n as i64);
    Rational::from_integer(factorial_i64(d as usize - 1))
        * (Rational::new(d - 1, 2) + Rational::new((d - 1) * (d - 2) * n, 8))
}

/// Degree computed as a sum over jackets and from the closed form.
pub fn degree(g: &ColoredGraph, jackets: &[Jacket], faces: &FaceCensus) -> Result<DegreeReport> {
    let (d, n) = (g.dimension(), g.order());
    let degree_sum: u64 = jackets.iter().map(|j| j.genus).sum();
    let closed = degree_closed_form(d, n, faces.total);
    if closed != Rational::from_integer(degree_sum as i64) {
        return Err(Error::InternalMismatch(format!(
            "sum of jacket genera {degree_sum} differs from closed form {closed}"
        )));
    }
    let min_genus = jackets.iter().map(|j| j.genus).min().ok_or_else(|| {
        Error::InternalMismatch("no jackets".into())
    })?;
    Ok(DegreeReport {
        genera: jackets.iter().map(|j| (j.cycle.clone(), j.genus)).collect(),
        degree_sum,
        degree_closed_form: closed,
        min_genus,
        low_genus_bound: low_genus_bound(d, n),
        degree_bound: degree_bound(d, n),
    })
}

/// Holds unless the graph is homology-trivial and every jacket exceeds the
/// low-genus bound.
pub fn check_low_genus_bound(report: &DegreeReport, homology_trivial: bool) -> bool {
    !homology_trivial || Rational::from_integer(report.min_genus as i64) <= report.low_genus_bound
}

/// Holds unless the graph is homology-trivial and its degree exceeds
/// `(d-1)! [(d-1)/2 + (d-1)(d-2)n/8]`.
pub fn check_degree_bound(report: &DegreeReport, homology_trivial: bool) -> bool {
    !homology_trivial || Rational::from_integer(report.degree_sum as i64) <= report.degree_bound
}
