//! Full per-graph report: faces, jackets, degree, bounds and homology.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::faces::{enumerate_faces, FaceCensus};
use crate::graph::ColoredGraph;
use crate::homology::{homology_report, incidence_matrix, spanning_tree, HomologyReport};
use crate::jackets::{
    check_degree_bound, check_low_genus_bound, degree, enumerate_jackets, DegreeReport, Jacket, Rational,
};

#[derive(Debug, Clone)]
pub struct GraphAnalysis {
    pub graph: ColoredGraph,
    pub faces: FaceCensus,
    pub jackets: Vec<Jacket>,
    pub degree: DegreeReport,
    pub homology: HomologyReport,
    pub low_genus_holds: bool,
    pub degree_bound_holds: bool,
}

pub fn analyze(g: &ColoredGraph) -> Result<GraphAnalysis> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let faces = enumerate_faces(g);
    let jackets = enumerate_jackets(g, &faces)?;
    let degree = degree(g, &jackets, &faces)?;
    let matrix = incidence_matrix(g, &faces);
    let tree = spanning_tree(g)?;
    let homology = homology_report(g, &matrix, &tree)?;
    let trivial = homology.h1_rational_trivial;
    Ok(GraphAnalysis {
        graph: g.clone(),
        low_genus_holds: check_low_genus_bound(&degree, trivial),
        degree_bound_holds: check_degree_bound(&degree, trivial),
        faces,
        jackets,
        degree,
        homology,
    })
}

fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn holds(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "violated"
    }
}

impl GraphAnalysis {
    pub fn to_text(&self) -> String {
        let g = &self.graph;
        let mut out = format!(
            "graph d={} n={} E={} L={}\n",
            g.dimension(),
            g.order(),
            g.edge_count(),
            g.nullity()
        );
        let counts: Vec<String> = self
            .faces
            .pairs()
            .iter()
            .map(|pair| format!("F_{}{}={}", pair.low, pair.high, self.faces.count(*pair)))
            .collect();
        out.push_str(&format!("faces total={} {}\n", self.faces.total, counts.join(" ")));
        for face in &self.faces.faces {
            let blacks: Vec<String> = face.blacks.iter().map(ToString::to_string).collect();
            out.push_str(&format!(
                "face {},{} length={} blacks={}\n",
                face.pair.low,
                face.pair.high,
                face.length(),
                blacks.join(" ")
            ));
        }
        for j in &self.jackets {
            out.push_str(&format!("jacket {} F_J={} g={}\n", j.cycle, j.face_count, j.genus));
        }
        out.push_str(&format!(
            "degree={} min_genus={} low_genus_bound={}\n",
            self.degree.degree_sum,
            self.degree.min_genus,
            fraction(&self.degree.low_genus_bound)
        ));
        out.push_str(&format!(
            "low_genus={} degree_bound={} degree_bound_check={}\n",
            holds(self.low_genus_holds),
            fraction(&self.degree.degree_bound),
            holds(self.degree_bound_holds)
        ));
        out.push_str(&self.homology.to_string());
        out.push('\n');
        out
    }

    pub fn to_json(&self) -> AnalysisJson {
        let g = &self.graph;
        AnalysisJson {
            d: g.dimension(),
            n: g.order(),
            edges: g.edge_count(),
            nullity: g.nullity(),
            faces: FacesJson {
                total: self.faces.total,
                count_by_pair: self
                    .faces
                    .pairs()
                    .iter()
                    .map(|pair| PairCountJson {
                        pair: [pair.low, pair.high],
                        count: self.faces.count(*pair),
                    })
                    .collect(),
                cycles: self
                    .faces
                    .faces
                    .iter()
                    .map(|f| FaceJson {
                        pair: [f.pair.low, f.pair.high],
                        blacks: f.blacks.clone(),
                    })
                    .collect(),
            },
            jackets: self
                .jackets
                .iter()
                .map(|j| JacketJson {
                    cycle: j.cycle.colors().to_vec(),
                    face_count: j.face_count,
                    genus: j.genus,
                })
                .collect(),
            degree: DegreeJson {
                sum: self.degree.degree_sum,
                closed_form: fraction(&self.degree.degree_closed_form),
                min_genus: self.degree.min_genus,
                low_genus_bound: fraction(&self.degree.low_genus_bound),
                low_genus_holds: self.low_genus_holds,
                degree_bound: fraction(&self.degree.degree_bound),
                degree_bound_holds: self.degree_bound_holds,
            },
            homology: HomologyJson {
                spanning_tree: self
                    .homology
                    .spanning_tree
                    .iter()
                    .map(|e| [e.color, e.black])
                    .collect(),
                rank: self.homology.rank,
                full_rank: self.homology.full_rank,
                nullity: self.homology.nullity,
                face_count: self.homology.face_count,
                invariant_factors: self
                    .homology
                    .invariant_factors
                    .iter()
                    .map(ToString::to_string)
                    .collect(),
                h1_rational_trivial: self.homology.h1_rational_trivial,
                h1_integral_trivial: self.homology.h1_integral_trivial,
            },
        }
    }
}

/// JSON form of [`GraphAnalysis`]. Fractions are `"num/den"` strings and
/// invariant factors are decimal strings, since they may exceed 64 bits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisJson {
    pub d: usize,
    pub n: usize,
    pub edges: usize,
    pub nullity: usize,
    pub faces: FacesJson,
    pub jackets: Vec<JacketJson>,
    pub degree: DegreeJson,
    pub homology: HomologyJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacesJson {
    pub total: usize,
    pub count_by_pair: Vec<PairCountJson>,
    pub cycles: Vec<FaceJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairCountJson {
    pub pair: [u32; 2],
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceJson {
    pub pair: [u32; 2],
    pub blacks: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JacketJson {
    pub cycle: Vec<u32>,
    pub face_count: usize,
    pub genus: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeJson {
    pub sum: u64,
    pub closed_form: String,
    pub min_genus: u64,
    pub low_genus_bound: String,
    pub low_genus_holds: bool,
    pub degree_bound: String,
    pub degree_bound_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomologyJson {
    pub spanning_tree: Vec<[u32; 2]>,
    pub rank: usize,
    pub full_rank: usize,
    pub nullity: usize,
    pub face_count: usize,
    pub invariant_factors: Vec<String>,
    pub h1_rational_trivial: bool,
    pub h1_integral_trivial: bool,
}
