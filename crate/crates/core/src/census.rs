//! Exhaustive censuses of connected colored graphs of small order.
//!
//! Graphs are enumerated as tuples `(id, sigma_1, ..., sigma_d)`: fixing
//! `sigma_0` to the identity removes the relabeling freedom of the white
//! vertices. In canonical mode only one tuple per orbit under simultaneous
//! conjugation `sigma_c -> tau sigma_c tau^-1` is kept, namely the
//! lexicographically least one; colors are never permuted.
//!
//! Work is split by the index of `sigma_1`. Each chunk is tallied on its
//! own and the tallies are summed, so the result does not depend on the
//! number of threads.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{check_shape, ColoredGraph};
use crate::intmat::{unit_echelon_ranks, unit_echelon_ranks_narrow, NARROW};
use crate::jackets::{g_max, JacketCycle};
use crate::perm::{cycle_count, factorial, PermutationTable};

/// Largest number of tuples enumerated per order unless raised.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    #[default]
    Labeled,
    Canonical,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Labeled => "labeled",
            Mode::Canonical => "canonical",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "labeled" => Ok(Mode::Labeled),
            "canonical" => Ok(Mode::Canonical),
            other => Err(format!("unknown mode `{other}` (expected labeled or canonical)")),
        }
    }
}

/// `(p!)^d`, the number of tuples with `sigma_0` fixed.
pub fn tuple_count(d: usize, n: usize) -> Option<u128> {
    let f = factorial(n / 2)?;
    (0..d).try_fold(1u128, |acc, _| acc.checked_mul(f))
}

fn check_budget(d: usize, n: usize, budget: u128) -> Result<()> {
    check_shape(d, n)?;
    match tuple_count(d, n) {
        Some(tuples) if tuples <= budget => Ok(()),
        tuples => Err(Error::BudgetExceeded {
            tuples: tuples.unwrap_or(u128::MAX),
            budget,
        }),
    }
}

/// Advances the last `indices.len()` odometer digits in base `radix`.
fn advance(indices: &mut [usize], radix: usize) -> bool {
    for digit in indices.iter_mut().rev() {
        *digit += 1;
        if *digit < radix {
            return true;
        }
        *digit = 0;
    }
    false
}

/// `true` iff the tuple is the lexicographically least in its conjugation orbit.
fn is_canonical(table: &PermutationTable, indices: &[usize]) -> bool {
    let p = table.degree();
    'tau: for t in 1..table.len() {
        let tau = table.get(t);
        let tau_inv = table.inverse_of(t);
        for &idx in indices {
            let sigma = table.get(idx);
            for k in 0..p {
                let conj = tau[sigma[tau_inv[k] as usize] as usize];
                if conj < sigma[k] {
                    return false;
                }
                if conj > sigma[k] {
                    continue 'tau;
                }
            }
        }
    }
    true
}

fn tuple_is_connected(table: &PermutationTable, indices: &[usize]) -> bool {
    const STACK: usize = 32;
    let p = table.degree();
    if p <= STACK {
        let mut parent = [0; STACK];
        parent.iter_mut().enumerate().for_each(|(i, v)| *v = i);
        merges_to_one(table, indices, &mut parent[..p])
    } else {
        merges_to_one(table, indices, &mut (0..p).collect::<Vec<_>>())
    }
}

/// With colour 0 the identity, the graph is connected iff the other colours
/// join `0..p` into one class. `parent` starts as the identity.
fn merges_to_one(table: &PermutationTable, indices: &[usize], parent: &mut [usize]) -> bool {
    let p = parent.len();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = p;
    for &idx in indices {
        for (k, &v) in table.get(idx).iter().enumerate() {
            let (a, b) = (find(parent, k), find(parent, v as usize));
            if a != b {
                parent[a] = b;
                components -= 1;
                if components == 1 {
                    return true;
                }
            }
        }
    }
    components == 1
}

fn graph_from_tuple(d: usize, table: &PermutationTable, indices: &[usize]) -> ColoredGraph {
    let p = table.degree();
    let mut images = Vec::with_capacity((d + 1) * p);
    images.extend(0..p as u32);
    for &idx in indices {
        images.extend_from_slice(table.get(idx));
    }
    ColoredGraph::from_flat_unchecked(d, p, images)
}

/// Streams the connected graphs of order `n` in a fixed order.
pub struct ConnectedGraphs {
    d: usize,
    mode: Mode,
    table: PermutationTable,
    indices: Vec<usize>,
    exhausted: bool,
}

impl Iterator for ConnectedGraphs {
    type Item = ColoredGraph;

    fn next(&mut self) -> Option<ColoredGraph> {
        while !self.exhausted {
            let keep = tuple_is_connected(&self.table, &self.indices)
                && (self.mode == Mode::Labeled || is_canonical(&self.table, &self.indices));
            let graph = keep.then(|| graph_from_tuple(self.d, &self.table, &self.indices));
            self.exhausted = !advance(&mut self.indices, self.table.len());
            if graph.is_some() {
                return graph;
            }
        }
        None
    }
}

pub fn enumerate_connected(d: usize, n: usize, mode: Mode, budget: u128) -> Result<ConnectedGraphs> {
    check_budget(d, n, budget)?;
    Ok(ConnectedGraphs {
        d,
        mode,
        table: PermutationTable::new(n / 2),
        indices: vec![0; d],
        exhausted: false,
    })
}

/// Per-graph quantities gathered by the census.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphStats {
    pub total_faces: usize,
    pub degree: u64,
    pub min_genus: u64,
    pub h1q_trivial: bool,
    pub h1z_trivial: bool,
}

/// Largest permutation table for which [`CycleCounts`] is built.
const CYCLE_TABLE_MAX: usize = 1024;

/// `count[a * len + b]` is the number of cycles of `b^-1 a` over a
/// permutation table, so face counts of a tuple need no cycle walk.
pub(crate) struct CycleCounts {
    len: usize,
    count: Vec<u8>,
}

impl CycleCounts {
    pub(crate) fn new(table: &PermutationTable) -> Option<Self> {
        let len = table.len();
        if len > CYCLE_TABLE_MAX || table.degree() > u8::MAX as usize {
            return None;
        }
        let mut count = vec![0; len * len];
        let mut composed = vec![0; table.degree()];
        for a in 0..len {
            let pa = table.get(a);
            for b in 0..len {
                let inv_b = table.inverse_of(b);
                for (k, slot) in composed.iter_mut().enumerate() {
                    *slot = inv_b[pa[k] as usize];
                }
                count[a * len + b] = cycle_count(&composed) as u8;
            }
        }
        Some(CycleCounts { len, count })
    }

    fn get(&self, a: usize, b: usize) -> usize {
        self.count[a * self.len + b] as usize
    }
}

/// Allocation-free analysis of one tuple with every consistency check
/// applied inline.
pub(crate) struct Analyzer<'t> {
    d: usize,
    p: usize,
    n: usize,
    table: &'t PermutationTable,
    cycles: Option<&'t CycleCounts>,
    tuple: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    jacket_pairs: Vec<Vec<usize>>,
    factorial_dm1: i64,
    img: Vec<u32>,
    inv: Vec<u32>,
    face_of: Vec<u32>,
    pair_counts: Vec<usize>,
    seen: Vec<bool>,
    queue: Vec<usize>,
    red_col: Vec<u32>,
    matrix: Vec<i32>,
    narrow: Vec<[i16; NARROW]>,
}

const UNSET: u32 = u32::MAX;

impl<'t> Analyzer<'t> {
    pub(crate) fn new(d: usize, table: &'t PermutationTable, cycles: Option<&'t CycleCounts>) -> Self {
        let p = table.degree();
        let colors = d + 1;
        let pairs: Vec<(usize, usize)> = (0..colors)
            .flat_map(|i| (i + 1..colors).map(move |j| (i, j)))
            .collect();
        let jacket_pairs = JacketCycle::all(d)
            .iter()
            .map(|cycle| {
                cycle
                    .adjacent_pairs()
                    .map(|pair| pair.index(colors))
                    .collect()
            })
            .collect();
        let mut img = vec![0; colors * p];
        let mut inv = vec![0; colors * p];
        for k in 0..p {
            img[k] = k as u32;
            inv[k] = k as u32;
        }
        Analyzer {
            d,
            p,
            n: 2 * p,
            table,
            cycles,
            tuple: vec![0; colors],
            factorial_dm1: (1..d as i64).product(),
            face_of: vec![UNSET; pairs.len() * p],
            pair_counts: vec![0; pairs.len()],
            pairs,
            jacket_pairs,
            img,
            inv,
            seen: vec![false; 2 * p],
            queue: Vec::with_capacity(2 * p),
            red_col: vec![UNSET; colors * p],
            matrix: Vec::new(),
            narrow: Vec::new(),
        }
    }

    fn load(&mut self, indices: &[usize]) {
        let p = self.p;
        for (c, &idx) in indices.iter().enumerate() {
            let base = (c + 1) * p;
            self.img[base..base + p].copy_from_slice(self.table.get(idx));
            self.inv[base..base + p].copy_from_slice(self.table.inverse_of(idx));
        }
    }

    fn graph(&self) -> ColoredGraph {
        ColoredGraph::from_flat_unchecked(self.d, self.p, self.img.clone())
    }

    fn violation(&self, what: String) -> Error {
        Error::InvariantViolation {
            what,
            graph: self.graph().to_text(),
        }
    }

    /// Analyzes a connected tuple.
    pub(crate) fn analyze(&mut self, indices: &[usize]) -> Result<GraphStats> {
        self.load(indices);
        let (d, n) = (self.d, self.n);

        let total_faces = match self.cycles {
            Some(cycles) => {
                self.tuple[1..].copy_from_slice(indices);
                let mut total = 0;
                for (pi, &(i, j)) in self.pairs.iter().enumerate() {
                    let count = cycles.get(self.tuple[i], self.tuple[j]);
                    self.pair_counts[pi] = count;
                    total += count;
                }
                total
            }
            None => self.walk_faces(),
        };

        // jackets and degree
        let twice_offset = 2 + (d - 1) * n / 2;
        let gmax = g_max(d, n);
        let mut degree = 0u64;
        let mut min_genus = u64::MAX;
        let mut jacket_faces = 0usize;
        for pairs in &self.jacket_pairs {
            let fj: usize = pairs.iter().map(|&pi| self.pair_counts[pi]).sum();
            jacket_faces += fj;
            if fj > twice_offset || !(twice_offset - fj).is_multiple_of(2) {
                return Err(self.violation(format!("jacket with F_J = {fj} has no integral genus")));
            }
            let genus = ((twice_offset - fj) / 2) as u64;
            if genus > gmax {
                return Err(self.violation(format!("jacket genus {genus} exceeds g_max {gmax}")));
            }
            degree += genus;
            min_genus = min_genus.min(genus);
        }
        let fact = self.factorial_dm1;
        if jacket_faces as i64 != fact * total_faces as i64 {
            return Err(self.violation(format!(
                "sum of F_J = {jacket_faces} differs from (d-1)! |F| = {}",
                fact * total_faces as i64
            )));
        }
        let (di, ni, fi) = (d as i64, n as i64, total_faces as i64);
        // 8 omega = (d-1)! (4d + d(d-1)n - 4|F|)
        let closed8 = fact * (4 * di + di * (di - 1) * ni - 4 * fi);
        if 8 * degree as i64 != closed8 {
            return Err(self.violation(format!(
                "sum of jacket genera {degree} differs from closed form {closed8}/8"
            )));
        }

        let (h1q_trivial, h1z_trivial) = self.homology(total_faces)?;

        if h1q_trivial {
            // min_genus <= ((d-1)/d)(1 + (d-2)n/4)
            if 4 * di * min_genus as i64 > (di - 1) * (4 + (di - 2) * ni) {
                return Err(self.violation(format!("min jacket genus {min_genus} breaks the low-genus bound")));
            }
            // omega <= (d-1)! [(d-1)/2 + (d-1)(d-2)n/8]
            if 8 * degree as i64 > fact * (di - 1) * (4 + (di - 2) * ni) {
                return Err(self.violation(format!("degree {degree} exceeds the homology-sphere bound")));
            }
        }
        Ok(GraphStats {
            total_faces,
            degree,
            min_genus,
            h1q_trivial,
            h1z_trivial,
        })
    }

    /// Labels every black vertex with its face for each color pair, filling
    /// `face_of` and `pair_counts`. Returns the number of faces.
    fn walk_faces(&mut self) -> usize {
        let p = self.p;
        self.face_of.fill(UNSET);
        let mut total_faces = 0usize;
        for (pi, &(i, j)) in self.pairs.iter().enumerate() {
            let mut count = 0;
            for start in 0..p {
                if self.face_of[pi * p + start] != UNSET {
                    continue;
                }
                let mut k = start;
                while self.face_of[pi * p + k] == UNSET {
                    self.face_of[pi * p + k] = total_faces as u32;
                    k = self.inv[j * p + self.img[i * p + k] as usize] as usize;
                }
                total_faces += 1;
                count += 1;
            }
            self.pair_counts[pi] = count;
        }
        total_faces
    }

    /// Rational and integral triviality of the first homology.
    fn homology(&mut self, total_faces: usize) -> Result<(bool, bool)> {
        let (d, p, n) = (self.d, self.p, self.n);
        let colors = d + 1;
        let edges = colors * p;
        let nullity = edges + 1 - n;
        if total_faces < nullity {
            return Ok((false, false));
        }
        if self.cycles.is_some() {
            let walked = self.walk_faces();
            if walked != total_faces {
                return Err(self.violation(format!(
                    "face walk finds {walked} faces, cycle table {total_faces}"
                )));
            }
        }

        // breadth-first spanning tree from black 0, lowest color first
        self.seen.fill(false);
        self.red_col.fill(0);
        self.queue.clear();
        self.queue.push(0);
        self.seen[0] = true;
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for c in 0..colors {
                let (edge, w) = if v < p {
                    (c * p + v, p + self.img[c * p + v] as usize)
                } else {
                    let k = self.inv[c * p + v - p] as usize;
                    (c * p + k, k)
                };
                if !self.seen[w] {
                    self.seen[w] = true;
                    self.red_col[edge] = UNSET;
                    self.queue.push(w);
                }
            }
        }
        // rosette columns first, then tree columns
        let (mut rosette, mut tree) = (0, nullity as u32);
        for col in self.red_col.iter_mut() {
            if *col == UNSET {
                *col = tree;
                tree += 1;
            } else {
                *col = rosette;
                rosette += 1;
            }
        }
        debug_assert_eq!(rosette as usize, nullity);

        // One unit-pivot elimination settles almost every graph. Its state
        // after the rosette columns is an elimination of the reduced matrix,
        // so it yields both ranks, and success certifies that all invariant
        // factors of the reduced matrix equal 1.
        let ranks = if edges <= NARROW {
            self.narrow.clear();
            self.narrow.resize(total_faces, [0; NARROW]);
            for (pi, &(i, j)) in self.pairs.iter().enumerate() {
                for k in 0..p {
                    let row = &mut self.narrow[self.face_of[pi * p + k] as usize];
                    let high = j * p + self.inv[j * p + self.img[i * p + k] as usize] as usize;
                    row[self.red_col[i * p + k] as usize] = 1;
                    row[self.red_col[high] as usize] = -1;
                }
            }
            unit_echelon_ranks_narrow(&mut self.narrow, edges, nullity)
        } else {
            self.matrix.clear();
            self.matrix.resize(total_faces * edges, 0);
            for (pi, &(i, j)) in self.pairs.iter().enumerate() {
                for k in 0..p {
                    let row = self.face_of[pi * p + k] as usize * edges;
                    let high = j * p + self.inv[j * p + self.img[i * p + k] as usize] as usize;
                    self.matrix[row + self.red_col[i * p + k] as usize] = 1;
                    self.matrix[row + self.red_col[high] as usize] = -1;
                }
            }
            unit_echelon_ranks(&mut self.matrix, total_faces, edges, nullity)
        };
        let (full_rank, rank, unit) = match ranks {
            Some((reduced, full)) => (full, reduced, None),
            _ => {
                match crate::homology::analyze_homology(&self.graph()) {
                    Ok(report) => (
                        report.full_rank,
                        report.rank,
                        Some(report.h1_integral_trivial),
                    ),
                    Err(Error::GaugeRankMismatch { full, reduced }) => (full, reduced, None),
                    Err(e) => return Err(e),
                }
            }
        };
        if full_rank != rank {
            return Err(self.violation(format!(
                "full incidence rank {full_rank} differs from reduced rank {rank}"
            )));
        }
        if rank != nullity {
            return Ok((false, false));
        }
        Ok((true, unit.unwrap_or(true)))
    }
}


/// Per-chunk counts with dense histograms.
#[derive(Default)]
struct Tally {
    total: u64,
    h1q: u64,
    h1z: u64,
    degree: Vec<u64>,
    min_genus: Vec<u64>,
}

impl Tally {
    fn record(&mut self, stats: &GraphStats) {
        fn bump(histogram: &mut Vec<u64>, key: u64) {
            let key = key as usize;
            if key >= histogram.len() {
                histogram.resize(key + 1, 0);
            }
            histogram[key] += 1;
        }
        self.total += 1;
        self.h1q += u64::from(stats.h1q_trivial);
        self.h1z += u64::from(stats.h1z_trivial);
        bump(&mut self.degree, stats.degree);
        bump(&mut self.min_genus, stats.min_genus);
    }

    fn into_table(self, d: usize, n: usize, mode: Mode) -> CensusTable {
        let sparse = |dense: Vec<u64>| {
            dense
                .into_iter()
                .enumerate()
                .filter(|&(_, count)| count > 0)
                .map(|(key, count)| (key as u64, count))
                .collect()
        };
        CensusTable {
            d,
            n,
            mode,
            total_connected: self.total,
            h1q_trivial: self.h1q,
            h1z_trivial: self.h1z,
            degree_histogram: sparse(self.degree),
            min_genus_histogram: sparse(self.min_genus),
        }
    }
}

/// Aggregate counts for one `(d, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    pub d: usize,
    pub n: usize,
    pub mode: Mode,
    pub total_connected: u64,
    pub h1q_trivial: u64,
    pub h1z_trivial: u64,
    pub degree_histogram: BTreeMap<u64, u64>,
    pub min_genus_histogram: BTreeMap<u64, u64>,
}

impl CensusTable {
    fn empty(d: usize, n: usize, mode: Mode) -> Self {
        CensusTable {
            d,
            n,
            mode,
            total_connected: 0,
            h1q_trivial: 0,
            h1z_trivial: 0,
            degree_histogram: BTreeMap::new(),
            min_genus_histogram: BTreeMap::new(),
        }
    }

    fn merge(&mut self, other: &CensusTable) {
        self.total_connected += other.total_connected;
        self.h1q_trivial += other.h1q_trivial;
        self.h1z_trivial += other.h1z_trivial;
        for (k, v) in &other.degree_histogram {
            *self.degree_histogram.entry(*k).or_insert(0) += v;
        }
        for (k, v) in &other.min_genus_histogram {
            *self.min_genus_histogram.entry(*k).or_insert(0) += v;
        }
    }

    /// `h1q_trivial / total_connected` in lowest terms.
    pub fn sphere_fraction(&self) -> Ratio<u64> {
        Ratio::new(self.h1q_trivial, self.total_connected.max(1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusConfig {
    pub d: usize,
    pub n_max: usize,
    pub mode: Mode,
    pub threads: usize,
    pub budget: u128,
}

impl CensusConfig {
    pub fn new(d: usize, n_max: usize) -> Self {
        CensusConfig {
            d,
            n_max,
            mode: Mode::Labeled,
            threads: 1,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }
}

/// One table per even order `2, 4, ..., n_max`.
pub fn run_census(config: &CensusConfig) -> Result<Vec<CensusTable>> {
    if config.n_max < 2 {
        return Err(Error::BadOrder(config.n_max));
    }
    check_shape(config.d, 2)?;
    for n in (2..=config.n_max).step_by(2) {
        check_budget(config.d, n, config.budget)?;
    }
    (2..=config.n_max)
        .step_by(2)
        .map(|n| census_for_order(config.d, n, config.mode, config.threads, config.budget))
        .collect()
}

/// Census of a single order.
pub fn census_for_order(d: usize, n: usize, mode: Mode, threads: usize, budget: u128) -> Result<CensusTable> {
    check_budget(d, n, budget)?;
    let table = PermutationTable::new(n / 2);
    let cycles = CycleCounts::new(&table);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::InternalMismatch(format!("thread pool: {e}")))?;
    let abort = AtomicBool::new(false);
    let chunk = |first: usize| -> Result<CensusTable> {
        let mut tally = Tally::default();
        if abort.load(Ordering::Relaxed) {
            return Ok(tally.into_table(d, n, mode));
        }
        let mut analyzer = Analyzer::new(d, &table, cycles.as_ref());
        let mut indices = vec![0; d];
        indices[0] = first;
        loop {
            if tuple_is_connected(&table, &indices)
                && (mode == Mode::Labeled || is_canonical(&table, &indices))
            {
                match analyzer.analyze(&indices) {
                    Ok(stats) => tally.record(&stats),
                    Err(e) => {
                        abort.store(true, Ordering::Relaxed);
                        return Err(e);
                    }
                }
            }
            if !advance(&mut indices[1..], table.len()) {
                break;
            }
        }
        Ok(tally.into_table(d, n, mode))
    };
    let partials: Vec<Result<CensusTable>> =
        pool.install(|| (0..table.len()).into_par_iter().map(chunk).collect());
    let mut total = CensusTable::empty(d, n, mode);
    // an aborted chunk returns an empty tally, so the first error wins
    let mut first_error = None;
    for partial in partials {
        match partial {
            Ok(t) => total.merge(&t),
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
    }
    match first_error {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

pub const CENSUS_HEADER: &str =
    "d,n,mode,total_connected,h1q_trivial,h1z_trivial,sphere_fraction_num,sphere_fraction_den";
pub const DEGREE_HEADER: &str = "d,n,degree,count";
pub const MIN_GENUS_HEADER: &str = "d,n,min_genus,count";

pub fn census_csv(tables: &[CensusTable]) -> String {
    let mut out = format!("{CENSUS_HEADER}\n");
    for t in tables {
        let frac = t.sphere_fraction();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            t.d,
            t.n,
            t.mode,
            t.total_connected,
            t.h1q_trivial,
            t.h1z_trivial,
            frac.numer(),
            frac.denom()
        ));
    }
    out
}

fn histogram_csv(header: &str, tables: &[CensusTable], pick: fn(&CensusTable) -> &BTreeMap<u64, u64>) -> String {
    let mut out = format!("{header}\n");
    for t in tables {
        for (k, v) in pick(t) {
            out.push_str(&format!("{},{},{},{}\n", t.d, t.n, k, v));
        }
    }
    out
}

pub fn degree_csv(tables: &[CensusTable]) -> String {
    histogram_csv(DEGREE_HEADER, tables, |t| &t.degree_histogram)
}

pub fn min_genus_csv(tables: &[CensusTable]) -> String {
    histogram_csv(MIN_GENUS_HEADER, tables, |t| &t.min_genus_histogram)
}
