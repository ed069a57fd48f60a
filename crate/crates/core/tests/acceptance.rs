//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails.
//!
//! Run alone with `cargo test --release -p chromon-core --test acceptance`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use chromon::census::{census_csv, census_for_order, degree_csv, min_genus_csv, tuple_count};
use chromon::homology::analyze_homology;
use chromon::jackets::g_max;
use chromon::{
    analyze, barycentric_colorize, enumerate_connected, enumerate_faces, enumerate_jackets,
    incidence_matrix, run_census, tree_cotree, CensusConfig, ColoredGraph, EdgeId, GraphAnalysis,
    Mode, Rational, SimplicialComplex, DEFAULT_BUDGET,
};
use num_bigint::BigInt;
use num_traits::One;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Orders covered by the exhaustive suites.
const SWEEP: [(usize, usize); 6] = [(3, 2), (3, 4), (3, 6), (3, 8), (4, 2), (4, 4)];

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

fn connected_graphs(d: usize, n: usize) -> Vec<ColoredGraph> {
    enumerate_connected(d, n, Mode::Labeled, DEFAULT_BUDGET)
        .expect("within budget")
        .collect()
}

fn analyses(d: usize, n: usize) -> Result<Vec<GraphAnalysis>, String> {
    connected_graphs(d, n)
        .iter()
        .map(|g| analyze(g).map_err(|e| format!("d={d} n={n}: {e}\n{g}")))
        .collect()
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:.2?}, limit {limit:.0?}"))
    }
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn dipole_pin() -> Outcome {
    let start = Instant::now();
    let a = analyze(&ColoredGraph::dipole(3).unwrap()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(a.faces.total == 6, || format!("|F| = {}", a.faces.total))?;
    ensure(a.jackets.len() == 3 && a.jackets.iter().all(|j| j.genus == 0), || {
        format!("jackets {:?}", a.jackets)
    })?;
    ensure(a.degree.degree_sum == 0, || format!("sum of genera {}", a.degree.degree_sum))?;
    ensure(a.degree.degree_closed_form == Rational::from_integer(0), || {
        format!("closed form {}", a.degree.degree_closed_form)
    })?;
    ensure(a.homology.rank == 3 && a.homology.nullity == 3, || {
        format!("rank {} nullity {}", a.homology.rank, a.homology.nullity)
    })?;
    ensure(a.homology.invariant_factors == vec![BigInt::one(); 3], || {
        format!("factors {:?}", a.homology.invariant_factors)
    })?;
    ensure(a.degree.low_genus_bound == Rational::from_integer(1), || {
        format!("bound {}", a.degree.low_genus_bound)
    })?;
    ensure(a.degree.min_genus == 0, || format!("min genus {}", a.degree.min_genus))?;
    within(elapsed, Duration::from_secs(1), "dipole report")?;
    Ok(format!("|F|=6, three planar jackets, rank 3, factors 1,1,1 in {elapsed:.2?}"))
}

fn identity_suite() -> Outcome {
    let mut checked = 0;
    for (d, n) in SWEEP {
        let edges = (n * (d + 1) / 2) as i64;
        for a in analyses(d, n)? {
            let g = &a.graph;
            ensure(Rational::from_integer(a.degree.degree_sum as i64) == a.degree.degree_closed_form, || {
                format!("sum of genera {} vs closed form {}\n{g}", a.degree.degree_sum, a.degree.degree_closed_form)
            })?;
            for j in &a.jackets {
                // Euler: 2 - 2g = V - E + F_J
                ensure(2 - 2 * j.genus as i64 == n as i64 - edges + j.face_count as i64, || {
                    format!("jacket {} genus {} breaks Euler\n{g}", j.cycle, j.genus)
                })?;
                ensure(j.genus <= g_max(d, n), || format!("jacket {} genus {}\n{g}", j.cycle, j.genus))?;
            }
            let sum_fj: usize = a.jackets.iter().map(|j| j.face_count).sum();
            ensure(sum_fj as i64 == factorial(d - 1) * a.faces.total as i64, || {
                format!("sum of F_J {sum_fj}, |F| {}\n{g}", a.faces.total)
            })?;
            let full = incidence_matrix(g, &a.faces).matrix.rank();
            ensure(full == a.homology.rank && a.homology.full_rank == a.homology.rank, || {
                format!("full rank {full} vs reduced {}\n{g}", a.homology.rank)
            })?;
            checked += 1;
        }
    }
    let start = Instant::now();
    run_census(&CensusConfig::new(3, 8).threads(1)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10), "d=3 n<=8 census, one thread")?;
    Ok(format!("{checked} graphs; d=3 n<=8 single-threaded census in {elapsed:.2?}"))
}

fn low_genus_suite() -> Outcome {
    let mut checked = 0;
    for (d, n) in SWEEP {
        let (di, ni) = (d as i64, n as i64);
        let bound = Rational::new((di - 1) * (4 + (di - 2) * ni), 4 * di);
        for a in analyses(d, n)? {
            if !a.homology.h1_rational_trivial {
                continue;
            }
            let min = a.jackets.iter().map(|j| j.genus).min().unwrap();
            ensure(Rational::from_integer(min as i64) <= bound, || {
                format!("min genus {min} > {bound}\n{}", a.graph)
            })?;
            ensure(a.low_genus_holds, || format!("report disagrees\n{}", a.graph))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} rationally trivial graphs, zero violations"))
}

fn degree_ceiling_suite() -> Outcome {
    let mut checked = 0;
    for (d, n) in SWEEP {
        let (di, ni) = (d as i64, n as i64);
        let bound = Rational::new(factorial(d - 1) * (di - 1) * (4 + (di - 2) * ni), 8);
        for a in analyses(d, n)? {
            if !a.homology.h1_rational_trivial {
                continue;
            }
            ensure(Rational::from_integer(a.degree.degree_sum as i64) <= bound, || {
                format!("degree {} > {bound}\n{}", a.degree.degree_sum, a.graph)
            })?;
            ensure(a.degree_bound_holds, || format!("report disagrees\n{}", a.graph))?;
            checked += 1;
        }
    }
    // the census applies the same ceiling inline to every graph it visits
    let tables = run_census(&CensusConfig::new(3, 10)).map_err(|e| e.to_string())?;
    let census: u64 = tables.iter().map(|t| t.h1q_trivial).sum();
    Ok(format!("{checked} graphs explicitly, {census} more through the d=3 n<=10 census"))
}

/// Root of `x` in a plain union-find over `parent`.
fn root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Checks that `links` form a spanning tree on `nodes` vertices.
fn is_spanning_tree(nodes: usize, links: &[(usize, usize)]) -> bool {
    if links.len() + 1 != nodes {
        return false;
    }
    let mut parent: Vec<usize> = (0..nodes).collect();
    links.iter().all(|&(a, b)| {
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        parent[ra] = rb;
        ra != rb
    })
}

fn decomposition_suite() -> Outcome {
    let mut splits = 0;
    for (d, n) in [(3, 2), (3, 4), (3, 6), (4, 2), (4, 4)] {
        for g in connected_graphs(d, n) {
            let faces = enumerate_faces(&g);
            let p = g.half_order();
            for jacket in enumerate_jackets(&g, &faces).map_err(|e| e.to_string())? {
                let split = tree_cotree(&g, &jacket).map_err(|e| format!("{e}\n{g}"))?;
                let fail = |what: &str| format!("jacket {}: {what}\n{g}", jacket.cycle);
                ensure(split.crossing_edges.len() as u64 == 2 * jacket.genus, || fail("|CE| != 2g"))?;

                let all: Vec<EdgeId> = [&split.tree_edges, &split.cotree_edges, &split.crossing_edges]
                    .into_iter()
                    .flatten()
                    .copied()
                    .collect();
                let distinct: BTreeSet<usize> = all.iter().map(|&e| g.edge_index(e)).collect();
                ensure(all.len() == g.edge_count() && distinct.len() == all.len(), || fail("not a partition"))?;

                let tree: Vec<(usize, usize)> = split
                    .tree_edges
                    .iter()
                    .map(|&e| (e.black as usize, p + g.white_of(e) as usize))
                    .collect();
                ensure(is_spanning_tree(g.order(), &tree), || fail("tree does not span"))?;

                // each cotree edge joins the two jacket faces on either side
                let jacket_faces: Vec<usize> = faces
                    .faces
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| jacket.cycle.adjacent_pairs().any(|pair| pair == f.pair))
                    .map(|(i, _)| i)
                    .collect();
                let local = |face: usize| jacket_faces.iter().position(|&f| f == face).unwrap();
                let dual: Vec<(usize, usize)> = split
                    .cotree_edges
                    .iter()
                    .map(|&e| {
                        let (left, right) = jacket.cycle.neighbors(e.color);
                        (
                            local(faces.face_containing(e, left as usize)),
                            local(faces.face_containing(e, right as usize)),
                        )
                    })
                    .collect();
                ensure(dual.iter().all(|&(a, b)| a != b) || jacket_faces.len() == 1, || fail("cotree loop"))?;
                ensure(is_spanning_tree(jacket_faces.len(), &dual), || fail("cotree does not span the faces"))?;
                splits += 1;
            }
        }
    }
    Ok(format!("{splits} jacket splits with |CE| = 2g"))
}

/// All permutations of `0..p`.
fn permutations(p: usize) -> Vec<Vec<u32>> {
    if p == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for shorter in permutations(p - 1) {
        for slot in 0..p {
            let mut perm = shorter.clone();
            perm.insert(slot, p as u32 - 1);
            out.push(perm);
        }
    }
    out
}

/// Connected labeled graphs counted from scratch: colour 0 is the identity,
/// every tuple of the other colours is tried and connectivity is decided by
/// union-find over the 2p vertices.
fn brute_force_connected(d: usize, n: usize) -> u64 {
    let p = n / 2;
    let perms = permutations(p);
    let mut count = 0;
    let mut choice = vec![0usize; d];
    loop {
        let mut parent: Vec<usize> = (0..2 * p).collect();
        for k in 0..p {
            let r = root(&mut parent, k);
            let w = root(&mut parent, p + k);
            parent[r] = w;
        }
        for &c in &choice {
            for (k, &w) in perms[c].iter().enumerate() {
                let a = root(&mut parent, k);
                let b = root(&mut parent, p + w as usize);
                parent[a] = b;
            }
        }
        let top = root(&mut parent, 0);
        if (0..2 * p).all(|v| root(&mut parent, v) == top) {
            count += 1;
        }
        let mut slot = 0;
        loop {
            if slot == d {
                return count;
            }
            choice[slot] += 1;
            if choice[slot] < perms.len() {
                break;
            }
            choice[slot] = 0;
            slot += 1;
        }
    }
}

fn csv_bundle(threads: usize, mode: Mode) -> Result<String, String> {
    let tables = run_census(&CensusConfig::new(3, 8).threads(threads).mode(mode)).map_err(|e| e.to_string())?;
    Ok(census_csv(&tables) + &degree_csv(&tables) + &min_genus_csv(&tables))
}

fn census_counts() -> Outcome {
    let tables = run_census(&CensusConfig::new(3, 8).threads(1)).map_err(|e| e.to_string())?;
    for t in &tables {
        let oracle = brute_force_connected(3, t.n);
        ensure(oracle == t.total_connected, || {
            format!("n={}: census {} vs brute force {oracle}", t.n, t.total_connected)
        })?;
    }
    let totals: Vec<u64> = tables.iter().map(|t| t.total_connected).collect();
    ensure(totals[..2] == [1, 7], || format!("totals {totals:?}"))?;

    for mode in [Mode::Labeled, Mode::Canonical] {
        let serial = csv_bundle(1, mode)?;
        let parallel = csv_bundle(4, mode)?;
        ensure(serial == parallel, || format!("{mode} output depends on the thread count"))?;
    }

    let one = Rational::from_integer(1);
    let frac = |n: usize| {
        let f = tables.iter().find(|t| t.n == n).unwrap().sphere_fraction();
        Rational::new(*f.numer() as i64, *f.denom() as i64)
    };
    ensure(frac(2) == one && frac(8) <= one, || format!("fractions {} {}", frac(2), frac(8)))?;
    Ok(format!(
        "totals {totals:?} match brute force; serial == parallel; sphere fraction n=8 {}",
        frac(8)
    ))
}

/// The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
fn seven_vertex_torus() -> SimplicialComplex {
    let triangles = (0..7u32)
        .flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]])
        .map(|t| t.to_vec())
        .collect();
    SimplicialComplex::new(2, triangles).expect("valid torus")
}

fn euler_characteristic(sc: &SimplicialComplex) -> i64 {
    let mut faces: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new(); sc.dimension() + 1];
    for s in sc.simplices() {
        let mut s = s.clone();
        s.sort_unstable();
        for mask in 1u32..(1 << s.len()) {
            let sub: Vec<u32> = (0..s.len()).filter(|&i| mask >> i & 1 == 1).map(|i| s[i]).collect();
            faces[sub.len() - 1].insert(sub);
        }
    }
    faces.iter().enumerate().map(|(k, f)| if k % 2 == 0 { f.len() as i64 } else { -(f.len() as i64) }).sum()
}

fn single_jacket_genus(g: &ColoredGraph) -> Result<u64, String> {
    let jackets = enumerate_jackets(g, &enumerate_faces(g)).map_err(|e| e.to_string())?;
    ensure(jackets.len() == 1, || format!("{} jackets at d=2", jackets.len()))?;
    Ok(jackets[0].genus)
}

fn subdivision_suite() -> Outcome {
    let start = Instant::now();

    let sphere3 = SimplicialComplex::boundary_of_simplex(3).map_err(|e| e.to_string())?;
    let g = barycentric_colorize(&sphere3).map_err(|e| e.to_string())?;
    ensure(g.order() == 120, || format!("order {}", g.order()))?;
    ensure(g.is_connected(), || "disconnected".into())?;
    // ColoredGraph::new rejects anything but d+1 perfect matchings black -> white
    ColoredGraph::new(g.dimension(), g.order(), &(0..g.colors()).map(|c| g.sigma(c).to_vec()).collect::<Vec<_>>())
        .map_err(|e| format!("not a bipartite colored graph: {e}"))?;
    let h = analyze_homology(&g).map_err(|e| e.to_string())?;
    ensure(h.h1_integral_trivial, || format!("homology {h}"))?;

    let sphere2 = SimplicialComplex::boundary_of_simplex(2).map_err(|e| e.to_string())?;
    let g2 = barycentric_colorize(&sphere2).map_err(|e| e.to_string())?;
    ensure(g2.order() == 24, || format!("order {}", g2.order()))?;
    let genus2 = single_jacket_genus(&g2)?;
    ensure(genus2 == 0, || format!("tetrahedron boundary genus {genus2}"))?;

    let torus = seven_vertex_torus();
    let chi = euler_characteristic(&torus);
    ensure(chi == 0, || format!("torus has Euler characteristic {chi}"))?;
    let gt = barycentric_colorize(&torus).map_err(|e| e.to_string())?;
    let genus_t = single_jacket_genus(&gt)?;
    ensure(genus_t as i64 == 1 - chi / 2, || format!("torus genus {genus_t}"))?;

    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5), "subdivision suite")?;
    Ok(format!("120-vertex h1Z-trivial sphere, genus 0 and genus 1 surfaces in {elapsed:.2?}"))
}

fn melon_suite() -> Outcome {
    let mut melons = 0;
    for n in [2, 4, 6] {
        for a in analyses(3, n)? {
            if a.degree.degree_sum == 0 {
                ensure(a.homology.h1_integral_trivial, || format!("degree 0 but {}\n{}", a.homology, a.graph))?;
                melons += 1;
            }
        }
    }
    Ok(format!("{melons} degree-0 graphs, all integrally trivial"))
}

fn performance_target() -> Outcome {
    let tuples = tuple_count(3, 12).unwrap();
    ensure(tuples <= DEFAULT_BUDGET, || format!("{tuples} tuples exceed the default budget"))?;

    let serial = census_for_order(3, 10, Mode::Labeled, 1, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let parallel = census_for_order(3, 10, Mode::Labeled, 8, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(serial == parallel, || "n=10 tables depend on the thread count".into())?;

    let start = Instant::now();
    let t = census_for_order(3, 12, Mode::Labeled, 8, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let cores = std::thread::available_parallelism().map_or(1, |c| c.get());
    let summary = format!(
        "{tuples} tuples, {} connected, {} / {} trivial, {elapsed:.1?} with 8 threads on {cores} core(s)",
        t.total_connected, t.h1q_trivial, t.h1z_trivial
    );
    within(elapsed, Duration::from_secs(600), &summary)?;
    Ok(summary)
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("dipole pin", dipole_pin),
        ("exhaustive identities", identity_suite),
        ("low-genus bound", low_genus_suite),
        ("degree ceiling", degree_ceiling_suite),
        ("tree/cotree/crossing split", decomposition_suite),
        ("census counts", census_counts),
        ("barycentric subdivision", subdivision_suite),
        ("degree-0 graphs", melon_suite),
        ("n=12 census within 10 minutes", performance_target),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = check();
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
