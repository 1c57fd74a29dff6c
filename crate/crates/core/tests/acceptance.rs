//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line. The brute-force oracles here are deliberately
//! self-contained (bijections come from a local Heap's-algorithm
//! enumerator) so they certify the library's search machinery from the
//! outside.

use std::time::Instant;

use caygen::cayley;
use caygen::graph::{self, SimpleGraph};
use caygen::perm::{factorial, Permutation};
use caygen::tgraph::{self, family, FamilyName, TranspositionSet};
use caygen::verify::{self, ClaimId, SweepOptions};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed for every randomized corpus in this suite.
const SEED: u64 = 0;

fn criterion(number: usize, label: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("[acceptance] criterion {number} ({label}): {verdict} — {detail}");
    assert!(pass, "criterion {number} ({label}) failed: {detail}");
}

fn all_bijections(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn heap(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(current.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, current, out);
            if k.is_multiple_of(2) {
                current.swap(i, k - 1);
            } else {
                current.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut current, &mut out);
    out
}

fn preserves_edges(g: &SimpleGraph, h: &SimpleGraph, images: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| h.has_edge(images[u], images[v]))
}

fn brute_force_aut_order(g: &SimpleGraph) -> usize {
    all_bijections(g.num_vertices())
        .iter()
        .filter(|images| preserves_edges(g, g, images))
        .count()
}

fn brute_force_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    g.num_vertices() == h.num_vertices()
        && g.num_edges() == h.num_edges()
        && all_bijections(g.num_vertices())
            .iter()
            .any(|images| preserves_edges(g, h, images))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("random edges are simple")
}

fn named_families_at_5() -> Vec<(FamilyName, TranspositionSet)> {
    FamilyName::ALL
        .iter()
        .map(|&name| (name, family(name, 5).expect("degree 5 fits every family")))
        .collect()
}

#[test]
fn criterion_1_edge_transitivity_equivalence_sweep() {
    let start = Instant::now();
    let reports = verify::sweep(ClaimId::PartB, 5, SweepOptions::default())
        .expect("sweep within capacity");
    let elapsed = start.elapsed().as_secs_f64();
    let agree = reports.iter().filter(|r| r.agree).count();
    let pass = reports.len() == 21 && agree == 21 && elapsed <= 600.0;
    criterion(
        1,
        "edge-transitivity equivalence over all 21 classes at n=5",
        pass,
        &format!("{agree}/{} agree in {elapsed:.1}s (limit 600s)", reports.len()),
    );
}

#[test]
fn criterion_2_isomorphism_equivalence_sweep() {
    let start = Instant::now();
    let reports = verify::sweep(ClaimId::PartA, 5, SweepOptions::default())
        .expect("sweep within capacity");
    let elapsed = start.elapsed().as_secs_f64();
    let agree = reports.iter().filter(|r| r.agree).count();
    let isomorphic: Vec<_> = reports
        .iter()
        .filter(|r| r.fast == serde_json::json!(true))
        .collect();
    let sigma_ok = isomorphic.iter().all(|r| r.sigma_certified == Some(true));
    let pass = reports.len() == 231
        && agree == 231
        && isomorphic.len() == 21
        && sigma_ok
        && elapsed <= 1800.0;
    criterion(
        2,
        "isomorphism equivalence over all 231 class pairs at n=5",
        pass,
        &format!(
            "{agree}/{} agree, {} isomorphic pairs with certified conjugation maps, {elapsed:.1}s (limit 1800s)",
            reports.len(),
            isomorphic.len()
        ),
    );
}

#[test]
fn criterion_3_named_family_verdicts() {
    let mut detail = String::new();
    let mut pass = true;
    for (name, s) in named_families_at_5() {
        let expected = !matches!(name, FamilyName::Path);
        let report = verify::verify_part_b(&s).expect("named families are in capacity");
        let fast = report.fast == serde_json::json!(expected);
        let oracle = report.oracle == serde_json::json!(expected);
        pass &= fast && oracle && report.agree;
        detail.push_str(&format!("{name}={}{} ", expected, if fast && oracle { "" } else { "(!)" }));
    }
    criterion(
        3,
        "bubble-sort not edge-transitive; star, modified bubble-sort, complete edge-transitive",
        pass,
        detail.trim(),
    );
}

#[test]
fn criterion_4_stabilizer_decomposition_certification() {
    let mut pass = true;
    let mut checked = 0;
    let mut instances: Vec<TranspositionSet> =
        tgraph::enumerate_connected(4).expect("degree 4 enumerates");
    instances.extend(named_families_at_5().into_iter().map(|(_, s)| s));
    for s in &instances {
        let n = s.n();
        let decomposition = cayley::stabilizer_decomposition(
            &cayley::build(s).expect("build within capacity"),
        )
        .expect("stabilizer computation within capacity");
        let aut_ts = graph::automorphism_group(&s.to_graph())
            .expect("small graph")
            .order();
        let orders = decomposition.g_e.order()
            == decomposition.l_e.order() * decomposition.conjugations.len();
        let matches_t = decomposition.conjugations.len() == aut_ts;
        let vertex_transitive_order =
            decomposition.aut.order() == factorial(n) * decomposition.g_e.order();
        if !(decomposition.certified && orders && matches_t && vertex_transitive_order) {
            pass = false;
            println!("  stabilizer failure at n={n} S={{{s}}}");
        }
        checked += 1;
    }
    criterion(
        4,
        "G_e = L_e ⋊ Aut(S_n,S) for all classes at n=4 and named families at n=5",
        pass,
        &format!("{checked} instances certified with exact order identities"),
    );
}

#[test]
fn criterion_5_whitney_feng_orders() {
    let reports = verify::sweep(ClaimId::WhitneyFeng, 5, SweepOptions::default())
        .expect("sweep within capacity");
    let agree = reports.iter().filter(|r| r.agree).count();
    let pass = reports.len() == 21 && agree == 21;
    criterion(
        5,
        "|Aut(T)| = |Aut(L(T))| = |Aut(S_n,S)| with lift/induce inverse, all 21 classes at n=5",
        pass,
        &format!("{agree}/{} classes with equal orders", reports.len()),
    );
}

#[test]
fn criterion_6_connectivity_and_bipartiteness() {
    let start = Instant::now();
    let connectivity = verify::sweep(ClaimId::Connectivity, 4, SweepOptions::default())
        .expect("sweep within capacity");
    let kappa_ok = connectivity.len() == 6 && connectivity.iter().all(|r| r.agree);

    let mut bipartite_ok = true;
    let mut bipartite_count = 0;
    for n in 2..=5 {
        for report in
            verify::sweep(ClaimId::Bipartite, n, SweepOptions::default()).expect("in capacity")
        {
            bipartite_ok &= report.agree;
            bipartite_count += 1;
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = kappa_ok && bipartite_ok && elapsed <= 120.0;
    criterion(
        6,
        "κ = |S| for all classes at n=4; parity bipartition for every built graph at n≤5",
        pass,
        &format!(
            "6/6 connectivity identities, {bipartite_count} parity bipartitions, {elapsed:.1}s (limit 120s)"
        ),
    );
}

#[test]
fn criterion_7_oracle_self_trust() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let corpus: Vec<SimpleGraph> = (0..200)
        .map(|_| {
            let n = rng.gen_range(1..=6);
            let p = [0.2, 0.35, 0.5, 0.65, 0.8][rng.gen_range(0..5)];
            random_graph(&mut rng, n, p)
        })
        .collect();

    let mut aut_ok = true;
    for g in &corpus {
        let order = graph::automorphism_group(g).expect("within capacity").order();
        if order != brute_force_aut_order(g) {
            aut_ok = false;
            println!("  automorphism order mismatch on {g:?}");
        }
    }

    let mut iso_ok = true;
    let mut pair_count = 0;
    for (i, g) in corpus.iter().enumerate() {
        for h in &corpus[i + 1..] {
            let found = graph::find_isomorphism(g, h).expect("within capacity");
            let expected = brute_force_isomorphic(g, h);
            if found.is_some() != expected
                || found.is_some_and(|m| !g.is_isomorphism_to(h, &m))
            {
                iso_ok = false;
                println!("  isomorphism mismatch between {g:?} and {h:?}");
            }
            pair_count += 1;
        }
    }
    criterion(
        7,
        "backtracking matches the all-bijections oracle on a 200-graph seeded corpus",
        aut_ok && iso_ok,
        &format!("200 automorphism orders, {pair_count} isomorphism pairs"),
    );
}

#[test]
fn criterion_8_library_property_suite() {
    // Group axioms, exhaustively over S_4.
    let elements: Vec<Permutation> = Permutation::all(4).collect();
    let id = Permutation::identity(4);
    let mut axioms_ok = true;
    for p in &elements {
        axioms_ok &= p.compose(&id).unwrap() == *p && id.compose(p).unwrap() == *p;
        axioms_ok &= p.compose(&p.inverse()).unwrap().is_identity();
        for q in &elements {
            let pq = p.compose(q).unwrap();
            for r in &elements {
                axioms_ok &= pq.compose(r).unwrap() == p.compose(&q.compose(r).unwrap()).unwrap();
            }
        }
    }

    // Rank/unrank bijectivity across all of S_7.
    let mut rank_ok = true;
    for r in 0..factorial(7) {
        let p = Permutation::unrank(r, 7).expect("rank in range");
        rank_ok &= p.rank() == r;
    }

    // Right multiplications are automorphisms: exhaustive for n <= 4,
    // 20 seeded random elements per class at n = 5.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut right_mult_ok = true;
    for n in 2..=4 {
        for s in tgraph::enumerate_connected(n).unwrap() {
            let cg = cayley::build(&s).unwrap();
            for g in Permutation::all(n) {
                let r = cayley::right_multiplication(&g).unwrap();
                right_mult_ok &= cg.graph().is_automorphism(&r);
            }
        }
    }
    for s in tgraph::enumerate_connected(5).unwrap() {
        let cg = cayley::build(&s).unwrap();
        for _ in 0..20 {
            let g = Permutation::unrank(rng.gen_range(0..factorial(5)), 5).unwrap();
            let r = cayley::right_multiplication(&g).unwrap();
            right_mult_ok &= cg.graph().is_automorphism(&r);
        }
    }

    // r_t swaps the identity arc (e, t) for every generator of every
    // connected class at n <= 5.
    let mut arc_ok = true;
    for n in 2..=5 {
        for s in tgraph::enumerate_connected(n).unwrap() {
            let cg = cayley::build(&s).unwrap();
            let e = cg.identity_vertex();
            for t in s.permutations() {
                let r = cayley::right_multiplication(&t).unwrap();
                let t_rank = t.rank();
                arc_ok &= cg.graph().is_automorphism(&r)
                    && r.apply(e) == t_rank
                    && r.apply(t_rank) == e;
            }
        }
    }

    criterion(
        8,
        "group axioms on S_4; rank/unrank on S_7; right multiplications and arc swaps",
        axioms_ok && rank_ok && right_mult_ok && arc_ok,
        &format!(
            "axioms={axioms_ok} rank_round_trip={rank_ok} right_mult={right_mult_ok} arc_swap={arc_ok}"
        ),
    );
}
