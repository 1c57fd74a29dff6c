use super::*;
use crate::tgraph::{family, FamilyName};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn path(n: usize) -> SimpleGraph {
    family(FamilyName::Path, n).unwrap().to_graph()
}

fn cycle(n: usize) -> SimpleGraph {
    family(FamilyName::Cycle, n).unwrap().to_graph()
}

fn complete(n: usize) -> SimpleGraph {
    family(FamilyName::Complete, n).unwrap().to_graph()
}

fn star(n: usize) -> SimpleGraph {
    family(FamilyName::Star, n).unwrap().to_graph()
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
    SimpleGraph::new(n, edges).unwrap()
}

/// Brute force over all bijections; the oracle the search is checked against.
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

fn brute_force_automorphism_count(g: &SimpleGraph) -> usize {
    all_bijections(g.num_vertices())
        .into_iter()
        .filter(|images| {
            g.edges().iter().all(|&(u, v)| g.has_edge(images[u], images[v]))
        })
        .count()
}

fn brute_force_is_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    if g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges() {
        return false;
    }
    all_bijections(g.num_vertices()).into_iter().any(|images| {
        g.edges().iter().all(|&(u, v)| h.has_edge(images[u], images[v]))
    })
}

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<SimpleGraph>();
    assert_send_sync::<PermutationGroup>();
    assert_send_sync::<Permutation>();
    assert_send_sync::<crate::tgraph::TranspositionSet>();
    assert_send_sync::<crate::cayley::CayleyGraph>();
    assert_send_sync::<crate::verify::VerificationReport>();
}

#[test]
fn construction_rejects_bad_edges() {
    assert!(SimpleGraph::new(3, [(0, 0)]).is_err());
    assert!(SimpleGraph::new(3, [(0, 3)]).is_err());
    assert!(SimpleGraph::new(3, [(0, 1), (1, 0)]).is_err());
    let g = SimpleGraph::new(3, [(2, 0), (0, 1)]).unwrap();
    assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
    assert_eq!(g.neighbors(0), &[1, 2]);
}

#[test]
fn degree_sum_is_twice_edge_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..20 {
        let g = random_graph(&mut rng, 8, 0.4);
        let sum: usize = (0..8).map(|v| g.degree(v)).sum();
        assert_eq!(sum, 2 * g.num_edges());
    }
}

#[test]
fn line_graph_of_p4_is_p3() {
    let lg = line_graph(&path(4));
    assert_eq!(lg.graph.num_vertices(), 3);
    assert_eq!(lg.graph.degree_sequence(), vec![1, 1, 2]);
}

#[test]
fn line_graph_exhibits_the_triangle_star_exception() {
    let k3 = complete(3);
    let k13 = star(4);
    let l_k3 = line_graph(&k3);
    let l_k13 = line_graph(&k13);
    // Both line graphs are triangles...
    assert!(find_isomorphism(&l_k3.graph, &complete(3)).unwrap().is_some());
    assert!(find_isomorphism(&l_k13.graph, &complete(3)).unwrap().is_some());
    // ...while the base graphs are not even the same size.
    assert!(find_isomorphism(&k3, &k13).unwrap().is_none());
}

#[test]
fn line_graph_edge_count_formula_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..50 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n, 0.5);
        let expected: usize = (0..n).map(|v| g.degree(v) * (g.degree(v).saturating_sub(1)) / 2).sum();
        let lg = line_graph(&g);
        assert_eq!(lg.graph.num_edges(), expected);
        assert_eq!(lg.graph.num_vertices(), g.num_edges());
        // The edge index is a bijection.
        for (k, &(u, v)) in lg.base_edges().iter().enumerate() {
            assert_eq!(lg.line_vertex(u, v), Some(k));
            assert_eq!(lg.base_edge(k), (u, v));
        }
    }
}

#[test]
fn automorphism_orders_of_named_graphs() {
    assert_eq!(automorphism_group(&path(5)).unwrap().order(), 2);
    assert_eq!(automorphism_group(&complete(5)).unwrap().order(), 120);
    assert_eq!(automorphism_group(&cycle(5)).unwrap().order(), 10);
    assert_eq!(automorphism_group(&star(5)).unwrap().order(), 24);
}

#[test]
fn automorphism_group_matches_brute_force_on_small_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..40 {
        let n = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n, 0.5);
        let grp = automorphism_group(&g).unwrap();
        assert_eq!(grp.order(), brute_force_automorphism_count(&g), "{g:?}");
        for gen in grp.generators() {
            assert!(g.is_automorphism(gen));
        }
    }
}

#[test]
fn automorphism_group_refuses_oversized_graphs() {
    let g = SimpleGraph::new(1001, []).unwrap();
    assert!(matches!(
        automorphism_group(&g),
        Err(Error::Capacity { .. })
    ));
}

#[test]
fn edge_orbits_of_p5_split_outer_and_inner() {
    let g = path(5);
    let grp = automorphism_group(&g).unwrap();
    let orbits = edge_orbits(&g, &grp).unwrap();
    assert_eq!(orbits.len(), 2);
    assert_eq!(orbits[0], vec![(0, 1), (3, 4)]);
    assert_eq!(orbits[1], vec![(1, 2), (2, 3)]);
}

#[test]
fn star_has_one_edge_orbit() {
    let g = star(5);
    let grp = automorphism_group(&g).unwrap();
    assert_eq!(edge_orbits(&g, &grp).unwrap().len(), 1);
}

#[test]
fn orbit_sizes_divide_group_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n, 0.5);
        let grp = automorphism_group(&g).unwrap();
        let orbits = edge_orbits(&g, &grp).unwrap();
        let mut total = 0;
        for orbit in &orbits {
            assert_eq!(grp.order() % orbit.len(), 0);
            total += orbit.len();
        }
        assert_eq!(total, g.num_edges());
        let vorbits = vertex_orbits(&g, &grp).unwrap();
        for orbit in &vorbits {
            assert_eq!(grp.order() % orbit.len(), 0);
        }
        assert_eq!(vorbits.iter().map(|o| o.len()).sum::<usize>(), n);
    }
}

#[test]
fn edge_transitivity_of_named_graphs() {
    assert!(!is_edge_transitive(&path(5)).unwrap());
    assert!(is_edge_transitive(&cycle(6)).unwrap());
    assert!(is_edge_transitive(&star(5)).unwrap());
    assert!(is_edge_transitive(&complete(4)).unwrap());
    // No edges: vacuously transitive.
    assert!(is_edge_transitive(&SimpleGraph::new(3, []).unwrap()).unwrap());
}

#[test]
fn diamond_graph_is_not_edge_transitive() {
    // K_4 minus one edge. The two degree-3 vertices span an edge no
    // automorphism can move onto a degree-3/degree-2 edge, which the
    // brute force below confirms.
    let diamond = SimpleGraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    let autos: Vec<Vec<usize>> = all_bijections(4)
        .into_iter()
        .filter(|images| {
            diamond
                .edges()
                .iter()
                .all(|&(u, v)| diamond.has_edge(images[u], images[v]))
        })
        .collect();
    let mut orbit_reached = std::collections::HashSet::new();
    for a in &autos {
        orbit_reached.insert((a[0].min(a[1]), a[0].max(a[1])));
    }
    assert!(orbit_reached.len() < diamond.num_edges());
    assert!(!is_edge_transitive(&diamond).unwrap());
}

#[test]
fn vertex_and_arc_transitivity_of_named_graphs() {
    assert!(!is_vertex_transitive(&star(4)).unwrap());
    assert!(is_edge_transitive(&star(4)).unwrap());
    assert!(is_arc_transitive(&cycle(5)).unwrap());
    assert!(!is_vertex_transitive(&path(5)).unwrap());
    assert!(is_vertex_transitive(&cycle(6)).unwrap());
    // Star graphs are edge- but not arc-transitive: no automorphism swaps
    // the center with a leaf.
    assert!(!is_arc_transitive(&star(4)).unwrap());
}

#[test]
fn find_isomorphism_on_relabelings() {
    let g = path(4);
    let relabel = Permutation::from_one_based(&[3, 1, 4, 2]).unwrap();
    let h = g.relabeled(&relabel).unwrap();
    let m = find_isomorphism(&g, &h).unwrap().expect("isomorphic");
    assert!(g.is_isomorphism_to(&h, &m));
}

#[test]
fn find_isomorphism_agrees_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let graphs: Vec<SimpleGraph> = (0..30)
        .map(|_| {
            let n = rng.gen_range(1..=6);
            random_graph(&mut rng, n, 0.5)
        })
        .collect();
    for g in &graphs {
        for h in &graphs {
            let found = find_isomorphism(g, h).unwrap();
            assert_eq!(found.is_some(), brute_force_is_isomorphic(g, h));
            if let Some(m) = found {
                assert!(g.is_isomorphism_to(h, &m));
            }
        }
    }
}

#[test]
fn whitney_lift_of_identity_is_identity() {
    let t = path(5);
    let lg = line_graph(&t);
    let lifted = whitney_lift(&t, &Permutation::identity(lg.graph.num_vertices())).unwrap();
    assert!(lifted.is_identity());
}

#[test]
fn whitney_lift_of_p5_reflection() {
    let t = path(5);
    // L(P_5) = P_4; its nontrivial automorphism reverses the edge chain.
    let a = Permutation::from_one_based(&[4, 3, 2, 1]).unwrap();
    let lifted = whitney_lift(&t, &a).unwrap();
    assert_eq!(lifted, Permutation::from_one_based(&[5, 4, 3, 2, 1]).unwrap());
}

#[test]
fn whitney_lift_inverts_induction_on_a_spider() {
    // Star K_{1,4} with a pendant edge: 6 vertices, automorphism group S_3
    // on the free leaves.
    let t = SimpleGraph::new(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5)]).unwrap();
    let aut_t = automorphism_group(&t).unwrap();
    let lg = line_graph(&t);
    let aut_lt = automorphism_group(&lg.graph).unwrap();
    assert_eq!(aut_t.order(), 6);
    assert_eq!(aut_t.order(), aut_lt.order());
    for h in aut_t.elements() {
        let induced = induced_edge_mapping(&t, h).unwrap();
        assert_eq!(&whitney_lift(&t, &induced).unwrap(), h);
    }
    for a in aut_lt.elements() {
        let lifted = whitney_lift(&t, a).unwrap();
        assert_eq!(&induced_edge_mapping(&t, &lifted).unwrap(), a);
    }
}

#[test]
fn whitney_lift_round_trips_on_connected_graphs_of_5_to_7_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut tested = 0;
    while tested < 15 {
        let n = rng.gen_range(5..=7);
        let t = random_graph(&mut rng, n, 0.45);
        if !t.is_connected() {
            continue;
        }
        tested += 1;
        let aut_t = automorphism_group(&t).unwrap();
        let aut_lt = automorphism_group(&line_graph(&t).graph).unwrap();
        assert_eq!(aut_t.order(), aut_lt.order(), "{t:?}");
        for h in aut_t.elements() {
            assert_eq!(&whitney_lift(&t, &induced_edge_mapping(&t, h).unwrap()).unwrap(), h);
        }
    }
}

#[test]
fn whitney_lift_enforces_preconditions() {
    assert!(matches!(
        whitney_lift(&complete(3), &Permutation::identity(3)),
        Err(Error::Precondition(_))
    ));
    let disconnected = SimpleGraph::new(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
    assert!(matches!(
        whitney_lift(&disconnected, &Permutation::identity(4)),
        Err(Error::Precondition(_))
    ));
    // A permutation of the line vertices that is no line-graph automorphism.
    let t = path(5);
    let bogus = Permutation::from_one_based(&[2, 1, 3, 4]).unwrap();
    assert!(matches!(
        whitney_lift(&t, &bogus),
        Err(Error::Inconsistency(_))
    ));
}

#[test]
fn connectivity_of_named_graphs() {
    assert_eq!(vertex_connectivity(&cycle(6)), 2);
    assert_eq!(vertex_connectivity(&complete(5)), 4);
    assert_eq!(vertex_connectivity(&path(5)), 1);
    assert_eq!(vertex_connectivity(&star(5)), 1);
    let disconnected = SimpleGraph::new(4, [(0, 1), (2, 3)]).unwrap();
    assert_eq!(vertex_connectivity(&disconnected), 0);
    assert_eq!(vertex_connectivity(&SimpleGraph::new(1, []).unwrap()), 0);
}

#[test]
fn connectivity_never_exceeds_minimum_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..30 {
        let n = rng.gen_range(2..=8);
        let g = random_graph(&mut rng, n, 0.5);
        let min_degree = (0..n).map(|v| g.degree(v)).min().unwrap();
        assert!(vertex_connectivity(&g) <= min_degree);
    }
}

#[test]
fn edge_transitive_graphs_reach_their_degree_bound() {
    // Connected edge-transitive graphs have maximum possible connectivity.
    for g in [cycle(5), cycle(6), star(5), complete(5), complete(4)] {
        assert!(is_edge_transitive(&g).unwrap());
        let min_degree = (0..g.num_vertices()).map(|v| g.degree(v)).min().unwrap();
        assert_eq!(vertex_connectivity(&g), min_degree);
    }
}

#[test]
fn bipartite_detection() {
    let c4 = cycle(4);
    let colors = is_bipartite(&c4).expect("even cycle");
    for &(u, v) in c4.edges() {
        assert_ne!(colors[u], colors[v]);
    }
    assert!(is_bipartite(&cycle(5)).is_none());
}

#[test]
fn permutation_group_closure_and_membership() {
    let swap = Permutation::from_one_based(&[2, 1, 3]).unwrap();
    let rot = Permutation::from_one_based(&[2, 3, 1]).unwrap();
    let s3 = PermutationGroup::from_generators(3, vec![swap, rot]).unwrap();
    assert_eq!(s3.order(), 6);
    for p in Permutation::all(3) {
        assert!(s3.contains(&p));
    }
    let trivial = PermutationGroup::trivial(3);
    assert!(trivial.is_subgroup_of(&s3));
    assert_eq!(s3.pointwise_stabilizer(&[0]).order(), 2);
}

#[test]
fn from_elements_rejects_unclosed_sets() {
    let rot = Permutation::from_one_based(&[2, 3, 1]).unwrap();
    let id = Permutation::identity(3);
    // {id, rot} lacks rot² and the inverse.
    assert!(PermutationGroup::from_elements(3, vec![id, rot]).is_err());
}

#[test]
fn generator_lines_round_trip() {
    let grp = automorphism_group(&cycle(5)).unwrap();
    let text = grp.to_generator_lines();
    let back = PermutationGroup::from_generator_lines(5, &text).unwrap();
    assert_eq!(back.order(), grp.order());
    assert_eq!(back.elements(), grp.elements());
}

#[test]
fn edge_list_parsing_round_trips() {
    let text = "# a comment\n5 4\n1 2\n2 3\n3 4\n4 5\n";
    let g = SimpleGraph::parse_edge_list(text).unwrap();
    assert_eq!(g, path(5));
    let rendered = g.to_edge_list_string();
    assert_eq!(SimpleGraph::parse_edge_list(&rendered).unwrap(), g);
}

#[test]
fn edge_list_parse_errors_carry_positions() {
    match SimpleGraph::parse_edge_list("3 1\n2 1\n") {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("expected parse error, got {other:?}"),
    }
    match SimpleGraph::parse_edge_list("3 2\n1 2\n") {
        Err(Error::Parse { .. }) => {}
        other => panic!("expected parse error, got {other:?}"),
    }
    match SimpleGraph::parse_edge_list("3 x\n") {
        Err(Error::Parse { line: 1, column, .. }) => assert_eq!(column, 3),
        other => panic!("expected parse error, got {other:?}"),
    }
    assert!(SimpleGraph::parse_edge_list("").is_err());
    assert!(SimpleGraph::parse_edge_list("3 1\n1 2\n1 2\n").is_err());
    assert!(SimpleGraph::parse_edge_list("3 1\n1 4\n").is_err());
}
