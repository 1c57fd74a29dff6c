//! Cayley graphs `Cay(S_n, S)` for transposition sets `S`, with
//! permutation ranks as vertex ids.
//!
//! Vertices `v` and `w` are adjacent iff `unrank(w) = s ∘ unrank(v)` for
//! some generator `s` (left multiplication). With that convention the right
//! multiplications `x ↦ x∘g` are automorphisms of every built graph, and
//! conjugation by an automorphism of the transposition graph permutes the
//! generator set, giving the isomorphisms and stabilizer structure this
//! module materializes.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{self, PermutationGroup, SimpleGraph};
use crate::perm::{factorial, Permutation};
use crate::tgraph::TranspositionSet;

/// Largest degree whose Cayley graph this module will materialize
/// (7! = 5040 vertices).
pub const MAX_BUILD_DEGREE: usize = 7;

/// Full-group computations (stabilizers) stop here: automorphism searches
/// on 120-vertex Cayley graphs are routine, 720-vertex ones are not.
pub const MAX_STABILIZER_DEGREE: usize = 5;

/// A materialized Cayley graph of `S_n` with respect to a transposition
/// set. Vertex ids are Lehmer ranks, so the identity is always vertex 0.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    gens: TranspositionSet,
    graph: SimpleGraph,
    identity_vertex: usize,
}

impl CayleyGraph {
    pub fn n(&self) -> usize {
        self.gens.n()
    }

    pub fn gens(&self) -> &TranspositionSet {
        &self.gens
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn identity_vertex(&self) -> usize {
        self.identity_vertex
    }

    /// Ranks of the generators; exactly the neighbors of the identity.
    pub fn generator_ranks(&self) -> Vec<usize> {
        let mut ranks: Vec<usize> = self
            .gens
            .permutations()
            .iter()
            .map(Permutation::rank)
            .collect();
        ranks.sort_unstable();
        ranks
    }

    /// Sorted neighbor ranks of `v`, recomputed from the generators (the
    /// materialized adjacency is the cache of exactly this computation).
    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        if v >= self.graph.num_vertices() {
            return Err(Error::Precondition(format!(
                "vertex id {v} out of range 0..{}",
                self.graph.num_vertices()
            )));
        }
        Ok(self.graph.neighbors(v).to_vec())
    }
}

/// Builds `Cay(S_n, S)` on `n!` vertices.
///
/// Fails with a capacity error above degree [`MAX_BUILD_DEGREE`]; callers
/// that only need local structure can use [`neighbor_ranks`] instead, which
/// has no materialization bound.
pub fn build(s: &TranspositionSet) -> Result<CayleyGraph> {
    let n = s.n();
    if s.is_empty() {
        return Err(Error::Precondition(
            "Cayley graph needs a nonempty generating set".into(),
        ));
    }
    if n > MAX_BUILD_DEGREE {
        return Err(Error::Capacity {
            task: format!("materializing Cay(S_{n}, S); use neighbor_ranks for local queries"),
            required: factorial(n.min(crate::perm::MAX_RANK_DEGREE)),
            limit: factorial(MAX_BUILD_DEGREE),
        });
    }
    let total = factorial(n);
    let gens = s.permutations();
    let mut edges = Vec::with_capacity(total * gens.len() / 2);
    for v in 0..total {
        let p = Permutation::unrank(v, n).expect("rank in range");
        for g in &gens {
            let w = (g * &p).rank();
            if v < w {
                edges.push((v, w));
            }
        }
    }
    let graph = SimpleGraph::new(total, edges)?;
    debug_assert_eq!(graph.num_edges(), total * gens.len() / 2);
    Ok(CayleyGraph {
        gens: s.clone(),
        graph,
        identity_vertex: 0,
    })
}

/// Neighbor ranks of vertex `v` without materializing the graph: the ranks
/// of `s ∘ unrank(v)` over the generators, sorted ascending.
pub fn neighbor_ranks(s: &TranspositionSet, v: usize) -> Result<Vec<usize>> {
    let n = s.n();
    if n > crate::perm::MAX_RANK_DEGREE {
        return Err(Error::UnsupportedDegree {
            n,
            reason: format!("ranking supports degrees up to {}", crate::perm::MAX_RANK_DEGREE),
        });
    }
    let p = Permutation::unrank(v, n)?;
    let mut out: Vec<usize> = s.permutations().iter().map(|g| (g * &p).rank()).collect();
    out.sort_unstable();
    Ok(out)
}

/// The vertex mapping `rank(x) ↦ rank(x ∘ g)` on `Cay(S_n, ·)`. Right
/// multiplications commute with the left-multiplication edge rule, so this
/// is an automorphism of every Cayley graph of degree `n`.
pub fn right_multiplication(g: &Permutation) -> Result<Permutation> {
    let n = g.degree();
    if n > MAX_BUILD_DEGREE {
        return Err(Error::Capacity {
            task: "materializing a right multiplication on n! vertices".into(),
            required: n,
            limit: MAX_BUILD_DEGREE,
        });
    }
    let images: Vec<usize> = (0..factorial(n))
        .map(|v| {
            let x = Permutation::unrank(v, n).expect("rank in range");
            (&x * g).rank()
        })
        .collect();
    Permutation::from_images(images)
}

/// The vertex mapping `rank(x) ↦ rank(g ∘ x ∘ g⁻¹)`.
pub fn conjugation_vertex_map(g: &Permutation) -> Result<Permutation> {
    let n = g.degree();
    if n > MAX_BUILD_DEGREE {
        return Err(Error::Capacity {
            task: "materializing a conjugation on n! vertices".into(),
            required: n,
            limit: MAX_BUILD_DEGREE,
        });
    }
    let images: Vec<usize> = (0..factorial(n))
        .map(|v| {
            let x = Permutation::unrank(v, n).expect("rank in range");
            g.conjugate(&x).expect("equal degrees").rank()
        })
        .collect();
    Permutation::from_images(images)
}

/// Lifts an isomorphism `f` between two transposition graphs to the vertex
/// bijection `σ: rank(x) ↦ rank(f ∘ x ∘ f⁻¹)` between the Cayley graphs.
///
/// `f` must map the edges of `T(S)` onto the edges of `T(S')`; σ then maps
/// the identity to the identity and generator ranks of `s` onto those of
/// `s2`. For degrees up to [`MAX_STABILIZER_DEGREE`] the edge preservation
/// of σ is re-verified exhaustively on the built graphs before returning.
pub fn conjugation_isomorphism(
    s: &TranspositionSet,
    s2: &TranspositionSet,
    f: &Permutation,
) -> Result<Permutation> {
    let n = s.n();
    if s2.n() != n {
        return Err(Error::DegreeMismatch {
            left: n,
            right: s2.n(),
        });
    }
    if f.degree() != n {
        return Err(Error::DegreeMismatch {
            left: f.degree(),
            right: n,
        });
    }
    if s.len() != s2.len() || s.pairs().iter().any(|t| !s2.contains(&t.mapped(f).expect("degree checked"))) {
        return Err(Error::Precondition(
            "mapping is not an isomorphism of the transposition graphs".into(),
        ));
    }
    let sigma = conjugation_vertex_map(f)?;
    if n <= MAX_STABILIZER_DEGREE {
        let x = build(s)?;
        let x2 = build(s2)?;
        if !x.graph().is_isomorphism_to(x2.graph(), &sigma) {
            return Err(Error::Inconsistency(
                "conjugation map failed the exhaustive edge-preservation scan".into(),
            ));
        }
    }
    debug_assert_eq!(sigma.apply(0), 0);
    Ok(sigma)
}

/// A group automorphism of `S_n` fixing the generator set setwise:
/// conjugation by an automorphism of the transposition graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAutomorphismOnS {
    conjugator: Permutation,
}

impl GroupAutomorphismOnS {
    /// The permutation `g` with action `x ↦ g ∘ x ∘ g⁻¹`.
    pub fn conjugator(&self) -> &Permutation {
        &self.conjugator
    }

    /// Image of a group element under the automorphism.
    pub fn apply(&self, x: &Permutation) -> Result<Permutation> {
        self.conjugator.conjugate(x)
    }

    /// The automorphism as a vertex mapping on ranks.
    pub fn vertex_mapping(&self) -> Result<Permutation> {
        conjugation_vertex_map(&self.conjugator)
    }

    /// Image of each generator in generator order: the restriction of the
    /// action to `S` as a map.
    pub fn action_on_set(&self, s: &TranspositionSet) -> Result<Vec<crate::perm::Transposition>> {
        s.pairs().iter().map(|t| t.mapped(&self.conjugator)).collect()
    }
}

/// The group automorphisms of `S_n` fixing `s` setwise, one per
/// automorphism of the transposition graph `T(S)` (conjugation gives the
/// bijective correspondence between the two groups).
///
/// Each returned entry is verified to fix `s` setwise, and the actions on
/// `s` are verified pairwise distinct.
pub fn aut_sns(s: &TranspositionSet) -> Result<Vec<GroupAutomorphismOnS>> {
    if !s.is_generating() {
        return Err(Error::NotGenerating(format!(
            "T(S) is disconnected for S = {s}"
        )));
    }
    let aut_t = graph::automorphism_group(&s.to_graph())?;
    let mut entries = Vec::with_capacity(aut_t.order());
    let mut actions_seen: HashSet<Vec<crate::perm::Transposition>> = HashSet::new();
    for g in aut_t.elements() {
        let entry = GroupAutomorphismOnS {
            conjugator: g.clone(),
        };
        let action = entry.action_on_set(s)?;
        if action.iter().any(|t| !s.contains(t)) {
            return Err(Error::Inconsistency(
                "conjugation does not fix the generating set setwise".into(),
            ));
        }
        if !actions_seen.insert(action) {
            return Err(Error::Inconsistency(
                "two conjugations share the same action on the generating set".into(),
            ));
        }
        entries.push(entry);
    }
    Ok(entries)
}

/// Verdict of the polynomial-size edge-transitivity test, with the flag
/// marking whether the degree is inside the range where the equivalence
/// with the full Cayley graph is asserted (`n >= 5`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeTransitivityVerdict {
    pub edge_transitive: bool,
    pub theorem_range: bool,
}

/// Decides edge-transitivity of `Cay(S_n, S)` by examining only the
/// `n`-vertex transposition graph. For `n < 5` the answer is still
/// computed from `T(S)` but flagged as outside the stated range.
pub fn fast_is_edge_transitive(s: &TranspositionSet) -> Result<EdgeTransitivityVerdict> {
    if !s.is_generating() {
        return Err(Error::NotGenerating(format!(
            "T(S) is disconnected for S = {s}"
        )));
    }
    Ok(EdgeTransitivityVerdict {
        edge_transitive: graph::is_edge_transitive(&s.to_graph())?,
        theorem_range: s.n() >= 5,
    })
}

/// The stabilizer structure of the identity vertex.
#[derive(Debug, Clone)]
pub struct StabilizerDecomposition {
    /// Full automorphism group of the Cayley graph.
    pub aut: PermutationGroup,
    /// Stabilizer of the identity vertex.
    pub g_e: PermutationGroup,
    /// Elements of `g_e` fixing the identity and each of its neighbors.
    pub l_e: PermutationGroup,
    /// The conjugation subgroup, one entry per automorphism of `T(S)`.
    pub conjugations: Vec<GroupAutomorphismOnS>,
    /// True iff `g_e` decomposes as `l_e ⋊ conjugations`: the orders
    /// multiply, the intersection is trivial, `l_e` is normal, and every
    /// stabilizer element factors.
    pub certified: bool,
}

/// Computes the stabilizer `G_e` of the identity inside the full
/// automorphism group, its pointwise-neighbor subgroup `L_e`, and the
/// conjugation subgroup, then certifies the semidirect decomposition
/// `G_e = L_e ⋊ Aut(S_n, S)`.
pub fn stabilizer_decomposition(cg: &CayleyGraph) -> Result<StabilizerDecomposition> {
    let n = cg.n();
    if n > MAX_STABILIZER_DEGREE {
        return Err(Error::Capacity {
            task: "full-group stabilizer computation".into(),
            required: n,
            limit: MAX_STABILIZER_DEGREE,
        });
    }
    let aut = graph::automorphism_group(cg.graph())?;
    let e = cg.identity_vertex();
    let g_e = aut.pointwise_stabilizer(&[e]);
    let mut fixed = vec![e];
    fixed.extend_from_slice(cg.graph().neighbors(e));
    let l_e = g_e.pointwise_stabilizer(&fixed);
    let conjugations = aut_sns(cg.gens())?;

    let conj_maps: Vec<Permutation> = conjugations
        .iter()
        .map(|c| c.vertex_mapping())
        .collect::<Result<_>>()?;
    for m in &conj_maps {
        if !g_e.contains(m) {
            return Err(Error::Inconsistency(
                "a conjugation map is not a stabilizer element".into(),
            ));
        }
    }
    let conj_set: HashSet<&Permutation> = conj_maps.iter().collect();

    let orders_multiply = g_e.order() == l_e.order() * conj_maps.len();
    let trivial_intersection = l_e
        .elements()
        .iter()
        .filter(|m| conj_set.contains(m))
        .all(|m| m.is_identity());
    let normal = l_e.is_normalized_by(&g_e);
    let factors = g_e.elements().iter().all(|g| {
        conj_maps
            .iter()
            .any(|c| l_e.contains(&(g * &c.inverse())))
    });

    Ok(StabilizerDecomposition {
        aut,
        g_e,
        l_e,
        conjugations,
        certified: orders_multiply && trivial_intersection && normal && factors,
    })
}
