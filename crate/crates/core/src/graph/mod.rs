//! Simple undirected graphs and the symmetry toolkit: automorphism groups,
//! orbits, transitivity predicates, isomorphism testing, line graphs and
//! Whitney lifts, bipartiteness, and vertex connectivity.
//!
//! Vertex mappings (automorphisms, isomorphisms) are ordinary
//! [`Permutation`]s over the 0-based vertex ids, so graph symmetries and
//! symmetric-group elements share one type and one composition convention.

mod flow;
mod iso;

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use crate::capacity;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A finite simple undirected graph on vertices `0..num_vertices`.
///
/// Edges are stored sorted with `i < j`; neighbor lists are derived at
/// construction and kept sorted, so all traversals are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a graph, normalizing each pair to `i < j` and rejecting
    /// loops, duplicate edges and out-of-range vertex ids.
    pub fn new(num_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<SimpleGraph> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u >= num_vertices || v >= num_vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {num_vertices} vertices"
                )));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut adjacency = vec![Vec::new(); num_vertices];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(SimpleGraph {
            num_vertices,
            edges: normalized,
            adjacency,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted ascending, each normalized to `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Position of the normalized edge in [`SimpleGraph::edges`], if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Ascending degree sequence; a cheap isomorphism invariant.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(|a| a.len()).collect();
        degrees.sort_unstable();
        degrees
    }

    /// True for the empty graph and for every graph whose vertices are all
    /// reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        if self.num_vertices == 0 {
            return true;
        }
        let mut seen = vec![false; self.num_vertices];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.num_vertices
    }

    /// The graph with every vertex `v` renamed to `m(v)`.
    pub fn relabeled(&self, m: &Permutation) -> Result<SimpleGraph> {
        if m.degree() != self.num_vertices {
            return Err(Error::DegreeMismatch {
                left: m.degree(),
                right: self.num_vertices,
            });
        }
        SimpleGraph::new(
            self.num_vertices,
            self.edges.iter().map(|&(u, v)| (m.apply(u), m.apply(v))),
        )
    }

    /// Re-checks edge preservation directly, independent of however `m`
    /// was produced.
    pub fn is_automorphism(&self, m: &Permutation) -> bool {
        self.is_isomorphism_to(self, m)
    }

    /// True iff `m` is a bijection from this graph's vertices to `other`'s
    /// that maps edges onto edges.
    pub fn is_isomorphism_to(&self, other: &SimpleGraph, m: &Permutation) -> bool {
        m.degree() == self.num_vertices
            && self.num_vertices == other.num_vertices
            && self.num_edges() == other.num_edges()
            && self
                .edges
                .iter()
                .all(|&(u, v)| other.has_edge(m.apply(u), m.apply(v)))
    }

    /// Parses the shared edge-list format: `#` comment lines, a header
    /// `n m`, then `m` lines `i j` with `1 <= i < j <= n`.
    pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut last_line = 0;
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            last_line = lineno;
            let line = raw.trim_end();
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let fields = parse_fields(line, lineno)?;
            match header {
                None => {
                    let (n, m) = expect_pair(&fields, line, lineno, "header \"n m\"")?;
                    header = Some((n, m));
                }
                Some((n, m)) => {
                    if edges.len() == m {
                        return Err(parse_err(lineno, 1, format!(
                            "expected {m} edge lines, found more"
                        )));
                    }
                    let (i, j) = expect_pair(&fields, line, lineno, "edge \"i j\"")?;
                    if i == 0 || j == 0 || i > n || j > n {
                        return Err(parse_err(lineno, 1, format!(
                            "edge ({i}, {j}) out of range 1..={n}"
                        )));
                    }
                    if i >= j {
                        return Err(parse_err(lineno, 1, format!(
                            "edge ({i}, {j}) must satisfy i < j"
                        )));
                    }
                    if edges.contains(&(i - 1, j - 1)) {
                        return Err(parse_err(lineno, 1, format!("duplicate edge ({i}, {j})")));
                    }
                    edges.push((i - 1, j - 1));
                }
            }
        }
        let (n, m) = header.ok_or_else(|| parse_err(last_line.max(1), 1, "missing header \"n m\"".into()))?;
        if edges.len() != m {
            return Err(parse_err(last_line.max(1), 1, format!(
                "expected {m} edge lines, found {}",
                edges.len()
            )));
        }
        SimpleGraph::new(n, edges)
    }

    /// Serializes in the same edge-list format, 1-based and
    /// newline-terminated.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.num_vertices, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }
}

fn parse_err(line: usize, column: usize, message: String) -> Error {
    Error::Parse { line, column, message }
}

fn parse_fields(line: &str, lineno: usize) -> Result<Vec<(usize, usize)>> {
    // Returns (column, value) per whitespace-separated token.
    let mut fields = Vec::new();
    let mut col = 1;
    for tok in line.split_whitespace() {
        let start = line[col - 1..]
            .find(tok)
            .map(|off| col + off)
            .unwrap_or(col);
        let value: usize = tok
            .parse()
            .map_err(|_| parse_err(lineno, start, format!("expected a number, found {tok:?}")))?;
        fields.push((start, value));
        col = start + tok.len();
    }
    Ok(fields)
}

fn expect_pair(
    fields: &[(usize, usize)],
    line: &str,
    lineno: usize,
    what: &str,
) -> Result<(usize, usize)> {
    if fields.len() != 2 {
        let column = fields.get(2).map(|f| f.0).unwrap_or(line.len().max(1));
        return Err(parse_err(lineno, column, format!(
            "expected {what}, found {} fields",
            fields.len()
        )));
    }
    Ok((fields[0].1, fields[1].1))
}

/// The line graph of a base graph: one vertex per base edge, adjacent when
/// the base edges share an endpoint. Keeps the bijection between base edges
/// and line vertices.
#[derive(Debug, Clone)]
pub struct LineGraph {
    pub graph: SimpleGraph,
    base_edges: Vec<(usize, usize)>,
}

impl LineGraph {
    /// Base edge carried by a line vertex.
    pub fn base_edge(&self, line_vertex: usize) -> (usize, usize) {
        self.base_edges[line_vertex]
    }

    /// Line vertex carrying a base edge (order of endpoints irrelevant).
    pub fn line_vertex(&self, u: usize, v: usize) -> Option<usize> {
        self.base_edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn base_edges(&self) -> &[(usize, usize)] {
        &self.base_edges
    }
}

/// Builds the line graph of `g`. Line vertex `k` carries the `k`-th edge of
/// `g` in sorted order, so the vertex/edge bijection is implicit in the ids.
pub fn line_graph(g: &SimpleGraph) -> LineGraph {
    let base_edges: Vec<(usize, usize)> = g.edges().to_vec();
    let mut line_edges = Vec::new();
    for v in 0..g.num_vertices() {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| g.edge_index(v, w).expect("incident edge is present"))
            .collect();
        for (k, &e) in incident.iter().enumerate() {
            for &f in &incident[k + 1..] {
                line_edges.push((e.min(f), e.max(f)));
            }
        }
    }
    // Two distinct edges of a simple graph share at most one endpoint, so no
    // pair is generated twice.
    let graph = SimpleGraph::new(base_edges.len(), line_edges)
        .expect("line graph construction yields a simple graph");
    LineGraph { graph, base_edges }
}

/// A group of permutations of `0..degree` given by generators, with the full
/// element list materialized and certified on construction.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

/// Hard cap on materialized group orders; prevents runaway closures.
pub const MAX_GROUP_ORDER: usize = 1 << 20;

impl PermutationGroup {
    /// The group generated by `generators`, materialized by breadth-first
    /// closure from the identity.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<PermutationGroup> {
        if degree == 0 {
            return Err(Error::Precondition("groups act on at least one point".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut gens: Vec<Permutation> = generators
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect();
        gens.sort();
        gens.dedup();
        let elements = close(degree, &gens)?;
        Ok(PermutationGroup {
            degree,
            generators: gens,
            elements,
        })
    }

    /// Wraps a full element list as a group, reducing it to a small
    /// generating set and certifying closure, identity and inverses.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Result<PermutationGroup> {
        if degree == 0 {
            return Err(Error::Precondition("groups act on at least one point".into()));
        }
        for e in &elements {
            if e.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: e.degree(),
                });
            }
        }
        elements.sort();
        elements.dedup();
        if !elements.iter().any(|e| e.is_identity()) {
            return Err(Error::Inconsistency("element list lacks the identity".into()));
        }
        // Greedy reduction: every element outside the closure so far becomes
        // a generator, so afterwards <generators> contains the whole list.
        let mut generators: Vec<Permutation> = Vec::new();
        let mut closed: Vec<Permutation> = vec![Permutation::identity(degree)];
        for e in &elements {
            if closed.binary_search(e).is_err() {
                generators.push(e.clone());
                closed = close(degree, &generators)?;
            }
        }
        if closed.len() != elements.len() {
            return Err(Error::Inconsistency(format!(
                "element list is not closed: closure has {} elements, list has {}",
                closed.len(),
                elements.len()
            )));
        }
        for e in &elements {
            if elements.binary_search(&e.inverse()).is_err() {
                return Err(Error::Inconsistency("element list lacks an inverse".into()));
            }
        }
        Ok(PermutationGroup {
            degree,
            generators,
            elements,
        })
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> PermutationGroup {
        PermutationGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// A reduced generating set (empty for the trivial group).
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, sorted by image table.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Subgroup of elements fixing every listed point.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermutationGroup {
        let elements: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|e| points.iter().all(|&p| e.apply(p) == p))
            .cloned()
            .collect();
        PermutationGroup::from_elements(self.degree, elements)
            .expect("a pointwise stabilizer is a subgroup")
    }

    /// True iff every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    /// True iff `other` normalizes `self`: `g h g⁻¹ ∈ self` for every
    /// `g ∈ other`, `h ∈ self`.
    pub fn is_normalized_by(&self, other: &PermutationGroup) -> bool {
        other.elements.iter().all(|g| {
            self.elements
                .iter()
                .all(|h| self.contains(&g.conjugate(h).expect("equal degrees")))
        })
    }

    /// Elements common to both groups, sorted.
    pub fn intersection(&self, other: &PermutationGroup) -> Vec<Permutation> {
        self.elements
            .iter()
            .filter(|e| other.contains(e))
            .cloned()
            .collect()
    }

    /// One generator per line in the 1-based image-list format.
    pub fn to_generator_lines(&self) -> String {
        let mut out = String::new();
        for g in &self.generators {
            let _ = writeln!(out, "{g}");
        }
        out
    }

    /// Parses a group from generator lines as written by
    /// [`PermutationGroup::to_generator_lines`].
    pub fn from_generator_lines(degree: usize, text: &str) -> Result<PermutationGroup> {
        let gens: Vec<Permutation> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| Permutation::parse(l, degree))
            .collect::<Result<_>>()?;
        PermutationGroup::from_generators(degree, gens)
    }
}

/// Breadth-first closure of `gens` under right multiplication, starting
/// from the identity. Returns the sorted element list.
fn close(degree: usize, gens: &[Permutation]) -> Result<Vec<Permutation>> {
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = &p * g;
            if seen.insert(q.clone()) {
                if seen.len() > MAX_GROUP_ORDER {
                    return Err(Error::Capacity {
                        task: "group closure".into(),
                        required: seen.len(),
                        limit: MAX_GROUP_ORDER,
                    });
                }
                queue.push_back(q);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort();
    Ok(elements)
}

/// Computes the full automorphism group of `g` by equitable partition
/// refinement and exhaustive backtracking. Every returned generator is
/// re-checked to preserve the edge set, and the element list is certified
/// closed on materialization.
///
/// Refuses graphs above the configured vertex bound (default 1000,
/// overridable through `CAYGEN_MAX_VERTICES`).
pub fn automorphism_group(g: &SimpleGraph) -> Result<PermutationGroup> {
    if g.num_vertices() == 0 {
        return Err(Error::Precondition(
            "automorphism group needs at least one vertex".into(),
        ));
    }
    let limit = capacity::search_vertex_limit();
    if g.num_vertices() > limit {
        return Err(Error::Capacity {
            task: "automorphism search".into(),
            required: g.num_vertices(),
            limit,
        });
    }
    let autos = iso::all_automorphisms(g);
    for a in &autos {
        if !g.is_automorphism(a) {
            return Err(Error::Inconsistency(
                "search produced a non-automorphism".into(),
            ));
        }
    }
    PermutationGroup::from_elements(g.num_vertices(), autos)
}

/// Searches for an edge-preserving bijection from `g` to `h`, with quick
/// rejections on vertex count, edge count and degree sequence.
pub fn find_isomorphism(g: &SimpleGraph, h: &SimpleGraph) -> Result<Option<Permutation>> {
    if g.num_vertices() == 0 || h.num_vertices() == 0 {
        return Err(Error::Precondition(
            "isomorphism search needs at least one vertex".into(),
        ));
    }
    let limit = capacity::search_vertex_limit();
    let biggest = g.num_vertices().max(h.num_vertices());
    if biggest > limit {
        return Err(Error::Capacity {
            task: "isomorphism search".into(),
            required: biggest,
            limit,
        });
    }
    if g.num_vertices() != h.num_vertices()
        || g.num_edges() != h.num_edges()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(None);
    }
    let found = iso::find_isomorphism(g, h);
    if let Some(m) = &found {
        if !g.is_isomorphism_to(h, m) {
            return Err(Error::Inconsistency(
                "search produced a non-isomorphism".into(),
            ));
        }
    }
    Ok(found)
}

/// Orbits of the edge set under the induced action of `grp` on unordered
/// pairs. Orbits are listed by smallest member and each orbit is sorted.
pub fn edge_orbits(g: &SimpleGraph, grp: &PermutationGroup) -> Result<Vec<Vec<(usize, usize)>>> {
    if grp.degree() != g.num_vertices() {
        return Err(Error::DegreeMismatch {
            left: grp.degree(),
            right: g.num_vertices(),
        });
    }
    for gen in grp.generators() {
        if !g.is_automorphism(gen) {
            return Err(Error::Precondition(
                "group does not act on the graph: a generator breaks an edge".into(),
            ));
        }
    }
    let mut orbit_of = vec![usize::MAX; g.num_edges()];
    let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
    for start in 0..g.num_edges() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = Vec::new();
        let mut queue = VecDeque::from([start]);
        orbit_of[start] = id;
        while let Some(e) = queue.pop_front() {
            let (u, v) = g.edges()[e];
            orbit.push((u, v));
            for gen in grp.generators() {
                let f = g
                    .edge_index(gen.apply(u), gen.apply(v))
                    .expect("generators preserve edges");
                if orbit_of[f] == usize::MAX {
                    orbit_of[f] = id;
                    queue.push_back(f);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// Orbits of the vertex set under `grp`, listed by smallest member.
pub fn vertex_orbits(g: &SimpleGraph, grp: &PermutationGroup) -> Result<Vec<Vec<usize>>> {
    if grp.degree() != g.num_vertices() {
        return Err(Error::DegreeMismatch {
            left: grp.degree(),
            right: g.num_vertices(),
        });
    }
    let mut seen = vec![false; g.num_vertices()];
    let mut orbits = Vec::new();
    for start in 0..g.num_vertices() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            orbit.push(v);
            for gen in grp.generators() {
                let w = gen.apply(v);
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// True iff the automorphism group has a single orbit on edges. Graphs
/// without edges are vacuously edge-transitive.
pub fn is_edge_transitive(g: &SimpleGraph) -> Result<bool> {
    if g.num_edges() == 0 {
        return Ok(true);
    }
    let grp = automorphism_group(g)?;
    Ok(edge_orbits(g, &grp)?.len() == 1)
}

/// True iff the automorphism group has a single orbit on vertices. The
/// empty graph is vacuously vertex-transitive.
pub fn is_vertex_transitive(g: &SimpleGraph) -> Result<bool> {
    if g.num_vertices() == 0 {
        return Ok(true);
    }
    let grp = automorphism_group(g)?;
    Ok(vertex_orbits(g, &grp)?.len() == 1)
}

/// True iff the automorphism group has a single orbit on ordered adjacent
/// pairs. Graphs without edges are vacuously arc-transitive.
pub fn is_arc_transitive(g: &SimpleGraph) -> Result<bool> {
    if g.num_edges() == 0 {
        return Ok(true);
    }
    let grp = automorphism_group(g)?;
    // Arc orbit of the first arc under the generators must cover all 2|E|.
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .flat_map(|&(u, v)| [(u, v), (v, u)])
        .collect();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut queue = VecDeque::from([arcs[0]]);
    seen.insert(arcs[0]);
    while let Some((u, v)) = queue.pop_front() {
        for gen in grp.generators() {
            let next = (gen.apply(u), gen.apply(v));
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len() == arcs.len())
}

/// BFS two-coloring: `Some(colors)` with entries in `{0, 1}` when the
/// graph is bipartite, `None` when an odd cycle exists. Component roots
/// (smallest ids) are colored 0, so the coloring is deterministic.
pub fn is_bipartite(g: &SimpleGraph) -> Option<Vec<u8>> {
    let n = g.num_vertices();
    let mut color: Vec<Option<u8>> = vec![None; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are colored");
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(1 - cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(|c| c.expect("all colored")).collect())
}

/// Vertex connectivity by unit-capacity max-flow on the split-vertex
/// digraph: the minimum over non-adjacent pairs `(s, t)` of the number of
/// internally vertex-disjoint `s`–`t` paths.
///
/// Conventions: complete graphs give `n - 1`, disconnected graphs and
/// graphs with fewer than two vertices give 0.
pub fn vertex_connectivity(g: &SimpleGraph) -> usize {
    flow::vertex_connectivity(g)
}

/// Lifts an automorphism `a` of the line graph of `t` to the unique
/// automorphism of `t` inducing it.
///
/// Requires `t` connected with at least five vertices (below that, line
/// graphs stop determining their base graph: the triangle and the 3-star
/// share a line graph). Each vertex of degree >= 2 is recovered as the
/// common endpoint of the images of its incident edges; a pendant vertex is
/// recovered as the endpoint of its edge's image left over once its
/// neighbor is known. The induced action of the result is re-verified to
/// equal `a` before returning; failure means `a` was no true line-graph
/// automorphism.
pub fn whitney_lift(t: &SimpleGraph, a: &Permutation) -> Result<Permutation> {
    let n = t.num_vertices();
    if n < 5 {
        return Err(Error::Precondition(format!(
            "whitney lift needs at least 5 vertices, got {n}"
        )));
    }
    if !t.is_connected() {
        return Err(Error::Precondition("whitney lift needs a connected graph".into()));
    }
    if a.degree() != t.num_edges() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: t.num_edges(),
        });
    }
    let lg = line_graph(t);
    let inconsistent =
        || Error::Inconsistency("mapping is not induced by any automorphism of the base graph".into());

    let image_edge = |v: usize, w: usize| -> (usize, usize) {
        let e = t.edge_index(v, w).expect("incident edge");
        lg.base_edge(a.apply(e))
    };

    let mut images: Vec<Option<usize>> = vec![None; n];
    // Vertices of degree >= 2 first: their edge star maps to a set of
    // pairwise-incident edges, which must share a single endpoint.
    for (v, image) in images.iter_mut().enumerate() {
        let nb = t.neighbors(v);
        if nb.len() < 2 {
            continue;
        }
        let (p, q) = image_edge(v, nb[0]);
        let (r, s) = image_edge(v, nb[1]);
        let mut candidate = None;
        for x in [p, q] {
            if x == r || x == s {
                candidate = Some(x);
                break;
            }
        }
        let c = candidate.ok_or_else(inconsistent)?;
        for &w in &nb[2..] {
            let (x, y) = image_edge(v, w);
            if x != c && y != c {
                // The image star is a triangle, not a star; no common
                // endpoint exists, so nothing induces `a` here.
                return Err(inconsistent());
            }
        }
        *image = Some(c);
    }
    // Pendant vertices: the other endpoint of the image of their only edge.
    for v in 0..n {
        if images[v].is_some() {
            continue;
        }
        let nb = t.neighbors(v);
        if nb.is_empty() {
            // Unreachable given connectivity and n >= 5.
            return Err(inconsistent());
        }
        let w = nb[0];
        let anchor = images[w].ok_or_else(inconsistent)?;
        let (x, y) = image_edge(v, w);
        if anchor == x {
            images[v] = Some(y);
        } else if anchor == y {
            images[v] = Some(x);
        } else {
            return Err(inconsistent());
        }
    }
    let table: Vec<usize> = images
        .into_iter()
        .collect::<Option<Vec<usize>>>()
        .ok_or_else(inconsistent)?;
    let h = Permutation::from_images(table).map_err(|_| inconsistent())?;
    if !t.is_automorphism(&h) {
        return Err(inconsistent());
    }
    if induced_edge_mapping(t, &h)? != *a {
        return Err(inconsistent());
    }
    Ok(h)
}

/// Action of a base-graph automorphism `h` on the line graph: line vertex
/// carrying `{u, v}` goes to the one carrying `{h(u), h(v)}`.
pub fn induced_edge_mapping(t: &SimpleGraph, h: &Permutation) -> Result<Permutation> {
    if h.degree() != t.num_vertices() {
        return Err(Error::DegreeMismatch {
            left: h.degree(),
            right: t.num_vertices(),
        });
    }
    if !t.is_automorphism(h) {
        return Err(Error::Precondition(
            "mapping is not an automorphism of the base graph".into(),
        ));
    }
    let images: Vec<usize> = t
        .edges()
        .iter()
        .map(|&(u, v)| {
            t.edge_index(h.apply(u), h.apply(v))
                .expect("automorphisms preserve edges")
        })
        .collect();
    Permutation::from_images(images)
}

#[cfg(test)]
mod tests;
