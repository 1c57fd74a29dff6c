//! Transposition sets and their graphs on `{1..n}`.
//!
//! A set of transpositions is simultaneously a generating set for `S_n` and
//! the edge set of a graph on the points; the set generates `S_n` exactly
//! when that graph is connected. This module provides the conversion both
//! ways, the named families (path, cycle, star, complete), and exhaustive
//! enumeration of small connected transposition graphs up to isomorphism
//! for theorem sweeps.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{self, SimpleGraph};
use crate::perm::{Permutation, Transposition};

/// A set of transpositions over `{1..n}`, stored as normalized pairs in
/// sorted order. Transpositions are involutions, so the set is closed under
/// inverse by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TranspositionSet {
    n: usize,
    pairs: Vec<Transposition>,
}

impl TranspositionSet {
    /// Builds a set over `{1..n}`, rejecting out-of-range points and
    /// repeated pairs.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = Transposition>) -> Result<TranspositionSet> {
        if n == 0 {
            return Err(Error::UnsupportedDegree {
                n,
                reason: "transposition sets need degree at least 1".into(),
            });
        }
        let mut pairs: Vec<Transposition> = pairs.into_iter().collect();
        for t in &pairs {
            if t.b() >= n {
                return Err(Error::InvalidPermutation(format!(
                    "transposition {t} out of range for degree {n}"
                )));
            }
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidPermutation(format!("pair {} repeated", w[0])));
        }
        Ok(TranspositionSet { n, pairs })
    }

    /// Convenience constructor from 1-based point pairs.
    pub fn from_one_based(n: usize, pairs: &[(usize, usize)]) -> Result<TranspositionSet> {
        let ts: Result<Vec<Transposition>> = pairs
            .iter()
            .map(|&(a, b)| Transposition::from_one_based(a, b))
            .collect();
        TranspositionSet::new(n, ts?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The pairs in sorted order.
    pub fn pairs(&self) -> &[Transposition] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, t: &Transposition) -> bool {
        self.pairs.binary_search(t).is_ok()
    }

    /// The generators as permutations of degree `n`.
    pub fn permutations(&self) -> Vec<Permutation> {
        self.pairs
            .iter()
            .map(|t| t.to_permutation(self.n).expect("pairs fit the degree"))
            .collect()
    }

    /// The transposition graph: vertices `0..n`, one edge per pair.
    pub fn to_graph(&self) -> SimpleGraph {
        SimpleGraph::new(self.n, self.pairs.iter().map(|t| (t.a(), t.b())))
            .expect("normalized distinct pairs form a simple graph")
    }

    /// Reads a set back off a graph; inverse of [`TranspositionSet::to_graph`].
    pub fn from_graph(g: &SimpleGraph) -> Result<TranspositionSet> {
        let pairs: Result<Vec<Transposition>> = g
            .edges()
            .iter()
            .map(|&(u, v)| Transposition::new(u, v))
            .collect();
        TranspositionSet::new(g.num_vertices(), pairs?)
    }

    /// True iff the set generates `S_n`, i.e. the transposition graph is
    /// connected.
    pub fn is_generating(&self) -> bool {
        self.to_graph().is_connected()
    }

    /// Compact textual form: 1-based pairs `"1-2 2-3"` in sorted order.
    /// The empty set prints as the empty string.
    pub fn to_compact_string(&self) -> String {
        self.pairs
            .iter()
            .map(|t| {
                let (a, b) = t.one_based();
                format!("{a}-{b}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the compact `"1-2 2-3"` form produced by
    /// [`TranspositionSet::to_compact_string`].
    pub fn from_compact_string(n: usize, text: &str) -> Result<TranspositionSet> {
        let mut pairs = Vec::new();
        for tok in text.split_whitespace() {
            let (a, b) = tok.split_once('-').ok_or_else(|| Error::Parse {
                line: 1,
                column: 1,
                message: format!("expected \"i-j\", found {tok:?}"),
            })?;
            let a: usize = a.parse().map_err(|_| Error::Parse {
                line: 1,
                column: 1,
                message: format!("bad point in {tok:?}"),
            })?;
            let b: usize = b.parse().map_err(|_| Error::Parse {
                line: 1,
                column: 1,
                message: format!("bad point in {tok:?}"),
            })?;
            pairs.push(Transposition::from_one_based(a, b)?);
        }
        TranspositionSet::new(n, pairs)
    }

    /// Parses the shared edge-list file format into a set.
    pub fn from_edge_list(text: &str) -> Result<TranspositionSet> {
        TranspositionSet::from_graph(&SimpleGraph::parse_edge_list(text)?)
    }
}

impl fmt::Display for TranspositionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_compact_string())
    }
}

/// The named transposition-graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyName {
    /// `{(i, i+1)}`; the Cayley graph is the bubble-sort graph.
    Path,
    /// Path plus `(1, n)`; the Cayley graph is the modified bubble-sort graph.
    Cycle,
    /// `{(1, j)}`; the Cayley graph is the star graph.
    Star,
    /// All pairs; the Cayley graph is the complete transposition graph.
    Complete,
}

impl FamilyName {
    pub const ALL: [FamilyName; 4] = [
        FamilyName::Path,
        FamilyName::Cycle,
        FamilyName::Star,
        FamilyName::Complete,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyName::Path => "path",
            FamilyName::Cycle => "cycle",
            FamilyName::Star => "star",
            FamilyName::Complete => "complete",
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyName> {
        match s {
            "path" => Ok(FamilyName::Path),
            "cycle" => Ok(FamilyName::Cycle),
            "star" => Ok(FamilyName::Star),
            "complete" => Ok(FamilyName::Complete),
            other => Err(Error::InvalidFamily(format!(
                "unknown family {other:?} (expected path, cycle, star or complete)"
            ))),
        }
    }
}

/// Builds a named family on `{1..n}`. Path, star and complete need
/// `n >= 2`; cycle needs `n >= 3`.
pub fn family(name: FamilyName, n: usize) -> Result<TranspositionSet> {
    let min = match name {
        FamilyName::Cycle => 3,
        _ => 2,
    };
    if n < min {
        return Err(Error::InvalidFamily(format!(
            "family {name} needs n >= {min}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = match name {
        FamilyName::Path => (1..n).map(|i| (i, i + 1)).collect(),
        FamilyName::Cycle => (1..n).map(|i| (i, i + 1)).chain([(1, n)]).collect(),
        FamilyName::Star => (2..=n).map(|j| (1, j)).collect(),
        FamilyName::Complete => (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect(),
    };
    TranspositionSet::from_one_based(n, &pairs)
}

/// Parses a family URI `family:<name>:<n>`.
pub fn from_family_uri(uri: &str) -> Result<TranspositionSet> {
    let rest = uri.strip_prefix("family:").ok_or_else(|| {
        Error::InvalidFamily(format!("expected \"family:<name>:<n>\", got {uri:?}"))
    })?;
    let (name, n) = rest.split_once(':').ok_or_else(|| {
        Error::InvalidFamily(format!("expected \"family:<name>:<n>\", got {uri:?}"))
    })?;
    let n: usize = n.parse().map_err(|_| {
        Error::InvalidFamily(format!("bad degree {n:?} in family URI {uri:?}"))
    })?;
    family(name.parse()?, n)
}

/// Largest degree the exhaustive class enumeration supports.
pub const MAX_ENUMERATION_DEGREE: usize = 7;

/// One representative per isomorphism class of connected transposition
/// graphs on `n` points, for `2 <= n <= 7`.
///
/// Every edge subset of the complete graph is tested for connectivity and
/// deduplicated against the accepted list with the isomorphism search; the
/// representative kept for each class is its lexicographically smallest
/// member, and the classes are returned in lexicographic order. At `n = 7`
/// this scans 2^21 subsets and takes a while.
pub fn enumerate_connected(n: usize) -> Result<Vec<TranspositionSet>> {
    if !(2..=MAX_ENUMERATION_DEGREE).contains(&n) {
        return Err(Error::UnsupportedDegree {
            n,
            reason: format!("enumeration supports 2..={MAX_ENUMERATION_DEGREE}"),
        });
    }
    let all_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let m = all_pairs.len();

    struct Class {
        graph: SimpleGraph,
        representative: Vec<(usize, usize)>,
    }
    let mut classes: Vec<Class> = Vec::new();
    // Bucket candidate classes by (edge count, degree sequence) so each new
    // subset is compared against few representatives.
    let mut buckets: HashMap<(usize, Vec<usize>), Vec<usize>> = HashMap::new();

    for mask in 0u32..(1u32 << m) {
        if (mask.count_ones() as usize) < n - 1 {
            continue;
        }
        let edges: Vec<(usize, usize)> = (0..m)
            .filter(|&k| mask & (1 << k) != 0)
            .map(|k| all_pairs[k])
            .collect();
        if !connected_over_all_points(n, &edges) {
            continue;
        }
        let g = SimpleGraph::new(n, edges.iter().copied()).expect("subset of distinct pairs");
        let key = (g.num_edges(), g.degree_sequence());
        let bucket = buckets.entry(key).or_default();
        let mut matched = false;
        for &ci in bucket.iter() {
            if graph::find_isomorphism(&g, &classes[ci].graph)
                .expect("small graphs are within capacity")
                .is_some()
            {
                if edges < classes[ci].representative {
                    classes[ci].representative = edges.clone();
                }
                matched = true;
                break;
            }
        }
        if !matched {
            bucket.push(classes.len());
            classes.push(Class {
                graph: g,
                representative: edges,
            });
        }
    }

    let mut reps: Vec<Vec<(usize, usize)>> =
        classes.into_iter().map(|c| c.representative).collect();
    reps.sort();
    reps.into_iter()
        .map(|edges| {
            let ts: Result<Vec<Transposition>> = edges
                .into_iter()
                .map(|(a, b)| Transposition::new(a, b))
                .collect();
            TranspositionSet::new(n, ts?)
        })
        .collect()
}

/// Union-find connectivity over all `n` points (isolated points count as
/// disconnected).
fn connected_over_all_points(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for &(u, v) in edges {
        let ru = find(&mut parent, u);
        let rv = find(&mut parent, v);
        if ru != rv {
            parent[ru] = rv;
            components -= 1;
        }
    }
    components == 1
}
