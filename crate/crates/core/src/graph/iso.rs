//! Isomorphism and automorphism search by individualization-refinement.
//!
//! Two ordered partitions are refined in lockstep, one over each graph's
//! vertex set, with cell `i` of the first always mapped onto cell `i` of
//! the second. Refinement splits every cell by the multiset of neighbor
//! cells; when the split signatures disagree between the two sides the
//! branch dies. Once all cells are singletons the aligned partition *is* a
//! candidate bijection, which is verified edge-by-edge. Branching tries
//! every image for the smallest vertex of the first non-singleton cell, so
//! the leaf set is exactly the set of isomorphisms.

use std::collections::BTreeMap;

use super::SimpleGraph;
use crate::perm::Permutation;

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a SimpleGraph,
    h: &'a SimpleGraph,
    find_all: bool,
    done: bool,
    found: Vec<Permutation>,
}

/// All automorphisms of `g`, in deterministic order.
pub(super) fn all_automorphisms(g: &SimpleGraph) -> Vec<Permutation> {
    let mut search = Search {
        g,
        h: g,
        find_all: true,
        done: false,
        found: Vec::new(),
    };
    search.run();
    search.found
}

/// One isomorphism from `g` to `h`, if any. Callers pre-check the cheap
/// invariants (vertex count, edge count, degree sequence).
pub(super) fn find_isomorphism(g: &SimpleGraph, h: &SimpleGraph) -> Option<Permutation> {
    let mut search = Search {
        g,
        h,
        find_all: false,
        done: false,
        found: Vec::new(),
    };
    search.run();
    search.found.into_iter().next()
}

impl Search<'_> {
    fn run(&mut self) {
        let n = self.g.num_vertices();
        let p: Partition = vec![(0..n).collect()];
        let q: Partition = vec![(0..n).collect()];
        self.recurse(p, q);
    }

    fn recurse(&mut self, mut p: Partition, mut q: Partition) {
        if self.done || !refine(self.g, self.h, &mut p, &mut q) {
            return;
        }
        if p.iter().all(|c| c.len() == 1) {
            self.try_leaf(&p, &q);
            return;
        }
        // Branch on the first non-singleton cell; fix its smallest vertex
        // and try every aligned image in ascending order.
        let idx = p.iter().position(|c| c.len() > 1).expect("non-singleton cell");
        let v = p[idx][0];
        let targets = q[idx].clone();
        for w in targets {
            let mut p2 = p.clone();
            let mut q2 = q.clone();
            p2[idx].retain(|&x| x != v);
            p2.insert(idx, vec![v]);
            q2[idx].retain(|&x| x != w);
            q2.insert(idx, vec![w]);
            self.recurse(p2, q2);
            if self.done {
                return;
            }
        }
    }

    fn try_leaf(&mut self, p: &Partition, q: &Partition) {
        let mut images = vec![0; self.g.num_vertices()];
        for (cp, cq) in p.iter().zip(q) {
            images[cp[0]] = cq[0];
        }
        let m = Permutation::from_images(images).expect("aligned singletons form a bijection");
        let preserves = self
            .g
            .edges()
            .iter()
            .all(|&(u, v)| self.h.has_edge(m.apply(u), m.apply(v)));
        if preserves {
            self.found.push(m);
            if !self.find_all {
                self.done = true;
            }
        }
    }
}

/// Refines both partitions to a common equitable one. Returns false when
/// the cell signatures diverge, i.e. no isomorphism respects the current
/// alignment.
fn refine(g: &SimpleGraph, h: &SimpleGraph, p: &mut Partition, q: &mut Partition) -> bool {
    loop {
        let cell_of_p = cell_index(g.num_vertices(), p);
        let cell_of_q = cell_index(h.num_vertices(), q);
        let mut new_p: Partition = Vec::with_capacity(p.len());
        let mut new_q: Partition = Vec::with_capacity(q.len());
        for (cp, cq) in p.iter().zip(q.iter()) {
            if cp.len() != cq.len() {
                return false;
            }
            if cp.len() == 1 {
                new_p.push(cp.clone());
                new_q.push(cq.clone());
                continue;
            }
            let groups_p = group_by_signature(g, cp, &cell_of_p);
            let groups_q = group_by_signature(h, cq, &cell_of_q);
            if groups_p.len() != groups_q.len() {
                return false;
            }
            for ((sig_p, vs_p), (sig_q, vs_q)) in groups_p.into_iter().zip(groups_q) {
                if sig_p != sig_q || vs_p.len() != vs_q.len() {
                    return false;
                }
                new_p.push(vs_p);
                new_q.push(vs_q);
            }
        }
        let stable = new_p.len() == p.len();
        *p = new_p;
        *q = new_q;
        if stable {
            return true;
        }
    }
}

fn cell_index(n: usize, partition: &Partition) -> Vec<usize> {
    let mut index = vec![0; n];
    for (i, cell) in partition.iter().enumerate() {
        for &v in cell {
            index[v] = i;
        }
    }
    index
}

/// Splits a cell by the sorted multiset of neighbor cell ids. The BTreeMap
/// keeps sub-cells in signature order on both sides, preserving alignment.
fn group_by_signature(
    g: &SimpleGraph,
    cell: &[usize],
    cell_of: &[usize],
) -> BTreeMap<Vec<usize>, Vec<usize>> {
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for &v in cell {
        let mut sig: Vec<usize> = g.neighbors(v).iter().map(|&w| cell_of[w]).collect();
        sig.sort_unstable();
        groups.entry(sig).or_default().push(v);
    }
    groups
}
