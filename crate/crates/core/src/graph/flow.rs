//! Vertex connectivity via the split-vertex max-flow reduction.
//!
//! Every vertex `v` becomes an arc `v_in -> v_out` of capacity 1; every
//! edge `{u, v}` becomes arcs `u_out -> v_in` and `v_out -> u_in` of
//! effectively unbounded capacity. The max flow from `s_out` to `t_in`
//! then counts internally vertex-disjoint `s`-`t` paths, and minimizing
//! over non-adjacent pairs gives the connectivity of a non-complete graph.

use super::SimpleGraph;

struct FlowNetwork {
    // Arc arrays with paired reverse arcs: arc 2k and 2k+1 are inverses.
    to: Vec<usize>,
    cap: Vec<usize>,
    head: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> FlowNetwork {
        FlowNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: usize) {
        self.head[from].push(self.to.len());
        self.to.push(to);
        self.cap.push(cap);
        self.head[to].push(self.to.len());
        self.to.push(from);
        self.cap.push(0);
    }

    /// Edmonds-Karp: repeatedly augment along shortest residual paths.
    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        let mut total = 0;
        loop {
            let mut parent_arc = vec![usize::MAX; self.head.len()];
            let mut queue = std::collections::VecDeque::from([source]);
            let mut reached = vec![false; self.head.len()];
            reached[source] = true;
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.head[u] {
                    let v = self.to[a];
                    if self.cap[a] > 0 && !reached[v] {
                        reached[v] = true;
                        parent_arc[v] = a;
                        if v == sink {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !reached[sink] {
                return total;
            }
            let mut bottleneck = usize::MAX;
            let mut v = sink;
            while v != source {
                let a = parent_arc[v];
                bottleneck = bottleneck.min(self.cap[a]);
                v = self.to[a ^ 1];
            }
            let mut v = sink;
            while v != source {
                let a = parent_arc[v];
                self.cap[a] -= bottleneck;
                self.cap[a ^ 1] += bottleneck;
                v = self.to[a ^ 1];
            }
            total += bottleneck;
        }
    }
}

fn disjoint_paths(g: &SimpleGraph, s: usize, t: usize) -> usize {
    let n = g.num_vertices();
    let node_in = |v: usize| 2 * v;
    let node_out = |v: usize| 2 * v + 1;
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.add_arc(node_in(v), node_out(v), 1);
    }
    for &(u, v) in g.edges() {
        net.add_arc(node_out(u), node_in(v), n);
        net.add_arc(node_out(v), node_in(u), n);
    }
    net.max_flow(node_out(s), node_in(t))
}

pub(super) fn vertex_connectivity(g: &SimpleGraph) -> usize {
    let n = g.num_vertices();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    if g.num_edges() == n * (n - 1) / 2 {
        // Complete graph: n - 1 by convention.
        return n - 1;
    }
    let mut best = usize::MAX;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(disjoint_paths(g, s, t));
            }
        }
    }
    best
}
