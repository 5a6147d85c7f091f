//! Vertex connectivity through Menger's theorem: κ is the minimum, over
//! non-adjacent pairs (s, t), of the number of internally vertex-disjoint
//! s–t paths, each computed as a unit-capacity max flow on the vertex-split
//! digraph.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexSet};

const INF: i32 = i32::MAX / 2;

/// Vertex-split network: vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1`.
struct SplitNetwork {
    size: usize,
    cap: Vec<i32>,
}

impl SplitNetwork {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let size = 2 * g.order();
        let mut net = SplitNetwork {
            size,
            cap: vec![0; size * size],
        };
        for v in 0..g.order() {
            let inner = if v == s || v == t { INF } else { 1 };
            net.set(2 * v, 2 * v + 1, inner);
            for u in g.neighbors(v) {
                net.set(2 * v + 1, 2 * u, INF);
            }
        }
        net
    }

    #[inline]
    fn set(&mut self, a: usize, b: usize, c: i32) {
        self.cap[a * self.size + b] = c;
    }

    #[inline]
    fn residual(&self, a: usize, b: usize) -> i32 {
        self.cap[a * self.size + b]
    }

    /// Nodes reachable from `source` in the residual network, plus BFS parents.
    fn bfs(&self, source: usize) -> (Vec<bool>, Vec<usize>) {
        let mut seen = vec![false; self.size];
        let mut parent = vec![usize::MAX; self.size];
        let mut queue = VecDeque::from([source]);
        seen[source] = true;
        while let Some(a) = queue.pop_front() {
            for b in 0..self.size {
                if !seen[b] && self.residual(a, b) > 0 {
                    seen[b] = true;
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        (seen, parent)
    }

    /// Augments unit paths until none remain or the flow reaches `limit`.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit {
            let (seen, parent) = self.bfs(source);
            if !seen[sink] {
                break;
            }
            let mut b = sink;
            while b != source {
                let a = parent[b];
                self.cap[a * self.size + b] -= 1;
                self.cap[b * self.size + a] += 1;
                b = a;
            }
            flow += 1;
        }
        flow
    }
}

/// Minimum s–t vertex separator for non-adjacent `s`, `t`, capped: returns
/// `None` when at least `limit` disjoint paths exist.
fn min_separator(g: &Graph, s: usize, t: usize, limit: usize) -> Option<(usize, VertexSet)> {
    let mut net = SplitNetwork::new(g, s, t);
    let source = 2 * s + 1;
    let sink = 2 * t;
    let flow = net.max_flow(source, sink, limit);
    if flow >= limit {
        return None;
    }
    let (reach, _) = net.bfs(source);
    let cut: VertexSet = (0..g.order()).filter(|&v| reach[2 * v] && !reach[2 * v + 1]).collect();
    debug_assert_eq!(cut.len(), flow);
    Some((flow, cut))
}

/// Vertex connectivity κ(g) with a minimum vertex cut.
///
/// Complete graphs (including K_1) return `n - 1` and no cut. Disconnected
/// graphs return 0 and the empty cut.
pub fn vertex_connectivity(g: &Graph) -> (usize, Option<VertexSet>) {
    let n = g.order();
    if g.edge_count() == n * (n - 1) / 2 {
        return (n - 1, None);
    }
    if !g.is_connected() {
        return (0, Some(VertexSet::EMPTY));
    }
    // Some minimum cut S misses one of the vertices 0..=κ, so some pair with
    // smaller index at most the current best lies on opposite sides of S.
    let mut best: Option<(usize, VertexSet)> = None;
    let mut s = 0;
    while s < n && best.as_ref().is_none_or(|(k, _)| s <= *k) {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let cap = best.as_ref().map_or(n, |(k, _)| *k);
            if let Some(found) = min_separator(g, s, t, cap) {
                best = Some(found);
            }
        }
        s += 1;
    }
    let (k, cut) = best.expect("a non-complete connected graph has a non-adjacent pair");
    (k, Some(cut))
}
