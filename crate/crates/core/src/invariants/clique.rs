//! Maximum clique by branch and bound over bitset candidate sets, pruned
//! with greedy sequential coloring of the candidates.

use crate::graph::{Graph, VertexSet};

struct Search<'a> {
    g: &'a Graph,
    best: VertexSet,
}

impl Search<'_> {
    /// Greedy color classes of `candidates`; returns vertices in class order
    /// with the 1-based class number of each, so the last entry has the
    /// largest bound.
    fn color_sort(&self, candidates: VertexSet) -> Vec<(usize, usize)> {
        let mut order = Vec::with_capacity(candidates.len());
        let mut uncolored = candidates;
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut available = uncolored;
            while let Some(v) = available.first() {
                available = available.difference(self.g.neighbors(v)).without(v);
                uncolored.remove(v);
                order.push((v, color));
            }
        }
        order
    }

    fn expand(&mut self, current: VertexSet, mut candidates: VertexSet) {
        let order = self.color_sort(candidates);
        for &(v, bound) in order.iter().rev() {
            if current.len() + bound <= self.best.len() {
                return;
            }
            let grown = current.with(v);
            let next = candidates.intersection(self.g.neighbors(v));
            if next.is_empty() {
                if grown.len() > self.best.len() {
                    self.best = grown;
                }
            } else {
                self.expand(grown, next);
            }
            candidates.remove(v);
        }
    }
}

/// Clique number ω(g) with a maximum clique.
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    let mut search = Search {
        g,
        best: VertexSet::singleton(0),
    };
    search.expand(VertexSet::EMPTY, g.vertices());
    (search.best.len(), search.best)
}

/// Independence number α(g) with a maximum independent set, computed as the
/// clique number of the complement.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    clique_number(&g.complement())
}
