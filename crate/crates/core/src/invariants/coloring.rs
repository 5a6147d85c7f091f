//! Exact chromatic number by DSATUR branch and bound.
//!
//! The search starts from a greedy DSATUR coloring (upper bound) and a
//! maximum clique (lower bound, and pre-colored with distinct colors to break
//! color symmetry). Branching always picks the uncolored vertex of largest
//! saturation, then largest uncolored degree, then smallest index.

use super::clique::clique_number;
use crate::graph::{Graph, VertexSet};

const UNCOLORED: usize = usize::MAX;

struct Dsatur<'a> {
    g: &'a Graph,
    color: Vec<usize>,
    classes: Vec<VertexSet>,
    uncolored: VertexSet,
    best: usize,
    best_coloring: Vec<usize>,
    lower: usize,
}

impl Dsatur<'_> {
    fn saturation(&self, v: usize, used: usize) -> usize {
        let nbrs = self.g.neighbors(v);
        self.classes[..used].iter().filter(|c| !c.is_disjoint(nbrs)).count()
    }

    fn pick(&self, used: usize) -> usize {
        let mut best = (0, 0, usize::MAX);
        for v in self.uncolored {
            let sat = self.saturation(v, used);
            let deg = self.g.neighbors(v).intersection(self.uncolored).len();
            if best.2 == usize::MAX || (sat, deg) > (best.0, best.1) {
                best = (sat, deg, v);
            }
        }
        best.2
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        self.classes[c].insert(v);
        self.uncolored.remove(v);
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.classes[c].remove(v);
        self.color[v] = UNCOLORED;
        self.uncolored.insert(v);
    }

    /// Greedy DSATUR: returns the number of colors used.
    fn greedy(&mut self, mut used: usize) -> usize {
        while !self.uncolored.is_empty() {
            let v = self.pick(used);
            let nbrs = self.g.neighbors(v);
            let c = (0..used).find(|&c| self.classes[c].is_disjoint(nbrs)).unwrap_or(used);
            self.assign(v, c);
            used = used.max(c + 1);
        }
        used
    }

    fn search(&mut self, used: usize) {
        if self.uncolored.is_empty() {
            if used < self.best {
                self.best = used;
                self.best_coloring.clone_from(&self.color);
            }
            return;
        }
        let v = self.pick(used);
        let nbrs = self.g.neighbors(v);
        // colors 0..=used, but never reaching `best` colors
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if !self.classes[c].is_disjoint(nbrs) {
                continue;
            }
            self.assign(v, c);
            self.search(used.max(c + 1));
            self.unassign(v);
            if self.best == self.lower {
                return;
            }
        }
    }
}

/// χ(g) with an optimal coloring (`coloring[v]` in `0..χ`).
pub fn chromatic_number(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.order();
    let (omega, clique) = clique_number(g);
    let mut solver = Dsatur {
        g,
        color: vec![UNCOLORED; n],
        classes: vec![VertexSet::EMPTY; n],
        uncolored: g.vertices(),
        best: n + 1,
        best_coloring: Vec::new(),
        lower: omega,
    };
    for (c, v) in clique.iter().enumerate() {
        solver.assign(v, c);
    }
    let upper = solver.greedy(omega);
    solver.best = upper;
    solver.best_coloring.clone_from(&solver.color);
    if upper > omega {
        for v in g.vertices().difference(clique) {
            solver.unassign(v);
        }
        solver.search(omega);
    }
    (solver.best, solver.best_coloring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(g: &Graph, expected: usize) {
        let (chi, coloring) = chromatic_number(g);
        assert_eq!(chi, expected);
        assert!(g.is_proper_coloring(&coloring));
        assert!(coloring.iter().all(|&c| c < chi));
    }

    #[test]
    fn known_values() {
        check(&Graph::complete(4).unwrap(), 4);
        check(&Graph::cycle(5).unwrap(), 3);
        check(&Graph::cycle(6).unwrap(), 2);
        check(&Graph::petersen(), 3);
        check(&Graph::empty(1).unwrap(), 1);
        check(&Graph::empty(6).unwrap(), 1);
    }

    #[test]
    fn mycielski_graphs_need_more_colors_than_cliques() {
        // Grötzsch graph: triangle-free, χ = 4.
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i + 5, (i + 1) % 5));
            edges.push((i + 5, (i + 4) % 5));
            edges.push((i + 5, 10));
        }
        let grotzsch = Graph::from_edges(11, &edges).unwrap();
        assert_eq!(clique_number(&grotzsch).0, 2);
        check(&grotzsch, 4);
    }

    #[test]
    fn complement_of_c7() {
        // χ(complement of C_7) = 4 while ω = 3.
        check(&Graph::cycle(7).unwrap().complement(), 4);
    }
}
