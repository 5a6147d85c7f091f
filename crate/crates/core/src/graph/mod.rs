//! Simple undirected graphs on at most 62 vertices, stored as one adjacency
//! bitset per vertex.

mod generate;
mod graph6;
mod vertex_set;

pub use generate::{
    enumerate_labeled, enumerate_labeled_with_guard, gen_gnp, GnpGenerator, LabeledGraphs, DEFAULT_ENUMERATION_GUARD,
};
pub use graph6::{encode_graph6, parse_graph6};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// Largest supported order. Keeps every graph in short-form graph6 and every
/// vertex set in a single machine word.
pub const MAX_ORDER: usize = 62;

/// A finite simple graph with a non-empty vertex set `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::UnsupportedOrder(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all.without(v);
        }
        Ok(g)
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::UnsupportedOrder(n));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The Petersen graph: outer 5-cycle on 0..5, inner pentagram on 5..10.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen graph is well formed")
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in graph6 bit order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| (0..v).filter(move |&u| self.has_edge(u, v)).map(move |u| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n).map(|v| all.difference(self.adj[v]).without(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in ascending order of the
    /// original vertex indices.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(v) = s.difference(self.vertices()).first() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        let kept: Vec<usize> = s.iter().collect();
        let adj = kept
            .iter()
            .map(|&v| {
                let local = self.adj[v].intersection(s);
                VertexSet::from_indices(
                    kept.iter()
                        .enumerate()
                        .filter(|(_, &u)| local.contains(u))
                        .map(|(i, _)| i),
                )
            })
            .collect();
        Ok(Graph { n: kept.len(), adj })
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].intersection(s).is_empty())
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    /// True when `coloring` assigns every vertex a color and no edge is monochromatic.
    pub fn is_proper_coloring(&self, coloring: &[usize]) -> bool {
        coloring.len() == self.n && self.edges().all(|(u, v)| coloring[u] != coloring[v])
    }

    /// Number of connected components of the subgraph induced by `within`.
    pub fn component_count(&self, within: VertexSet) -> usize {
        let mut unseen = within;
        let mut count = 0;
        while let Some(root) = unseen.first() {
            count += 1;
            let mut frontier = VertexSet::singleton(root);
            unseen.remove(root);
            while let Some(v) = frontier.first() {
                frontier.remove(v);
                let next = self.adj[v].intersection(unseen);
                unseen = unseen.difference(next);
                frontier = frontier.union(next);
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count(self.vertices()) == 1
    }

    /// True when deleting `k` leaves at least two components.
    pub fn is_cut(&self, k: VertexSet) -> bool {
        self.component_count(self.vertices().difference(k)) >= 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_indices(vs.iter().copied())
    }

    #[test]
    fn complement_of_triangle_is_edgeless() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.complement(), Graph::empty(3).unwrap());
    }

    #[test]
    fn c5_is_self_complementary_under_doubling() {
        let c5 = Graph::cycle(5).unwrap();
        let comp = c5.complement();
        for u in 0..5 {
            for v in 0..5 {
                if u != v {
                    assert_eq!(c5.has_edge(u, v), comp.has_edge(2 * u % 5, 2 * v % 5));
                }
            }
        }
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.induced_subgraph(set(&[0, 1, 2])).unwrap(), Graph::path(3).unwrap());
        assert_eq!(c5.induced_subgraph(c5.vertices()).unwrap(), c5);
        let k4 = Graph::complete(4).unwrap();
        for u in 0..4 {
            for v in u + 1..4 {
                assert_eq!(k4.induced_subgraph(set(&[u, v])).unwrap(), Graph::complete(2).unwrap());
            }
        }
        assert!(matches!(
            c5.induced_subgraph(VertexSet::EMPTY),
            Err(Error::EmptyVertexSet)
        ));
        assert!(c5.induced_subgraph(set(&[7])).is_err());
    }

    #[test]
    fn relabeling_is_ascending_compaction() {
        let g = Graph::from_edges(6, &[(1, 5), (3, 5)]).unwrap();
        let h = g.induced_subgraph(set(&[1, 3, 5])).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(Graph::empty(0), Err(Error::UnsupportedOrder(0))));
        assert!(matches!(Graph::empty(63), Err(Error::UnsupportedOrder(63))));
        let mut g = Graph::empty(3).unwrap();
        assert!(matches!(g.add_edge(1, 1), Err(Error::SelfLoop(1))));
        assert!(g.add_edge(0, 3).is_err());
    }

    #[test]
    fn petersen_is_cubic() {
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn components_and_cuts() {
        let p4 = Graph::path(4).unwrap();
        assert!(p4.is_connected());
        assert!(p4.is_cut(set(&[1])));
        assert!(!p4.is_cut(set(&[0])));
        assert_eq!(Graph::empty(4).unwrap().component_count(set(&[0, 2, 3])), 3);
    }
}
