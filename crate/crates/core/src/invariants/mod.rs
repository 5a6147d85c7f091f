//! Exact invariants consumed by the chromatic bounds, each with a witness
//! that can be re-checked against its definition.

mod clique;
mod coloring;
mod connectivity;
mod excess;

pub use clique::{clique_number, independence_number};
pub use coloring::chromatic_number;
pub use connectivity::vertex_connectivity;
pub use excess::chromatic_excess;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    /// `coloring[v]` is the color of vertex `v`, colors `0..chromatic`.
    pub coloring: Vec<usize>,
    pub clique: VertexSet,
    pub independent: VertexSet,
    /// Minimum vertex cut of the complement; absent when the complement is complete.
    pub complement_cut: Option<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub excess: Option<VertexSet>,
}

/// All exact invariants of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub max_degree: usize,
    pub chromatic: usize,
    pub clique: usize,
    pub independence: usize,
    /// κ of the complement.
    pub kappa_bar: usize,
    /// δ of the complement, `n − 1 − Δ`.
    pub delta_bar: usize,
    /// η; absent unless requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub excess: Option<i64>,
    pub witnesses: Witnesses,
}

pub fn invariant_report(g: &Graph, with_excess: bool) -> InvariantReport {
    let n = g.order();
    let max_degree = g.max_degree();
    let (chromatic, coloring) = chromatic_number(g);
    let (clique, clique_set) = clique_number(g);
    let (independence, independent) = independence_number(g);
    let (kappa_bar, complement_cut) = vertex_connectivity(&g.complement());
    let (excess, excess_set) = if with_excess {
        let (eta, h) = chromatic_excess(g);
        (Some(eta), Some(h))
    } else {
        (None, None)
    };
    InvariantReport {
        n,
        max_degree,
        chromatic,
        clique,
        independence,
        kappa_bar,
        delta_bar: n - 1 - max_degree,
        excess,
        witnesses: Witnesses {
            coloring,
            clique: clique_set,
            independent,
            complement_cut,
            excess: excess_set,
        },
    }
}

impl InvariantReport {
    /// Re-validates every witness and the structural relations between the
    /// values. Returns a description of the first failure.
    pub fn certify(&self, g: &Graph) -> Result<(), String> {
        let w = &self.witnesses;
        let n = g.order();
        let ensure = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
        ensure(self.n == n, "order mismatch")?;
        ensure(self.max_degree == g.max_degree(), "max degree mismatch")?;
        ensure(g.is_proper_coloring(&w.coloring), "coloring is not proper")?;
        ensure(
            w.coloring.iter().max().map(|c| c + 1) == Some(self.chromatic),
            "coloring does not use exactly chi colors",
        )?;
        ensure(g.is_clique(w.clique) && w.clique.len() == self.clique, "clique witness")?;
        ensure(
            g.is_independent(w.independent) && w.independent.len() == self.independence,
            "independent set witness",
        )?;
        let comp = g.complement();
        match w.complement_cut {
            None => ensure(
                comp.edge_count() == n * (n - 1) / 2 && self.kappa_bar == n - 1,
                "missing cut witness",
            )?,
            Some(cut) => ensure(
                cut.len() == self.kappa_bar && comp.is_cut(cut),
                "complement cut witness",
            )?,
        }
        ensure(
            self.clique <= self.chromatic && self.chromatic <= self.max_degree + 1,
            "omega <= chi <= Delta + 1",
        )?;
        ensure(self.chromatic * self.independence >= n, "chi >= n / alpha")?;
        ensure(self.kappa_bar < n.max(1), "kappa_bar <= n - 1")?;
        ensure(self.delta_bar + self.max_degree + 1 == n, "delta_bar = n - 1 - Delta")?;
        if let Some(eta) = self.excess {
            let h = w.excess.ok_or("missing excess witness")?;
            let sub = g.induced_subgraph(h).map_err(|e| e.to_string())?;
            let value = h.len() as i64 - 3 * chromatic_number(&sub).0 as i64;
            ensure(value == eta, "excess witness value")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary(r: &InvariantReport) -> [i64; 8] {
        [
            r.n as i64,
            r.max_degree as i64,
            r.chromatic as i64,
            r.clique as i64,
            r.independence as i64,
            r.kappa_bar as i64,
            r.delta_bar as i64,
            r.excess.unwrap(),
        ]
    }

    #[test]
    fn reports_for_small_graphs() {
        let c5 = Graph::cycle(5).unwrap();
        let r = invariant_report(&c5, true);
        assert_eq!(summary(&r), [5, 2, 3, 2, 2, 2, 2, -1]);
        r.certify(&c5).unwrap();

        let k1 = Graph::empty(1).unwrap();
        let r = invariant_report(&k1, true);
        assert_eq!(summary(&r), [1, 0, 1, 1, 1, 0, 0, -2]);
        r.certify(&k1).unwrap();

        let k4 = Graph::complete(4).unwrap();
        let r = invariant_report(&k4, true);
        assert_eq!(summary(&r), [4, 3, 4, 4, 1, 0, 0, -2]);
        assert_eq!(r.witnesses.complement_cut, Some(VertexSet::EMPTY));
        r.certify(&k4).unwrap();
    }

    #[test]
    fn excess_is_optional() {
        let r = invariant_report(&Graph::petersen(), false);
        assert_eq!(r.excess, None);
        assert_eq!(r.witnesses.excess, None);
        r.certify(&Graph::petersen()).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(!json.contains("excess"));
        assert_eq!(serde_json::from_str::<InvariantReport>(&json).unwrap(), r);
    }

    #[test]
    fn certify_catches_tampering() {
        let g = Graph::cycle(5).unwrap();
        let mut r = invariant_report(&g, true);
        r.witnesses.coloring[0] = r.witnesses.coloring[1];
        assert!(r.certify(&g).is_err());
        let mut r = invariant_report(&g, true);
        r.excess = Some(0);
        assert!(r.certify(&g).is_err());
    }
}
