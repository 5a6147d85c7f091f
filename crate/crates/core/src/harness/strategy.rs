//! Instances each graph is checked against: induced subgraphs H paired with
//! cut-sets K of the complement, plus families of disjoint independent sets.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::invariants::InvariantReport;

/// Largest order for which the exhaustive strategy is used; larger graphs
/// fall back to the heuristic one.
pub const EXHAUSTIVE_MAX_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrategyKind {
    /// Every non-empty H against every inclusion-minimal cut-set K of the
    /// complement. Families are all single independent sets and disjoint pairs.
    /// Graphs above [`EXHAUSTIVE_MAX_ORDER`] get the heuristic instances.
    Exhaustive,
    /// H ranges over G and the witness sets; K is the minimum cut of the
    /// complement when it is a valid cut-set.
    Heuristic,
}

impl FromStr for StrategyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "exhaustive" => Ok(StrategyKind::Exhaustive),
            "heuristic" => Ok(StrategyKind::Heuristic),
            other => Err(Error::UnknownStrategy(other.to_string())),
        }
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StrategyKind::Exhaustive => "exhaustive",
            StrategyKind::Heuristic => "heuristic",
        })
    }
}

/// Bound parameterizations for one graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Instances {
    pub subgraphs: Vec<VertexSet>,
    pub cuts: Vec<VertexSet>,
    pub families: Vec<Vec<VertexSet>>,
}

impl Instances {
    /// `(K, H)` pairs with `H ∖ K` non-empty.
    pub fn pairs(&self) -> impl Iterator<Item = (VertexSet, VertexSet)> + '_ {
        self.cuts.iter().flat_map(move |&k| {
            self.subgraphs
                .iter()
                .filter(move |&&h| !h.difference(k).is_empty())
                .map(move |&h| (k, h))
        })
    }
}

fn push_unique<T: PartialEq>(v: &mut Vec<T>, item: T) {
    if !v.contains(&item) {
        v.push(item);
    }
}

/// Color classes of the witness coloring, largest first (ties by smallest vertex).
fn color_classes(r: &InvariantReport) -> Vec<VertexSet> {
    let mut classes = vec![VertexSet::EMPTY; r.chromatic];
    for (v, &c) in r.witnesses.coloring.iter().enumerate() {
        classes[c].insert(v);
    }
    classes.sort_by_key(|c| (std::cmp::Reverse(c.len()), c.first()));
    classes
}

/// Inclusion-minimal non-empty cut-sets of the complement.
pub fn minimal_complement_cuts(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let comp = g.complement();
    let all = g.vertices();
    let is_cut: Vec<bool> = (0..1u64 << n)
        .map(|bits| bits != 0 && comp.is_cut(VertexSet::from_bits(bits)))
        .collect();
    all.subsets()
        .filter(|k| is_cut[k.bits() as usize])
        .filter(|&k| k.subsets().all(|sub| sub == k || !is_cut[sub.bits() as usize]))
        .collect()
}

pub fn subgraph_strategy(g: &Graph, r: &InvariantReport, kind: StrategyKind) -> Instances {
    let n = g.order();
    let whole = g.vertices();
    let independent = r.witnesses.independent;
    let mut out = Instances::default();

    let classes = color_classes(r);
    push_unique(&mut out.families, vec![independent]);
    for m in 1..=classes.len() {
        push_unique(&mut out.families, classes[..m].to_vec());
    }

    if kind == StrategyKind::Exhaustive && n <= EXHAUSTIVE_MAX_ORDER {
        out.subgraphs = whole.subsets().skip(1).collect();
        out.cuts = minimal_complement_cuts(g);
        let indep: Vec<VertexSet> = whole.subsets().skip(1).filter(|&s| g.is_independent(s)).collect();
        for (i, &a) in indep.iter().enumerate() {
            push_unique(&mut out.families, vec![a]);
            for &b in &indep[i + 1..] {
                if a.is_disjoint(b) {
                    push_unique(&mut out.families, vec![a, b]);
                }
            }
        }
        return out;
    }

    push_unique(&mut out.subgraphs, whole);
    push_unique(&mut out.subgraphs, independent);
    if let Some(h) = r.witnesses.excess {
        push_unique(&mut out.subgraphs, h);
    }
    if let Some(k) = r.witnesses.complement_cut {
        if crate::bounds::validate_complement_cut(g, k).is_ok() {
            out.cuts.push(k);
        }
    }
    out
}
