//! Upper bounds on χ, evaluated exactly.
//!
//! Every bound is a quarter-integer ([`Q4`]) except the ε-relaxed bound,
//! which is a general rational. Most bounds share the base term
//! `½(ω + Δ + 1)`, kept internally as `2(ω + Δ + 1)` quarters.

mod q4;
mod ramsey;

pub use q4::Q4;
pub use ramsey::{eps_chain_holds, prop12_threshold, ramsey_step_holds, ramsey_upper};

use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{chromatic_number, independence_number, InvariantReport};
use crate::rational::format_rational;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    Prop1,
    Prop2,
    Prop3,
    Prop4,
    Cor5,
    Cor6,
    Cor7,
    Cor9,
    Cor10,
    Cor11,
    Reed,
    Eps,
}

impl BoundId {
    /// The proven bounds, in reporting order.
    pub const PROVEN: [BoundId; 10] = [
        BoundId::Prop1,
        BoundId::Prop2,
        BoundId::Prop3,
        BoundId::Prop4,
        BoundId::Cor5,
        BoundId::Cor6,
        BoundId::Cor7,
        BoundId::Cor9,
        BoundId::Cor10,
        BoundId::Cor11,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::Prop1 => "prop1",
            BoundId::Prop2 => "prop2",
            BoundId::Prop3 => "prop3",
            BoundId::Prop4 => "prop4",
            BoundId::Cor5 => "cor5",
            BoundId::Cor6 => "cor6",
            BoundId::Cor7 => "cor7",
            BoundId::Cor9 => "cor9",
            BoundId::Cor10 => "cor10",
            BoundId::Cor11 => "cor11",
            BoundId::Reed => "reed",
            BoundId::Eps => "eps",
        }
    }

    pub fn needs_excess(self) -> bool {
        matches!(self, BoundId::Cor9 | BoundId::Cor10 | BoundId::Cor11)
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters a bound was instantiated with.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sets: Option<Vec<VertexSet>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<String>,
}

impl BoundParams {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn subgraph(h: VertexSet) -> Self {
        BoundParams {
            h: Some(h),
            ..Self::default()
        }
    }

    pub fn cut(k: VertexSet) -> Self {
        BoundParams {
            k: Some(k),
            ..Self::default()
        }
    }

    pub fn cut_and_subgraph(k: VertexSet, h: VertexSet) -> Self {
        BoundParams {
            h: Some(h),
            k: Some(k),
            ..Self::default()
        }
    }

    pub fn family(sets: &[VertexSet]) -> Self {
        BoundParams {
            sets: Some(sets.to_vec()),
            ..Self::default()
        }
    }
}

impl fmt::Display for BoundParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(h) = self.h {
            parts.push(format!("H={h:?}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("K={k:?}"));
        }
        if let Some(sets) = &self.sets {
            parts.push(format!("I={sets:?}"));
        }
        if let Some(eps) = &self.eps {
            parts.push(format!("eps={eps}"));
        }
        if parts.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEvaluation {
    pub bound_id: BoundId,
    pub params: BoundParams,
    pub value: Q4,
    /// `value >= χ`.
    pub sound: bool,
}

impl BoundEvaluation {
    pub fn judged(bound_id: BoundId, params: BoundParams, value: Q4, chromatic: usize) -> Self {
        BoundEvaluation {
            bound_id,
            params,
            value,
            sound: value >= Q4::from_int(chromatic as i64),
        }
    }
}

/// A non-empty induced subgraph, summarized by what the bounds read from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InducedPart {
    pub set: VertexSet,
    pub order: usize,
    pub chromatic: usize,
}

impl InducedPart {
    pub fn of(g: &Graph, set: VertexSet) -> Result<Self> {
        let sub = g.induced_subgraph(set)?;
        Ok(InducedPart {
            set,
            order: set.len(),
            chromatic: chromatic_number(&sub).0,
        })
    }

    /// `H = G`.
    pub fn whole(r: &InvariantReport) -> Self {
        InducedPart {
            set: VertexSet::full(r.n),
            order: r.n,
            chromatic: r.chromatic,
        }
    }

    fn slack_quarters(&self) -> i64 {
        3 * self.chromatic as i64 - self.order as i64
    }
}

fn base_quarters(r: &InvariantReport) -> i64 {
    2 * (r.clique + r.max_degree + 1) as i64
}

fn excess_of(r: &InvariantReport, id: BoundId) -> Result<i64> {
    r.excess.ok_or(Error::MissingExcess(id))
}

/// `⌈(ω + Δ + 1)/2⌉`.
pub fn reed_bound(r: &InvariantReport) -> usize {
    (r.clique + r.max_degree + 1).div_ceil(2)
}

/// `½(ω + n − Σ|I_j| + 2m − 1)` for disjoint non-empty independent sets `I_1..I_m`.
pub fn bound_prop1(g: &Graph, r: &InvariantReport, sets: &[VertexSet]) -> Result<Q4> {
    let all = g.vertices();
    for (i, &s) in sets.iter().enumerate() {
        if s.is_empty() {
            return Err(Error::EmptyFamilyMember { index: i });
        }
        if let Some(v) = s.difference(all).first() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
        if !g.is_independent(s) {
            return Err(Error::NotIndependent { index: i });
        }
        if let Some(j) = sets[..i].iter().position(|t| !t.is_disjoint(s)) {
            return Err(Error::OverlappingSets { first: j, second: i });
        }
    }
    let covered: usize = sets.iter().map(|s| s.len()).sum();
    Ok(prop1_from_parts(r, sets.len(), covered))
}

pub(crate) fn prop1_from_parts(r: &InvariantReport, m: usize, covered: usize) -> Q4 {
    let inner = (r.clique + r.n) as i64 - covered as i64 + 2 * m as i64 - 1;
    Q4::from_quarters(2 * inner)
}

/// `½(ω + (n + Δ + 1)/2)`.
pub fn bound_prop2(r: &InvariantReport) -> Q4 {
    Q4::from_quarters(2 * r.clique as i64 + (r.n + r.max_degree + 1) as i64)
}

/// [`bound_prop2`] plus `(3χ(H) − |H|)/4`.
pub fn bound_prop3(r: &InvariantReport, h: &InducedPart) -> Q4 {
    bound_prop2(r) + Q4::from_quarters(h.slack_quarters())
}

/// Checks that `k` is non-empty and that deleting it from the complement
/// leaves at least two components.
pub fn validate_complement_cut(g: &Graph, k: VertexSet) -> Result<()> {
    if k.is_empty() || !k.is_subset(g.vertices()) || !g.complement().is_cut(k) {
        return Err(Error::NotComplementCut(k.to_vec()));
    }
    Ok(())
}

/// `½(ω + Δ + 1) + (4χ(G[K]) + 3χ(H∖K) − |H∖K|)/4` for a cut-set `K` of the
/// complement and an induced subgraph `H` with `H∖K` non-empty.
pub fn bound_prop4(g: &Graph, r: &InvariantReport, k: VertexSet, h: VertexSet) -> Result<Q4> {
    validate_complement_cut(g, k)?;
    if h.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let rest = h.difference(k);
    if rest.is_empty() {
        return Err(Error::EmptyRemainder);
    }
    let chi_k = chromatic_number(&g.induced_subgraph(k)?).0;
    Ok(prop4_from_parts(r, chi_k, &InducedPart::of(g, rest)?))
}

pub(crate) fn prop4_from_parts(r: &InvariantReport, chi_k: usize, rest: &InducedPart) -> Q4 {
    Q4::from_quarters(base_quarters(r) + 4 * chi_k as i64 + rest.slack_quarters())
}

/// `½(ω + Δ + 1) + (5κ̄ + 3χ(H) − |H|)/4`.
pub fn bound_cor5(r: &InvariantReport, h: &InducedPart) -> Q4 {
    Q4::from_quarters(base_quarters(r) + 5 * r.kappa_bar as i64 + h.slack_quarters())
}

/// `½(ω + Δ + 1) + (4χ(G[K]) + α(G[K]) + 3 − α)/4` for a cut-set `K` of the complement.
pub fn bound_cor6(g: &Graph, r: &InvariantReport, k: VertexSet) -> Result<Q4> {
    validate_complement_cut(g, k)?;
    let gk = g.induced_subgraph(k)?;
    Ok(cor6_from_parts(r, chromatic_number(&gk).0, independence_number(&gk).0))
}

pub(crate) fn cor6_from_parts(r: &InvariantReport, chi_k: usize, alpha_k: usize) -> Q4 {
    Q4::from_quarters(base_quarters(r) + 4 * chi_k as i64 + alpha_k as i64 + 3 - r.independence as i64)
}

/// `½(ω + Δ + 1) + κ̄ + 1 − α/4`.
pub fn bound_cor7(r: &InvariantReport) -> Q4 {
    Q4::from_quarters(base_quarters(r) + 4 * (r.kappa_bar as i64 + 1) - r.independence as i64)
}

/// `½(ω + (Δ + 1 + n)/2) − η/4`.
pub fn bound_cor9(r: &InvariantReport) -> Result<Q4> {
    let eta = excess_of(r, BoundId::Cor9)?;
    Ok(bound_prop2(r) - Q4::from_quarters(eta))
}

/// `½(ω + Δ + 1) + (δ̄ − η)/4`.
pub fn bound_cor10(r: &InvariantReport) -> Result<Q4> {
    let eta = excess_of(r, BoundId::Cor10)?;
    Ok(Q4::from_quarters(base_quarters(r) + r.delta_bar as i64 - eta))
}

/// `½(ω + Δ + 1) + (5κ̄ − η)/4`.
pub fn bound_cor11(r: &InvariantReport) -> Result<Q4> {
    let eta = excess_of(r, BoundId::Cor11)?;
    Ok(Q4::from_quarters(base_quarters(r) + 5 * r.kappa_bar as i64 - eta))
}

/// `(½ + ε)ω + (Δ + 2)/2`.
pub fn eps_bound(r: &InvariantReport, eps: Rational64) -> Result<Rational64> {
    if eps <= Rational64::from_integer(0) {
        return Err(Error::NonPositiveEpsilon(format_rational(eps)));
    }
    Ok((Rational64::new(1, 2) + eps) * r.clique as i64 + Rational64::new(r.max_degree as i64 + 2, 2))
}
