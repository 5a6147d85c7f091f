//! Soundness verification of every proven bound over a graph stream.

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::engine::Engine;
use super::records::{kappa_log_ratio, ScanRecord};
use super::strategy::{subgraph_strategy, StrategyKind};
use crate::bounds::{
    self, bound_cor10, bound_cor11, bound_cor5, bound_cor7, bound_cor9, bound_prop1, bound_prop2, bound_prop3,
    ramsey_step_holds, reed_bound, BoundEvaluation, BoundId, BoundParams, InducedPart, Q4,
};
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, Graph, VertexSet};
use crate::invariants::{independence_number, invariant_report, InvariantReport};

/// Default order guard when the chromatic excess is computed.
pub const DEFAULT_GUARD_WITH_EXCESS: usize = 12;
/// Default order guard otherwise.
pub const DEFAULT_GUARD: usize = 16;

pub fn default_guard(with_excess: bool) -> usize {
    if with_excess {
        DEFAULT_GUARD_WITH_EXCESS
    } else {
        DEFAULT_GUARD
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OversizePolicy {
    #[default]
    Skip,
    Abort,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub with_excess: bool,
    pub strategy: StrategyKind,
    /// Stop after the first graph with a violation.
    pub fail_fast: bool,
    /// Overrides [`default_guard`].
    pub max_order: Option<usize>,
    pub oversize: OversizePolicy,
    /// Test hook: shifts every value of one bound before it is judged.
    pub bias: Option<(BoundId, Q4)>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            with_excess: false,
            strategy: StrategyKind::Heuristic,
            fail_fast: false,
            max_order: None,
            oversize: OversizePolicy::Skip,
            bias: None,
        }
    }
}

impl VerifyOptions {
    pub fn guard(&self) -> usize {
        self.max_order.unwrap_or_else(|| default_guard(self.with_excess))
    }
}

/// A failed check: a bound below χ, a lemma or identity that does not hold,
/// or a witness that does not certify.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    /// Bound id, or the name of the lemma / identity check.
    pub check: String,
    pub params: BoundParams,
    pub value: String,
    pub chromatic: usize,
}

#[derive(Clone, Debug, Default)]
pub struct VerificationSummary {
    pub graphs_processed: u64,
    pub graphs_skipped: u64,
    pub bound_checks: u64,
    pub violations: Vec<Violation>,
    pub reed_violators: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Result of checking one graph.
#[derive(Clone, Debug)]
pub struct GraphVerification {
    pub record: ScanRecord,
    pub checks: u64,
    pub violations: Vec<Violation>,
}

struct Checker<'a> {
    g: &'a Graph,
    r: &'a InvariantReport,
    graph6: String,
    bias: Option<(BoundId, Q4)>,
    checks: u64,
    violations: Vec<Violation>,
    tightest: Vec<BoundEvaluation>,
    chi_cache: HashMap<VertexSet, usize>,
}

impl Checker<'_> {
    fn part(&mut self, set: VertexSet) -> InducedPart {
        if let Some(&chromatic) = self.chi_cache.get(&set) {
            return InducedPart {
                set,
                order: set.len(),
                chromatic,
            };
        }
        let part = InducedPart::of(self.g, set).expect("strategy yields non-empty subsets");
        self.chi_cache.insert(set, part.chromatic);
        part
    }

    fn bound(&mut self, id: BoundId, params: BoundParams, value: Q4) {
        let value = match self.bias {
            Some((target, shift)) if target == id => value + shift,
            _ => value,
        };
        self.checks += 1;
        let eval = BoundEvaluation::judged(id, params, value, self.r.chromatic);
        if !eval.sound {
            self.violations.push(Violation {
                graph6: self.graph6.clone(),
                check: id.to_string(),
                params: eval.params.clone(),
                value: value.exact(),
                chromatic: self.r.chromatic,
            });
        }
        match self.tightest.iter_mut().find(|e| e.bound_id == id) {
            Some(cur) if eval.value < cur.value => *cur = eval,
            Some(_) => {}
            None => self.tightest.push(eval),
        }
    }

    fn check(&mut self, name: &str, ok: bool, value: String) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation {
                graph6: self.graph6.clone(),
                check: name.to_string(),
                params: BoundParams::none(),
                value,
                chromatic: self.r.chromatic,
            });
        }
    }
}

/// Evaluates every applicable bound on one graph.
pub fn verify_graph(g: &Graph, opts: &VerifyOptions) -> GraphVerification {
    let r = invariant_report(g, opts.with_excess);
    let inst = subgraph_strategy(g, &r, opts.strategy);
    let mut c = Checker {
        g,
        r: &r,
        graph6: encode_graph6(g).expect("order within graph6 range"),
        bias: opts.bias,
        checks: 0,
        violations: Vec::new(),
        tightest: Vec::new(),
        chi_cache: HashMap::new(),
    };
    c.chi_cache.insert(g.vertices(), r.chromatic);

    if let Err(what) = r.certify(g) {
        c.check("witness", false, what);
    }

    for fam in &inst.families {
        let value = bound_prop1(g, &r, fam).expect("strategy yields valid independent-set families");
        c.bound(BoundId::Prop1, BoundParams::family(fam), value);
    }
    c.bound(BoundId::Prop2, BoundParams::none(), bound_prop2(&r));
    for &h in &inst.subgraphs {
        let part = c.part(h);
        c.bound(BoundId::Prop3, BoundParams::subgraph(h), bound_prop3(&r, &part));
        c.bound(BoundId::Cor5, BoundParams::subgraph(h), bound_cor5(&r, &part));
    }
    for &k in &inst.cuts {
        let chi_k = c.part(k).chromatic;
        let alpha_k = independence_number(&g.induced_subgraph(k).expect("cut is non-empty")).0;
        c.bound(
            BoundId::Cor6,
            BoundParams::cut(k),
            bounds::cor6_from_parts(&r, chi_k, alpha_k),
        );
    }
    for (k, h) in inst.pairs() {
        let chi_k = c.part(k).chromatic;
        let rest = c.part(h.difference(k));
        c.bound(
            BoundId::Prop4,
            BoundParams::cut_and_subgraph(k, h),
            bounds::prop4_from_parts(&r, chi_k, &rest),
        );
    }
    c.bound(BoundId::Cor7, BoundParams::none(), bound_cor7(&r));

    if let Some(eta) = r.excess {
        let cor9 = bound_cor9(&r).expect("excess present");
        let cor10 = bound_cor10(&r).expect("excess present");
        c.bound(BoundId::Cor9, BoundParams::none(), cor9);
        c.bound(BoundId::Cor10, BoundParams::none(), cor10);
        c.bound(
            BoundId::Cor11,
            BoundParams::none(),
            bound_cor11(&r).expect("excess present"),
        );
        c.check(
            "cor9_eq_cor10",
            cor9 == cor10,
            format!("{} vs {}", cor9.exact(), cor10.exact()),
        );

        let (n, alpha, chi) = (r.n as i64, r.independence as i64, r.chromatic as i64);
        c.check(
            "lemma_alpha_lower",
            alpha - 3 <= eta,
            format!("eta={eta} alpha={alpha}"),
        );
        c.check(
            "lemma_order_lower",
            eta >= n - 3 * chi,
            format!("eta={eta} n={n} chi={chi}"),
        );
        // η ≤ ((α − 3)/α)·n, asserted only for α ≥ 3
        if alpha >= 3 {
            c.check(
                "lemma_alpha_upper",
                eta * alpha <= (alpha - 3) * n,
                format!("eta={eta} alpha={alpha} n={n}"),
            );
        }
    }
    c.check(
        "ramsey_step",
        ramsey_step_holds(&r),
        format!("n={} alpha={} omega={}", r.n, r.independence, r.clique),
    );

    let reed = reed_bound(&r);
    let reed_eval = BoundEvaluation::judged(
        BoundId::Reed,
        BoundParams::none(),
        Q4::from_int(reed as i64),
        r.chromatic,
    );
    let reed_violation = !reed_eval.sound;

    let mut evaluations = std::mem::take(&mut c.tightest);
    evaluations.sort_by_key(|e| e.bound_id);
    evaluations.push(reed_eval);

    let Checker {
        graph6,
        checks,
        violations,
        ..
    } = c;
    GraphVerification {
        record: ScanRecord {
            graph6,
            kappa_log_ratio: kappa_log_ratio(&r),
            invariants: r,
            evaluations,
            reed_violation,
            eps_verdicts: Vec::new(),
        },
        checks,
        violations,
    }
}

pub(crate) enum Outcome<T> {
    Done(T),
    Oversize { graph6: String, n: usize },
}

pub(crate) fn guarded<T>(g: &Graph, guard: usize, f: impl FnOnce(&Graph) -> T) -> Outcome<T> {
    if g.order() > guard {
        Outcome::Oversize {
            graph6: encode_graph6(g).unwrap_or_default(),
            n: g.order(),
        }
    } else {
        Outcome::Done(f(g))
    }
}

/// Skips or aborts on an oversize graph; returns whether the graph was skipped.
pub(crate) fn handle_oversize(policy: OversizePolicy, graph6: String, n: usize, max: usize) -> Result<()> {
    match policy {
        OversizePolicy::Skip => {
            log::warn!("skipping {graph6}: {n} vertices exceeds the solver guard of {max}");
            Ok(())
        }
        OversizePolicy::Abort => Err(Error::Oversize { graph6, n, max }),
    }
}

/// Checks every proven bound on every graph of `stream`, handing each
/// per-graph record to `on_record` in input order.
pub fn verify_all(
    stream: impl Iterator<Item = Result<Graph>>,
    opts: &VerifyOptions,
    engine: &Engine,
    mut on_record: impl FnMut(&ScanRecord) -> Result<()>,
) -> Result<VerificationSummary> {
    let start = Instant::now();
    let guard = opts.guard();
    let mut summary = VerificationSummary::default();
    engine.run(
        stream,
        |g| guarded(g, guard, |g| verify_graph(g, opts)),
        |outcome| {
            let v = match outcome {
                Outcome::Oversize { graph6, n } => {
                    summary.graphs_skipped += 1;
                    handle_oversize(opts.oversize, graph6, n, guard)?;
                    return Ok(ControlFlow::Continue(()));
                }
                Outcome::Done(v) => v,
            };
            summary.graphs_processed += 1;
            summary.bound_checks += v.checks;
            if v.record.reed_violation {
                summary.reed_violators.push(v.record.graph6.clone());
            }
            on_record(&v.record)?;
            let failed = !v.violations.is_empty();
            summary.violations.extend(v.violations);
            Ok(if failed && opts.fail_fast {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            })
        },
    )?;
    summary.elapsed = start.elapsed();
    Ok(summary)
}
