//! Scans for Reed-bound violators and for failures of the ε-dichotomy.

use std::ops::ControlFlow;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::engine::Engine;
use super::records::{kappa_log_ratio, EpsVerdict, ScanRecord};
use super::verify::{guarded, handle_oversize, Outcome, OversizePolicy, Violation, DEFAULT_GUARD};
use crate::bounds::{
    eps_bound, eps_chain_holds, prop12_threshold, ramsey_step_holds, reed_bound, BoundEvaluation, BoundId, BoundParams,
    Q4,
};
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, Graph};
use crate::invariants::{invariant_report, InvariantReport};
use crate::rational::{format_rational, rational_to_f64};

#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    pub max_order: usize,
    pub oversize: OversizePolicy,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            max_order: DEFAULT_GUARD,
            oversize: OversizePolicy::Skip,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReedViolator {
    pub graph6: String,
    pub chromatic: usize,
    pub reed_bound: usize,
    pub kappa_bar: usize,
    pub kappa_log_ratio: Option<f64>,
}

#[derive(Clone, Debug, Default)]
pub struct ReedSummary {
    pub graphs_processed: u64,
    pub graphs_skipped: u64,
    pub violators: Vec<ReedViolator>,
}

impl ReedSummary {
    /// Smallest `κ̄ / log₂ n` over violators; `None` when there are none.
    pub fn min_violator_ratio(&self) -> Option<f64> {
        self.violators
            .iter()
            .filter_map(|v| v.kappa_log_ratio)
            .min_by(f64::total_cmp)
    }
}

fn reed_record(g: &Graph, r: InvariantReport) -> ScanRecord {
    let reed = reed_bound(&r);
    let eval = BoundEvaluation::judged(
        BoundId::Reed,
        BoundParams::none(),
        Q4::from_int(reed as i64),
        r.chromatic,
    );
    ScanRecord {
        graph6: encode_graph6(g).expect("order within graph6 range"),
        kappa_log_ratio: kappa_log_ratio(&r),
        reed_violation: !eval.sound,
        evaluations: vec![eval],
        invariants: r,
        eps_verdicts: Vec::new(),
    }
}

pub fn scan_reed_graph(g: &Graph) -> ScanRecord {
    reed_record(g, invariant_report(g, false))
}

/// One record per graph; violators of `χ ≤ ⌈(ω + Δ + 1)/2⌉` are collected.
pub fn scan_reed(
    stream: impl Iterator<Item = Result<Graph>>,
    opts: &ScanOptions,
    engine: &Engine,
    on_record: impl FnMut(&ScanRecord) -> Result<()>,
) -> Result<ReedSummary> {
    scan_invariants(stream, false, opts, engine, on_record)
}

/// [`scan_reed`] with the chromatic excess optionally included in each record.
pub fn scan_invariants(
    stream: impl Iterator<Item = Result<Graph>>,
    with_excess: bool,
    opts: &ScanOptions,
    engine: &Engine,
    mut on_record: impl FnMut(&ScanRecord) -> Result<()>,
) -> Result<ReedSummary> {
    let mut summary = ReedSummary::default();
    engine.run(
        stream,
        |g| guarded(g, opts.max_order, |g| reed_record(g, invariant_report(g, with_excess))),
        |outcome| {
            match outcome {
                Outcome::Oversize { graph6, n } => {
                    summary.graphs_skipped += 1;
                    handle_oversize(opts.oversize, graph6, n, opts.max_order)?;
                }
                Outcome::Done(rec) => {
                    summary.graphs_processed += 1;
                    if rec.reed_violation {
                        let r = &rec.invariants;
                        log::warn!(
                            "VIOLATOR {} chi={} reed={} kappa_bar={}",
                            rec.graph6,
                            r.chromatic,
                            reed_bound(r),
                            r.kappa_bar
                        );
                        summary.violators.push(ReedViolator {
                            graph6: rec.graph6.clone(),
                            chromatic: r.chromatic,
                            reed_bound: reed_bound(r),
                            kappa_bar: r.kappa_bar,
                            kappa_log_ratio: rec.kappa_log_ratio,
                        });
                    }
                    on_record(&rec)?;
                }
            }
            Ok(ControlFlow::Continue(()))
        },
    )?;
    Ok(summary)
}

pub fn eps_verdict(r: &InvariantReport, eps: Rational64) -> Result<EpsVerdict> {
    let value = eps_bound(r, eps)?;
    let bound_holds = Rational64::from_integer(r.chromatic as i64) <= value;
    let threshold = prop12_threshold(r.n, eps);
    let (threshold_holds, chain_holds, ramsey_holds) = if bound_holds {
        (None, None, None)
    } else {
        (
            Some(r.kappa_bar as f64 >= threshold),
            Some(eps_chain_holds(r, eps)),
            Some(ramsey_step_holds(r)),
        )
    };
    Ok(EpsVerdict {
        eps: format_rational(eps),
        bound_value: format_rational(value),
        bound_decimal: rational_to_f64(value),
        bound_holds,
        threshold,
        threshold_holds,
        chain_holds,
        ramsey_holds,
    })
}

pub fn scan_eps_graph(g: &Graph, eps_list: &[Rational64]) -> Result<ScanRecord> {
    let r = invariant_report(g, false);
    let verdicts = eps_list
        .iter()
        .map(|&e| eps_verdict(&r, e))
        .collect::<Result<Vec<_>>>()?;
    let mut rec = reed_record(g, r);
    rec.eps_verdicts = verdicts;
    Ok(rec)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EpsTally {
    pub eps: String,
    pub bound_holds: u64,
    pub threshold_consulted: u64,
    pub threshold_holds: u64,
    pub dichotomy_failures: u64,
}

#[derive(Clone, Debug, Default)]
pub struct EpsSummary {
    pub graphs_processed: u64,
    pub graphs_skipped: u64,
    pub tallies: Vec<EpsTally>,
    /// Graphs failing both branches, or failing a step of the threshold derivation.
    pub failures: Vec<Violation>,
}

impl EpsSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, for each graph and ε, that the ε-relaxed bound holds or κ̄ reaches
/// [`prop12_threshold`].
pub fn scan_eps(
    stream: impl Iterator<Item = Result<Graph>>,
    eps_list: &[Rational64],
    opts: &ScanOptions,
    engine: &Engine,
    mut on_record: impl FnMut(&ScanRecord) -> Result<()>,
) -> Result<EpsSummary> {
    if let Some(&bad) = eps_list.iter().find(|&&e| e <= Rational64::from_integer(0)) {
        return Err(Error::NonPositiveEpsilon(format_rational(bad)));
    }
    let mut summary = EpsSummary {
        tallies: eps_list
            .iter()
            .map(|&e| EpsTally {
                eps: format_rational(e),
                bound_holds: 0,
                threshold_consulted: 0,
                threshold_holds: 0,
                dichotomy_failures: 0,
            })
            .collect(),
        ..Default::default()
    };
    engine.run(
        stream,
        |g| guarded(g, opts.max_order, |g| scan_eps_graph(g, eps_list)),
        |outcome| {
            let rec = match outcome {
                Outcome::Oversize { graph6, n } => {
                    summary.graphs_skipped += 1;
                    handle_oversize(opts.oversize, graph6, n, opts.max_order)?;
                    return Ok(ControlFlow::Continue(()));
                }
                Outcome::Done(rec) => rec?,
            };
            summary.graphs_processed += 1;
            for (tally, v) in summary.tallies.iter_mut().zip(&rec.eps_verdicts) {
                if v.bound_holds {
                    tally.bound_holds += 1;
                } else {
                    tally.threshold_consulted += 1;
                    tally.threshold_holds += (v.threshold_holds == Some(true)) as u64;
                }
                if v.dichotomy_fails() || v.derivation_fails() {
                    tally.dichotomy_failures += v.dichotomy_fails() as u64;
                    summary.failures.push(Violation {
                        graph6: rec.graph6.clone(),
                        check: if v.dichotomy_fails() {
                            "eps_dichotomy"
                        } else {
                            "eps_derivation"
                        }
                        .to_string(),
                        params: BoundParams {
                            eps: Some(v.eps.clone()),
                            ..BoundParams::none()
                        },
                        value: v.bound_value.clone(),
                        chromatic: rec.invariants.chromatic,
                    });
                }
            }
            on_record(&rec)?;
            Ok(ControlFlow::Continue(()))
        },
    )?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_labeled;

    fn eps(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    #[test]
    fn c5_is_not_a_reed_violator() {
        let rec = scan_reed_graph(&Graph::cycle(5).unwrap());
        assert!(!rec.reed_violation);
        assert_eq!(rec.evaluations[0].value, Q4::from_int(3));
        assert_eq!(rec.kappa_log_ratio, Some(2.0 / 5f64.log2()));
        assert_eq!(scan_reed_graph(&Graph::empty(1).unwrap()).kappa_log_ratio, None);
    }

    #[test]
    fn reed_scan_small_orders() {
        for n in 1..=5 {
            let s = scan_reed(
                enumerate_labeled(n).unwrap().map(Ok),
                &ScanOptions::default(),
                &Engine::new(2),
                |_| Ok(()),
            )
            .unwrap();
            assert!(s.violators.is_empty());
            assert_eq!(s.min_violator_ratio(), None);
        }
    }

    #[test]
    fn eps_on_isolated_vertices() {
        let r = invariant_report(&Graph::empty(5).unwrap(), false);
        let v = eps_verdict(&r, eps(1, 4)).unwrap();
        assert_eq!(v.bound_value, "7/4");
        assert!(v.bound_holds);
        assert_eq!(v.threshold_holds, None);
        assert!(eps_verdict(&r, eps(0, 1)).is_err());
    }

    #[test]
    fn eps_scan_small_orders() {
        let list = [eps(1, 10), eps(1, 4), eps(1, 2)];
        let s = scan_eps(
            enumerate_labeled(5).unwrap().map(Ok),
            &list,
            &ScanOptions::default(),
            &Engine::new(2),
            |rec| {
                // larger ε never holds less often
                let holds: Vec<bool> = rec.eps_verdicts.iter().map(|v| v.bound_holds).collect();
                assert!(holds.windows(2).all(|w| w[0] <= w[1]));
                Ok(())
            },
        )
        .unwrap();
        assert!(s.passed());
        assert_eq!(s.graphs_processed, 1024);
        assert_eq!(s.tallies.len(), 3);
        assert!(scan_eps(
            std::iter::empty(),
            &[eps(-1, 2)],
            &ScanOptions::default(),
            &Engine::new(1),
            |_| Ok(())
        )
        .is_err());
    }
}
