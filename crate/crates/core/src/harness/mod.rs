//! Batch engine: bound verification and scans over graph streams, with
//! input-ordered record output.

mod engine;
mod records;
mod scan;
mod source;
mod strategy;
mod verify;

pub use engine::{threads_from_env, Engine, THREADS_ENV};
pub use records::{
    kappa_log_ratio, read_jsonl, write_records, EpsVerdict, RecordFormat, RecordWriter, ScanRecord, CSV_HEADER,
};
pub use scan::{
    eps_verdict, scan_eps, scan_eps_graph, scan_invariants, scan_reed, scan_reed_graph, EpsSummary, EpsTally,
    ReedSummary, ReedViolator, ScanOptions,
};
pub use source::{read_graph6_file, GraphSource, GraphStream};
pub use strategy::{minimal_complement_cuts, subgraph_strategy, Instances, StrategyKind, EXHAUSTIVE_MAX_ORDER};
pub use verify::{
    default_guard, verify_all, verify_graph, GraphVerification, OversizePolicy, VerificationSummary, VerifyOptions,
    Violation, DEFAULT_GUARD, DEFAULT_GUARD_WITH_EXCESS,
};
