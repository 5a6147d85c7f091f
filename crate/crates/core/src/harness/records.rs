//! Per-graph scan records and their jsonl / csv serializations.
//!
//! jsonl: one [`ScanRecord`] per line, fields in declaration order.
//!
//! csv: the columns of [`CSV_HEADER`]. Bound columns hold the tightest
//! evaluation of that bound (`<id>_exact` as `p/4`, `<id>_decimal`), empty
//! when the bound was not evaluated. `eps_verdicts` packs each verdict as
//! `eps:bound_holds:threshold:threshold_holds` joined by `;`.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::{BoundEvaluation, BoundId};
use crate::error::{Error, Result};
use crate::invariants::InvariantReport;

/// Dichotomy verdict of one graph for one ε.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EpsVerdict {
    pub eps: String,
    /// `(½ + ε)ω + (Δ + 2)/2`, exact.
    pub bound_value: String,
    pub bound_decimal: f64,
    pub bound_holds: bool,
    pub threshold: f64,
    /// `κ̄ ≥ threshold`; only consulted when the bound fails.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold_holds: Option<bool>,
    /// `εω + α/4 < κ̄ + ½`; only checked when the bound fails.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain_holds: Option<bool>,
    /// `n < C(α + ω, α)`; only checked when the bound fails.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ramsey_holds: Option<bool>,
}

impl EpsVerdict {
    pub fn dichotomy_fails(&self) -> bool {
        !self.bound_holds && self.threshold_holds == Some(false)
    }

    pub fn derivation_fails(&self) -> bool {
        self.chain_holds == Some(false) || self.ramsey_holds == Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub graph6: String,
    pub invariants: InvariantReport,
    /// Tightest evaluation per bound, in bound order.
    pub evaluations: Vec<BoundEvaluation>,
    /// `χ > ⌈(ω + Δ + 1)/2⌉`.
    pub reed_violation: bool,
    /// `κ̄ / log₂ n`; absent for `n = 1`.
    pub kappa_log_ratio: Option<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub eps_verdicts: Vec<EpsVerdict>,
}

pub fn kappa_log_ratio(r: &InvariantReport) -> Option<f64> {
    (r.n >= 2).then(|| r.kappa_bar as f64 / (r.n as f64).log2())
}

impl ScanRecord {
    pub fn evaluation(&self, id: BoundId) -> Option<&BoundEvaluation> {
        self.evaluations.iter().find(|e| e.bound_id == id)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RecordFormat {
    #[default]
    Jsonl,
    Csv,
}

impl FromStr for RecordFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "jsonl" => Ok(RecordFormat::Jsonl),
            "csv" => Ok(RecordFormat::Csv),
            other => Err(format!("unknown format {other:?} (expected jsonl or csv)")),
        }
    }
}

const CSV_FIXED: [&str; 12] = [
    "graph6",
    "n",
    "max_degree",
    "chromatic",
    "clique",
    "independence",
    "kappa_bar",
    "delta_bar",
    "excess",
    "reed_bound",
    "reed_violation",
    "kappa_log_ratio",
];

/// Full csv header row.
pub static CSV_HEADER: std::sync::LazyLock<Vec<String>> = std::sync::LazyLock::new(|| {
    let mut cols: Vec<String> = CSV_FIXED.iter().map(|s| s.to_string()).collect();
    for id in BoundId::PROVEN {
        cols.push(format!("{id}_exact"));
        cols.push(format!("{id}_decimal"));
    }
    cols.push("eps_verdicts".into());
    cols
});

fn csv_row(rec: &ScanRecord) -> Vec<String> {
    let r = &rec.invariants;
    let opt = |v: Option<String>| v.unwrap_or_default();
    let mut row = vec![
        rec.graph6.clone(),
        r.n.to_string(),
        r.max_degree.to_string(),
        r.chromatic.to_string(),
        r.clique.to_string(),
        r.independence.to_string(),
        r.kappa_bar.to_string(),
        r.delta_bar.to_string(),
        opt(r.excess.map(|e| e.to_string())),
        opt(rec
            .evaluation(BoundId::Reed)
            .map(|e| e.value.to_int().unwrap_or_default().to_string())),
        rec.reed_violation.to_string(),
        opt(rec.kappa_log_ratio.map(|x| x.to_string())),
    ];
    for id in BoundId::PROVEN {
        match rec.evaluation(id) {
            Some(e) => {
                row.push(e.value.exact());
                row.push(e.value.decimal());
            }
            None => {
                row.push(String::new());
                row.push(String::new());
            }
        }
    }
    let verdicts: Vec<String> = rec
        .eps_verdicts
        .iter()
        .map(|v| {
            let th = v.threshold_holds.map_or(String::new(), |b| b.to_string());
            format!("{}:{}:{}:{}", v.eps, v.bound_holds, v.threshold, th)
        })
        .collect();
    row.push(verdicts.join(";"));
    row
}

enum Sink {
    Jsonl(Box<dyn Write + Send>),
    Csv(Box<csv::Writer<Box<dyn Write + Send>>>),
}

/// Streaming record writer; `None` path writes to stdout.
pub struct RecordWriter {
    sink: Sink,
    path: PathBuf,
}

impl RecordWriter {
    pub fn create(path: Option<&Path>, format: RecordFormat) -> Result<Self> {
        let (out, label): (Box<dyn Write + Send>, PathBuf) = match path {
            Some(p) => {
                let file = File::create(p).map_err(|e| Error::io(p, e))?;
                (Box::new(BufWriter::new(file)), p.to_path_buf())
            }
            None => (Box::new(BufWriter::new(io::stdout())), PathBuf::from("<stdout>")),
        };
        let sink = match format {
            RecordFormat::Jsonl => Sink::Jsonl(out),
            RecordFormat::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(CSV_HEADER.iter()).map_err(|e| csv_err(&label, e))?;
                Sink::Csv(Box::new(w))
            }
        };
        Ok(RecordWriter { sink, path: label })
    }

    pub fn write(&mut self, rec: &ScanRecord) -> Result<()> {
        match &mut self.sink {
            Sink::Jsonl(w) => {
                serde_json::to_writer(&mut *w, rec).map_err(|e| Error::Serialize(e.to_string()))?;
                w.write_all(b"\n").map_err(|e| Error::io(&self.path, e))
            }
            Sink::Csv(w) => w.write_record(csv_row(rec)).map_err(|e| csv_err(&self.path, e)),
        }
    }

    pub fn finish(self) -> Result<()> {
        match self.sink {
            Sink::Jsonl(mut w) => w.flush().map_err(|e| Error::io(&self.path, e)),
            Sink::Csv(mut w) => w.flush().map_err(|e| Error::io(&self.path, e)),
        }
    }
}

fn csv_err(path: &Path, e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::io(path, io),
        other => Error::Serialize(format!("{other:?}")),
    }
}

/// Writes `records` to `path`, one per line (plus a header row for csv).
pub fn write_records(records: &[ScanRecord], format: RecordFormat, path: &Path) -> Result<()> {
    let mut w = RecordWriter::create(Some(path), format)?;
    for r in records {
        w.write(r)?;
    }
    w.finish()
}

pub fn read_jsonl(path: &Path) -> Result<Vec<ScanRecord>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    BufReader::new(file)
        .lines()
        .map(|line| {
            let line = line.map_err(|e| Error::io(path, e))?;
            serde_json::from_str(&line).map_err(|e| Error::Serialize(e.to_string()))
        })
        .collect()
}
