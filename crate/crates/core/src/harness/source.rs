use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::{enumerate_labeled_with_guard, parse_graph6, Graph};

pub type GraphStream = Box<dyn Iterator<Item = Result<Graph>> + Send>;

/// Where a batch run reads its graphs from.
#[derive(Clone, Debug)]
pub enum GraphSource {
    /// graph6 file, one graph per line; blank lines and `>>` header lines are skipped.
    File(PathBuf),
    /// All labeled graphs on `n` vertices, refusing orders above `guard`.
    Enumerate {
        n: usize,
        guard: usize,
    },
    Graphs(Vec<Graph>),
}

impl GraphSource {
    pub fn open(&self) -> Result<GraphStream> {
        match self {
            GraphSource::File(path) => read_graph6_file(path),
            GraphSource::Enumerate { n, guard } => Ok(Box::new(enumerate_labeled_with_guard(*n, *guard)?.map(Ok))),
            GraphSource::Graphs(graphs) => Ok(Box::new(graphs.clone().into_iter().map(Ok))),
        }
    }
}

pub fn read_graph6_file(path: &Path) -> Result<GraphStream> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let path = path.to_path_buf();
    let lines = BufReader::new(file).lines().enumerate();
    Ok(Box::new(lines.filter_map(move |(i, line)| {
        let line = match line {
            Ok(line) => line,
            Err(e) => return Some(Err(Error::io(&path, e))),
        };
        if line.trim().is_empty() || line.starts_with(">>") {
            return None;
        }
        Some(parse_graph6(&line).map_err(|e| Error::Input {
            path: path.clone(),
            line: i + 1,
            source: Box::new(e),
        }))
    })))
}
