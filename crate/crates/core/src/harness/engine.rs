//! Worker pool that evaluates graphs concurrently and hands results back in
//! input order.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::error::Result;
use crate::graph::Graph;

/// Environment variable overriding the worker count.
pub const THREADS_ENV: &str = "CHI_LAB_THREADS";

const CHUNK: usize = 4096;

/// Worker count from `CHI_LAB_THREADS`, else the available hardware parallelism.
pub fn threads_from_env() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

pub struct Engine {
    pool: rayon::ThreadPool,
    chunk: usize,
}

impl Engine {
    pub fn new(threads: usize) -> Self {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build()
            .expect("thread pool");
        Engine { pool, chunk: CHUNK }
    }

    pub fn from_env() -> Self {
        Engine::new(threads_from_env())
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }

    /// Maps `work` over the stream in chunks, calling `sink` once per graph in
    /// input order. Stops early when `sink` breaks. Stream errors abort the run
    /// after the graphs before them have been emitted.
    pub fn run<T, W, S>(&self, stream: impl Iterator<Item = Result<Graph>>, work: W, mut sink: S) -> Result<()>
    where
        T: Send,
        W: Fn(&Graph) -> T + Sync,
        S: FnMut(T) -> Result<ControlFlow<()>>,
    {
        let mut stream = stream.fuse();
        loop {
            let mut chunk = Vec::with_capacity(self.chunk);
            let mut pending_err = None;
            for item in stream.by_ref() {
                match item {
                    Ok(g) => chunk.push(g),
                    Err(e) => {
                        pending_err = Some(e);
                        break;
                    }
                }
                if chunk.len() == self.chunk {
                    break;
                }
            }
            if chunk.is_empty() && pending_err.is_none() {
                return Ok(());
            }
            let results: Vec<T> = self.pool.install(|| chunk.par_iter().map(&work).collect());
            for r in results {
                if sink(r)?.is_break() {
                    return Ok(());
                }
            }
            if let Some(e) = pending_err {
                return Err(e);
            }
        }
    }
}
