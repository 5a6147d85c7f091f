//! Graph sources: seeded G(n, p) sampling and exhaustive labeled enumeration.

use num_rational::Rational64;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{Graph, VertexSet, MAX_ORDER};
use crate::error::{Error, Result};

/// Default largest order accepted by [`enumerate_labeled`].
pub const DEFAULT_ENUMERATION_GUARD: usize = 7;

/// Largest order whose pair count fits the 64-bit enumeration counter.
const ENUMERATION_HARD_LIMIT: usize = 11;

fn pair_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

/// Seeded Erdős–Rényi G(n, p) stream.
///
/// The generator is ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
/// `SeedableRng::seed_from_u64(seed)`. Pairs are visited in graph6 bit order
/// `(0,1), (0,2), (1,2), (0,3), ...`. With `p = a/b` in lowest terms, each pair
/// draws `x = next_u64()` repeatedly until `x < b * floor(2^64 / b)`, and the
/// pair is an edge iff `x mod b < a`. Successive graphs continue the same
/// stream, so `(n, p, seed)` pins the whole sequence.
pub struct GnpGenerator {
    pairs: Vec<(usize, usize)>,
    n: usize,
    numer: u64,
    denom: u64,
    rng: ChaCha8Rng,
}

impl GnpGenerator {
    pub fn new(n: usize, p: Rational64, seed: u64) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::UnsupportedOrder(n));
        }
        if *p.numer() < 0 || p > Rational64::from_integer(1) {
            return Err(Error::InvalidProbability(crate::rational::format_rational(p)));
        }
        Ok(GnpGenerator {
            pairs: pair_order(n),
            n,
            numer: *p.numer() as u64,
            denom: *p.denom() as u64,
            rng: ChaCha8Rng::seed_from_u64(seed),
        })
    }

    fn coin(&mut self) -> bool {
        // largest accepted draw: 2^64 - (2^64 mod b) - 1
        let zone = u64::MAX - (u64::MAX % self.denom + 1) % self.denom;
        loop {
            let x = self.rng.next_u64();
            if x <= zone {
                return x % self.denom < self.numer;
            }
        }
    }

    pub fn next_graph(&mut self) -> Graph {
        let mut g = Graph::empty(self.n).expect("order validated at construction");
        for i in 0..self.pairs.len() {
            let (u, v) = self.pairs[i];
            if self.coin() {
                g.add_edge(u, v).expect("pair in range");
            }
        }
        g
    }
}

impl Iterator for GnpGenerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        Some(self.next_graph())
    }
}

/// First graph of the [`GnpGenerator`] stream for `(n, p, seed)`.
pub fn gen_gnp(n: usize, p: Rational64, seed: u64) -> Result<Graph> {
    Ok(GnpGenerator::new(n, p, seed)?.next_graph())
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices. The `k`-th graph has
/// edge set given by the bits of `k`, bit `i` being the `i`-th pair in graph6
/// order.
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn total(&self) -> u64 {
        self.end
    }

    fn build(&self, mask: u64) -> Graph {
        let mut g = Graph::empty(self.n).expect("order validated at construction");
        for k in VertexSet::from_bits(mask) {
            let (u, v) = self.pairs[k];
            g.add_edge(u, v).expect("pair in range");
        }
        g
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = self.build(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// Labeled enumeration with the default guard of [`DEFAULT_ENUMERATION_GUARD`].
pub fn enumerate_labeled(n: usize) -> Result<LabeledGraphs> {
    enumerate_labeled_with_guard(n, DEFAULT_ENUMERATION_GUARD)
}

pub fn enumerate_labeled_with_guard(n: usize, guard: usize) -> Result<LabeledGraphs> {
    let max = guard.min(ENUMERATION_HARD_LIMIT);
    if n == 0 {
        return Err(Error::UnsupportedOrder(0));
    }
    if n > max {
        return Err(Error::EnumerationGuard { n, max });
    }
    let pairs = pair_order(n);
    Ok(LabeledGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}
