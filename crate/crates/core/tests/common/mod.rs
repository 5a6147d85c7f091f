//! Brute-force reference implementations shared by the integration tests.
//! They only use `order` and `has_edge` from the library.

#![allow(dead_code)]

use chi_lab::Graph;
use num_rational::Rational64;

pub fn adjacency_masks(g: &Graph) -> Vec<u32> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).filter(|&v| g.has_edge(u, v)).fold(0u32, |m, v| m | (1 << v)))
        .collect()
}

fn independent(adj: &[u32], s: u32) -> bool {
    (0..adj.len()).all(|v| s & (1 << v) == 0 || adj[v] & s == 0)
}

fn clique(adj: &[u32], s: u32) -> bool {
    (0..adj.len()).all(|v| s & (1 << v) == 0 || (s & !(1 << v)) & !adj[v] == 0)
}

/// χ of every induced subgraph, indexed by vertex mask. `table[0] = 0`.
///
/// χ(S) = 1 + min χ(S ∖ I) over independent I ⊆ S containing the lowest
/// vertex of S.
pub fn chromatic_table(g: &Graph) -> Vec<u8> {
    let n = g.order();
    assert!(n <= 14, "oracle is exponential");
    let adj = adjacency_masks(g);
    let full = (1u32 << n) - 1;
    let ind: Vec<bool> = (0..=full).map(|s| independent(&adj, s)).collect();
    let mut table = vec![0u8; full as usize + 1];
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut best = u8::MAX;
        // every sub-mask of `rest`, joined with `low`
        let mut sub = rest;
        loop {
            let i = sub | low;
            if ind[i as usize] {
                best = best.min(1 + table[(s ^ i) as usize]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        table[s as usize] = best;
    }
    table
}

pub fn brute_chromatic(g: &Graph) -> usize {
    let t = chromatic_table(g);
    t[t.len() - 1] as usize
}

pub fn brute_clique(g: &Graph) -> usize {
    let adj = adjacency_masks(g);
    (1u32..1 << g.order())
        .filter(|&s| clique(&adj, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_independence(g: &Graph) -> usize {
    let adj = adjacency_masks(g);
    (1u32..1 << g.order())
        .filter(|&s| independent(&adj, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Number of components of the graph induced on `keep`.
fn components(adj: &[u32], keep: u32) -> usize {
    let mut left = keep;
    let mut count = 0;
    while left != 0 {
        count += 1;
        let mut frontier = left & left.wrapping_neg();
        let mut seen = frontier;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & keep & !seen;
            seen |= new;
            frontier |= new;
        }
        left &= !seen;
    }
    count
}

/// κ by trying every vertex subset: the smallest set whose removal leaves a
/// disconnected graph, or `n − 1` for complete graphs.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.order();
    let adj = adjacency_masks(g);
    let full = (1u32 << n) - 1;
    (0..=full)
        .filter(|&s| components(&adj, full & !s) >= 2)
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(n - 1)
}

/// Whether removing `cut` from `g` leaves at least two components.
pub fn disconnects(g: &Graph, cut: &[usize]) -> bool {
    let adj = adjacency_masks(g);
    let full = (1u32 << g.order()) - 1;
    let s = cut.iter().fold(0u32, |m, &v| m | (1 << v));
    components(&adj, full & !s) >= 2
}

/// η by full enumeration of the non-empty vertex subsets.
pub fn brute_excess(g: &Graph) -> i64 {
    chromatic_table(g)
        .iter()
        .enumerate()
        .skip(1)
        .map(|(s, &chi)| (s as u32).count_ones() as i64 - 3 * chi as i64)
        .max()
        .unwrap()
}

/// Minimum over non-empty induced H of the subgraph-local bound
/// `(2ω + n + Δ + 1 + 3χ(H) − |H|) / 4`, from brute-force invariants.
pub fn brute_min_local_bound(g: &Graph) -> Rational64 {
    let n = g.order() as i64;
    let omega = brute_clique(g) as i64;
    let delta = (0..g.order())
        .map(|v| (0..g.order()).filter(|&u| g.has_edge(u, v)).count())
        .max()
        .unwrap() as i64;
    chromatic_table(g)
        .iter()
        .enumerate()
        .skip(1)
        .map(|(s, &chi)| {
            let h = (s as u32).count_ones() as i64;
            Rational64::new(2 * omega + n + delta + 1 + 3 * chi as i64 - h, 4)
        })
        .min()
        .unwrap()
}

/// Small deterministic generator for oracle inputs (splitmix64).
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, k: u64) -> u64 {
        self.next() % k
    }

    /// Random graph on `n` vertices with edge density drawn from {1/5, 2/5, 3/5, 4/5}.
    pub fn graph(&mut self, n: usize) -> Graph {
        let density = 1 + self.below(4);
        let mut g = Graph::empty(n).unwrap();
        for v in 1..n {
            for u in 0..v {
                if self.below(5) < density {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }
}
