//! Chromatic excess η(g) = max over non-empty induced H of |H| − 3χ(H).

use super::clique::independence_number;
use super::coloring::chromatic_number;
use crate::graph::{Graph, VertexSet};

/// Subsets of `0..n` of size `k`, in lexicographic order of their sorted
/// member lists.
pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = VertexSet::from_indices(idx.iter().copied());
        // advance to the next combination
        match (0..k).rev().find(|&i| idx[i] < n - k + i) {
            Some(i) => {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
            }
            None => done = true,
        }
        Some(out)
    })
}

/// η(g) with a maximizing vertex set.
///
/// Sizes are scanned from `n` down. Since χ(H) ≥ 1 the value of any `k`-set
/// is at most `k − 3`, which ends the scan once it cannot beat the best; since
/// χ(H) ≥ ⌈k/α(g)⌉ a single size is skipped when `k − 3⌈k/α⌉` cannot. The
/// scan starts from the known value α − 3 of a maximum independent set.
/// Ties go to the first set in (size descending, lexicographic) order.
pub fn chromatic_excess(g: &Graph) -> (i64, VertexSet) {
    let n = g.order();
    let (alpha, _) = independence_number(g);
    let mut best = alpha as i64 - 3;
    let mut witness: Option<VertexSet> = None;
    // A candidate must beat `best`, or tie it while no witness exists yet.
    let useless = |bound: i64, best: i64, have: bool| bound < best || (have && bound == best);

    for k in (1..=n).rev() {
        let ki = k as i64;
        if useless(ki - 3, best, witness.is_some()) {
            break;
        }
        if useless(ki - 3 * k.div_ceil(alpha) as i64, best, witness.is_some()) {
            continue;
        }
        for h in k_subsets(n, k) {
            let sub = g.induced_subgraph(h).expect("non-empty subset");
            let value = ki - 3 * chromatic_number(&sub).0 as i64;
            if value > best || (value == best && witness.is_none()) {
                best = value;
                witness = Some(h);
            }
        }
    }
    (best, witness.expect("a maximum independent set attains alpha - 3"))
}
