//! Flag-class counts by exhaustive labelling.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::{PointedGraph, VertexSet};
use crate::orientation::EdgeState;

/// Number of equivalence classes of connected `k`-flags, found by trying every
/// assignment of part labels `0..k` to the vertices.
pub fn brute_force_class_count(g: &PointedGraph, k: usize) -> usize {
    let n = g.n();
    if k == 0 || k > n {
        return 0;
    }
    let pairs = g.adjacent_pairs();
    let mut seen: BTreeSet<Vec<EdgeState>> = BTreeSet::new();
    let mut label = alloc::vec![0usize; n];
    let total = k.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        for l in label.iter_mut() {
            *l = c % k;
            c /= k;
        }
        if label[g.q()] != 0 {
            continue;
        }
        let mut ok = true;
        let mut prefix = VertexSet::EMPTY;
        for p in 0..k {
            let part: VertexSet = (0..n).filter(|&v| label[v] == p).collect();
            prefix = prefix.union(part);
            if !g.is_connected_set(part) || !g.is_connected_set(prefix) {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        let states = pairs
            .iter()
            .map(|&(u, v)| match label[u].cmp(&label[v]) {
                core::cmp::Ordering::Less => EdgeState::Forward,
                core::cmp::Ordering::Greater => EdgeState::Backward,
                core::cmp::Ordering::Equal => EdgeState::Unoriented,
            })
            .collect();
        seen.insert(states);
    }
    seen.len()
}
