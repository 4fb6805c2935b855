//! Merging adjacent parts of a flag: the sets `I(U) ⊆ B(U)`, signs and exponents.

use alloc::vec::Vec;

use crate::divisor::{orientation_of_maximal_reduced, q_reduce};
use crate::error::{Error, Result};
use crate::flags::{enumerate_minimal_flags, quotient_graph, reversal_orientation, ConnectedFlag, FlagBasis};
use crate::graph::{Divisor, PointedGraph, VertexSet};
use crate::orientation::{EdgeState, PartialOrientation};

/// One summand `ε(U,W)·x^{θ(U,W)}·[W]` of the differential.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MergeTerm {
    /// 1-based part indices: the merge is `Merge(·; A_i, A_j)`.
    pub i: usize,
    pub j: usize,
    /// 0 for `G(U)`, otherwise the `j` of `o_j(U)`.
    pub frame: usize,
    /// Position of `W` in `S_{k−1}`.
    pub target: usize,
    pub sign: i8,
    /// `θ(U, W) = D(A_j, A_i)`.
    pub theta: Divisor,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MergeSets {
    /// Merges in `G(U)`.
    pub i_set: Vec<MergeTerm>,
    /// `I(U)` followed by the merges in `o_1(U), o_2(U), …`.
    pub b_set: Vec<MergeTerm>,
}

/// Parity of the number of inversions, as `±1`.
pub fn permutation_sign(seq: &[usize]) -> i8 {
    let mut inv = 0usize;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            if seq[a] > seq[b] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `I(U)` and `B(U)` for `uc ∈ S_k` (`k ≥ 2`), each merge identified with its
/// representative in `lower = S_{k−1}`.
pub fn merge_sets_in(g: &PointedGraph, uc: &ConnectedFlag, lower: &FlagBasis) -> Result<MergeSets> {
    let k = uc.k();
    if k < 2 {
        return Err(Error::TooShort);
    }
    if lower.k() + 1 != k {
        return Err(Error::BadK(lower.k()));
    }
    let parts = uc.parts();
    let mut out = MergeSets::default();
    for a in 0..k {
        for b in a + 1..k {
            if g.d(parts[a], parts[b]) == 0 {
                continue;
            }
            let mut o = uc.orientation(g);
            o.unorient_between(parts[a], parts[b]);
            if let Some(t) = merge_term(g, &parts, &o, a, b, 0, lower)? {
                out.i_set.push(t);
            }
        }
    }
    out.b_set = out.i_set.clone();
    for j in 0..k {
        let frame = reversal_orientation(g, uc, j + 1)?;
        for i in j + 1..k {
            if g.d(parts[i], parts[j]) == 0 {
                continue;
            }
            let mut o = frame.clone();
            o.unorient_between(parts[i], parts[j]);
            if let Some(t) = merge_term(g, &parts, &o, i, j, j + 1, lower)? {
                out.b_set.push(t);
            }
        }
    }
    Ok(out)
}

/// Same as [`merge_sets_in`], enumerating `S_{k−1}` on the fly.
pub fn merge_sets(g: &PointedGraph, uc: &ConnectedFlag) -> Result<MergeSets> {
    if uc.k() < 2 {
        return Err(Error::TooShort);
    }
    let lower = enumerate_minimal_flags(g, uc.k() - 1)?;
    merge_sets_in(g, uc, &lower)
}

/// The term for merging parts `i` and `j` (0-based) of `parts` in the
/// orientation `o`, in which the pair is already unoriented; `None` when `o`
/// has a directed cycle.
fn merge_term(
    g: &PointedGraph,
    parts: &[VertexSet],
    o: &PartialOrientation,
    i: usize,
    j: usize,
    frame: usize,
    lower: &FlagBasis,
) -> Result<Option<MergeTerm>> {
    if !o.is_acyclic(g.n()) {
        return Ok(None);
    }
    let merged = parts[i].union(parts[j]);
    // α(W): the merged part first, the remaining parts in their order in U.
    let mut new_parts = Vec::with_capacity(parts.len() - 1);
    new_parts.push(merged);
    new_parts.extend(parts.iter().enumerate().filter(|&(p, _)| p != i && p != j).map(|(_, &a)| a));
    let w = realign(g, &new_parts, o)?;
    let target = lower.class_of(g, &w).ok_or(Error::NotMinimalRep)?;
    let rep_parts = lower.get(target).parts();
    let alpha_w: Vec<usize> = new_parts
        .iter()
        .map(|a| rep_parts.iter().position(|b| b == a).ok_or(Error::NotMergedFrom))
        .collect::<Result<_>>()?;
    let mut alpha_u = Vec::with_capacity(parts.len());
    alpha_u.push(i);
    alpha_u.push(j);
    alpha_u.extend((0..parts.len()).filter(|&p| p != i && p != j));
    let sign = permutation_sign(&alpha_u) * permutation_sign(&alpha_w);
    Ok(Some(MergeTerm { i: i + 1, j: j + 1, frame, target, sign, theta: g.dd(parts[j], parts[i]) }))
}

/// A flag with the given parts whose orientation is equivalent to `o` (an
/// acyclic orientation that is constant on the parts) and has its unique
/// source at the part of `q`.
///
/// The contracted orientation is read as the divisor `indeg − 𝟙` on the quotient
/// graph; its q-reduction is the maximal reduced divisor of the equivalent
/// unique-source orientation, recovered by burning.
fn realign(g: &PointedGraph, parts: &[VertexSet], o: &PartialOrientation) -> Result<ConnectedFlag> {
    let h = quotient_graph(g, parts);
    let mut owner = alloc::vec![0usize; g.n()];
    for (p, a) in parts.iter().enumerate() {
        for v in a.iter() {
            owner[v] = p;
        }
    }
    let mut indeg = Divisor::zero(h.n());
    for (&(u, v), s) in o.pairs().iter().zip(o.states()) {
        let m = g.mult(u, v) as i64;
        match s {
            EdgeState::Forward => indeg[owner[v]] += m,
            EdgeState::Backward => indeg[owner[u]] += m,
            EdgeState::Unoriented => {
                if owner[u] != owner[v] {
                    return Err(Error::NotMergedFrom);
                }
            }
        }
    }
    let e = q_reduce(&h, &(&indeg - &Divisor::ones(h.n())));
    let oh = orientation_of_maximal_reduced(&h, &e).ok_or(Error::NotMergedFrom)?;
    // Topological order of the quotient orientation.
    let mut order: Vec<usize> = Vec::with_capacity(h.n());
    let mut placed = VertexSet::EMPTY;
    while order.len() < h.n() {
        let next = (0..h.n())
            .filter(|&p| !placed.contains(p))
            .find(|&p| {
                h.neighbors(p)
                    .iter()
                    .all(|r| placed.contains(r) || oh.state(r, p) != Some(EdgeState::Forward))
            })
            .ok_or(Error::NotMergedFrom)?;
        order.push(next);
        placed.insert(next);
    }
    let ordered: Vec<VertexSet> = order.iter().map(|&p| parts[p]).collect();
    Ok(ConnectedFlag::from_parts_unchecked(&ordered))
}

/// `ε(U, W)` for the first summand of `B(U)` landing on `wc`.
pub fn incidence_sign(g: &PointedGraph, uc: &ConnectedFlag, wc: &ConnectedFlag) -> Result<i8> {
    find_term(g, uc, wc).map(|t| t.sign)
}

/// `θ(U, W)` for the first summand of `B(U)` landing on `wc`.
pub fn theta(g: &PointedGraph, uc: &ConnectedFlag, wc: &ConnectedFlag) -> Result<Divisor> {
    find_term(g, uc, wc).map(|t| t.theta)
}

fn find_term(g: &PointedGraph, uc: &ConnectedFlag, wc: &ConnectedFlag) -> Result<MergeTerm> {
    if uc.k() < 2 || wc.k() + 1 != uc.k() {
        return Err(Error::NotMergedFrom);
    }
    let lower = enumerate_minimal_flags(g, wc.k())?;
    let pos = lower.position(g, wc).ok_or(Error::NotMinimalRep)?;
    merge_sets_in(g, uc, &lower)?
        .b_set
        .into_iter()
        .find(|t| t.target == pos)
        .ok_or(Error::NotMergedFrom)
}
