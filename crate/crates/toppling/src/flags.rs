//! Connected flags, their order and equivalence, and the minimal representatives `S_k`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{Divisor, PointedGraph, VertexSet};
use crate::orientation::{EdgeState, PartialOrientation};

/// A chain `U_1 ⊊ U_2 ⊊ … ⊊ U_k = V` with `q ∈ U_1`, connected prefixes and
/// connected parts `A_ℓ = U_ℓ \ U_{ℓ−1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ConnectedFlag {
    chain: Vec<VertexSet>,
}

impl ConnectedFlag {
    /// Validates a chain (the clauses are checked in order).
    pub fn new(g: &PointedGraph, chain: Vec<VertexSet>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::BadK(0));
        }
        if !chain[0].contains(g.q()) {
            return Err(Error::MissingQ);
        }
        for i in 1..chain.len() {
            if !(chain[i - 1].is_subset(chain[i]) && chain[i - 1] != chain[i]) {
                return Err(Error::NotIncreasing(i + 1));
            }
        }
        if *chain.last().unwrap() != g.vertices() {
            return Err(Error::LastNotV);
        }
        let mut prev = VertexSet::EMPTY;
        for (i, &u) in chain.iter().enumerate() {
            if !g.is_connected_set(u.difference(prev)) {
                return Err(Error::PartDisconnected(i + 1));
            }
            if !g.is_connected_set(u) {
                return Err(Error::PrefixDisconnected(i + 1));
            }
            prev = u;
        }
        Ok(ConnectedFlag { chain })
    }

    /// The flag whose parts are `parts` in order.
    pub(crate) fn from_parts_unchecked(parts: &[VertexSet]) -> Self {
        let mut acc = VertexSet::EMPTY;
        let chain = parts
            .iter()
            .map(|&p| {
                acc = acc.union(p);
                acc
            })
            .collect();
        ConnectedFlag { chain }
    }

    /// The 1-flag `V`.
    pub fn trivial(g: &PointedGraph) -> Self {
        ConnectedFlag { chain: vec![g.vertices()] }
    }

    pub fn k(&self) -> usize {
        self.chain.len()
    }

    pub fn chain(&self) -> &[VertexSet] {
        &self.chain
    }

    /// Parts `A_1, …, A_k`.
    pub fn parts(&self) -> Vec<VertexSet> {
        let mut prev = VertexSet::EMPTY;
        self.chain
            .iter()
            .map(|&u| {
                let a = u.difference(prev);
                prev = u;
                a
            })
            .collect()
    }

    /// 0-based part index of each vertex.
    pub fn part_index(&self, n: usize) -> Vec<usize> {
        let mut idx = vec![0; n];
        for (i, a) in self.parts().iter().enumerate() {
            for v in a.iter() {
                idx[v] = i;
            }
        }
        idx
    }

    /// `G(U)`: edges between parts point from the lower part to the higher one.
    pub fn orientation(&self, g: &PointedGraph) -> PartialOrientation {
        PartialOrientation::from_levels(g, &self.part_index(g.n()))
    }

    /// `D(U) = Σ D(U_{i+1} \ U_i, U_i)`.
    pub fn divisor(&self, g: &PointedGraph) -> Divisor {
        let mut d = Divisor::zero(g.n());
        for w in self.chain.windows(2) {
            d += &g.dd(w[1].difference(w[0]), w[0]);
        }
        d
    }

    /// `D(U_2 \ U_1, U_1)`, the exponent of the leading term.
    pub fn leading_divisor(&self, g: &PointedGraph) -> Result<Divisor> {
        if self.k() < 2 {
            return Err(Error::TooShort);
        }
        Ok(g.dd(self.chain[1].difference(self.chain[0]), self.chain[0]))
    }

    /// `U^(1)`: `U_2 ⊊ U_3 ⊊ …`.
    pub fn drop_first(&self) -> Result<Self> {
        if self.k() < 2 {
            return Err(Error::TooShort);
        }
        Ok(ConnectedFlag { chain: self.chain[1..].to_vec() })
    }

    /// `U^(2)`: `U_1 ⊊ U_3 ⊊ …` when `U_3 \ U_1` is connected, otherwise
    /// `U_1 ∪ (U_3 \ U_2) ⊊ U_3 ⊊ …`.
    pub fn drop_second(&self, g: &PointedGraph) -> Result<Self> {
        if self.k() < 3 {
            return Err(Error::TooShort);
        }
        let (u1, u2, u3) = (self.chain[0], self.chain[1], self.chain[2]);
        let first = if g.is_connected_set(u3.difference(u1)) { u1 } else { u1.union(u3.difference(u2)) };
        let mut chain = vec![first];
        chain.extend_from_slice(&self.chain[2..]);
        Ok(ConnectedFlag { chain })
    }

    /// Key identifying the equivalence class: the edge states of `G(U)`.
    pub fn fingerprint(&self, g: &PointedGraph) -> Vec<EdgeState> {
        self.orientation(g).states().to_vec()
    }
}

/// `≺_k`: the flags are compared at the largest index where they differ.
impl Ord for ConnectedFlag {
    fn cmp(&self, other: &Self) -> Ordering {
        self.k().cmp(&other.k()).then_with(|| {
            for (a, b) in self.chain.iter().zip(&other.chain).rev() {
                if a != b {
                    return a.cmp(b);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for ConnectedFlag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ConnectedFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, u) in self.chain.iter().enumerate() {
            if i > 0 {
                f.write_str(" < ")?;
            }
            write!(f, "{}", u)?;
        }
        Ok(())
    }
}

pub fn validate_flag(g: &PointedGraph, chain: Vec<VertexSet>) -> Result<ConnectedFlag> {
    ConnectedFlag::new(g, chain)
}

pub fn flag_less(u: &ConnectedFlag, v: &ConnectedFlag) -> Result<bool> {
    if u.k() != v.k() {
        return Err(Error::LengthMismatch);
    }
    Ok(u < v)
}

pub fn flags_equivalent(g: &PointedGraph, u: &ConnectedFlag, v: &ConnectedFlag) -> Result<bool> {
    if u.k() != v.k() {
        return Err(Error::LengthMismatch);
    }
    Ok(u.orientation(g) == v.orientation(g))
}

/// Every connected k-flag, grown part by part.
pub fn all_connected_flags(g: &PointedGraph, k: usize) -> Result<Vec<ConnectedFlag>> {
    if k == 0 || k > g.n() {
        return Err(Error::BadK(k));
    }
    fn grow(g: &PointedGraph, k: usize, chain: &mut Vec<VertexSet>, out: &mut Vec<ConnectedFlag>) {
        let u = *chain.last().unwrap();
        let rest = g.vertices().difference(u);
        let left = k - chain.len();
        if left == 1 {
            if g.is_connected_set(rest) {
                chain.push(g.vertices());
                out.push(ConnectedFlag { chain: chain.clone() });
                chain.pop();
            }
            return;
        }
        let touching = g.boundary(u);
        for a in rest.subsets() {
            if a.len() + left - 1 > rest.len() || a.is_disjoint(touching) || !g.is_connected_set(a) {
                continue;
            }
            chain.push(u.union(a));
            grow(g, k, chain, out);
            chain.pop();
        }
    }
    let mut out = Vec::new();
    if k == 1 {
        out.push(ConnectedFlag::trivial(g));
        return Ok(out);
    }
    let others = g.vertices().difference(VertexSet::singleton(g.q()));
    for s in others.subsets().chain(core::iter::once(VertexSet::EMPTY)) {
        let u1 = s.union(VertexSet::singleton(g.q()));
        if g.n() - u1.len() < k - 1 || !g.is_connected_set(u1) {
            continue;
        }
        let mut chain = vec![u1];
        grow(g, k, &mut chain, &mut out);
    }
    Ok(out)
}

/// `S_k(G, q)` sorted by `≺_k`, with a lookup from orientation to position.
#[derive(Clone, Debug)]
pub struct FlagBasis {
    k: usize,
    flags: Vec<ConnectedFlag>,
    index: BTreeMap<Vec<EdgeState>, usize>,
}

impl FlagBasis {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn flags(&self) -> &[ConnectedFlag] {
        &self.flags
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn get(&self, i: usize) -> &ConnectedFlag {
        &self.flags[i]
    }

    /// Position of the class with this orientation.
    pub fn position_of_states(&self, states: &[EdgeState]) -> Option<usize> {
        self.index.get(states).copied()
    }

    /// Position of the class containing `uc`.
    pub fn class_of(&self, g: &PointedGraph, uc: &ConnectedFlag) -> Option<usize> {
        self.position_of_states(&uc.fingerprint(g))
    }

    /// Position of `uc` itself, if it is a stored representative.
    pub fn position(&self, g: &PointedGraph, uc: &ConnectedFlag) -> Option<usize> {
        self.class_of(g, uc).filter(|&i| self.flags[i] == *uc)
    }
}

/// `S_k(G, q)`: the `≺_k`-minimal flag of each equivalence class.
pub fn enumerate_minimal_flags(g: &PointedGraph, k: usize) -> Result<FlagBasis> {
    let mut best: BTreeMap<Vec<EdgeState>, ConnectedFlag> = BTreeMap::new();
    for f in all_connected_flags(g, k)? {
        let key = f.fingerprint(g);
        match best.get_mut(&key) {
            Some(cur) if f < *cur => *cur = f,
            Some(_) => {}
            None => {
                best.insert(key, f);
            }
        }
    }
    let mut flags: Vec<ConnectedFlag> = best.into_values().collect();
    flags.sort();
    let index = flags.iter().enumerate().map(|(i, f)| (f.fingerprint(g), i)).collect();
    Ok(FlagBasis { k, flags, index })
}

/// `max(D(W_2 \ W_1, W_1), D(V_2 \ V_1, V_1))`.
pub fn kappa(g: &PointedGraph, w: &ConnectedFlag, v: &ConnectedFlag) -> Result<Divisor> {
    check_tails(w, v)?;
    Ok(w.leading_divisor(g)?.pointwise_max(&v.leading_divisor(g)?))
}

/// The second expression for `kappa`:
/// `max(D(W_2 \ (W_1 ∪ V_1), W_1), D(W_2 \ (W_1 ∪ V_1), V_1)) + D(V_1 \ W_1, W_1) + D(W_1 \ V_1, V_1)`.
pub fn kappa_alternate(g: &PointedGraph, w: &ConnectedFlag, v: &ConnectedFlag) -> Result<Divisor> {
    check_tails(w, v)?;
    let (w1, v1, w2) = (w.chain[0], v.chain[0], w.chain[1]);
    let outside = w2.difference(w1.union(v1));
    let m = g.dd(outside, w1).pointwise_max(&g.dd(outside, v1));
    Ok(&(&m + &g.dd(v1.difference(w1), w1)) + &g.dd(w1.difference(v1), v1))
}

fn check_tails(w: &ConnectedFlag, v: &ConnectedFlag) -> Result<()> {
    if w.k() != v.k() {
        return Err(Error::LengthMismatch);
    }
    if w.k() < 2 {
        return Err(Error::TooShort);
    }
    if w.chain[1..] != v.chain[1..] {
        return Err(Error::TailMismatch);
    }
    Ok(())
}

/// Graph whose vertices are the given parts; `mult(p, p') = d(A_p, A_p')`,
/// pointed at the part containing `q`.
pub fn quotient_graph(g: &PointedGraph, parts: &[VertexSet]) -> PointedGraph {
    let mut edges = Vec::new();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let m = g.d(parts[i], parts[j]);
            if m > 0 {
                edges.push((i, j, m as u32));
            }
        }
    }
    let q = parts.iter().position(|p| p.contains(g.q())).expect("q lies in some part");
    PointedGraph::new(parts.len(), &edges, q).expect("quotient of a connected graph by connected parts")
}

/// `G_/U` and the map sending each vertex to its part.
pub fn contract(g: &PointedGraph, uc: &ConnectedFlag) -> (PointedGraph, Vec<usize>) {
    (quotient_graph(g, &uc.parts()), uc.part_index(g.n()))
}

/// `φ_*`: sums coefficients over the fibres of `map`.
pub fn pushforward_divisor(map: &[usize], target_n: usize, d: &Divisor) -> Divisor {
    let mut out = Divisor::zero(target_n);
    for (v, &u) in map.iter().enumerate() {
        out[u] += d[v];
    }
    out
}

/// Preimage of a flag on `G_/U` along the contraction map.
pub fn pullback_flag(g: &PointedGraph, map: &[usize], vc: &ConnectedFlag) -> Result<ConnectedFlag> {
    let chain = vc
        .chain
        .iter()
        .map(|s| (0..g.n()).filter(|&v| s.contains(map[v])).collect())
        .collect();
    ConnectedFlag::new(g, chain).map_err(|_| Error::NotAFlag)
}

/// `o_j(U)`: `G(U)` with the cuts around `A_1, …, A_j` reversed in turn.
pub fn reversal_orientation(g: &PointedGraph, uc: &ConnectedFlag, j: usize) -> Result<PartialOrientation> {
    if j > uc.k() {
        return Err(Error::BadPartIndex(j));
    }
    let mut o = uc.orientation(g);
    for a in uc.parts().iter().take(j) {
        o.reverse_cut(*a);
    }
    Ok(o)
}
