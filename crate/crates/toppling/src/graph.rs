//! Pointed multigraphs, vertex sets, divisors and the variable order.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Index, IndexMut, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// Largest supported vertex count (vertex sets are bitmasks).
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices stored as a bitmask.
///
/// `Ord` is the fixed subset order used by the flag order: larger sets come
/// first, equal sizes compare lexicographically on their sorted members.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn full(n: usize) -> Self {
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in increasing order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// All nonempty subsets of `self`.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, cur: self.0, done: self.0 == 0 }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        other.len().cmp(&self.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

pub struct Subsets {
    mask: u64,
    cur: u64,
    done: bool,
}

impl Iterator for Subsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = self.cur;
        self.cur = (self.cur.wrapping_sub(1)) & self.mask;
        if self.cur == 0 {
            self.done = true;
        }
        Some(VertexSet(out))
    }
}

/// Integer vector on the vertices: a divisor, a monomial exponent or a multidegree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Divisor(pub Vec<i64>);

impl Divisor {
    pub fn zero(n: usize) -> Self {
        Divisor(vec![0; n])
    }

    pub fn ones(n: usize) -> Self {
        Divisor(vec![1; n])
    }

    /// `c·(v)`.
    pub fn point(n: usize, v: usize, c: i64) -> Self {
        let mut d = Divisor::zero(n);
        d.0[v] = c;
        d
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> VertexSet {
        self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(v, _)| v).collect()
    }

    /// Coefficientwise maximum.
    pub fn pointwise_max(&self, other: &Divisor) -> Divisor {
        Divisor(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Coefficientwise `self ≤ other`.
    pub fn le(&self, other: &Divisor) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl Index<usize> for Divisor {
    type Output = i64;
    fn index(&self, v: usize) -> &i64 {
        &self.0[v]
    }
}

impl IndexMut<usize> for Divisor {
    fn index_mut(&mut self, v: usize) -> &mut i64 {
        &mut self.0[v]
    }
}

impl Add<&Divisor> for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        Divisor(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Divisor> for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        Divisor(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl AddAssign<&Divisor> for Divisor {
    fn add_assign(&mut self, rhs: &Divisor) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Divisor> for Divisor {
    fn sub_assign(&mut self, rhs: &Divisor) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for &Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        Divisor(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", c)?;
        }
        Ok(())
    }
}

/// Finite connected loopless multigraph with a distinguished vertex `q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointedGraph {
    n: usize,
    q: usize,
    mult: Vec<u32>,
    nbrs: Vec<VertexSet>,
}

impl PointedGraph {
    /// Builds and validates a graph from 0-based edge triples; repeated
    /// pairs accumulate.
    pub fn new(n: usize, edges: &[(usize, usize, u32)], q: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        if q >= n {
            return Err(Error::BadVertex(q));
        }
        let mut mult = vec![0u32; n * n];
        for &(u, v, m) in edges {
            if u >= n {
                return Err(Error::BadVertex(u));
            }
            if v >= n {
                return Err(Error::BadVertex(v));
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if m == 0 {
                return Err(Error::ZeroMultiplicity(u, v));
            }
            mult[u * n + v] += m;
            mult[v * n + u] += m;
        }
        let nbrs = (0..n)
            .map(|u| (0..n).filter(|&v| mult[u * n + v] > 0).collect())
            .collect();
        let g = PointedGraph { n, q, mult, nbrs };
        if !g.is_connected_set(VertexSet::full(n)) {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// The same graph pointed at another vertex.
    pub fn with_q(&self, q: usize) -> Result<Self> {
        if q >= self.n {
            return Err(Error::BadVertex(q));
        }
        let mut g = self.clone();
        g.q = q;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn mult(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> u64 {
        (0..self.n).map(|w| self.mult(v, w) as u64).sum()
    }

    /// Number of edges `m`, counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        (0..self.n).map(|v| self.degree(v)).sum::<u64>() / 2
    }

    /// Genus `m − n + 1`.
    pub fn genus(&self) -> i64 {
        self.edge_count() as i64 - self.n as i64 + 1
    }

    /// Unordered adjacent pairs `(u, v)` with `u < v`, sorted.
    pub fn adjacent_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.mult(u, v) > 0 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edge list `(u, v, mult)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        self.adjacent_pairs().into_iter().map(|(u, v)| (u, v, self.mult(u, v))).collect()
    }

    /// Connectivity of the induced subgraph; the empty set counts as disconnected.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        let Some(start) = s.first() else { return false };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.nbrs[v]);
            }
            next = next.intersection(s).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen == s
    }

    pub fn induced_connected(&self, s: VertexSet) -> Result<bool> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(self.is_connected_set(s))
    }

    /// Vertices outside `s` adjacent to some member of `s`.
    pub fn boundary(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in s.iter() {
            out = out.union(self.nbrs[v]);
        }
        out.difference(s)
    }

    /// Number of edges from `v` into `b`.
    pub fn edges_into(&self, v: usize, b: VertexSet) -> u64 {
        b.iter().map(|w| self.mult(v, w) as u64).sum()
    }

    /// `d(A, B)` without the overlap check.
    pub fn d(&self, a: VertexSet, b: VertexSet) -> u64 {
        a.iter().map(|v| self.edges_into(v, b)).sum()
    }

    /// `D(A, B)` without the overlap check.
    pub fn dd(&self, a: VertexSet, b: VertexSet) -> Divisor {
        let mut out = Divisor::zero(self.n);
        for v in a.iter() {
            out[v] = self.edges_into(v, b) as i64;
        }
        out
    }

    /// `D(A, B)`: each `v ∈ A` gets the number of edges from `v` into `B`.
    pub fn boundary_divisor(&self, a: VertexSet, b: VertexSet) -> Result<Divisor> {
        if !a.is_disjoint(b) {
            return Err(Error::Overlap);
        }
        Ok(self.dd(a, b))
    }

    pub fn edge_count_between(&self, a: VertexSet, b: VertexSet) -> Result<u64> {
        if !a.is_disjoint(b) {
            return Err(Error::Overlap);
        }
        Ok(self.d(a, b))
    }

    /// BFS distances from `q`.
    pub fn distances(&self) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[self.q] = 0;
        let mut queue = VecDeque::from([self.q]);
        while let Some(v) = queue.pop_front() {
            for w in self.nbrs[v].iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn term_order(&self) -> TermOrder {
        bfs_term_order(self)
    }
}

/// Degree reverse lexicographic order on monomials in `x_0 .. x_{n-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TermOrder {
    /// `priority[r]` is the variable of rank `r`; rank 0 is the smallest variable.
    pub priority: Vec<usize>,
}

impl TermOrder {
    pub fn new(priority: Vec<usize>) -> Self {
        TermOrder { priority }
    }

    pub fn rank(&self, v: usize) -> usize {
        self.priority.iter().position(|&w| w == v).expect("variable in order")
    }

    /// Compares exponent vectors.
    pub fn cmp<T: Copy + Ord + Into<i64>>(&self, a: &[T], b: &[T]) -> Ordering {
        let da: i64 = a.iter().map(|&c| c.into()).sum();
        let db: i64 = b.iter().map(|&c| c.into()).sum();
        da.cmp(&db).then_with(|| {
            for &v in &self.priority {
                if a[v] != b[v] {
                    return b[v].cmp(&a[v]);
                }
            }
            Ordering::Equal
        })
    }
}

/// Variables ranked by BFS distance from `q`, ties by vertex index.
pub fn bfs_term_order(g: &PointedGraph) -> TermOrder {
    let dist = g.distances();
    let mut priority: Vec<usize> = (0..g.n()).collect();
    priority.sort_by_key(|&v| (dist[v], v));
    TermOrder { priority }
}
