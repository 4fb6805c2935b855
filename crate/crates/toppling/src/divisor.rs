//! Laplacian, linear equivalence, q-reduced divisors and acyclic orientations.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Divisor, PointedGraph, VertexSet};
use crate::orientation::{EdgeState, PartialOrientation};

/// `Δ(f)(v) = Σ_{vw ∈ E} (f(v) − f(w))`.
pub fn laplacian_of(g: &PointedGraph, f: &[i64]) -> Divisor {
    let n = g.n();
    let mut d = Divisor::zero(n);
    for v in 0..n {
        for w in g.neighbors(v).iter() {
            d[v] += g.mult(v, w) as i64 * (f[v] - f[w]);
        }
    }
    d
}

/// `d − Δχ_A`: every vertex of `a` sends one chip along each edge leaving `a`.
pub fn fire_set(g: &PointedGraph, d: &Divisor, a: VertexSet) -> Divisor {
    fire_set_times(g, d, a, 1)
}

fn fire_set_times(g: &PointedGraph, d: &Divisor, a: VertexSet, t: i64) -> Divisor {
    let mut out = d.clone();
    let rest = g.vertices().difference(a);
    for v in a.iter() {
        out[v] -= t * g.edges_into(v, rest) as i64;
    }
    for w in rest.iter() {
        out[w] += t * g.edges_into(w, a) as i64;
    }
    out
}

/// Runs the burning algorithm from `q` and returns the unburnt vertices.
pub fn dhar_burn(g: &PointedGraph, d: &Divisor) -> Result<VertexSet> {
    check_nonnegative(g, d)?;
    Ok(burn_rounds(g, d).1)
}

fn check_nonnegative(g: &PointedGraph, d: &Divisor) -> Result<()> {
    match (0..g.n()).find(|&v| v != g.q() && d[v] < 0) {
        Some(v) => Err(Error::NegativeOffQ(v)),
        None => Ok(()),
    }
}

/// Burn round of each vertex (`q` burns in round 0) and the unburnt set.
fn burn_rounds(g: &PointedGraph, d: &Divisor) -> (Vec<usize>, VertexSet) {
    let mut round = vec![usize::MAX; g.n()];
    round[g.q()] = 0;
    let mut burnt = VertexSet::singleton(g.q());
    let mut t = 0;
    loop {
        t += 1;
        let fresh: VertexSet = g
            .boundary(burnt)
            .iter()
            .filter(|&v| d[v] < g.edges_into(v, burnt) as i64)
            .collect();
        if fresh.is_empty() {
            break;
        }
        for v in fresh.iter() {
            round[v] = t;
        }
        burnt = burnt.union(fresh);
    }
    (round, g.vertices().difference(burnt))
}

pub fn is_q_reduced(g: &PointedGraph, d: &Divisor) -> bool {
    check_nonnegative(g, d).is_ok() && burn_rounds(g, d).1.is_empty()
}

/// The unique q-reduced divisor linearly equivalent to `d`.
pub fn q_reduce(g: &PointedGraph, d: &Divisor) -> Divisor {
    let mut d = d.clone();
    let dist = g.distances();
    let far = dist.iter().copied().max().unwrap_or(0);
    // Clear debts layer by layer, farthest first, by borrowing for {dist ≥ r}.
    for r in (1..=far).rev() {
        let outer: VertexSet = (0..g.n()).filter(|&v| dist[v] >= r).collect();
        let inner = g.vertices().difference(outer);
        let mut times = 0i64;
        for v in outer.iter().filter(|&v| dist[v] == r && d[v] < 0) {
            let e = g.edges_into(v, inner) as i64;
            times = times.max((-d[v] + e - 1) / e);
        }
        if times > 0 {
            d = fire_set_times(g, &d, outer, -times);
        }
    }
    loop {
        let unburnt = burn_rounds(g, &d).1;
        if unburnt.is_empty() {
            return d;
        }
        d = fire_set(g, &d, unburnt);
    }
}

pub fn linearly_equivalent(g: &PointedGraph, d1: &Divisor, d2: &Divisor) -> bool {
    d1.degree() == d2.degree() && q_reduce(g, d1) == q_reduce(g, d2)
}

/// A class in `Pic(G)`, keyed by its q-reduced representative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PicClass {
    pub rep: Divisor,
}

impl PicClass {
    pub fn degree(&self) -> i64 {
        self.rep.degree()
    }
}

pub fn pic_class(g: &PointedGraph, d: &Divisor) -> PicClass {
    PicClass { rep: q_reduce(g, d) }
}

/// Determinant of the reduced Laplacian, by fraction-free elimination.
pub fn spanning_tree_count(g: &PointedGraph) -> u128 {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| v != g.q()).collect();
    let mut m: Vec<Vec<i128>> = keep
        .iter()
        .map(|&u| {
            keep.iter()
                .map(|&v| if u == v { g.degree(u) as i128 } else { -(g.mult(u, v) as i128) })
                .collect()
        })
        .collect();
    bareiss_det(&mut m).unsigned_abs()
}

/// Fraction-free Gaussian elimination; consumes the matrix.
pub fn bareiss_det(m: &mut [Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// All effective divisors of the given degree on `n` vertices, in lexicographic order.
pub fn effective_divisors(n: usize, degree: i64) -> Vec<Divisor> {
    fn rec(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Divisor>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(Divisor(cur.clone()));
            cur.pop();
            return;
        }
        for c in 0..=left {
            cur.push(c);
            rec(n, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if degree >= 0 && n > 0 {
        rec(n, degree, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// `|d|`: every effective divisor equivalent to `d`.
pub fn linear_system(g: &PointedGraph, d: &Divisor) -> Vec<Divisor> {
    let target = q_reduce(g, d);
    effective_divisors(g.n(), d.degree())
        .into_iter()
        .filter(|e| q_reduce(g, e) == target)
        .collect()
}

/// Total orientations without directed cycles whose only source is `q`.
pub fn acyclic_orientations_unique_source(g: &PointedGraph) -> Vec<PartialOrientation> {
    // Every such orientation is induced by an ordering starting at q in which
    // each later vertex has an earlier neighbour.
    fn rec(
        g: &PointedGraph,
        placed: VertexSet,
        level: &mut Vec<usize>,
        depth: usize,
        out: &mut BTreeSet<PartialOrientation>,
    ) {
        if placed == g.vertices() {
            out.insert(PartialOrientation::from_levels(g, level));
            return;
        }
        for v in g.boundary(placed).iter() {
            level[v] = depth;
            let mut next = placed;
            next.insert(v);
            rec(g, next, level, depth + 1, out);
        }
    }
    let mut level = vec![0; g.n()];
    let mut out = BTreeSet::new();
    rec(g, VertexSet::singleton(g.q()), &mut level, 1, &mut out);
    out.into_iter().collect()
}

/// `Σ (indeg(v) − 1)(v)` for each unique-source acyclic orientation.
pub fn maximal_reduced_divisors(g: &PointedGraph) -> Vec<Divisor> {
    let ones = Divisor::ones(g.n());
    let mut out: Vec<Divisor> = acyclic_orientations_unique_source(g)
        .iter()
        .map(|o| &o.indegree(g) - &ones)
        .collect();
    out.sort();
    out
}

/// The unique-source acyclic orientation whose burning sequence is recorded
/// by the maximal q-reduced divisor `e` (edges point from earlier to later burns).
pub fn orientation_of_maximal_reduced(g: &PointedGraph, e: &Divisor) -> Option<PartialOrientation> {
    if !is_q_reduced(g, e) {
        return None;
    }
    let (round, _) = burn_rounds(g, e);
    let o = PartialOrientation::from_levels(g, &round);
    if o.states().contains(&EdgeState::Unoriented) {
        return None;
    }
    let ones = Divisor::ones(g.n());
    if &o.indegree(g) - &ones != *e {
        return None;
    }
    Some(o)
}
