#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toppling::{Divisor, PointedGraph, VertexSet};

pub fn graph(n: usize, edges: &[(usize, usize, u32)]) -> PointedGraph {
    PointedGraph::new(n, edges, 0).unwrap()
}

pub fn c4() -> PointedGraph {
    graph(4, &[(0, 1, 1), (0, 2, 1), (1, 3, 1), (2, 3, 1)])
}

pub fn cycle(n: usize) -> PointedGraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
    graph(n, &edges)
}

pub fn complete(n: usize) -> PointedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, 1));
        }
    }
    graph(n, &edges)
}

pub fn path(n: usize) -> PointedGraph {
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1, 1)).collect();
    graph(n, &edges)
}

pub fn theta(m: u32) -> PointedGraph {
    graph(2, &[(0, 1, m)])
}

pub fn set(v: &[usize]) -> VertexSet {
    v.iter().map(|x| x - 1).collect()
}

/// Connected multigraphs with `n ∈ 2..=6` and `m ≤ 10` edges: a random
/// spanning tree plus random extra edges, parallel edges allowed.
pub fn random_graphs(count: usize, seed: u64) -> Vec<PointedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=6);
            let m = rng.gen_range(n - 1..=10);
            let mut edges = Vec::new();
            for v in 1..n {
                edges.push((rng.gen_range(0..v), v, 1));
            }
            while edges.len() < m {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v {
                    edges.push((u, v, 1));
                }
            }
            let q = rng.gen_range(0..n);
            PointedGraph::new(n, &edges, q).unwrap()
        })
        .collect()
}

/// Acyclic orientations whose only source is `q`, by trying all `2^pairs`
/// orientations of the adjacent pairs.
pub fn brute_unique_source_orientations(g: &PointedGraph) -> usize {
    let pairs = g.adjacent_pairs();
    let n = g.n();
    let mut count = 0;
    for mask in 0u64..(1 << pairs.len()) {
        let mut indeg = vec![0usize; n];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            let (a, b) = if mask >> i & 1 == 0 { (u, v) } else { (v, u) };
            out[a].push(b);
            indeg[b] += 1;
        }
        let sources: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        if sources != [g.q()] {
            continue;
        }
        let mut stack = sources;
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if seen == n {
            count += 1;
        }
    }
    count
}

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i128>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect()).collect();
            let s = if c % 2 == 0 { 1 } else { -1 };
            s * m[0][c] * det(&minor)
        })
        .sum()
}

/// Linear-equivalence test through the lattice: `d ~ 0` iff the reduced
/// Laplacian solves `L x = d` over the integers, i.e. `adj(L)·d ≡ 0 (mod det L)`.
pub struct LatticeTest {
    keep: Vec<usize>,
    adj: Vec<Vec<i128>>,
    det: i128,
}

impl LatticeTest {
    pub fn new(g: &PointedGraph) -> Self {
        let keep: Vec<usize> = (0..g.n()).filter(|&v| v != g.q()).collect();
        let l: Vec<Vec<i128>> = keep
            .iter()
            .map(|&u| {
                keep.iter()
                    .map(|&v| if u == v { g.degree(u) as i128 } else { -(g.mult(u, v) as i128) })
                    .collect()
            })
            .collect();
        let k = keep.len();
        let mut adj = vec![vec![0i128; k]; k];
        for i in 0..k {
            for j in 0..k {
                let minor: Vec<Vec<i128>> = (0..k)
                    .filter(|&r| r != j)
                    .map(|r| (0..k).filter(|&c| c != i).map(|c| l[r][c]).collect())
                    .collect();
                adj[i][j] = if (i + j) % 2 == 0 { det(&minor) } else { -det(&minor) };
            }
        }
        LatticeTest { det: det(&l), keep, adj }
    }

    pub fn key(&self, d: &Divisor) -> (i64, Vec<i128>) {
        let key = self
            .adj
            .iter()
            .map(|row| row.iter().zip(&self.keep).map(|(a, &v)| a * d[v] as i128).sum::<i128>().rem_euclid(self.det))
            .collect();
        (d.degree(), key)
    }

    pub fn tree_count(&self) -> i128 {
        self.det
    }
}
