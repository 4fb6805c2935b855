//! Partial orientations: one state per adjacent pair, shared by parallel edges.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::graph::{Divisor, PointedGraph, VertexSet};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum EdgeState {
    Unoriented,
    /// `u → v` for the stored pair `(u, v)`, `u < v`.
    Forward,
    /// `v → u`.
    Backward,
}

impl EdgeState {
    pub fn reversed(self) -> Self {
        match self {
            EdgeState::Unoriented => EdgeState::Unoriented,
            EdgeState::Forward => EdgeState::Backward,
            EdgeState::Backward => EdgeState::Forward,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PartialOrientation {
    pairs: Vec<(usize, usize)>,
    states: Vec<EdgeState>,
}

impl PartialOrientation {
    /// Orientation where `u → v` iff `level[u] < level[v]`; equal levels stay unoriented.
    pub fn from_levels(g: &PointedGraph, level: &[usize]) -> Self {
        let pairs = g.adjacent_pairs();
        let states = pairs
            .iter()
            .map(|&(u, v)| match level[u].cmp(&level[v]) {
                core::cmp::Ordering::Less => EdgeState::Forward,
                core::cmp::Ordering::Greater => EdgeState::Backward,
                core::cmp::Ordering::Equal => EdgeState::Unoriented,
            })
            .collect();
        PartialOrientation { pairs, states }
    }

    pub fn from_states(pairs: Vec<(usize, usize)>, states: Vec<EdgeState>) -> Self {
        assert_eq!(pairs.len(), states.len());
        PartialOrientation { pairs, states }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn states(&self) -> &[EdgeState] {
        &self.states
    }

    /// State of the pair `{u, v}` read as `u → v` (`Forward`), `v → u` (`Backward`).
    pub fn state(&self, u: usize, v: usize) -> Option<EdgeState> {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let i = self.pairs.binary_search(&(a, b)).ok()?;
        let s = self.states[i];
        Some(if u < v { s } else { s.reversed() })
    }

    /// Reverses every oriented pair with exactly one end in `s`.
    pub fn reverse_cut(&mut self, s: VertexSet) {
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if s.contains(u) != s.contains(v) {
                self.states[i] = self.states[i].reversed();
            }
        }
    }

    /// Forgets the orientation of every pair between `a` and `b`.
    pub fn unorient_between(&mut self, a: VertexSet, b: VertexSet) {
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if (a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u)) {
                self.states[i] = EdgeState::Unoriented;
            }
        }
    }

    /// `Σ indeg(v)·(v)`, parallel edges counted.
    pub fn indegree(&self, g: &PointedGraph) -> Divisor {
        let mut d = Divisor::zero(g.n());
        for (&(u, v), s) in self.pairs.iter().zip(&self.states) {
            match s {
                EdgeState::Forward => d[v] += g.mult(u, v) as i64,
                EdgeState::Backward => d[u] += g.mult(u, v) as i64,
                EdgeState::Unoriented => {}
            }
        }
        d
    }

    /// Connected components of the unoriented pairs, as a label per vertex.
    pub fn unoriented_components(&self, n: usize) -> Vec<usize> {
        let mut label: Vec<usize> = (0..n).collect();
        fn find(label: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while label[r] != r {
                r = label[r];
            }
            let mut y = x;
            while label[y] != r {
                let next = label[y];
                label[y] = r;
                y = next;
            }
            r
        }
        for (&(u, v), s) in self.pairs.iter().zip(&self.states) {
            if *s == EdgeState::Unoriented {
                let (a, b) = (find(&mut label, u), find(&mut label, v));
                if a != b {
                    label[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut label, v)).collect()
    }

    /// No directed cycle after contracting the unoriented pairs.
    pub fn is_acyclic(&self, n: usize) -> bool {
        let comp = self.unoriented_components(n);
        let mut out: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        let mut indeg = alloc::vec![0usize; n];
        for (&(u, v), s) in self.pairs.iter().zip(&self.states) {
            let (a, b) = match s {
                EdgeState::Unoriented => continue,
                EdgeState::Forward => (comp[u], comp[v]),
                EdgeState::Backward => (comp[v], comp[u]),
            };
            if a == b {
                return false;
            }
            out[a].push(b);
            indeg[b] += 1;
        }
        let roots: Vec<usize> = (0..n).filter(|&c| comp[c] == c).collect();
        let mut stack: Vec<usize> = roots.iter().copied().filter(|&c| indeg[c] == 0).collect();
        let mut seen = 0;
        while let Some(c) = stack.pop() {
            seen += 1;
            for &d in &out[c] {
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    stack.push(d);
                }
            }
        }
        seen == roots.len()
    }

    /// Graphviz rendering with 1-based vertex names.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph G {\n");
        for (&(u, v), st) in self.pairs.iter().zip(&self.states) {
            let _ = match st {
                EdgeState::Forward => writeln!(s, "  {} -> {};", u + 1, v + 1),
                EdgeState::Backward => writeln!(s, "  {} -> {};", v + 1, u + 1),
                EdgeState::Unoriented => writeln!(s, "  {} -> {} [dir=none];", u + 1, v + 1),
            };
        }
        s.push_str("}\n");
        s
    }
}
