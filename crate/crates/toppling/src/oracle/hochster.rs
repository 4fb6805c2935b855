//! Betti numbers from the reduced homology of the complexes `Δ_D`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::divisor::{effective_divisors, linear_system, pic_class, PicClass};
use crate::field::Field;
use crate::graph::{Divisor, PointedGraph, VertexSet};
use crate::oracle::rank;
use crate::resolution::BettiTable;

/// A simplicial complex on `0..n` given by its facets. No facets at all is
/// the void complex; the single facet `∅` is the complex `{∅}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    pub n: usize,
    pub facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Keeps only the maximal sets.
    pub fn from_sets(n: usize, sets: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut all: Vec<VertexSet> = sets.into_iter().collect();
        all.sort_by_key(|s| core::cmp::Reverse(s.len()));
        all.dedup();
        let mut facets: Vec<VertexSet> = Vec::new();
        for s in all {
            if !facets.iter().any(|f| s.is_subset(*f)) {
                facets.push(s);
            }
        }
        facets.sort_by_key(|s| s.bits());
        SimplicialComplex { n, facets }
    }

    /// All faces of dimension `d` (size `d + 1`), in increasing bit order.
    pub fn faces(&self, d: isize) -> Vec<VertexSet> {
        let size = (d + 1) as usize;
        let mut out: Vec<VertexSet> = Vec::new();
        for f in &self.facets {
            if size == 0 {
                out.push(VertexSet::EMPTY);
                continue;
            }
            for s in f.subsets() {
                if s.len() == size {
                    out.push(s);
                }
            }
        }
        out.sort_by_key(|s| s.bits());
        out.dedup();
        out
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-2)
    }
}

/// `dims[i + 1] = dim H̃_i` for `i = −1 ..= dim`.
pub fn reduced_homology_dims(c: &SimplicialComplex, field: Field) -> Vec<usize> {
    let top = c.dim();
    if top < -1 {
        return Vec::new();
    }
    let faces: Vec<Vec<VertexSet>> = (-1..=top).map(|d| c.faces(d)).collect();
    // rank of ∂_d: C_d → C_{d−1}, for d = 0..=top (index d + 1 in faces).
    let mut ranks = alloc::vec![0usize; faces.len() + 1];
    for d in 1..faces.len() {
        let (rows, cols) = (&faces[d - 1], &faces[d]);
        let matrix: Vec<Vec<_>> = rows
            .iter()
            .map(|r| {
                cols.iter()
                    .map(|c| {
                        if !r.is_subset(*c) {
                            return field.zero();
                        }
                        let gone = c.difference(*r).first().unwrap();
                        let pos = c.iter().take_while(|&v| v < gone).count();
                        field.from_i64(if pos % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        ranks[d] = rank(field, matrix);
    }
    (0..faces.len()).map(|d| faces[d].len() - ranks[d] - ranks[d + 1]).collect()
}

/// `Δ_D`: supports of effective divisors below members of `|D|`.
pub fn delta_complex(g: &PointedGraph, class: &PicClass) -> SimplicialComplex {
    delta_from_system(g.n(), &linear_system(g, &class.rep))
}

fn delta_from_system(n: usize, system: &[Divisor]) -> SimplicialComplex {
    SimplicialComplex::from_sets(n, system.iter().map(|e| e.support()))
}

/// `β_{i,D}(R/I_G) = dim H̃_{i−1}(Δ_D)`.
pub fn hochster_betti(g: &PointedGraph, i: usize, class: &PicClass, field: Field) -> usize {
    let dims = reduced_homology_dims(&delta_complex(g, class), field);
    dims.get(i).copied().unwrap_or(0)
}

/// Pic-graded Betti table over every class of degree at most `max_degree`.
pub fn hochster_table(g: &PointedGraph, max_degree: i64, field: Field) -> BettiTable {
    let mut table = BettiTable::default();
    for d in 0..=max_degree {
        let mut systems: BTreeMap<PicClass, Vec<Divisor>> = BTreeMap::new();
        for e in effective_divisors(g.n(), d) {
            systems.entry(pic_class(g, &e)).or_default().push(e);
        }
        for (class, system) in systems {
            let dims = reduced_homology_dims(&delta_from_system(g.n(), &system), field);
            for (i, &b) in dims.iter().enumerate() {
                for _ in 0..b {
                    table.add(i, d, class.clone());
                }
            }
        }
    }
    table
}
