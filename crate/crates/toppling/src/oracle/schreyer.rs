//! Schreyer's algorithm for (possibly non-minimal) free resolutions, and
//! extraction of graded Betti numbers from them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::divisor::{pic_class, PicClass};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::{Divisor, PointedGraph, TermOrder};
use crate::oracle::division::division_normal_form;
use crate::oracle::rank;
use crate::poly::{ModuleElement, Monomial, Polynomial, SchreyerOrder, Signature};
use crate::resolution::BettiTable;

/// How each new Gröbner basis is ordered before its syzygies are computed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BasisOrder {
    /// Generators as supplied, syzygies in the order their S-pairs are found.
    AsGiven,
    /// Every level reversed.
    Reversed,
    /// At level `l`, sort by decreasing exponent of the `l`-th variable in the
    /// leading term (stable). Guarantees termination after at most `n + 1` steps.
    Sorted,
}

/// A Schreyer resolution of `R/I`.
#[derive(Clone, Debug)]
pub struct SchreyerResolution {
    pub field: Field,
    pub order: SchreyerOrder,
    /// `maps[l]` lists the images in `F_l` of the basis of `F_{l+1}`.
    pub maps: Vec<Vec<ModuleElement>>,
    /// `degrees[l][e]`: multidegree of basis element `e` of `F_l`.
    pub degrees: Vec<Vec<Divisor>>,
}

impl SchreyerResolution {
    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.len()).collect()
    }
}

fn monic(x: &ModuleElement, order: &SchreyerOrder, level: usize) -> ModuleElement {
    let inv = order.leading_term(level, x).expect("nonzero").1.inv().unwrap();
    let mut out = ModuleElement::zero(x.field());
    out.add_scaled(&inv, &Monomial::one(order.term.priority.len()), x);
    out
}

fn signatures(basis: &[ModuleElement], order: &SchreyerOrder, level: usize) -> Vec<Signature> {
    basis
        .iter()
        .enumerate()
        .map(|(rank, b)| {
            let ((below, lead), _) = order.leading_term(level, b).expect("nonzero");
            Signature { lead: lead.clone(), below: *below, rank }
        })
        .collect()
}

/// Syzygies `s(f, h)` of a Gröbner basis at `level`, pruned by the chain
/// criterion: for each `f` only the pairs whose `x^{γ(f,h)−α(f)}` is minimal
/// under divisibility are kept (the first of equal ones).
///
/// `order` must already describe the basis as level `level + 1`. The result is
/// a Gröbner basis of the syzygy module under that order, leading term
/// `x^{γ(f,h)−α(f)}[f]` each.
pub fn schreyer_step(basis: &[ModuleElement], order: &SchreyerOrder, level: usize) -> Result<Vec<ModuleElement>> {
    let field = basis.first().map_or(Field::default(), |b| b.field());
    let lts: Vec<((usize, Monomial), _)> = basis
        .iter()
        .map(|b| {
            let (t, c) = order.leading_term(level, b).expect("nonzero");
            (t.clone(), c.clone())
        })
        .collect();
    let mut out = Vec::new();
    for f in 0..basis.len() {
        let ((ef, af), cf) = &lts[f];
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for h in f + 1..basis.len() {
            let ((eh, ah), _) = &lts[h];
            if eh != ef {
                continue;
            }
            let m = af.quotient_of(&af.lcm(ah)).unwrap();
            if kept.iter().any(|(_, k)| k.divides(&m)) {
                continue;
            }
            kept.retain(|(_, k)| !m.divides(k));
            kept.push((h, m));
        }
        kept.sort();
        for (h, mf) in kept {
            let ((_, ah), ch) = &lts[h];
            let mh = ah.quotient_of(&af.mul(&mf)).unwrap();
            let (a, b) = (cf.inv().unwrap(), ch.inv().unwrap());
            let mut s = ModuleElement::zero(field);
            s.add_scaled(&a, &mf, &basis[f]);
            s.add_scaled(&(-&b), &mh, &basis[h]);
            let (quot, rem) = division_normal_form(&s, basis, order, level);
            if !rem.is_zero() {
                return Err(Error::NotGroebner);
            }
            let mut syz = ModuleElement::zero(field);
            syz.add_term(f, mf.clone(), &field.one());
            syz.add_term(h, mh, &(-&(&b * cf)));
            for (g, q) in quot.iter().enumerate() {
                for (m, c) in q.terms() {
                    syz.add_term(g, m.clone(), &(-&(c * cf)));
                }
            }
            match order.leading_term(level + 1, &syz) {
                Some(((e, m), c)) if *e == f && *m == mf && c.is_one() => {}
                _ => return Err(Error::LeadingTermMismatch),
            }
            out.push(syz);
        }
    }
    Ok(out)
}

/// Iterates [`schreyer_step`] from a Gröbner basis of `I ⊆ R` until the
/// syzygy module vanishes or `max_len` free modules past `R` have been built.
pub fn schreyer_resolution(
    gens: &[Polynomial],
    term: TermOrder,
    policy: BasisOrder,
    max_len: usize,
) -> Result<SchreyerResolution> {
    let n = term.priority.len();
    let field = gens.first().map_or(Field::default(), |p| p.field());
    let mut order = SchreyerOrder::new(term);
    let mut current: Vec<ModuleElement> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| monic(&ModuleElement::from_polynomial(0, p), &order, 0))
        .collect();
    let mut maps = Vec::new();
    let mut degrees = alloc::vec![alloc::vec![Divisor::zero(n)]];
    let mut level = 0;
    while !current.is_empty() && maps.len() < max_len {
        arrange(&mut current, &order, level, policy);
        let sigs = signatures(&current, &order, level);
        degrees.push(sigs.iter().map(|s| &s.lead.to_divisor() + &degrees[level][s.below]).collect());
        order.push_level(sigs);
        let next = schreyer_step(&current, &order, level)?;
        maps.push(core::mem::replace(&mut current, next));
        level += 1;
    }
    Ok(SchreyerResolution { field, order, maps, degrees })
}

fn arrange(basis: &mut [ModuleElement], order: &SchreyerOrder, level: usize, policy: BasisOrder) {
    match policy {
        BasisOrder::AsGiven => {}
        BasisOrder::Reversed => basis.reverse(),
        BasisOrder::Sorted => {
            let n = order.term.priority.len();
            if level < n {
                let v = order.term.priority[level];
                basis.sort_by_cached_key(|b| core::cmp::Reverse(order.leading_term(level, b).unwrap().0 .1 .0[v]));
            }
        }
    }
}

/// Graded Betti numbers of the minimal resolution obtained from `res` by
/// cancelling every unit entry: `β_{i,D} = f_{i,D} − r_{i,D} − r_{i+1,D}`,
/// where `r_{i,D}` is the rank of the scalar block of `φ_i` in degree `[D]`.
pub fn minimalize(g: &PointedGraph, res: &SchreyerResolution) -> BettiTable {
    let classes: Vec<Vec<PicClass>> =
        res.degrees.iter().map(|ds| ds.iter().map(|d| pic_class(g, d)).collect()).collect();
    // scalar_rank[i][class] for φ_i: F_i → F_{i−1}, i ≥ 1.
    let mut scalar_rank: Vec<BTreeMap<PicClass, usize>> = alloc::vec![BTreeMap::new(); res.degrees.len() + 1];
    for (l, images) in res.maps.iter().enumerate() {
        let mut blocks: BTreeMap<&PicClass, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for (c, cls) in classes[l + 1].iter().enumerate() {
            blocks.entry(cls).or_default().1.push(c);
        }
        for (r, cls) in classes[l].iter().enumerate() {
            if let Some(b) = blocks.get_mut(cls) {
                b.0.push(r);
            }
        }
        for (cls, (rows, cols)) in blocks {
            if rows.is_empty() {
                continue;
            }
            let one = Monomial::one(g.n());
            let matrix: Vec<Vec<_>> = rows
                .iter()
                .map(|&r| {
                    cols.iter()
                        .map(|&c| {
                            images[c]
                                .terms()
                                .find(|((e, m), _)| *e == r && *m == one)
                                .map_or(res.field.zero(), |(_, s)| s.clone())
                        })
                        .collect()
                })
                .collect();
            let rk = rank(res.field, matrix);
            if rk > 0 {
                scalar_rank[l + 1].insert(cls.clone(), rk);
            }
        }
    }
    let mut table = BettiTable::default();
    for (i, cls) in classes.iter().enumerate() {
        let mut free: BTreeMap<&PicClass, usize> = BTreeMap::new();
        for c in cls {
            *free.entry(c).or_default() += 1;
        }
        for (c, f) in free {
            let lost = scalar_rank[i].get(c).copied().unwrap_or(0) + scalar_rank[i + 1].get(c).copied().unwrap_or(0);
            for _ in lost..f {
                table.add(i, c.degree(), c.clone());
            }
        }
    }
    table
}
