//! The Gröbner basis of `I_G`, the flag-indexed minimal free resolutions of
//! `R/I_G` and `R/in(I_G)`, Betti tables and self-checks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::divisor::{is_q_reduced, pic_class, PicClass};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::flags::{enumerate_minimal_flags, FlagBasis};
use crate::graph::{Divisor, PointedGraph, VertexSet};
use crate::merge::merge_sets_in;
use crate::oracle::division::division_normal_form;
use crate::poly::{ModuleElement, Monomial, Polynomial, SchreyerOrder, Signature};

/// `x^plus − x^minus`; `lead_is_plus` records which side is the leading term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
    pub lead_is_plus: bool,
}

impl Binomial {
    pub fn lead(&self) -> &Monomial {
        if self.lead_is_plus {
            &self.plus
        } else {
            &self.minus
        }
    }

    pub fn to_polynomial(&self, field: Field) -> Polynomial {
        Polynomial::binomial(field, self.plus.clone(), self.minus.clone())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Variant {
    /// `I_G`.
    Binomial,
    /// `in(I_G)`.
    Monomial,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Grading {
    Z,
    Pic,
}

/// `x^{D(U_2∖U_1, U_1)} − x^{D(U_1, U_2∖U_1)}` for each `U ∈ S_2`, in `≺_2` order.
pub fn groebner_basis(g: &PointedGraph) -> Result<Vec<Binomial>> {
    if g.n() < 2 {
        return Ok(Vec::new());
    }
    let order = g.term_order();
    let s2 = enumerate_minimal_flags(g, 2)?;
    s2.flags()
        .iter()
        .map(|u| {
            let (u1, a2) = (u.chain()[0], u.chain()[1].difference(u.chain()[0]));
            let plus = Monomial::from_divisor(&g.dd(a2, u1));
            let minus = Monomial::from_divisor(&g.dd(u1, a2));
            if order.cmp(&plus.0, &minus.0) != core::cmp::Ordering::Greater {
                return Err(Error::LeadingTermMismatch);
            }
            Ok(Binomial { plus, minus, lead_is_plus: true })
        })
        .collect()
}

/// Leading monomials of [`groebner_basis`].
pub fn initial_ideal(g: &PointedGraph) -> Result<Vec<Monomial>> {
    Ok(groebner_basis(g)?.into_iter().map(|b| b.lead().clone()).collect())
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn buchberger_check(gens: &[Polynomial], order: &SchreyerOrder) -> bool {
    let lts: Vec<_> = gens.iter().map(|p| p.leading_term(&order.term)).collect();
    let elems: Vec<ModuleElement> = gens.iter().map(|p| ModuleElement::from_polynomial(0, p)).collect();
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            let (Some((ma, ca)), Some((mb, cb))) = (lts[a], lts[b]) else { return false };
            let l = ma.lcm(mb);
            let mut s = ModuleElement::zero(gens[a].field());
            s.add_scaled(&ca.inv().unwrap(), &ma.quotient_of(&l).unwrap(), &elems[a]);
            s.add_scaled(&(-&cb.inv().unwrap()), &mb.quotient_of(&l).unwrap(), &elems[b]);
            if !division_normal_form(&s, &elems, order, 0).1.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Column-major sparse matrix of polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<BTreeMap<usize, Polynomial>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, ncols: usize) -> Self {
        SparseMatrix { rows, cols: vec![BTreeMap::new(); ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Polynomial> {
        self.cols[c].get(&r)
    }

    pub fn add_to(&mut self, r: usize, c: usize, p: &Polynomial) {
        let col = &mut self.cols[c];
        let sum = match col.get(&r) {
            Some(cur) => cur.add(p),
            None => p.clone(),
        };
        if sum.is_zero() {
            col.remove(&r);
        } else {
            col.insert(r, sum);
        }
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = SparseMatrix::new(self.rows, other.ncols());
        for (c, col) in other.cols.iter().enumerate() {
            for (mid, p) in col {
                for (r, a) in &self.cols[*mid] {
                    out.add_to(*r, c, &a.mul(p));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// First nonzero entry `(row, col)`.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.cols.iter().enumerate().find_map(|(c, col)| col.keys().next().map(|&r| (r, c)))
    }
}

/// Minimal free resolution of `R/I` with `F_i` indexed by `S_{i+1}(G, q)`.
///
/// `bases[i]` is `S_{i+1}` (so `bases[0]` is the 1-flag spanning `R`), and
/// `phis[k]` is `φ_k: F_{k+1} → F_k`, whose columns are indexed by `S_{k+2}`
/// and rows by `S_{k+1}`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub variant: Variant,
    pub field: Field,
    pub bases: Vec<FlagBasis>,
    pub phis: Vec<SparseMatrix>,
    /// `D(U)` of every basis flag, per level.
    pub divisors: Vec<Vec<Divisor>>,
    pub pic_degrees: Vec<Vec<PicClass>>,
}

impl FreeResolution {
    pub fn z_degree(&self, level: usize, e: usize) -> i64 {
        self.divisors[level][e].degree()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.len()).collect()
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut t = BettiTable::default();
        for (i, ds) in self.divisors.iter().enumerate() {
            for (d, p) in ds.iter().zip(&self.pic_degrees[i]) {
                t.add(i, d.degree(), p.clone());
            }
        }
        t
    }
}

/// Builds the resolution from the closed-form differentials and checks that
/// consecutive maps compose to zero and that no entry is a unit.
pub fn build_resolution(g: &PointedGraph, variant: Variant, field: Field) -> Result<FreeResolution> {
    let res = assemble_resolution(g, variant, field)?;
    for (k, phi) in res.phis.iter().enumerate() {
        if let Some((row, col)) = unit_entry(phi) {
            return Err(Error::UnitEntry { k, row, col });
        }
        if let Some(next) = res.phis.get(k + 1) {
            if let Some((row, col)) = phi.mul(next).first_nonzero() {
                return Err(Error::CompositionNonzero { k, row, col });
            }
        }
    }
    Ok(res)
}

/// [`build_resolution`] without the checks.
pub fn assemble_resolution(g: &PointedGraph, variant: Variant, field: Field) -> Result<FreeResolution> {
    let n = g.n();
    let bases: Vec<FlagBasis> = (1..=n).map(|k| enumerate_minimal_flags(g, k)).collect::<Result<_>>()?;
    let mut phis = Vec::with_capacity(n.saturating_sub(1));
    for k in 0..n.saturating_sub(1) {
        let (lower, upper) = (&bases[k], &bases[k + 1]);
        let mut phi = SparseMatrix::new(lower.len(), upper.len());
        for (c, u) in upper.flags().iter().enumerate() {
            let ms = merge_sets_in(g, u, lower)?;
            let terms = match variant {
                Variant::Binomial => &ms.b_set,
                Variant::Monomial => &ms.i_set,
            };
            for t in terms {
                let p = Polynomial::term(field, field.from_i64(t.sign as i64), Monomial::from_divisor(&t.theta));
                phi.add_to(t.target, c, &p);
            }
        }
        phis.push(phi);
    }
    let divisors: Vec<Vec<Divisor>> =
        bases.iter().map(|b| b.flags().iter().map(|u| u.divisor(g)).collect()).collect();
    let pic_degrees = divisors.iter().map(|ds| ds.iter().map(|d| pic_class(g, d)).collect()).collect();
    Ok(FreeResolution { variant, field, bases, phis, divisors, pic_degrees })
}

fn unit_entry(phi: &SparseMatrix) -> Option<(usize, usize)> {
    phi.cols
        .iter()
        .enumerate()
        .find_map(|(c, col)| col.iter().find(|(_, p)| p.terms().any(|(m, _)| m.is_one())).map(|(&r, _)| (r, c)))
}

/// Graded Betti numbers of `R/I` in both gradings.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BettiTable {
    pub z_graded: BTreeMap<(usize, i64), usize>,
    pub pic_graded: BTreeMap<(usize, PicClass), usize>,
}

impl BettiTable {
    pub fn add(&mut self, i: usize, j: i64, class: PicClass) {
        *self.z_graded.entry((i, j)).or_default() += 1;
        *self.pic_graded.entry((i, class)).or_default() += 1;
    }

    /// `β_i`.
    pub fn total(&self, i: usize) -> usize {
        self.z_graded.iter().filter(|((a, _), _)| *a == i).map(|(_, c)| c).sum()
    }

    /// `β_0, β_1, …` up to the last nonzero one.
    pub fn totals(&self) -> Vec<usize> {
        let top = self.z_graded.keys().map(|(i, _)| *i).max().map_or(0, |i| i + 1);
        (0..top).map(|i| self.total(i)).collect()
    }

    pub fn get(&self, i: usize, j: i64) -> usize {
        self.z_graded.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `max (j − i)` over nonzero entries.
    pub fn regularity(&self) -> Option<i64> {
        self.z_graded.keys().map(|(i, j)| j - *i as i64).max()
    }

    /// TSV rows `i<TAB>j<TAB>count`.
    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        for ((i, j), c) in &self.z_graded {
            s.push_str(&format!("{}\t{}\t{}\n", i, j, c));
        }
        s
    }

    /// TSV rows `i<TAB>class<TAB>count`, classes printed as reduced representatives.
    pub fn pic_to_tsv(&self) -> String {
        let mut s = String::new();
        for ((i, p), c) in &self.pic_graded {
            s.push_str(&format!("{}\t{}\t{}\n", i, p.rep, c));
        }
        s
    }
}

/// `β_{i,j} = |S_{i+1,j}(G, q)|`, counted without building any matrix.
pub fn betti_table(g: &PointedGraph) -> Result<BettiTable> {
    let mut t = BettiTable::default();
    for k in 1..=g.n() {
        for u in enumerate_minimal_flags(g, k)?.flags() {
            let d = u.divisor(g);
            t.add(k - 1, d.degree(), pic_class(g, &d));
        }
    }
    Ok(t)
}

/// One named check with the first counterexample on failure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed())
    }
}

/// The module orders pulled back along the flag resolution: basis flag `U`
/// at level `l` leads with `x^{D(U_2∖U_1,U_1)}[U^(1)]` and ranks by `≺`.
pub fn flag_schreyer_order(g: &PointedGraph, bases: &[FlagBasis]) -> Result<SchreyerOrder> {
    let mut order = SchreyerOrder::new(g.term_order());
    for l in 1..bases.len() {
        let sigs = bases[l]
            .flags()
            .iter()
            .enumerate()
            .map(|(e, u)| {
                let below = bases[l - 1].class_of(g, &u.drop_first()?).ok_or(Error::NotMinimalRep)?;
                Ok(Signature { lead: Monomial::from_divisor(&u.leading_divisor(g)?), below, rank: e })
            })
            .collect::<Result<Vec<_>>>()?;
        order.push_level(sigs);
    }
    Ok(order)
}

/// Checks (a) `φ_k ∘ φ_{k+1} = 0`, (b) no unit entries, (c) the leading term of
/// each column is `x^{D(U_2∖U_1,U_1)}[U^(1)]`, (d) homogeneity in both gradings.
pub fn verify_resolution(g: &PointedGraph, res: &FreeResolution) -> VerifyReport {
    let mut checks = Vec::new();

    let mut fail = None;
    for k in 0..res.phis.len().saturating_sub(1) {
        if let Some((r, c)) = res.phis[k].mul(&res.phis[k + 1]).first_nonzero() {
            fail = Some(format!("phi_{} * phi_{} nonzero at ({}, {})", k, k + 1, r, c));
            break;
        }
    }
    checks.push(CheckOutcome { name: "complex", failure: fail });

    let fail = res.phis.iter().enumerate().find_map(|(k, phi)| {
        unit_entry(phi).map(|(r, c)| format!("unit entry in phi_{} at ({}, {})", k, r, c))
    });
    checks.push(CheckOutcome { name: "minimality", failure: fail });

    let fail = match flag_schreyer_order(g, &res.bases) {
        Err(e) => Some(format!("{}", e)),
        Ok(order) => leading_term_failure(g, res, &order),
    };
    checks.push(CheckOutcome { name: "leading-terms", failure: fail });

    checks.push(CheckOutcome { name: "degrees", failure: degree_failure(g, res) });
    VerifyReport { checks }
}

fn leading_term_failure(g: &PointedGraph, res: &FreeResolution, order: &SchreyerOrder) -> Option<String> {
    for (k, phi) in res.phis.iter().enumerate() {
        for (c, col) in phi.cols.iter().enumerate() {
            let mut x = ModuleElement::zero(res.field);
            for (r, p) in col {
                for (m, a) in p.terms() {
                    x.add_term(*r, m.clone(), a);
                }
            }
            let sig = &order.levels[k][c];
            let ok = match order.leading_term(k, &x) {
                Some(((e, m), a)) => *e == sig.below && *m == sig.lead && a.is_one(),
                None => false,
            };
            if !ok {
                return Some(format!("phi_{} column {} ({})", k, c, res.bases[k + 1].get(c)));
            }
        }
    }
    let _ = g;
    None
}

fn degree_failure(g: &PointedGraph, res: &FreeResolution) -> Option<String> {
    for (k, phi) in res.phis.iter().enumerate() {
        for (c, col) in phi.cols.iter().enumerate() {
            let target = &res.divisors[k + 1][c];
            for (r, p) in col {
                for (m, _) in p.terms() {
                    let d = &m.to_divisor() + &res.divisors[k][*r];
                    if d.degree() != target.degree() || pic_class(g, &d) != res.pic_degrees[k + 1][c] {
                        return Some(format!("phi_{} entry ({}, {})", k, r, c));
                    }
                }
            }
        }
    }
    None
}

/// Hilbert function values and the two sides of the series identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertReport {
    /// `HF(0), …, HF(t_max)`.
    pub hf: Vec<u64>,
    /// Coefficients of `Σ_i (−1)^i Σ_j β_{i,j} t^j`.
    pub betti_side: Vec<i64>,
    /// Coefficients of `(1 − t)^n Σ_d HF(d) t^d`.
    pub series_side: Vec<i64>,
}

/// Number of q-reduced divisors with `D(q) = 0`, by degree.
pub fn superstables_by_degree(g: &PointedGraph) -> Vec<u64> {
    let others: Vec<usize> = (0..g.n()).filter(|&v| v != g.q()).collect();
    let mut counts: Vec<u64> = Vec::new();
    let mut d = Divisor::zero(g.n());
    fn rec(g: &PointedGraph, others: &[usize], i: usize, d: &mut Divisor, counts: &mut Vec<u64>) {
        if i == others.len() {
            if is_q_reduced(g, d) {
                let deg = d.degree() as usize;
                if counts.len() <= deg {
                    counts.resize(deg + 1, 0);
                }
                counts[deg] += 1;
            }
            return;
        }
        let v = others[i];
        for c in 0..g.degree(v) as i64 {
            d[v] = c;
            rec(g, others, i + 1, d, counts);
        }
        d[v] = 0;
    }
    rec(g, &others, 0, &mut d, &mut counts);
    counts
}

/// Checks `Σ_i (−1)^i Σ_j β_{i,j} t^j = (1−t)^n Σ_d HF(d) t^d` through degree `t_max`.
pub fn hilbert_identity(g: &PointedGraph, table: &BettiTable, t_max: usize) -> Result<HilbertReport> {
    let sup = superstables_by_degree(g);
    let mut hf = Vec::with_capacity(t_max + 1);
    let mut acc = 0u64;
    for d in 0..=t_max {
        acc += sup.get(d).copied().unwrap_or(0);
        hf.push(acc);
    }
    let mut series: Vec<i64> = hf.iter().map(|&h| h as i64).collect();
    for _ in 0..g.n() {
        for d in (1..series.len()).rev() {
            series[d] -= series[d - 1];
        }
    }
    let mut betti = vec![0i64; t_max + 1];
    for ((i, j), c) in &table.z_graded {
        if *j >= 0 && (*j as usize) <= t_max {
            let s = if i % 2 == 0 { 1 } else { -1 };
            betti[*j as usize] += s * *c as i64;
        }
    }
    if let Some(degree) = (0..=t_max).find(|&d| betti[d] != series[d]) {
        return Err(Error::IdentityViolation { degree });
    }
    Ok(HilbertReport { hf, betti_side: betti, series_side: series })
}

/// [`hilbert_identity`] for the flag-counted Betti table.
pub fn hilbert_check(g: &PointedGraph, t_max: usize) -> Result<HilbertReport> {
    hilbert_identity(g, &betti_table(g)?, t_max)
}

/// Vertices of `g` as a set (re-export for callers working with bases).
pub fn all_vertices(g: &PointedGraph) -> VertexSet {
    g.vertices()
}
