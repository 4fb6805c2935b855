//! Sparse polynomials and free-module elements over a [`Field`].

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;

use crate::field::{Field, Scalar};
use crate::graph::{Divisor, TermOrder};

/// Exponent vector of `x^D`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(alloc::vec![0; n])
    }

    /// Panics on a negative coefficient.
    pub fn from_divisor(d: &Divisor) -> Self {
        Monomial(d.0.iter().map(|&c| u32::try_from(c).expect("effective divisor")).collect())
    }

    pub fn to_divisor(&self) -> Divisor {
        Divisor(self.0.iter().map(|&c| c as i64).collect())
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `x1^2*x3` style; `1` for the unit monomial.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (v, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            let _ = write!(s, "x{}", v + 1);
            if e > 1 {
                let _ = write!(s, "^{}", e);
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

/// Finite map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(field: Field) -> Self {
        Polynomial { field, terms: BTreeMap::new() }
    }

    pub fn term(field: Field, c: Scalar, m: Monomial) -> Self {
        let mut p = Polynomial::zero(field);
        p.add_term(m, &c);
        p
    }

    /// `x^plus − x^minus`.
    pub fn binomial(field: Field, plus: Monomial, minus: Monomial) -> Self {
        let mut p = Polynomial::term(field, field.one(), plus);
        p.add_term(minus, &field.from_i64(-1));
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(cur) => {
                *cur = &*cur + c;
                if cur.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// `self += c·x^m·other`.
    pub fn add_scaled(&mut self, c: &Scalar, m: &Monomial, other: &Polynomial) {
        for (mo, co) in &other.terms {
            self.add_term(m.mul(mo), &(c * co));
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { field: self.field, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            out.add_scaled(c, m, other);
        }
        out
    }

    pub fn scale(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        out.add_scaled(c, m, self);
        out
    }

    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().max_by(|a, b| order.cmp(&a.0 .0, &b.0 .0))
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one()
    }

    /// Terms in decreasing order, e.g. `x3*x4 - x1*x2`.
    pub fn render(&self, order: &TermOrder) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut terms: Vec<(&Monomial, &Scalar)> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(&b.0 .0, &a.0 .0));
        let mut s = String::new();
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if m.is_one() {
                let _ = write!(s, "{}", abs);
            } else if abs.is_one() {
                s.push_str(&m.render());
            } else {
                let _ = write!(s, "{}*{}", abs, m.render());
            }
        }
        s
    }
}

/// Element of a free module `⊕ R·[e]`: a finite map `(e, x^m) → c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleElement {
    field: Field,
    terms: BTreeMap<(usize, Monomial), Scalar>,
}

impl ModuleElement {
    pub fn zero(field: Field) -> Self {
        ModuleElement { field, terms: BTreeMap::new() }
    }

    pub fn basis(field: Field, e: usize, n: usize) -> Self {
        let mut out = ModuleElement::zero(field);
        out.add_term(e, Monomial::one(n), &field.one());
        out
    }

    /// The polynomial `p` placed in coordinate `e`.
    pub fn from_polynomial(e: usize, p: &Polynomial) -> Self {
        let mut out = ModuleElement::zero(p.field());
        for (m, c) in p.terms() {
            out.add_term(e, m.clone(), c);
        }
        out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, Monomial), &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: usize, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (e, m);
        match self.terms.get_mut(&key) {
            Some(cur) => {
                *cur = &*cur + c;
                if cur.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    /// `self += c·x^m·other`.
    pub fn add_scaled(&mut self, c: &Scalar, m: &Monomial, other: &ModuleElement) {
        for ((e, mo), co) in &other.terms {
            self.add_term(*e, m.mul(mo), &(c * co));
        }
    }

    /// Coordinates as polynomials, keyed by basis index.
    pub fn components(&self) -> BTreeMap<usize, Polynomial> {
        let mut out: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for ((e, m), c) in &self.terms {
            out.entry(*e).or_insert_with(|| Polynomial::zero(self.field)).add_term(m.clone(), c);
        }
        out
    }

    /// Largest term under a module order given as a comparison of `(e, x^m)` pairs.
    pub fn leading_term_by<F>(&self, mut cmp: F) -> Option<(&(usize, Monomial), &Scalar)>
    where
        F: FnMut(&(usize, Monomial), &(usize, Monomial)) -> Ordering,
    {
        self.terms.iter().max_by(|a, b| cmp(a.0, b.0))
    }
}

/// Leading-term data of one basis element of a free module in a Schreyer chain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Signature {
    /// Exponent of the leading term of its image one level down.
    pub lead: Monomial,
    /// Basis index of that leading term one level down.
    pub below: usize,
    /// Position in the chosen total order of this level; smaller rank means a larger term.
    pub rank: usize,
}

/// Module orders induced level by level from a term order on `R`.
///
/// Level 0 is `R` itself (single basis element 0). A term `x^m[e]` at level
/// `l ≥ 1` is compared through the leading term of `x^m·image(e)` at level
/// `l − 1`; ties are broken by rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchreyerOrder {
    pub term: TermOrder,
    /// `levels[l − 1][e]` describes basis element `e` of level `l`.
    pub levels: Vec<Vec<Signature>>,
}

impl SchreyerOrder {
    pub fn new(term: TermOrder) -> Self {
        SchreyerOrder { term, levels: Vec::new() }
    }

    pub fn push_level(&mut self, sigs: Vec<Signature>) {
        self.levels.push(sigs);
    }

    /// Number of levels above `R`.
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    fn descend(&self, level: usize, e: usize, m: &Monomial, ranks: &mut Vec<usize>) -> Monomial {
        let mut cur_e = e;
        let mut cur_m = m.clone();
        for l in (1..=level).rev() {
            let sig = &self.levels[l - 1][cur_e];
            ranks.push(sig.rank);
            cur_m = cur_m.mul(&sig.lead);
            cur_e = sig.below;
        }
        ranks.reverse();
        cur_m
    }

    /// Compares `x^a[e]` with `x^b[f]` at the given level.
    pub fn cmp(&self, level: usize, a: &(usize, Monomial), b: &(usize, Monomial)) -> Ordering {
        if level == 0 {
            return self.term.cmp(&a.1 .0, &b.1 .0).then(b.0.cmp(&a.0));
        }
        let (mut ra, mut rb) = (Vec::with_capacity(level), Vec::with_capacity(level));
        let ma = self.descend(level, a.0, &a.1, &mut ra);
        let mb = self.descend(level, b.0, &b.1, &mut rb);
        self.term.cmp(&ma.0, &mb.0).then_with(|| rb.cmp(&ra))
    }

    pub fn leading_term<'a>(
        &self,
        level: usize,
        x: &'a ModuleElement,
    ) -> Option<(&'a (usize, Monomial), &'a Scalar)> {
        x.leading_term_by(|a, b| self.cmp(level, a, b))
    }
}
