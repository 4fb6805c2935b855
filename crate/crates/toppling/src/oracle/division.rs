//! The division algorithm in a free module under a Schreyer order.

use alloc::vec::Vec;

use crate::field::Scalar;
use crate::poly::{ModuleElement, Monomial, Polynomial, SchreyerOrder};

/// Divides `elem` by `basis` (both at `level`), always reducing the leading
/// term by the lowest-index basis element whose leading term divides it.
///
/// Returns the quotients, one per basis element, and the remainder; no term of
/// the remainder is divisible by a leading term of the basis.
pub fn division_normal_form(
    elem: &ModuleElement,
    basis: &[ModuleElement],
    order: &SchreyerOrder,
    level: usize,
) -> (Vec<Polynomial>, ModuleElement) {
    let field = elem.field();
    let lts: Vec<((usize, Monomial), Scalar)> = basis
        .iter()
        .map(|b| {
            let (t, c) = order.leading_term(level, b).expect("basis leading terms are nonzero");
            (t.clone(), c.inv().expect("nonzero"))
        })
        .collect();
    let mut quotients = alloc::vec![Polynomial::zero(field); basis.len()];
    let mut rem = ModuleElement::zero(field);
    let mut p = elem.clone();
    while let Some(((e, m), c)) = order.leading_term(level, &p).map(|(t, c)| (t.clone(), c.clone())) {
        let hit = lts.iter().enumerate().find(|(_, ((be, bm), _))| *be == e && bm.divides(&m));
        match hit {
            Some((i, ((_, bm), inv))) => {
                let x = bm.quotient_of(&m).unwrap();
                let a = &c * inv;
                p.add_scaled(&(-&a), &x, &basis[i]);
                quotients[i].add_term(x, &a);
            }
            None => {
                p.add_term(e, m.clone(), &(-&c));
                rem.add_term(e, m, &c);
            }
        }
    }
    (quotients, rem)
}
