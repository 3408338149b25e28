//! Printing in the input language.
//!
//! Terms are printed in descending lexicographic order of their exponent
//! vectors (declaration order of the variables), independent of the
//! internal monomial order, so that printed output reads the way a
//! polynomial is usually written by hand.

use num_traits::{One, Signed};

use crate::field::Field;
use crate::poly::{Monomial, Polynomial, WeightedPolyRing};

pub(crate) fn format_monomial<F: Field>(ring: &WeightedPolyRing<F>, m: &Monomial) -> String {
    let parts: Vec<String> = m
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                ring.vars()[i].clone()
            } else {
                format!("{}^{}", ring.vars()[i], e)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub(crate) fn format_poly<F: Field>(ring: &WeightedPolyRing<F>, p: &Polynomial<F>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let field = ring.field();
    let mut terms: Vec<&(Monomial, F::Elem)> = p.terms().iter().collect();
    terms.sort_by(|a, b| b.0.lex_cmp(&a.0));
    let mut out = String::new();
    for (idx, (m, c)) in terms.into_iter().enumerate() {
        let q = field.to_rational(c);
        let negative = q.is_negative();
        let abs = q.abs();
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&format_monomial(ring, m));
        }
    }
    out
}
