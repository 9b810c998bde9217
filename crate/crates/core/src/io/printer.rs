//! Canonical text form: terms descending under the given order, explicit `*`
//! and `^`, coefficients in lowest terms.

use num_traits::{One, Signed};

use crate::algebra::{Monomial, MonomialOrder, Polynomial, Rational, Ring};

pub fn format_monomial(m: &Monomial, ring: &Ring) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                ring.name(i).to_string()
            } else {
                format!("{}^{}", ring.name(i), e)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn format_polynomial(p: &Polynomial, order: &MonomialOrder) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.sorted_terms(order).into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.is_one() {
            out.push_str(&format_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&format_monomial(m, p.ring()));
        } else {
            out.push_str(&format_rational(&abs));
            out.push('*');
            out.push_str(&format_monomial(m, p.ring()));
        }
    }
    out
}
