use std::cmp::Ordering;
use std::fmt::Write;

use num_traits::{One, Signed};

use crate::polyring::{Monomial, Polynomial, Rational};

/// Display order: increasing total degree, lexicographically descending
/// within one degree (so `x^2` precedes `x*y` precedes `y^2`).
pub fn display_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.exponents().cmp(a.exponents()))
}

fn write_monomial(out: &mut String, vars: &[String], m: &Monomial) {
    let mut first = true;
    for (name, &e) in vars.iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(name);
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
}

pub fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text form; `parse_polynomial(print_polynomial(p)) == p`.
pub fn print_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| display_cmp(a.0, b.0));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.is_one() {
            out.push_str(&format_rational(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&format_rational(&abs));
                out.push('*');
            }
            write_monomial(&mut out, p.vars(), m);
        }
    }
    out
}
