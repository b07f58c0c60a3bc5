//! Multivariate gcd over Q via recursive subresultant PRS.
//!
//! Fine for desk-scale inputs (total degree around 12, a handful of
//! variables); coefficient growth makes it slow well beyond that.

use super::{Monomial, Polynomial, Rational};

/// Exact quotient `a / b`, or `None` when `b` does not divide `a`.
pub fn div_exact(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    assert_eq!(a.vars(), b.vars(), "variable lists differ");
    let (lm_b, lc_b) = b.lex_leading()?;
    let lm_b = lm_b.clone();
    let lc_b_inv = lc_b.recip();
    let mut r = a.clone();
    let mut q = Polynomial::zero(a.vars());
    while let Some((lm, lc)) = r.lex_leading() {
        let m = lm.checked_div(&lm_b)?;
        let c = lc * &lc_b_inv;
        r = &r - &b.mul_monomial(&m, &c);
        q.add_term(m, c);
    }
    Some(q)
}

/// Pseudo-remainder of `a` by `b` with respect to the variable at `index`:
/// `lc(b)^(deg a - deg b + 1) * a` reduced modulo `b`.
pub fn pseudo_remainder(a: &Polynomial, b: &Polynomial, index: usize) -> Polynomial {
    let db = b.degree_in(index);
    let da = a.degree_in(index);
    if a.is_zero() || da < db {
        return a.clone();
    }
    let lc_b = b.coefficient_in(index, db);
    let mut e = da - db + 1;
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(index) >= db {
        let dr = r.degree_in(index);
        let lc_r = r.coefficient_in(index, dr);
        let shift = Polynomial::monomial(
            a.vars(),
            x_power(a.nvars(), index, dr - db),
            Rational::from_integer(1.into()),
        );
        r = &(&lc_b * &r) - &(&(&lc_r * &shift) * b);
        e -= 1;
    }
    &lc_b.pow(e) * &r
}

fn x_power(nvars: usize, index: usize, e: u32) -> Monomial {
    let mut m = Monomial::one(nvars);
    m.set_exponent(index, e);
    m
}

/// Content of `p` viewed as a polynomial in the variable at `index`.
pub fn content_in(p: &Polynomial, index: usize) -> Polynomial {
    let mut g = Polynomial::zero(p.vars());
    for c in p.coefficients_in(index) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() {
            break;
        }
    }
    g
}

/// Greatest common divisor, normalized to integer content 1 with a positive
/// lex-leading coefficient.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    assert_eq!(a.vars(), b.vars(), "variable lists differ");
    if a.is_zero() {
        return b.primitive_normalized();
    }
    if b.is_zero() {
        return a.primitive_normalized();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(a.vars());
    }
    let va = a.occurring_vars();
    let vb = b.occurring_vars();
    // A variable present in only one operand can be stripped via the content.
    if let Some(&i) = va.iter().find(|i| !vb.contains(i)) {
        return gcd(&content_in(a, i), b);
    }
    if let Some(&i) = vb.iter().find(|i| !va.contains(i)) {
        return gcd(a, &content_in(b, i));
    }
    let x = *va
        .iter()
        .min_by_key(|&&i| (a.degree_in(i) + b.degree_in(i), i))
        .expect("nonconstant operand");

    let ca = content_in(a, x);
    let cb = content_in(b, x);
    let pa = div_exact(a, &ca).expect("content divides");
    let pb = div_exact(b, &cb).expect("content divides");
    let c = gcd(&ca, &cb);
    let g = subresultant_last(&pa, &pb, x);
    let prim = if g.degree_in(x) == 0 {
        Polynomial::one(a.vars())
    } else {
        div_exact(&g, &content_in(&g, x)).expect("content divides")
    };
    (&c * &prim).primitive_normalized()
}

/// Last nonzero element of the subresultant PRS of `a`, `b` in `x`; a
/// constant (in `x`) result means the primitive parts are coprime.
fn subresultant_last(a: &Polynomial, b: &Polynomial, x: usize) -> Polynomial {
    let (mut a, mut b) = if a.degree_in(x) >= b.degree_in(x) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let vars = a.vars().clone();
    let mut g = Polynomial::one(&vars);
    let mut h = Polynomial::one(&vars);
    loop {
        let d = a.degree_in(x) - b.degree_in(x);
        let r = pseudo_remainder(&a, &b, x);
        if r.is_zero() {
            return b;
        }
        if r.degree_in(x) == 0 {
            return Polynomial::one(&vars);
        }
        let divisor = &g * &h.pow(d);
        a = b;
        b = div_exact(&r, &divisor).expect("subresultant division is exact");
        g = a.coefficient_in(x, a.degree_in(x));
        h = match d {
            0 => h,
            1 => g.clone(),
            _ => div_exact(&g.pow(d), &h.pow(d - 1)).expect("subresultant division is exact"),
        };
    }
}
