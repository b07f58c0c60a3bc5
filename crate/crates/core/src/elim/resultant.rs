//! Sylvester resultants and discriminants with caller-chosen formal degrees.
//!
//! When the coefficients are themselves polynomials, the degree in `t` can
//! drop under specialization. Working at a fixed formal degree keeps the
//! result a single polynomial identity in the remaining variables.

use crate::error::{Error, Result};
use crate::linalg::poly_det;
use crate::polyring::{div_exact, var_list, Polynomial, Vars};

/// Variable list with entry `index` removed.
pub(crate) fn without_var(vars: &Vars, index: usize) -> Vars {
    let names: Vec<&str> = vars.iter().enumerate().filter(|(i, _)| *i != index).map(|(_, s)| s.as_str()).collect();
    var_list(&names)
}

fn coeffs_at_formal(p: &Polynomial, t: usize, formal: u32, reduced: &Vars) -> Result<Vec<Polynomial>> {
    let actual = p.degree_in(t);
    if !p.is_zero() && actual > formal {
        return Err(Error::DegreeAboveFormal { actual, formal });
    }
    (0..=formal).map(|k| p.coefficient_in(t, k).with_vars(reduced)).collect()
}

/// Sylvester matrix of `p`, `q` in the variable at index `t`, at formal degrees
/// `dp`, `dq`. Entries live in the ring with `t` removed.
pub fn sylvester_matrix(p: &Polynomial, q: &Polynomial, t: usize, dp: u32, dq: u32) -> Result<Vec<Vec<Polynomial>>> {
    if p.vars() != q.vars() {
        return Err(Error::VariableMismatch);
    }
    if dp == 0 && dq == 0 {
        return Err(Error::DegenerateResultant);
    }
    let reduced = without_var(p.vars(), t);
    let pc = coeffs_at_formal(p, t, dp, &reduced)?;
    let qc = coeffs_at_formal(q, t, dq, &reduced)?;
    let size = (dp + dq) as usize;
    let zero = Polynomial::zero(&reduced);
    let mut rows = Vec::with_capacity(size);
    for shift in 0..dq as usize {
        let mut row = vec![zero.clone(); size];
        for k in 0..=dp as usize {
            row[shift + k] = pc[dp as usize - k].clone();
        }
        rows.push(row);
    }
    for shift in 0..dp as usize {
        let mut row = vec![zero.clone(); size];
        for k in 0..=dq as usize {
            row[shift + k] = qc[dq as usize - k].clone();
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `Res_t(p, q)` at formal degrees `(dp, dq)`; the result is free of `t` and
/// expressed over the variable list with `t` removed.
pub fn resultant_formal(p: &Polynomial, q: &Polynomial, t: usize, dp: u32, dq: u32) -> Result<Polynomial> {
    let m = sylvester_matrix(p, q, t, dp, dq)?;
    let reduced = without_var(p.vars(), t);
    poly_det(&m, &reduced)
}

/// `Res_t(p, q)` at the actual degrees of `p` and `q` in `t`.
pub fn resultant(p: &Polynomial, q: &Polynomial, t: usize) -> Result<Polynomial> {
    resultant_formal(p, q, t, p.degree_in(t), q.degree_in(t))
}

/// `Disc_t(p)` at formal degree `d`: for `d >= 2` this is
/// `(-1)^(d(d-1)/2) Res_t(p, p') / a_d` with `a_d` the coefficient of `t^d`;
/// for `d = 1` it is the constant 1.
pub fn discriminant(p: &Polynomial, t: usize, d: u32) -> Result<Polynomial> {
    let reduced = without_var(p.vars(), t);
    match d {
        0 => Err(Error::InvalidArgument("discriminant needs formal degree at least 1".into())),
        1 => {
            if p.degree_in(t) > 1 {
                return Err(Error::DegreeAboveFormal { actual: p.degree_in(t), formal: 1 });
            }
            Ok(Polynomial::one(&reduced))
        }
        _ => {
            let dp = p.derivative(t);
            let res = resultant_formal(p, &dp, t, d, d - 1)?;
            let lead = p.coefficient_in(t, d).with_vars(&reduced)?;
            if lead.is_zero() {
                return Err(Error::InexactDivision("discriminant: coefficient of t^d is zero"));
            }
            let q = div_exact(&res, &lead).ok_or(Error::InexactDivision("discriminant"))?;
            let sign_negative = (d as u64 * (d as u64 - 1) / 2) % 2 == 1;
            Ok(if sign_negative { -q } else { q })
        }
    }
}
