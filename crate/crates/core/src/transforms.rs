//! Map surgeries: scaling conjugation, variable extension, linear
//! conjugation, translation, the diagonal conjugation of integer
//! cubic-linear maps and the one-variable extension by row sums.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::elim::fresh_names;
use crate::error::{Error, Result};
use crate::keller::{is_keller, CubicLinearForm};
use crate::linalg::{rat_inverse, RatMatrix};
use crate::polyring::{var_list, PolyMap, Polynomial, Rational, Vars};

/// `(1/r) F(r X)`.
pub fn scale_conjugate(map: &PolyMap, r: &Rational) -> Result<PolyMap> {
    if r.is_zero() {
        return Err(Error::ZeroScale);
    }
    if !map.vanishes_at_origin() {
        return Err(Error::NonzeroAtOrigin);
    }
    let comps = map
        .components()
        .iter()
        .map(|f| {
            Polynomial::from_terms(
                f.vars(),
                f.terms().map(|(m, c)| (m.clone(), c * num_traits::pow(r.clone(), m.degree() as usize - 1))),
            )
        })
        .collect();
    PolyMap::new(comps)
}

/// `(F(X), Z)` with `m` fresh variables `z1..zm` appended.
pub fn extend_variables(map: &PolyMap, m: usize) -> Result<PolyMap> {
    if m == 0 {
        return Ok(map.clone());
    }
    let old: Vec<String> = map.vars().to_vec();
    let mut names = old.clone();
    names.extend(fresh_names("z", m, &old));
    let vars = var_list(&names);
    let mut comps = map.with_vars(&vars)?.into_components();
    comps.extend((old.len()..names.len()).map(|i| Polynomial::var_at(&vars, i)));
    PolyMap::new(comps)
}

fn apply_matrix(a: &RatMatrix, comps: &[Polynomial], vars: &Vars) -> Vec<Polynomial> {
    a.iter()
        .map(|row| {
            row.iter().zip(comps).fold(Polynomial::zero(vars), |acc, (c, p)| {
                if c.is_zero() {
                    acc
                } else {
                    &acc + &p.scale(c)
                }
            })
        })
        .collect()
}

/// `A ∘ F ∘ A^{-1}`.
pub fn conjugate_by_linear(map: &PolyMap, a: &RatMatrix) -> Result<PolyMap> {
    map.ensure_square()?;
    if a.len() != map.len() {
        return Err(Error::DimensionMismatch { expected: map.len(), got: a.len() });
    }
    let inv = rat_inverse(a)?;
    let inner = PolyMap::linear(map.vars(), &inv)?;
    let g = map.compose(&inner)?;
    PolyMap::new(apply_matrix(a, g.components(), map.vars()))
}

/// `Z -> F(Z - a) - F(-a)`: the point `-a` moves to the origin and the
/// result vanishes there.
pub fn translate_to_origin(map: &PolyMap, a: &[Rational]) -> Result<PolyMap> {
    if a.len() != map.nvars() {
        return Err(Error::DimensionMismatch { expected: map.nvars(), got: a.len() });
    }
    let vars = map.vars();
    let shift: Vec<Polynomial> = a
        .iter()
        .enumerate()
        .map(|(i, ai)| &Polynomial::var_at(vars, i) - &Polynomial::constant(vars, ai.clone()))
        .collect();
    let minus_a: Vec<Rational> = a.iter().map(|x| -x).collect();
    let fa = map.eval(&minus_a)?;
    let g = map.compose(&PolyMap::new(shift)?)?;
    let comps = g
        .components()
        .iter()
        .zip(fa)
        .map(|(p, c)| p - &Polynomial::constant(vars, c))
        .collect();
    PolyMap::new(comps)
}

/// `T(X) = (v_1 X_1, ..., v_n X_n)` with `v_i = w_i^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalTransform {
    w: Vec<BigInt>,
}

impl DiagonalTransform {
    pub fn new(w: Vec<BigInt>) -> Result<Self> {
        if w.iter().any(Zero::is_zero) {
            return Err(Error::ZeroScale);
        }
        Ok(DiagonalTransform { w })
    }

    pub fn from_i64(w: &[i64]) -> Result<Self> {
        Self::new(w.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.w
    }

    pub fn v(&self) -> Vec<BigInt> {
        self.w.iter().map(|x| x * x * x).collect()
    }

    pub fn delta(&self) -> BigInt {
        self.v().iter().product()
    }
}

fn to_rat(x: &BigInt) -> Rational {
    Rational::from_integer(x.clone())
}

/// Rows `a_i = (w_i^{-1} prod_j w_j^2) (v_1 b_i1, ..., v_n b_in)`, checked
/// against `G(X) = (1/δ) T^{-1}(F(T(δ X)))` by full composition.
pub fn theorem_b_diagonal(form: &CubicLinearForm, t: &DiagonalTransform) -> Result<CubicLinearForm> {
    let n = form.nvars();
    if t.w.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: t.w.len() });
    }
    let b = form
        .integer_rows()
        .ok_or_else(|| Error::InvalidArgument("diagonal conjugation needs integer rows".into()))?;
    let v = t.v();
    let delta = t.delta();
    let w2: BigInt = t.w.iter().map(|x| x * x).product();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let (c, rem) = w2.div_rem(&t.w[i]);
        if !rem.is_zero() {
            return Err(Error::Internal("row scale is not integral".into()));
        }
        rows.push((0..n).map(|j| to_rat(&(&c * &v[j] * &b[i][j]))).collect());
    }
    let out = CubicLinearForm::new(form.vars(), rows)?;

    let vars = form.vars();
    let inner: Vec<Polynomial> =
        (0..n).map(|j| Polynomial::var_at(vars, j).scale(&to_rat(&(&v[j] * &delta)))).collect();
    let composed = form.to_map().compose(&PolyMap::new(inner)?)?;
    let g: Vec<Polynomial> = composed
        .components()
        .iter()
        .enumerate()
        .map(|(i, p)| p.scale(&to_rat(&(&v[i] * &delta)).recip()))
        .collect();
    if PolyMap::new(g)? != out.to_map() {
        return Err(Error::Internal("closed row formula disagrees with the defining composition".into()));
    }
    if !out.is_integral() {
        return Err(Error::Internal("diagonal conjugation produced non-integral rows".into()));
    }
    Ok(out)
}

fn extra_var_name(vars: &Vars) -> String {
    let mut name = format!("x{}", vars.len() + 1);
    while vars.iter().any(|v| *v == name) {
        name.push('_');
    }
    name
}

/// The `(n+1)`-variable form with `A'_{i,n+1} = sum_j a_ij` and last row
/// zero, checked against `G_i = F_i(X_1 + X_{n+1}, ..., X_n + X_{n+1}) - X_{n+1}`.
pub fn cor1_extension(form: &CubicLinearForm) -> Result<CubicLinearForm> {
    let n = form.nvars();
    let mut names: Vec<String> = form.vars().to_vec();
    names.push(extra_var_name(form.vars()));
    let vars = var_list(&names);
    let mut rows: RatMatrix = form
        .rows()
        .iter()
        .map(|r| {
            let mut row = r.clone();
            row.push(r.iter().sum());
            row
        })
        .collect();
    rows.push(vec![Rational::zero(); n + 1]);
    let out = CubicLinearForm::new(&vars, rows)?;

    let last = Polynomial::var_at(&vars, n);
    let shift: Vec<Polynomial> = (0..n).map(|j| &Polynomial::var_at(&vars, j) + &last).collect();
    let composed = form.to_map().compose(&PolyMap::new(shift)?)?;
    let mut g: Vec<Polynomial> = composed.components().iter().map(|p| p - &last).collect();
    g.push(last.clone());
    let out_map = out.to_map();
    if PolyMap::new(g)? != out_map {
        return Err(Error::Internal("extension matrix disagrees with the defining composition".into()));
    }
    if is_keller(&form.to_map())? && !is_keller(&out_map)? {
        return Err(Error::Internal("extension lost the Keller property".into()));
    }
    Ok(out)
}

/// `1 + max |s_i|` over nonzero `s` in `S` (1 if `S` has no nonzero vector),
/// so no nonzero element of `S` lies in `r Z^n`.
pub fn choose_clearing_scale(s: &[Vec<BigInt>]) -> BigInt {
    let m = s.iter().flatten().map(BigInt::abs).max().unwrap_or_else(BigInt::zero);
    m + BigInt::one()
}

/// Scales a cubic-linear form over Q to an integral one: with `s` the lcm of
/// the row denominators, `(1/s^3) F(s^3 X)` has rows `s^2 a_i`. Returns `s`
/// and the scaled form, checked against [`scale_conjugate`].
pub fn clear_denominators(form: &CubicLinearForm) -> Result<(BigInt, CubicLinearForm)> {
    let s = form.rows().iter().flatten().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
    let s2 = to_rat(&(&s * &s));
    let rows = form.rows().iter().map(|r| r.iter().map(|a| a * &s2).collect()).collect();
    let out = CubicLinearForm::new(form.vars(), rows)?;
    let scaled = scale_conjugate(&form.to_map(), &to_rat(&(&s * &s * &s)))?;
    if scaled != out.to_map() {
        return Err(Error::Internal("denominator clearing disagrees with scale conjugation".into()));
    }
    Ok((s, out))
}
