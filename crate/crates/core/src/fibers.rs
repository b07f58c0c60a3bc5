//! Bifurcation data of a dominant map and the generic-line polynomials
//! `D(U, V)`, `R(U, V)` and `σ = D R`, plus the Hurwitz genus checker.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::elim::{
    discriminant, generic_fiber_degree, minimal_poly_with_budget, resultant_formal, target_vars, GroebnerBudget,
};
use crate::error::{Error, Result};
use crate::polyring::{rat, var_list, PolyMap, Polynomial, Rational, Substituter, Vars};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BifurcationData {
    /// `h_i(Y, T)` over `Y1..Yn, T`.
    pub h: Vec<Polynomial>,
    /// Leading coefficients `a_i(Y)` of `h_i` in `T`, over `Y1..Yn`.
    pub a: Vec<Polynomial>,
    /// Squarefree part of `prod a_i`; the constant 1 when `E_F` is empty.
    pub big_h: Polynomial,
    pub cone_form: Option<Polynomial>,
    pub fiber_degree: Option<usize>,
}

impl BifurcationData {
    pub fn is_empty_set(&self) -> bool {
        self.big_h.is_constant()
    }
}

/// An irreducible factor `h_W` of `H` with the polynomials `g_VW` of its
/// restriction data, all over `Y1..Yn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentData {
    pub h_w: Polynomial,
    pub g_list: Vec<Polynomial>,
}

/// The line `{u + t v}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    u: Vec<Rational>,
    v: Vec<Rational>,
}

impl Line {
    pub fn new(u: Vec<Rational>, v: Vec<Rational>) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::DimensionMismatch { expected: u.len(), got: v.len() });
        }
        if v.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(Line { u, v })
    }

    pub fn u(&self) -> &[Rational] {
        &self.u
    }

    pub fn v(&self) -> &[Rational] {
        &self.v
    }

    pub fn dim(&self) -> usize {
        self.u.len()
    }

    pub fn point(&self, t: &Rational) -> Vec<Rational> {
        self.u.iter().zip(&self.v).map(|(a, b)| a + b * t).collect()
    }
}

/// Options for [`bifurcation_data_with`].
#[derive(Clone, Debug)]
pub struct BifurcationOptions {
    pub budget: GroebnerBudget,
    /// Compute `d_F` at a random sample off `E_F`.
    pub fiber_degree: bool,
    pub seed: u64,
}

impl Default for BifurcationOptions {
    fn default() -> Self {
        BifurcationOptions { budget: GroebnerBudget::default(), fiber_degree: true, seed: 0x5eed }
    }
}

pub fn bifurcation_data(map: &PolyMap) -> Result<BifurcationData> {
    bifurcation_data_with(map, &BifurcationOptions::default())
}

pub fn bifurcation_data_with(map: &PolyMap, opts: &BifurcationOptions) -> Result<BifurcationData> {
    map.ensure_square()?;
    let n = map.len();
    let ys = target_vars(n);
    let mut h = Vec::with_capacity(n);
    let mut a = Vec::with_capacity(n);
    for i in 0..n {
        let hi = minimal_poly_with_budget(map, i, &opts.budget)?;
        let ai = hi.coefficient_in(n, hi.degree_in(n)).with_vars(&ys)?;
        h.push(hi);
        a.push(ai);
    }
    let prod = a.iter().fold(Polynomial::one(&ys), |acc, p| &acc * p);
    let big_h = if prod.is_constant() { Polynomial::one(&ys) } else { prod.squarefree_part()? };
    let cone_form = if big_h.is_constant() { None } else { Some(big_h.leading_form()?) };
    let fiber_degree = if opts.fiber_degree { Some(sample_fiber_degree(map, &big_h, opts.seed)?) } else { None };
    Ok(BifurcationData { h, a, big_h, cone_form, fiber_degree })
}

/// `d_F` at a seeded random integer sample with `H(sample) != 0`, resampling
/// when the fiber ideal is not zero-dimensional.
fn sample_fiber_degree(map: &PolyMap, big_h: &Polynomial, seed: u64) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = map.len();
    for attempt in 0..64 {
        let radius = 5 + attempt;
        let sample: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-radius..=radius))).collect();
        if big_h.eval(&sample)?.is_zero() {
            continue;
        }
        match generic_fiber_degree(map, &sample) {
            Ok(d) => return Ok(d),
            Err(Error::NotZeroDimensional) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Internal("no sample off the bifurcation set gave a zero-dimensional fiber".into()))
}

/// Variables `U1..Un, V1..Vn` of the line polynomials.
pub fn line_vars(n: usize) -> Vars {
    let mut names: Vec<String> = (1..=n).map(|i| format!("U{i}")).collect();
    names.extend((1..=n).map(|i| format!("V{i}")));
    var_list(&names)
}

/// `p(U + t V)` over `U1..Un, V1..Vn, t`.
fn along_line(p: &Polynomial) -> Polynomial {
    let n = p.nvars();
    let mut names: Vec<String> = line_vars(n).to_vec();
    names.push("t".into());
    let ring = var_list(&names);
    let t = Polynomial::var_at(&ring, 2 * n);
    let images = (0..n).map(|i| &Polynomial::var_at(&ring, i) + &(&t * &Polynomial::var_at(&ring, n + i))).collect();
    Substituter::new(&ring, images).apply(p)
}

/// `p(V)` over `U1..Un, V1..Vn`.
fn in_direction(p: &Polynomial) -> Polynomial {
    let n = p.nvars();
    let ring = line_vars(n);
    Substituter::new(&ring, (0..n).map(|i| Polynomial::var_at(&ring, n + i)).collect()).apply(p)
}

/// `coneForm(V) * Disc_t(H(U + t V))` at formal degree `deg H`; for
/// `deg H = 1` only the cone factor.
pub fn poly_d(big_h: &Polynomial) -> Result<Polynomial> {
    let d = big_h.total_degree().unwrap_or(0);
    if d == 0 {
        return Err(Error::InvalidArgument("D(U, V) needs a nonconstant H".into()));
    }
    let n = big_h.nvars();
    let cone = in_direction(&big_h.leading_form()?);
    if d == 1 {
        return Ok(cone);
    }
    let disc = discriminant(&along_line(big_h), 2 * n, d)?;
    Ok(&cone * &disc)
}

/// `prod_W prod_VW Res_t(h_W(U + tV), g_VW(U + tV))` at formal degrees
/// `(deg h_W, deg g_VW)`; 1 for an empty list.
pub fn poly_r(components: &[ComponentData], n: usize) -> Result<Polynomial> {
    let ring = line_vars(n);
    let mut acc = Polynomial::one(&ring);
    for c in components {
        if c.h_w.nvars() != n {
            return Err(Error::DimensionMismatch { expected: n, got: c.h_w.nvars() });
        }
        let hl = along_line(&c.h_w);
        let dh = c.h_w.total_degree().unwrap_or(0);
        for g in &c.g_list {
            if g.vars() != c.h_w.vars() {
                return Err(Error::VariableMismatch);
            }
            let dg = g.total_degree().unwrap_or(0);
            let r = resultant_formal(&hl, &along_line(g), 2 * n, dh, dg)?;
            acc = &acc * &r;
        }
    }
    Ok(acc)
}

/// `σ = D R` from precomputed data; the constant 1 when `H = 1`.
pub fn sigma_from_data(data: &BifurcationData, components: &[ComponentData]) -> Result<Polynomial> {
    let n = data.big_h.nvars();
    if data.is_empty_set() {
        return Ok(Polynomial::one(&line_vars(n)));
    }
    for c in components {
        if crate::polyring::div_exact(&data.big_h, &c.h_w.with_vars(data.big_h.vars())?).is_none() {
            return Err(Error::InvalidArgument(format!("component {} does not divide H", c.h_w)));
        }
    }
    Ok(&poly_d(&data.big_h)? * &poly_r(components, n)?)
}

pub fn sigma(map: &PolyMap, components: &[ComponentData]) -> Result<Polynomial> {
    let opts = BifurcationOptions { fiber_degree: false, ..Default::default() };
    sigma_from_data(&bifurcation_data_with(map, &opts)?, components)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum C2Status {
    NonVanishing,
    Vanishing,
    PreconditionViolated(String),
}

/// The two checks `σ(u, V) != 0` and `σ(U, v) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C2Report {
    pub at_u: C2Status,
    pub at_v: C2Status,
}

/// Fixes the `U` block (`first = true`) or the `V` block to `point`.
fn partial_eval(sigma: &Polynomial, point: &[Rational], first: bool) -> Polynomial {
    let n = point.len();
    let ring = sigma.vars().clone();
    let images = (0..2 * n)
        .map(|k| {
            let fixed = if first { k < n } else { k >= n };
            if fixed {
                Polynomial::constant(&ring, point[k % n].clone())
            } else {
                Polynomial::var_at(&ring, k)
            }
        })
        .collect();
    Substituter::new(&ring, images).apply(sigma)
}

pub fn assert_c2(map: &PolyMap, u: &[Rational], v: &[Rational], components: &[ComponentData]) -> Result<C2Report> {
    let n = map.len();
    for x in [u, v] {
        if x.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: x.len() });
        }
    }
    let opts = BifurcationOptions { fiber_degree: false, ..Default::default() };
    let data = bifurcation_data_with(map, &opts)?;
    let s = sigma_from_data(&data, components)?;
    let status = |p: Polynomial| if p.is_zero() { C2Status::Vanishing } else { C2Status::NonVanishing };
    let at_u = if data.big_h.eval(u)?.is_zero() {
        C2Status::PreconditionViolated("H(u) = 0: u lies on the bifurcation set".into())
    } else {
        status(partial_eval(&s, u, true))
    };
    let cone_zero = match &data.cone_form {
        Some(c) => c.eval(v)?.is_zero(),
        None => false,
    };
    let at_v = if cone_zero {
        C2Status::PreconditionViolated("coneForm(v) = 0: v is an asymptotic direction".into())
    } else {
        status(partial_eval(&s, v, false))
    };
    Ok(C2Report { at_u, at_v })
}

/// `g = (2 - 2d + sum (e_a - 1)) / 2` from `2 - 2g = 2d - sum (e_a - 1)`.
pub fn hurwitz_genus(d: u32, local_degrees: &[u32]) -> Result<Rational> {
    if d == 0 {
        return Err(Error::InvalidArgument("covering degree must be at least 1".into()));
    }
    if let Some(e) = local_degrees.iter().find(|&&e| e == 0 || e > d) {
        return Err(Error::InvalidArgument(format!("local degree {e} outside [1, {d}]")));
    }
    let ramification: i64 = local_degrees.iter().map(|&e| e as i64 - 1).sum();
    Ok(Rational::new((2 - 2 * d as i64 + ramification).into(), 2.into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Feasibility {
    pub feasible: bool,
    pub reason: String,
}

/// Checks a branch configuration against the genus relation and the
/// one- and two-branch restrictions. `genus` defaults to the value from
/// [`hurwitz_genus`].
pub fn assertion3_feasible(d: u32, local_degrees: &[u32], genus: Option<&Rational>) -> Result<Feasibility> {
    let computed = hurwitz_genus(d, local_degrees)?;
    let g = genus.cloned().unwrap_or_else(|| computed.clone());
    let verdict = |feasible: bool, reason: String| Ok(Feasibility { feasible, reason });
    if g != computed {
        return verdict(false, format!("genus {g} contradicts the Hurwitz value {computed}"));
    }
    match local_degrees.len() {
        1 if d != 1 || !g.is_zero() => return verdict(false, "n_F=1 forces d=1, g=0".into()),
        2 if !g.is_zero() => return verdict(false, "n_F=2 forces g=0".into()),
        _ => {}
    }
    if !g.is_integer() {
        return verdict(false, format!("non-integral genus {g}"));
    }
    if g.is_negative() {
        return verdict(false, format!("negative genus {g}"));
    }
    verdict(true, format!("consistent: genus {g}"))
}
