//! Keller maps: Jacobian determinant, formal inversion up to a degree cap and
//! recognition of the cubic-linear form `F_i = X_i + <a_i, X>^3`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{poly_det, rat_inverse, RatMatrix};
use crate::polyring::{div_exact, indexed_vars, Monomial, PolyMap, Polynomial, Rational, Substituter, Vars};

pub fn jacobian_det(map: &PolyMap) -> Result<Polynomial> {
    map.ensure_square()?;
    poly_det(&map.jacobian_matrix(), map.vars())
}

/// `JF` is the constant 1.
pub fn is_keller(map: &PolyMap) -> Result<bool> {
    Ok(jacobian_det(map)?.is_one())
}

/// Truncated inverse series of a map fixing the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalInverse {
    pub map: PolyMap,
    pub degree_bound: u32,
    /// `F∘G` is the identity as polynomials, with no truncation.
    pub exact: bool,
}

/// The classical bound `3^(n-1)` on the inverse degree of a cubic Keller map.
pub fn default_degree_cap(n: usize) -> u32 {
    3u32.saturating_pow(n.saturating_sub(1) as u32)
}

/// Iterates `G <- L^{-1}(Y - H(G))` with `F = L + H`, truncating at
/// `degree_cap`, then checks `F∘G = id` by full composition. `G` is expressed
/// over the variables of `F`.
pub fn formal_inverse(map: &PolyMap, degree_cap: u32) -> Result<FormalInverse> {
    map.ensure_square()?;
    if !map.vanishes_at_origin() {
        return Err(Error::NonzeroAtOrigin);
    }
    let vars = map.vars().clone();
    let n = map.len();
    let cap = degree_cap.max(1);
    let lin = map.linear_part();
    let lin_inv = rat_inverse(&lin).map_err(|_| Error::SingularLinearPart)?;
    let higher: Vec<Polynomial> = map
        .components()
        .iter()
        .map(|f| f - &f.homogeneous_component(1))
        .collect();
    let apply_lin_inv = |v: &[Polynomial]| -> Vec<Polynomial> {
        (0..n)
            .map(|i| {
                (0..n).fold(Polynomial::zero(&vars), |acc, j| {
                    if lin_inv[i][j].is_zero() {
                        acc
                    } else {
                        &acc + &v[j].scale(&lin_inv[i][j])
                    }
                })
            })
            .collect()
    };
    let ys: Vec<Polynomial> = (0..n).map(|i| Polynomial::var_at(&vars, i)).collect();
    let mut g = apply_lin_inv(&ys);
    for _ in 1..cap {
        let mut sub = Substituter::new(&vars, g.clone()).truncated(cap);
        let rhs: Vec<Polynomial> = ys.iter().zip(&higher).map(|(y, h)| y - &sub.apply(h).truncate(cap)).collect();
        let next = apply_lin_inv(&rhs);
        if next == g {
            break;
        }
        g = next;
    }
    let inverse = PolyMap::new(g)?;
    let exact = map.compose(&inverse)?.is_identity();
    Ok(FormalInverse { map: inverse, degree_bound: cap, exact })
}

/// `F_i(X) = X_i + (a_i1 X_1 + ... + a_in X_n)^3`, rows `a_i` over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicLinearForm {
    vars: Vars,
    rows: RatMatrix,
}

/// Why a map is not in cubic-linear form; `component` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotCubicLinear {
    pub component: usize,
    pub reason: String,
}

impl fmt::Display for NotCubicLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "component {} is not cubic-linear: {}", self.component, self.reason)
    }
}

impl CubicLinearForm {
    pub fn new(vars: &Vars, rows: RatMatrix) -> Result<Self> {
        let n = vars.len();
        if rows.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: rows.len() });
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: r.len() });
        }
        Ok(CubicLinearForm { vars: vars.clone(), rows })
    }

    /// Integer rows over the variables `x1..xn`.
    pub fn from_integer_rows(rows: &[Vec<BigInt>]) -> Result<Self> {
        let vars = indexed_vars("x", rows.len());
        let rat = rows.iter().map(|r| r.iter().map(|a| Rational::from_integer(a.clone())).collect()).collect();
        Self::new(&vars, rat)
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&a| BigInt::from(a)).collect()).collect();
        Self::from_integer_rows(&big)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn rows(&self) -> &RatMatrix {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.rows[i]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(Rational::is_integer)
    }

    /// Integer rows, if every entry is an integer.
    pub fn integer_rows(&self) -> Option<Vec<Vec<BigInt>>> {
        self.is_integral().then(|| self.rows.iter().map(|r| r.iter().map(|a| a.to_integer()).collect()).collect())
    }

    /// The linear form `<a_i, X>`.
    pub fn linear_form(&self, i: usize) -> Polynomial {
        let n = self.nvars();
        Polynomial::from_terms(
            &self.vars,
            self.rows[i].iter().enumerate().map(|(j, a)| (Monomial::var(n, j), a.clone())),
        )
    }

    pub fn to_map(&self) -> PolyMap {
        let comps =
            (0..self.nvars()).map(|i| &Polynomial::var_at(&self.vars, i) + &self.linear_form(i).pow(3)).collect();
        PolyMap::new(comps).expect("square and nonempty")
    }
}

fn rational_cbrt(q: &Rational) -> Option<Rational> {
    let root = |n: &BigInt| {
        let r = n.cbrt();
        (&r * &r * &r == *n).then_some(r)
    };
    Some(Rational::new(root(q.numer())?, root(q.denom())?))
}

fn cube_root_of_linear_cube(r: &Polynomial) -> std::result::Result<Polynomial, String> {
    if r.is_zero() {
        return Ok(r.clone());
    }
    if !r.is_homogeneous() || r.total_degree() != Some(3) {
        return Err("remainder after subtracting the coordinate is not a cubic form".into());
    }
    let n = r.nvars();
    let (lead, c3) = r.lex_leading().expect("nonzero");
    let j = match (0..n).find(|&k| lead.exponent(k) == 3) {
        Some(j) => j,
        None => return Err("leading term is not a pure cube".into()),
    };
    let cj = rational_cbrt(c3).ok_or_else(|| format!("leading coefficient {c3} is not a rational cube"))?;
    let three_cj2 = Rational::from_integer(3.into()) * &cj * &cj;
    let mut terms = vec![(Monomial::var(n, j), cj)];
    for k in 0..n {
        if k == j {
            continue;
        }
        let mut e = vec![0u32; n];
        e[j] = 2;
        e[k] = 1;
        let coef = r.coefficient(&Monomial::from_exponents(e));
        if !coef.is_zero() {
            terms.push((Monomial::var(n, k), coef / &three_cj2));
        }
    }
    let c = Polynomial::from_terms(r.vars(), terms);
    let not_cube = || "not the cube of a linear form".to_string();
    let q1 = div_exact(r, &c).ok_or_else(not_cube)?;
    let q2 = div_exact(&q1, &c).ok_or_else(not_cube)?;
    let q3 = div_exact(&q2, &c).ok_or_else(not_cube)?;
    if !q3.is_one() {
        return Err(not_cube());
    }
    Ok(c)
}

/// Recognizes `F_i = X_i + c_i^3` with `c_i` linear over Q.
pub fn as_cubic_linear(map: &PolyMap) -> std::result::Result<CubicLinearForm, NotCubicLinear> {
    let n = map.nvars();
    if !map.is_square() {
        return Err(NotCubicLinear {
            component: map.len().min(n) + 1,
            reason: format!("{} components in {} variables", map.len(), n),
        });
    }
    let mut rows = Vec::with_capacity(n);
    for (i, f) in map.components().iter().enumerate() {
        let r = f - &Polynomial::var_at(map.vars(), i);
        let c = cube_root_of_linear_cube(&r).map_err(|reason| NotCubicLinear { component: i + 1, reason })?;
        rows.push((0..n).map(|j| c.coefficient(&Monomial::var(n, j))).collect());
    }
    Ok(CubicLinearForm { vars: map.vars().clone(), rows })
}
