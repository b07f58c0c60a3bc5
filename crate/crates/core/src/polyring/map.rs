use super::{Polynomial, Rational, Vars};
use crate::error::{Error, Result};

/// Substitutes polynomial images for variables, caching powers of each image
/// so that repeated use (e.g. composing all components of a map) stays cheap.
pub struct Substituter {
    target: Vars,
    images: Vec<Polynomial>,
    powers: Vec<Vec<Polynomial>>,
    cap: Option<u32>,
}

impl Substituter {
    /// `images[i]` replaces variable `i` of the source ring.
    pub fn new(target: &Vars, images: Vec<Polynomial>) -> Self {
        let powers = images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        Substituter { target: target.clone(), images, powers, cap: None }
    }

    /// Drops every term above `max_degree` in intermediate products.
    pub fn truncated(mut self, max_degree: u32) -> Self {
        self.cap = Some(max_degree);
        self
    }

    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        match self.cap {
            Some(c) => a.mul_truncated(b, c),
            None => a * b,
        }
    }

    fn power(&mut self, var: usize, e: u32) -> Polynomial {
        let e = e as usize;
        while self.powers[var].len() <= e {
            let last = self.powers[var].last().expect("nonempty");
            let next = self.mul(last, &self.images[var]);
            self.powers[var].push(next);
        }
        self.powers[var][e].clone()
    }

    pub fn apply(&mut self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.nvars(), self.images.len(), "substitution arity");
        let mut out = Polynomial::zero(&self.target);
        for (m, c) in p.terms() {
            let mut t = Polynomial::constant(&self.target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    let pw = self.power(i, e);
                    t = self.mul(&t, &pw);
                    if t.is_zero() {
                        break;
                    }
                }
            }
            out = &out + &t;
        }
        out
    }
}

/// An n-tuple of polynomials over one shared variable list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    vars: Vars,
    components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::InvalidArgument("a map needs at least one component".into()))?;
        let vars = first.vars().clone();
        if components.iter().any(|c| *c.vars() != vars) {
            return Err(Error::VariableMismatch);
        }
        Ok(PolyMap { vars, components })
    }

    pub fn identity(vars: &Vars) -> Self {
        let components = (0..vars.len()).map(|i| Polynomial::var_at(vars, i)).collect();
        PolyMap { vars: vars.clone(), components }
    }

    /// The linear map `X -> M X` for a square or rectangular rational matrix.
    pub fn linear(vars: &Vars, matrix: &[Vec<Rational>]) -> Result<Self> {
        let mut components = Vec::with_capacity(matrix.len());
        for row in matrix {
            if row.len() != vars.len() {
                return Err(Error::DimensionMismatch { expected: vars.len(), got: row.len() });
            }
            let mut p = Polynomial::zero(vars);
            for (j, a) in row.iter().enumerate() {
                p = &p + &Polynomial::var_at(vars, j).scale(a);
            }
            components.push(p);
        }
        PolyMap::new(components)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn is_square(&self) -> bool {
        self.len() == self.nvars()
    }

    pub fn ensure_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { components: self.len(), variables: self.nvars() })
        }
    }

    pub fn degree(&self) -> u32 {
        self.components.iter().filter_map(Polynomial::total_degree).max().unwrap_or(0)
    }

    pub fn is_integral(&self) -> bool {
        self.components.iter().all(Polynomial::is_integral)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        self.components.iter().map(|c| c.eval(point)).collect()
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.components.iter().all(|c| c.constant_term() == Rational::from_integer(0.into()))
    }

    /// `self ∘ inner`: substitutes the components of `inner` for the variables of `self`.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap> {
        if inner.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), got: inner.len() });
        }
        let mut sub = Substituter::new(&inner.vars, inner.components.clone());
        let components = self.components.iter().map(|c| sub.apply(c)).collect();
        Ok(PolyMap { vars: inner.vars.clone(), components })
    }

    /// Composition truncated at total degree `max_degree`.
    pub fn compose_truncated(&self, inner: &PolyMap, max_degree: u32) -> Result<PolyMap> {
        if inner.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), got: inner.len() });
        }
        let mut sub = Substituter::new(&inner.vars, inner.components.clone()).truncated(max_degree);
        let components = self.components.iter().map(|c| sub.apply(c).truncate(max_degree)).collect();
        Ok(PolyMap { vars: inner.vars.clone(), components })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == PolyMap::identity(&self.vars)
    }

    /// Re-expresses every component over `vars` (matched by name).
    pub fn with_vars(&self, vars: &Vars) -> Result<PolyMap> {
        let components = self.components.iter().map(|c| c.with_vars(vars)).collect::<Result<Vec<_>>>()?;
        Ok(PolyMap { vars: vars.clone(), components })
    }

    /// The matrix of partial derivatives, row `i` holding the gradient of component `i`.
    pub fn jacobian_matrix(&self) -> Vec<Vec<Polynomial>> {
        self.components.iter().map(|c| (0..self.nvars()).map(|j| c.derivative(j)).collect()).collect()
    }

    /// Linear part `DF(0)` as a rational matrix.
    pub fn linear_part(&self) -> Vec<Vec<Rational>> {
        let n = self.nvars();
        self.components
            .iter()
            .map(|c| {
                (0..n).map(|j| c.coefficient(&super::Monomial::var(n, j))).collect()
            })
            .collect()
    }
}
