//! Sparse multivariate polynomials over Q.
//!
//! A [`Polynomial`] carries its ordered variable list and a map from exponent
//! vectors to nonzero rational coefficients. Polynomials over different
//! variable lists never mix: the fallible `try_*` operations report a
//! [`Error::VariableMismatch`], the operator impls panic. Use
//! [`Polynomial::with_vars`] to move a polynomial into a larger ring.

mod gcd;
mod map;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use gcd::{content_in, div_exact, gcd, pseudo_remainder};
pub use map::{PolyMap, Substituter};

pub type Rational = BigRational;

/// Shared, ordered variable list.
pub type Vars = Arc<[String]>;

pub fn var_list<S: AsRef<str>>(names: &[S]) -> Vars {
    names.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().into()
}

/// Variables `prefix1..prefixN`.
pub fn indexed_vars(prefix: &str, n: usize) -> Vars {
    let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
    var_list(&names)
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector, one entry per declared variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0[index]
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// True if `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&divisor.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub(crate) fn set_exponent(&mut self, index: usize, e: u32) {
        self.0[index] = e;
    }

    /// Graded lexicographic comparison (total degree first, then lex).
    pub fn grlex_cmp(&self, other: &Monomial) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Sparse polynomial with rational coefficients; no stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &Vars) -> Self {
        Polynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self> {
        let i = index_of(vars, name)?;
        Ok(Self::var_at(vars, i))
    }

    pub fn var_at(vars: &Vars, index: usize) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::var(vars.len(), index), Rational::one());
        p
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), vars.len(), "monomial arity");
        let mut p = Self::zero(vars);
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial by summing the given terms.
    pub fn from_terms<I>(vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), vars.len(), "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        index_of(&self.vars, name)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial, `None` when a variable occurs.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one(self.nvars())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(index)).max().unwrap_or(0)
    }

    /// Indices of variables with a nonzero exponent in some term.
    pub fn occurring_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.terms.keys().any(|m| m.exponent(i) > 0)).collect()
    }

    /// Leading term under lex order with the declared variable order.
    pub fn lex_leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Least common multiple of the coefficient denominators (1 for zero).
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        match op {
            ArithOp::Add => self.try_add(other),
            ArithOp::Sub => self.try_sub(other),
            ArithOp::Mul => self.try_mul(other),
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        Ok(self.mul_impl(other, None))
    }

    /// Product with every term of total degree above `max_degree` dropped.
    pub fn mul_truncated(&self, other: &Polynomial, max_degree: u32) -> Polynomial {
        self.check_vars(other).expect("variable lists differ");
        self.mul_impl(other, Some(max_degree))
    }

    fn mul_impl(&self, other: &Polynomial, cap: Option<u32>) -> Polynomial {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            for (mb, cb) in &other.terms {
                if let Some(cap) = cap {
                    if da + mb.degree() > cap {
                        continue;
                    }
                }
                let m = ma.mul(mb);
                let c = ca * cb;
                *acc.entry(m).or_insert_with(Rational::zero) += c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Polynomial { vars: self.vars.clone(), terms: acc }
    }

    /// Drops all terms of total degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() <= max_degree);
        Polynomial { vars: self.vars.clone(), terms: terms.map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { vars: self.vars.clone(), terms }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.mul(mono), a * c)).collect();
        Polynomial { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), got: point.len() });
        }
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Replaces every occurring variable by its bound image. Images must
    /// share one variable list, which becomes the variable list of the result.
    pub fn substitute(&self, bindings: &HashMap<String, Polynomial>) -> Result<Polynomial> {
        let occurring = self.occurring_vars();
        let target = match bindings.values().next() {
            Some(p) => p.vars.clone(),
            None => {
                if let Some(&i) = occurring.first() {
                    return Err(Error::UnboundVariable(self.vars[i].clone()));
                }
                return Ok(self.clone());
            }
        };
        if bindings.values().any(|p| p.vars != target) {
            return Err(Error::VariableMismatch);
        }
        let mut images = Vec::with_capacity(self.nvars());
        for (i, name) in self.vars.iter().enumerate() {
            match bindings.get(name) {
                Some(p) => images.push(p.clone()),
                None if occurring.contains(&i) => return Err(Error::UnboundVariable(name.clone())),
                None => images.push(Polynomial::zero(&target)),
            }
        }
        Ok(Substituter::new(&target, images).apply(self))
    }

    /// Formal partial derivative with respect to the variable at `index`.
    pub fn derivative(&self, index: usize) -> Polynomial {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exponent(index);
            if e > 0 {
                let mut dm = m.clone();
                dm.set_exponent(index, e - 1);
                out.add_term(dm, c * rat(e as i64));
            }
        }
        out
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial> {
        Ok(self.derivative(self.var_index(var)?))
    }

    /// Homogeneous components in strictly increasing degree order.
    pub fn homogeneous_components(&self) -> Vec<(u32, Polynomial)> {
        let mut by_degree: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_degree
                .entry(m.degree())
                .or_insert_with(|| Self::zero(&self.vars))
                .terms
                .insert(m.clone(), c.clone());
        }
        by_degree.into_iter().collect()
    }

    pub fn homogeneous_component(&self, degree: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == degree);
        Polynomial { vars: self.vars.clone(), terms: terms.map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// Highest-degree homogeneous component.
    pub fn leading_form(&self) -> Result<Polynomial> {
        let d = self.total_degree().ok_or(Error::ZeroPolynomial("leading form"))?;
        Ok(self.homogeneous_component(d))
    }

    /// Generator of the radical of `(self)`, normalized by
    /// [`Polynomial::primitive_normalized`].
    pub fn squarefree_part(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("squarefree part"));
        }
        let mut g = self.clone();
        for i in self.occurring_vars() {
            if g.is_constant() {
                break;
            }
            g = gcd(&g, &self.derivative(i));
        }
        let q = div_exact(self, &g).ok_or(Error::InexactDivision("squarefree part"))?;
        Ok(q.primitive_normalized())
    }

    /// Scalar multiple with integer coefficients of content 1 and a positive
    /// lex-leading coefficient. The zero polynomial is returned unchanged.
    pub fn primitive_normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let den = self.denominator_lcm();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let v = c.numer() * (&den / c.denom());
            num_gcd = num_gcd.gcd(&v);
        }
        let mut factor = Rational::new(den, num_gcd);
        if self.lex_leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Monic under lex order with the declared variable order.
    pub fn monic(&self) -> Polynomial {
        match self.lex_leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Coefficients with respect to the variable at `index`: entry `k` is the
    /// coefficient of `x^k`, a polynomial in the same ring free of `x`.
    pub fn coefficients_in(&self, index: usize) -> Vec<Polynomial> {
        let d = self.degree_in(index) as usize;
        let mut out = vec![Self::zero(&self.vars); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            let e = m.exponent(index) as usize;
            let mut mm = m.clone();
            mm.set_exponent(index, 0);
            out[e].terms.insert(mm, c.clone());
        }
        out
    }

    /// Coefficient of `x^k` where `x` is the variable at `index`.
    pub fn coefficient_in(&self, index: usize, k: u32) -> Polynomial {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.exponent(index) == k {
                let mut mm = m.clone();
                mm.set_exponent(index, 0);
                out.terms.insert(mm, c.clone());
            }
        }
        out
    }

    /// Re-expresses the polynomial over `vars`, matching variables by name.
    pub fn with_vars(&self, vars: &Vars) -> Result<Polynomial> {
        if *vars == self.vars {
            return Ok(Polynomial { vars: vars.clone(), terms: self.terms.clone() });
        }
        let mut pos = vec![None; self.nvars()];
        for i in self.occurring_vars() {
            pos[i] = Some(index_of(vars, &self.vars[i])?);
        }
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &k) in m.exponents().iter().enumerate() {
                if k > 0 {
                    e[pos[i].expect("occurring variable")] += k;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Renames variables positionally; `vars` must have the same length.
    pub fn rename_vars(&self, vars: &Vars) -> Result<Polynomial> {
        if vars.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), got: vars.len() });
        }
        Ok(Polynomial { vars: vars.clone(), terms: self.terms.clone() })
    }
}

pub(crate) fn index_of(vars: &Vars, name: &str) -> Result<usize> {
    vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr_io::print_polynomial(self))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect("variable lists differ")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$try(&rhs).expect("variable lists differ")
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$try(rhs).expect("variable lists differ")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { vars: self.vars.clone(), terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Vars {
        var_list(&["x", "y"])
    }

    fn p(s: &str, vars: &Vars) -> Polynomial {
        crate::expr_io::parse_polynomial(s, vars).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let v = xy();
        assert_eq!(p("x+y", &v) * p("x-y", &v), p("x^2 - y^2", &v));
    }

    #[test]
    fn add_zero_is_identity() {
        let v = xy();
        let a = p("x + y^3", &v);
        assert_eq!(a.try_add(&Polynomial::zero(&v)).unwrap(), a);
    }

    #[test]
    fn cube_by_repeated_distribution() {
        let v = xy();
        let a = p("x + y^3", &v);
        let cube = &(&a * &a) * &a;
        // (x + y^3)^3 distributed one factor at a time
        let mut expected = Polynomial::zero(&v);
        for i in 0..=3u32 {
            let binom = [1, 3, 3, 1][i as usize];
            expected.add_term(Monomial(vec![3 - i, 3 * i]), rat(binom));
        }
        assert_eq!(cube, expected);
        assert_eq!(cube.num_terms(), 4);
    }

    #[test]
    fn mismatched_vars_error() {
        let a = p("x", &xy());
        let b = p("x", &var_list(&["x", "z"]));
        assert_eq!(a.try_add(&b), Err(Error::VariableMismatch));
        assert_eq!(a.arith(&b, ArithOp::Mul), Err(Error::VariableMismatch));
    }

    #[test]
    fn substitute_constants() {
        let v = xy();
        let empty = var_list::<&str>(&[]);
        let mut b = HashMap::new();
        b.insert("x".to_string(), Polynomial::constant(&empty, rat(2)));
        b.insert("y".to_string(), Polynomial::constant(&empty, rat(1)));
        let r = p("x + y^3", &v).substitute(&b).unwrap();
        assert_eq!(r.constant_value(), Some(rat(3)));
    }

    #[test]
    fn substitute_line() {
        let target = var_list(&["x", "t", "v1"]);
        let mut b = HashMap::new();
        b.insert("x".to_string(), p("x + t*v1", &target));
        let r = p("x", &var_list(&["x"])).substitute(&b).unwrap();
        assert_eq!(r, p("x + t*v1", &target));

        let target = var_list(&["u1", "v1", "t"]);
        let mut b = HashMap::new();
        b.insert("y1".to_string(), p("u1 + t*v1", &target));
        let r = p("y1*(y1 - 1)", &var_list(&["y1"])).substitute(&b).unwrap();
        let t = r.var_index("t").unwrap();
        assert_eq!(r.degree_in(t), 2);
        assert_eq!(r.coefficient_in(t, 2), p("v1^2", &target));
    }

    #[test]
    fn substitute_unbound() {
        let v = xy();
        let mut b = HashMap::new();
        b.insert("x".to_string(), p("x", &v));
        assert_eq!(p("x + y", &v).substitute(&b), Err(Error::UnboundVariable("y".into())));
    }

    #[test]
    fn derivatives() {
        let v = xy();
        assert_eq!(p("x + y^3", &v).partial_derivative("y").unwrap(), p("3*y^2", &v));
        assert!(p("7", &v).partial_derivative("x").unwrap().is_zero());
        assert_eq!(p("x^2*y^3", &v).partial_derivative("x").unwrap(), p("2*x*y^3", &v));
    }

    #[test]
    fn homogeneous_split() {
        let v = xy();
        let comps = p("x + y^3", &v).homogeneous_components();
        assert_eq!(comps, vec![(1, p("x", &v)), (3, p("y^3", &v))]);
        assert!(Polynomial::zero(&v).homogeneous_components().is_empty());
        let comps = p("x^2 + x*y + y^2 + x", &v).homogeneous_components();
        assert_eq!(comps, vec![(1, p("x", &v)), (2, p("x^2 + x*y + y^2", &v))]);
    }

    #[test]
    fn leading_forms() {
        let v = var_list(&["y1", "y2"]);
        assert_eq!(p("y1*y2 - 1", &v).leading_form().unwrap(), p("y1*y2", &v));
        assert_eq!(p("y1", &v).leading_form().unwrap(), p("y1", &v));
        let w = xy();
        assert_eq!(p("x^3 + x^2*y + y", &w).leading_form().unwrap(), p("x^3 + x^2*y", &w));
        assert!(Polynomial::zero(&w).leading_form().is_err());
    }

    #[test]
    fn squarefree_examples() {
        let v = var_list(&["y1", "y2"]);
        assert_eq!(p("y1^2", &v).squarefree_part().unwrap(), p("y1", &v));
        assert_eq!(p("y1*(y1 - 1)", &v).squarefree_part().unwrap(), p("y1^2 - y1", &v));
        assert!(Polynomial::zero(&v).squarefree_part().is_err());
        let w = xy();
        let sq = p("(x+y)^2*(x-y)", &w).squarefree_part().unwrap();
        assert_eq!(sq, p("x^2 - y^2", &w));
    }

    #[test]
    fn squarefree_normalizes_content_and_sign() {
        let w = xy();
        let sq = p("-2/3*(x+y)^3", &w).squarefree_part().unwrap();
        assert_eq!(sq, p("x + y", &w));
    }

    #[test]
    fn with_vars_embeds_by_name() {
        let a = p("x*y + 1", &xy());
        let big = var_list(&["y", "z", "x"]);
        let b = a.with_vars(&big).unwrap();
        assert_eq!(b, p("x*y + 1", &big));
        assert!(a.with_vars(&var_list(&["x"])).is_err());
    }

    #[test]
    fn coefficients_in_variable() {
        let v = xy();
        let c = p("x^2*y + 3*y - x", &v).coefficients_in(1);
        assert_eq!(c, vec![p("-x", &v), p("x^2 + 3", &v)]);
    }
}
