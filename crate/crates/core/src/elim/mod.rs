//! Gröbner bases over Q, elimination, minimal polynomials of coordinates,
//! fiber counting, and resultants/discriminants.

mod groebner;
mod order;
mod resultant;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::polyring::{indexed_vars, var_list, Monomial, PolyMap, Polynomial, Rational, Vars};

pub use groebner::GroebnerBudget;
pub use order::{OrderKind, TermOrder};
pub use resultant::{discriminant, resultant, resultant_formal, sylvester_matrix};

/// Finitely generated ideal of `Q[vars]`. The zero ideal is represented by
/// the single generator 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    vars: Vars,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(generators: Vec<Polynomial>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::InvalidArgument("an ideal needs at least one generator".into()))?;
        let vars = first.vars().clone();
        if generators.iter().any(|g| *g.vars() != vars) {
            return Err(Error::VariableMismatch);
        }
        Ok(Ideal { vars, generators })
    }

    pub fn zero(vars: &Vars) -> Self {
        Ideal { vars: vars.clone(), generators: vec![Polynomial::zero(vars)] }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    fn nonzero(&self) -> Vec<Polynomial> {
        self.generators.iter().filter(|g| !g.is_zero()).cloned().collect()
    }
}

/// Reduced Gröbner basis with the default budget.
pub fn groebner(ideal: &Ideal, order: &TermOrder) -> Result<Ideal> {
    groebner_with_budget(ideal, order, &GroebnerBudget::default())
}

pub fn groebner_with_budget(ideal: &Ideal, order: &TermOrder, budget: &GroebnerBudget) -> Result<Ideal> {
    if order.nvars() != ideal.vars.len() {
        return Err(Error::DimensionMismatch { expected: ideal.vars.len(), got: order.nvars() });
    }
    let gens = ideal.nonzero();
    if gens.is_empty() {
        return Ok(Ideal::zero(&ideal.vars));
    }
    let basis = groebner::buchberger(&gens, &ideal.vars, order, budget)?;
    Ok(Ideal { vars: ideal.vars.clone(), generators: basis })
}

/// Normal form of `f` modulo `basis` (a Gröbner basis for membership tests).
pub fn reduce(f: &Polynomial, basis: &Ideal, order: &TermOrder) -> Result<Polynomial> {
    if f.vars() != basis.vars() {
        return Err(Error::VariableMismatch);
    }
    groebner::reduce_polynomial(f, &basis.nonzero(), order)
}

/// S-polynomial of `f` and `g` under `order`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Polynomial {
    groebner::s_poly(f, g, order)
}

pub fn leading_monomial(p: &Polynomial, order: &TermOrder) -> Option<Monomial> {
    groebner::leading_monomial(p, order)
}

/// Generators of `I ∩ Q[keep]`, expressed over `keep` (in the order given).
pub fn eliminate(ideal: &Ideal, keep: &[&str]) -> Result<Ideal> {
    eliminate_with_budget(ideal, keep, &GroebnerBudget::default())
}

pub fn eliminate_with_budget(ideal: &Ideal, keep: &[&str], budget: &GroebnerBudget) -> Result<Ideal> {
    let vars = ideal.vars();
    let keep_idx = keep
        .iter()
        .map(|k| vars.iter().position(|v| v == k).ok_or_else(|| Error::UnknownVariable(k.to_string())))
        .collect::<Result<Vec<_>>>()?;
    let elim_idx: Vec<usize> = (0..vars.len()).filter(|i| !keep_idx.contains(i)).collect();
    let mut perm = elim_idx.clone();
    perm.extend(&keep_idx);
    let order = TermOrder::block(perm, elim_idx.len())?;
    let gb = groebner_with_budget(ideal, &order, budget)?;
    let keep_vars = var_list(keep);
    let mut out = Vec::new();
    for g in gb.nonzero() {
        let occ = g.occurring_vars();
        if occ.iter().all(|i| keep_idx.contains(i)) {
            out.push(g.with_vars(&keep_vars)?);
        }
    }
    if out.is_empty() {
        return Ok(Ideal::zero(&keep_vars));
    }
    Ideal::new(out)
}

/// Names `prefix1..prefixN`, suffixed with `_` until none collides with `avoid`.
pub(crate) fn fresh_names(prefix: &str, n: usize, avoid: &[String]) -> Vec<String> {
    let mut suffix = String::new();
    loop {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}{suffix}")).collect();
        if names.iter().all(|s| !avoid.contains(s)) {
            return names;
        }
        suffix.push('_');
    }
}

/// Variable names `Y1..Yn` used for the target coordinates of a map.
pub fn target_vars(n: usize) -> Vars {
    indexed_vars("Y", n)
}

/// Variable list `Y1..Yn, T` of the minimal polynomials `h_i(Y, T)`.
pub fn minimal_poly_vars(n: usize) -> Vars {
    let mut names: Vec<String> = (1..=n).map(|i| format!("Y{i}")).collect();
    names.push("T".into());
    var_list(&names)
}

/// The graph ideal `<F_1(X) - Y_1, ..., F_n(X) - Y_n>` over `X ∪ Y`; returns
/// the ideal and the names used for `Y`.
pub fn graph_ideal(map: &PolyMap) -> Result<(Ideal, Vec<String>)> {
    let xs: Vec<String> = map.vars().to_vec();
    let ys = fresh_names("Y", map.len(), &xs);
    let mut all = xs.clone();
    all.extend(ys.iter().cloned());
    let ring = var_list(&all);
    let mut gens = Vec::with_capacity(map.len());
    for (i, f) in map.components().iter().enumerate() {
        let y = Polynomial::var_at(&ring, xs.len() + i);
        gens.push(&f.with_vars(&ring)? - &y);
    }
    Ok((Ideal::new(gens)?, ys))
}

/// `h_i(Y, T)`: squarefree generator of the elimination ideal
/// `<F(X) - Y> ∩ Q[Y, X_i]` with `X_i` renamed `T`, integer content 1, signed
/// so that the leading coefficient in `T` has a positive lex-leading term.
/// `index` is 0-based. The result lives over [`minimal_poly_vars`].
pub fn minimal_poly_of_coordinate(map: &PolyMap, index: usize) -> Result<Polynomial> {
    minimal_poly_with_budget(map, index, &GroebnerBudget::default())
}

pub fn minimal_poly_with_budget(map: &PolyMap, index: usize, budget: &GroebnerBudget) -> Result<Polynomial> {
    map.ensure_square()?;
    let n = map.len();
    if index >= n {
        return Err(Error::DimensionMismatch { expected: n, got: index + 1 });
    }
    let (ideal, ys) = graph_ideal(map)?;
    let xi = map.vars()[index].clone();
    let mut keep: Vec<&str> = ys.iter().map(String::as_str).collect();
    keep.push(&xi);
    let elim = eliminate_with_budget(&ideal, &keep, budget)?;
    // a relation among the Y alone means F(X) lies in a hypersurface
    if elim.is_zero() || elim.generators().iter().any(|g| g.degree_in(n) == 0) {
        return Err(Error::NonDominant(index + 1));
    }
    if elim.generators().len() != 1 {
        return Err(Error::NotPrincipal { coordinate: index + 1, generators: elim.generators().len() });
    }
    let h = elim.generators()[0].rename_vars(&minimal_poly_vars(n))?.squarefree_part()?;
    let lead = h.coefficient_in(n, h.degree_in(n));
    Ok(if lead.lex_leading().is_some_and(|(_, c)| c.is_negative()) { -h } else { h })
}

/// Number of points (with multiplicity) of the fiber `F^{-1}(sample)`: the
/// number of standard monomials of a lex Gröbner basis of `<F_i(X) - sample_i>`.
pub fn generic_fiber_degree(map: &PolyMap, sample: &[Rational]) -> Result<usize> {
    map.ensure_square()?;
    if sample.len() != map.len() {
        return Err(Error::DimensionMismatch { expected: map.len(), got: sample.len() });
    }
    let vars = map.vars();
    let gens = map
        .components()
        .iter()
        .zip(sample)
        .map(|(f, s)| f - &Polynomial::constant(vars, s.clone()))
        .collect();
    let order = TermOrder::lex(vars.len());
    let gb = groebner(&Ideal::new(gens)?, &order)?;
    if gb.is_zero() {
        return Err(Error::NotZeroDimensional);
    }
    let lms: Vec<Monomial> = gb
        .generators()
        .iter()
        .map(|g| leading_monomial(g, &order).expect("nonzero basis element"))
        .collect();
    if lms.iter().any(Monomial::is_one) {
        return Ok(0);
    }
    let n = vars.len();
    let mut bounds = Vec::with_capacity(n);
    for v in 0..n {
        let pure = lms
            .iter()
            .filter(|m| (0..n).all(|k| k == v || m.exponent(k) == 0))
            .map(|m| m.exponent(v))
            .min();
        bounds.push(pure.ok_or(Error::NotZeroDimensional)?);
    }
    Ok(count_standard_monomials(&lms, &bounds))
}

fn count_standard_monomials(lms: &[Monomial], bounds: &[u32]) -> usize {
    let n = bounds.len();
    let mut exps = vec![0u32; n];
    let mut count = 0;
    loop {
        let m = Monomial::from_exponents(exps.clone());
        if !lms.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            exps[k] += 1;
            if exps[k] < bounds[k] {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr_io::parse_polynomial;
    use crate::polyring::rat;

    fn map(vars: &[&str], comps: &[&str]) -> PolyMap {
        let v = var_list(vars);
        PolyMap::new(comps.iter().map(|c| parse_polynomial(c, &v).unwrap()).collect()).unwrap()
    }

    fn ideal(vars: &Vars, gens: &[&str]) -> Ideal {
        Ideal::new(gens.iter().map(|g| parse_polynomial(g, vars).unwrap()).collect()).unwrap()
    }

    #[test]
    fn linear_system_basis() {
        let v = var_list(&["x", "y"]);
        let gb = groebner(&ideal(&v, &["x - 1", "y - x"]), &TermOrder::lex(2)).unwrap();
        let mut gens: Vec<String> = gb.generators().iter().map(|g| g.to_string()).collect();
        gens.sort();
        assert_eq!(gens, vec!["-1 + x", "-1 + y"]);
    }

    #[test]
    fn monomial_ideal_basis() {
        let v = var_list(&["x", "y"]);
        let gb = groebner(&ideal(&v, &["x^2", "x*y"]), &TermOrder::lex(2)).unwrap();
        let gens: Vec<String> = gb.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(gens.len(), 2);
        assert!(gens.contains(&"x^2".to_string()) && gens.contains(&"x*y".to_string()));
    }

    #[test]
    fn lex_elimination_of_quadratic_system() {
        let v = var_list(&["x", "y"]);
        let gb = groebner(&ideal(&v, &["x^2 - y", "y^2 - x"]), &TermOrder::lex(2)).unwrap();
        let target = parse_polynomial("y^4 - y", &v).unwrap();
        assert!(gb.generators().contains(&target), "{:?}", gb.generators());
    }

    #[test]
    fn eliminate_examples() {
        let v = var_list(&["x", "y", "y1", "y2"]);
        let e = eliminate(&ideal(&v, &["x - y1", "x*y - y2"]), &["y1", "y2", "y"]).unwrap();
        let target = parse_polynomial("y1*y - y2", &var_list(&["y1", "y2", "y"])).unwrap();
        assert!(e.generators().iter().any(|g| g.primitive_normalized() == target.primitive_normalized()));

        let v = var_list(&["x", "y1"]);
        assert!(eliminate(&ideal(&v, &["x - y1"]), &["y1"]).unwrap().is_zero());
        assert!(eliminate(&ideal(&v, &["x^2 - y1"]), &["y1"]).unwrap().is_zero());
    }

    #[test]
    fn minimal_polys() {
        let mv = minimal_poly_vars(2);
        let h = |s: &str| parse_polynomial(s, &mv).unwrap();
        assert_eq!(minimal_poly_of_coordinate(&map(&["x", "y"], &["x", "x*y"]), 1).unwrap(), h("Y1*T - Y2"));
        assert_eq!(minimal_poly_of_coordinate(&map(&["x", "y"], &["x", "y"]), 0).unwrap(), h("T - Y1"));
        assert_eq!(minimal_poly_of_coordinate(&map(&["x", "y"], &["x + y^3", "y"]), 1).unwrap(), h("T - Y2"));
        assert_eq!(
            minimal_poly_of_coordinate(&map(&["x", "y"], &["x + y^3", "y"]), 0).unwrap(),
            h("T - Y1 + Y2^3")
        );
    }

    #[test]
    fn non_dominant_map_is_reported() {
        let m = map(&["x", "y"], &["x + y", "x + y"]);
        assert!(matches!(minimal_poly_of_coordinate(&m, 0), Err(Error::NonDominant(1))));
    }

    #[test]
    fn fiber_degrees() {
        assert_eq!(generic_fiber_degree(&map(&["x", "y"], &["x^2", "y"]), &[rat(4), rat(1)]).unwrap(), 2);
        assert_eq!(generic_fiber_degree(&map(&["x", "y"], &["x", "y"]), &[rat(7), rat(-2)]).unwrap(), 1);
        assert_eq!(generic_fiber_degree(&map(&["x", "y"], &["x", "x*y"]), &[rat(1), rat(1)]).unwrap(), 1);
        assert!(matches!(
            generic_fiber_degree(&map(&["x", "y"], &["x", "x*y"]), &[rat(0), rat(0)]),
            Err(Error::NotZeroDimensional)
        ));
    }

    #[test]
    fn budget_is_enforced() {
        let v = var_list(&["x", "y", "z"]);
        let tiny = GroebnerBudget { max_basis: 2, max_degree: 100, max_terms: 1000 };
        let r = groebner_with_budget(&ideal(&v, &["x^2 - y", "y^2 - z", "z^2 - x"]), &TermOrder::lex(3), &tiny);
        assert!(matches!(r, Err(Error::BudgetExceeded(_))));
    }
}
