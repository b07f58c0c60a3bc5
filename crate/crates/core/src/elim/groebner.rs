//! Buchberger's algorithm over Q with the normal selection strategy and
//! both Buchberger criteria.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_traits::{One, Zero};

use super::order::TermOrder;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial, Rational, Vars};

/// Hard limits that turn runaway computations into errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerBudget {
    pub max_basis: usize,
    pub max_degree: u32,
    pub max_terms: usize,
}

impl Default for GroebnerBudget {
    fn default() -> Self {
        GroebnerBudget { max_basis: 400, max_degree: 120, max_terms: 50_000 }
    }
}

/// Terms sorted ascending under the active order; the leading term is last.
#[derive(Clone, Debug)]
struct SortedPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl SortedPoly {
    fn from_poly(p: &Polynomial, order: &TermOrder) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        SortedPoly { terms }
    }

    fn to_poly(&self, vars: &Vars) -> Polynomial {
        Polynomial::from_terms(vars, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero").0
    }

    fn lc(&self) -> &Rational {
        &self.terms.last().expect("nonzero").1
    }

    fn make_monic(&mut self) {
        let inv = self.lc().recip();
        if !inv.is_one() {
            for t in &mut self.terms {
                t.1 *= &inv;
            }
        }
    }

    fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    /// `self - c * m * g`, merged in order.
    fn sub_scaled(&self, c: &Rational, m: &Monomial, g: &SortedPoly, order: &TermOrder) -> SortedPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm.mul(m), -(gc * c))).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().expect("peeked").clone()),
                Ordering::Greater => out.push(b.next().expect("peeked")),
                Ordering::Equal => {
                    let (m1, c1) = a.next().expect("peeked");
                    let (_, c2) = b.next().expect("peeked");
                    let s = c1 + c2;
                    if !s.is_zero() {
                        out.push((m1.clone(), s));
                    }
                }
            }
        }
        SortedPoly { terms: out }
    }
}

/// Full normal form of `f` modulo `basis`.
fn normal_form(f: &SortedPoly, basis: &[SortedPoly], order: &TermOrder, budget: &GroebnerBudget) -> Result<SortedPoly> {
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while !p.is_zero() {
        let lm = p.lm().clone();
        match basis.iter().find(|g| g.lm().divides(&lm)) {
            Some(g) => {
                let shift = lm.checked_div(g.lm()).expect("divides");
                let c = p.lc() / g.lc();
                p = p.sub_scaled(&c, &shift, g, order);
                if p.terms.len() > budget.max_terms {
                    return Err(Error::BudgetExceeded(format!(
                        "intermediate polynomial exceeds {} terms",
                        budget.max_terms
                    )));
                }
            }
            None => rem.push(p.terms.pop().expect("nonzero")),
        }
    }
    rem.reverse();
    Ok(SortedPoly { terms: rem })
}

fn s_polynomial(f: &SortedPoly, g: &SortedPoly, order: &TermOrder) -> SortedPoly {
    let l = f.lm().lcm(g.lm());
    let mf = l.checked_div(f.lm()).expect("lcm");
    let mg = l.checked_div(g.lm()).expect("lcm");
    let zero = SortedPoly { terms: Vec::new() };
    let a = zero.sub_scaled(&(-f.lc().recip()), &mf, f, order);
    a.sub_scaled(&g.lc().recip(), &mg, g, order)
}

/// Reduced Gröbner basis of the ideal generated by `gens` (all over `vars`).
/// The result is sorted by ascending leading monomial and every element is monic.
pub(crate) fn buchberger(
    gens: &[Polynomial],
    vars: &Vars,
    order: &TermOrder,
    budget: &GroebnerBudget,
) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<SortedPoly> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let add = |h: SortedPoly, basis: &mut Vec<SortedPoly>, pairs: &mut Vec<_>, pending: &mut HashSet<_>| -> Result<()> {
        if basis.len() >= budget.max_basis {
            return Err(Error::BudgetExceeded(format!("basis exceeds {} elements", budget.max_basis)));
        }
        if h.degree() > budget.max_degree {
            return Err(Error::BudgetExceeded(format!("basis element degree exceeds {}", budget.max_degree)));
        }
        let k = basis.len();
        basis.push(h);
        for i in 0..k {
            pairs.push((i, k));
            pending.insert((i, k));
        }
        Ok(())
    };

    for g in gens {
        let sp = SortedPoly::from_poly(g, order);
        let mut h = normal_form(&sp, &basis, order, budget)?;
        if !h.is_zero() {
            h.make_monic();
            add(h, &mut basis, &mut pairs, &mut pending)?;
        }
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let (idx, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, &(a, b)), (_, &(c, d))| {
                let l1 = basis[a].lm().lcm(basis[b].lm());
                let l2 = basis[c].lm().lcm(basis[d].lm());
                order.cmp(&l1, &l2)
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(idx);
        pending.remove(&(i, j));

        let (li, lj) = (basis[i].lm(), basis[j].lm());
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let mut h = normal_form(&s, &basis, order, budget)?;
        if !h.is_zero() {
            h.make_monic();
            add(h, &mut basis, &mut pairs, &mut pending)?;
        }
    }

    // minimal basis: drop elements whose leading monomial is a multiple of another's
    let mut keep: Vec<SortedPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != i && h.lm().divides(g.lm()) && (h.lm() != g.lm() || k < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    // interreduce tails
    let mut reduced = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<SortedPoly> =
            keep.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
        let mut g = normal_form(&keep[i], &others, order, budget)?;
        g.make_monic();
        reduced.push(g);
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    Ok(reduced.iter().map(|g| g.to_poly(vars)).collect())
}

/// Normal form of `f` modulo a list of polynomials under `order`.
pub(crate) fn reduce_polynomial(f: &Polynomial, basis: &[Polynomial], order: &TermOrder) -> Result<Polynomial> {
    let sorted: Vec<SortedPoly> =
        basis.iter().filter(|g| !g.is_zero()).map(|g| SortedPoly::from_poly(g, order)).collect();
    let nf = normal_form(&SortedPoly::from_poly(f, order), &sorted, order, &GroebnerBudget::default())?;
    Ok(nf.to_poly(f.vars()))
}

pub(crate) fn s_poly(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Polynomial {
    s_polynomial(&SortedPoly::from_poly(f, order), &SortedPoly::from_poly(g, order), order).to_poly(f.vars())
}

pub(crate) fn leading_monomial(p: &Polynomial, order: &TermOrder) -> Option<Monomial> {
    p.terms().map(|(m, _)| m).max_by(|a, b| order.cmp(a, b)).cloned()
}
