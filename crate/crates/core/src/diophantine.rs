//! Curve equation systems of a map and exhaustive integer-point search in a
//! max-norm box.

use std::cmp::Ordering;
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fibers::Line;
use crate::polyring::{PolyMap, Polynomial, Rational, Vars};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationSystem {
    vars: Vars,
    equations: Vec<Polynomial>,
}

impl EquationSystem {
    pub fn new(equations: Vec<Polynomial>) -> Result<Self> {
        let first = equations
            .first()
            .ok_or_else(|| Error::InvalidArgument("an equation system needs at least one equation".into()))?;
        let vars = first.vars().clone();
        if equations.iter().any(|e| *e.vars() != vars) {
            return Err(Error::VariableMismatch);
        }
        Ok(EquationSystem { vars, equations })
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn equations(&self) -> &[Polynomial] {
        &self.equations
    }

    pub fn is_satisfied_by(&self, point: &[BigInt]) -> bool {
        let p: Vec<Rational> = point.iter().map(|x| Rational::from_integer(x.clone())).collect();
        self.equations.iter().all(|e| e.eval(&p).map(|v| v.is_zero()).unwrap_or(false))
    }
}

/// `F_i - F_{i+1} = 0` for `i = 1..n-1`.
pub fn curve_cf(map: &PolyMap) -> Result<EquationSystem> {
    curve_cfm(map, 0)
}

/// `F_1 = ... = F_m = 0` together with `F_{m+1} = ... = F_n`.
pub fn curve_cfm(map: &PolyMap, m: usize) -> Result<EquationSystem> {
    let n = map.len();
    if n < 2 {
        return Err(Error::InvalidArgument("curve systems need at least two components".into()));
    }
    if m >= n {
        return Err(Error::InvalidArgument(format!("m = {m} must be below n = {n}")));
    }
    let f = map.components();
    let mut eqs: Vec<Polynomial> = f[..m].to_vec();
    eqs.extend((m..n - 1).map(|i| &f[i] - &f[i + 1]));
    EquationSystem::new(eqs)
}

/// `(F_i - u_i) v_p - (F_p - u_p) v_i = 0` for `i != p`, `p` the first index
/// with `v_p != 0`.
pub fn line_preimage(map: &PolyMap, line: &Line) -> Result<EquationSystem> {
    let n = map.len();
    if line.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: line.dim() });
    }
    let vars = map.vars();
    let (u, v) = (line.u(), line.v());
    let p = v.iter().position(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
    let shifted: Vec<Polynomial> =
        (0..n).map(|i| &map.components()[i] - &Polynomial::constant(vars, u[i].clone())).collect();
    let eqs = (0..n)
        .filter(|&i| i != p)
        .map(|i| &shifted[i].scale(&v[p]) - &shifted[p].scale(&v[i]))
        .collect();
    EquationSystem::new(eqs)
}

/// `F_1^2 + ... + F_{n-1}^2`.
pub fn cor1_sum_of_squares(map: &PolyMap) -> Result<Polynomial> {
    let n = map.len();
    if n < 2 {
        return Err(Error::InvalidArgument("need at least two components".into()));
    }
    Ok(map.components()[..n - 1].iter().fold(Polynomial::zero(map.vars()), |acc, f| &acc + &f.pow(2)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub radius: u64,
    pub points: Vec<Vec<BigInt>>,
    pub exhausted: bool,
    pub nodes_visited: u64,
}

impl SearchReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("# radius {}\n", self.radius);
        for p in &self.points {
            let cells: Vec<String> = p.iter().map(BigInt::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out.push_str(&format!("exhausted: {}\n", if self.exhausted { "yes" } else { "no" }));
        out.push_str(&format!("nodes: {}\n", self.nodes_visited));
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, message: &str| Error::MapFile { line, message: message.into() };
        let mut radius = None;
        let mut points = Vec::new();
        let mut exhausted = None;
        let mut nodes = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let no = i + 1;
            if line.is_empty() {
                continue;
            }
            if let Some(r) = line.strip_prefix("# radius") {
                radius = Some(r.trim().parse().map_err(|_| err(no, "bad radius"))?);
            } else if line.starts_with('#') {
                continue;
            } else if let Some(v) = line.strip_prefix("exhausted:") {
                exhausted = Some(match v.trim() {
                    "yes" => true,
                    "no" => false,
                    _ => return Err(err(no, "exhausted must be yes or no")),
                });
            } else if let Some(v) = line.strip_prefix("nodes:") {
                nodes = Some(v.trim().parse().map_err(|_| err(no, "bad node count"))?);
            } else {
                let p = line
                    .split_whitespace()
                    .map(|c| c.parse::<BigInt>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| err(no, "bad point"))?;
                points.push(p);
            }
        }
        Ok(SearchReport {
            radius: radius.ok_or_else(|| err(0, "missing radius line"))?,
            points,
            exhausted: exhausted.ok_or_else(|| err(0, "missing exhausted footer"))?,
            nodes_visited: nodes.ok_or_else(|| err(0, "missing nodes footer"))?,
        })
    }
}

/// An equation with denominators cleared.
#[derive(Clone, Debug)]
struct IntEquation {
    terms: Vec<(Vec<u32>, BigInt)>,
    occurring: Vec<usize>,
}

impl IntEquation {
    fn from_poly(p: &Polynomial) -> Self {
        let den = Rational::from_integer(p.denominator_lcm());
        let terms = p.terms().map(|(m, c)| (m.exponents().to_vec(), (c * &den).to_integer())).collect();
        IntEquation { terms, occurring: p.occurring_vars() }
    }

    fn degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.iter().sum::<u32>()).max().unwrap_or(0)
    }

    /// Coefficients (ascending) in variable `k` after plugging in `assigned`.
    fn univariate(&self, k: usize, assigned: &[Option<BigInt>]) -> Vec<BigInt> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (exps, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 && i != k {
                    v *= num_traits::pow(assigned[i].clone().expect("assigned"), e as usize);
                }
            }
            let d = exps[k] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigInt::zero());
            }
            coeffs[d] += v;
        }
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        coeffs
    }

    fn value(&self, assigned: &[Option<BigInt>]) -> BigInt {
        self.terms
            .iter()
            .map(|(exps, c)| {
                exps.iter().enumerate().fold(c.clone(), |acc, (i, &e)| {
                    if e > 0 {
                        acc * num_traits::pow(assigned[i].clone().expect("assigned"), e as usize)
                    } else {
                        acc
                    }
                })
            })
            .sum()
    }
}

fn horner(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Integer roots in `[-bound, bound]` of a nonzero univariate polynomial.
fn integer_roots(coeffs: &[BigInt], bound: u64) -> Vec<BigInt> {
    let start = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len());
    let deflated = &coeffs[start..];
    let mut roots = Vec::new();
    if start > 0 {
        roots.push(BigInt::zero());
    }
    if deflated.len() <= 1 {
        return roots;
    }
    let c0 = deflated[0].abs();
    let limit = c0.to_u64().map_or(bound, |c| c.min(bound));
    for k in 1..=limit {
        let kb = BigInt::from(k);
        if !c0.is_multiple_of(&kb) {
            continue;
        }
        for x in [kb.clone(), -kb] {
            if horner(deflated, &x).is_zero() {
                roots.push(x);
            }
        }
    }
    roots.sort();
    roots
}

struct Searcher<'a> {
    eqs: &'a [IntEquation],
    order: &'a [usize],
    radius: u64,
    budget: u64,
    nodes: &'a AtomicU64,
    stopped: &'a AtomicBool,
}

enum Node {
    Dead,
    Complete,
    Branch(usize, Vec<BigInt>),
}

impl Searcher<'_> {
    fn full_range(&self) -> Vec<BigInt> {
        let b = self.radius as i64;
        (-b..=b).map(BigInt::from).collect()
    }

    /// Checks fully assigned equations and picks the next variable, with
    /// its candidate values when some equation has become univariate in it.
    fn expand(&self, assigned: &[Option<BigInt>]) -> Node {
        let mut forced: Option<(usize, Vec<BigInt>)> = None;
        for eq in self.eqs {
            let free: Vec<usize> = eq.occurring.iter().copied().filter(|&i| assigned[i].is_none()).collect();
            match free.len() {
                0 => {
                    if !eq.value(assigned).is_zero() {
                        return Node::Dead;
                    }
                }
                1 => {
                    let k = free[0];
                    let coeffs = eq.univariate(k, assigned);
                    if coeffs.is_empty() {
                        continue;
                    }
                    let roots = integer_roots(&coeffs, self.radius);
                    if roots.is_empty() {
                        return Node::Dead;
                    }
                    forced = Some(match forced {
                        Some((j, prev)) if j == k => (k, prev.into_iter().filter(|r| roots.contains(r)).collect()),
                        Some((j, prev)) if prev.len() <= roots.len() => (j, prev),
                        _ => (k, roots),
                    });
                    if forced.as_ref().is_some_and(|(_, c)| c.is_empty()) {
                        return Node::Dead;
                    }
                }
                _ => {}
            }
        }
        if let Some((k, c)) = forced {
            return Node::Branch(k, c);
        }
        match self.order.iter().find(|&&i| assigned[i].is_none()) {
            Some(&k) => Node::Branch(k, self.full_range()),
            None => Node::Complete,
        }
    }

    fn visit(&self) -> bool {
        let n = self.nodes.fetch_add(1, AtomicOrdering::Relaxed) + 1;
        if n > self.budget {
            self.stopped.store(true, AtomicOrdering::Relaxed);
            return false;
        }
        true
    }

    fn dfs(&self, assigned: &mut Vec<Option<BigInt>>, out: &mut Vec<Vec<BigInt>>) {
        if self.stopped.load(AtomicOrdering::Relaxed) {
            return;
        }
        match self.expand(assigned) {
            Node::Dead => {}
            Node::Complete => out.push(assigned.iter().map(|x| x.clone().expect("complete")).collect()),
            Node::Branch(k, candidates) => {
                for c in candidates {
                    if !self.visit() {
                        return;
                    }
                    assigned[k] = Some(c);
                    self.dfs(assigned, out);
                    assigned[k] = None;
                }
            }
        }
    }
}

/// Variables in lowest-degree equations first, ties by declaration order.
fn branching_order(eqs: &[IntEquation], n: usize) -> Vec<usize> {
    let score = |i: usize| eqs.iter().filter(|e| e.occurring.contains(&i)).map(IntEquation::degree).min();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (score(i).unwrap_or(u32::MAX), i));
    order
}

pub fn search_box(sys: &EquationSystem, radius: u64, budget: u64) -> SearchReport {
    search_box_threaded(sys, radius, budget, 1)
}

/// Exhaustive search of `[-radius, radius]^n`. The candidates of the first
/// branching variable are split across `threads` workers.
pub fn search_box_threaded(sys: &EquationSystem, radius: u64, budget: u64, threads: usize) -> SearchReport {
    let n = sys.nvars();
    let eqs: Vec<IntEquation> = sys.equations.iter().map(IntEquation::from_poly).collect();
    let order = branching_order(&eqs, n);
    let nodes = AtomicU64::new(0);
    let stopped = AtomicBool::new(false);
    let searcher = Searcher { eqs: &eqs, order: &order, radius, budget, nodes: &nodes, stopped: &stopped };
    let mut points = Vec::new();
    let root: Vec<Option<BigInt>> = vec![None; n];
    match searcher.expand(&root) {
        Node::Dead => {}
        Node::Complete => points.push(Vec::new()),
        Node::Branch(k, candidates) => {
            let workers = threads.clamp(1, candidates.len().max(1));
            let chunk = candidates.len().div_ceil(workers).max(1);
            let results: Vec<Vec<Vec<BigInt>>> = std::thread::scope(|s| {
                let handles: Vec<_> = candidates
                    .chunks(chunk)
                    .map(|part| {
                        let searcher = &searcher;
                        s.spawn(move || {
                            let mut out = Vec::new();
                            let mut assigned: Vec<Option<BigInt>> = vec![None; n];
                            for c in part {
                                if !searcher.visit() {
                                    break;
                                }
                                assigned[k] = Some(c.clone());
                                searcher.dfs(&mut assigned, &mut out);
                                assigned[k] = None;
                            }
                            out
                        })
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
            });
            points = results.into_iter().flatten().collect();
        }
    }
    points.retain(|p| sys.is_satisfied_by(p));
    points.sort();
    points.dedup();
    let visited = nodes.load(AtomicOrdering::Relaxed).min(budget);
    SearchReport { radius, points, exhausted: !stopped.load(AtomicOrdering::Relaxed), nodes_visited: visited }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Found(Vec<BigInt>),
    NoneInBox(u64),
    BudgetExceeded,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Found(p) => {
                let cells: Vec<String> = p.iter().map(BigInt::to_string).collect();
                write!(f, "found ({})", cells.join(", "))
            }
            Verdict::NoneInBox(b) => write!(f, "no nonzero integer point with max-norm <= {b}"),
            Verdict::BudgetExceeded => f.write_str("budget exceeded before a nonzero point was found"),
        }
    }
}

pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// Smallest max-norm first, then coordinatewise preferring small absolute
/// value and nonnegative sign.
fn point_preference(a: &[BigInt], b: &[BigInt]) -> Ordering {
    let norm = |p: &[BigInt]| p.iter().map(BigInt::abs).max().unwrap_or_default();
    let key = |p: &[BigInt]| p.iter().map(|x| (x.abs(), x.is_negative())).collect::<Vec<_>>();
    norm(a).cmp(&norm(b)).then_with(|| key(a).cmp(&key(b)))
}

pub fn nonzero_point_exists(sys: &EquationSystem, radius: u64) -> Verdict {
    nonzero_point_exists_with(sys, radius, DEFAULT_BUDGET, 1)
}

pub fn nonzero_point_exists_with(sys: &EquationSystem, radius: u64, budget: u64, threads: usize) -> Verdict {
    let report = search_box_threaded(sys, radius, budget, threads);
    let best = report.points.iter().filter(|p| p.iter().any(|x| !x.is_zero())).min_by(|a, b| point_preference(a, b));
    match best {
        Some(p) => Verdict::Found(p.clone()),
        None if report.exhausted => Verdict::NoneInBox(radius),
        None => Verdict::BudgetExceeded,
    }
}

/// Points of the box over a system, as `i64` vectors, for compact comparisons.
pub fn points_as_i64(report: &SearchReport) -> Vec<Vec<i64>> {
    report.points.iter().map(|p| p.iter().map(|x| x.to_i64().expect("box coordinates fit in i64")).collect()).collect()
}

/// `r` divides every coordinate of `p`.
pub fn all_divisible_by(p: &[BigInt], r: &BigInt) -> bool {
    !r.is_zero() && p.iter().all(|x| x.is_multiple_of(r))
}
