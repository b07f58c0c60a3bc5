use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polyring::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    GrLex,
    /// Elimination order: the first `split` variables (in permuted order)
    /// dominate the rest; graded lex inside each block.
    Block(usize),
}

/// Monomial order together with a variable permutation; `perm[k]` is the
/// variable of rank `k` (rank 0 most significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    kind: OrderKind,
    perm: Vec<usize>,
}

impl TermOrder {
    pub fn lex(nvars: usize) -> Self {
        TermOrder { kind: OrderKind::Lex, perm: (0..nvars).collect() }
    }

    pub fn grlex(nvars: usize) -> Self {
        TermOrder { kind: OrderKind::GrLex, perm: (0..nvars).collect() }
    }

    pub fn new(kind: OrderKind, perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument("term order permutation is not a permutation".into()));
            }
        }
        if let OrderKind::Block(split) = kind {
            if split > n {
                return Err(Error::InvalidArgument(format!("block split {split} exceeds {n} variables")));
            }
        }
        Ok(TermOrder { kind, perm })
    }

    pub fn block(perm: Vec<usize>, split: usize) -> Result<Self> {
        Self::new(OrderKind::Block(split), perm)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.perm.len()
    }

    fn lex_range(&self, a: &Monomial, b: &Monomial, ranks: &[usize]) -> Ordering {
        for &v in ranks {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    fn grlex_range(&self, a: &Monomial, b: &Monomial, ranks: &[usize]) -> Ordering {
        let da: u32 = ranks.iter().map(|&v| a.exponent(v)).sum();
        let db: u32 = ranks.iter().map(|&v| b.exponent(v)).sum();
        da.cmp(&db).then_with(|| self.lex_range(a, b, ranks))
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => self.lex_range(a, b, &self.perm),
            OrderKind::GrLex => self.grlex_range(a, b, &self.perm),
            OrderKind::Block(split) => {
                let (hi, lo) = self.perm.split_at(split);
                self.grlex_range(a, b, hi).then_with(|| self.grlex_range(a, b, lo))
            }
        }
    }
}
