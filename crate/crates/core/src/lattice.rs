//! SL(n, Z) completion of primitive vectors.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{identity_int, int_det, int_mul, int_mul_vec, IntMatrix};

/// Integer vector whose coordinates have gcd 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveVector(Vec<BigInt>);

impl PrimitiveVector {
    pub fn new(coords: Vec<BigInt>) -> Result<Self> {
        if !is_primitive(&coords)? {
            return Err(Error::NotPrimitive(gcd_all(&coords).to_string()));
        }
        Ok(PrimitiveVector(coords))
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Square integer matrix with determinant exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularMatrix(IntMatrix);

impl UnimodularMatrix {
    pub fn new(entries: IntMatrix) -> Result<Self> {
        let d = int_det(&entries)?;
        if !d.is_one() {
            return Err(Error::NotUnimodular(d.to_string()));
        }
        Ok(UnimodularMatrix(entries))
    }

    pub fn identity(n: usize) -> Self {
        UnimodularMatrix(identity_int(n))
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_entries(self) -> IntMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.0.iter().map(|r| r[j].clone()).collect()
    }

    pub fn mul(&self, other: &UnimodularMatrix) -> UnimodularMatrix {
        UnimodularMatrix(int_mul(&self.0, &other.0))
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        int_mul_vec(&self.0, v)
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.0 {
            let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn gcd_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn is_primitive(v: &[BigInt]) -> Result<bool> {
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    Ok(gcd_all(v).is_one())
}

/// `A` in SL(n, Z) with first column `v`, built by induction on `n`.
pub fn sl_complete(v: &PrimitiveVector) -> Result<UnimodularMatrix> {
    let a = complete(v.coords())?;
    let m = UnimodularMatrix::new(a).map_err(|e| Error::Internal(format!("completion lost det 1: {e}")))?;
    if m.column(0) != v.coords() {
        return Err(Error::Internal("completion lost the first column".into()));
    }
    Ok(m)
}

fn complete(v: &[BigInt]) -> Result<IntMatrix> {
    let n = v.len();
    match n {
        0 => Err(Error::ZeroVector),
        1 => {
            if v[0].is_one() {
                Ok(identity_int(1))
            } else {
                Err(Error::NegativeUnitInDimensionOne)
            }
        }
        2 => {
            let e = v[0].extended_gcd(&v[1]);
            let (x, y) = if e.gcd.is_one() { (e.x, e.y) } else { (-e.x, -e.y) };
            Ok(vec![vec![v[0].clone(), -y], vec![v[1].clone(), x]])
        }
        _ if v[0].is_zero() => {
            let k = v.iter().position(|c| !c.is_zero()).ok_or(Error::ZeroVector)?;
            let mut w = v.to_vec();
            w.swap(0, k);
            let mut a = complete(&w)?;
            a.swap(0, k);
            for row in &mut a {
                row[1] = -&row[1];
            }
            Ok(a)
        }
        _ => {
            let r = gcd_all(&v[1..]);
            if r.is_zero() {
                // v = (±1, 0, ..., 0)
                let mut a = identity_int(n);
                a[0][0] = v[0].clone();
                a[1][1] = v[0].clone();
                return Ok(a);
            }
            if !r.gcd(&v[0]).is_one() {
                return Err(Error::Internal(format!("gcd(r, v1) = {} in completion", r.gcd(&v[0]))));
            }
            let vbar: Vec<BigInt> = v[1..].iter().map(|c| c / &r).collect();
            let abar = complete(&vbar)?;
            let bordered = |alpha: &BigInt, beta: &BigInt| -> IntMatrix {
                let mut a = vec![vec![BigInt::zero(); n]; n];
                a[0][0] = v[0].clone();
                a[0][n - 1] = beta.clone();
                for i in 1..n {
                    a[i][0] = &r * &vbar[i - 1];
                    for j in 1..n - 1 {
                        a[i][j] = abar[i - 1][j].clone();
                    }
                    a[i][n - 1] = alpha * &vbar[i - 1];
                }
                a
            };
            let (zero, one) = (BigInt::zero(), BigInt::one());
            let c1 = int_det(&bordered(&one, &zero))?;
            let c2 = int_det(&bordered(&zero, &one))?;
            let e = c1.extended_gcd(&c2);
            if !e.gcd.abs().is_one() {
                return Err(Error::Internal(format!("determinant form {c1}*a + {c2}*b cannot reach 1")));
            }
            let (alpha, beta) = if e.gcd.is_one() { (e.x, e.y) } else { (-e.x, -e.y) };
            Ok(bordered(&alpha, &beta))
        }
    }
}

/// Integer inverse of a unimodular matrix via the adjugate.
pub fn sl_inverse(a: &UnimodularMatrix) -> Result<UnimodularMatrix> {
    let m = a.entries();
    let n = m.len();
    if n == 1 {
        return Ok(a.clone());
    }
    let mut inv = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: IntMatrix = m
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != i)
                .map(|(_, row)| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let d = int_det(&minor)?;
            inv[j][i] = if (i + j) % 2 == 0 { d } else { -d };
        }
    }
    if int_mul(m, &inv) != identity_int(n) {
        return Err(Error::Internal("adjugate is not an inverse".into()));
    }
    Ok(UnimodularMatrix(inv))
}

/// `A` in SL(n, Z) with `A v = w`.
pub fn map_primitive_pair(v: &PrimitiveVector, w: &PrimitiveVector) -> Result<UnimodularMatrix> {
    if v.len() != w.len() {
        return Err(Error::DimensionMismatch { expected: v.len(), got: w.len() });
    }
    let a = sl_complete(w)?.mul(&sl_inverse(&sl_complete(v)?)?);
    if a.apply(v.coords()) != w.coords() {
        return Err(Error::Internal("A v != w".into()));
    }
    Ok(a)
}
