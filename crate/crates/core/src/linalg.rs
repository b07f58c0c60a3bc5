//! Small exact matrix helpers over Z, Q and Q[X].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{div_exact, Polynomial, Rational, Vars};

pub type RatMatrix = Vec<Vec<Rational>>;
pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn identity_rat(n: usize) -> RatMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

pub fn identity_int(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i32)).collect()).collect()
}

pub fn int_to_rat(m: &IntMatrix) -> RatMatrix {
    m.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect()
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    match m.iter().find(|r| r.len() != n) {
        Some(r) => Err(Error::DimensionMismatch { expected: n, got: r.len() }),
        None => Ok(n),
    }
}

/// Inverse by Gauss-Jordan elimination.
pub fn rat_inverse(m: &RatMatrix) -> Result<RatMatrix> {
    let n = check_square(m)?;
    let mut a: Vec<Vec<Rational>> = m.clone();
    let mut inv = identity_rat(n);
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].recip();
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[r][j] -= t;
                    let t = &inv[col][j] * &f;
                    inv[r][j] -= t;
                }
            }
        }
    }
    Ok(inv)
}

pub fn rat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Rational::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn int_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j])).collect())
        .collect()
}

pub fn int_mul_vec(a: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|row| row.iter().zip(v).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)).collect()
}

/// Integer determinant via fraction-free (Bareiss) elimination.
pub fn int_det(m: &IntMatrix) -> Result<BigInt> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// Determinant of a polynomial matrix: cofactor expansion up to 4x4,
/// fraction-free Bareiss elimination beyond.
pub fn poly_det(m: &[Vec<Polynomial>], vars: &Vars) -> Result<Polynomial> {
    let n = check_square(m)?;
    if n <= 4 {
        Ok(cofactor_det(m, vars))
    } else {
        bareiss_det(m, vars)
    }
}

fn cofactor_det(m: &[Vec<Polynomial>], vars: &Vars) -> Polynomial {
    let n = m.len();
    match n {
        0 => Polynomial::one(vars),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = Polynomial::zero(vars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect()).collect();
                let term = &m[0][j] * &cofactor_det(&minor, vars);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

pub(crate) fn bareiss_det(m: &[Vec<Polynomial>], vars: &Vars) -> Result<Polynomial> {
    let n = m.len();
    if n == 0 {
        return Ok(Polynomial::one(vars));
    }
    let mut a: Vec<Vec<Polynomial>> = m.to_vec();
    let mut negate = false;
    let mut prev = Polynomial::one(vars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Polynomial::zero(vars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = div_exact(&num, &prev).ok_or(Error::InexactDivision("Bareiss elimination"))?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr_io::parse_polynomial;
    use crate::polyring::{rat, var_list};

    fn im(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn integer_determinants() {
        assert_eq!(int_det(&im(&[&[2, 1], &[3, 2]])).unwrap(), BigInt::from(1));
        assert_eq!(int_det(&im(&[&[2, 0, 1], &[3, 1, 0], &[5, 2, 0]])).unwrap(), BigInt::from(1));
        assert_eq!(int_det(&im(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])).unwrap(), BigInt::from(-2));
        assert_eq!(int_det(&im(&[&[1, 2], &[2, 4]])).unwrap(), BigInt::from(0));
    }

    #[test]
    fn rational_inverse() {
        let m: RatMatrix = vec![vec![rat(0), rat(1)], vec![rat(2), rat(3)]];
        let inv = rat_inverse(&m).unwrap();
        assert_eq!(rat_mul(&m, &inv), identity_rat(2));
        assert_eq!(rat_inverse(&vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]]), Err(Error::SingularMatrix));
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        let v = var_list(&["x", "y"]);
        let p = |s: &str| parse_polynomial(s, &v).unwrap();
        let m = vec![
            vec![p("x"), p("y"), p("1"), p("0")],
            vec![p("0"), p("x + 1"), p("y^2"), p("2")],
            vec![p("x*y"), p("0"), p("1"), p("y")],
            vec![p("1"), p("x"), p("0"), p("x - y")],
        ];
        assert_eq!(bareiss_det(&m, &v).unwrap(), cofactor_det(&m, &v));
    }
}
