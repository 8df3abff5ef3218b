//! Univariate polynomials over the cyclotomic scalars, lowest degree first.

use crate::cyclotomic::Cyclotomic;
use crate::linalg::{LinalgError, Matrix};

pub fn trim(p: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let len = p.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
    p[..len].to_vec()
}

/// Degree, with `None` for the zero polynomial.
pub fn degree(p: &[Cyclotomic]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn derivative(p: &[Cyclotomic]) -> Vec<Cyclotomic> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * &Cyclotomic::from_integer(k as i64))
        .collect()
}

/// Remainder of `a` modulo a nonzero `b`.
pub fn rem(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let b = trim(b);
    let db = b.len().checked_sub(1).expect("division by the zero polynomial");
    let lead_inv = b[db].inverse().expect("nonzero leading coefficient");
    let mut r = trim(a);
    while r.len() > db {
        let top = r.len() - 1;
        let factor = &r[top] * &lead_inv;
        let shift = top - db;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&factor * c);
        }
        r = trim(&r);
    }
    r
}

/// Monic greatest common divisor.
pub fn gcd(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let mut x = trim(a);
    let mut y = trim(b);
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    match x.last() {
        None => x,
        Some(lead) => {
            let inv = lead.inverse().expect("nonzero");
            x.iter().map(|c| c * &inv).collect()
        }
    }
}

/// True when `p` has no repeated roots over the algebraic closure.
pub fn is_squarefree(p: &[Cyclotomic]) -> bool {
    degree(&gcd(p, &derivative(p))) == Some(0)
}

/// `p(M)` by Horner's rule.
pub fn evaluate_at_matrix(p: &[Cyclotomic], m: &Matrix) -> Result<Matrix, LinalgError> {
    let n = m.rows();
    let mut acc = Matrix::zeros(n, n);
    for c in p.iter().rev() {
        acc = acc.mul(m)?.add(&Matrix::identity(n).scale(c))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Vec<Cyclotomic> {
        c.iter().map(|&x| Cyclotomic::from_integer(x)).collect()
    }

    #[test]
    fn squarefree_detection() {
        assert!(is_squarefree(&p(&[0, 1])));
        assert!(is_squarefree(&p(&[0, -2, 1])));
        assert!(!is_squarefree(&p(&[0, 0, 1])));
        assert!(!is_squarefree(&p(&[1, -2, 1])));
        assert!(is_squarefree(&p(&[-1, 0, 0, 1])));
    }

    #[test]
    fn gcd_is_monic() {
        // (t-1)(t-2) and (t-1)(t+3)
        assert_eq!(gcd(&p(&[2, -3, 1]), &p(&[-3, 2, 1])), p(&[-1, 1]));
        assert_eq!(degree(&gcd(&p(&[1, 1]), &p(&[2, 1]))), Some(0));
    }
}
