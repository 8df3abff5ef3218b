//! Noncommutative polynomial expressions over named generators, used to state
//! presentations and evaluate them inside a structure-constant algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::algebra::{AlgebraElement, StructureAlgebra};
use crate::cyclotomic::Cyclotomic;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("generator `{0}` has no assigned element")]
    UnknownGenerator(String),
    #[error("generator `{0}` is not invertible")]
    NotInvertible(String),
}

/// Only generators may be formally inverted.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Generator(String),
    Inverse(String),
    Scalar(Cyclotomic),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Scaled(Cyclotomic, Box<Expr>),
    Power(Box<Expr>, u32),
}

impl Expr {
    pub fn gen(name: &str) -> Expr {
        Expr::Generator(name.to_string())
    }

    pub fn inv(name: &str) -> Expr {
        Expr::Inverse(name.to_string())
    }

    pub fn scalar(c: Cyclotomic) -> Expr {
        Expr::Scalar(c)
    }

    pub fn int(n: i64) -> Expr {
        Expr::Scalar(Cyclotomic::from_integer(n))
    }

    pub fn one() -> Expr {
        Expr::int(1)
    }

    pub fn zero() -> Expr {
        Expr::int(0)
    }

    pub fn pow(self, k: u32) -> Expr {
        Expr::Power(Box::new(self), k)
    }

    pub fn scale(self, c: Cyclotomic) -> Expr {
        Expr::Scaled(c, Box::new(self))
    }

    /// Names of all formally inverted generators, deduplicated.
    pub fn inverted_generators(&self, out: &mut Vec<String>) {
        match self {
            Expr::Inverse(n) => {
                if !out.contains(n) {
                    out.push(n.clone());
                }
            }
            Expr::Generator(_) | Expr::Scalar(_) => {}
            Expr::Sum(xs) | Expr::Product(xs) => {
                for x in xs {
                    x.inverted_generators(out);
                }
            }
            Expr::Scaled(_, x) | Expr::Power(x, _) => x.inverted_generators(out),
        }
    }

    pub fn evaluate(
        &self,
        algebra: &StructureAlgebra,
        assignment: &BTreeMap<String, AlgebraElement>,
    ) -> Result<AlgebraElement, ExprError> {
        let lookup = |n: &String| assignment.get(n).ok_or_else(|| ExprError::UnknownGenerator(n.clone()));
        Ok(match self {
            Expr::Generator(n) => lookup(n)?.clone(),
            Expr::Inverse(n) => algebra
                .inverse(lookup(n)?)
                .ok_or_else(|| ExprError::NotInvertible(n.clone()))?,
            Expr::Scalar(c) => algebra.one().scale(c),
            Expr::Sum(xs) => {
                let mut acc = algebra.zero();
                for x in xs {
                    acc = acc.add(&x.evaluate(algebra, assignment)?);
                }
                acc
            }
            Expr::Product(xs) => {
                let mut acc = algebra.one();
                for x in xs {
                    acc = algebra.mul(&acc, &x.evaluate(algebra, assignment)?);
                }
                acc
            }
            Expr::Scaled(c, x) => x.evaluate(algebra, assignment)?.scale(c),
            Expr::Power(x, k) => algebra.pow(&x.evaluate(algebra, assignment)?, *k),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Generator(n) => write!(f, "{n}"),
            Expr::Inverse(n) => write!(f, "{n}^-1"),
            Expr::Scalar(c) => write!(f, "({c})"),
            Expr::Sum(xs) => {
                write!(f, "(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Expr::Product(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            Expr::Scaled(c, x) => write!(f, "({c})*{x}"),
            Expr::Power(x, k) => write!(f, "{x}^{k}"),
        }
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::Sum(vec![self, rhs])
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::Sum(vec![self, -rhs])
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        self.scale(Cyclotomic::from_integer(-1))
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Product(vec![self, rhs])
    }
}

impl Mul<Expr> for Cyclotomic {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        rhs.scale(self)
    }
}

/// A named relation `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl Relation {
    pub fn new(name: impl Into<String>, lhs: Expr, rhs: Expr) -> Self {
        Relation {
            name: name.into(),
            lhs,
            rhs,
        }
    }

    pub fn residual(&self) -> Expr {
        self.lhs.clone() - self.rhs.clone()
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}
