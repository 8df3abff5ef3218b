//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! An element is stored as a polynomial in `ζ_N` of degree below `φ(N)`,
//! reduced modulo the cyclotomic polynomial `Φ_N`, with integer numerators
//! over one common positive denominator. Reduction modulo `Φ_N` (rather than
//! `x^N - 1`) makes the representation canonical, so equality is a plain
//! comparison of coefficient vectors.
//!
//! Scalars of different orders can be mixed freely: both operands are lifted
//! into `Q(ζ_L)` with `L = lcm(N, M)` before combining.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order must be positive")]
    InvalidOrder,
    #[error("expected {expected} coefficients for order {order}, found {found}")]
    CoefficientCount { order: u32, expected: usize, found: usize },
    #[error("malformed rational coefficient: {0}")]
    Parse(String),
}

/// Precomputed data for one cyclotomic field.
pub struct CyclotomicField {
    order: u32,
    degree: usize,
    modulus: Vec<BigInt>,
    /// `ζ^k mod Φ_N` for `k` in `0..order`.
    powers: Vec<Vec<BigInt>>,
}

impl CyclotomicField {
    pub fn order(&self) -> u32 {
        self.order
    }

    /// `φ(N)`, the dimension of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of `Φ_N`, lowest degree first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    fn build(order: u32) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut current = vec![BigInt::zero(); degree];
        current[0] = BigInt::one();
        for _ in 0..order {
            powers.push(current.clone());
            // multiply by x, then reduce the overflowing top coefficient
            let top = current[degree - 1].clone();
            for k in (1..degree).rev() {
                current[k] = current[k - 1].clone();
            }
            current[0] = BigInt::zero();
            if !top.is_zero() {
                for (k, c) in modulus.iter().take(degree).enumerate() {
                    current[k] -= &top * c;
                }
            }
        }
        CyclotomicField {
            order,
            degree,
            modulus,
            powers,
        }
    }
}

/// Returns the (process-wide, interned) field `Q(ζ_order)`.
pub fn field(order: u32) -> &'static CyclotomicField {
    assert!(order >= 1, "cyclotomic order must be positive");
    static FIELDS: OnceLock<Mutex<HashMap<u32, &'static CyclotomicField>>> = OnceLock::new();
    let registry = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = registry.lock().expect("field registry poisoned");
    guard
        .entry(order)
        .or_insert_with(|| Box::leak(Box::new(CyclotomicField::build(order))))
}

/// Integer coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = exact_monic_division(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn exact_monic_division(dividend: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    let mut rem = dividend.to_vec();
    let dd = divisor.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quotient = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let lead = rem[k + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (i, c) in divisor.iter().enumerate() {
            rem[k + i] -= &lead * c;
        }
        quotient[k] = lead;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quotient
}

/// An exact element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: &'static CyclotomicField,
    num: Vec<BigInt>,
    den: BigInt,
}

fn gcd_order(a: u32, b: u32) -> u32 {
    a.gcd(&b)
}

impl Cyclotomic {
    fn from_parts(field: &'static CyclotomicField, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if num.iter().all(Zero::is_zero) {
            return Cyclotomic {
                field,
                num,
                den: BigInt::one(),
            };
        }
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        if !den.is_one() {
            let mut g = den.clone();
            for c in &num {
                if g.is_one() {
                    break;
                }
                g = g.gcd(c);
            }
            if !g.is_one() {
                for c in num.iter_mut() {
                    *c /= &g;
                }
                den /= &g;
            }
        }
        Cyclotomic { field, num, den }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        let f = field(1);
        Cyclotomic {
            field: f,
            num: vec![BigInt::from(n)],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        let f = field(1);
        Self::from_parts(f, vec![q.numer().clone()], q.denom().clone())
    }

    pub fn from_fraction(num: i64, den: i64) -> Result<Self, ScalarError> {
        if den == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::from_parts(field(1), vec![BigInt::from(num)], BigInt::from(den)))
    }

    /// `ζ_order^exponent` in canonical form.
    pub fn root_of_unity(order: u32, exponent: i64) -> Self {
        let f = field(order);
        let k = exponent.rem_euclid(order as i64) as usize;
        Cyclotomic {
            field: f,
            num: f.powers[k].clone(),
            den: BigInt::one(),
        }
    }

    /// Builds a scalar from rational coefficients of `1, ζ, …, ζ^{φ(N)-1}`.
    pub fn from_coefficients(order: u32, coeffs: &[BigRational]) -> Result<Self, ScalarError> {
        if order == 0 {
            return Err(ScalarError::InvalidOrder);
        }
        let f = field(order);
        if coeffs.len() != f.degree {
            return Err(ScalarError::CoefficientCount {
                order,
                expected: f.degree,
                found: coeffs.len(),
            });
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(Self::from_parts(f, num, den))
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn field(&self) -> &'static CyclotomicField {
        self.field
    }

    /// Rational coefficients of `1, ζ, …, ζ^{φ(N)-1}`.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the scalar lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Re-expresses the scalar in `Q(ζ_order)`; `order` must be a multiple of
    /// the current order.
    pub fn lift(&self, order: u32) -> Self {
        if order == self.field.order {
            return self.clone();
        }
        assert!(
            order.is_multiple_of(self.field.order),
            "cannot lift order {} into order {}",
            self.field.order,
            order
        );
        let target = field(order);
        let step = (order / self.field.order) as usize;
        let mut num = vec![BigInt::zero(); target.degree];
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pw = &target.powers[(k * step) % order as usize];
            for (slot, p) in num.iter_mut().zip(pw) {
                if !p.is_zero() {
                    *slot += c * p;
                }
            }
        }
        Self::from_parts(target, num, self.den.clone())
    }

    fn unify<'a>(
        a: &'a Cyclotomic,
        b: &'a Cyclotomic,
    ) -> (std::borrow::Cow<'a, Cyclotomic>, std::borrow::Cow<'a, Cyclotomic>) {
        use std::borrow::Cow;
        if std::ptr::eq(a.field, b.field) {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        // rationals lift for free into any order
        let (oa, ob) = (a.field.order, b.field.order);
        let l = oa / gcd_order(oa, ob) * ob;
        let la = if oa == l {
            Cow::Borrowed(a)
        } else {
            Cow::Owned(a.lift(l))
        };
        let lb = if ob == l {
            Cow::Borrowed(b)
        } else {
            Cow::Owned(b.lift(l))
        };
        (la, lb)
    }

    fn add_same(a: &Cyclotomic, b: &Cyclotomic, negate_b: bool) -> Cyclotomic {
        let f = a.field;
        if a.den == b.den {
            let num = a
                .num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| if negate_b { x - y } else { x + y })
                .collect();
            return Self::from_parts(f, num, a.den.clone());
        }
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| {
                let l = x * &b.den;
                let r = y * &a.den;
                if negate_b {
                    l - r
                } else {
                    l + r
                }
            })
            .collect();
        Self::from_parts(f, num, &a.den * &b.den)
    }

    fn mul_same(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        let f = a.field;
        let d = f.degree;
        if a.is_zero() || b.is_zero() {
            return Cyclotomic {
                field: f,
                num: vec![BigInt::zero(); d],
                den: BigInt::one(),
            };
        }
        let den = &a.den * &b.den;
        if d == 1 {
            return Self::from_parts(f, vec![&a.num[0] * &b.num[0]], den);
        }
        let mut full = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    full[i + j] += x * y;
                }
            }
        }
        let n = f.order as usize;
        let mut num: Vec<BigInt> = full.drain(..d).collect();
        for (offset, c) in full.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pw = &f.powers[(d + offset) % n];
            for (slot, p) in num.iter_mut().zip(pw) {
                if !p.is_zero() {
                    *slot += &c * p;
                }
            }
        }
        Self::from_parts(f, num, den)
    }

    /// Image under the field automorphism `ζ ↦ ζ^k` (`k` coprime to the order).
    pub fn galois_conjugate(&self, k: u32) -> Cyclotomic {
        let f = self.field;
        let n = f.order as usize;
        let mut num = vec![BigInt::zero(); f.degree];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pw = &f.powers[(j * k as usize) % n];
            for (slot, p) in num.iter_mut().zip(pw) {
                if !p.is_zero() {
                    *slot += c * p;
                }
            }
        }
        Self::from_parts(f, num, self.den.clone())
    }

    /// Multiplicative inverse, computed from the product of the nontrivial
    /// Galois conjugates divided by the (rational) field norm.
    pub fn inverse(&self) -> Result<Cyclotomic, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let f = self.field;
        let n = f.order;
        let mut others = Cyclotomic {
            field: f,
            num: f.powers[0].clone(),
            den: BigInt::one(),
        };
        for k in 2..n {
            if gcd_order(k, n) == 1 {
                others = Self::mul_same(&others, &self.galois_conjugate(k));
            }
        }
        let norm = Self::mul_same(self, &others);
        let norm = norm
            .as_rational()
            .expect("field norm of a cyclotomic scalar is rational");
        let scale = norm.recip();
        let num = others.num.iter().map(|c| c * scale.numer()).collect();
        Ok(Self::from_parts(f, num, &others.den * scale.denom()))
    }

    pub fn try_div(&self, rhs: &Cyclotomic) -> Result<Cyclotomic, ScalarError> {
        Ok(self * &rhs.inverse()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exponent: i64) -> Result<Cyclotomic, ScalarError> {
        let base = if exponent < 0 { self.inverse()? } else { self.clone() };
        let mut e = exponent.unsigned_abs();
        let mut acc = Cyclotomic::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Smallest `k` in `1..=bound` with `self^k = 1`.
    pub fn multiplicative_order(&self, bound: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }
}

/// `(n)_ω = 1 + ω + … + ω^{n-1}`.
pub fn q_integer(n: u32, omega: &Cyclotomic) -> Cyclotomic {
    let mut sum = Cyclotomic::zero();
    let mut term = Cyclotomic::one();
    for _ in 0..n {
        sum += &term;
        term = &term * omega;
    }
    sum
}

/// `(n)_ω! = (n)_ω ⋯ (1)_ω`, with the empty product equal to 1.
pub fn q_factorial(n: u32, omega: &Cyclotomic) -> Cyclotomic {
    (1..=n).fold(Cyclotomic::one(), |acc, m| &acc * &q_integer(m, omega))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Cyclotomic::unify(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for Cyclotomic {}

impl Default for Cyclotomic {
    fn default() -> Self {
        Cyclotomic::zero()
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::one()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(q: BigRational) -> Self {
        Cyclotomic::from_rational(q)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if rhs.is_zero() && self.field.order.is_multiple_of(rhs.field.order) {
            return self.clone();
        }
        if self.is_zero() && rhs.field.order.is_multiple_of(self.field.order) {
            return rhs.clone();
        }
        let (a, b) = Cyclotomic::unify(self, rhs);
        Cyclotomic::add_same(&a, &b, false)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::unify(self, rhs);
        Cyclotomic::add_same(&a, &b, true)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::unify(self, rhs);
        Cyclotomic::mul_same(&a, &b)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        for c in self.num.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if rhs.is_zero() && self.field.order.is_multiple_of(rhs.field.order) {
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        if rhs.is_zero() && self.field.order.is_multiple_of(rhs.field.order) {
            return;
        }
        *self = &*self - rhs;
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coefficients().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "z{}", self.field.order)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    order: u32,
    coeffs: Vec<(String, String)>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ScalarRepr {
            order: self.field.order,
            coeffs: self
                .coefficients()
                .into_iter()
                .map(|c| (c.numer().to_string(), c.denom().to_string()))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        Cyclotomic::try_from(repr).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<ScalarRepr> for Cyclotomic {
    type Error = ScalarError;

    fn try_from(repr: ScalarRepr) -> Result<Self, ScalarError> {
        let coeffs = repr
            .coeffs
            .iter()
            .map(|(n, d)| {
                let n: BigInt = n.parse().map_err(|_| ScalarError::Parse(n.clone()))?;
                let d: BigInt = d.parse().map_err(|_| ScalarError::Parse(d.clone()))?;
                if d.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                Ok(BigRational::new(n, d))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Cyclotomic::from_coefficients(repr.order, &coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, e: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, e)
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |n| {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity() {
        assert!(z(1, 0).is_one());
        assert_eq!(z(2, 1), Cyclotomic::from_integer(-1));
        let w = z(3, 1);
        assert!(w.pow(3).unwrap().is_one());
        assert!(!w.is_one());
        assert_eq!(z(6, 2), z(3, 1));
        assert_eq!(z(12, 5).multiplicative_order(100), Some(12));
        assert_eq!(z(12, 4).multiplicative_order(100), Some(3));
        assert_eq!(z(5, -1), z(5, 4));
    }

    #[test]
    fn field_identities() {
        let w = z(3, 1);
        assert_eq!(w.inverse().unwrap(), z(3, 2));
        let s = &(&Cyclotomic::one() + &w) + &z(3, 2);
        assert!(s.is_zero());
        let half = Cyclotomic::from_fraction(1, 2).unwrap();
        assert!((&half * &Cyclotomic::from_integer(2)).is_one());
        assert_eq!(Cyclotomic::zero().inverse(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn mixed_orders_unify() {
        let a = z(2, 1);
        let b = z(3, 1);
        let prod = &a * &b;
        assert_eq!(prod.order(), 6);
        assert_eq!(prod, z(6, 5));
        assert_eq!(&prod * &a, b);
    }

    #[test]
    fn q_integers_and_factorials() {
        let w = z(3, 1);
        assert!(q_integer(0, &w).is_zero());
        assert!(q_integer(2, &Cyclotomic::from_integer(-1)).is_zero());
        assert!(q_integer(3, &w).is_zero());
        assert!(q_factorial(0, &w).is_one());
        assert!(q_factorial(1, &Cyclotomic::from_integer(-1)).is_one());
        let winv = w.inverse().unwrap();
        // (2)! = (2)(1) = 1 + ω
        assert_eq!(q_factorial(2, &winv), &Cyclotomic::one() + &winv);
        for n in 0..=20u32 {
            assert_eq!(q_integer(n, &Cyclotomic::one()), Cyclotomic::from_integer(n as i64));
        }
        for p in [2u32, 3, 5] {
            let zp = z(p, 1);
            assert!(q_factorial(p, &zp).is_zero());
            assert!(!q_factorial(p - 1, &zp).is_zero());
        }
    }

    #[test]
    fn json_form() {
        let x = &z(3, 1) * &Cyclotomic::from_fraction(-3, 4).unwrap();
        let text = serde_json::to_string(&x).unwrap();
        assert_eq!(text, r#"{"order":3,"coeffs":[["0","1"],["-3","4"]]}"#);
        let back: Cyclotomic = serde_json::from_str(&text).unwrap();
        assert_eq!(back, x);
        let bad = r#"{"order":3,"coeffs":[["1","1"]]}"#;
        assert!(serde_json::from_str::<Cyclotomic>(bad).is_err());
    }
}
