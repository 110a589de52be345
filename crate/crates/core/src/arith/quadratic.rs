//! Elements `a + b√m` of a quadratic field `Q(√m)`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::number::{is_square_free, square_free_decompose};
use super::{RatPoly, Rational};
use crate::error::{Error, Result};

/// `a + b√m` with `m` square-free. Rationals are stored with `m = 1, b = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "QuadraticRepr", into = "QuadraticRepr")]
pub struct QuadraticFieldElement {
    m: i64,
    a: Rational,
    b: Rational,
}

#[derive(Serialize, Deserialize)]
struct QuadraticRepr {
    a: Rational,
    b: Rational,
    m: i64,
}

impl TryFrom<QuadraticRepr> for QuadraticFieldElement {
    type Error = Error;
    fn try_from(r: QuadraticRepr) -> Result<Self> {
        QuadraticFieldElement::new(r.a, r.b, r.m)
    }
}

impl From<QuadraticFieldElement> for QuadraticRepr {
    fn from(x: QuadraticFieldElement) -> Self {
        QuadraticRepr {
            a: x.a,
            b: x.b,
            m: x.m,
        }
    }
}

impl QuadraticFieldElement {
    /// `a + b√m`; `m` must be square-free and nonzero.
    pub fn new(a: Rational, b: Rational, m: i64) -> Result<Self> {
        if !is_square_free(m) {
            return Err(Error::NotSquareFree(m));
        }
        Ok(Self::canonical(a, b, m))
    }

    fn canonical(a: Rational, b: Rational, m: i64) -> Self {
        if b.is_zero() || m == 1 {
            let a = if m == 1 { &a + &b } else { a };
            QuadraticFieldElement {
                m: 1,
                a,
                b: Rational::zero(),
            }
        } else {
            QuadraticFieldElement { m, a, b }
        }
    }

    pub fn rational(a: Rational) -> Self {
        QuadraticFieldElement {
            m: 1,
            a,
            b: Rational::zero(),
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(Rational::from_integer(n))
    }

    /// `√n` for any integer `n`, with the radicand reduced to square-free form.
    pub fn sqrt_of(n: i64) -> Self {
        if n == 0 {
            return Self::integer(0);
        }
        let (scale, core) = square_free_decompose(n);
        Self::canonical(Rational::zero(), Rational::from_integer(scale), core)
    }

    /// Radicand; `1` for rationals.
    pub fn radicand(&self) -> i64 {
        self.m
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_coefficient(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.m == 1
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.is_rational() && self.a.is_zero()
    }

    /// Galois conjugate `a - b√m`.
    pub fn conjugate(&self) -> Self {
        QuadraticFieldElement {
            m: self.m,
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Field trace `2a` (of the degree-2 extension, also for rationals).
    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    /// Field norm `a² - mb²`.
    pub fn norm(&self) -> Rational {
        &self.a.square() - &(&self.b.square() * &Rational::from_integer(self.m))
    }

    /// Characteristic polynomial over Q of multiplication by `self` on the
    /// two-dimensional space `Q ⊕ Q√m`: `t² - trace·t + norm`.
    pub fn char_poly(&self) -> RatPoly {
        RatPoly::new(vec![self.norm(), -self.trace(), Rational::one()])
    }

    /// Minimal polynomial over Q (degree 1 for rationals).
    pub fn min_poly(&self) -> RatPoly {
        if self.is_rational() {
            RatPoly::linear_root(&self.a)
        } else {
            self.char_poly()
        }
    }

    /// Algebraic-integer test: monic integral degree-2 characteristic
    /// polynomial, or integer value in the rational case.
    pub fn is_algebraic_integer(&self) -> bool {
        if self.is_rational() {
            self.a.is_integer()
        } else {
            self.trace().is_integer() && self.norm().is_integer()
        }
    }

    fn unify(&self, other: &Self) -> Result<i64> {
        match (self.m, other.m) {
            (1, m) | (m, 1) => Ok(m),
            (m1, m2) if m1 == m2 => Ok(m1),
            (m1, m2) => Err(Error::FieldMismatch(format!("Q(√{m1}) vs Q(√{m2})"))),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let m = self.unify(other)?;
        Ok(Self::canonical(&self.a + &other.a, &self.b + &other.b, m))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let m = self.unify(other)?;
        Ok(Self::canonical(&self.a - &other.a, &self.b - &other.b, m))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let m = self.unify(other)?;
        let mr = Rational::from_integer(m);
        let a = &(&self.a * &other.a) + &(&(&self.b * &other.b) * &mr);
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        Ok(Self::canonical(a, b, m))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        let n = other.norm();
        let inv_n = n.recip().ok_or(Error::DivisionByZero)?;
        let num = self.try_mul(&other.conjugate())?;
        Ok(num.scale(&inv_n))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::canonical(&self.a * c, &self.b * c, self.m)
    }

    pub fn neg(&self) -> Self {
        Self::canonical(-&self.a, -&self.b, self.m)
    }

    pub fn square(&self) -> Self {
        self.try_mul(self).expect("same field")
    }

    /// Sign of the real value (√m taken positive). `None` for `m < 0`
    /// with nonzero radical part.
    pub fn signum(&self) -> Option<i32> {
        if self.is_rational() {
            return Some(self.a.signum());
        }
        if self.m < 0 {
            return None;
        }
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sa == 0 {
            return Some(sb);
        }
        if sa == sb {
            return Some(sa);
        }
        // opposite signs: compare a² with m·b²
        let a2 = self.a.square();
        let mb2 = &self.b.square() * &Rational::from_integer(self.m);
        Some(match a2.cmp(&mb2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        })
    }

    /// Exact comparison of real embeddings; errors on mismatched or
    /// imaginary fields.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        let diff = self.try_sub(other)?;
        match diff.signum() {
            Some(s) => Ok(s.cmp(&0)),
            None => Err(Error::FieldMismatch(
                "comparison in imaginary quadratic field".into(),
            )),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * (self.m as f64).sqrt()
    }
}

impl From<Rational> for QuadraticFieldElement {
    fn from(a: Rational) -> Self {
        Self::rational(a)
    }
}

impl fmt::Display for QuadraticFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let rad = format!("√{}", self.m);
        let b_abs = self.b.abs();
        let b_str = if b_abs.is_one() {
            rad
        } else {
            format!("{b_abs}·{rad}")
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{b_str}")
            } else {
                write!(f, "{b_str}")
            }
        } else {
            let op = if self.b.is_negative() { '-' } else { '+' };
            write!(f, "{} {op} {b_str}", self.a)
        }
    }
}

impl fmt::Debug for QuadraticFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({self})")
    }
}

/// Standalone integrality test for a quadratic-field element.
pub fn quad_is_algebraic_integer(x: &QuadraticFieldElement) -> bool {
    x.is_algebraic_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn qf(a: Rational, b: Rational, m: i64) -> QuadraticFieldElement {
        QuadraticFieldElement::new(a, b, m).unwrap()
    }

    #[test]
    fn golden_ratio_is_integral() {
        let phi = qf(r(1, 2), r(1, 2), 5);
        assert!(quad_is_algebraic_integer(&phi));
        assert_eq!(phi.char_poly(), RatPoly::from_integers(&[-1, -1, 1]));
    }

    #[test]
    fn half_is_not_integral() {
        assert!(!quad_is_algebraic_integer(
            &QuadraticFieldElement::rational(r(1, 2))
        ));
    }

    #[test]
    fn three_plus_two_root_two() {
        let x = qf(r(3, 1), r(2, 1), 2);
        assert!(x.is_algebraic_integer());
        assert_eq!(x.char_poly(), RatPoly::from_integers(&[1, -6, 1]));
    }

    #[test]
    fn canonical_forms() {
        let s = QuadraticFieldElement::sqrt_of(12);
        assert_eq!(s.radicand(), 3);
        assert_eq!(s.radical_coefficient(), &r(2, 1));
        assert!(QuadraticFieldElement::sqrt_of(16).is_rational());
        assert_eq!(
            QuadraticFieldElement::sqrt_of(16),
            QuadraticFieldElement::integer(4)
        );
        assert!(QuadraticFieldElement::new(r(1, 1), r(1, 1), 8).is_err());
        let zero_radical = qf(r(2, 1), r(0, 1), 7);
        assert_eq!(zero_radical.radicand(), 1);
    }

    #[test]
    fn arithmetic_and_order() {
        let phi = qf(r(1, 2), r(1, 2), 5);
        // φ² = φ + 1
        assert_eq!(
            phi.square(),
            phi.try_add(&QuadraticFieldElement::integer(1)).unwrap()
        );
        let inv = QuadraticFieldElement::integer(1).try_div(&phi).unwrap();
        assert_eq!(
            inv,
            phi.try_sub(&QuadraticFieldElement::integer(1)).unwrap()
        );
        assert_eq!(
            phi.try_cmp(&QuadraticFieldElement::rational(r(8, 5)))
                .unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            phi.try_cmp(&QuadraticFieldElement::rational(r(13, 8)))
                .unwrap(),
            Ordering::Less
        );
        let mismatch = phi.try_add(&QuadraticFieldElement::sqrt_of(2));
        assert!(matches!(mismatch, Err(Error::FieldMismatch(_))));
    }

    #[test]
    fn serde_shape() {
        let phi = qf(r(1, 2), r(1, 2), 5);
        let js = serde_json::to_string(&phi).unwrap();
        assert_eq!(js, r#"{"a":"1/2","b":"1/2","m":5}"#);
        let back: QuadraticFieldElement = serde_json::from_str(&js).unwrap();
        assert_eq!(back, phi);
        assert!(
            serde_json::from_str::<QuadraticFieldElement>(r#"{"a":"1","b":"1","m":4}"#).is_err()
        );
    }
}
