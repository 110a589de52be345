//! Elements of biquadratic fields `Q(√m₁, √m₂)`.
//!
//! An element is `c₀ + c₁√m₁ + c₂√m₂ + c₃√m₃` where `m₃` is the square-free
//! part of `m₁m₂`. Writing `g = gcd(m₁, m₂)` we have `√m₁√m₂ = g√m₃`,
//! `√m₁√m₃ = (m₁/g)√m₂` and `√m₂√m₃ = (m₂/g)√m₁`, so the integer lattice
//! spanned by the basis is closed under multiplication. The characteristic
//! polynomial is computed on that lattice (scaled by a common denominator),
//! in machine integers when they suffice and big integers otherwise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::number::{gcd, is_square_free};
use super::{QuadraticFieldElement, RatPoly, Rational};
use crate::error::{Error, Result};

/// The four sign patterns `(ε₁, ε₂)` of the Galois group, identity first.
pub const GALOIS_SIGNS: [(i8, i8); 4] = [(1, 1), (-1, 1), (1, -1), (-1, -1)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Radicals {
    m1: i64,
    m2: i64,
    m3: i64,
    g: i64,
}

impl Radicals {
    fn new(m1: i64, m2: i64) -> Result<Self> {
        for m in [m1, m2] {
            if m <= 1 || !is_square_free(m) {
                return Err(Error::NotSquareFree(m));
            }
        }
        if m1 == m2 {
            return Err(Error::FieldMismatch(format!(
                "biquadratic field needs distinct radicands, got {m1} twice"
            )));
        }
        let g = gcd(m1 as u64, m2 as u64) as i64;
        let m3 = (m1 / g) * (m2 / g);
        Ok(Radicals { m1, m2, m3, g })
    }

    /// Product of coordinate vectors over any integer-like ring.
    fn mul<T: IntLike>(&self, x: &[T; 4], y: &[T; 4]) -> [T; 4] {
        let c = |v: i64| T::from_i64(v);
        let h1 = c(self.m1 / self.g);
        let h2 = c(self.m2 / self.g);
        let z0 = x[0].clone() * y[0].clone()
            + c(self.m1) * x[1].clone() * y[1].clone()
            + c(self.m2) * x[2].clone() * y[2].clone()
            + c(self.m3) * x[3].clone() * y[3].clone();
        let z1 = x[0].clone() * y[1].clone()
            + x[1].clone() * y[0].clone()
            + h2 * (x[2].clone() * y[3].clone() + x[3].clone() * y[2].clone());
        let z2 = x[0].clone() * y[2].clone()
            + x[2].clone() * y[0].clone()
            + h1 * (x[1].clone() * y[3].clone() + x[3].clone() * y[1].clone());
        let z3 = x[0].clone() * y[3].clone()
            + x[3].clone() * y[0].clone()
            + c(self.g) * (x[1].clone() * y[2].clone() + x[2].clone() * y[1].clone());
        [z0, z1, z2, z3]
    }
}

/// Minimal integer interface for the lattice computations.
trait IntLike:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

impl IntLike for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl IntLike for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

/// `i128` arithmetic that poisons itself on overflow.
#[derive(Clone, Copy, Debug)]
struct Checked(Option<i128>);

impl Add for Checked {
    type Output = Checked;
    fn add(self, o: Checked) -> Checked {
        Checked(self.0.zip(o.0).and_then(|(a, b)| a.checked_add(b)))
    }
}

impl Sub for Checked {
    type Output = Checked;
    fn sub(self, o: Checked) -> Checked {
        Checked(self.0.zip(o.0).and_then(|(a, b)| a.checked_sub(b)))
    }
}

impl Mul for Checked {
    type Output = Checked;
    fn mul(self, o: Checked) -> Checked {
        Checked(self.0.zip(o.0).and_then(|(a, b)| a.checked_mul(b)))
    }
}

impl Neg for Checked {
    type Output = Checked;
    fn neg(self) -> Checked {
        Checked(self.0.and_then(i128::checked_neg))
    }
}

impl IntLike for Checked {
    fn from_i64(v: i64) -> Self {
        Checked(Some(v as i128))
    }
}

fn conjugate_coords<T: IntLike>(x: &[T; 4], (e1, e2): (i8, i8)) -> [T; 4] {
    let flip = |v: &T, s: i8| if s < 0 { -v.clone() } else { v.clone() };
    [
        x[0].clone(),
        flip(&x[1], e1),
        flip(&x[2], e2),
        flip(&x[3], e1 * e2),
    ]
}

/// Monic `Π (t - σ(u))` over the four conjugates, coefficients constant first.
fn lattice_char_poly<T: IntLike>(rads: &Radicals, u: &[T; 4]) -> Vec<[T; 4]> {
    let zero = || T::from_i64(0);
    let mut poly: Vec<[T; 4]> = vec![[T::from_i64(1), zero(), zero(), zero()]];
    for sign in GALOIS_SIGNS {
        let root = conjugate_coords(u, sign);
        let mut next: Vec<[T; 4]> = (0..=poly.len())
            .map(|_| [zero(), zero(), zero(), zero()])
            .collect();
        for (i, c) in poly.iter().enumerate() {
            // c·t^{i+1}
            for k in 0..4 {
                next[i + 1][k] = next[i + 1][k].clone() + c[k].clone();
            }
            // -c·root·t^i
            let prod = rads.mul(c, &root);
            for k in 0..4 {
                next[i][k] = next[i][k].clone() - prod[k].clone();
            }
        }
        poly = next;
    }
    poly
}

/// `c₀ + c₁√m₁ + c₂√m₂ + c₃√m₃` in `Q(√m₁, √m₂)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiquadraticElement {
    rads: Radicals,
    c: [Rational; 4],
}

impl BiquadraticElement {
    pub fn new(m1: i64, m2: i64, coeffs: [Rational; 4]) -> Result<Self> {
        Ok(BiquadraticElement {
            rads: Radicals::new(m1, m2)?,
            c: coeffs,
        })
    }

    pub fn rational(m1: i64, m2: i64, a: Rational) -> Result<Self> {
        Self::new(
            m1,
            m2,
            [a, Rational::zero(), Rational::zero(), Rational::zero()],
        )
    }

    /// Embeds an element of `Q(√m₁)`, `Q(√m₂)` or `Q(√m₁m₂)`.
    pub fn embed(m1: i64, m2: i64, x: &QuadraticFieldElement) -> Result<Self> {
        let rads = Radicals::new(m1, m2)?;
        let mut c = [
            x.rational_part().clone(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        let slot = match x.radicand() {
            1 => None,
            m if m == rads.m1 => Some(1),
            m if m == rads.m2 => Some(2),
            m if m == rads.m3 => Some(3),
            m => {
                return Err(Error::FieldMismatch(format!(
                    "Q(√{m}) is not a subfield of Q(√{m1}, √{m2})"
                )))
            }
        };
        if let Some(i) = slot {
            c[i] = x.radical_coefficient().clone();
        }
        Ok(BiquadraticElement { rads, c })
    }

    pub fn radicands(&self) -> (i64, i64, i64) {
        (self.rads.m1, self.rads.m2, self.rads.m3)
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.c
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.rads == other.rads {
            Ok(())
        } else {
            Err(Error::FieldMismatch("different biquadratic fields".into()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let c = std::array::from_fn(|i| &self.c[i] + &other.c[i]);
        Ok(BiquadraticElement { rads: self.rads, c })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let c = std::array::from_fn(|i| &self.c[i] - &other.c[i]);
        Ok(BiquadraticElement { rads: self.rads, c })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(BiquadraticElement {
            rads: self.rads,
            c: self.rads.mul(&self.c, &other.c),
        })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        BiquadraticElement {
            rads: self.rads,
            c: std::array::from_fn(|i| &self.c[i] * s),
        }
    }

    pub fn conjugate(&self, sign: (i8, i8)) -> Self {
        BiquadraticElement {
            rads: self.rads,
            c: conjugate_coords(&self.c, sign),
        }
    }

    /// Field norm to Q: product of the four conjugates.
    pub fn norm(&self) -> Rational {
        let p = GALOIS_SIGNS
            .iter()
            .map(|s| self.conjugate(*s))
            .reduce(|a, b| a.try_mul(&b).expect("same field"))
            .unwrap();
        debug_assert!(p.c[1..].iter().all(Rational::is_zero));
        p.c[0].clone()
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let co = GALOIS_SIGNS[1..]
            .iter()
            .map(|s| other.conjugate(*s))
            .reduce(|a, b| a.try_mul(&b).expect("same field"))
            .unwrap();
        // other · co is the norm, a rational
        let n = other.try_mul(&co)?.c[0].clone();
        let inv = n.recip().ok_or(Error::DivisionByZero)?;
        Ok(self.try_mul(&co)?.scale(&inv))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    /// Relative trace and norm down to `Q(√m₂)`, i.e. the coefficients of
    /// `(t - x)(t - σ₁x)` where `σ₁` negates `√m₁` and fixes `√m₂`.
    pub fn relative_trace_norm(&self) -> (QuadraticFieldElement, QuadraticFieldElement) {
        let m2 = self.rads.m2;
        let g = Rational::from_integer(self.rads.g);
        // x = α + β√m₁ with α = c₀ + c₂√m₂ and β = c₁ + (c₃/g)√m₂
        let alpha = QuadraticFieldElement::new(self.c[0].clone(), self.c[2].clone(), m2).unwrap();
        let beta = QuadraticFieldElement::new(self.c[1].clone(), &self.c[3] / &g, m2).unwrap();
        let trace = alpha.scale(&Rational::from_integer(2));
        let norm = alpha
            .square()
            .try_sub(&beta.square().scale(&Rational::from_integer(self.rads.m1)))
            .unwrap();
        (trace, norm)
    }

    /// Evaluates a rational polynomial at this element.
    pub fn eval_poly(&self, p: &RatPoly) -> Self {
        let zero = BiquadraticElement {
            rads: self.rads,
            c: std::array::from_fn(|_| Rational::zero()),
        };
        p.coeffs().iter().rev().fold(zero, |acc, coeff| {
            let mut next = acc.try_mul(self).unwrap();
            next.c[0] += coeff;
            next
        })
    }

    /// Characteristic polynomial over Q of degree four.
    pub fn char_poly(&self) -> RatPoly {
        let (scaled, den) = self.integral_char_poly();
        // P_x(t) = den^{-4} P_u(den·t)
        let den = Rational::from_bigint(den);
        let mut coeffs = Vec::with_capacity(5);
        let mut power = Rational::one();
        for j in (0..5).rev() {
            coeffs.push((j, Rational::from_bigint(scaled[j].clone()) / &power));
            power = &power * &den;
        }
        coeffs.sort_by_key(|(j, _)| *j);
        RatPoly::new(coeffs.into_iter().map(|(_, c)| c).collect())
    }

    /// Algebraic-integer test through the integral characteristic polynomial:
    /// with `x = u/L`, every coefficient `p_j(u)` must be divisible by
    /// `L^{4-j}`.
    pub fn is_algebraic_integer(&self) -> bool {
        let (scaled, den) = self.integral_char_poly();
        if den.is_one() {
            return true;
        }
        let mut power = BigInt::one();
        for j in (0..4).rev() {
            power *= &den;
            if !scaled[j].is_multiple_of(&power) {
                return false;
            }
        }
        true
    }

    /// Scaled integral element `u = L·x` and its monic characteristic
    /// polynomial, returned with `L`.
    fn integral_char_poly(&self) -> ([BigInt; 5], BigInt) {
        let den = self
            .c
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
        let u: [BigInt; 4] = std::array::from_fn(|i| {
            let scaled = &self.c[i] * &Rational::from_bigint(den.clone());
            scaled.to_integer().expect("cleared denominators")
        });
        let small: Option<[i128; 4]> = u
            .iter()
            .map(|v| v.to_i128())
            .collect::<Option<Vec<_>>>()
            .map(|v| [v[0], v[1], v[2], v[3]]);
        if let Some(s) = small {
            let poly = lattice_char_poly(&self.rads, &s.map(|v| Checked(Some(v))));
            if poly.iter().all(|c| c.iter().all(|x| x.0.is_some())) {
                let poly: Vec<[i128; 4]> = poly.iter().map(|c| c.map(|x| x.0.unwrap())).collect();
                assert!(
                    poly.iter().all(|c| c[1..].iter().all(|x| *x == 0)),
                    "non-rational characteristic polynomial"
                );
                return (std::array::from_fn(|j| BigInt::from(poly[j][0])), den);
            }
        }
        let poly = lattice_char_poly(&self.rads, &u);
        assert!(
            poly.iter().all(|c| c[1..].iter().all(Zero::is_zero)),
            "non-rational characteristic polynomial"
        );
        (std::array::from_fn(|j| poly[j][0].clone()), den)
    }

    pub fn to_f64(&self) -> f64 {
        let (m1, m2, m3) = self.radicands();
        self.c[0].to_f64()
            + self.c[1].to_f64() * (m1 as f64).sqrt()
            + self.c[2].to_f64() * (m2 as f64).sqrt()
            + self.c[3].to_f64() * (m3 as f64).sqrt()
    }
}

impl fmt::Display for BiquadraticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m1, m2, m3) = self.radicands();
        write!(
            f,
            "{} + {}·√{m1} + {}·√{m2} + {}·√{m3}",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

impl fmt::Debug for BiquadraticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({self})")
    }
}

/// Characteristic polynomial of a biquadratic element.
pub fn biquad_char_poly(x: &BiquadraticElement) -> RatPoly {
    x.char_poly()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn el(m1: i64, m2: i64, c: [i64; 4]) -> BiquadraticElement {
        BiquadraticElement::new(m1, m2, c.map(q)).unwrap()
    }

    /// Oracle: expand the product of linear factors numerically in floats
    /// and compare to the exact polynomial.
    fn float_char_poly(x: &BiquadraticElement) -> Vec<f64> {
        let mut poly = vec![1.0f64];
        for s in GALOIS_SIGNS {
            let root = x.conjugate(s).to_f64();
            let mut next = vec![0.0; poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * root;
            }
            poly = next;
        }
        poly
    }

    #[test]
    fn sqrt2_plus_sqrt3() {
        let x = el(2, 3, [0, 1, 1, 0]);
        assert_eq!(
            biquad_char_poly(&x),
            RatPoly::from_integers(&[1, 0, -10, 0, 1])
        );
        assert!(x.is_algebraic_integer());
    }

    #[test]
    fn rational_elements() {
        let half = BiquadraticElement::rational(2, 3, Rational::new(1, 2)).unwrap();
        let expect = RatPoly::linear_root(&Rational::new(1, 2)).pow(4);
        assert_eq!(half.char_poly(), expect);
        assert!(!half.char_poly().is_integral());
        assert!(!half.is_algebraic_integer());
        let one = BiquadraticElement::rational(2, 3, q(1)).unwrap();
        assert_eq!(one.char_poly(), RatPoly::from_integers(&[-1, 1]).pow(4));
    }

    #[test]
    fn product_radical_reduction() {
        // √6·√10 = 2√15: m₃ = 15, g = 2
        let x = el(6, 10, [0, 1, 0, 0]);
        let y = el(6, 10, [0, 0, 1, 0]);
        let p = x.try_mul(&y).unwrap();
        assert_eq!(p.radicands().2, 15);
        assert_eq!(p.coeffs(), &[q(0), q(0), q(0), q(2)]);
        // √6·√15 = 3√10
        let z = el(6, 10, [0, 0, 0, 1]);
        assert_eq!(x.try_mul(&z).unwrap().coeffs(), &[q(0), q(0), q(3), q(0)]);
    }

    #[test]
    fn char_poly_matches_float_expansion() {
        for (m1, m2) in [(2, 3), (6, 10), (5, 7), (2, 6), (15, 21)] {
            let x = BiquadraticElement::new(
                m1,
                m2,
                [Rational::new(3, 2), q(-1), Rational::new(2, 5), q(1)],
            )
            .unwrap();
            let exact: Vec<f64> = x
                .char_poly()
                .coeffs()
                .iter()
                .map(Rational::to_f64)
                .collect();
            let approx = float_char_poly(&x);
            for (a, b) in exact.iter().zip(&approx) {
                assert!(
                    (a - b).abs() < 1e-8 * (1.0 + b.abs()),
                    "{m1},{m2}: {exact:?} vs {approx:?}"
                );
            }
        }
    }

    #[test]
    fn char_poly_annihilates_element() {
        let x = BiquadraticElement::new(
            3,
            5,
            [q(1), Rational::new(1, 3), q(-2), Rational::new(5, 7)],
        )
        .unwrap();
        assert!(x.eval_poly(&x.char_poly()).is_zero());
    }

    #[test]
    fn big_integer_fallback() {
        let huge = Rational::from_integer(i64::MAX / 3);
        let x = BiquadraticElement::new(2, 3, [huge.clone(), huge.clone(), q(1), huge]).unwrap();
        let p = x.char_poly();
        assert!(p.is_integral());
        assert!(x.eval_poly(&p).is_zero());
    }

    #[test]
    fn division_and_relative_norm() {
        let x = el(2, 3, [1, 1, 0, 0]);
        let y = el(2, 3, [2, 0, 1, 0]);
        let z = x.try_div(&y).unwrap();
        assert_eq!(z.try_mul(&y).unwrap(), x);
        let (tr, nm) = x.relative_trace_norm();
        assert_eq!(tr, QuadraticFieldElement::integer(2));
        assert_eq!(nm, QuadraticFieldElement::integer(-1));
    }

    #[test]
    fn rejects_bad_radicands() {
        assert!(BiquadraticElement::new(2, 2, std::array::from_fn(|_| q(0))).is_err());
        assert!(BiquadraticElement::new(4, 3, std::array::from_fn(|_| q(0))).is_err());
        assert!(BiquadraticElement::new(1, 3, std::array::from_fn(|_| q(0))).is_err());
    }
}
