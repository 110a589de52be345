//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! Numbers are stored as coefficient vectors modulo `x^N - 1`, which keeps
//! multiplication a plain cyclic convolution. Equality and rationality are
//! decided after reducing modulo the `N`-th cyclotomic polynomial.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::number::{divisors, lcm};
use super::{RatPoly, Rational};
use crate::error::{Error, Result};

thread_local! {
    static CYCLOTOMIC_POLYS: RefCell<HashMap<u64, RatPoly>> = RefCell::new(HashMap::new());
}

/// The `n`-th cyclotomic polynomial `Φ_n`.
pub fn cyclotomic_polynomial(n: u64) -> RatPoly {
    assert!(n >= 1);
    if let Some(p) = CYCLOTOMIC_POLYS.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    // x^n - 1 = Π_{d | n} Φ_d
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    coeffs[0] = Rational::from_integer(-1);
    coeffs[n as usize] = Rational::one();
    let mut p = RatPoly::new(coeffs);
    for d in divisors(n).into_iter().filter(|d| *d < n) {
        let (q, r) = p.div_rem(&cyclotomic_polynomial(d));
        debug_assert!(r.is_zero());
        p = q;
    }
    CYCLOTOMIC_POLYS.with(|c| c.borrow_mut().insert(n, p.clone()));
    p
}

/// `Σ cᵢ ζ_N^i` with `N` the conductor.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "CyclotomicRepr", into = "CyclotomicRepr")]
pub struct CyclotomicNumber {
    conductor: u64,
    coeffs: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    #[serde(rename = "N")]
    n: u64,
    coeffs: Vec<Rational>,
}

impl TryFrom<CyclotomicRepr> for CyclotomicNumber {
    type Error = Error;
    fn try_from(r: CyclotomicRepr) -> Result<Self> {
        if r.n == 0 || r.coeffs.len() as u64 != r.n {
            return Err(Error::InvalidInput(format!(
                "cyclotomic number needs N >= 1 and exactly N coefficients (N = {}, got {})",
                r.n,
                r.coeffs.len()
            )));
        }
        Ok(CyclotomicNumber {
            conductor: r.n,
            coeffs: r.coeffs,
        })
    }
}

impl From<CyclotomicNumber> for CyclotomicRepr {
    fn from(z: CyclotomicNumber) -> Self {
        CyclotomicRepr {
            n: z.conductor,
            coeffs: z.coeffs,
        }
    }
}

impl CyclotomicNumber {
    pub fn zero(conductor: u64) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        CyclotomicNumber {
            conductor,
            coeffs: vec![Rational::zero(); conductor as usize],
        }
    }

    pub fn from_rational(conductor: u64, r: Rational) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = r;
        z
    }

    pub fn from_integer(conductor: u64, n: i64) -> Self {
        Self::from_rational(conductor, Rational::from_integer(n))
    }

    /// `ζ_N^j`; the exponent is taken modulo `N`.
    pub fn root(conductor: u64, j: u64) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[(j % conductor) as usize] = Rational::one();
        z
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Re-expresses the number over a multiple of its conductor.
    pub fn lift(&self, conductor: u64) -> Self {
        assert!(
            conductor.is_multiple_of(self.conductor),
            "lift target must be a multiple of the conductor"
        );
        if conductor == self.conductor {
            return self.clone();
        }
        let step = (conductor / self.conductor) as usize;
        let mut z = Self::zero(conductor);
        for (i, c) in self.coeffs.iter().enumerate() {
            z.coeffs[i * step] = c.clone();
        }
        z
    }

    fn align(&self, other: &Self) -> (Self, Self) {
        let n = lcm(self.conductor, other.conductor);
        (self.lift(n), other.lift(n))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.align(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = self.align(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.align(other);
        let n = a.conductor as usize;
        let mut out = Self::zero(a.conductor);
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                out.coeffs[(i + j) % n] += &(x * y);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn conjugate(&self) -> Self {
        let n = self.conductor as usize;
        let mut z = Self::zero(self.conductor);
        for (i, c) in self.coeffs.iter().enumerate() {
            z.coeffs[(n - i) % n] = c.clone();
        }
        z
    }

    /// `z · conj(z)`, the squared absolute value.
    pub fn norm_squared(&self) -> Self {
        self.mul(&self.conjugate())
    }

    /// Coefficients of the canonical representative of degree `< φ(N)`.
    pub fn reduced(&self) -> RatPoly {
        RatPoly::new(self.coeffs.clone()).rem(&cyclotomic_polynomial(self.conductor))
    }

    /// The same number with its coefficient vector replaced by the canonical
    /// representative modulo `Φ_N`.
    pub fn canonicalize(&self) -> Self {
        let mut z = Self::zero(self.conductor);
        for (i, c) in self.reduced().coeffs().iter().enumerate() {
            z.coeffs[i] = c.clone();
        }
        z
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        let r = self.reduced();
        match r.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(r.coeffs()[0].clone()),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.to_rational().is_some()
    }

    /// Floating-point value as `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (i, c)| {
                let theta = std::f64::consts::TAU * i as f64 / n;
                let v = c.to_f64();
                (re + v * theta.cos(), im + v * theta.sin())
            })
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.conductor;
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                _ if c.is_one() => format!("ζ{n}^{i}"),
                _ => format!("{c}·ζ{n}^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({self})")
    }
}

pub fn cyc_root(n: u64, j: u64) -> CyclotomicNumber {
    CyclotomicNumber::root(n, j)
}

pub fn cyc_add(x: &CyclotomicNumber, y: &CyclotomicNumber) -> CyclotomicNumber {
    x.add(y)
}

pub fn cyc_mul(x: &CyclotomicNumber, y: &CyclotomicNumber) -> CyclotomicNumber {
    x.mul(y)
}

pub fn cyc_conjugate(x: &CyclotomicNumber) -> CyclotomicNumber {
    x.conjugate()
}

pub fn cyc_is_rational(x: &CyclotomicNumber) -> bool {
    x.is_rational()
}

pub fn cyc_norm_squared(x: &CyclotomicNumber) -> CyclotomicNumber {
    x.norm_squared()
}
