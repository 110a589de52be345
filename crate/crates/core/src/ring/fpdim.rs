//! Frobenius-Perron dimensions.
//!
//! Invertible objects and the non-invertible object of a near-group ring
//! have closed forms. Anything else goes through the characteristic
//! polynomial of its left-multiplication matrix: the largest real root is
//! isolated with Sturm sequences, then identified exactly when it is an
//! integer or a quadratic irrationality, and returned as a certified
//! rational enclosure otherwise.

use serde::Serialize;

use super::{recognize_near_group, FusionRing};
use crate::arith::number::isqrt;
use crate::arith::{QuadraticFieldElement, RatPoly, Rational};
use crate::error::Result;
use crate::group::FiniteGroup;

/// A Frobenius-Perron dimension, exact when identifiable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FpDim {
    Exact {
        value: QuadraticFieldElement,
    },
    /// The dimension lies in `(lo, hi]`.
    Enclosure {
        lo: Rational,
        hi: Rational,
    },
}

impl FpDim {
    pub fn exact(value: QuadraticFieldElement) -> Self {
        FpDim::Exact { value }
    }

    pub fn as_exact(&self) -> Option<&QuadraticFieldElement> {
        match self {
            FpDim::Exact { value } => Some(value),
            FpDim::Enclosure { .. } => None,
        }
    }

    /// A rational enclosure `(lo, hi]`, degenerate-free for exact values.
    pub fn bounds(&self) -> (Rational, Rational) {
        match self {
            FpDim::Exact { value } => quadratic_bounds(value),
            FpDim::Enclosure { lo, hi } => (lo.clone(), hi.clone()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            FpDim::Exact { value } => value.to_f64(),
            FpDim::Enclosure { lo, hi } => (lo.to_f64() + hi.to_f64()) / 2.0,
        }
    }
}

const BOUND_BITS: u32 = 24;

/// Rational bounds on a real quadratic value from `isqrt`.
fn quadratic_bounds(x: &QuadraticFieldElement) -> (Rational, Rational) {
    if x.is_rational() {
        let v = x.rational_part().clone();
        return (&v - &Rational::new(1, 1 << BOUND_BITS), v);
    }
    let m = x.radicand() as u64;
    let scale = 1u64 << BOUND_BITS;
    let s = isqrt(m * scale * scale);
    let root_lo = Rational::new(s as i64, scale as i64);
    let root_hi = Rational::new(s as i64 + 1, scale as i64);
    let b = x.radical_coefficient();
    let (lo_b, hi_b) = if b.is_negative() {
        (b * &root_hi, b * &root_lo)
    } else {
        (b * &root_lo, b * &root_hi)
    };
    (x.rational_part() + &lo_b, x.rational_part() + &hi_b)
}

/// `(k + √(k² + 4n)) / 2`.
pub fn near_group_dimension(n: u64, k: u64) -> QuadraticFieldElement {
    let (n, k) = (n as i64, k as i64);
    QuadraticFieldElement::sqrt_of(k * k + 4 * n)
        .try_add(&QuadraticFieldElement::integer(k))
        .expect("sqrt_of and integers share a field")
        .scale(&Rational::new(1, 2))
}

/// Characteristic polynomial of an integer matrix by Faddeev-LeVerrier.
fn char_poly(m: &[Vec<u64>]) -> RatPoly {
    let r = m.len();
    let a: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| row.iter().map(|x| Rational::from(*x)).collect())
        .collect();
    let mut coeffs = vec![Rational::zero(); r + 1];
    coeffs[r] = Rational::one();
    let mut mk = vec![vec![Rational::zero(); r]; r];
    for k in 1..=r {
        // M_k = A·M_{k-1} + c_{r-k+1}·I
        let mut next = vec![vec![Rational::zero(); r]; r];
        for i in 0..r {
            for j in 0..r {
                let mut s = Rational::zero();
                for l in 0..r {
                    if !a[i][l].is_zero() && !mk[l][j].is_zero() {
                        s += &(&a[i][l] * &mk[l][j]);
                    }
                }
                next[i][j] = s;
            }
            next[i][i] += &coeffs[r - k + 1];
        }
        mk = next;
        let mut tr = Rational::zero();
        for i in 0..r {
            for l in 0..r {
                if !a[i][l].is_zero() && !mk[l][i].is_zero() {
                    tr += &(&a[i][l] * &mk[l][i]);
                }
            }
        }
        coeffs[r - k] = -(&tr / &Rational::from(k));
    }
    RatPoly::new(coeffs)
}

fn round(x: &Rational) -> i64 {
    let half = Rational::new(1, 2);
    (x + &half).floor().try_into().expect("desk-scale value")
}

/// Largest real root of a monic integer polynomial known to have a
/// nonnegative real root.
fn largest_root(p: &RatPoly) -> FpDim {
    let bound = Rational::one() + p.coeffs().iter().map(Rational::abs).max().unwrap();
    let mut lo = Rational::from_integer(-1);
    let mut hi = bound.clone();
    assert!(
        p.count_real_roots(&lo, &hi) >= 1,
        "no nonnegative real root"
    );
    let eps = Rational::new(1, 1 << 40);
    let half = Rational::new(1, 2);
    for _ in 0..400 {
        if &hi - &lo < eps && p.count_real_roots(&lo, &hi) == 1 {
            break;
        }
        let mid = &(&lo + &hi) * &half;
        if p.count_real_roots(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let approx = &(&lo + &hi) * &half;
    let c = Rational::from_integer(round(&approx));
    if c > lo && c <= hi && p.eval(&c).is_zero() {
        return FpDim::exact(QuadraticFieldElement::rational(c));
    }
    // quadratic factor t² - st + P with the conjugate root s - λ of modulus
    // at most λ
    let top = hi.ceil().try_into().unwrap_or(i64::MAX / 4);
    for s in -top..=2 * top {
        let prod = round(&(&approx * &(&Rational::from_integer(s) - &approx)));
        let disc = s * s - 4 * prod;
        if disc <= 0 || isqrt(disc as u64).pow(2) == disc as u64 {
            continue;
        }
        let factor = RatPoly::from_integers(&[prod, -s, 1]);
        if !p.rem(&factor).is_zero() {
            continue;
        }
        let root = QuadraticFieldElement::sqrt_of(disc)
            .try_add(&QuadraticFieldElement::integer(s))
            .unwrap()
            .scale(&half);
        let above = root
            .try_cmp(&QuadraticFieldElement::rational(lo.clone()))
            .ok()
            == Some(std::cmp::Ordering::Greater);
        let below = root
            .try_cmp(&QuadraticFieldElement::rational(hi.clone()))
            .ok()
            != Some(std::cmp::Ordering::Greater);
        if above && below {
            return FpDim::exact(root);
        }
    }
    FpDim::Enclosure { lo, hi }
}

/// Dimensions of all basis elements of a ring that is assumed axiomatic.
fn dims_unchecked(ring: &FusionRing) -> Vec<FpDim> {
    let near_group = recognize_near_group(ring).map(|rule| {
        let n = FiniteGroup::from_spec(&rule.group)
            .map(|g| g.order())
            .unwrap_or(0) as u64;
        near_group_dimension(n, rule.k)
    });
    (0..ring.rank())
        .map(|i| {
            if ring.is_invertible(i) {
                FpDim::exact(QuadraticFieldElement::integer(1))
            } else if let Some(d) = &near_group {
                FpDim::exact(d.clone())
            } else {
                largest_root(&char_poly(&ring.left_matrix(i)))
            }
        })
        .collect()
}

/// Frobenius-Perron dimension of every basis element.
pub fn fpdims(ring: &FusionRing) -> Result<Vec<FpDim>> {
    ring.require_axioms()?;
    Ok(dims_unchecked(ring))
}

/// Frobenius-Perron dimension of basis element `i`.
pub fn fpdim_object(ring: &FusionRing, i: usize) -> Result<FpDim> {
    Ok(fpdims(ring)?.swap_remove(i))
}

/// `Σ FPdim(i)²`, exact when all summands share a quadratic field.
pub fn fpdim_ring(ring: &FusionRing) -> Result<FpDim> {
    let dims = fpdims(ring)?;
    let exact: Option<QuadraticFieldElement> = dims
        .iter()
        .try_fold(QuadraticFieldElement::integer(0), |acc, d| {
            d.as_exact().and_then(|x| acc.try_add(&x.square()).ok())
        });
    if let Some(total) = exact {
        return Ok(FpDim::exact(total));
    }
    let (mut lo, mut hi) = (Rational::zero(), Rational::zero());
    for d in &dims {
        let (l, h) = d.bounds();
        // dimensions are at least 1, so squaring preserves order
        let l = if l < Rational::one() {
            Rational::one()
        } else {
            l
        };
        lo += &l.square();
        hi += &h.square();
    }
    Ok(FpDim::Enclosure { lo, hi })
}

/// A near-group pair `(n, k)` with integral `FPdim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralPair {
    pub n: u64,
    pub k: u64,
    pub fpdim_x: QuadraticFieldElement,
    pub fpdim_c: QuadraticFieldElement,
}

/// Outcome of the integer-dimension scan.
#[derive(Clone, Debug, Serialize)]
pub struct IntegerFpdimReport {
    pub n_max: u64,
    pub pairs_scanned: u64,
    /// Pairs with `0 ≤ k ≤ n-1` and integral `FPdim(C)`, before filtering.
    pub integral: Vec<IntegralPair>,
    /// Integral pairs removed by the imported bound `|G| ≤ k+1` for `k ≠ 0`.
    pub bound_excluded: Vec<(u64, u64)>,
    pub bound_citation: &'static str,
    /// Surviving pairs.
    pub output: Vec<IntegralPair>,
    /// Surviving pairs with `k ∉ {0, n-1}`.
    pub falsifications: Vec<(u64, u64)>,
    /// `k = n-1` pairs where `FPdim(C) ≠ n(n+1)`.
    pub dimension_failures: Vec<(u64, u64)>,
}

impl IntegerFpdimReport {
    pub fn passed(&self) -> bool {
        self.falsifications.is_empty() && self.dimension_failures.is_empty()
    }
}

/// Scans `1 ≤ n ≤ n_max`, `0 ≤ k ≤ n-1` for near-group rules of integral
/// global dimension.
pub fn integer_fpdim_scan(n_max: u64) -> IntegerFpdimReport {
    let mut report = IntegerFpdimReport {
        n_max,
        pairs_scanned: 0,
        integral: Vec::new(),
        bound_excluded: Vec::new(),
        bound_citation:
            "Siehler, near-group categories: |G| ≤ k+1 whenever k ≠ 0 (imported theorem)",
        output: Vec::new(),
        falsifications: Vec::new(),
        dimension_failures: Vec::new(),
    };
    for n in 1..=n_max {
        for k in 0..n {
            report.pairs_scanned += 1;
            let d = near_group_dimension(n, k);
            let total = QuadraticFieldElement::integer(n as i64)
                .try_add(&d.square())
                .expect("same field");
            if !total.as_rational().is_some_and(Rational::is_integer) {
                continue;
            }
            let pair = IntegralPair {
                n,
                k,
                fpdim_x: d,
                fpdim_c: total,
            };
            report.integral.push(pair.clone());
            if k != 0 && n > k + 1 {
                report.bound_excluded.push((n, k));
                continue;
            }
            if k != 0 && k != n - 1 {
                report.falsifications.push((n, k));
            }
            if k == n - 1 && pair.fpdim_c != QuadraticFieldElement::integer((n * (n + 1)) as i64) {
                report.dimension_failures.push((n, k));
            }
            report.output.push(pair);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroupSpec;
    use crate::ring::{build_group_ring, build_near_group, NearGroupRule};

    fn q(n: i64) -> QuadraticFieldElement {
        QuadraticFieldElement::integer(n)
    }

    fn golden() -> QuadraticFieldElement {
        QuadraticFieldElement::new(Rational::new(1, 2), Rational::new(1, 2), 5).unwrap()
    }

    #[test]
    fn closed_forms() {
        let r = build_near_group(&NearGroupRule::new(FiniteGroupSpec::cyclic(3), 2)).unwrap();
        assert_eq!(fpdim_object(&r, 3).unwrap(), FpDim::exact(q(3)));
        assert_eq!(fpdim_object(&r, 1).unwrap(), FpDim::exact(q(1)));
        assert_eq!(fpdim_ring(&r).unwrap(), FpDim::exact(q(12)));
        let yl = build_near_group(&NearGroupRule::new(FiniteGroupSpec::trivial(), 1)).unwrap();
        assert_eq!(fpdim_object(&yl, 1).unwrap(), FpDim::exact(golden()));
        let total =
            QuadraticFieldElement::new(Rational::new(5, 2), Rational::new(1, 2), 5).unwrap();
        assert_eq!(fpdim_ring(&yl).unwrap(), FpDim::exact(total));
        assert_eq!(
            fpdim_ring(&build_group_ring(&FiniteGroupSpec::product(&[2, 3])).unwrap()).unwrap(),
            FpDim::exact(q(6))
        );
    }

    #[test]
    fn characteristic_polynomial_route_agrees_with_closed_form() {
        for (n, k) in [(1u64, 1u64), (2, 1), (3, 2), (2, 2), (4, 3), (5, 0), (1, 4)] {
            let r = build_near_group(&NearGroupRule::new(FiniteGroupSpec::cyclic(n), k)).unwrap();
            let x = r.rank() - 1;
            let general = largest_root(&char_poly(&r.left_matrix(x)));
            assert_eq!(
                general,
                FpDim::exact(near_group_dimension(n, k)),
                "(Z/{n},{k})"
            );
        }
    }

    #[test]
    fn general_ring_gets_exact_or_certified_value() {
        // Yang-Lee squared: basis 1, a, b, ab with a = b = φ, ab = φ²
        let yl = build_near_group(&NearGroupRule::new(FiniteGroupSpec::trivial(), 1)).unwrap();
        let t = yl.tensor(&yl);
        let dims = fpdims(&t).unwrap();
        assert_eq!(dims[1], FpDim::exact(golden()));
        assert_eq!(dims[3], FpDim::exact(golden().square()));
        // Fibonacci (1,1) tensor Ising-like TY (Z/2,0): √2 and φ mix fields
        let ty = build_near_group(&NearGroupRule::new(FiniteGroupSpec::cyclic(2), 0)).unwrap();
        let mix = yl.tensor(&ty);
        let dims = fpdims(&mix).unwrap();
        let sqrt2 = QuadraticFieldElement::sqrt_of(2);
        assert_eq!(dims[2], FpDim::exact(sqrt2));
        // φ·√2 is quartic, so only an enclosure is available
        let FpDim::Enclosure { lo, hi } = &dims[5] else {
            panic!("expected enclosure, got {:?}", dims[5])
        };
        let v = golden().to_f64() * 2f64.sqrt();
        assert!(lo.to_f64() < v + 1e-9 && v - 1e-9 <= hi.to_f64());
        let FpDim::Enclosure { lo, hi } = fpdim_ring(&mix).unwrap() else {
            panic!()
        };
        let total = (1.0 + golden().to_f64().powi(2)) * 4.0;
        assert!(lo.to_f64() <= total && total <= hi.to_f64());
    }

    #[test]
    fn multiplicativity() {
        for (spec, k) in [
            (FiniteGroupSpec::cyclic(3), 2),
            (FiniteGroupSpec::product(&[2, 2]), 1),
            (FiniteGroupSpec::s3(), 4),
        ] {
            let r = build_near_group(&NearGroupRule::new(spec, k)).unwrap();
            let dims = fpdims(&r).unwrap();
            let d: Vec<QuadraticFieldElement> =
                dims.iter().map(|x| x.as_exact().unwrap().clone()).collect();
            for i in 0..r.rank() {
                for j in 0..r.rank() {
                    let lhs = r.product(i, j).into_iter().fold(q(0), |acc, (k, m)| {
                        acc.try_add(&d[k].scale(&Rational::from(m))).unwrap()
                    });
                    assert_eq!(lhs, d[i].try_mul(&d[j]).unwrap());
                }
            }
        }
    }

    #[test]
    fn non_axiomatic_rings_are_rejected() {
        let mut r = build_near_group(&NearGroupRule::new(FiniteGroupSpec::cyclic(2), 1)).unwrap();
        r.set_n(2, 2, 1, 2);
        assert!(fpdim_object(&r, 2).is_err());
    }

    #[test]
    fn small_integer_scan() {
        let report = integer_fpdim_scan(10);
        assert!(report.passed());
        let out: Vec<(u64, u64)> = report.output.iter().map(|p| (p.n, p.k)).collect();
        let mut expected: Vec<(u64, u64)> = Vec::new();
        for n in 1..=10 {
            expected.push((n, 0));
            if n > 1 {
                expected.push((n, n - 1));
            }
        }
        expected.sort();
        let mut sorted = out.clone();
        sorted.sort();
        assert_eq!(sorted, expected);
        let p = report.output.iter().find(|p| (p.n, p.k) == (3, 2)).unwrap();
        assert_eq!(p.fpdim_x, q(3));
        assert!(!report.integral.iter().any(|p| (p.n, p.k) == (5, 2)));
        assert!(report.bound_excluded.contains(&(6, 1)));
    }
}
