//! Algebraic-integer tests on quotients of quadratic surds, and the
//! exhaustive scans built from them.
//!
//! A quotient `(a ± √b)/(c ± √d)` lives in `Q(√b, √d)`, which is quadratic
//! when the square-free parts agree and biquadratic otherwise. Every test
//! is run along two independent routes so that the scans double as oracle
//! comparisons.

use serde::Serialize;

use super::number::{is_prime, is_square};
use super::{BiquadraticElement, QuadraticFieldElement, RatPoly, Rational};
use crate::error::{Error, Result};

/// An exact value in a field of degree at most four.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldValue {
    Quadratic(QuadraticFieldElement),
    Biquadratic(BiquadraticElement),
}

impl FieldValue {
    /// `num / den`, placed in the smallest field containing both.
    pub fn quotient(num: &QuadraticFieldElement, den: &QuadraticFieldElement) -> Result<Self> {
        let (m1, m2) = (num.radicand(), den.radicand());
        if m1 == 1 || m2 == 1 || m1 == m2 {
            return num.try_div(den).map(FieldValue::Quadratic);
        }
        let n = BiquadraticElement::embed(m1, m2, num)?;
        let d = BiquadraticElement::embed(m1, m2, den)?;
        n.try_div(&d).map(FieldValue::Biquadratic)
    }

    pub fn is_algebraic_integer(&self) -> bool {
        match self {
            FieldValue::Quadratic(x) => x.is_algebraic_integer(),
            FieldValue::Biquadratic(x) => x.is_algebraic_integer(),
        }
    }

    /// Characteristic polynomial over Q on the field the value lives in:
    /// degree 1, 2 or 4.
    pub fn witness(&self) -> RatPoly {
        match self {
            FieldValue::Quadratic(x) if x.is_rational() => x.min_poly(),
            FieldValue::Quadratic(x) => x.char_poly(),
            FieldValue::Biquadratic(x) => x.char_poly(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            FieldValue::Quadratic(x) => x.to_f64(),
            FieldValue::Biquadratic(x) => x.to_f64(),
        }
    }
}

/// Which pair of independent tests decided a quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Same square-free part: rationalize in `Q(√m)` and compare with the
    /// quartic characteristic polynomial after embedding into `Q(√m, √p)`.
    QuadraticVsBiquadratic,
    /// Distinct square-free parts: quartic characteristic polynomial versus
    /// relative trace and norm down to a quadratic subfield.
    BiquadraticVsTower,
}

/// Full outcome of one pair check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub plus_integral: bool,
    pub minus_integral: bool,
    pub route: Route,
    /// The two independent routes agreed on both quotients.
    pub routes_agree: bool,
}

impl PairCheck {
    pub fn equal(&self) -> bool {
        self.plus_integral == self.minus_integral
    }
}

/// Smallest prime not dividing `m`, used as an auxiliary radicand.
fn auxiliary_prime(m: i64) -> i64 {
    (2..).find(|p| is_prime(*p as u64) && m % p != 0).unwrap()
}

/// Integrality of `num/den` along both routes.
fn quotient_routes(
    num: &QuadraticFieldElement,
    den: &QuadraticFieldElement,
) -> Result<(bool, bool, Route)> {
    let (m1, m2) = (num.radicand(), den.radicand());
    if m1 == m2 {
        let primary = num.try_div(den)?.is_algebraic_integer();
        let p = auxiliary_prime(m1);
        let n = BiquadraticElement::embed(m1, p, num)?;
        let d = BiquadraticElement::embed(m1, p, den)?;
        let secondary = n.try_div(&d)?.is_algebraic_integer();
        return Ok((primary, secondary, Route::QuadraticVsBiquadratic));
    }
    let n = BiquadraticElement::embed(m1, m2, num)?;
    let d = BiquadraticElement::embed(m1, m2, den)?;
    let x = n.try_div(&d)?;
    let primary = x.is_algebraic_integer();
    let (trace, norm) = x.relative_trace_norm();
    let secondary = trace.is_algebraic_integer() && norm.is_algebraic_integer();
    Ok((primary, secondary, Route::BiquadraticVsTower))
}

/// `a ± √b` with the radical reduced.
fn surd(a: i64, b: i64, sign: i64) -> QuadraticFieldElement {
    QuadraticFieldElement::integer(a)
        .try_add(&QuadraticFieldElement::sqrt_of(b).scale(&Rational::from_integer(sign)))
        .expect("a rational plus a surd")
}

/// Integrality of `(a+√b)/(c+√d)` and `(a−√b)/(c−√d)` with full route data.
pub fn lemma_alg_pair_detail(a: i64, b: i64, c: i64, d: i64) -> Result<PairCheck> {
    if b <= 0 || d <= 0 || is_square(b) || is_square(d) {
        return Err(Error::InvalidInput(format!(
            "b = {b} and d = {d} must be positive nonsquares"
        )));
    }
    let (p1, p2, route) = quotient_routes(&surd(a, b, 1), &surd(c, d, 1))?;
    let (m1, m2, _) = quotient_routes(&surd(a, b, -1), &surd(c, d, -1))?;
    Ok(PairCheck {
        a,
        b,
        c,
        d,
        plus_integral: p1,
        minus_integral: m1,
        route,
        routes_agree: p1 == p2 && m1 == m2,
    })
}

/// Integrality of `(a+√b)/(c+√d)` and of `(a−√b)/(c−√d)`. The two must
/// always agree.
pub fn lemma_alg_pair_check(a: i64, b: i64, c: i64, d: i64) -> Result<(bool, bool)> {
    lemma_alg_pair_detail(a, b, c, d).map(|p| (p.plus_integral, p.minus_integral))
}

/// Summary of the exhaustive pair-check grid.
#[derive(Clone, Debug, Default, Serialize)]
pub struct PairGridReport {
    pub checked: usize,
    pub quadratic_cases: usize,
    pub biquadratic_cases: usize,
    pub integral_cases: usize,
    /// Inputs whose two quotients disagree on integrality.
    pub unequal: Vec<PairCheck>,
    /// Inputs where the two routes disagree.
    pub route_disagreements: Vec<PairCheck>,
}

impl PairGridReport {
    pub fn passed(&self) -> bool {
        self.unequal.is_empty() && self.route_disagreements.is_empty()
    }
}

/// Runs the pair check over `|a| ≤ a_max`, `1 ≤ c ≤ c_max` and nonsquare
/// `b, d ≤ bd_max`.
pub fn lemma_alg_grid(a_max: i64, c_max: i64, bd_max: i64) -> PairGridReport {
    let nonsquares: Vec<i64> = (2..=bd_max).filter(|x| !is_square(*x)).collect();
    let mut report = PairGridReport::default();
    for a in -a_max..=a_max {
        for &b in &nonsquares {
            for c in 1..=c_max {
                for &d in &nonsquares {
                    let p = lemma_alg_pair_detail(a, b, c, d).expect("grid respects preconditions");
                    report.checked += 1;
                    match p.route {
                        Route::QuadraticVsBiquadratic => report.quadratic_cases += 1,
                        Route::BiquadraticVsTower => report.biquadratic_cases += 1,
                    }
                    if p.plus_integral {
                        report.integral_cases += 1;
                    }
                    if !p.equal() {
                        report.unequal.push(p.clone());
                    }
                    if !p.routes_agree {
                        report.route_disagreements.push(p);
                    }
                }
            }
        }
    }
    report
}

/// `D = m + r√m` with `m = r² + 4n`, and its conjugate when `sign = -1`.
pub fn sph_dimension(r: i64, n: i64, sign: i64) -> QuadraticFieldElement {
    let m = r * r + 4 * n;
    QuadraticFieldElement::integer(m)
        .try_add(&QuadraticFieldElement::sqrt_of(m).scale(&Rational::from_integer(sign * r)))
        .expect("a rational plus a surd")
}

/// One grid point of the ratio scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioEntry {
    pub r: i64,
    pub k: i64,
    pub n: i64,
    pub integral: bool,
    /// Characteristic polynomial of `D/Δ`, constant term first.
    pub witness: RatPoly,
    /// `(D/Δ)·(D̄/Δ̄) = (r²+4n)/(k²+4n)` held exactly.
    pub product_identity: bool,
}

/// `D/Δ` as an exact field value.
pub fn sph_ratio(r: i64, k: i64, n: i64) -> FieldValue {
    FieldValue::quotient(&sph_dimension(r, n, 1), &sph_dimension(k, n, 1))
        .expect("positive denominators")
}

/// Evaluates one grid point.
pub fn ratio_entry(r: i64, k: i64, n: i64) -> RatioEntry {
    let ratio = sph_ratio(r, k, n);
    let (d, dd) = (sph_dimension(r, n, 1), sph_dimension(r, n, -1));
    let (e, ee) = (sph_dimension(k, n, 1), sph_dimension(k, n, -1));
    // numerator and denominator products are rational, so the quotient is
    // carried out in Q regardless of the field of D/Δ
    let product = d
        .try_mul(&dd)
        .and_then(|x| e.try_mul(&ee).and_then(|y| x.try_div(&y)));
    let expected = Rational::new(r * r + 4 * n, k * k + 4 * n);
    let product_identity = product.ok().and_then(|p| p.as_rational().cloned()) == Some(expected);
    RatioEntry {
        r,
        k,
        n,
        integral: ratio.is_algebraic_integer(),
        witness: ratio.witness(),
        product_identity,
    }
}

/// Report of the ratio scan.
#[derive(Clone, Debug, Serialize)]
pub struct RatioScanReport {
    pub r_max: i64,
    pub k_max: i64,
    pub n_max: i64,
    pub entries: Vec<RatioEntry>,
    /// Off-diagonal points where `D/Δ` is nevertheless integral.
    pub off_diagonal_integral: Vec<(i64, i64, i64)>,
    /// Diagonal points where `D/Δ` failed to be integral.
    pub diagonal_failures: Vec<(i64, i64, i64)>,
    pub product_identity_failures: Vec<(i64, i64, i64)>,
}

impl RatioScanReport {
    /// Integrality occurs exactly on the diagonal.
    pub fn integral_exactly_on_diagonal(&self) -> bool {
        self.off_diagonal_integral.is_empty() && self.diagonal_failures.is_empty()
    }

    pub fn product_identity_holds(&self) -> bool {
        self.product_identity_failures.is_empty()
    }

    pub fn is_admitted(&self, r: i64, k: i64, n: i64) -> Option<bool> {
        self.entries
            .iter()
            .find(|e| (e.r, e.k, e.n) == (r, k, n))
            .map(|e| e.integral)
    }
}

/// Tests `D/Δ` for every `0 ≤ r ≤ min(k, r_max)`, `k ≤ k_max`, `1 ≤ n ≤ n_max`.
pub fn theorem_sph_ratio_scan(r_max: i64, k_max: i64, n_max: i64) -> RatioScanReport {
    let mut report = RatioScanReport {
        r_max,
        k_max,
        n_max,
        entries: Vec::new(),
        off_diagonal_integral: Vec::new(),
        diagonal_failures: Vec::new(),
        product_identity_failures: Vec::new(),
    };
    for k in 0..=k_max {
        for r in 0..=k.min(r_max) {
            for n in 1..=n_max {
                let e = ratio_entry(r, k, n);
                if e.integral && r != k {
                    report.off_diagonal_integral.push((r, k, n));
                }
                if !e.integral && r == k {
                    report.diagonal_failures.push((r, k, n));
                }
                if !e.product_identity {
                    report.product_identity_failures.push((r, k, n));
                }
                report.entries.push(e);
            }
        }
    }
    report
}

/// A point where a perfect-square radicand and an admitting ratio test
/// coexist with `r ≠ k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareDeviation {
    pub n: i64,
    pub k: i64,
    pub r: i64,
    /// Which radicand was a perfect square: `"r"` for `r²+4n`, `"k"` for `k²+4n`.
    pub square: &'static str,
    pub ratio: String,
}

/// Per-`(n, k)` outcome of the square-radicand scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareScanEntry {
    pub n: i64,
    pub k: i64,
    /// Values of `r` whose radicand `r²+4n` is a perfect square.
    pub square_r: Vec<i64>,
    pub k_square: bool,
    /// Values of `r` the ratio test admits.
    pub admitted: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SquareScanReport {
    pub k_max: i64,
    pub n_max: i64,
    pub entries: Vec<SquareScanEntry>,
    pub deviations: Vec<SquareDeviation>,
}

impl SquareScanReport {
    pub fn passed(&self) -> bool {
        self.deviations.is_empty()
    }
}

/// Checks that a perfect-square radicand together with an integral ratio
/// only ever occurs at `r = k`.
pub fn lemma_r_scan(k_max: i64, n_max: i64) -> SquareScanReport {
    let mut entries = Vec::new();
    let mut deviations = Vec::new();
    for n in 1..=n_max {
        for k in 0..=k_max {
            let k_square = is_square(k * k + 4 * n);
            let mut entry = SquareScanEntry {
                n,
                k,
                square_r: Vec::new(),
                k_square,
                admitted: Vec::new(),
            };
            for r in 0..=k {
                let r_square = is_square(r * r + 4 * n);
                if r_square {
                    entry.square_r.push(r);
                }
                let ratio = sph_ratio(r, k, n);
                if !ratio.is_algebraic_integer() {
                    continue;
                }
                entry.admitted.push(r);
                if r == k {
                    continue;
                }
                let value = match &ratio {
                    FieldValue::Quadratic(x) => x.to_string(),
                    FieldValue::Biquadratic(x) => x.to_string(),
                };
                if r_square {
                    deviations.push(SquareDeviation {
                        n,
                        k,
                        r,
                        square: "r",
                        ratio: value.clone(),
                    });
                }
                if k_square {
                    deviations.push(SquareDeviation {
                        n,
                        k,
                        r,
                        square: "k",
                        ratio: value,
                    });
                }
            }
            entries.push(entry);
        }
    }
    SquareScanReport {
        k_max,
        n_max,
        entries,
        deviations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_check_examples() {
        assert_eq!(lemma_alg_pair_check(0, 2, 0, 2).unwrap(), (true, true));
        assert_eq!(lemma_alg_pair_check(3, 2, 1, 2).unwrap(), (true, true));
        let p = lemma_alg_pair_detail(1, 2, 2, 3).unwrap();
        assert!(p.equal() && p.routes_agree);
        assert_eq!(p.route, Route::BiquadraticVsTower);
        assert!(lemma_alg_pair_check(1, 4, 1, 2).is_err());
    }

    #[test]
    fn pair_check_value() {
        // (3+√2)/(1+√2) = 2√2 - 1
        let num = surd(3, 2, 1);
        let den = surd(1, 2, 1);
        let v = FieldValue::quotient(&num, &den).unwrap();
        let expected =
            QuadraticFieldElement::new(Rational::from_integer(-1), Rational::from_integer(2), 2)
                .unwrap();
        assert_eq!(v, FieldValue::Quadratic(expected));
    }

    #[test]
    fn small_grid_is_consistent() {
        let report = lemma_alg_grid(3, 3, 12);
        assert!(report.passed(), "{report:?}");
        assert!(report.quadratic_cases > 0 && report.biquadratic_cases > 0);
    }

    #[test]
    fn ratio_examples() {
        let e = ratio_entry(3, 3, 7);
        assert!(e.integral);
        assert_eq!(e.witness, RatPoly::from_integers(&[-1, 1]));
        // 4/(5+√5) = (5-√5)/5
        let e = ratio_entry(0, 1, 1);
        assert!(!e.integral);
        assert_eq!(
            e.witness,
            RatPoly::new(vec![
                Rational::new(4, 5),
                Rational::from_integer(-2),
                Rational::one()
            ])
        );
        // 13/16 from the closed form, with a square denominator radicand
        let e = ratio_entry(1, 2, 3);
        assert!(e.product_identity && !e.integral);
        assert_eq!(e.witness.degree(), Some(2));
        // radicands 5 and 8 give a genuinely biquadratic ratio
        let e = ratio_entry(1, 2, 1);
        assert!(e.product_identity && !e.integral);
        assert_eq!(e.witness.degree(), Some(4));
    }

    #[test]
    fn biquadratic_witness_annihilates_ratio() {
        let FieldValue::Biquadratic(x) = sph_ratio(1, 2, 1) else {
            panic!("expected biquadratic")
        };
        assert!(x.eval_poly(&x.char_poly()).is_zero());
    }

    #[test]
    fn square_scan_examples() {
        let report = lemma_r_scan(5, 6);
        let at = |n, k| {
            report
                .entries
                .iter()
                .find(|e| e.n == n && e.k == k)
                .unwrap()
                .clone()
        };
        let e = at(2, 1);
        assert!(e.k_square);
        assert_eq!(e.square_r, vec![1]);
        assert_eq!(e.admitted, vec![1]);
        assert_eq!(at(1, 0).admitted, vec![0]);
        let e = at(6, 5);
        assert_eq!(e.square_r, vec![1, 5]);
        assert_eq!(e.admitted, vec![5]);
    }

    #[test]
    fn units_make_the_ratio_integral_off_the_diagonal() {
        // 24/(48+24√3) = 2 - √3 is a unit
        let e = ratio_entry(2, 6, 3);
        assert!(e.integral);
        assert_eq!(e.witness, RatPoly::from_integers(&[1, -4, 1]));
    }
}
