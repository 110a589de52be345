//! Sphericalized near-group rings and the dimension bookkeeping that
//! forces `r = s - t` to equal `k`.
//!
//! The basis is `{g₊}`, `{g₋}`, `X₊`, `X₋`. Every simple is a sign times a
//! simple of the base ring, with `e₋` central, `e₋ ⊗ e₋ = e₊` and
//! `e₋ ⊗ X₊ = X₋`. The whole table follows from that and from
//! `X₊ ⊗ X₊ = Σ g₊ + sX₊ + tX₋`.

use serde::Serialize;

use crate::arith::integrality::sph_ratio;
use crate::arith::number::is_square;
use crate::arith::{QuadraticFieldElement, Rational};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ring::{build_near_group, FusionRing, NearGroupRule};

/// A sphericalized ring together with the split `s + t = k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphericalizedRing {
    pub rule: NearGroupRule,
    pub s: u64,
    pub t: u64,
    pub ring: FusionRing,
}

impl SphericalizedRing {
    /// `|G|`.
    pub fn group_order(&self) -> usize {
        (self.ring.rank() - 2) / 2
    }

    pub fn x_plus(&self) -> usize {
        self.ring.rank() - 2
    }

    pub fn x_minus(&self) -> usize {
        self.ring.rank() - 1
    }

    /// The forgetful map `g± ↦ g`, `X± ↦ X` onto the near-group basis.
    pub fn forgetful_map(&self) -> Vec<usize> {
        let n = self.group_order();
        (0..self.ring.rank())
            .map(|i| if i < 2 * n { i % n } else { n })
            .collect()
    }

    /// The forgetful map is a ring homomorphism onto `NG(G, k)`.
    pub fn forgetful_is_homomorphism(&self) -> Result<bool> {
        let base = build_near_group(&self.rule)?;
        Ok(self.ring.is_homomorphism_onto(&base, &self.forgetful_map()))
    }
}

/// Builds the sphericalized ring of `rule` with `X₊ ⊗ X₊ = Σ g₊ + sX₊ + tX₋`.
pub fn build_sphericalized_ring(rule: &NearGroupRule, s: u64, t: u64) -> Result<SphericalizedRing> {
    if s + t != rule.k {
        return Err(Error::InvalidInput(format!(
            "s + t = {} but k = {}",
            s + t,
            rule.k
        )));
    }
    let g = FiniteGroup::from_spec(&rule.group)?;
    let n = g.order();
    // element i is (sign, base) with base in 0..=n (n meaning X)
    let split = |i: usize| -> (usize, usize) {
        if i < 2 * n {
            (i / n, i % n)
        } else {
            (i - 2 * n, n)
        }
    };
    let join = |sign: usize, base: usize| {
        if base < n {
            sign * n + base
        } else {
            2 * n + sign
        }
    };
    let mut basis: Vec<String> = Vec::with_capacity(2 * n + 2);
    for sign in ["+", "-"] {
        basis.extend(g.names().iter().map(|name| format!("{name}{sign}")));
    }
    basis.push("X+".into());
    basis.push("X-".into());
    let dual = (0..2 * n + 2)
        .map(|i| {
            let (sign, base) = split(i);
            if base < n {
                join(sign, g.inv(base))
            } else {
                i
            }
        })
        .collect();
    let ring = FusionRing::from_fn(basis, dual, |i, j, l| {
        let ((a, x), (b, y), (c, z)) = (split(i), split(j), split(l));
        let sign = a ^ b;
        match (x < n, y < n) {
            (true, true) => u64::from(z < n && c == sign && z == g.mul(x, y)),
            (true, false) | (false, true) => u64::from(z == n && c == sign),
            (false, false) if z < n => u64::from(c == sign),
            (false, false) if c == sign => s,
            (false, false) => t,
        }
    })?;
    Ok(SphericalizedRing {
        rule: rule.clone(),
        s,
        t,
        ring,
    })
}

/// A root `d` of `d² = n + rd` and the total dimension `2n + rd`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionSolution {
    pub n: u64,
    pub r: i64,
    pub d: QuadraticFieldElement,
    pub total: QuadraticFieldElement,
}

impl DimensionSolution {
    /// `d² = n + rd` and `total = 2n + rd`, checked exactly.
    pub fn verify(&self) -> bool {
        let n = QuadraticFieldElement::integer(self.n as i64);
        let rd = self.d.scale(&Rational::from_integer(self.r));
        let lhs = self.d.square();
        lhs == n.try_add(&rd).unwrap()
            && self.total == n.scale(&Rational::from_integer(2)).try_add(&rd).unwrap()
    }
}

/// Both roots `d = (r ± √(r² + 4n))/2`, the `+` root first.
pub fn solve_dimensions(n: u64, r: i64) -> [DimensionSolution; 2] {
    let disc = QuadraticFieldElement::sqrt_of(r * r + 4 * n as i64);
    let half = Rational::new(1, 2);
    [1, -1].map(|sign| {
        let d = QuadraticFieldElement::integer(r)
            .try_add(&disc.scale(&Rational::from_integer(sign)))
            .unwrap()
            .scale(&half);
        let total = QuadraticFieldElement::integer(2 * n as i64)
            .try_add(&d.scale(&Rational::from_integer(r)))
            .unwrap();
        DimensionSolution { n, r, d, total }
    })
}

/// Why a candidate split was discarded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Elimination {
    /// `D/Δ` is not an algebraic integer.
    Ratio,
    /// A perfect-square radicand with `r ≠ k`, excluded by the imported
    /// pseudo-unitarity lemma.
    SquareRadicand,
}

/// One split `(s, t)` examined by the pipeline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub s: u64,
    pub t: u64,
    pub r: i64,
    pub associative: bool,
    pub forgetful_homomorphism: bool,
    pub ratio_integral: bool,
    pub square_radicand: bool,
    pub eliminated_by: Option<Elimination>,
    pub dims: Vec<DimensionSolution>,
}

/// Result of running every split of a rule through the ratio and square
/// tests.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub rule: NearGroupRule,
    pub n: u64,
    pub candidates: Vec<Candidate>,
    pub survivors: Vec<i64>,
    /// `dim(g₋) = -1`, forced by `e₋ ⊗ e₋ = e₊` once `dim(e₋) = -1`.
    pub dim_g_minus: i64,
    /// Positive root first, then its Galois conjugate, for each survivor.
    pub surviving_dims: Vec<DimensionSolution>,
    pub square_lemma: &'static str,
    pub scope: &'static str,
}

impl PipelineReport {
    /// The survivor set is exactly `{k}`.
    pub fn passed(&self) -> bool {
        self.survivors == [self.rule.k as i64]
            && self
                .candidates
                .iter()
                .all(|c| c.associative && c.forgetful_homomorphism)
    }
}

/// Enumerates the splits `s + t = k` with `s ≥ t` and keeps the values of
/// `r = s - t` that pass the ratio and square-radicand tests.
pub fn spherical_pipeline(rule: &NearGroupRule) -> Result<PipelineReport> {
    let n = FiniteGroup::from_spec(&rule.group)?.order() as u64;
    let k = rule.k;
    let mut candidates = Vec::new();
    for s in k.div_ceil(2)..=k {
        let t = k - s;
        let r = (s - t) as i64;
        let sph = build_sphericalized_ring(rule, s, t)?;
        let ratio_integral = sph_ratio(r, k as i64, n as i64).is_algebraic_integer();
        let square_radicand = is_square(r * r + 4 * n as i64) || is_square((k * k + 4 * n) as i64);
        let eliminated_by = if !ratio_integral {
            Some(Elimination::Ratio)
        } else if square_radicand && r != k as i64 {
            Some(Elimination::SquareRadicand)
        } else {
            None
        };
        candidates.push(Candidate {
            s,
            t,
            r,
            associative: sph.ring.check_axioms().is_valid(),
            forgetful_homomorphism: sph.forgetful_is_homomorphism()?,
            ratio_integral,
            square_radicand,
            eliminated_by,
            dims: solve_dimensions(n, r).to_vec(),
        });
    }
    let survivors: Vec<i64> = candidates
        .iter()
        .filter(|c| c.eliminated_by.is_none())
        .map(|c| c.r)
        .collect();
    let surviving_dims = survivors
        .iter()
        .flat_map(|r| solve_dimensions(n, *r))
        .collect();
    Ok(PipelineReport {
        rule: rule.clone(),
        n,
        candidates,
        survivors,
        dim_g_minus: -1,
        surviving_dims,
        square_lemma: "a perfect-square radicand forces pseudo-unitarity, hence r = k (imported)",
        scope: "eliminations constrain only the value of r at ring level; they say nothing about existence of categories",
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroupSpec;

    fn rule(spec: FiniteGroupSpec, k: u64) -> NearGroupRule {
        NearGroupRule::new(spec, k)
    }

    #[test]
    fn yang_lee_sphericalization() {
        let sph = build_sphericalized_ring(&rule(FiniteGroupSpec::trivial(), 1), 1, 0).unwrap();
        let r = &sph.ring;
        assert_eq!(r.rank(), 4);
        assert_eq!(r.basis(), ["e+", "e-", "X+", "X-"]);
        assert_eq!(r.product(2, 2), vec![(0, 1), (2, 1)]);
        assert_eq!(r.product(3, 3), r.product(2, 2));
        assert_eq!(r.product(1, 2), vec![(3, 1)]);
        assert!(r.check_axioms().is_valid());
        assert!(sph.forgetful_is_homomorphism().unwrap());
    }

    #[test]
    fn sphericalized_tambara_yamagami() {
        let sph = build_sphericalized_ring(&rule(FiniteGroupSpec::cyclic(2), 0), 0, 0).unwrap();
        assert!(sph.ring.check_axioms().is_valid());
        assert!(sph.forgetful_is_homomorphism().unwrap());
        let sph = build_sphericalized_ring(&rule(FiniteGroupSpec::cyclic(3), 2), 2, 0).unwrap();
        assert!(sph.forgetful_is_homomorphism().unwrap());
        assert!(build_sphericalized_ring(&rule(FiniteGroupSpec::cyclic(3), 2), 1, 0).is_err());
    }

    #[test]
    fn dimension_examples() {
        let [a, b] = solve_dimensions(4, 0);
        assert_eq!(
            (a.d.clone(), b.d.clone()),
            (
                QuadraticFieldElement::integer(2),
                QuadraticFieldElement::integer(-2)
            )
        );
        assert_eq!(
            (a.total.clone(), b.total.clone()),
            (
                QuadraticFieldElement::integer(8),
                QuadraticFieldElement::integer(8)
            )
        );
        let [a, b] = solve_dimensions(1, 1);
        let half = Rational::new(1, 2);
        assert_eq!(
            a.d,
            QuadraticFieldElement::new(half.clone(), half.clone(), 5).unwrap()
        );
        assert_eq!(
            b.total,
            QuadraticFieldElement::new(Rational::new(5, 2), -half, 5).unwrap()
        );
        let [a, b] = solve_dimensions(3, 2);
        assert_eq!(
            (a.d.clone(), b.d.clone()),
            (
                QuadraticFieldElement::integer(3),
                QuadraticFieldElement::integer(-1)
            )
        );
        assert_eq!(
            (a.total.clone(), b.total.clone()),
            (
                QuadraticFieldElement::integer(12),
                QuadraticFieldElement::integer(4)
            )
        );
        for n in 1..20u64 {
            for r in 0..8i64 {
                let [a, b] = solve_dimensions(n, r);
                assert!(a.verify() && b.verify());
                assert_eq!(
                    a.d.try_mul(&b.d).unwrap(),
                    QuadraticFieldElement::integer(-(n as i64))
                );
                assert_eq!(
                    a.d.try_add(&b.d).unwrap(),
                    QuadraticFieldElement::integer(r)
                );
            }
        }
    }

    #[test]
    fn pipeline_examples() {
        let report = spherical_pipeline(&rule(FiniteGroupSpec::trivial(), 1)).unwrap();
        assert_eq!(report.survivors, vec![1]);
        assert_eq!(report.candidates.len(), 1);
        let half = Rational::new(1, 2);
        assert_eq!(
            report.surviving_dims[0].d,
            QuadraticFieldElement::new(half.clone(), half, 5).unwrap()
        );
        let report = spherical_pipeline(&rule(FiniteGroupSpec::cyclic(2), 2)).unwrap();
        let splits: Vec<(u64, u64, i64)> =
            report.candidates.iter().map(|c| (c.s, c.t, c.r)).collect();
        assert_eq!(splits, vec![(1, 1, 0), (2, 0, 2)]);
        assert_eq!(report.candidates[0].eliminated_by, Some(Elimination::Ratio));
        assert_eq!(report.survivors, vec![2]);
        let report = spherical_pipeline(&rule(FiniteGroupSpec::product(&[2, 2]), 0)).unwrap();
        assert_eq!(report.survivors, vec![0]);
        assert!(report.passed());
    }

    #[test]
    fn square_radicand_lemma_is_the_only_thing_removing_unit_ratios() {
        let report = spherical_pipeline(&rule(FiniteGroupSpec::cyclic(3), 6)).unwrap();
        let c = report.candidates.iter().find(|c| c.r == 2).unwrap();
        assert!(c.ratio_integral);
        assert_eq!(c.eliminated_by, Some(Elimination::SquareRadicand));
        assert_eq!(report.survivors, vec![6]);
    }
}
