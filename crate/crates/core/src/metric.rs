//! Quadratic forms on finite abelian groups, Gauss sums, isometry groups and
//! the classification of metric groups whose isometries act transitively
//! off the identity.
//!
//! Values of a form are stored as exponents of `ζ_N` with `N = 2·exp(A)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::arith::number::gcd;
use crate::arith::{CyclotomicNumber, Rational};
use crate::error::{Error, Result};
use crate::group::{
    abelian_invariant_factors, canonical_abelian_spec, compose, FiniteGroup, FiniteGroupSpec,
};

/// Default bound on `|A|` for form enumeration.
pub const DEFAULT_ORDER_BOUND: u64 = 64;

/// `Z/f₁ ⊕ … ⊕ Z/f_r`; elements are residue tuples indexed in mixed radix
/// with the last coordinate fastest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.iter().any(|f| *f < 2) {
            return Err(Error::InvalidInput(format!(
                "factors must be >= 2: {factors:?}"
            )));
        }
        Ok(AbelianGroup { factors })
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// `lcm` of the factors; 1 for the trivial group.
    pub fn exponent(&self) -> u64 {
        self.factors.iter().fold(1, |a, b| a / gcd(a, *b) * b)
    }

    pub fn tuple(&self, mut index: usize) -> Vec<u64> {
        let mut out = vec![0; self.factors.len()];
        for (slot, f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = index as u64 % f;
            index /= *f as usize;
        }
        out
    }

    pub fn index(&self, tuple: &[u64]) -> usize {
        tuple
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (x, f)| acc * *f as usize + (x % f) as usize)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.tuple(a), self.tuple(b));
        self.index(&x.iter().zip(&y).map(|(u, v)| u + v).collect::<Vec<_>>())
    }

    pub fn neg(&self, a: usize) -> usize {
        let x = self.tuple(a);
        self.index(
            &x.iter()
                .zip(&self.factors)
                .map(|(u, f)| (f - u) % f)
                .collect::<Vec<_>>(),
        )
    }

    /// `n·a`.
    pub fn times(&self, n: u64, a: usize) -> usize {
        self.index(&self.tuple(a).iter().map(|u| u * n).collect::<Vec<_>>())
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.tuple(a)
            .iter()
            .zip(&self.factors)
            .fold(1, |acc, (u, f)| {
                let o = f / gcd(*u, *f);
                acc / gcd(acc, o) * o
            })
    }

    /// Every non-identity element has the same prime order.
    pub fn is_elementary_abelian(&self) -> bool {
        let orders: BTreeSet<u64> = (1..self.order() as usize)
            .map(|a| self.element_order(a))
            .collect();
        orders.len() == 1 && crate::arith::number::is_prime(*orders.iter().next().unwrap())
    }

    pub fn spec(&self) -> FiniteGroupSpec {
        canonical_abelian_spec(&self.factors)
    }

    /// The same group as a multiplication table with identical indexing.
    pub fn to_finite_group(&self) -> Result<FiniteGroup> {
        FiniteGroup::from_spec(&self.spec())
    }

    pub fn label(&self) -> String {
        self.spec().label()
    }

    /// Every abelian group of the given order, by invariant factors.
    pub fn all_of_order(order: u64) -> Vec<AbelianGroup> {
        abelian_invariant_factors(order)
            .into_iter()
            .map(|factors| AbelianGroup { factors })
            .collect()
    }
}

/// A quadratic form given by `q(gᵢ)` and `b(gᵢ, gⱼ)` on the generators, as
/// exponents modulo the conductor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FormRepr", into = "FormRepr")]
pub struct QuadraticForm {
    group: AbelianGroup,
    conductor: u64,
    q_gen: Vec<u64>,
    b: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct FormRepr {
    factors: Vec<u64>,
    conductor: u64,
    q_gen: Vec<u64>,
    b: Vec<Vec<u64>>,
}

impl TryFrom<FormRepr> for QuadraticForm {
    type Error = Error;

    fn try_from(r: FormRepr) -> Result<Self> {
        let form = QuadraticForm::new(AbelianGroup::new(r.factors)?, r.q_gen, r.b)?;
        if form.conductor != r.conductor {
            return Err(Error::InvalidInput(format!(
                "conductor must be {}",
                form.conductor
            )));
        }
        Ok(form)
    }
}

impl From<QuadraticForm> for FormRepr {
    fn from(f: QuadraticForm) -> Self {
        FormRepr {
            factors: f.group.factors,
            conductor: f.conductor,
            q_gen: f.q_gen,
            b: f.b,
        }
    }
}

impl QuadraticForm {
    /// Validates symmetry, `b(gᵢ,gᵢ) = 2q(gᵢ)` and well-definedness on the
    /// relations `oᵢ·gᵢ = 0`.
    pub fn new(group: AbelianGroup, q_gen: Vec<u64>, b: Vec<Vec<u64>>) -> Result<Self> {
        let n = 2 * group.exponent();
        let r = group.factors.len();
        if q_gen.len() != r || b.len() != r || b.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidInput(
                "form data does not match the number of generators".into(),
            ));
        }
        let q_gen: Vec<u64> = q_gen.iter().map(|x| x % n).collect();
        let b: Vec<Vec<u64>> = b
            .iter()
            .map(|row| row.iter().map(|x| x % n).collect())
            .collect();
        for i in 0..r {
            let o = group.factors[i];
            if b[i][i] != 2 * q_gen[i] % n {
                return Err(Error::InvalidInput(format!(
                    "b({i},{i}) must equal 2q({i})"
                )));
            }
            if !(2 * o * q_gen[i]).is_multiple_of(n) || !(o * o * q_gen[i]).is_multiple_of(n) {
                return Err(Error::InvalidInput(format!(
                    "q(g{i}) is not compatible with the order {o}"
                )));
            }
            for j in 0..r {
                if b[i][j] != b[j][i] {
                    return Err(Error::InvalidInput("b must be symmetric".into()));
                }
                if !(gcd(o, group.factors[j]) * b[i][j]).is_multiple_of(n) {
                    return Err(Error::InvalidInput(format!(
                        "b({i},{j}) is not compatible with the orders"
                    )));
                }
            }
        }
        Ok(QuadraticForm {
            group,
            conductor: n,
            q_gen,
            b,
        })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn q_gen(&self) -> &[u64] {
        &self.q_gen
    }

    pub fn b_gen(&self) -> &[Vec<u64>] {
        &self.b
    }

    /// Exponent of `q(x)`.
    pub fn value(&self, x: usize) -> u64 {
        let t = self.group.tuple(x);
        let n = self.conductor;
        let mut v = 0;
        for i in 0..t.len() {
            v += t[i] * t[i] % n * self.q_gen[i];
            for j in i + 1..t.len() {
                v += t[i] * t[j] % n * self.b[i][j];
            }
            v %= n;
        }
        v
    }

    pub fn values(&self) -> Vec<u64> {
        (0..self.group.order() as usize)
            .map(|x| self.value(x))
            .collect()
    }

    /// Exponent of `b(x, y) = q(x + y) / q(x) q(y)`.
    pub fn bilinear(&self, x: usize, y: usize) -> u64 {
        let n = self.conductor;
        (self.value(self.group.add(x, y)) + 2 * n - self.value(x) - self.value(y)) % n
    }

    /// `b(x, ·)` trivial only for `x = 0`.
    pub fn is_nondegenerate(&self) -> bool {
        let vals = self.values();
        let ord = vals.len();
        (1..ord).all(|x| {
            (0..ord).any(|y| {
                !(vals[self.group.add(x, y)] + 2 * self.conductor - vals[x] - vals[y])
                    .is_multiple_of(self.conductor)
            })
        })
    }

    /// `Σ_a q(a)` as an element of `Q(ζ_N)`.
    pub fn gauss_sum(&self) -> CyclotomicNumber {
        let mut coeffs = vec![0i64; self.conductor as usize];
        for v in self.values() {
            coeffs[v as usize] += 1;
        }
        coeffs
            .iter()
            .enumerate()
            .fold(CyclotomicNumber::zero(self.conductor), |acc, (j, c)| {
                if *c == 0 {
                    acc
                } else {
                    acc.add(
                        &CyclotomicNumber::root(self.conductor, j as u64)
                            .scale(&Rational::from_integer(*c)),
                    )
                }
            })
    }

    /// `|Σ_a q(a)|²` as a rational, which it always is.
    pub fn gauss_norm(&self) -> Rational {
        self.gauss_sum()
            .norm_squared()
            .to_rational()
            .expect("norm of a Gauss sum is rational")
    }

    /// `q ∘ φ = q` for a permutation of the elements.
    pub fn preserved_by(&self, phi: &[usize]) -> bool {
        let vals = self.values();
        (0..vals.len()).all(|x| vals[phi[x]] == vals[x])
    }
}

/// Every well-defined form on `a`, in lexicographic order of generator
/// data; degenerate forms included.
pub fn enumerate_quadratic_forms(a: &AbelianGroup) -> Result<Vec<QuadraticForm>> {
    enumerate_quadratic_forms_bounded(a, DEFAULT_ORDER_BOUND)
}

pub fn enumerate_quadratic_forms_bounded(
    a: &AbelianGroup,
    bound: u64,
) -> Result<Vec<QuadraticForm>> {
    if a.order() > bound {
        return Err(Error::GroupTooLarge(a.order() as usize));
    }
    let n = 2 * a.exponent();
    let f = &a.factors;
    let r = f.len();
    let q_choices: Vec<Vec<usize>> = f
        .iter()
        .map(|o| {
            (0..n)
                .filter(|q| (2 * o * q) % n == 0 && (o * o * q) % n == 0)
                .map(|q| q as usize)
                .collect()
        })
        .collect();
    let pairs: Vec<(usize, usize)> = (0..r)
        .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
        .collect();
    let b_choices: Vec<Vec<usize>> = pairs
        .iter()
        .map(|(i, j)| {
            (0..n)
                .filter(|b| (gcd(f[*i], f[*j]) * b).is_multiple_of(n))
                .map(|b| b as usize)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let qs = crate::group::cartesian(&q_choices);
    let bs = crate::group::cartesian(&b_choices);
    for q in &qs {
        for bv in &bs {
            let mut b = vec![vec![0u64; r]; r];
            for i in 0..r {
                b[i][i] = 2 * q[i] as u64 % n;
            }
            for ((i, j), v) in pairs.iter().zip(bv) {
                b[*i][*j] = *v as u64;
                b[*j][*i] = *v as u64;
            }
            let q_gen = q.iter().map(|x| *x as u64).collect();
            out.push(QuadraticForm {
                group: a.clone(),
                conductor: n,
                q_gen,
                b,
            });
        }
    }
    Ok(out)
}

/// A nondegenerate quadratic form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "QuadraticForm", into = "QuadraticForm")]
pub struct MetricGroup {
    form: QuadraticForm,
}

impl TryFrom<QuadraticForm> for MetricGroup {
    type Error = Error;

    fn try_from(form: QuadraticForm) -> Result<Self> {
        MetricGroup::new(form)
    }
}

impl From<MetricGroup> for QuadraticForm {
    fn from(m: MetricGroup) -> Self {
        m.form
    }
}

impl MetricGroup {
    pub fn new(form: QuadraticForm) -> Result<Self> {
        if !form.is_nondegenerate() {
            return Err(Error::InvalidInput("the form is degenerate".into()));
        }
        Ok(MetricGroup { form })
    }

    /// `(Z/3, q(g) = ω^j)` for `j ∈ {1, 2}`.
    pub fn z3(j: u64) -> Result<Self> {
        // conductor 6: ω^j = ζ_6^{2j}
        Self::new(QuadraticForm::new(
            AbelianGroup::new(vec![3])?,
            vec![2 * j],
            vec![vec![4 * j]],
        )?)
    }

    /// `Z/2 ⊕ Z/2` with `q = -1` off the identity.
    pub fn klein_minus_one() -> Self {
        Self::new(
            QuadraticForm::new(
                AbelianGroup::new(vec![2, 2]).unwrap(),
                vec![2, 2],
                vec![vec![0, 2], vec![2, 0]],
            )
            .unwrap(),
        )
        .expect("nondegenerate")
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.form.group
    }

    pub fn order(&self) -> u64 {
        self.form.group.order()
    }

    pub fn label(&self) -> String {
        let vals = self.form.values();
        let shown: Vec<String> = vals
            .iter()
            .map(|v| format!("ζ{}^{}", self.form.conductor, v))
            .collect();
        format!("({}, q=[{}])", self.group().label(), shown.join(","))
    }
}

pub fn gauss_sum(form: &QuadraticForm) -> CyclotomicNumber {
    form.gauss_sum()
}

/// `|gauss_sum|² = |A|`.
pub fn gauss_norm_matches_order(form: &QuadraticForm) -> bool {
    form.gauss_norm() == Rational::from_integer(form.group.order() as i64)
}

/// `Aut(A, q)` as permutations of the element indices, identity first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsometryGroup {
    pub base: MetricGroup,
    pub elements: Vec<Vec<usize>>,
}

impl IsometryGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The isometries as an abstract group, composing left to right.
    pub fn to_finite_group(&self) -> Result<FiniteGroup> {
        let index: BTreeMap<&Vec<usize>, usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let table = self
            .elements
            .iter()
            .map(|a| {
                self.elements
                    .iter()
                    .map(|b| {
                        index
                            .get(&compose(a, b))
                            .copied()
                            .ok_or_else(|| Error::Internal("isometries not closed".into()))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let names = self
            .elements
            .iter()
            .map(|p| crate::group::cycle_notation(p))
            .collect();
        FiniteGroup::from_table(names, table)
    }

    /// Orbit sizes on the non-identity elements are a single orbit.
    pub fn is_transitive_off_identity(&self) -> bool {
        let n = self.base.order() as usize;
        if n < 2 {
            return false;
        }
        let orbit: BTreeSet<usize> = self.elements.iter().map(|p| p[1]).collect();
        orbit.len() == n - 1
    }
}

pub fn isometry_group(m: &MetricGroup) -> Result<IsometryGroup> {
    let auts = m.group().to_finite_group()?.automorphisms();
    Ok(isometries_among(m, &auts))
}

fn isometries_among(m: &MetricGroup, auts: &[Vec<usize>]) -> IsometryGroup {
    let vals = m.form.values();
    let elements = auts
        .iter()
        .filter(|p| (0..vals.len()).all(|x| vals[p[x]] == vals[x]))
        .cloned()
        .collect();
    IsometryGroup {
        base: m.clone(),
        elements,
    }
}

/// Machine-readable reasons a candidate is not transitive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rejection {
    /// Non-identity elements have different orders.
    NotElementaryAbelian,
    /// `|1 + (m-1)ω|² = m` is impossible for a root of unity `ω` when
    /// `(m-1)(m-4) > 0`.
    GaussNormInequality,
    /// `q` takes more than one value off the identity.
    NonConstantForm,
    /// `q` is constant but the isometries still miss part of `A ∖ {0}`.
    NotTransitive,
}

/// A metric group kept by the scan, with the constant value `ω` of `q` on
/// the non-identity elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitiveMetricGroup {
    pub metric: MetricGroup,
    pub omega: CyclotomicNumber,
    pub gauss_identity: bool,
    pub isometry_order: usize,
}

/// Scan results for one abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanEntry {
    pub factors: Vec<u64>,
    pub order: u64,
    pub nondegenerate_forms: usize,
    pub elementary_abelian: bool,
    /// `(m-1)(m-4) ≤ 0`.
    pub gauss_inequality_holds: bool,
    /// First group-level filter that fails.
    pub rejection: Option<Rejection>,
    /// First failing filter per form, counted.
    pub form_rejections: BTreeMap<Rejection, usize>,
    /// Forms whose isometry group is transitive, found without consulting
    /// the group-level filters.
    pub brute_force_transitive: usize,
    pub accepted: Vec<TransitiveMetricGroup>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitiveScanReport {
    pub max_order: u64,
    pub entries: Vec<ScanEntry>,
    pub found: Vec<MetricGroup>,
}

impl TransitiveScanReport {
    /// The filters never discard a form that brute force finds transitive.
    pub fn filters_consistent(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.brute_force_transitive == e.accepted.len())
    }

    /// Exactly `(Z/2⊕Z/2, -1)`, `(Z/3, ω)` and `(Z/3, ω̄)`.
    pub fn matches_expected(&self) -> bool {
        let mut expected = vec![
            MetricGroup::klein_minus_one(),
            MetricGroup::z3(1).unwrap(),
            MetricGroup::z3(2).unwrap(),
        ];
        expected.sort();
        let mut found = self.found.clone();
        found.sort();
        self.filters_consistent() && found == expected
    }
}

/// Metric groups `(A, q)` with `3 ≤ |A| ≤ max_order` whose isometry group
/// is transitive on `A ∖ {0}`.
pub fn transitive_metric_group_scan(max_order: u64) -> Result<TransitiveScanReport> {
    if max_order < 3 {
        return Err(Error::InvalidInput("max_order must be at least 3".into()));
    }
    let mut entries = Vec::new();
    let mut found = Vec::new();
    for order in 3..=max_order {
        for a in AbelianGroup::all_of_order(order) {
            let entry = scan_group(&a, max_order)?;
            found.extend(entry.accepted.iter().map(|t| t.metric.clone()));
            entries.push(entry);
        }
    }
    Ok(TransitiveScanReport {
        max_order,
        entries,
        found,
    })
}

fn scan_group(a: &AbelianGroup, bound: u64) -> Result<ScanEntry> {
    let m = a.order();
    let elementary_abelian = a.is_elementary_abelian();
    let gauss_inequality_holds = (m - 1) * (m.max(4) - 4) == 0;
    let rejection = if !elementary_abelian {
        Some(Rejection::NotElementaryAbelian)
    } else if !gauss_inequality_holds {
        Some(Rejection::GaussNormInequality)
    } else {
        None
    };
    let forms: Vec<MetricGroup> =
        enumerate_quadratic_forms_bounded(a, bound.max(DEFAULT_ORDER_BOUND))?
            .into_iter()
            .filter_map(|f| MetricGroup::new(f).ok())
            .collect();
    let mut auts: Option<Vec<Vec<usize>>> = None;
    let mut form_rejections = BTreeMap::new();
    let mut brute_force_transitive = 0;
    let mut accepted = Vec::new();
    for metric in &forms {
        let vals = metric.form.values();
        // isometries preserve q, so a transitive action needs q constant
        let constant = vals[1..].iter().all(|v| *v == vals[1]);
        let mut transitive = false;
        let mut iso_order = 0;
        if constant {
            let auts = match &auts {
                Some(x) => x,
                None => auts.insert(a.to_finite_group()?.automorphisms()),
            };
            let iso = isometries_among(metric, auts);
            transitive = iso.is_transitive_off_identity();
            iso_order = iso.order();
        }
        brute_force_transitive += usize::from(transitive);
        let form_rejection = rejection.or(if !constant {
            Some(Rejection::NonConstantForm)
        } else if !transitive {
            Some(Rejection::NotTransitive)
        } else {
            None
        });
        match form_rejection {
            Some(code) => *form_rejections.entry(code).or_insert(0) += 1,
            None => {
                let omega = CyclotomicNumber::root(metric.form.conductor, vals[1]);
                let sum = CyclotomicNumber::from_integer(metric.form.conductor, 1)
                    .add(&omega.scale(&Rational::from_integer(m as i64 - 1)));
                let gauss_identity =
                    sum.norm_squared().to_rational() == Some(Rational::from_integer(m as i64));
                accepted.push(TransitiveMetricGroup {
                    metric: metric.clone(),
                    omega,
                    gauss_identity,
                    isometry_order: iso_order,
                });
            }
        }
    }
    Ok(ScanEntry {
        factors: a.factors.clone(),
        order: m,
        nondegenerate_forms: forms.len(),
        elementary_abelian,
        gauss_inequality_holds,
        rejection,
        form_rejections,
        brute_force_transitive,
        accepted,
    })
}

/// A homomorphism `H → Aut(A, q)` whose image acts freely and transitively
/// on `A ∖ {0}`, together with the size of its equivalence class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionClass {
    /// `images[h]` is the permutation of the elements of `A` by which `h`
    /// acts.
    pub images: Vec<Vec<usize>>,
    pub class_size: usize,
}

/// Regular actions up to conjugation by `Aut(A, q)` and precomposition by
/// `Aut(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionClassification {
    pub metric: MetricGroup,
    pub acting: FiniteGroupSpec,
    pub regular_homomorphisms: usize,
    pub classes: Vec<ActionClass>,
    pub equivalence: &'static str,
    /// Isometries are assumed to lift to braided autoequivalences.
    pub lifting_assumption: &'static str,
}

pub fn classify_actions(m: &MetricGroup, h: &FiniteGroupSpec) -> Result<ActionClassification> {
    let iso = isometry_group(m)?;
    let iso_group = iso.to_finite_group()?;
    let hg = FiniteGroup::from_spec(h)?;
    let n = m.order() as usize;
    let regular = |map: &[usize]| -> bool {
        if n < 2 || hg.order() != n - 1 {
            return false;
        }
        let mut hit = vec![false; n];
        map.iter().all(|g| {
            let y = iso.elements[*g][1];
            y != 0 && !std::mem::replace(&mut hit[y], true)
        })
    };
    let homs: Vec<Vec<usize>> = hg
        .homomorphisms(&iso_group)
        .into_iter()
        .filter(|map| regular(map))
        .collect();
    let h_auts = hg.automorphisms();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut classes = Vec::new();
    for rho in &homs {
        if seen.contains(rho) {
            continue;
        }
        let mut orbit = BTreeSet::new();
        for alpha in 0..iso_group.order() {
            let ai = iso_group.inv(alpha);
            for beta in &h_auts {
                let map: Vec<usize> = (0..hg.order())
                    .map(|x| iso_group.mul(iso_group.mul(ai, rho[beta[x]]), alpha))
                    .collect();
                orbit.insert(map);
            }
        }
        let rep = orbit.iter().next().unwrap().clone();
        classes.push(ActionClass {
            images: rep.iter().map(|g| iso.elements[*g].clone()).collect(),
            class_size: orbit.len(),
        });
        seen.extend(orbit);
    }
    Ok(ActionClassification {
        metric: m.clone(),
        acting: h.clone(),
        regular_homomorphisms: homs.len(),
        classes,
        equivalence: "conjugation by Aut(A,q) and precomposition by Aut(H)",
        lifting_assumption:
            "each isometry is taken to lift to a braided autoequivalence; not checked at ring level",
    })
}
