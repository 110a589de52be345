//! Fusion rings of equivariantizations `C(A, q)^H` for abelian `H` acting
//! freely on `A ∖ {0}`.
//!
//! Simples are `(0, χ)` for `χ ∈ Ĥ` and one `X_O` per free orbit `O`. In
//! `X_O ⊗ X_{O'}` the identity, occurring `|H|` times per block, carries the
//! regular representation and so contributes every `(0, χ)` once per block.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::affine::affine_fusion_ring;
use crate::error::{Error, Result};
use crate::group::{compose, FiniteGroup, FiniteGroupSpec};
use crate::metric::{ActionClass, MetricGroup};
use crate::ring::{
    build_group_ring, build_near_group, fpdim_ring, recognize_near_group, FpDim, FusionRing,
    NearGroupRule,
};

/// An action of `H` on a metric group, given by the permutations of `A`
/// assigned to the generators of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionData {
    pub metric: MetricGroup,
    #[serde(rename = "H")]
    pub acting: FiniteGroupSpec,
    pub images: Vec<Vec<usize>>,
}

impl ActionData {
    /// Uses the images of the generators of `H` from a classified action.
    pub fn from_class(
        metric: &MetricGroup,
        acting: &FiniteGroupSpec,
        class: &ActionClass,
    ) -> Result<Self> {
        let h = FiniteGroup::from_spec(acting)?;
        let images = h
            .generators()
            .iter()
            .map(|g| class.images[*g].clone())
            .collect();
        Ok(ActionData {
            metric: metric.clone(),
            acting: acting.clone(),
            images,
        })
    }

    /// The permutation of `A` for every element of `H`, after checking that
    /// the generator images are isometries and define a homomorphism.
    pub fn permutations(&self) -> Result<(FiniteGroup, Vec<Vec<usize>>)> {
        let h = FiniteGroup::from_spec(&self.acting)?;
        let a = self.metric.group();
        let n = a.order() as usize;
        if self.images.len() != h.generators().len() {
            return Err(Error::InvalidInput(
                "one image per generator of H is required".into(),
            ));
        }
        for p in &self.images {
            let mut seen = vec![false; n];
            let bijective = p.len() == n
                && p.iter()
                    .all(|x| *x < n && !std::mem::replace(&mut seen[*x], true));
            if !bijective {
                return Err(Error::InvalidInput(
                    "image is not a permutation of A".into(),
                ));
            }
            let additive = (0..n).all(|x| (0..n).all(|y| p[a.add(x, y)] == a.add(p[x], p[y])));
            if !additive || !self.metric.form().preserved_by(p) {
                return Err(Error::UnsupportedAction("image is not an isometry".into()));
            }
        }
        let identity: Vec<usize> = (0..n).collect();
        let mut perms: Vec<Option<Vec<usize>>> = vec![None; h.order()];
        perms[0] = Some(identity);
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (g, p) in h.generators().iter().zip(&self.images) {
                let y = h.mul(x, *g);
                let next = compose(perms[x].as_ref().unwrap(), p);
                match &perms[y] {
                    None => {
                        perms[y] = Some(next);
                        queue.push_back(y);
                    }
                    Some(existing) if *existing != next => {
                        return Err(Error::UnsupportedAction(
                            "generator images do not define a homomorphism".into(),
                        ));
                    }
                    Some(_) => {}
                }
            }
        }
        let perms: Vec<Vec<usize>> = perms.into_iter().map(Option::unwrap).collect();
        for x in 0..h.order() {
            for y in 0..h.order() {
                if perms[h.mul(x, y)] != compose(&perms[x], &perms[y]) {
                    return Err(Error::UnsupportedAction(
                        "generator images do not define a homomorphism".into(),
                    ));
                }
            }
        }
        Ok((h, perms))
    }
}

/// A simple object of the equivariantization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OrbitObject {
    /// The identity with a character of `H`, as exponents of `ζ_exp(H)`
    /// indexed by the elements of `H`.
    FixedPoint { character: Vec<u64> },
    /// A free orbit, listed in increasing order.
    FreeOrbit { orbit: Vec<usize> },
}

struct Equivariant {
    h: FiniteGroup,
    chars: Vec<Vec<u64>>,
    exponent: u64,
    orbits: Vec<Vec<usize>>,
}

fn analyse(act: &ActionData) -> Result<Equivariant> {
    let (h, perms) = act.permutations()?;
    if !h.is_abelian() {
        return Err(Error::UnsupportedAction("H must be abelian".into()));
    }
    let n = act.metric.order() as usize;
    for (x, p) in perms.iter().enumerate().skip(1) {
        if let Some(a) = (1..n).find(|a| p[*a] == *a) {
            return Err(Error::UnsupportedAction(format!(
                "{} fixes the non-identity element {a}; stabilizers need projective representations, which are not handled",
                h.name(x)
            )));
        }
    }
    let exponent = h.exponent();
    let target = FiniteGroup::from_spec(&FiniteGroupSpec::cyclic(exponent))?;
    let chars: Vec<Vec<u64>> = h
        .homomorphisms(&target)
        .into_iter()
        .map(|m| m.into_iter().map(|v| v as u64).collect())
        .collect();
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut placed = vec![false; n];
    for a in 1..n {
        if !placed[a] {
            let mut orbit: Vec<usize> = perms.iter().map(|p| p[a]).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for x in &orbit {
                placed[*x] = true;
            }
            orbits.push(orbit);
        }
    }
    Ok(Equivariant {
        h,
        chars,
        exponent,
        orbits,
    })
}

/// `|H|` fixed-point simples followed by the free orbits.
pub fn equivariant_simples(act: &ActionData) -> Result<Vec<OrbitObject>> {
    let e = analyse(act)?;
    let mut out: Vec<OrbitObject> = e
        .chars
        .into_iter()
        .map(|character| OrbitObject::FixedPoint { character })
        .collect();
    out.extend(
        e.orbits
            .into_iter()
            .map(|orbit| OrbitObject::FreeOrbit { orbit }),
    );
    Ok(out)
}

/// The fusion ring of the equivariantization, certified by the axioms.
pub fn equivariant_fusion_ring(act: &ActionData) -> Result<FusionRing> {
    let e = analyse(act)?;
    let a = act.metric.group();
    let hn = e.h.order();
    let nc = e.chars.len();
    let rank = nc + e.orbits.len();
    let char_index: BTreeMap<&Vec<u64>, usize> =
        e.chars.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut orbit_of = vec![usize::MAX; a.order() as usize];
    for (i, o) in e.orbits.iter().enumerate() {
        for x in o {
            orbit_of[*x] = nc + i;
        }
    }
    let mut n = vec![vec![vec![0u64; rank]; rank]; rank];
    for i in 0..nc {
        for j in 0..nc {
            let prod: Vec<u64> = e.chars[i]
                .iter()
                .zip(&e.chars[j])
                .map(|(x, y)| (x + y) % e.exponent)
                .collect();
            n[i][j][char_index[&prod]] = 1;
        }
        for o in nc..rank {
            n[i][o][o] = 1;
            n[o][i][o] = 1;
        }
    }
    for (oi, o) in e.orbits.iter().enumerate() {
        for (pi, p) in e.orbits.iter().enumerate() {
            let mut counts = vec![0usize; rank];
            let mut identity = 0;
            for x in o {
                for y in p {
                    match a.add(*x, *y) {
                        0 => identity += 1,
                        z => counts[orbit_of[z]] += 1,
                    }
                }
            }
            let row = &mut n[nc + oi][nc + pi];
            if identity % hn != 0 {
                return Err(Error::Internal(
                    "identity multiplicity is not a multiple of |H|".into(),
                ));
            }
            for c in row.iter_mut().take(nc) {
                *c = (identity / hn) as u64;
            }
            for z in nc..rank {
                if counts[z] % hn != 0 {
                    return Err(Error::Internal(
                        "orbit multiplicity is not a multiple of |H|".into(),
                    ));
                }
                row[z] = (counts[z] / hn) as u64;
            }
        }
    }
    let mut basis: Vec<String> = (0..nc)
        .map(|i| {
            if i == 0 {
                "1".to_string()
            } else {
                format!("χ{i}")
            }
        })
        .collect();
    basis.extend(e.orbits.iter().map(|o| format!("X{}", o[0])));
    let mut dual: Vec<usize> = e
        .chars
        .iter()
        .map(|c| {
            char_index[&c
                .iter()
                .map(|x| (e.exponent - x) % e.exponent)
                .collect::<Vec<_>>()]
        })
        .collect();
    dual.extend(e.orbits.iter().map(|o| orbit_of[a.neg(o[0])]));
    let ring = FusionRing::new(basis, dual, n)?;
    ring.require_axioms()?;
    Ok(ring)
}

/// Identity occurrences in `X_O ⊗ X_{-O}`, per free orbit.
pub fn identity_occurrences(act: &ActionData) -> Result<Vec<usize>> {
    let e = analyse(act)?;
    let a = act.metric.group();
    Ok(e.orbits
        .iter()
        .map(|o| {
            let minus: Vec<usize> = o.iter().map(|x| a.neg(*x)).collect();
            o.iter()
                .map(|x| minus.iter().filter(|y| a.add(*x, **y) == 0).count())
                .sum()
        })
        .collect())
}

/// The ring, its near-group rule and the FPdim multiplicativity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivariantReport {
    pub action: ActionData,
    pub simples: Vec<OrbitObject>,
    pub ring: FusionRing,
    pub rule: Option<NearGroupRule>,
    pub fpdim: FpDim,
    pub expected_fpdim: u64,
    pub fpdim_multiplicative: bool,
    pub commutative: bool,
}

pub fn equivariant_report(act: &ActionData) -> Result<EquivariantReport> {
    let ring = equivariant_fusion_ring(act)?;
    let h = FiniteGroup::from_spec(&act.acting)?.order() as u64;
    let expected_fpdim = h * act.metric.order();
    let fpdim = fpdim_ring(&ring)?;
    let fpdim_multiplicative = fpdim
        .as_exact()
        .and_then(|d| d.as_rational())
        .is_some_and(|d| *d == crate::arith::Rational::from_integer(expected_fpdim as i64));
    Ok(EquivariantReport {
        action: act.clone(),
        simples: equivariant_simples(act)?,
        rule: recognize_near_group(&ring),
        commutative: ring.is_commutative(),
        ring,
        fpdim,
        expected_fpdim,
        fpdim_multiplicative,
    })
}

/// Admissible orbit sizes `s` of a simple of dimension `1 + s` when the
/// category has dimension `n(n + 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitConstraint {
    pub n: u64,
    pub admissible: Vec<u64>,
}

/// For `s ≥ 2` the identity `1 + s = n(n+1)/n` must hold, leaving `s ∈ {1, n}`.
pub fn orbit_constraint_check(n_max: u64) -> Vec<OrbitConstraint> {
    (1..=n_max)
        .map(|n| OrbitConstraint {
            n,
            admissible: (1..=n)
                .filter(|s| *s == 1 || (1 + s) * n == n * (n + 1))
                .collect(),
        })
        .collect()
}

/// `YL ⊠ R` for a ring `R` standing for `Rep(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YangLeeProduct {
    pub h: String,
    pub rank: usize,
    pub near_group: bool,
}

/// The product ring is near-group only when `H` is trivial; the categorical
/// step from this to `H = 1` is imported.
pub fn yang_lee_product_check() -> Result<Vec<YangLeeProduct>> {
    let yl = build_near_group(&NearGroupRule::new(FiniteGroupSpec::trivial(), 1))?;
    let mut reps: Vec<(String, FusionRing)> = Vec::new();
    for spec in [
        FiniteGroupSpec::trivial(),
        FiniteGroupSpec::cyclic(2),
        FiniteGroupSpec::cyclic(3),
        FiniteGroupSpec::cyclic(4),
        FiniteGroupSpec::product(&[2, 2]),
    ] {
        reps.push((spec.label(), build_group_ring(&spec)?));
    }
    reps.push(("S3".into(), affine_fusion_ring(3)?.2));
    reps.push(("A4".into(), affine_fusion_ring(4)?.2));
    Ok(reps
        .into_iter()
        .map(|(h, r)| {
            let product = yl.tensor(&r);
            YangLeeProduct {
                h,
                rank: product.rank(),
                near_group: recognize_near_group(&product).is_some(),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::classify_actions;

    fn action(metric: MetricGroup, h: FiniteGroupSpec) -> ActionData {
        let classes = classify_actions(&metric, &h).unwrap();
        ActionData::from_class(&metric, &h, &classes.classes[0]).unwrap()
    }

    #[test]
    fn z3_with_inversion() {
        let act = action(MetricGroup::z3(1).unwrap(), FiniteGroupSpec::cyclic(2));
        assert_eq!(equivariant_simples(&act).unwrap().len(), 3);
        let ring = equivariant_fusion_ring(&act).unwrap();
        assert_eq!(ring.product(2, 2), vec![(0, 1), (1, 1), (2, 1)]);
        let report = equivariant_report(&act).unwrap();
        assert!(report.fpdim_multiplicative && report.commutative);
        assert_eq!(
            report.rule.unwrap(),
            NearGroupRule::new(FiniteGroupSpec::cyclic(2), 1)
        );
        assert_eq!(identity_occurrences(&act).unwrap(), vec![2]);
    }

    #[test]
    fn klein_with_rotation() {
        let act = action(MetricGroup::klein_minus_one(), FiniteGroupSpec::cyclic(3));
        assert_eq!(equivariant_simples(&act).unwrap().len(), 4);
        let ring = equivariant_fusion_ring(&act).unwrap();
        assert_eq!(ring.product(3, 3), vec![(0, 1), (1, 1), (2, 1), (3, 2)]);
        let report = equivariant_report(&act).unwrap();
        assert_eq!(report.expected_fpdim, 12);
        assert!(report.fpdim_multiplicative);
        assert_eq!(
            report.rule.unwrap(),
            NearGroupRule::new(FiniteGroupSpec::cyclic(3), 2)
        );
        assert_eq!(identity_occurrences(&act).unwrap(), vec![3]);
    }

    #[test]
    fn trivial_action_gives_the_group_ring() {
        let m = MetricGroup::z3(1).unwrap();
        let act = ActionData {
            metric: m,
            acting: FiniteGroupSpec::trivial(),
            images: vec![],
        };
        let ring = equivariant_fusion_ring(&act).unwrap();
        assert!(ring.is_isomorphic(&build_group_ring(&FiniteGroupSpec::cyclic(3)).unwrap()));
    }

    #[test]
    fn non_free_and_non_isometric_actions_are_rejected() {
        let k = MetricGroup::klein_minus_one();
        // swaps two non-identity elements and fixes the third
        let swap = ActionData {
            metric: k.clone(),
            acting: FiniteGroupSpec::cyclic(2),
            images: vec![vec![0, 2, 1, 3]],
        };
        assert!(matches!(
            equivariant_fusion_ring(&swap),
            Err(Error::UnsupportedAction(_))
        ));
        let wrong_order = ActionData {
            metric: k,
            acting: FiniteGroupSpec::cyclic(2),
            images: vec![vec![0, 2, 3, 1]],
        };
        assert!(wrong_order.permutations().is_err());
        let z3 = MetricGroup::z3(1).unwrap();
        let bad = ActionData {
            metric: z3,
            acting: FiniteGroupSpec::cyclic(2),
            images: vec![vec![0, 1, 1]],
        };
        assert!(bad.permutations().is_err());
    }

    #[test]
    fn isometric_action_data_give_isomorphic_rings() {
        let k = MetricGroup::klein_minus_one();
        let act = action(k.clone(), FiniteGroupSpec::cyclic(3));
        let base = equivariant_fusion_ring(&act).unwrap();
        for alpha in crate::metric::isometry_group(&k).unwrap().elements {
            let mut inverse = vec![0; alpha.len()];
            for (i, x) in alpha.iter().enumerate() {
                inverse[*x] = i;
            }
            let images = act
                .images
                .iter()
                .map(|p| compose(&compose(&inverse, p), &alpha))
                .collect();
            let moved = ActionData {
                images,
                ..act.clone()
            };
            assert!(equivariant_fusion_ring(&moved)
                .unwrap()
                .is_isomorphic(&base));
        }
    }

    #[test]
    fn orbit_sizes() {
        let c = orbit_constraint_check(4);
        assert_eq!(c[0].admissible, vec![1]);
        assert_eq!(c[1].admissible, vec![1, 2]);
        assert_eq!(c[2].admissible, vec![1, 3]);
        assert_eq!(c[3].admissible, vec![1, 4]);
    }

    #[test]
    fn yang_lee_products() {
        let entries = yang_lee_product_check().unwrap();
        assert!(entries[0].near_group);
        assert!(entries[1..].iter().all(|e| !e.near_group));
    }

    #[test]
    fn action_data_json() {
        let act = action(MetricGroup::z3(1).unwrap(), FiniteGroupSpec::cyclic(2));
        let s = serde_json::to_string(&act).unwrap();
        assert_eq!(
            s,
            r#"{"metric":{"factors":[3],"conductor":6,"q_gen":[2],"b":[[4]]},"H":{"kind":"cyclic","n":2},"images":[[0,2,1]]}"#
        );
        assert_eq!(serde_json::from_str::<ActionData>(&s).unwrap(), act);
    }
}
