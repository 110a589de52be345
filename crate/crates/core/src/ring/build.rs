//! Group rings and near-group rings.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::FusionRing;
use crate::error::Result;
use crate::group::{FiniteGroup, FiniteGroupSpec};

/// The near-group fusion rule `X ⊗ X = Σ_{g ∈ G} g + kX`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NearGroupRule {
    pub group: FiniteGroupSpec,
    pub k: u64,
}

impl NearGroupRule {
    pub fn new(group: FiniteGroupSpec, k: u64) -> Self {
        NearGroupRule { group, k }
    }

    /// Same `k` and isomorphic groups.
    pub fn equivalent(&self, other: &NearGroupRule) -> Result<bool> {
        if self.k != other.k {
            return Ok(false);
        }
        let a = FiniteGroup::from_spec(&self.group)?;
        let b = FiniteGroup::from_spec(&other.group)?;
        Ok(a.is_isomorphic(&b))
    }
}

impl fmt::Display for NearGroupRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.group.label(), self.k)
    }
}

/// The pointed ring of a group table.
pub fn group_ring(g: &FiniteGroup) -> FusionRing {
    let dual = (0..g.order()).map(|a| g.inv(a)).collect();
    FusionRing::from_fn(g.names().to_vec(), dual, |i, j, k| {
        u64::from(g.mul(i, j) == k)
    })
    .expect("square table")
}

pub fn build_group_ring(spec: &FiniteGroupSpec) -> Result<FusionRing> {
    Ok(group_ring(&FiniteGroup::from_spec(spec)?))
}

/// `NG(G, k)` on the basis `G ∪ {X}` with `X` last.
pub fn build_near_group(rule: &NearGroupRule) -> Result<FusionRing> {
    let g = FiniteGroup::from_spec(&rule.group)?;
    let n = g.order();
    let mut basis = g.names().to_vec();
    basis.push("X".into());
    let mut dual: Vec<usize> = (0..n).map(|a| g.inv(a)).collect();
    dual.push(n);
    let k = rule.k;
    FusionRing::from_fn(basis, dual, |i, j, l| match (i == n, j == n) {
        (false, false) => u64::from(g.mul(i, j) == l),
        (true, true) if l == n => k,
        (true, true) => 1,
        _ => u64::from(l == n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rules_match_their_descriptions() {
        let yl = build_near_group(&NearGroupRule::new(FiniteGroupSpec::trivial(), 1)).unwrap();
        assert_eq!(yl.product(1, 1), vec![(0, 1), (1, 1)]);
        let ty = build_near_group(&NearGroupRule::new(FiniteGroupSpec::cyclic(3), 0)).unwrap();
        assert_eq!(ty.product(3, 3), vec![(0, 1), (1, 1), (2, 1)]);
        let z2 = build_near_group(&NearGroupRule::new(FiniteGroupSpec::cyclic(2), 1)).unwrap();
        assert_eq!(z2.product(2, 2), vec![(0, 1), (1, 1), (2, 1)]);
        for r in [yl, ty, z2] {
            assert!(r.check_axioms().is_valid());
        }
    }

    #[test]
    fn group_rings() {
        let t = build_group_ring(&FiniteGroupSpec::trivial()).unwrap();
        assert_eq!((t.rank(), t.n(0, 0, 0)), (1, 1));
        let z3 = build_group_ring(&FiniteGroupSpec::cyclic(3)).unwrap();
        assert_eq!(z3.dual(1), 2);
        assert_eq!(z3.product(1, 1), vec![(2, 1)]);
        let s3 = build_group_ring(&FiniteGroupSpec::s3()).unwrap();
        assert_eq!(s3.rank(), 6);
        assert!(!s3.is_commutative());
        assert!(s3.check_axioms().is_valid());
    }

    #[test]
    fn near_group_over_nonabelian_group() {
        let r = build_near_group(&NearGroupRule::new(FiniteGroupSpec::s3(), 5)).unwrap();
        assert!(r.check_axioms().is_valid());
        assert_eq!(
            NearGroupRule::new(FiniteGroupSpec::cyclic(3), 2).to_string(),
            "(Z/3,2)"
        );
    }
}
