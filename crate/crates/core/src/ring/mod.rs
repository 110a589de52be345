//! Fusion rings given by dense structure constants.
//!
//! `N[i][j][k]` is the multiplicity of basis element `k` in `i ⊗ j`; basis
//! element 0 is the unit.

mod build;
mod fpdim;
mod recognize;
mod subring;

pub use build::{build_group_ring, build_near_group, group_ring, NearGroupRule};
pub use fpdim::{
    fpdim_object, fpdim_ring, fpdims, integer_fpdim_scan, FpDim, IntegerFpdimReport, IntegralPair,
};
pub use recognize::recognize_near_group;
pub use subring::{adjoint_subring, commutator_subring, generated_subring, Subring};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RingRepr", into = "RingRepr")]
pub struct FusionRing {
    basis: Vec<String>,
    dual: Vec<usize>,
    n: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RingRepr {
    basis: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    #[serde(rename = "N")]
    n: Vec<Vec<Vec<u64>>>,
}

impl TryFrom<RingRepr> for FusionRing {
    type Error = Error;
    fn try_from(r: RingRepr) -> Result<Self> {
        if r.unit != 0 {
            return Err(Error::InvalidInput(
                "the unit must be basis element 0".into(),
            ));
        }
        FusionRing::new(r.basis, r.dual, r.n)
    }
}

impl From<FusionRing> for RingRepr {
    fn from(r: FusionRing) -> Self {
        let n = r.triples();
        RingRepr {
            basis: r.basis,
            unit: 0,
            dual: r.dual,
            n,
        }
    }
}

/// Which fusion-ring law an identity belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    Unit,
    Dual,
    Frobenius,
    Associativity,
}

/// One failed identity, with the indices it was checked at and both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: Law,
    pub indices: Vec<usize>,
    pub lhs: u64,
    pub rhs: u64,
}

/// Result of an exhaustive axiom check; empty iff the ring is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn with_law(&self, law: Law) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.law == law)
    }
}

impl FusionRing {
    /// Builds a ring from nested structure constants; only shapes are
    /// validated here, the fusion laws by [`FusionRing::check_axioms`].
    pub fn new(basis: Vec<String>, dual: Vec<usize>, n: Vec<Vec<Vec<u64>>>) -> Result<Self> {
        let r = basis.len();
        if r == 0 {
            return Err(Error::InvalidInput("empty basis".into()));
        }
        if dual.len() != r || dual.iter().any(|d| *d >= r) {
            return Err(Error::InvalidInput(
                "dual must map basis indices to basis indices".into(),
            ));
        }
        if n.len() != r
            || n.iter()
                .any(|row| row.len() != r || row.iter().any(|v| v.len() != r))
        {
            return Err(Error::InvalidInput(format!(
                "structure constants must be {r}×{r}×{r}"
            )));
        }
        let flat = n.into_iter().flatten().flatten().collect();
        Ok(FusionRing {
            basis,
            dual,
            n: flat,
        })
    }

    /// Builds a ring from a function `(i, j, k) ↦ N[i][j][k]`.
    pub fn from_fn(
        basis: Vec<String>,
        dual: Vec<usize>,
        f: impl Fn(usize, usize, usize) -> u64,
    ) -> Result<Self> {
        let r = basis.len();
        let n = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| (0..r).map(|k| f(i, j, k)).collect())
                    .collect()
            })
            .collect();
        Self::new(basis, dual, n)
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn n(&self, i: usize, j: usize, k: usize) -> u64 {
        let r = self.rank();
        self.n[(i * r + j) * r + k]
    }

    pub fn set_n(&mut self, i: usize, j: usize, k: usize, value: u64) {
        let r = self.rank();
        self.n[(i * r + j) * r + k] = value;
    }

    /// `N` as a nested array.
    pub fn triples(&self) -> Vec<Vec<Vec<u64>>> {
        let r = self.rank();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| (0..r).map(|k| self.n(i, j, k)).collect())
                    .collect()
            })
            .collect()
    }

    /// Nonzero terms of `i ⊗ j` as `(k, multiplicity)`.
    pub fn product(&self, i: usize, j: usize) -> Vec<(usize, u64)> {
        (0..self.rank())
            .filter_map(|k| Some((k, self.n(i, j, k))).filter(|(_, m)| *m > 0))
            .collect()
    }

    /// Basis elements occurring in `i ⊗ j`.
    pub fn support(&self, i: usize, j: usize) -> Vec<usize> {
        self.product(i, j).into_iter().map(|(k, _)| k).collect()
    }

    /// Left multiplication by `i`: entry `[k][j]` is `N[i][j][k]`.
    pub fn left_matrix(&self, i: usize) -> Vec<Vec<u64>> {
        let r = self.rank();
        (0..r)
            .map(|k| (0..r).map(|j| self.n(i, j, k)).collect())
            .collect()
    }

    /// `i ⊗ dual(i) = 1`.
    pub fn is_invertible(&self, i: usize) -> bool {
        self.product(i, self.dual(i)) == vec![(0, 1)]
    }

    pub fn invertibles(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|i| self.is_invertible(*i))
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| (0..i).all(|j| (0..r).all(|k| self.n(i, j, k) == self.n(j, i, k))))
    }

    /// Exhaustive check of the unit, dual, Frobenius and associativity laws.
    pub fn check_axioms(&self) -> AxiomReport {
        let r = self.rank();
        let mut violations = Vec::new();
        let mut push = |law, indices: Vec<usize>, lhs, rhs| {
            violations.push(Violation {
                law,
                indices,
                lhs,
                rhs,
            })
        };
        for j in 0..r {
            for k in 0..r {
                let expected = u64::from(j == k);
                if self.n(0, j, k) != expected {
                    push(Law::Unit, vec![0, j, k], self.n(0, j, k), expected);
                }
                if self.n(j, 0, k) != expected {
                    push(Law::Unit, vec![j, 0, k], self.n(j, 0, k), expected);
                }
            }
        }
        for i in 0..r {
            if self.dual[self.dual[i]] != i {
                push(Law::Dual, vec![i], self.dual[self.dual[i]] as u64, i as u64);
            }
            for j in 0..r {
                let expected = u64::from(j == self.dual[i]);
                if self.n(i, j, 0) != expected {
                    push(Law::Dual, vec![i, j, 0], self.n(i, j, 0), expected);
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let v = self.n(i, j, k);
                    let a = self.n(self.dual[i], k, j);
                    let b = self.n(k, self.dual[j], i);
                    if v != a {
                        push(Law::Frobenius, vec![i, j, k], v, a);
                    } else if v != b {
                        push(Law::Frobenius, vec![i, j, k], v, b);
                    }
                }
            }
        }
        let products: Vec<Vec<Vec<(usize, u64)>>> = (0..r)
            .map(|i| (0..r).map(|j| self.product(i, j)).collect())
            .collect();
        let mut left = vec![0u64; r];
        let mut right = vec![0u64; r];
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    left.iter_mut().for_each(|x| *x = 0);
                    right.iter_mut().for_each(|x| *x = 0);
                    // (i ⊗ j) ⊗ k
                    for &(m, a) in &products[i][j] {
                        for &(l, b) in &products[m][k] {
                            left[l] += a * b;
                        }
                    }
                    // i ⊗ (j ⊗ k)
                    for &(m, a) in &products[j][k] {
                        for &(l, b) in &products[i][m] {
                            right[l] += a * b;
                        }
                    }
                    for l in 0..r {
                        if left[l] != right[l] {
                            push(Law::Associativity, vec![i, j, k, l], left[l], right[l]);
                        }
                    }
                }
            }
        }
        AxiomReport { violations }
    }

    pub fn require_axioms(&self) -> Result<()> {
        let report = self.check_axioms();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::NotAxiomatic(format!(
                "{} violation(s), first: {:?} at {:?} ({} vs {})",
                report.violations.len(),
                v.law,
                v.indices,
                v.lhs,
                v.rhs
            ))),
        }
    }

    /// Whether `map` (basis of `self` to basis of `target`) sends products
    /// to products: `N'[f(i)][f(j)][c] = Σ_{f(k) = c} N[i][j][k]`.
    pub fn is_homomorphism_onto(&self, target: &FusionRing, map: &[usize]) -> bool {
        let r = self.rank();
        if map.len() != r || map[0] != 0 {
            return false;
        }
        for i in 0..r {
            for j in 0..r {
                let mut image = vec![0u64; target.rank()];
                for (k, m) in self.product(i, j) {
                    image[map[k]] += m;
                }
                if (0..target.rank()).any(|c| image[c] != target.n(map[i], map[j], c)) {
                    return false;
                }
            }
        }
        (0..target.rank()).all(|c| map.contains(&c))
    }

    /// The basis permutation `perm[old] = new` applied to the ring; the unit
    /// must stay fixed.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let r = self.rank();
        let mut seen = vec![false; r];
        if perm.len() != r
            || perm[0] != 0
            || perm
                .iter()
                .any(|p| *p >= r || std::mem::replace(&mut seen[*p], true))
        {
            return Err(Error::InvalidInput(
                "relabeling must be a permutation fixing the unit".into(),
            ));
        }
        let mut inv = vec![0; r];
        for (old, new) in perm.iter().enumerate() {
            inv[*new] = old;
        }
        let basis = (0..r).map(|x| self.basis[inv[x]].clone()).collect();
        let dual = (0..r).map(|x| perm[self.dual[inv[x]]]).collect();
        Self::from_fn(basis, dual, |i, j, k| self.n(inv[i], inv[j], inv[k]))
    }

    /// A basis bijection carrying `self` to `other`, found by backtracking.
    pub fn isomorphism_to(&self, other: &FusionRing) -> Option<Vec<usize>> {
        let r = self.rank();
        if other.rank() != r {
            return None;
        }
        let signature = |ring: &FusionRing, i: usize| {
            let mut row: Vec<u64> = (0..r)
                .flat_map(|j| (0..r).map(move |k| (j, k)))
                .map(|(j, k)| ring.n(i, j, k))
                .collect();
            row.sort_unstable();
            (ring.is_invertible(i), ring.n(i, i, i), row)
        };
        let sig_a: Vec<_> = (0..r).map(|i| signature(self, i)).collect();
        let sig_b: Vec<_> = (0..r).map(|i| signature(other, i)).collect();
        let mut map = vec![usize::MAX; r];
        let mut used = vec![false; r];
        map[0] = 0;
        used[0] = true;
        fn extend(
            a: &FusionRing,
            b: &FusionRing,
            sig_a: &[(bool, u64, Vec<u64>)],
            sig_b: &[(bool, u64, Vec<u64>)],
            pos: usize,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            let r = a.rank();
            if pos == r {
                return (0..r).all(|i| {
                    map[a.dual(i)] == b.dual(map[i])
                        && (0..r)
                            .all(|j| (0..r).all(|k| a.n(i, j, k) == b.n(map[i], map[j], map[k])))
                });
            }
            for cand in 1..r {
                if used[cand] || sig_a[pos] != sig_b[cand] {
                    continue;
                }
                map[pos] = cand;
                used[cand] = true;
                // prune on the constants among already-placed elements
                let consistent = (0..=pos).all(|i| {
                    (0..=pos)
                        .all(|j| (0..=pos).all(|k| a.n(i, j, k) == b.n(map[i], map[j], map[k])))
                });
                if consistent && extend(a, b, sig_a, sig_b, pos + 1, map, used) {
                    return true;
                }
                used[cand] = false;
                map[pos] = usize::MAX;
            }
            false
        }
        if sig_a[0] != sig_b[0] {
            return None;
        }
        extend(self, other, &sig_a, &sig_b, 1, &mut map, &mut used).then_some(map)
    }

    pub fn is_isomorphic(&self, other: &FusionRing) -> bool {
        self.isomorphism_to(other).is_some()
    }

    /// The product ring on pairs of basis elements.
    pub fn tensor(&self, other: &FusionRing) -> Self {
        let (ra, rb) = (self.rank(), other.rank());
        let basis = (0..ra * rb)
            .map(|x| {
                let (i, j) = (x / rb, x % rb);
                match (i, j) {
                    (0, 0) => self.name(0).to_string(),
                    _ => format!("{}⊠{}", self.name(i), other.name(j)),
                }
            })
            .collect();
        let dual = (0..ra * rb)
            .map(|x| self.dual(x / rb) * rb + other.dual(x % rb))
            .collect();
        Self::from_fn(basis, dual, |x, y, z| {
            self.n(x / rb, y / rb, z / rb) * other.n(x % rb, y % rb, z % rb)
        })
        .expect("product of valid shapes")
    }
}

impl fmt::Debug for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FusionRing(rank {})", self.rank())?;
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                let terms: Vec<String> = self
                    .product(i, j)
                    .into_iter()
                    .map(|(k, m)| {
                        if m == 1 {
                            self.name(k).to_string()
                        } else {
                            format!("{m}{}", self.name(k))
                        }
                    })
                    .collect();
                writeln!(
                    f,
                    "  {} ⊗ {} = {}",
                    self.name(i),
                    self.name(j),
                    terms.join(" ⊕ ")
                )?;
            }
        }
        Ok(())
    }
}
