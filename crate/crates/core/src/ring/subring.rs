//! Fusion subrings: sets of basis elements closed under products and duals.

use std::collections::BTreeSet;

use serde::Serialize;

use super::FusionRing;
use crate::error::{Error, Result};

/// A subset of basis indices containing the unit and closed under `⊗` and
/// duality. Members are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subring {
    members: Vec<usize>,
}

impl Subring {
    /// Validates closure of `members` inside `ring`.
    pub fn new(ring: &FusionRing, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        if !set.contains(&0) {
            return Err(Error::InvalidSubring("the unit is missing".into()));
        }
        if let Some(x) = set.iter().find(|x| **x >= ring.rank()) {
            return Err(Error::InvalidSubring(format!(
                "index {x} is outside the basis"
            )));
        }
        for &i in &set {
            if !set.contains(&ring.dual(i)) {
                return Err(Error::InvalidSubring(format!(
                    "not closed under duals at {}",
                    ring.name(i)
                )));
            }
            for &j in &set {
                if let Some(k) = ring.support(i, j).into_iter().find(|k| !set.contains(k)) {
                    return Err(Error::InvalidSubring(format!(
                        "{} ⊗ {} contains {} outside the subset",
                        ring.name(i),
                        ring.name(j),
                        ring.name(k)
                    )));
                }
            }
        }
        Ok(Subring {
            members: set.into_iter().collect(),
        })
    }

    /// The whole ring.
    pub fn full(ring: &FusionRing) -> Self {
        Subring {
            members: (0..ring.rank()).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_full(&self, ring: &FusionRing) -> bool {
        self.members.len() == ring.rank()
    }

    pub fn names<'a>(&self, ring: &'a FusionRing) -> Vec<&'a str> {
        self.members.iter().map(|i| ring.name(*i)).collect()
    }
}

/// The smallest subring containing `seeds`.
pub fn generated_subring(ring: &FusionRing, seeds: impl IntoIterator<Item = usize>) -> Subring {
    let mut set: BTreeSet<usize> = seeds.into_iter().collect();
    set.insert(0);
    loop {
        let mut next = set.clone();
        for &i in &set {
            next.insert(ring.dual(i));
            for &j in &set {
                next.extend(ring.support(i, j));
            }
        }
        if next == set {
            break;
        }
        set = next;
    }
    Subring {
        members: set.into_iter().collect(),
    }
}

/// Generated by every summand of every `i ⊗ dual(i)`.
pub fn adjoint_subring(ring: &FusionRing) -> Subring {
    let seeds: Vec<usize> = (0..ring.rank())
        .flat_map(|i| ring.support(i, ring.dual(i)))
        .collect();
    generated_subring(ring, seeds)
}

/// Generated by every `Y` with `Y ⊗ dual(Y)` supported inside `k`.
pub fn commutator_subring(ring: &FusionRing, k: &Subring) -> Result<Subring> {
    let k = Subring::new(ring, k.members().iter().copied())?;
    let seeds: Vec<usize> = (0..ring.rank())
        .filter(|y| {
            ring.support(*y, ring.dual(*y))
                .iter()
                .all(|z| k.contains(*z))
        })
        .collect();
    Ok(generated_subring(ring, seeds))
}
