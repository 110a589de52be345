//! A small catalog of extraspecial 2-groups. Each has exactly one
//! irreducible of degree greater than one, and its representation ring is
//! always near-group with `k = 0`.

use serde::Serialize;

use crate::arith::CyclotomicNumber;
use crate::character::{fusion_ring_from_characters, CharacterTable};
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::ring::{recognize_near_group, NearGroupRule};

/// `2^{1+2m}` as pairs `(v, z)` with `v ∈ F_2^{2m}` and product
/// `(v, z)(w, z') = (v + w, z + z' + β(v, w))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtraspecialPresentation {
    pub name: &'static str,
    /// `β(eᵢ, eⱼ)` on a basis of `F_2^{2m}`; not necessarily symmetric.
    pub cocycle: Vec<Vec<u8>>,
}

/// `x₁y₂`, giving the dihedral group of order 8.
const D8: [[u8; 2]; 2] = [[0, 1], [0, 0]];
/// `x₁y₁ + x₁y₂ + x₂y₂`, giving the quaternion group.
const Q8: [[u8; 2]; 2] = [[1, 1], [0, 1]];

fn block_sum(blocks: &[[[u8; 2]; 2]]) -> Vec<Vec<u8>> {
    let n = 2 * blocks.len();
    let mut out = vec![vec![0; n]; n];
    for (b, block) in blocks.iter().enumerate() {
        for i in 0..2 {
            for j in 0..2 {
                out[2 * b + i][2 * b + j] = block[i][j];
            }
        }
    }
    out
}

/// D8, Q8, `2^{1+4}_+` and `2^{1+4}_-`.
pub fn extraspecial_catalog() -> Vec<ExtraspecialPresentation> {
    vec![
        ExtraspecialPresentation {
            name: "D8",
            cocycle: block_sum(&[D8]),
        },
        ExtraspecialPresentation {
            name: "Q8",
            cocycle: block_sum(&[Q8]),
        },
        ExtraspecialPresentation {
            name: "2^{1+4}+",
            cocycle: block_sum(&[D8, D8]),
        },
        ExtraspecialPresentation {
            name: "2^{1+4}-",
            cocycle: block_sum(&[D8, Q8]),
        },
    ]
}

impl ExtraspecialPresentation {
    pub fn rank(&self) -> usize {
        self.cocycle.len()
    }

    fn beta(&self, v: usize, w: usize) -> usize {
        let r = self.rank();
        let mut s = 0;
        for i in 0..r {
            for j in 0..r {
                s ^= ((v >> i) & (w >> j) & 1) * self.cocycle[i][j] as usize;
            }
        }
        s
    }

    /// Element `2v + z`.
    pub fn group(&self) -> Result<FiniteGroup> {
        let order = 2usize << self.rank();
        let table = (0..order)
            .map(|x| {
                (0..order)
                    .map(|y| {
                        let (v, z) = (x >> 1, x & 1);
                        let (w, u) = (y >> 1, y & 1);
                        (v ^ w) << 1 | (z ^ u ^ self.beta(v, w))
                    })
                    .collect()
            })
            .collect();
        let names = (0..order)
            .map(|x| format!("({:0width$b},{})", x >> 1, x & 1, width = self.rank()))
            .collect();
        FiniteGroup::from_table(names, table)
    }

    /// `2^{2m}` characters `(-1)^{u·v}` and `ψ = (ρ_reg - Σ λ)/2^m`.
    pub fn character_table(&self) -> Result<CharacterTable> {
        let g = self.group()?;
        let r = self.rank();
        let linear = 1usize << r;
        let d = 1i64 << (r / 2);
        let mut names: Vec<String> = (0..linear)
            .map(|u| if u == 0 { "1".into() } else { format!("λ{u}") })
            .collect();
        names.push("ψ".into());
        let order = g.order() as i64;
        let table = CharacterTable::from_class_functions(&g, names, None, |i, x| {
            let v = x >> 1;
            if i < linear {
                let sign = if (i & v).count_ones() % 2 == 0 { 1 } else { -1 };
                return CyclotomicNumber::from_integer(1, sign);
            }
            let regular = if x == 0 { order } else { 0 };
            let sum: i64 = (0..linear)
                .map(|u| if (u & v).count_ones() % 2 == 0 { 1 } else { -1 })
                .sum();
            CyclotomicNumber::from_integer(1, (regular - sum) / d)
        });
        table.verify()?;
        Ok(table)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtraspecialEntry {
    pub name: &'static str,
    pub order: usize,
    pub large_irreducibles: usize,
    pub rule: Option<NearGroupRule>,
    pub k_is_zero: bool,
}

/// Checks each catalog group: one large irreducible and a near-group ring
/// with `k = 0`.
pub fn extraspecial_check() -> Result<Vec<ExtraspecialEntry>> {
    extraspecial_catalog()
        .iter()
        .map(|e| {
            let t = e.character_table()?;
            let ring = fusion_ring_from_characters(&t)?;
            let rule = recognize_near_group(&ring);
            Ok(ExtraspecialEntry {
                name: e.name,
                order: t.group_order,
                large_irreducibles: t.degrees().iter().filter(|d| **d > 1).count(),
                k_is_zero: rule.as_ref().is_some_and(|r| r.k == 0),
                rule,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroupSpec;

    #[test]
    fn catalog_groups_are_extraspecial() {
        for e in extraspecial_catalog() {
            let g = e.group().unwrap();
            assert_eq!(g.center(), vec![0, 1], "{}", e.name);
            assert!(!g.is_abelian());
        }
        let d8 = FiniteGroupSpec::permutation(4, vec![vec![1, 2, 3, 0], vec![3, 2, 1, 0]]);
        let d8 = FiniteGroup::from_spec(&d8).unwrap();
        assert!(extraspecial_catalog()[0]
            .group()
            .unwrap()
            .is_isomorphic(&d8));
        assert!(!extraspecial_catalog()[1]
            .group()
            .unwrap()
            .is_isomorphic(&d8));
    }

    #[test]
    fn catalog_rings_have_k_zero() {
        let entries = extraspecial_check().unwrap();
        assert_eq!(
            entries.iter().map(|e| e.order).collect::<Vec<_>>(),
            vec![8, 8, 32, 32]
        );
        for e in &entries {
            assert_eq!(e.large_irreducibles, 1);
            assert!(e.k_is_zero, "{}", e.name);
        }
        let r = entries[2].rule.as_ref().unwrap();
        assert!(r
            .equivalent(&NearGroupRule::new(
                FiniteGroupSpec::product(&[2, 2, 2, 2]),
                0
            ))
            .unwrap());
    }
}
