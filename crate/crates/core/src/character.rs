//! Character tables with exact cyclotomic values and the fusion rings of
//! their representation categories.

use serde::Serialize;

use crate::arith::{CyclotomicNumber, Rational};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ring::FusionRing;

/// A conjugacy class by representative name and size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassInfo {
    pub rep: String,
    pub size: usize,
}

/// Irreducible characters of a finite group, one row per character and one
/// column per conjugacy class; all values share one conductor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    pub classes: Vec<ClassInfo>,
    pub chars: Vec<Vec<CyclotomicNumber>>,
    #[serde(skip)]
    pub names: Vec<String>,
    #[serde(skip)]
    pub group_order: usize,
}

impl CharacterTable {
    /// Evaluates each class function at the class representatives of `g`;
    /// values are lifted to a common conductor.
    pub fn from_class_functions(
        g: &FiniteGroup,
        names: Vec<String>,
        q: Option<u64>,
        chars: impl Fn(usize, usize) -> CyclotomicNumber,
    ) -> Self {
        let classes = g.conjugacy_classes();
        let mut rows: Vec<Vec<CyclotomicNumber>> = (0..names.len())
            .map(|i| classes.iter().map(|c| chars(i, c[0])).collect())
            .collect();
        let conductor = rows
            .iter()
            .flatten()
            .fold(1, |n, z| crate::arith::number::lcm(n, z.conductor()));
        for z in rows.iter_mut().flatten() {
            *z = z.lift(conductor);
        }
        CharacterTable {
            q,
            classes: classes
                .iter()
                .map(|c| ClassInfo {
                    rep: g.name(c[0]).to_string(),
                    size: c.len(),
                })
                .collect(),
            chars: rows,
            names,
            group_order: g.order(),
        }
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    /// Values at the identity class, which is listed first.
    pub fn degrees(&self) -> Vec<u64> {
        self.chars
            .iter()
            .map(|row| {
                row[0]
                    .to_rational()
                    .and_then(|r| r.to_i64())
                    .map(|d| d as u64)
                    .unwrap_or(0)
            })
            .collect()
    }

    /// `⟨χ, ψ⟩ = |G|⁻¹ Σ_C |C| χ(C) conj(ψ(C))`.
    pub fn inner(&self, a: &[CyclotomicNumber], b: &[CyclotomicNumber]) -> CyclotomicNumber {
        let sum = self.classes.iter().zip(a.iter().zip(b)).fold(
            CyclotomicNumber::zero(1),
            |acc, (c, (x, y))| {
                acc.add(
                    &x.mul(&y.conjugate())
                        .scale(&Rational::from_integer(c.size as i64)),
                )
            },
        );
        sum.scale(&Rational::new(1, self.group_order as i64))
    }

    /// `⟨χᵢ, χⱼ⟩ = δᵢⱼ` for every pair.
    pub fn rows_orthonormal(&self) -> bool {
        let one = CyclotomicNumber::from_integer(1, 1);
        let zero = CyclotomicNumber::zero(1);
        (0..self.len()).all(|i| {
            (0..self.len()).all(|j| {
                self.inner(&self.chars[i], &self.chars[j])
                    == if i == j { one.clone() } else { zero.clone() }
            })
        })
    }

    /// `Σ_χ χ(C) conj(χ(C')) = δ_{CC'} |G|/|C|`.
    pub fn columns_orthogonal(&self) -> bool {
        let k = self.classes.len();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let sum = self
                    .chars
                    .iter()
                    .fold(CyclotomicNumber::zero(1), |acc, row| {
                        acc.add(&row[a].mul(&row[b].conjugate()))
                    });
                let expected = if a == b {
                    (self.group_order / self.classes[a].size) as i64
                } else {
                    0
                };
                sum == CyclotomicNumber::from_integer(1, expected)
            })
        })
    }

    /// Square table whose squared degrees sum to `|G|`.
    pub fn is_complete(&self) -> bool {
        self.len() == self.classes.len()
            && self.degrees().iter().map(|d| d * d).sum::<u64>() == self.group_order as u64
    }

    /// Row and column orthogonality on a square table.
    pub fn verify(&self) -> Result<()> {
        if !self.is_complete() || !self.rows_orthonormal() || !self.columns_orthogonal() {
            return Err(Error::Internal(
                "character table fails orthogonality".into(),
            ));
        }
        Ok(())
    }
}

/// `N_{ij}^k = ⟨χᵢχⱼ, χₖ⟩`, with duals from complex conjugation.
pub fn fusion_ring_from_characters(t: &CharacterTable) -> Result<FusionRing> {
    let r = t.len();
    let conj: Vec<Vec<CyclotomicNumber>> = t
        .chars
        .iter()
        .map(|row| row.iter().map(|z| z.conjugate()).collect())
        .collect();
    let dual = (0..r)
        .map(|i| {
            (0..r)
                .find(|j| t.chars[*j] == conj[i])
                .ok_or_else(|| Error::Internal("conjugate character missing".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut n = vec![vec![vec![0u64; r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            let prod: Vec<CyclotomicNumber> = t.chars[i]
                .iter()
                .zip(&t.chars[j])
                .map(|(x, y)| x.mul(y))
                .collect();
            for k in 0..r {
                let m = t
                    .inner(&prod, &t.chars[k])
                    .to_rational()
                    .and_then(|q| q.to_i64());
                match m {
                    Some(v) if v >= 0 => n[i][j][k] = v as u64,
                    _ => {
                        return Err(Error::Internal(format!(
                            "multiplicity N[{i}][{j}][{k}] is not a nonnegative integer"
                        )))
                    }
                }
            }
        }
    }
    let ring = FusionRing::new(t.names.clone(), dual, n)?;
    ring.require_axioms()?;
    Ok(ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroupSpec;

    fn cyclic_table(n: u64) -> CharacterTable {
        let g = FiniteGroup::from_spec(&FiniteGroupSpec::cyclic(n)).unwrap();
        let names = (0..n).map(|j| format!("λ{j}")).collect();
        CharacterTable::from_class_functions(&g, names, None, |j, x| {
            CyclotomicNumber::root(n, j as u64 * x as u64)
        })
    }

    #[test]
    fn cyclic_groups_give_their_group_rings() {
        for n in 1..=7 {
            let t = cyclic_table(n);
            t.verify().unwrap();
            let ring = fusion_ring_from_characters(&t).unwrap();
            let expected = crate::ring::build_group_ring(&FiniteGroupSpec::cyclic(n)).unwrap();
            assert!(ring.is_isomorphic(&expected));
        }
    }

    #[test]
    fn broken_tables_are_detected() {
        let mut t = cyclic_table(3);
        t.chars[2] = t.chars[1].clone();
        assert!(!t.rows_orthonormal());
        assert!(t.verify().is_err());
    }
}
