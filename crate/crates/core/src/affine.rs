//! Finite fields, the affine groups `F_q ⋊ F_q^*` and their representation
//! rings, which realize the symmetric near-group family.

use serde::Serialize;

use crate::arith::number::prime_power;
use crate::arith::{CyclotomicNumber, Rational};
use crate::character::{fusion_ring_from_characters, CharacterTable};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, FiniteGroupSpec};
use crate::ring::{fpdim_ring, recognize_near_group, FpDim, FusionRing, NearGroupRule};

/// `F_{p^l} = F_p[x]/(f)`. Elements are integers whose base-`p` digits are
/// the coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteField {
    pub p: u64,
    pub degree: u32,
    /// Coefficients of the monic modulus, constant term first.
    pub modulus: Vec<u64>,
    /// Least primitive element.
    pub generator: usize,
    #[serde(skip)]
    mul: Vec<Vec<usize>>,
    #[serde(skip)]
    log: Vec<usize>,
    #[serde(skip)]
    exp: Vec<usize>,
}

fn digits(x: usize, p: u64, l: u32) -> Vec<u64> {
    (0..l)
        .scan(x as u64, |rest, _| {
            let d = *rest % p;
            *rest /= p;
            Some(d)
        })
        .collect()
}

fn undigits(d: &[u64], p: u64) -> usize {
    d.iter().rev().fold(0, |acc, c| acc * p + c) as usize
}

/// Remainder of `a` modulo the monic `m`, over `F_p`.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let shift = a.len() - dm;
            for (i, c) in m[..dm].iter().enumerate() {
                a[shift + i] = (a[shift + i] + (p - lead) * c) % p;
            }
        }
    }
    a
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// No monic factor of degree `1..=deg/2`.
fn is_irreducible(m: &[u64], p: u64) -> bool {
    let deg = m.len() - 1;
    (1..=deg / 2).all(|d| {
        (0..p.pow(d as u32) as usize).all(|low| {
            let mut f = digits(low, p, d as u32);
            f.push(1);
            poly_rem(m, &f, p).iter().any(|c| *c != 0)
        })
    })
}

impl FiniteField {
    /// The field of order `q`, with the least irreducible modulus in the
    /// order of the encoding of its lower coefficients.
    pub fn new(q: u64) -> Result<Self> {
        let (p, l) = prime_power(q)
            .ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
        let modulus = (0..q as usize)
            .map(|low| {
                let mut m = digits(low, p, l);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial exists in every degree");
        let qs = q as usize;
        let mul: Vec<Vec<usize>> = (0..qs)
            .map(|a| {
                (0..qs)
                    .map(|b| {
                        let prod = poly_mul(&digits(a, p, l), &digits(b, p, l), p);
                        let mut r = poly_rem(&prod, &modulus, p);
                        r.resize(l as usize, 0);
                        undigits(&r, p)
                    })
                    .collect()
            })
            .collect();
        let order_of = |a: usize| {
            let mut x = a;
            let mut k = 1;
            while x != 1 {
                x = mul[x][a];
                k += 1;
            }
            k
        };
        let generator = (1..qs)
            .find(|a| order_of(*a) == qs - 1)
            .expect("multiplicative group is cyclic");
        let mut exp = vec![1usize; qs - 1];
        for i in 1..qs - 1 {
            exp[i] = mul[exp[i - 1]][generator];
        }
        let mut log = vec![usize::MAX; qs];
        for (i, x) in exp.iter().enumerate() {
            log[*x] = i;
        }
        Ok(FiniteField {
            p,
            degree: l,
            modulus,
            generator,
            mul,
            log,
            exp,
        })
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (
            digits(a, self.p, self.degree),
            digits(b, self.p, self.degree),
        );
        undigits(
            &x.iter()
                .zip(&y)
                .map(|(u, v)| (u + v) % self.p)
                .collect::<Vec<_>>(),
            self.p,
        )
    }

    pub fn neg(&self, a: usize) -> usize {
        let x = digits(a, self.p, self.degree);
        undigits(
            &x.iter().map(|u| (self.p - u) % self.p).collect::<Vec<_>>(),
            self.p,
        )
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    /// Discrete logarithm to the base of [`FiniteField::generator`].
    pub fn log(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.log[a])
    }

    /// `generator^i`.
    pub fn power(&self, i: usize) -> usize {
        self.exp[i % self.exp.len()]
    }
}

/// `x ↦ ax + b` over `F_q`, with `a ≠ 0`.
#[derive(Clone, Debug)]
pub struct AffineGroup {
    pub field: FiniteField,
    /// `elements[i] = (a, b)`.
    pub elements: Vec<(usize, usize)>,
    pub group: FiniteGroup,
}

impl AffineGroup {
    pub fn q(&self) -> usize {
        self.field.order()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Fixed points of `x ↦ ax + b`.
    pub fn fixed_points(&self, g: usize) -> usize {
        let (a, b) = self.elements[g];
        (0..self.q())
            .filter(|x| self.field.add(self.field.mul(a, *x), b) == *x)
            .count()
    }
}

/// Builds `F_q ⋊ F_q^*`, composing maps left to right; the identity is
/// element 0.
pub fn build_affine_group(q: u64) -> Result<AffineGroup> {
    if q == 2 {
        return Err(Error::InvalidInput(
            "the affine group over the field of order 2 is excluded".into(),
        ));
    }
    let field = FiniteField::new(q)?;
    let qs = q as usize;
    let elements: Vec<(usize, usize)> = (0..qs - 1)
        .flat_map(|i| (0..qs).map(move |b| (i, b)))
        .collect();
    let elements: Vec<(usize, usize)> = elements
        .into_iter()
        .map(|(i, b)| (field.power(i), b))
        .collect();
    let index = |(a, b): (usize, usize)| field.log(a).unwrap() * qs + b;
    // apply (a, b) then (c, d): x ↦ c(ax + b) + d
    let table = elements
        .iter()
        .map(|(a, b)| {
            elements
                .iter()
                .map(|(c, d)| index((field.mul(*c, *a), field.add(field.mul(*c, *b), *d))))
                .collect()
        })
        .collect();
    let names = elements
        .iter()
        .map(|(a, b)| match field.log(*a).unwrap() {
            0 => format!("x+{b}"),
            1 => format!("gx+{b}"),
            i => format!("g^{i}x+{b}"),
        })
        .collect();
    let group = FiniteGroup::from_table(names, table)?;
    Ok(AffineGroup {
        field,
        elements,
        group,
    })
}

/// The `q - 1` characters lifted from `F_q^*` followed by `fix - 1`.
pub fn character_table_affine(g: &AffineGroup) -> Result<CharacterTable> {
    let q = g.q() as u64;
    let mut names: Vec<String> = (0..q - 1)
        .map(|j| if j == 0 { "1".into() } else { format!("λ{j}") })
        .collect();
    names.push("ρ".into());
    let table = CharacterTable::from_class_functions(&g.group, names, Some(q), |j, x| {
        if j as u64 == q - 1 {
            CyclotomicNumber::from_integer(q - 1, g.fixed_points(x) as i64 - 1)
        } else {
            let i = g.field.log(g.elements[x].0).unwrap() as u64;
            CyclotomicNumber::root(q - 1, j as u64 * i)
        }
    });
    table.verify()?;
    Ok(table)
}

/// Checks for one field order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricEntry {
    pub q: u64,
    pub group_order: usize,
    pub classes: usize,
    pub degrees: Vec<u64>,
    pub large_irreducibles: usize,
    pub rule: Option<NearGroupRule>,
    pub rule_matches: bool,
    /// `k = |G| - 1` for the pointed part `G = Z/(q-1)`.
    pub k_is_order_minus_one: bool,
    pub center_trivial: bool,
    pub rows_orthonormal: bool,
    pub columns_orthogonal: bool,
    pub axioms_valid: bool,
    pub fpdim: FpDim,
    pub fpdim_is_group_order: bool,
}

impl SymmetricEntry {
    pub fn passed(&self) -> bool {
        self.large_irreducibles == 1
            && self.rule_matches
            && self.k_is_order_minus_one
            && self.center_trivial
            && self.rows_orthonormal
            && self.columns_orthogonal
            && self.axioms_valid
            && self.fpdim_is_group_order
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exclusion {
    pub q: u64,
    pub reason: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricFamilyReport {
    pub q_max: u64,
    pub entries: Vec<SymmetricEntry>,
    pub excluded: Vec<Exclusion>,
    /// Imported: a trivial center rules out super-Tannakian braidings.
    pub braiding_note: &'static str,
}

impl SymmetricFamilyReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(SymmetricEntry::passed)
    }
}

/// The fusion ring of `Rep(F_q ⋊ F_q^*)`.
pub fn affine_fusion_ring(q: u64) -> Result<(AffineGroup, CharacterTable, FusionRing)> {
    let g = build_affine_group(q)?;
    let t = character_table_affine(&g)?;
    let ring = fusion_ring_from_characters(&t)?;
    Ok((g, t, ring))
}

pub fn symmetric_entry(q: u64) -> Result<SymmetricEntry> {
    let (g, t, ring) = affine_fusion_ring(q)?;
    let degrees = t.degrees();
    let rule = recognize_near_group(&ring);
    let expected = NearGroupRule::new(FiniteGroupSpec::cyclic(q - 1), q - 2);
    let rule_matches = match &rule {
        Some(r) => r.equivalent(&expected)?,
        None => false,
    };
    let fpdim = fpdim_ring(&ring)?;
    let order = g.order() as i64;
    Ok(SymmetricEntry {
        q,
        group_order: g.order(),
        classes: t.classes.len(),
        large_irreducibles: degrees.iter().filter(|d| **d > 1).count(),
        degrees,
        k_is_order_minus_one: rule.as_ref().is_some_and(|r| r.k + 1 == q - 1),
        rule,
        rule_matches,
        center_trivial: g.group.center() == [0],
        rows_orthonormal: t.rows_orthonormal(),
        columns_orthogonal: t.columns_orthogonal(),
        axioms_valid: ring.check_axioms().is_valid(),
        fpdim_is_group_order: fpdim
            .as_exact()
            .is_some_and(|d| d.as_rational() == Some(&Rational::from_integer(order))),
        fpdim,
    })
}

/// Every prime power `3 ≤ q ≤ q_max`.
pub fn verify_symmetric_family(q_max: u64) -> Result<SymmetricFamilyReport> {
    if q_max < 3 {
        return Err(Error::InvalidInput("q_max must be at least 3".into()));
    }
    let entries = (3..=q_max)
        .filter(|q| prime_power(*q).is_some())
        .map(symmetric_entry)
        .collect::<Result<Vec<_>>>()?;
    Ok(SymmetricFamilyReport {
        q_max,
        entries,
        excluded: vec![Exclusion {
            q: 2,
            reason: "the field must have order different from 2",
        }],
        braiding_note: "trivial center: no braiding makes Rep(H) super-Tannakian (imported)",
    })
}
