//! Finite groups given by multiplication tables.
//!
//! Groups are specified as cyclic groups, products of cyclic groups or
//! permutation groups and are expanded into a dense table with the
//! identity at index 0 and a deterministic element order.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::arith::number::factorize;
use crate::error::{Error, Result};

/// Default cap on the number of elements a specification may expand to.
pub const DEFAULT_ELEMENT_BOUND: usize = 10_000;

/// How a finite group is presented.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FiniteGroupSpec {
    /// `Z/n`.
    Cyclic { n: u64 },
    /// `Z/n₁ ⊕ … ⊕ Z/n_r`.
    Product { orders: Vec<u64> },
    /// Subgroup of the symmetric group on `{0, …, degree-1}`.
    Permutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

impl FiniteGroupSpec {
    pub fn trivial() -> Self {
        FiniteGroupSpec::Cyclic { n: 1 }
    }

    pub fn cyclic(n: u64) -> Self {
        FiniteGroupSpec::Cyclic { n }
    }

    pub fn product(orders: &[u64]) -> Self {
        FiniteGroupSpec::Product {
            orders: orders.to_vec(),
        }
    }

    pub fn permutation(degree: usize, generators: Vec<Vec<usize>>) -> Self {
        FiniteGroupSpec::Permutation { degree, generators }
    }

    /// The symmetric group on three letters as `⟨(012), (01)⟩`.
    pub fn s3() -> Self {
        Self::permutation(3, vec![vec![1, 2, 0], vec![1, 0, 2]])
    }

    /// Short human-readable name such as `Z/2⊕Z/2` or `1`.
    pub fn label(&self) -> String {
        match self {
            FiniteGroupSpec::Cyclic { n: 1 } => "1".into(),
            FiniteGroupSpec::Cyclic { n } => format!("Z/{n}"),
            FiniteGroupSpec::Product { orders } if orders.iter().all(|o| *o == 1) => "1".into(),
            FiniteGroupSpec::Product { orders } => orders
                .iter()
                .filter(|o| **o > 1)
                .map(|o| format!("Z/{o}"))
                .collect::<Vec<_>>()
                .join("⊕"),
            FiniteGroupSpec::Permutation { degree, generators } => {
                let gens: Vec<String> = generators.iter().map(|g| cycle_notation(g)).collect();
                format!("⟨{}⟩≤S{degree}", gens.join(", "))
            }
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            FiniteGroupSpec::Cyclic { n } if *n == 0 => {
                Err(Error::InvalidInput("cyclic order must be ≥ 1".into()))
            }
            FiniteGroupSpec::Product { orders } if orders.contains(&0) => Err(Error::InvalidInput(
                "cyclic factor orders must be ≥ 1".into(),
            )),
            FiniteGroupSpec::Permutation { degree, generators } => {
                for g in generators {
                    let mut seen = vec![false; *degree];
                    if g.len() != *degree
                        || g.iter()
                            .any(|x| *x >= *degree || std::mem::replace(&mut seen[*x], true))
                    {
                        return Err(Error::InvalidInput(format!(
                            "{g:?} is not a permutation of 0..{degree}"
                        )));
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

/// Cycle notation with points `0..n`; the identity is `()`.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// A finite group as a dense multiplication table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_spec(spec: &FiniteGroupSpec) -> Result<Self> {
        Self::from_spec_bounded(spec, DEFAULT_ELEMENT_BOUND)
    }

    pub fn from_spec_bounded(spec: &FiniteGroupSpec, bound: usize) -> Result<Self> {
        spec.validate()?;
        match spec {
            FiniteGroupSpec::Cyclic { n } => {
                let g = Self::abelian(&[*n], bound)?;
                let names = (0..*n)
                    .map(|i| match i {
                        0 => "e".to_string(),
                        1 => "g".to_string(),
                        _ => format!("g^{i}"),
                    })
                    .collect();
                Ok(FiniteGroup { names, ..g })
            }
            FiniteGroupSpec::Product { orders } => Self::abelian(orders, bound),
            FiniteGroupSpec::Permutation { degree, generators } => {
                Self::permutations(*degree, generators, bound)
            }
        }
    }

    fn abelian(orders: &[u64], bound: usize) -> Result<Self> {
        let size = orders
            .iter()
            .try_fold(1u64, |acc, o| acc.checked_mul(*o))
            .unwrap_or(u64::MAX);
        if size > bound as u64 {
            return Err(Error::GroupTooLarge(bound));
        }
        let size = size as usize;
        let tuples: Vec<Vec<u64>> = (0..size)
            .map(|mut idx| {
                let mut t = vec![0; orders.len()];
                for (slot, o) in t.iter_mut().zip(orders).rev() {
                    *slot = idx as u64 % o;
                    idx /= *o as usize;
                }
                t
            })
            .collect();
        let index = |t: &[u64]| {
            t.iter()
                .zip(orders)
                .fold(0usize, |acc, (x, o)| acc * *o as usize + *x as usize)
        };
        let table = tuples
            .iter()
            .map(|a| {
                tuples
                    .iter()
                    .map(|b| {
                        let s: Vec<u64> = a
                            .iter()
                            .zip(b)
                            .zip(orders)
                            .map(|((x, y), o)| (x + y) % o)
                            .collect();
                        index(&s)
                    })
                    .collect()
            })
            .collect();
        let generators = (0..orders.len())
            .filter(|i| orders[*i] > 1)
            .map(|i| {
                let mut t = vec![0; orders.len()];
                t[i] = 1;
                index(&t)
            })
            .collect();
        let names = tuples
            .iter()
            .map(|t| {
                let body: Vec<String> = t.iter().map(ToString::to_string).collect();
                format!("({})", body.join(","))
            })
            .collect();
        Ok(Self::assemble(names, table, generators))
    }

    fn permutations(degree: usize, generators: &[Vec<usize>], bound: usize) -> Result<Self> {
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        // breadth-first over words: shortest words first, ties broken by
        // generator order
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let p = compose(&elements[i], g);
                if !index.contains_key(&p) {
                    if elements.len() == bound {
                        return Err(Error::GroupTooLarge(bound));
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let table = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        let gens = generators
            .iter()
            .map(|g| index[g])
            .filter(|i| *i != 0)
            .collect();
        let names = elements.iter().map(|p| cycle_notation(p)).collect();
        Ok(Self::assemble(names, table, gens))
    }

    fn assemble(names: Vec<String>, table: Vec<Vec<usize>>, mut generators: Vec<usize>) -> Self {
        let inverse = (0..table.len())
            .map(|a| {
                table[a]
                    .iter()
                    .position(|x| *x == 0)
                    .expect("group element without inverse")
            })
            .collect();
        generators.dedup();
        FiniteGroup {
            names,
            table,
            inverse,
            generators,
        }
    }

    /// Validates a multiplication table (identity at 0, associative,
    /// inverses) and picks a generating set greedily.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0
            || names.len() != n
            || table
                .iter()
                .any(|row| row.len() != n || row.iter().any(|x| *x >= n))
        {
            return Err(Error::InvalidInput("malformed group table".into()));
        }
        if (0..n).any(|a| table[0][a] != a || table[a][0] != a) {
            return Err(Error::InvalidInput("element 0 is not the identity".into()));
        }
        for a in 0..n {
            if !table[a].contains(&0) {
                return Err(Error::InvalidInput(format!("element {a} has no inverse")));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidInput(format!(
                            "table not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut g = Self::assemble(names, table, Vec::new());
        let mut span = vec![0usize];
        for x in 1..n {
            if !span.contains(&x) {
                g.generators.push(x);
                span = g.subgroup(&g.generators);
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order())
            .map(|a| self.element_order(a))
            .fold(1, crate::arith::number::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|a| (0..self.order()).all(|b| self.mul(*a, b) == self.mul(b, *a)))
            .collect()
    }

    /// Conjugacy classes ordered by their least element, each sorted.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut classes = Vec::new();
        for x in 0..self.order() {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order())
                .map(|g| self.mul(self.mul(g, x), self.inv(g)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for y in &class {
                seen[*y] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Elements of the subgroup generated by `gens`, sorted.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut members = vec![false; self.order()];
        members[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = self.mul(x, *g);
                if !members[y] {
                    members[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|x| members[*x]).collect()
    }

    /// The homomorphism sending `generators()[i]` to `images[i]`, if one
    /// exists.
    pub fn extend_homomorphism(
        &self,
        target: &FiniteGroup,
        images: &[usize],
    ) -> Option<Vec<usize>> {
        assert_eq!(images.len(), self.generators.len());
        let mut map = vec![usize::MAX; self.order()];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (g, img) in self.generators.iter().zip(images) {
                let y = self.mul(x, *g);
                let fy = target.mul(map[x], *img);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        let ok = (0..self.order())
            .all(|a| (0..self.order()).all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b])));
        ok.then_some(map)
    }

    /// All homomorphisms into `target`, in lexicographic order of generator
    /// images.
    pub fn homomorphisms(&self, target: &FiniteGroup) -> Vec<Vec<usize>> {
        let choices: Vec<Vec<usize>> = self
            .generators
            .iter()
            .map(|g| {
                let o = self.element_order(*g);
                (0..target.order())
                    .filter(|t| o.is_multiple_of(target.element_order(*t)))
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        for images in cartesian(&choices) {
            if let Some(map) = self.extend_homomorphism(target, &images) {
                out.push(map);
            }
        }
        out
    }

    /// The automorphism group as a list of permutations of the elements,
    /// identity first.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let choices: Vec<Vec<usize>> = self
            .generators
            .iter()
            .map(|g| {
                let o = self.element_order(*g);
                (0..self.order())
                    .filter(|t| self.element_order(*t) == o)
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        for images in cartesian(&choices) {
            if let Some(map) = self.extend_homomorphism(self, &images) {
                let mut hit = vec![false; self.order()];
                if map.iter().all(|x| !std::mem::replace(&mut hit[*x], true)) {
                    out.push(map);
                }
            }
        }
        let id: Vec<usize> = (0..self.order()).collect();
        let pos = out
            .iter()
            .position(|m| *m == id)
            .expect("identity automorphism");
        let id_map = out.remove(pos);
        out.insert(0, id_map);
        out
    }

    /// An isomorphism onto `other`, found by search over generator images.
    pub fn isomorphism_to(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order() != other.order() {
            return None;
        }
        let choices: Vec<Vec<usize>> = self
            .generators
            .iter()
            .map(|g| {
                let o = self.element_order(*g);
                (0..other.order())
                    .filter(|t| other.element_order(*t) == o)
                    .collect()
            })
            .collect();
        cartesian(&choices).into_iter().find_map(|images| {
            let map = self.extend_homomorphism(other, &images)?;
            let mut hit = vec![false; other.order()];
            map.iter()
                .all(|x| !std::mem::replace(&mut hit[*x], true))
                .then_some(map)
        })
    }

    pub fn is_isomorphic(&self, other: &FiniteGroup) -> bool {
        self.isomorphism_to(other).is_some()
    }

    /// Invariant factors `d₁ | d₂ | …` of an abelian group; empty for the
    /// trivial group.
    pub fn invariant_factors(&self) -> Option<Vec<u64>> {
        if !self.is_abelian() {
            return None;
        }
        let n = self.order() as u64;
        let orders: Vec<u64> = (0..self.order()).map(|a| self.element_order(a)).collect();
        // per prime: partition of the p-part, from counts of p^j-torsion
        let mut prime_parts: Vec<Vec<u64>> = Vec::new();
        for (p, e) in factorize(n) {
            let mut torsion = vec![1u64];
            for j in 1..=e {
                let pj = p.pow(j);
                torsion.push(orders.iter().filter(|o| pj % **o == 0).count() as u64);
            }
            // number of cyclic factors of order ≥ p^j is log_p(t_j / t_{j-1})
            let at_least: Vec<u32> = (1..=e as usize)
                .map(|j| log_p(torsion[j] / torsion[j - 1], p))
                .collect();
            let mut sizes = Vec::new();
            for j in 1..=e as usize {
                let next = at_least.get(j).copied().unwrap_or(0);
                for _ in 0..(at_least[j - 1] - next) {
                    sizes.push(p.pow(j as u32));
                }
            }
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            prime_parts.push(sizes);
        }
        let count = prime_parts.iter().map(Vec::len).max().unwrap_or(0);
        let mut factors: Vec<u64> = (0..count)
            .map(|i| {
                prime_parts
                    .iter()
                    .map(|sizes| sizes.get(i).copied().unwrap_or(1))
                    .product()
            })
            .collect();
        factors.reverse();
        Some(factors)
    }
}

fn log_p(mut x: u64, p: u64) -> u32 {
    let mut k = 0;
    while x > 1 {
        x /= p;
        k += 1;
    }
    k
}

/// Apply `a` first, then `b`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|x| b[*x]).collect()
}

/// All tuples choosing one entry from each list, in lexicographic order.
pub fn cartesian(choices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    choices.iter().fold(vec![Vec::new()], |acc, options| {
        acc.into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut next = prefix.clone();
                    next.push(*o);
                    next
                })
            })
            .collect()
    })
}

/// Canonical specification of an abelian group: `Z/n` when cyclic,
/// otherwise the product of its invariant factors.
pub fn canonical_abelian_spec(factors: &[u64]) -> FiniteGroupSpec {
    match factors {
        [] => FiniteGroupSpec::trivial(),
        [n] => FiniteGroupSpec::cyclic(*n),
        _ => FiniteGroupSpec::product(factors),
    }
}

/// Invariant-factor lists `d₁ | d₂ | …`, each `≥ 2`, of every abelian group
/// of the given order, in lexicographic order.
pub fn abelian_invariant_factors(order: u64) -> Vec<Vec<u64>> {
    fn extend(rest: u64, last: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 1 {
            out.push(prefix.clone());
            return;
        }
        for d in crate::arith::number::divisors(rest) {
            if d >= 2 && d % last == 0 && (rest == d || (rest / d).is_multiple_of(d)) {
                prefix.push(d);
                extend(rest / d, d, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if order >= 1 {
        extend(order, 1, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// A specification for an arbitrary table: canonical abelian form, or the
/// right-regular permutation representation on the generators.
pub fn spec_of(group: &FiniteGroup) -> FiniteGroupSpec {
    if let Some(f) = group.invariant_factors() {
        return canonical_abelian_spec(&f);
    }
    let generators = group
        .generators()
        .iter()
        .map(|g| (0..group.order()).map(|x| group.mul(x, *g)).collect())
        .collect();
    FiniteGroupSpec::permutation(group.order(), generators)
}
