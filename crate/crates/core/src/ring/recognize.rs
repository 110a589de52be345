//! Recognition of near-group rings.

use super::{FusionRing, NearGroupRule};
use crate::group::{spec_of, FiniteGroup};

/// `(G, k)` when the ring has exactly one non-invertible basis element `X`
/// with `gX = Xg = X` and `X ⊗ X = Σ g + kX`.
pub fn recognize_near_group(ring: &FusionRing) -> Option<NearGroupRule> {
    let invertibles = ring.invertibles();
    let others: Vec<usize> = (0..ring.rank())
        .filter(|i| !invertibles.contains(i))
        .collect();
    let [x] = others[..] else { return None };
    if ring.dual(x) != x {
        return None;
    }
    let pos = |g: usize| invertibles.iter().position(|h| *h == g);
    for &g in &invertibles {
        if ring.product(g, x) != vec![(x, 1)] || ring.product(x, g) != vec![(x, 1)] {
            return None;
        }
    }
    let mut table = Vec::with_capacity(invertibles.len());
    for &g in &invertibles {
        let mut row = Vec::with_capacity(invertibles.len());
        for &h in &invertibles {
            let [(gh, 1)] = ring.product(g, h)[..] else {
                return None;
            };
            row.push(pos(gh)?);
        }
        table.push(row);
    }
    let k = ring.n(x, x, x);
    let expected: Vec<(usize, u64)> = (0..ring.rank())
        .filter_map(|i| {
            if i == x {
                (k > 0).then_some((x, k))
            } else {
                Some((i, 1))
            }
        })
        .collect();
    if ring.product(x, x) != expected {
        return None;
    }
    let names = invertibles
        .iter()
        .map(|g| ring.name(*g).to_string())
        .collect();
    let group = FiniteGroup::from_table(names, table).ok()?;
    Some(NearGroupRule::new(spec_of(&group), k))
}
