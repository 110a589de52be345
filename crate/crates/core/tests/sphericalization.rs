use neargroup::group::{abelian_invariant_factors, canonical_abelian_spec, FiniteGroupSpec};
use neargroup::ring::NearGroupRule;
use neargroup::sphere::{build_sphericalized_ring, spherical_pipeline, Elimination};

#[test]
fn every_split_over_small_abelian_groups_is_a_fusion_ring() {
    for n in 1..=16 {
        for factors in abelian_invariant_factors(n) {
            for k in 0..=6 {
                let rule = NearGroupRule::new(canonical_abelian_spec(&factors), k);
                for s in 0..=k {
                    let sph = build_sphericalized_ring(&rule, s, k - s).unwrap();
                    let report = sph.ring.check_axioms();
                    assert!(
                        report.is_valid(),
                        "{rule} s={s}: {:?}",
                        report.violations.first()
                    );
                    assert!(sph.forgetful_is_homomorphism().unwrap(), "{rule} s={s}");
                }
            }
        }
    }
}

#[test]
fn pipeline_keeps_exactly_r_equal_k() {
    for n in 1..=30 {
        for k in 0..=8 {
            let report =
                spherical_pipeline(&NearGroupRule::new(FiniteGroupSpec::cyclic(n), k)).unwrap();
            assert!(report.passed(), "n={n} k={k}: {:?}", report.survivors);
            assert_eq!(report.candidates.len() as u64, k / 2 + 1);
            let kept = &report.surviving_dims;
            assert_eq!(
                (kept[0].d.signum(), kept[1].d.signum()),
                (Some(1), Some(-1))
            );
            assert!(kept.iter().all(|d| d.verify()));
        }
    }
}

#[test]
fn square_radicand_eliminations_in_range() {
    let mut hits = Vec::new();
    for n in 1..=30 {
        for k in 0..=8 {
            let report =
                spherical_pipeline(&NearGroupRule::new(FiniteGroupSpec::cyclic(n), k)).unwrap();
            for c in &report.candidates {
                if c.eliminated_by == Some(Elimination::SquareRadicand) {
                    hits.push((n, k, c.r));
                }
            }
        }
    }
    // r = 4 at (n, k) = (5, 5) admits the ratio but has the wrong parity for any split
    assert_eq!(hits, vec![(3, 6, 2)]);
}
