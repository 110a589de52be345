use neargroup::arith::integrality::{lemma_alg_grid, lemma_r_scan, theorem_sph_ratio_scan};

#[test]
fn pair_check_full_grid() {
    let report = lemma_alg_grid(20, 20, 50);
    assert_eq!(report.checked, 41 * 43 * 20 * 43);
    assert!(
        report.unequal.is_empty(),
        "{:?}",
        &report.unequal[..report.unequal.len().min(5)]
    );
    assert!(
        report.route_disagreements.is_empty(),
        "{:?}",
        &report.route_disagreements[..report.route_disagreements.len().min(5)]
    );
}

#[test]
fn ratio_scan_off_diagonal_points_are_units_with_square_radicand() {
    let report = theorem_sph_ratio_scan(10, 10, 50);
    assert!(report.diagonal_failures.is_empty());
    assert!(report.product_identity_holds());
    assert_eq!(
        report.off_diagonal_integral,
        vec![(4, 5, 5), (2, 6, 3), (8, 10, 20)]
    );
    for &(r, _, n) in &report.off_diagonal_integral {
        assert!(neargroup::arith::number::is_square(r * r + 4 * n));
    }
}

#[test]
fn square_scan_deviations_match_ratio_scan() {
    let report = lemma_r_scan(10, 50);
    let points: Vec<(i64, i64, i64)> = report.deviations.iter().map(|d| (d.r, d.k, d.n)).collect();
    assert_eq!(points, vec![(2, 6, 3), (4, 5, 5), (8, 10, 20)]);
    assert!(report.deviations.iter().all(|d| d.square == "r"));
}
