//! Acceptance criteria AC1-AC10. Every criterion is evaluated, one line is
//! printed per criterion, and the test fails if any criterion fails.
//!
//! All comparisons are exact; there are no numerical tolerances. Runtime
//! limits are measured with the test profile's optimisation level.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use neargroup::affine::symmetric_entry;
use neargroup::arith::integrality::{lemma_alg_grid, theorem_sph_ratio_scan};
use neargroup::arith::number::exact_sqrt;
use neargroup::arith::{cyc_norm_squared, CyclotomicNumber, Rational};
use neargroup::equivariant::{equivariant_report, ActionData};
use neargroup::group::{abelian_invariant_factors, canonical_abelian_spec, FiniteGroupSpec};
use neargroup::metric::{
    enumerate_quadratic_forms, gauss_sum, transitive_metric_group_scan, AbelianGroup, MetricGroup,
};
use neargroup::ring::{build_near_group, fpdim_ring, integer_fpdim_scan, NearGroupRule};
use neargroup::sphere::build_sphericalized_ring;
use serde_json::Value;

/// Every comparison in this suite is an identity of exact numbers.
const TOLERANCE: &str = "exact";
const AC1_LIMIT: Duration = Duration::from_secs(10);
const AC2_LIMIT: Duration = Duration::from_secs(30);
const AC7_LIMIT: Duration = Duration::from_secs(20);

struct Outcome {
    id: &'static str,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

/// Near-group rules over every abelian group of order at most 16 and the
/// nonabelian group of order 6.
fn tested_rules() -> Vec<NearGroupRule> {
    let mut groups: Vec<FiniteGroupSpec> = (1..=16)
        .flat_map(abelian_invariant_factors)
        .map(|f| canonical_abelian_spec(&f))
        .collect();
    groups.push(FiniteGroupSpec::s3());
    groups
        .iter()
        .flat_map(|g| (0..=6).map(|k| NearGroupRule::new(g.clone(), k)))
        .collect()
}

fn ac1() -> Outcome {
    let rules = tested_rules();
    let (failures, elapsed) = timed(|| {
        rules
            .iter()
            .filter(|r| {
                build_near_group(r)
                    .map(|ring| !ring.check_axioms().is_valid())
                    .unwrap_or(true)
            })
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    });
    Outcome {
        id: "AC1",
        title: "associativity suite",
        pass: failures.is_empty() && elapsed < AC1_LIMIT,
        detail: format!(
            "{} rules, failures {failures:?}, runtime {} (limit {})",
            rules.len(),
            secs(elapsed),
            secs(AC1_LIMIT)
        ),
    }
}

fn ac2() -> Outcome {
    let (report, elapsed) = timed(|| theorem_sph_ratio_scan(10, 10, 50));
    let exact = report.integral_exactly_on_diagonal();
    Outcome {
        id: "AC2",
        title: "D/Δ integral exactly when r = k",
        pass: exact && report.product_identity_holds() && elapsed < AC2_LIMIT,
        detail: format!(
            "{} points, off-diagonal integral {:?}, diagonal failures {:?}, runtime {} (limit {})",
            report.entries.len(),
            report.off_diagonal_integral,
            report.diagonal_failures,
            secs(elapsed),
            secs(AC2_LIMIT)
        ),
    }
}

fn ac3() -> Outcome {
    let report = lemma_alg_grid(20, 20, 50);
    Outcome {
        id: "AC3",
        title: "pair-integrality oracle",
        pass: report.passed() && report.quadratic_cases > 0 && report.biquadratic_cases > 0,
        detail: format!(
            "{} quadruples ({} same-field, {} biquadratic), unequal {}, route disagreements {}",
            report.checked,
            report.quadratic_cases,
            report.biquadratic_cases,
            report.unequal.len(),
            report.route_disagreements.len()
        ),
    }
}

/// `FPdim(C) = n + d²` with `d = (k + √(k²+4n))/2` is an integer iff `k = 0`
/// or `k² + 4n` is a square `s²` with `k² + 2n + ks` even.
fn integral_pairs_oracle(n_max: u64) -> Vec<(u64, u64, i64)> {
    let mut out = Vec::new();
    for n in 1..=n_max as i64 {
        for k in 0..n {
            let m = k * k + 4 * n;
            let total = match exact_sqrt(m) {
                Some(s) if (k * k + 2 * n + k * s) % 2 == 0 => {
                    Some(n + (k * k + 2 * n + k * s) / 2)
                }
                _ if k == 0 => Some(2 * n),
                _ => None,
            };
            if let Some(t) = total {
                out.push((n as u64, k as u64, t));
            }
        }
    }
    out
}

fn ac4() -> Outcome {
    let report = integer_fpdim_scan(200);
    let as_int =
        |x: &neargroup::arith::QuadraticFieldElement| x.as_rational().and_then(Rational::to_i64);
    let found: Vec<(u64, u64, i64)> = report
        .integral
        .iter()
        .map(|p| (p.n, p.k, as_int(&p.fpdim_c).unwrap_or(-1)))
        .collect();
    let oracle_agrees = found == integral_pairs_oracle(200);
    let excluded: BTreeSet<(u64, u64)> = report.bound_excluded.iter().copied().collect();
    let only_extremes = report.output.iter().all(|p| p.k == 0 || p.k == p.n - 1);
    let dims = report
        .output
        .iter()
        .filter(|p| p.k == p.n - 1 && p.k != 0)
        .all(|p| as_int(&p.fpdim_c) == Some((p.n * (p.n + 1)) as i64));
    let survivors_consistent = report
        .integral
        .iter()
        .all(|p| excluded.contains(&(p.n, p.k)) || report.output.contains(p));
    Outcome {
        id: "AC4",
        title: "integer FPdim forces k ∈ {0, n-1}",
        pass: report.passed() && oracle_agrees && only_extremes && dims && survivors_consistent,
        detail: format!(
            "{} pairs, {} integral (oracle agrees: {oracle_agrees}), {} excluded by |G| ≤ k+1, {} kept, FPdim = n(n+1): {dims}",
            report.pairs_scanned,
            report.integral.len(),
            report.bound_excluded.len(),
            report.output.len()
        ),
    }
}

fn ac5() -> Outcome {
    let mut forms = 0;
    let mut nondegenerate = 0;
    let mut mismatches = Vec::new();
    for order in 1..=16 {
        for a in AbelianGroup::all_of_order(order) {
            let n = a.order() as usize;
            for f in enumerate_quadratic_forms(&a).unwrap() {
                forms += 1;
                // the radical of the bilinear form, computed directly
                let radical_trivial = (1..n).all(|x| (0..n).any(|y| f.bilinear(x, y) != 0));
                nondegenerate += usize::from(radical_trivial);
                let norm = cyc_norm_squared(&gauss_sum(&f)).to_rational();
                if (norm == Some(Rational::from_integer(n as i64))) != radical_trivial {
                    mismatches.push((a.factors().to_vec(), f.values()));
                }
            }
        }
    }
    let omega3 = CyclotomicNumber::root(3, 1);
    let one = CyclotomicNumber::from_integer(3, 1);
    let anchor_z3 =
        cyc_norm_squared(&one.add(&omega3.scale(&Rational::from_integer(2)))).to_rational();
    let minus_one = CyclotomicNumber::from_integer(1, -1);
    let anchor_klein = cyc_norm_squared(
        &CyclotomicNumber::from_integer(1, 1).add(&minus_one.scale(&Rational::from_integer(3))),
    )
    .to_rational();
    let anchors = anchor_z3 == Some(Rational::from_integer(3))
        && anchor_klein == Some(Rational::from_integer(4));
    Outcome {
        id: "AC5",
        title: "|Gauss sum|² = |A| iff nondegenerate",
        pass: mismatches.is_empty() && anchors,
        detail: format!(
            "{forms} forms, {nondegenerate} nondegenerate, mismatches {:?}, |1+2ω|² = {}, |1+3(-1)|² = {}",
            &mismatches[..mismatches.len().min(3)],
            anchor_z3.map(|r| r.to_string()).unwrap_or_default(),
            anchor_klein.map(|r| r.to_string()).unwrap_or_default()
        ),
    }
}

fn ac6() -> Outcome {
    let report = transitive_metric_group_scan(16).unwrap();
    let mut expected = vec![
        MetricGroup::klein_minus_one(),
        MetricGroup::z3(1).unwrap(),
        MetricGroup::z3(2).unwrap(),
    ];
    expected.sort();
    let mut found = report.found.clone();
    found.sort();
    Outcome {
        id: "AC6",
        title: "transitive metric groups up to order 16",
        pass: found == expected && report.filters_consistent(),
        detail: format!(
            "found [{}], filters agree with brute force: {}",
            found
                .iter()
                .map(MetricGroup::label)
                .collect::<Vec<_>>()
                .join(", "),
            report.filters_consistent()
        ),
    }
}

fn ac7() -> Outcome {
    let qs = [3u64, 4, 5, 7, 8, 9];
    let (entries, elapsed) = timed(|| {
        qs.iter()
            .map(|q| symmetric_entry(*q).unwrap())
            .collect::<Vec<_>>()
    });
    let failing: Vec<u64> = entries
        .iter()
        .filter(|e| {
            let expected = NearGroupRule::new(FiniteGroupSpec::cyclic(e.q - 1), e.q - 2);
            let rule_ok = e
                .rule
                .as_ref()
                .is_some_and(|r| r.equivalent(&expected).unwrap_or(false));
            let squares: u64 = e.degrees.iter().map(|d| d * d).sum();
            !(e.passed()
                && rule_ok
                && squares == e.q * (e.q - 1)
                && e.group_order as u64 == e.q * (e.q - 1))
        })
        .map(|e| e.q)
        .collect();
    Outcome {
        id: "AC7",
        title: "symmetric family F_q ⋊ F_q^*",
        pass: failing.is_empty() && elapsed < AC7_LIMIT,
        detail: format!(
            "q in {qs:?}, failing {failing:?}, runtime {} (limit {})",
            secs(elapsed),
            secs(AC7_LIMIT)
        ),
    }
}

fn ac8() -> Outcome {
    let z3 = ActionData {
        metric: MetricGroup::z3(1).unwrap(),
        acting: FiniteGroupSpec::cyclic(2),
        images: vec![vec![0, 2, 1]],
    };
    // (0,1) -> (1,0) -> (1,1) -> (0,1)
    let klein = ActionData {
        metric: MetricGroup::klein_minus_one(),
        acting: FiniteGroupSpec::cyclic(3),
        images: vec![vec![0, 2, 3, 1]],
    };
    let cases = [
        (z3, FiniteGroupSpec::cyclic(2), 1, 6),
        (klein, FiniteGroupSpec::cyclic(3), 2, 12),
    ];
    let mut parts = Vec::new();
    let mut pass = true;
    for (action, g, k, dim) in cases {
        let report = equivariant_report(&action).unwrap();
        let expected = NearGroupRule::new(g, k);
        let rule_ok = report
            .rule
            .as_ref()
            .is_some_and(|r| r.equivalent(&expected).unwrap_or(false));
        let fpdim = fpdim_ring(&report.ring).unwrap();
        let dim_ok = fpdim.as_exact().and_then(|d| d.as_rational().cloned())
            == Some(Rational::from_integer(dim));
        let ok = rule_ok
            && dim_ok
            && report.fpdim_multiplicative
            && report.ring.check_axioms().is_valid();
        pass &= ok;
        parts.push(format!(
            "{} gives {} with FPdim {dim}: {ok}",
            action.metric.label(),
            report
                .rule
                .map(|r| r.to_string())
                .unwrap_or_else(|| "no rule".into())
        ));
    }
    Outcome {
        id: "AC8",
        title: "equivariantization",
        pass,
        detail: parts.join("; "),
    }
}

fn ac9() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_neargroup"))
            .args(["classify", "--max-n", "8", "--quiet", "--json"])
            .arg(&path)
            .status()
            .unwrap();
        (status.success(), std::fs::read(&path).unwrap_or_default())
    };
    let (ok_a, a) = run("a.json");
    let (ok_b, b) = run("b.json");
    let deterministic = !a.is_empty() && a == b;
    let report: Value = serde_json::from_slice(&a).unwrap_or(Value::Null);
    let entries = report["non_symmetric"]
        .as_array()
        .cloned()
        .unwrap_or_default();
    let rows: Vec<(String, u64, String)> = entries
        .iter()
        .map(|e| {
            (
                e["rule"].as_str().unwrap_or("").to_string(),
                e["count"].as_u64().unwrap_or(0),
                e["provenance"].as_str().unwrap_or("").to_string(),
            )
        })
        .collect();
    let expected = vec![
        ("(1,1)".to_string(), 4, "imported-from-paper".to_string()),
        ("(Z/2,1)".to_string(), 2, "computed".to_string()),
        ("(Z/3,2)".to_string(), 1, "computed".to_string()),
    ];
    let total: u64 = rows.iter().map(|r| r.1).sum();
    let symmetric_computed = report["symmetric"]
        .as_array()
        .is_some_and(|s| !s.is_empty() && s.iter().all(|e| e["provenance"] == "computed"));
    let pass =
        ok_a && ok_b && deterministic && rows == expected && total == 7 && symmetric_computed;
    Outcome {
        id: "AC9",
        title: "classification table",
        pass,
        detail: format!(
            "exit ok {}, byte-identical {deterministic}, non-symmetric {rows:?}, total {total}",
            ok_a && ok_b
        ),
    }
}

/// All `q: A → Z/N` with `q(mx) = m²q(x)` and bilinear `q(x+y) - q(x) - q(y)`,
/// found by backtracking over the elements in index order.
fn naive_forms(a: &AbelianGroup) -> BTreeSet<Vec<u64>> {
    fn go(a: &AbelianGroup, n: u64, x: usize, vals: &mut [u64], out: &mut BTreeSet<Vec<u64>>) {
        let size = vals.len();
        if x == size {
            let b = |u: usize, v: usize| (vals[a.add(u, v)] + 2 * n - vals[u] - vals[v]) % n;
            let bilinear = (0..size).all(|u| {
                (0..size).all(|v| (0..size).all(|w| b(a.add(u, v), w) == (b(u, w) + b(v, w)) % n))
            });
            if bilinear {
                out.insert(vals.to_vec());
            }
            return;
        }
        for v in 0..n {
            let homogeneous = (0..a.element_order(x)).all(|m| {
                let y = a.times(m, x);
                y >= x || vals[y] == (m * m % n) * v % n
            });
            if homogeneous && (x != 0 || v == 0) {
                vals[x] = v;
                go(a, n, x + 1, vals, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut vals = vec![0; a.order() as usize];
    go(a, 2 * a.exponent(), 0, &mut vals, &mut out);
    out
}

fn ac10() -> Outcome {
    let mut groups = 0;
    let mut forms = 0;
    let mut form_mismatch = Vec::new();
    for order in 1..=8 {
        for a in AbelianGroup::all_of_order(order) {
            groups += 1;
            let values: Vec<Vec<u64>> = enumerate_quadratic_forms(&a)
                .unwrap()
                .iter()
                .map(|f| f.values())
                .collect();
            forms += values.len();
            let set: BTreeSet<Vec<u64>> = values.iter().cloned().collect();
            if set.len() != values.len() || set != naive_forms(&a) {
                form_mismatch.push(a.factors().to_vec());
            }
        }
    }
    let mut splits = 0;
    let mut forgetful_failures = Vec::new();
    for rule in tested_rules() {
        for s in 0..=rule.k {
            splits += 1;
            let ok = build_sphericalized_ring(&rule, s, rule.k - s)
                .and_then(|sph| sph.forgetful_is_homomorphism())
                .unwrap_or(false);
            if !ok {
                forgetful_failures.push(format!("{rule} s={s}"));
            }
        }
    }
    Outcome {
        id: "AC10",
        title: "oracle equivalence",
        pass: form_mismatch.is_empty() && forgetful_failures.is_empty(),
        detail: format!(
            "{forms} forms on {groups} groups, mismatches {form_mismatch:?}; {splits} sphericalized rings, forgetful failures {:?}",
            &forgetful_failures[..forgetful_failures.len().min(3)]
        ),
    }
}

#[test]
fn acceptance_criteria() {
    let criteria: [fn() -> Outcome; 10] = [ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10];
    // written to the process stdout so the lines appear even when the test passes
    let mut out = std::io::stdout();
    let mut failed = Vec::new();
    writeln!(out).unwrap();
    for criterion in criteria {
        let o = criterion();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{} {verdict}: {} (tolerance: {TOLERANCE}) -- {}",
            o.id, o.title, o.detail
        )
        .unwrap();
        out.flush().unwrap();
        if !o.pass {
            failed.push(o.id);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
