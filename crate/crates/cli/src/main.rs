//! `neargroup`: command-line front end for the near-group toolkit.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on a
//! usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use neargroup::arith::integrality::{
    lemma_alg_grid, lemma_alg_pair_check, lemma_r_scan, theorem_sph_ratio_scan,
};
use neargroup::arith::number::is_square;
use neargroup::group::FiniteGroupSpec;
use neargroup::metric::{
    classify_actions, enumerate_quadratic_forms, isometry_group, transitive_metric_group_scan,
    AbelianGroup, MetricGroup, QuadraticForm,
};
use neargroup::ring::{
    build_near_group, fpdim_ring, fpdims, integer_fpdim_scan, FusionRing, NearGroupRule,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "neargroup",
    version,
    about = "Exact computations for braided near-group fusion rings"
)]
struct Cli {
    /// Write the full JSON report to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Size bound for scans and the classification table.
    #[arg(long = "max-n", global = true)]
    max_n: Option<u64>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Suppress the summary on standard output.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fusion rings.
    #[command(subcommand)]
    Ring(RingCommand),
    /// Sphericalization and the `r = k` pipeline.
    #[command(subcommand)]
    Spherical(SphericalCommand),
    /// Algebraic-integer scans.
    #[command(subcommand)]
    Alg(AlgCommand),
    /// Quadratic forms and metric groups.
    #[command(subcommand)]
    Metric(MetricCommand),
    /// Affine groups over finite fields.
    #[command(subcommand)]
    Affine(AffineCommand),
    /// Equivariantization.
    #[command(subcommand)]
    Equi(EquiCommand),
    /// The classification table.
    Classify,
}

#[derive(Args, Clone)]
struct RuleArgs {
    /// `1`, `S3`, `Z/n`, or a product such as `Z/2xZ/2`.
    #[arg(long, default_value = "1")]
    group: String,
    #[arg(long, default_value_t = 1)]
    k: u64,
}

#[derive(Subcommand)]
enum RingCommand {
    /// Build `NG(G, k)` and print its table.
    Build(RuleArgs),
    /// Check the fusion-ring axioms of a rule or of a ring read from JSON.
    Check {
        #[command(flatten)]
        rule: RuleArgs,
        /// Fusion ring JSON file.
        #[arg(long)]
        ring: Option<PathBuf>,
        /// Also check this many random rules with |G| <= 16, k <= 6.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
    /// Frobenius-Perron dimensions of a rule, or the integer-dimension scan.
    Fpdim {
        #[command(flatten)]
        rule: RuleArgs,
        #[arg(long)]
        ring: Option<PathBuf>,
        /// Run the integer-dimension scan up to `--max-n` (default 200).
        #[arg(long)]
        scan: bool,
    },
}

#[derive(Subcommand)]
enum SphericalCommand {
    /// Enumerate the splits `s + t = k` and keep the surviving `r`.
    Pipeline(RuleArgs),
}

#[derive(Subcommand)]
enum AlgCommand {
    /// The pair-integrality grid, plus optional random samples.
    LemmaScan {
        #[arg(long, default_value_t = 20)]
        a_max: i64,
        #[arg(long, default_value_t = 20)]
        c_max: i64,
        #[arg(long, default_value_t = 50)]
        bd_max: i64,
        /// Random quadruples drawn with `--seed` from a range ten times wider.
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
    /// Integrality of `D/Δ` and the square-radicand scan.
    RatioScan {
        #[arg(long, default_value_t = 10)]
        r_max: i64,
        #[arg(long, default_value_t = 10)]
        k_max: i64,
        #[arg(long, default_value_t = 50)]
        n_max: i64,
    },
}

#[derive(Args, Clone)]
struct FormArgs {
    /// Invariant factors, comma separated; empty for the trivial group.
    #[arg(long, default_value = "")]
    factors: String,
    /// Form exponents on the generators, comma separated.
    #[arg(long)]
    q_gen: Option<String>,
    /// Off-diagonal bilinear exponents, rows separated by `;`.
    #[arg(long)]
    b: Option<String>,
}

#[derive(Subcommand)]
enum MetricCommand {
    /// All quadratic forms on a group.
    Enum(FormArgs),
    /// Gauss sums of one form, or of every form on the group.
    Gauss(FormArgs),
    /// Isometry group of a nondegenerate form, and optionally action classes.
    Isometries {
        #[command(flatten)]
        form: FormArgs,
        /// Classify regular actions of this group.
        #[arg(long)]
        acting: Option<String>,
    },
    /// Metric groups with isometries transitive off the identity.
    TransitiveScan {
        #[arg(long, default_value_t = 16)]
        max_order: u64,
    },
}

#[derive(Subcommand)]
enum AffineCommand {
    /// Character table of `F_q ⋊ F_q^*`.
    Table {
        #[arg(long)]
        q: u64,
    },
    /// The symmetric family for every prime power up to `q_max`.
    Verify {
        #[arg(long, default_value_t = 9)]
        q_max: u64,
    },
}

#[derive(Subcommand)]
enum EquiCommand {
    /// Fusion ring of an equivariantization.
    Fuse {
        /// Action data JSON file.
        #[arg(long)]
        action: Option<PathBuf>,
        /// `z3` for `(Z/3, ω)` with inversion, `z3bar` for `ω̄`, `klein` for
        /// `(Z/2⊕Z/2, -1)` with the order-3 rotation.
        #[arg(long)]
        preset: Option<String>,
    },
}

/// Errors that are the caller's fault.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(Usage(msg.into()))
}

fn lib<T>(r: neargroup::Result<T>) -> anyhow::Result<T> {
    use neargroup::Error as E;
    r.map_err(|e| match e {
        E::InvalidInput(_)
        | E::NotSquareFree(_)
        | E::GroupTooLarge(_)
        | E::UnsupportedAction(_)
        | E::InvalidSubring(_) => usage(e.to_string()),
        other => anyhow!(other),
    })
}

/// Outcome of a command: the JSON report, a summary and the verdict.
struct Outcome {
    report: Value,
    summary: Vec<String>,
    pass: bool,
}

fn to_value(x: &impl Serialize) -> anyhow::Result<Value> {
    Ok(serde_json::to_value(x)?)
}

fn parse_group(s: &str) -> anyhow::Result<FiniteGroupSpec> {
    let t = s.trim();
    if t.is_empty() || t == "1" || t.eq_ignore_ascii_case("trivial") {
        return Ok(FiniteGroupSpec::trivial());
    }
    if t.eq_ignore_ascii_case("s3") {
        return Ok(FiniteGroupSpec::s3());
    }
    let orders = t
        .split(['x', '+', '⊕'])
        .map(|part| {
            let p = part.trim();
            let n = p.strip_prefix("Z/").unwrap_or(p);
            n.parse::<u64>()
                .map_err(|_| usage(format!("cannot parse group `{s}`")))
        })
        .collect::<anyhow::Result<Vec<u64>>>()?;
    if orders.contains(&0) {
        return Err(usage("cyclic factors must be positive"));
    }
    let orders: Vec<u64> = orders.into_iter().filter(|n| *n > 1).collect();
    Ok(neargroup::group::canonical_abelian_spec(&orders))
}

fn parse_list(s: &str) -> anyhow::Result<Vec<u64>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse::<u64>()
                .map_err(|_| usage(format!("cannot parse `{x}` as a nonnegative integer")))
        })
        .collect()
}

fn rule_of(args: &RuleArgs) -> anyhow::Result<NearGroupRule> {
    Ok(NearGroupRule::new(parse_group(&args.group)?, args.k))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> anyhow::Result<T> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn ring_from(rule: &RuleArgs, ring: &Option<PathBuf>) -> anyhow::Result<FusionRing> {
    match ring {
        Some(path) => read_json(path),
        None => lib(build_near_group(&rule_of(rule)?)),
    }
}

fn group_of(args: &FormArgs) -> anyhow::Result<AbelianGroup> {
    lib(AbelianGroup::new(parse_list(&args.factors)?))
}

/// A single form from `--q-gen` and `--b`, if both are given.
fn form_of(args: &FormArgs) -> anyhow::Result<Option<QuadraticForm>> {
    let a = group_of(args)?;
    let Some(q) = &args.q_gen else {
        return Ok(None);
    };
    let q_gen = parse_list(q)?;
    let r = a.factors().len();
    let mut b = vec![vec![0u64; r]; r];
    if let Some(rows) = &args.b {
        let rows: Vec<Vec<u64>> = rows
            .split(';')
            .map(parse_list)
            .collect::<anyhow::Result<_>>()?;
        if rows.len() != r || rows.iter().any(|row| row.len() != r) {
            bail!(usage(format!("--b needs {r} rows of {r} entries")));
        }
        b = rows;
    } else if r > 1 {
        bail!(usage("--b is required for more than one generator"));
    }
    let n = 2 * a.exponent();
    for (i, q) in q_gen.iter().enumerate().take(r) {
        b[i][i] = 2 * q % n;
    }
    lib(QuadraticForm::new(a, q_gen, b)).map(Some)
}

fn preset_action(name: &str) -> anyhow::Result<neargroup::equivariant::ActionData> {
    let (metric, h) = match name {
        "z3" => (lib(MetricGroup::z3(1))?, FiniteGroupSpec::cyclic(2)),
        "z3bar" => (lib(MetricGroup::z3(2))?, FiniteGroupSpec::cyclic(2)),
        "klein" => (MetricGroup::klein_minus_one(), FiniteGroupSpec::cyclic(3)),
        other => bail!(usage(format!(
            "unknown preset `{other}` (expected z3, z3bar or klein)"
        ))),
    };
    let classes = lib(classify_actions(&metric, &h))?;
    let class = classes
        .classes
        .first()
        .ok_or_else(|| anyhow!("no regular action"))?;
    lib(neargroup::equivariant::ActionData::from_class(
        &metric, &h, class,
    ))
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Ring(RingCommand::Build(args)) => {
            let rule = rule_of(args)?;
            let ring = lib(build_near_group(&rule))?;
            let valid = ring.check_axioms().is_valid();
            Ok(Outcome {
                summary: vec![
                    format!("NG{rule}: rank {}", ring.rank()),
                    format!("{ring:?}"),
                ],
                report: to_value(&ring)?,
                pass: valid,
            })
        }
        Command::Ring(RingCommand::Check { rule, ring, random }) => {
            let r = ring_from(rule, ring)?;
            let report = r.check_axioms();
            let mut summary = vec![format!(
                "axioms: {} ({} violations)",
                verdict(report.is_valid()),
                report.violations.len()
            )];
            let mut pass = report.is_valid();
            let mut sampled = Vec::new();
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            for _ in 0..*random {
                let groups: Vec<Vec<u64>> = (1..=16)
                    .flat_map(neargroup::group::abelian_invariant_factors)
                    .collect();
                let factors = &groups[rng.gen_range(0..groups.len())];
                let rule = NearGroupRule::new(
                    neargroup::group::canonical_abelian_spec(factors),
                    rng.gen_range(0..=6),
                );
                let ok = lib(build_near_group(&rule))?.check_axioms().is_valid();
                pass &= ok;
                sampled.push(json!({"rule": rule.to_string(), "valid": ok}));
            }
            if *random > 0 {
                summary.push(format!(
                    "random rules (seed {}): {} checked",
                    cli.seed, random
                ));
            }
            Ok(Outcome {
                report: json!({"axioms": report, "random": sampled}),
                summary,
                pass,
            })
        }
        Command::Ring(RingCommand::Fpdim { rule, ring, scan }) => {
            if *scan {
                let n_max = cli.max_n.unwrap_or(200);
                let report = integer_fpdim_scan(n_max);
                let summary = vec![format!(
                    "integer FPdim scan n <= {n_max}: {} integral pairs, {} falsifications: {}",
                    report.integral.len(),
                    report.falsifications.len(),
                    verdict(report.passed())
                )];
                return Ok(Outcome {
                    pass: report.passed(),
                    report: to_value(&report)?,
                    summary,
                });
            }
            let r = ring_from(rule, ring)?;
            let dims = lib(fpdims(&r))?;
            let total = lib(fpdim_ring(&r))?;
            let mut summary: Vec<String> = dims
                .iter()
                .enumerate()
                .map(|(i, d)| format!("FPdim({}) = {}", r.name(i), show(d)))
                .collect();
            summary.push(format!("FPdim = {}", show(&total)));
            Ok(Outcome {
                report: json!({"objects": dims, "total": total}),
                summary,
                pass: true,
            })
        }
        Command::Spherical(SphericalCommand::Pipeline(args)) => {
            let report = lib(neargroup::sphere::spherical_pipeline(&rule_of(args)?))?;
            let summary = vec![format!(
                "{}: survivors r = {:?}: {}",
                report.rule,
                report.survivors,
                verdict(report.passed())
            )];
            Ok(Outcome {
                pass: report.passed(),
                report: to_value(&report)?,
                summary,
            })
        }
        Command::Alg(AlgCommand::LemmaScan {
            a_max,
            c_max,
            bd_max,
            samples,
        }) => {
            let report = lemma_alg_grid(*a_max, *c_max, *bd_max);
            let mut pass = report.passed();
            let mut summary = vec![format!(
                "pair grid: {} checked, {} unequal, {} route disagreements: {}",
                report.checked,
                report.unequal.len(),
                report.route_disagreements.len(),
                verdict(report.passed())
            )];
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let mut failures = Vec::new();
            let mut drawn = 0;
            while drawn < *samples {
                let a = rng.gen_range(-10 * a_max..=10 * a_max);
                let c = rng.gen_range(1..=10 * c_max.max(&1));
                let b = rng.gen_range(2..=10 * bd_max.max(&2));
                let d = rng.gen_range(2..=10 * bd_max.max(&2));
                if is_square(b) || is_square(d) {
                    continue;
                }
                drawn += 1;
                let (plus, minus) = lib(lemma_alg_pair_check(a, b, c, d))?;
                if plus != minus {
                    failures.push([a, b, c, d]);
                }
            }
            if *samples > 0 {
                pass &= failures.is_empty();
                summary.push(format!(
                    "random samples (seed {}): {samples} drawn, {} unequal",
                    cli.seed,
                    failures.len()
                ));
            }
            Ok(Outcome {
                report: json!({"grid": report, "random_failures": failures, "seed": cli.seed}),
                summary,
                pass,
            })
        }
        Command::Alg(AlgCommand::RatioScan {
            r_max,
            k_max,
            n_max,
        }) => {
            let ratio = theorem_sph_ratio_scan(*r_max, *k_max, *n_max);
            let square = lemma_r_scan(*k_max, *n_max);
            let exact = ratio.integral_exactly_on_diagonal();
            let summary = vec![
                format!(
                    "D/Δ integral exactly when r = k: {} (off-diagonal integral points {:?})",
                    verdict(exact),
                    ratio.off_diagonal_integral
                ),
                format!(
                    "product identity: {}",
                    verdict(ratio.product_identity_holds())
                ),
                format!(
                    "square-radicand scan: {} deviations",
                    square.deviations.len()
                ),
            ];
            Ok(Outcome {
                pass: exact && ratio.product_identity_holds() && square.passed(),
                report: json!({"ratio": ratio, "square": square}),
                summary,
            })
        }
        Command::Metric(MetricCommand::Enum(args)) => {
            let a = group_of(args)?;
            let forms = lib(enumerate_quadratic_forms(&a))?;
            let rows: Vec<Value> = forms
                .iter()
                .map(|f| json!({"form": f, "values": f.values(), "nondegenerate": f.is_nondegenerate()}))
                .collect();
            let nondeg = forms.iter().filter(|f| f.is_nondegenerate()).count();
            let summary = vec![format!(
                "{}: {} forms, {} nondegenerate",
                a.label(),
                forms.len(),
                nondeg
            )];
            Ok(Outcome {
                report: Value::Array(rows),
                summary,
                pass: true,
            })
        }
        Command::Metric(MetricCommand::Gauss(args)) => {
            let forms = match form_of(args)? {
                Some(f) => vec![f],
                None => lib(enumerate_quadratic_forms(&group_of(args)?))?,
            };
            let mut pass = true;
            let mut rows = Vec::new();
            let mut summary = Vec::new();
            for f in &forms {
                let norm = f.gauss_norm();
                let matches = neargroup::metric::gauss_norm_matches_order(f);
                let ok = matches == f.is_nondegenerate();
                pass &= ok;
                if forms.len() == 1 {
                    let (re, im) = f.gauss_sum().to_complex();
                    summary.push(format!("gauss sum ≈ {re:.6} + {im:.6}i, |.|^2 = {norm}"));
                }
                rows.push(json!({"form": f, "gauss_sum": f.gauss_sum(), "norm_squared": norm, "nondegenerate": f.is_nondegenerate(), "criterion": ok}));
            }
            summary.push(format!(
                "|gauss|^2 = |A| iff nondegenerate on {} forms: {}",
                forms.len(),
                verdict(pass)
            ));
            Ok(Outcome {
                report: Value::Array(rows),
                summary,
                pass,
            })
        }
        Command::Metric(MetricCommand::Isometries { form, acting }) => {
            let f = form_of(form)?.ok_or_else(|| usage("--q-gen is required"))?;
            let m = lib(MetricGroup::new(f))?;
            let iso = lib(isometry_group(&m))?;
            let mut summary = vec![format!("{}: |Aut(A,q)| = {}", m.label(), iso.order())];
            let mut report = json!({"isometries": iso});
            if let Some(h) = acting {
                let classes = lib(classify_actions(&m, &parse_group(h)?))?;
                summary.push(format!(
                    "regular actions of {h}: {} classes",
                    classes.classes.len()
                ));
                report["actions"] = to_value(&classes)?;
            }
            Ok(Outcome {
                report,
                summary,
                pass: true,
            })
        }
        Command::Metric(MetricCommand::TransitiveScan { max_order }) => {
            let report = lib(transitive_metric_group_scan(*max_order))?;
            let pass = report.matches_expected() || *max_order < 4 && report.filters_consistent();
            let mut summary: Vec<String> = report
                .found
                .iter()
                .map(|m| format!("found {}", m.label()))
                .collect();
            summary.push(format!(
                "transitive metric groups with |A| <= {max_order}: {}",
                verdict(pass)
            ));
            Ok(Outcome {
                pass,
                report: to_value(&report)?,
                summary,
            })
        }
        Command::Affine(AffineCommand::Table { q }) => {
            let g = lib(neargroup::affine::build_affine_group(*q))?;
            let t = lib(neargroup::affine::character_table_affine(&g))?;
            let summary = vec![format!(
                "q = {q}: |H| = {}, degrees {:?}",
                g.order(),
                t.degrees()
            )];
            Ok(Outcome {
                report: to_value(&t)?,
                summary,
                pass: true,
            })
        }
        Command::Affine(AffineCommand::Verify { q_max }) => {
            let report = lib(neargroup::affine::verify_symmetric_family(*q_max))?;
            let mut summary: Vec<String> = report
                .entries
                .iter()
                .map(|e| {
                    let rule = e
                        .rule
                        .as_ref()
                        .map(ToString::to_string)
                        .unwrap_or_else(|| "none".into());
                    format!(
                        "q = {}: rule {rule}, FPdim {}: {}",
                        e.q,
                        show(&e.fpdim),
                        verdict(e.passed())
                    )
                })
                .collect();
            summary.push(format!(
                "symmetric family q <= {q_max}: {}",
                verdict(report.passed())
            ));
            Ok(Outcome {
                pass: report.passed(),
                report: to_value(&report)?,
                summary,
            })
        }
        Command::Equi(EquiCommand::Fuse { action, preset }) => {
            let act = match (action, preset) {
                (Some(path), None) => read_json(path)?,
                (None, Some(name)) => preset_action(name)?,
                _ => bail!(usage("give exactly one of --action and --preset")),
            };
            let report = lib(neargroup::equivariant::equivariant_report(&act))?;
            let rule = report
                .rule
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_else(|| "not near-group".into());
            let pass = report.fpdim_multiplicative;
            let summary = vec![
                format!("rank {}, rule {rule}", report.ring.rank()),
                format!(
                    "FPdim = {} (|H||A| = {}): {}",
                    show(&report.fpdim),
                    report.expected_fpdim,
                    verdict(pass)
                ),
                format!("{:?}", report.ring),
            ];
            Ok(Outcome {
                report: to_value(&report)?,
                summary,
                pass,
            })
        }
        Command::Classify => {
            let report = lib(neargroup::classify::classify(cli.max_n.unwrap_or(8)))?;
            let mut summary = Vec::new();
            for (section, entries) in [
                ("symmetric", &report.symmetric),
                ("non-symmetric", &report.non_symmetric),
                ("deferred", &report.deferred),
            ] {
                for e in entries {
                    let count = e.count.map(|c| c.to_string()).unwrap_or_else(|| "-".into());
                    let provenance = serde_json::to_value(e.provenance)?;
                    summary.push(format!(
                        "{section:<14} {:<10} x{count:<3} {}",
                        e.rule,
                        provenance.as_str().unwrap_or("")
                    ));
                }
            }
            for c in &report.checks {
                summary.push(format!("check {:<26} {}", c.name, verdict(c.pass)));
            }
            Ok(Outcome {
                pass: report.passed(),
                report: to_value(&report)?,
                summary,
            })
        }
    }
}

fn show(d: &neargroup::ring::FpDim) -> String {
    match d.as_exact() {
        Some(v) => v.to_string(),
        None => format!("≈{:.6}", d.to_f64()),
    }
}

fn emit(cli: &Cli, outcome: &Outcome) -> anyhow::Result<()> {
    if let Some(path) = &cli.json {
        let mut text = serde_json::to_string_pretty(&outcome.report)?;
        text.push('\n');
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    if !cli.quiet {
        for line in &outcome.summary {
            println!("{line}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|o| emit(&cli, &o).map(|_| o.pass));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
