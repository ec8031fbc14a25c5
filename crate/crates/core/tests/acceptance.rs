mod common;

use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use multimorse::field::{kernel_basis, rank, PrimeField, Subspace};
use multimorse::generators::{build_example, random_filtration, ExampleName, Quantity, RandomSpec};
use multimorse::io;
use multimorse::koszul::{BettiTable, PersistenceModule};
use multimorse::morse::{full_report, FiltrationReport, Violation};
use multimorse::spectral::{compute_pages, DoubleComplex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SUITE_SIZE: u64 = 200;
const FIELD_THREE_SIZE: u64 = 50;

const IDENTITIES: &[&str] = &[
    "relative_euler",
    "global_euler",
    "pointwise_dimension",
    "coker_ker",
    "aggregate_euler",
    "lower_spectral_form",
    "e1_dim",
    "e1_rank",
    "e2_dim",
    "convergence",
    "einfty0",
    "total_homology",
    "page_recursion",
];

const INEQUALITIES: &[&str] = &[
    "strong",
    "strong_top_equality",
    "weak",
    "lower",
    "lower_without_remainder",
    "remainder_nonnegative",
    "upper",
    "image_bound",
    "union_bound",
    "sandwich",
];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn from_failures(failures: Vec<String>, summary: String) -> Self {
        if failures.is_empty() {
            Outcome { pass: true, detail: summary }
        } else {
            let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
            Outcome { pass: false, detail: format!("{} failures; first: {}", failures.len(), shown.join(" | ")) }
        }
    }
}

fn check_name(v: &Violation) -> &str {
    v.check.split('[').next().unwrap_or(&v.check)
}

fn suite_reports(field: PrimeField, count: u64) -> Vec<FiltrationReport> {
    (0..count)
        .map(|seed| {
            let filt = random_filtration(&RandomSpec::suite(seed), field).expect("generator parameters are valid");
            full_report(&filt, false).expect("report computes")
        })
        .collect()
}

fn binary_suite() -> &'static (Vec<FiltrationReport>, Duration) {
    static SUITE: OnceLock<(Vec<FiltrationReport>, Duration)> = OnceLock::new();
    SUITE.get_or_init(|| {
        let start = Instant::now();
        let reports = suite_reports(PrimeField::binary(), SUITE_SIZE);
        (reports, start.elapsed())
    })
}

fn violations_in(reports: &[FiltrationReport], names: &[&str]) -> Vec<String> {
    reports
        .iter()
        .enumerate()
        .flat_map(|(seed, r)| {
            r.verdict
                .violations
                .iter()
                .filter(|v| names.contains(&check_name(v)))
                .map(move |v| format!("seed {seed} grade {} {} q={:?} {} vs {}", v.grade, v.check, v.q, v.lhs, v.rhs))
        })
        .collect()
}

fn unclassified(reports: &[FiltrationReport]) -> Vec<String> {
    reports
        .iter()
        .flat_map(|r| r.verdict.violations.iter())
        .filter(|v| {
            let name = check_name(v);
            !IDENTITIES.contains(&name) && !INEQUALITIES.contains(&name) && name != "subadditivity"
        })
        .map(|v| format!("unclassified check {}", v.check))
        .collect()
}

fn grade_count(reports: &[FiltrationReport]) -> usize {
    reports.iter().map(|r| r.grades.len()).sum()
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn examples(names: &[ExampleName], budget: Duration) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for &name in names {
        let ex = build_example(name, PrimeField::binary()).expect("example builds");
        let report = full_report(&ex.filtration, false).expect("report computes");
        if !report.passed() {
            failures.push(format!("{name}: {} violations", report.verdict.violations.len()));
        }
        for e in &ex.expected {
            checked += 1;
            let found = e.measure(&report);
            if found != Some(e.value) {
                failures.push(format!("{name} {} at {}: expected {}, found {:?}", e.quantity, e.grade, e.value, found));
            }
        }
        if !ex.expected.iter().any(|e| matches!(e.quantity, Quantity::LowerSlack { .. } | Quantity::UpperSlack { .. })) {
            failures.push(format!("{name}: no tightness expectation"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > budget {
        failures.push(format!("took {elapsed:?}, budget {budget:?}"));
    }
    Outcome::from_failures(failures, format!("{} examples, {checked} exact values, {elapsed:.2?}", names.len()))
}

fn criterion_1() -> Outcome {
    use ExampleName::*;
    examples(&[LowerI, LowerII, LowerIII, UpperI, UpperII, UpperIII], Duration::from_secs(5))
}

fn criterion_2() -> Outcome {
    examples(&[ExampleName::Sphere(1), ExampleName::Sphere(2), ExampleName::Sphere(3)], Duration::from_secs(5))
}

fn criterion_3() -> Outcome {
    let (reports, elapsed) = binary_suite();
    let mut failures = violations_in(reports, IDENTITIES);
    failures.extend(unclassified(reports));
    if *elapsed > Duration::from_secs(600) {
        failures.push(format!("took {elapsed:?}"));
    }
    Outcome::from_failures(
        failures,
        format!("{} instances, {} grades, {elapsed:.2?}", reports.len(), grade_count(reports)),
    )
}

fn criterion_4() -> Outcome {
    let (reports, _) = binary_suite();
    let failures = violations_in(reports, INEQUALITIES);
    let mut positive_remainder = 0;
    let mut tight_lower = 0;
    for g in reports.iter().flat_map(|r| r.grades.iter()) {
        for d in &g.degrees {
            positive_remainder += usize::from(d.lower.remainder > 0);
            tight_lower += usize::from(d.lower.with_remainder.tight());
        }
    }
    Outcome::from_failures(
        failures,
        format!(
            "{} instances, {} grades, R > 0 at {positive_remainder} (grade, q), lower bound tight at {tight_lower}",
            reports.len(),
            grade_count(reports)
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let mut barcode_grades = 0;
    let mut mv_grades = 0;
    for field in common::fields() {
        for seed in 0..100 {
            let filt = random_filtration(&RandomSpec { n: 1, ..RandomSpec::suite(seed) }, field).unwrap();
            let bars = common::standard_persistence(&filt);
            let table = BettiTable::compute(&PersistenceModule::new(&filt).unwrap()).unwrap();
            for u in filt.evaluation_grid().unwrap() {
                barcode_grades += 1;
                let t = u.coords()[0];
                for q in 0..=filt.complex().dim() {
                    let births = bars.births.get(&(q, t)).copied().unwrap_or(0);
                    let deaths = bars.deaths.get(&(q, t)).copied().unwrap_or(0);
                    let (x0, x1) = (table.get(0, q as i64, &u), table.get(1, q as i64, &u));
                    if (x0, x1) != (births, deaths) {
                        failures.push(format!("barcode p={} seed {seed} u {u} q {q}: ({x0},{x1}) vs ({births},{deaths})", field.characteristic()));
                    }
                }
            }

            let filt = random_filtration(&RandomSpec { n: 2, ..RandomSpec::suite(seed) }, field).unwrap();
            for u in filt.evaluation_grid().unwrap() {
                mv_grades += 1;
                let expected = common::mayer_vietoris_union(&filt, &u);
                let pages = compute_pages(&DoubleComplex::build(&filt, &u).unwrap());
                for (k, &e) in expected.iter().enumerate() {
                    let k = k as i64;
                    let found = pages.limit(0, k) + pages.limit(1, k - 1);
                    if found != e {
                        failures.push(format!("mayer-vietoris p={} seed {seed} u {u} k {k}: {found} vs {e}", field.characteristic()));
                    }
                }
            }
        }
    }
    let reports = suite_reports(PrimeField::new(3).unwrap(), FIELD_THREE_SIZE);
    failures.extend(violations_in(&reports, IDENTITIES));
    failures.extend(violations_in(&reports, INEQUALITIES));
    failures.extend(unclassified(&reports));
    Outcome::from_failures(
        failures,
        format!(
            "barcodes at {barcode_grades} grades, Mayer-Vietoris at {mv_grades} grades, F_3 suites on {} instances ({} grades)",
            reports.len(),
            grade_count(&reports)
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut triples = 0;
    for field in common::fields() {
        for trial in 0..1000 {
            let (du, dv, dw) = (rng_dim(&mut rng), rng_dim(&mut rng), rng_dim(&mut rng));
            let f = common::low_rank_matrix(&mut rng, field, dv, du);
            let g = common::low_rank_matrix(&mut rng, field, dw, dv);
            let h = g.mul(&f).unwrap();
            for m in [&f, &g, &h] {
                if rank(m) + kernel_basis(m).dim() != m.cols() {
                    failures.push(format!("rank-nullity p={} trial {trial}", field.characteristic()));
                }
            }
            let sum = Subspace::column_space(&f).sum_dim(&kernel_basis(&g));
            if rank(&g) as i64 != rank(&h) as i64 + dv as i64 - sum as i64 {
                failures.push(format!("composition p={} trial {trial}", field.characteristic()));
            }
            triples += 1;
        }
    }
    let (reports, _) = binary_suite();
    let mut sequences = 0;
    for (seed, r) in reports.iter().enumerate() {
        for g in &r.grades {
            let top = g.degrees.len() as i64 - 1;
            for depth in 0..=top {
                sequences += 1;
                let mut ac = 0i64;
                let mut b = 0i64;
                for i in 0..=depth {
                    let s = if (depth + i) % 2 == 0 { 1 } else { -1 };
                    let d = &g.degrees[i as usize];
                    ac += s * (d.union_homology + d.critical);
                    b += s * d.homology;
                }
                if ac < b {
                    failures.push(format!("subadditivity seed {seed} grade {} depth {depth}", g.grade));
                }
            }
        }
    }
    failures.extend(violations_in(reports, &["subadditivity"]));
    Outcome::from_failures(
        failures,
        format!("{triples} matrix triples over F_2 and F_3, {sequences} truncated exact sequences"),
    )
}

fn rng_dim(rng: &mut ChaCha8Rng) -> usize {
    use rand::Rng;
    rng.gen_range(0..=6)
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut files = 0;
    let dir = std::fs::read_dir(fixture("")).expect("fixtures directory");
    let mut paths: Vec<PathBuf> = dir.map(|e| e.unwrap().path()).filter(|p| p.extension().is_some_and(|e| e == "mfcc")).collect();
    paths.sort();
    for path in paths {
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = match io::parse_document(&text) {
            Ok(doc) => doc,
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        files += 1;
        if io::parse_document(&io::write_document(&doc)).as_ref() != Ok(&doc) {
            failures.push(format!("{name}: document round trip"));
        }
        if let Ok(filt) = io::parse(&text, None) {
            let again = io::parse(&io::write_mfcc(&filt), None).unwrap();
            if io::write_mfcc(&again) != io::write_mfcc(&filt) {
                failures.push(format!("{name}: filtration round trip"));
            }
        }
    }
    let golden = std::fs::read_to_string(fixture("lower_i.report.json")).unwrap();
    let filt = io::parse(&std::fs::read_to_string(fixture("lower_i.mfcc")).unwrap(), None).unwrap();
    let first = full_report(&filt, false).unwrap().to_json();
    let second = full_report(&filt, false).unwrap().to_json();
    if first != second {
        failures.push("lower_i report differs between runs".into());
    }
    if first.trim_end() != golden.trim_end() {
        failures.push("lower_i report differs from golden file".into());
    }
    Outcome::from_failures(failures, format!("{files} fixtures round-trip, golden report {} bytes stable", golden.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("sharpness examples reproduce exact values with tight bounds", criterion_1),
        ("sphere suite attains equality in the lower bound at q = n-1", criterion_2),
        ("identity suite on 200 random filtrations", criterion_3),
        ("inequality suite on 200 random filtrations", criterion_4),
        ("cross-oracles: barcodes, Mayer-Vietoris, F_3 suites", criterion_5),
        ("linear-algebra properties", criterion_6),
        ("format round trip and golden report", criterion_7),
    ];
    let mut all = true;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let outcome = run();
        all &= outcome.pass;
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{status} criterion {}: {title} ({})", i + 1, outcome.detail);
    }
    if !all {
        std::process::exit(1);
    }
}
