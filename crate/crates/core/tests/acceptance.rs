//! Acceptance criteria, one line each. Runs without the libtest harness so the
//! lines are printed even when output capture is on.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use wsd_core::closure::{lie_closure, Scalars};
use wsd_core::exact_arith::DEFAULT_PRIMES;
use wsd_core::hw_bases::{basis_checks, basis_facts, verify_pattern_tables, HwKind};
use wsd_core::report::Check;
use wsd_core::suites::{self, Context};
use wsd_core::{Canonical, Operator, PrimeField};

const GIB: u64 = 1 << 30;

struct Criterion {
    id: usize,
    title: &'static str,
    limit: Duration,
    run: fn() -> Vec<Check>,
}

fn ac1() -> Vec<Check> {
    suites::clifford_checks(Canonical::get())
}

fn ac2() -> Vec<Check> {
    suites::invariance_checks(Canonical::get())
}

fn ac3() -> Vec<Check> {
    suites::table1().checks
}

fn ac4() -> Vec<Check> {
    let c = Canonical::get();
    let mut out = suites::serre_checks(c);
    out.push(suites::even_closure_check(c));
    out
}

fn ac5() -> Vec<Check> {
    suites::kw_checks(Canonical::get())
}

fn ac6() -> Vec<Check> {
    HwKind::ALL
        .iter()
        .flat_map(|&k| basis_checks(k).into_iter().chain(basis_facts(k)))
        .collect()
}

fn ac7() -> Vec<Check> {
    suites::hw3_matrix_checks(Canonical::get())
        .unwrap_or_else(|e| vec![Check::with_detail("restriction", false, e.to_string())])
}

fn ac8() -> Vec<Check> {
    match verify_pattern_tables() {
        Ok(reports) => reports
            .iter()
            .map(|r| {
                Check::with_detail(
                    r.name.clone(),
                    r.passed,
                    format!(
                        "{} missing, {} unexpected",
                        r.missing.len(),
                        r.unexpected.len()
                    ),
                )
            })
            .collect(),
        Err(e) => vec![Check::with_detail("appendix", false, e.to_string())],
    }
}

fn ac9() -> Vec<Check> {
    let gens = &Canonical::get().generators;
    // block dimensions from the su(n|n) oracle, itself checked by brute force at n = 1, 2
    let oracle_ok = (1..=2).all(|n| common::su_nn_dimension(n) == 4 * n * n - 1);
    let mut out = vec![Check::new("su(n|n) oracle at n = 1, 2", oracle_ok)];
    let expected_blocks = vec![4 * 20 * 20 - 1, 4 * 36 * 36 - 1, 4 * 20 * 20 - 1, 15];
    for p in DEFAULT_PRIMES {
        match suites::closure_with_retry(p, Scalars::Real, gens, &HwKind::ALL) {
            Ok((s, _)) => {
                out.push(Check::equal(
                    format!("dimension mod {p}"),
                    s.dimension,
                    8396,
                ));
                out.push(Check::equal(
                    format!("block dimensions mod {p}"),
                    s.block_dimensions,
                    expected_blocks.clone(),
                ));
                out.push(Check::equal(
                    format!("gap to 8444 mod {p}"),
                    8444usize.saturating_sub(s.dimension),
                    48,
                ));
            }
            Err(e) => out.push(Check::with_detail(
                format!("closure mod {p}"),
                false,
                e.to_string(),
            )),
        }
    }
    match PrimeField::new(DEFAULT_PRIMES[0])
        .and_then(|f| lie_closure(f, Scalars::Complex, gens, &HwKind::ALL))
    {
        Ok(s) => {
            out.push(Check::equal("complexified dimension", s.dimension(), 8396));
            out.push(Check::equal(
                "real dimension of the complexification",
                2 * s.dimension(),
                16792,
            ));
        }
        Err(e) => out.push(Check::with_detail(
            "complexified closure",
            false,
            e.to_string(),
        )),
    }
    out
}

fn ac10() -> Vec<Check> {
    let ctx = Context::default();
    match suites::structure(&ctx) {
        Ok(r) => r
            .checks
            .into_iter()
            .filter(|c| {
                c.name.starts_with("generators are super")
                    || c.name.starts_with("supertrace of every")
                    || c.name.starts_with("closure is stable")
            })
            .collect(),
        Err(e) => vec![Check::with_detail("structure", false, e.to_string())],
    }
}

fn ac11() -> Vec<Check> {
    let c = Canonical::get();
    vec![
        Check::new(
            "Hodge star squares to the identity",
            c.hodge.compose(&c.hodge) == Operator::identity(),
        ),
        Check::equal("pairing ranks", suites::pairing_ranks(), [40, 72, 40, 8]),
        Check::equal("su(1|1)", common::su_nn_dimension(1), 3),
        Check::equal("su(2|2)", common::su_nn_dimension(2), 15),
    ]
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            title: "Clifford relations",
            limit: Duration::from_secs(5),
            run: ac1,
        },
        Criterion {
            id: 2,
            title: "rotation invariance and S3 equivariance",
            limit: Duration::from_secs(5),
            run: ac2,
        },
        Criterion {
            id: 3,
            title: "isotypical multiplicities",
            limit: Duration::from_secs(30),
            run: ac3,
        },
        Criterion {
            id: 4,
            title: "sl(4,R) presentation",
            limit: Duration::from_secs(60),
            run: ac4,
        },
        Criterion {
            id: 5,
            title: "Kw grading",
            limit: Duration::from_secs(30),
            run: ac5,
        },
        Criterion {
            id: 6,
            title: "highest weight bases",
            limit: Duration::from_secs(60),
            run: ac6,
        },
        Criterion {
            id: 7,
            title: "hw3 matrices",
            limit: Duration::from_secs(10),
            run: ac7,
        },
        Criterion {
            id: 8,
            title: "Kw component patterns",
            limit: Duration::from_secs(60),
            run: ac8,
        },
        Criterion {
            id: 9,
            title: "closure dimension",
            limit: Duration::from_secs(30 * 60),
            run: ac9,
        },
        Criterion {
            id: 10,
            title: "structural properties",
            limit: Duration::from_secs(5 * 60),
            run: ac10,
        },
        Criterion {
            id: 11,
            title: "property checks",
            limit: Duration::from_secs(60),
            run: ac11,
        },
    ];
    // the lazily built operator tables are charged to the first criterion that needs them
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut checks = (c.run)();
        let elapsed = start.elapsed();
        checks.push(Check::with_detail(
            "runtime",
            elapsed <= c.limit,
            format!("{:.2}s of {}s", elapsed.as_secs_f64(), c.limit.as_secs()),
        ));
        if c.id == 9 {
            let rss = common::peak_rss_bytes();
            let ok = rss.is_none_or(|b| b < 4 * GIB);
            let detail = rss.map_or("unavailable".to_string(), |b| format!("{} MiB", b >> 20));
            checks.push(Check::with_detail("peak memory", ok, detail));
        }
        let passed = checks.iter().all(|k| k.passed);
        let tag = if passed { "PASS" } else { "FAIL" };
        println!(
            "[{tag}] AC-{} {} ({:.2}s, {} checks)",
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            checks.len()
        );
        for k in checks.iter().filter(|k| !k.passed) {
            println!("       failed: {} {}", k.name, k.detail);
        }
        if !passed {
            failures += 1;
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
