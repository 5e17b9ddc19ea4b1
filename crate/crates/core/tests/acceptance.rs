//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any gated
//! criterion fails.

use std::time::{Duration, Instant};

use jackleaf::algebra::{MultiPoly, RatFun, UniPoly};
use jackleaf::binomials::BinomialContext;
use jackleaf::closedforms::{identity_suite, Caps};
use jackleaf::partitions::{two_row_data, Partition};
use jackleaf::report::SuiteReport;
use jackleaf::stemleaf::{leaf, stem};
use jackleaf::table::{positivity_scan, table_rows, ShapeFilter};
use jackleaf::verify::{main_theorem, oracle_stability, oracle_triangle, recurrences, skew_invariance, skew_translation_report};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn prod(fs: &[&[i64]]) -> UniPoly {
    fs.iter().fold(UniPoly::one(), |acc, f| &acc * &UniPoly::from_ints(f))
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_report(rep: jackleaf::Result<SuiteReport>) -> Outcome {
    match rep {
        Ok(rep) => {
            let mut detail = format!("{} of {} checks", rep.passed(), rep.entries.len());
            if let Some(f) = rep.failures().next() {
                detail.push_str(&format!("; first failure {} {}", f.identity, f.params));
            }
            Outcome { pass: rep.all_pass() && !rep.entries.is_empty(), detail }
        }
        Err(e) => Outcome { pass: false, detail: format!("error: {e}") },
    }
}

fn worked_pairs() -> Outcome {
    let mut ctx = BinomialContext::new();
    let cases = [
        (
            "7,3,3,1",
            "4,3,1,1",
            (3, 2, 0, MultiPoly::linear_r(1, 1)),
            RatFun::new(prod(&[&[4], &[7, 3]]), prod(&[&[4, 3], &[1, 1], &[1, 1], &[1, 1], &[2, 1]])).unwrap(),
            UniPoly::from_ints(&[60, 238, 275, 90, 9]),
        ),
        (
            "6,5,3,1",
            "6,2,1,1",
            (3, 2, 1, MultiPoly::zero()),
            RatFun::new(prod(&[&[3], &[4, 3], &[1, 2], &[5, 2]]), prod(&[&[0, 1], &[4, 2], &[2, 1], &[1, 1]])).unwrap(),
            UniPoly::from_ints(&[0, 6]),
        ),
    ];
    let mut bad = Vec::new();
    for (l, m, (u, d, mm, y), k, lf) in cases {
        let (lam, mu) = (p(l), p(m));
        let data = two_row_data(&lam, &mu).unwrap();
        if (data.u, data.d, data.m) != (u, d, mm) || data.y != y {
            bad.push(format!("({l})/({m}) data {data:?}"));
        }
        if stem(&lam, &mu).unwrap() != k {
            bad.push(format!("({l})/({m}) stem"));
        }
        if leaf(&lam, &mu, &mut ctx).unwrap() != RatFun::from_poly(lf) {
            bad.push(format!("({l})/({m}) leaf"));
        }
    }
    Outcome { pass: bad.is_empty(), detail: if bad.is_empty() { "2 pairs".into() } else { bad.join(", ") } }
}

fn positivity() -> Outcome {
    match table_rows(8, ShapeFilter::All) {
        Ok(rows) => {
            let rep = positivity_scan(&rows);
            Outcome { pass: rep.counterexamples.is_empty(), detail: format!("{} rows; {rep}", rows.len()) }
        }
        Err(e) => Outcome { pass: false, detail: format!("error: {e}") },
    }
}

fn main() {
    type Check = fn() -> Outcome;
    let criteria: [(&str, Duration, bool, Check); 8] = [
        ("1 worked pairs", Duration::from_secs(1), true, worked_pairs),
        ("2 oracle triangle |λ|≤6, M=6", Duration::from_secs(300), true, || from_report(oracle_triangle(6, 6))),
        ("3 closed-form leaf u,d≤5, gaps ≤3/≤2", Duration::from_secs(120), true, || from_report(main_theorem(5, 5, 3, 2))),
        ("4 skew invariance |λ/μ|≤6, |λ|≤9", Duration::MAX, true, || from_report(skew_invariance(6, 9))),
        ("5 identity suites u,d≤6", Duration::from_secs(60), true, || from_report(identity_suite("all", Caps::new(6, 6)))),
        ("6 oracle stability |λ|≤5", Duration::MAX, true, || from_report(oracle_stability(5))),
        ("7 recurrence residuals |λ|≤7", Duration::MAX, true, || from_report(recurrences(7))),
        ("8 positivity scan |λ|≤8 (report only)", Duration::MAX, false, positivity),
    ];
    let mut failed = false;
    for (name, budget, gated, check) in criteria {
        let start = Instant::now();
        let out = check();
        let took = start.elapsed();
        let in_time = took <= budget;
        let pass = out.pass && in_time;
        let timing = if in_time { String::new() } else { format!(", over the {budget:?} budget") };
        println!("{} {name}: {} ({:.2?}{timing})", if pass { "PASS" } else { "FAIL" }, out.detail, took);
        failed |= gated && !pass;
    }
    match skew_translation_report(6, 9) {
        Ok(t) => println!("note {t}"),
        Err(e) => println!("note translation report failed: {e}"),
    }
    if failed {
        std::process::exit(1);
    }
}
