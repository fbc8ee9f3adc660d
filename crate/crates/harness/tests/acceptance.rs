//! Acceptance criteria at full size, each against its time budget. Prints one
//! PASS/FAIL line per criterion and fails if any criterion does.

use std::time::{Duration, Instant};

use sgraph_harness::{run_experiment, Params, Report};

const SEED: u64 = 0;

struct Outcome {
    pass: bool,
    detail: String,
}

fn experiment(name: &str, pairs: &[(&str, &str)]) -> Report {
    let mut p = Params::new();
    for (k, v) in pairs {
        p.set(k, v);
    }
    run_experiment(name, &p, SEED, &mut |_| {}).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn summary(reports: &[Report]) -> Outcome {
    let rows: usize = reports.iter().map(|r| r.rows.len()).sum();
    let failed: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failures().map(move |f| format!("{} #{} {}={}", r.experiment, f.instance_id, f.metric_name, f.value)))
        .collect();
    let mut detail = format!("{rows} rows, {} failed", failed.len());
    if let Some(first) = failed.first() {
        detail += &format!(" (first: {first})");
    }
    Outcome { pass: failed.is_empty(), detail }
}

fn ac8() -> Outcome {
    let r = experiment("prop33-lower", &[]);
    let value = |m: &str| r.rows.iter().find(|row| row.metric_name == m).map(|row| row.value);
    let mut out = summary(std::slice::from_ref(&r));
    if r.pass {
        out.detail += &format!(
            ", {} envelopes, n = {}, chi(negative) = 6",
            value("envelopes").unwrap_or(-1),
            r.rows.last().map_or(0, |row| row.n)
        );
    }
    for note in &r.notes {
        out.detail += &format!("; {note}; fallback claim1_violations = {}", value("claim1_violations").unwrap_or(-1));
    }
    out
}

fn main() {
    type Check = Box<dyn Fn() -> Outcome>;
    let criteria: Vec<(&str, u64, Check)> = vec![
        ("AC1 negative cliques", 10, Box::new(|| summary(&[experiment("neg-clique-chi", &[("i_max", "10")])]))),
        (
            "AC2 sandwich",
            120,
            Box::new(|| summary(&[experiment("lemma6-sandwich", &[("samples", "500"), ("n_max", "12")])])),
        ),
        (
            "AC3 non-GS families",
            60,
            Box::new(|| {
                summary(&[
                    experiment("thm15-membership", &[("n_max", "8")]),
                    experiment("thm18-membership", &[("samples", "50")]),
                ])
            }),
        ),
        ("AC4 shift recursion", 60, Box::new(|| summary(&[experiment("shift-growth", &[("n_max", "7"), ("k_max", "2")])]))),
        (
            "AC5 arc graph sandwich",
            120,
            Box::new(|| summary(&[experiment("thm16-sandwich", &[("samples", "100"), ("n_max", "10")])])),
        ),
        (
            "AC6 triangle-free layering",
            180,
            Box::new(|| summary(&[experiment("thm20-bound", &[("samples", "200"), ("n_max", "14"), ("k_max", "4")])])),
        ),
        (
            "AC7 six colours",
            300,
            Box::new(|| {
                summary(&[experiment("thm30-six", &[("samples", "100"), ("n_max", "60"), ("exact_n", "14")])])
            }),
        ),
        ("AC8 lower bound six", 1800, Box::new(ac8)),
        (
            "AC9 universal vertex",
            300,
            Box::new(|| summary(&[experiment("prop26-equivalence", &[("n_max", "6"), ("k_max", "7")])])),
        ),
        (
            "AC10 switching algebra",
            60,
            Box::new(|| {
                summary(&[experiment(
                    "switching-algebra",
                    &[("n_exhaustive", "6"), ("samples", "1000"), ("n_max", "12")],
                )])
            }),
        ),
    ];
    let mut failed = Vec::new();
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let out = check();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(budget);
        let pass = out.pass && in_time;
        let id = name.split(' ').next().unwrap();
        println!(
            "{id} {} {name}: {}, {:.1}s of {budget}s{}",
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            took.as_secs_f64(),
            if in_time { "" } else { " (over budget)" }
        );
        if !pass {
            failed.push(id);
        }
    }
    if !failed.is_empty() {
        println!("acceptance: failed {}", failed.join(", "));
        std::process::exit(1);
    }
    println!("acceptance: all criteria pass");
}
