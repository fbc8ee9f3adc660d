//! Every experiment at reduced size. The full-size runs live in the
//! acceptance target.

use sgraph_harness::{experiment_names, run_experiment, Params, Report};

fn run(name: &str, pairs: &[(&str, &str)]) -> Report {
    let mut p = Params::new();
    for (k, v) in pairs {
        p.set(k, v);
    }
    let report = run_experiment(name, &p, 11, &mut |_| {}).unwrap();
    for r in report.failures() {
        eprintln!("{name}: {r:?}");
    }
    report
}

#[test]
fn small_runs_pass() {
    let cases: [(&str, &[(&str, &str)]); 13] = [
        ("lemma6-sandwich", &[("samples", "60"), ("n_max", "9")]),
        ("neg-clique-chi", &[("i_max", "8")]),
        ("shift-growth", &[("n_max", "5")]),
        ("thm15-membership", &[("n_max", "6")]),
        ("thm18-membership", &[("samples", "20"), ("n_max", "8")]),
        ("thm16-sandwich", &[("samples", "30"), ("n_max", "8")]),
        ("thm20-bound", &[("samples", "50"), ("n_max", "10")]),
        ("cor21-bound", &[("samples", "50"), ("n_max", "10")]),
        ("cor31-bound", &[("samples", "30"), ("n_max", "16")]),
        ("thm30-six", &[("samples", "30"), ("n_max", "30"), ("exact_n", "10")]),
        ("prop26-equivalence", &[("n_max", "4"), ("k_max", "5")]),
        ("switching-algebra", &[("n_exhaustive", "4"), ("samples", "100"), ("n_max", "9")]),
        ("conjecture-probe", &[("n_max", "5")]),
    ];
    for (name, params) in cases {
        let r = run(name, params);
        assert!(r.pass, "{name}");
        assert!(!r.rows.is_empty(), "{name}");
    }
}

#[test]
fn every_experiment_is_registered() {
    let names: Vec<&str> = experiment_names().collect();
    assert_eq!(names.len(), 14);
    for want in ["prop33-lower", "conjecture-probe", "cor31-bound", "thm30-six"] {
        assert!(names.contains(&want));
    }
}

#[test]
fn prop33_without_an_envelope_falls_back_honestly() {
    let r = run("prop33-lower", &[("max_n", "4"), ("claim1_trials", "20")]);
    assert!(!r.pass);
    assert!(r.notes.iter().any(|n| n.starts_with("NOT-REPRODUCED-AT-DESK-SCALE")));
    let claim1 = r.rows.iter().find(|row| row.metric_name == "claim1_violations").unwrap();
    assert_eq!(claim1.value, 0);
}

#[test]
fn conjecture_probe_is_measurement_only() {
    let r = run("conjecture-probe", &[("n_max", "4")]);
    assert!(r.rows.iter().all(|row| row.expected == "measurement"));
    let chi: Vec<i64> = r.rows.iter().filter(|row| row.metric_name == "max_chi_b").map(|row| row.value).collect();
    // (K3, -) is in the class and needs two colours
    assert_eq!(chi, [1, 1, 2, 2]);
}
