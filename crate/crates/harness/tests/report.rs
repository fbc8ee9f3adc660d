use sgraph_harness::{run_experiment, CsvSink, Params, Row, CSV_HEADER};

fn run(name: &str, pairs: &[(&str, &str)], seed: u64) -> (String, Vec<Row>) {
    let mut p = Params::new();
    for (k, v) in pairs {
        p.set(k, v);
    }
    let mut streamed = Vec::new();
    let report = run_experiment(name, &p, seed, &mut |r| streamed.push(r.clone())).unwrap();
    assert_eq!(streamed, report.rows);
    (report.to_json(), streamed)
}

#[test]
fn same_seed_gives_byte_identical_json() {
    let params = [("samples", "40"), ("n_max", "9")];
    let (a, _) = run("lemma6-sandwich", &params, 7);
    let (b, _) = run("lemma6-sandwich", &params, 7);
    assert_eq!(a, b);
    let (c, _) = run("lemma6-sandwich", &params, 8);
    assert_ne!(a, c);
}

#[test]
fn report_lists_defaults_and_rows_in_order() {
    let (json, rows) = run("thm20-bound", &[("samples", "40")], 3);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["experiment"], "thm20-bound");
    assert_eq!(v["params"]["samples"], "40");
    assert_eq!(v["params"]["n_max"], "14");
    assert_eq!(v["params"]["k_max"], "4");
    let ids: Vec<usize> = rows.iter().map(|r| r.instance_id).collect();
    assert!(ids.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(rows.len(), 40);
    assert_eq!(v["pass"], true);
}

#[test]
fn unknown_experiment_and_parameters_are_rejected() {
    let p = Params::new();
    assert!(run_experiment("no-such", &p, 0, &mut |_| {}).is_err());
    let mut p = Params::new();
    p.set("bogus", 1);
    assert!(run_experiment("neg-clique-chi", &p, 0, &mut |_| {}).is_err());
    let mut p = Params::new();
    p.set("i_max", "ten");
    assert!(run_experiment("neg-clique-chi", &p, 0, &mut |_| {}).is_err());
}

#[test]
fn csv_has_header_and_one_line_per_row() {
    let mut buf = Vec::new();
    let mut p = Params::new();
    p.set("i_max", 6);
    {
        let mut sink = CsvSink::new(&mut buf).unwrap();
        run_experiment("neg-clique-chi", &p, 0, &mut |r| sink.write(r).unwrap()).unwrap();
    }
    let text = String::from_utf8(buf).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], CSV_HEADER.join(","));
    assert_eq!(lines.len(), 1 + 5);
    assert_eq!(lines[1], "0,2,1,chi_b,1,= 1,true");
    assert_eq!(lines[5], "4,6,15,chi_b,3,= 3,true");
}

#[test]
fn failing_rows_carry_a_replayable_witness() {
    let g = sgraph::gen::neg_clique(3);
    let bad = Row::new(0, &g, "m", 1, "= 2", false, || "seed=1".into());
    let w = bad.witness.expect("failing rows have witnesses");
    assert_eq!(sgraph_harness::parse_sg(&w.graph).unwrap(), g);
    assert_eq!(w.inputs, "seed=1");
    assert!(Row::new(0, &g, "m", 2, "= 2", true, || unreachable!()).witness.is_none());
}
