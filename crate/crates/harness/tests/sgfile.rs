use proptest::prelude::*;
use sgraph::detect::k4_matching;
use sgraph::{Sign, SignedGraph};
use sgraph_harness::{format_sg, parse_sg, read_sg, write_sg, SgFileError};

#[test]
fn k4_matching_round_trips_through_a_file() {
    let g = k4_matching();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4m.sg");
    write_sg(&g, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("p sg 4 6\n"));
    assert_eq!(text.lines().filter(|l| l.ends_with(" -")).count(), 2);
    assert_eq!(read_sg(&path).unwrap(), g);
}

#[test]
fn comments_and_blank_lines_are_skipped() {
    let g = parse_sg("c a triangle\n\np sg 3 3\nc edges\ne 1 2 +\ne 2 3 -\n  e 3 1 +\n").unwrap();
    assert_eq!(g.sign(0, 1), Some(Sign::Positive));
    assert_eq!(g.sign(1, 2), Some(Sign::Negative));
    assert_eq!(g.sign(0, 2), Some(Sign::Positive));
}

#[test]
fn malformed_files_report_the_offending_line() {
    let cases = [
        ("p sg 3 1\ne 1 4 +\n", 2),
        ("p sg 3 1\ne 1 2 *\n", 2),
        ("p sg 3 2\ne 1 2 +\ne 2 1 -\n", 3),
        ("e 1 2 +\np sg 3 1\n", 1),
        ("p sg 3 2\ne 1 2 +\n", 1),
        ("p sg 3 0\np sg 3 0\n", 2),
        ("p dimacs 3 0\n", 1),
        ("p sg 3 1\nx 1 2\n", 2),
        ("p sg 3 1\ne 2 2 +\n", 2),
    ];
    for (text, want) in cases {
        match parse_sg(text) {
            Err(SgFileError::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
    assert!(parse_sg("").is_err());
}

#[test]
fn missing_file_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(read_sg(dir.path().join("none.sg")), Err(SgFileError::Io(_))));
}

fn signed_graph() -> impl Strategy<Value = SignedGraph> {
    (0usize..10).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(0u8..3, pairs).prop_map(move |codes| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = all.zip(codes).filter(|(_, c)| *c > 0).map(|((u, v), c)| {
                (u, v, if c == 1 { Sign::Positive } else { Sign::Negative })
            });
            SignedGraph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn format_then_parse_is_identity(g in signed_graph()) {
        let text = format_sg(&g);
        prop_assert_eq!(parse_sg(&text).unwrap(), g.clone());
        prop_assert_eq!(format_sg(&parse_sg(&text).unwrap()), text);
    }
}
