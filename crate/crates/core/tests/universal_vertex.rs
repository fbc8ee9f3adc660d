use sgraph::detect::{in_forb_class, ForbSpec, Pattern};
use sgraph::enumerate::signed_graphs;
use sgraph::{switching_equivalent, Sign, SignedGraph};

#[test]
fn universal_vertex_class_equivalence() {
    for n in 1..=6 {
        for g in signed_graphs(n) {
            let star = g.add_universal_positive();
            assert_eq!(star.m(), g.m() + n);
            for k in 4..=7 {
                let lhs = in_forb_class(&star, &ForbSpec::neg_k4_with_path(k)).is_member();
                let rhs = in_forb_class(&g, &ForbSpec::exact_cliques_with_path(k)).is_member();
                assert_eq!(lhs, rhs, "k = {k}, {g:?}");
            }
        }
    }
}

#[test]
fn apex_over_negative_triangle() {
    let star = SignedGraph::complete(3, Sign::Negative).add_universal_positive();
    let neg_k4 = SignedGraph::complete(4, Sign::Negative);
    assert!(switching_equivalent(&star, &neg_k4).unwrap().is_some());
    let spec = ForbSpec::new(vec![Pattern::path(4)]);
    assert!(in_forb_class(&SignedGraph::edgeless(3).add_universal_positive(), &spec).is_member());
}
