use crate::graph::Graph;
use crate::sign::Sign;
use crate::signed::SignedGraph;

/// `(K_i, -)`.
pub fn neg_clique(i: usize) -> SignedGraph {
    SignedGraph::complete(i, Sign::Negative)
}

/// `(G, -)`.
pub fn all_negative(g: &Graph) -> SignedGraph {
    SignedGraph::uniform(g, Sign::Negative)
}

/// `PC(G)`: the complete signed graph whose negative edges are the edges of
/// `G` and whose positive edges are the non-edges.
pub fn positive_completion(g: &Graph) -> SignedGraph {
    SignedGraph::from_graph_with(&Graph::complete(g.n()), |u, v| {
        if g.has_edge(u, v) {
            Sign::Negative
        } else {
            Sign::Positive
        }
    })
}
