use rand::Rng;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::sign::Sign;
use crate::signed::SignedGraph;

/// An orientation of a simple graph: one arc `(tail, head)` per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        // rejects loops, out-of-range ends and both directions of one edge
        Graph::new(n, arcs.iter().copied())?;
        Ok(Orientation { n, arcs })
    }

    /// Orients each edge of `g` independently at random.
    pub fn random<R: Rng>(g: &Graph, rng: &mut R) -> Self {
        let arcs = g.edges().map(|(u, v)| if rng.gen_bool(0.5) { (u, v) } else { (v, u) }).collect();
        Orientation { n: g.n(), arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn underlying(&self) -> Graph {
        Graph::new(self.n, self.arcs.iter().copied()).expect("validated on construction")
    }

    /// Arc pairs `(i, j)`, `i < j`, sharing an endpoint, flagged when one
    /// continues the other head to tail.
    fn touching(&self) -> impl Iterator<Item = (usize, usize, bool)> + '_ {
        let a = &self.arcs;
        (0..a.len()).flat_map(move |i| {
            (i + 1..a.len()).filter_map(move |j| {
                let ((s, t), (x, y)) = (a[i], a[j]);
                let consecutive = t == x || y == s;
                (consecutive || s == x || t == y).then_some((i, j, consecutive))
            })
        })
    }
}

/// The arc graph `A(D)`: vertex `i` is the `i`-th arc; `uv` and `vw` adjacent.
pub fn arc_graph(d: &Orientation) -> Graph {
    let edges: Vec<_> = d.touching().filter(|t| t.2).map(|(i, j, _)| (i, j)).collect();
    Graph::new(d.arcs.len(), edges).expect("arc pairs are distinct")
}

/// The line graph of the underlying graph with the edges of `A(D)` negative
/// and all other edges positive.
pub fn signed_line_graph(d: &Orientation) -> SignedGraph {
    let edges: Vec<_> = d
        .touching()
        .map(|(i, j, c)| (i, j, if c { Sign::Negative } else { Sign::Positive }))
        .collect();
    SignedGraph::new(d.arcs.len(), edges).expect("arc pairs are distinct")
}
