use std::collections::BTreeSet;
use std::fmt;

use crate::error::GraphError;
use crate::graph::{check_pair, Graph};
use crate::sign::Sign;

/// A set of vertices to switch.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SwitchingSet(BTreeSet<usize>);

impl SwitchingSet {
    pub fn new() -> Self {
        SwitchingSet(BTreeSet::new())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Membership mask over `0..n`.
    pub fn mask(&self, n: usize) -> Result<Vec<bool>, GraphError> {
        let mut mask = vec![false; n];
        for v in self.iter() {
            if v >= n {
                return Err(GraphError::IndexOutOfRange { vertex: v, n });
            }
            mask[v] = true;
        }
        Ok(mask)
    }

    /// Symmetric difference; switching by `a` then `b` equals switching by `a ^ b`.
    pub fn symmetric_difference(&self, other: &SwitchingSet) -> SwitchingSet {
        SwitchingSet(self.0.symmetric_difference(&other.0).copied().collect())
    }
}

impl FromIterator<usize> for SwitchingSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        SwitchingSet(iter.into_iter().collect())
    }
}

/// A simple undirected graph with a sign on every edge.
///
/// Vertices are `0..n`. Adjacency lists are kept sorted by neighbour so the
/// derived equality is edge-for-edge equality of signed graphs. Values are
/// immutable; every operation returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    adj: Vec<Vec<(usize, Sign)>>,
    m: usize,
}

impl SignedGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v, s) in edges {
            check_pair(n, u, v)?;
            adj[u].push((v, s));
            adj[v].push((u, s));
            m += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable_by_key(|&(v, _)| v);
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(GraphError::DuplicateEdge(u.min(w[0].0), u.max(w[0].0)));
            }
        }
        Ok(SignedGraph { adj, m })
    }

    pub fn edgeless(n: usize) -> Self {
        SignedGraph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Signs every edge of `g` with `sign`.
    pub fn uniform(g: &Graph, sign: Sign) -> Self {
        Self::from_graph_with(g, |_, _| sign)
    }

    pub fn from_graph_with<F>(g: &Graph, mut sign: F) -> Self
    where
        F: FnMut(usize, usize) -> Sign,
    {
        let edges: Vec<_> = g.edges().map(|(u, v)| (u, v, sign(u, v))).collect();
        SignedGraph::new(g.n(), edges).expect("graph is simple")
    }

    /// `(K_n, sign)`.
    pub fn complete(n: usize, sign: Sign) -> Self {
        Self::uniform(&Graph::complete(n), sign)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        let list = self.adj.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.sign(u, v).is_some()
    }

    /// Edges `(u, v, sign)` with `u < v`, sorted by `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&(v, _)| v > u)
                .map(move |&(v, s)| (u, v, s))
        })
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges().filter(|e| e.2.is_negative()).count()
    }

    pub fn underlying(&self) -> Graph {
        Graph::new(self.n(), self.edges().map(|(u, v, _)| (u, v))).expect("simple")
    }

    /// The graph on the same vertices formed by the negative edges.
    pub fn negative_subgraph(&self) -> Graph {
        Graph::new(
            self.n(),
            self.edges().filter(|e| e.2.is_negative()).map(|(u, v, _)| (u, v)),
        )
        .expect("simple")
    }

    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n() == other.n()
            && self.m == other.m
            && self
                .adj
                .iter()
                .zip(&other.adj)
                .all(|(a, b)| a.iter().map(|e| e.0).eq(b.iter().map(|e| e.0)))
    }

    /// Flips every edge with exactly one endpoint in `w`.
    pub fn switch(&self, w: &SwitchingSet) -> Result<SignedGraph, GraphError> {
        let mask = w.mask(self.n())?;
        Ok(self.switch_mask(&mask))
    }

    pub(crate) fn switch_mask(&self, mask: &[bool]) -> SignedGraph {
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, list)| {
                list.iter()
                    .map(|&(v, s)| if mask[u] != mask[v] { (v, -s) } else { (v, s) })
                    .collect()
            })
            .collect();
        SignedGraph { adj, m: self.m }
    }

    /// Sign of a closed walk given as a vertex sequence whose first and last
    /// entries coincide; edges are counted with multiplicity.
    pub fn sign_of_closed_walk(&self, walk: &[usize]) -> Result<Sign, GraphError> {
        let (first, last) = match (walk.first(), walk.last()) {
            (Some(&f), Some(&l)) => (f, l),
            _ => return Err(GraphError::NotAWalk("empty sequence".into())),
        };
        if first != last {
            return Err(GraphError::NotAWalk(format!("{first} != {last}")));
        }
        let mut sign = Sign::Positive;
        for pair in walk.windows(2) {
            match self.sign(pair[0], pair[1]) {
                Some(s) => sign = sign * s,
                None => {
                    return Err(GraphError::NotAWalk(format!(
                        "{} and {} are not adjacent",
                        pair[0], pair[1]
                    )))
                }
            }
        }
        Ok(sign)
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<SignedGraph, GraphError> {
        let n = self.n();
        let mut index = vec![usize::MAX; n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(GraphError::IndexOutOfRange { vertex: v, n });
            }
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut m = 0;
        for (i, &v) in vertices.iter().enumerate() {
            for &(w, s) in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX {
                    adj[i].push((j, s));
                    if j > i {
                        m += 1;
                    }
                }
            }
            adj[i].sort_unstable_by_key(|e| e.0);
        }
        Ok(SignedGraph { adj, m })
    }

    /// Vertex-disjoint union `self + other`; `other` is shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        self.full_join_impl(other, None::<fn(usize, usize) -> Sign>)
    }

    /// Full join `self ⋈ other`: every cross pair `(u in self, v in other)` is
    /// added with sign `join_sign(u, v)` (indices local to each side).
    pub fn full_join<F>(&self, other: &SignedGraph, join_sign: F) -> SignedGraph
    where
        F: FnMut(usize, usize) -> Sign,
    {
        self.full_join_impl(other, Some(join_sign))
    }

    /// Full join with all cross edges positive.
    pub fn full_join_positive(&self, other: &SignedGraph) -> SignedGraph {
        self.full_join(other, |_, _| Sign::Positive)
    }

    fn full_join_impl<F>(&self, other: &SignedGraph, join_sign: Option<F>) -> SignedGraph
    where
        F: FnMut(usize, usize) -> Sign,
    {
        let off = self.n();
        let mut edges: Vec<_> = self
            .edges()
            .chain(other.edges().map(|(u, v, s)| (u + off, v + off, s)))
            .collect();
        if let Some(mut f) = join_sign {
            for u in 0..self.n() {
                for v in 0..other.n() {
                    edges.push((u, v + off, f(u, v)));
                }
            }
        }
        SignedGraph::new(off + other.n(), edges).expect("disjoint sides")
    }

    /// `(G, σ)*`: a new vertex `n` joined to every vertex by a positive edge.
    pub fn add_universal_positive(&self) -> SignedGraph {
        self.full_join_positive(&SignedGraph::edgeless(1))
    }

    /// Switches at every negative neighbour of `u`, so all edges at `u` become
    /// positive. Returns the switched graph and the switching set used.
    pub fn normalize_star(&self, u: usize) -> Result<(SignedGraph, SwitchingSet), GraphError> {
        if u >= self.n() {
            return Err(GraphError::IndexOutOfRange { vertex: u, n: self.n() });
        }
        let w: SwitchingSet = self.adj[u]
            .iter()
            .filter(|e| e.1.is_negative())
            .map(|e| e.0)
            .collect();
        Ok((self.switch(&w)?, w))
    }
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph(n={}; ", self.n())?;
        for (i, (u, v, s)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}{s}{v}")?;
        }
        write!(f, ")")
    }
}
