//! Balance certificates and switching equivalence.
//!
//! A signed graph is balanced when every cycle is positive, equivalently when
//! some switching makes every edge positive, equivalently when the negative
//! edges form an edge cut. The test here assigns each vertex a potential by
//! BFS over a spanning forest; an edge whose sign disagrees with the product of
//! its endpoint potentials closes a negative fundamental cycle.

use std::collections::VecDeque;

use crate::error::GraphError;
use crate::sign::Sign;
use crate::signed::{SignedGraph, SwitchingSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BalanceCertificate {
    /// Switching this set makes every edge positive. Per connected component
    /// the lowest-index vertex is never in the set.
    Balanced(SwitchingSet),
    /// A cycle `c[0] - c[1] - ... - c[k-1] - c[0]` with negative sign.
    Unbalanced(Vec<usize>),
}

impl BalanceCertificate {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceCertificate::Balanced(_))
    }

    /// Re-checks the certificate against `g` from scratch.
    pub fn verify(&self, g: &SignedGraph) -> bool {
        match self {
            BalanceCertificate::Balanced(w) => match g.switch(w) {
                Ok(h) => h.edges().all(|e| e.2.is_positive()),
                Err(_) => false,
            },
            BalanceCertificate::Unbalanced(cycle) => {
                if cycle.len() < 3 {
                    return false;
                }
                let mut sorted = cycle.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != cycle.len() {
                    return false;
                }
                let mut walk = cycle.clone();
                walk.push(cycle[0]);
                g.sign_of_closed_walk(&walk) == Ok(Sign::Negative)
            }
        }
    }
}

/// Balance test with a certificate either way.
///
/// BFS runs from the lowest-index vertex of each component, neighbours in
/// ascending order. The negative-cycle witness is the fundamental cycle of the
/// first violated non-tree edge met in discovery order.
pub fn is_balanced(g: &SignedGraph) -> BalanceCertificate {
    let n = g.n();
    let mut potential: Vec<Option<Sign>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if potential[root].is_some() {
            continue;
        }
        potential[root] = Some(Sign::Positive);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let pu = potential[u].expect("visited");
            for &(v, s) in g.neighbors(u) {
                match potential[v] {
                    None => {
                        potential[v] = Some(pu * s);
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(pv) => {
                        if pu * pv != s {
                            return BalanceCertificate::Unbalanced(fundamental_cycle(
                                &parent, &depth, u, v,
                            ));
                        }
                    }
                }
            }
        }
    }
    BalanceCertificate::Balanced(
        (0..n)
            .filter(|&v| potential[v] == Some(Sign::Negative))
            .collect(),
    )
}

fn fundamental_cycle(parent: &[usize], depth: &[usize], u: usize, v: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        left.push(a);
        a = parent[a];
    }
    while depth[b] > depth[a] {
        right.push(b);
        b = parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a];
        b = parent[b];
    }
    left.push(a);
    left.extend(right.into_iter().rev());
    left
}

/// Is the subgraph induced by `set` balanced?
pub fn is_balanced_set(g: &SignedGraph, set: &[usize]) -> Result<bool, GraphError> {
    Ok(is_balanced(&g.induced(set)?).is_balanced())
}

/// Finds `W` with `switch(g1, W) == g2`, or `None` when the signatures are
/// not switching equivalent. Both graphs must share the underlying graph.
pub fn switching_equivalent(
    g1: &SignedGraph,
    g2: &SignedGraph,
) -> Result<Option<SwitchingSet>, GraphError> {
    if !g1.same_underlying(g2) {
        return Err(GraphError::UnderlyingMismatch);
    }
    let product = SignedGraph::new(
        g1.n(),
        g1.edges()
            .map(|(u, v, s)| (u, v, s * g2.sign(u, v).expect("same underlying"))),
    )?;
    Ok(match is_balanced(&product) {
        BalanceCertificate::Balanced(w) => Some(w),
        BalanceCertificate::Unbalanced(_) => None,
    })
}
