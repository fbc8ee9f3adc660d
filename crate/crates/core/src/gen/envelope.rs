use crate::color::chi_exact;
use crate::detect::{in_forb_class, ForbSpec};
use crate::graph::Graph;
use crate::sign::Sign;
use crate::signed::SignedGraph;

/// A signed graph whose negative edges form the 5-cycle `v0 v1 v2 v3 v4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeCandidate {
    pub graph: SignedGraph,
    pub cycle: [usize; 5],
}

/// The properties an envelope must have, in the order they are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnvelopeDefect {
    /// Not in `Forb{(K3, -), (K4, M), P4}`.
    NotInClass,
    /// The negative edges are not exactly the designated 5-cycle.
    NegativeNotC5,
    /// Some triangle has exactly two positive edges.
    TwoPositiveTriangle,
    /// The negative subgraph is not 3-chromatic.
    NotThreeChromatic,
    /// Gluing onto `X, Y, Z` would break the class: a positive edge between
    /// cycle vertices joins different groups (`{v0}`, `{v1, v3}`, `{v2, v4}`).
    NotJoinCompatible,
}

/// The group (`X = 0`, `Y = 1`, `Z = 2`) a cycle position is glued to.
pub(crate) const GROUP: [usize; 5] = [0, 1, 2, 1, 2];

impl EnvelopeCandidate {
    pub fn defects(&self) -> Vec<EnvelopeDefect> {
        let g = &self.graph;
        let mut out = Vec::new();
        if !in_forb_class(g, &ForbSpec::p4_class()).is_member() {
            out.push(EnvelopeDefect::NotInClass);
        }
        let c = self.cycle;
        let mut distinct = c.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let on_cycle = distinct.len() == 5
            && c.iter().all(|&v| v < g.n())
            && (0..5).all(|i| g.sign(c[i], c[(i + 1) % 5]) == Some(Sign::Negative));
        if !on_cycle || g.negative_edge_count() != 5 {
            out.push(EnvelopeDefect::NegativeNotC5);
        }
        if has_two_positive_triangle(g) {
            out.push(EnvelopeDefect::TwoPositiveTriangle);
        }
        if chi_exact(&g.negative_subgraph(), None).map(|r| r.0) != Ok(3) {
            out.push(EnvelopeDefect::NotThreeChromatic);
        }
        if on_cycle && !self.is_join_compatible() {
            out.push(EnvelopeDefect::NotJoinCompatible);
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.defects().is_empty()
    }

    /// Positive edges between cycle vertices stay inside `{v1, v3}` or `{v2, v4}`.
    pub fn is_join_compatible(&self) -> bool {
        let c = self.cycle;
        (0..5).all(|i| (i + 1..5).all(|j| GROUP[i] == GROUP[j] || self.graph.sign(c[i], c[j]) != Some(Sign::Positive)))
    }

    /// The smallest envelope found by [`find_envelope`].
    pub fn smallest() -> Self {
        find_envelope(5).expect("a 5-vertex envelope exists")
    }
}

fn has_two_positive_triangle(g: &SignedGraph) -> bool {
    (0..g.n()).any(|u| {
        let nb = g.neighbors(u);
        nb.iter().enumerate().any(|(i, &(v, s1))| {
            v > u
                && nb[i + 1..].iter().any(|&(w, s2)| {
                    g.sign(v, w).is_some_and(|s3| [s1, s2, s3].iter().filter(|s| s.is_positive()).count() == 2)
                })
        })
    })
}

/// Rotations and reflections of `0 1 2 3 4`.
fn dihedral() -> impl Iterator<Item = [usize; 5]> {
    (0..5).flat_map(|r| {
        [false, true].into_iter().map(move |flip| {
            std::array::from_fn(|i| if flip { (r + 5 - i) % 5 } else { (r + i) % 5 })
        })
    })
}

/// Searches signed graphs on `5..=max_n` vertices for the smallest valid
/// envelope. Vertices `0..5` carry the negative cycle in order; the positive
/// edges range over the remaining pairs, smallest edge mask first, and the
/// cycle labelling over its dihedral relabellings.
pub fn find_envelope(max_n: usize) -> Option<EnvelopeCandidate> {
    for n in 5..=max_n {
        let cycle = Graph::cycle(5);
        let free: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !(v < 5 && cycle.has_edge(u, v)))
            .collect();
        if free.len() >= 32 {
            // beyond any desk-scale budget
            return None;
        }
        for mask in 0u64..1 << free.len() {
            let pos = free
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &(u, v))| (u, v, Sign::Positive));
            let neg = cycle.edges().map(|(u, v)| (u, v, Sign::Negative));
            let graph = SignedGraph::new(n, neg.chain(pos)).expect("distinct pairs");
            for order in dihedral() {
                let cand = EnvelopeCandidate { graph: graph.clone(), cycle: order };
                if cand.is_valid() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn too_small_for_a_cycle() {
        assert_eq!(find_envelope(4), None);
    }

    #[test]
    fn plain_negative_c5_is_not_a_cograph() {
        let cand = EnvelopeCandidate {
            graph: SignedGraph::uniform(&Graph::cycle(5), Sign::Negative),
            cycle: [0, 1, 2, 3, 4],
        };
        assert_eq!(cand.defects(), vec![EnvelopeDefect::NotInClass]);
    }

    #[test]
    fn smallest_envelope() {
        let env = find_envelope(9).unwrap();
        assert_eq!(env.graph.n(), 5);
        assert_eq!(env.graph.m(), 7);
        assert!(env.is_valid());
        // relabelled: chords v1v3 and v2v4
        let c = env.cycle;
        assert_eq!(env.graph.sign(c[1], c[3]), Some(Sign::Positive));
        assert_eq!(env.graph.sign(c[2], c[4]), Some(Sign::Positive));
    }
}
