//! Exhaustive enumeration of small graphs and signed graphs up to isomorphism.
//!
//! Graphs are encoded as bit masks over the pairs `(u, v)`, `u < v`, in
//! lexicographic order; the canonical form is the smallest mask over all
//! vertex permutations.

use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::sign::Sign;
use crate::signed::SignedGraph;

/// Largest order supported (pair masks must fit in 32 bits).
pub const MAX_N: usize = 8;

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = (u.min(v), u.max(v));
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// `table[perm][pair]` is the index of the image of `pair` under `perm`.
fn image_table(n: usize, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let ps = pairs(n);
    perms
        .iter()
        .map(|p| ps.iter().map(|&(u, v)| pair_index(n, p[u], p[v])).collect())
        .collect()
}

fn apply(mask: u32, image: &[usize]) -> u32 {
    image
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .fold(0, |acc, (_, &j)| acc | 1 << j)
}

fn to_graph(n: usize, mask: u32) -> Graph {
    let edges = pairs(n).into_iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, e)| e);
    Graph::new(n, edges).expect("pairs are distinct")
}

fn graph_mask(g: &Graph) -> u32 {
    g.edges().fold(0, |acc, (u, v)| acc | 1 << pair_index(g.n(), u, v))
}

/// One canonical representative of every graph on `n` vertices, by
/// increasing canonical mask.
pub fn graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_N, "enumeration supports n <= {MAX_N}");
    let table = image_table(n, &permutations(n));
    let canon = |mask: u32| table.iter().map(|img| apply(mask, img)).min().expect("a permutation exists");
    let masks: BTreeSet<u32> = if n < 2 {
        BTreeSet::from([0])
    } else {
        // every graph arises from one on n - 1 vertices plus a last vertex
        graphs(n - 1)
            .iter()
            .flat_map(|h| {
                let base: u32 = h.edges().fold(0, |acc, (u, v)| acc | 1 << pair_index(n, u, v));
                (0u32..1 << (n - 1)).map(move |nb| {
                    (0..n - 1).filter(|&u| nb >> u & 1 == 1).fold(base, |acc, u| acc | 1 << pair_index(n, u, n - 1))
                })
            })
            .map(canon)
            .collect()
    };
    masks.into_iter().map(|m| to_graph(n, m)).collect()
}

/// All `2^m` signatures of `g`; the `i`-th edge is negative when bit `i` is set.
pub fn signatures(g: &Graph) -> impl Iterator<Item = SignedGraph> + '_ {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() < 32, "too many edges to enumerate signatures");
    (0u32..1 << edges.len()).map(move |bits| {
        let signed = edges.iter().enumerate().map(|(i, &(u, v))| {
            let s = if bits >> i & 1 == 1 { Sign::Negative } else { Sign::Positive };
            (u, v, s)
        });
        SignedGraph::new(g.n(), signed).expect("edges are distinct")
    })
}

/// Signatures of `g` up to automorphisms of `g`: one representative per
/// orbit, the one with the smallest negative-edge mask.
pub fn signatures_up_to_iso(g: &Graph) -> Vec<SignedGraph> {
    let n = g.n();
    let mask = graph_mask(g);
    let perms = permutations(n);
    let table = image_table(n, &perms);
    let autos: Vec<&Vec<usize>> = table.iter().filter(|img| apply(mask, img) == mask).collect();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let edge_bits: Vec<usize> = edges.iter().map(|&(u, v)| pair_index(n, u, v)).collect();
    let mut reps = BTreeSet::new();
    for bits in 0u32..1 << edges.len() {
        let neg = edge_bits.iter().enumerate().filter(|&(i, _)| bits >> i & 1 == 1).fold(0u32, |a, (_, &j)| a | 1 << j);
        reps.insert(autos.iter().map(|img| apply(neg, img)).min().expect("identity is an automorphism"));
    }
    reps.into_iter()
        .map(|neg| {
            let signed = edges.iter().map(|&(u, v)| {
                let s = if neg >> pair_index(n, u, v) & 1 == 1 { Sign::Negative } else { Sign::Positive };
                (u, v, s)
            });
            SignedGraph::new(n, signed).expect("edges are distinct")
        })
        .collect()
}

/// Every signed graph on `n` vertices up to isomorphism.
pub fn signed_graphs(n: usize) -> Vec<SignedGraph> {
    graphs(n).iter().flat_map(signatures_up_to_iso).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_unlabelled_graphs() {
        // OEIS A000088
        let counts: Vec<usize> = (0..=6).map(|n| graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn counts_of_signed_graphs() {
        // OEIS A004102 (graphs with edges in two colours)
        let counts: Vec<usize> = (1..=5).map(|n| signed_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 10, 66, 792]);
    }

    #[test]
    fn signatures_are_all_distinct() {
        let k4 = Graph::complete(4);
        let all: BTreeSet<Vec<(usize, usize, Sign)>> = signatures(&k4).map(|s| s.edges().collect()).collect();
        assert_eq!(all.len(), 64);
    }
}
