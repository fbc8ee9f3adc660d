use rand::seq::SliceRandom;
use rand::Rng;

use crate::detect::{in_forb_class, ForbSpec};
use crate::error::GenError;
use crate::sign::Sign;
use crate::signed::SignedGraph;

use super::random::rng;

const ATTEMPTS: usize = 1000;

/// Edges of a random cograph on `vertices`: the set is split at a random
/// point, the two halves are built recursively and then either left apart or
/// fully joined.
fn random_cograph_edges<R: Rng>(vertices: &[usize], rng: &mut R, out: &mut Vec<(usize, usize)>) {
    if vertices.len() < 2 {
        return;
    }
    let cut = rng.gen_range(1..vertices.len());
    let (left, right) = vertices.split_at(cut);
    random_cograph_edges(left, rng, out);
    random_cograph_edges(right, rng, out);
    if rng.gen_bool(0.5) {
        out.extend(left.iter().flat_map(|&a| right.iter().map(move |&b| (a.min(b), a.max(b)))));
    }
}

/// Signs the cograph edges: in random order each edge turns negative with
/// probability `neg` unless that would close an all-negative triangle or a
/// `(K4, M)` through it.
fn random_signature<R: Rng>(n: usize, edges: &mut [(usize, usize)], neg: f64, rng: &mut R) -> SignedGraph {
    // 0 = no edge, 1 = positive, 2 = negative
    let mut s = vec![0u8; n * n];
    for &(u, v) in edges.iter() {
        s[u * n + v] = 1;
        s[v * n + u] = 1;
    }
    edges.shuffle(rng);
    for &(u, v) in edges.iter() {
        if !rng.gen_bool(neg) {
            continue;
        }
        let common: Vec<usize> = (0..n).filter(|&w| s[u * n + w] > 0 && s[v * n + w] > 0).collect();
        let triangle = common.iter().any(|&w| s[u * n + w] == 2 && s[v * n + w] == 2);
        let matching = || {
            common.iter().enumerate().any(|(i, &x)| {
                common[i + 1..].iter().any(|&y| {
                    s[x * n + y] == 2 && [u, v].iter().all(|&a| s[a * n + x] == 1 && s[a * n + y] == 1)
                })
            })
        };
        if !triangle && !matching() {
            s[u * n + v] = 2;
            s[v * n + u] = 2;
        }
    }
    let signed = edges.iter().map(|&(u, v)| {
        let sign = if s[u * n + v] == 2 { Sign::Negative } else { Sign::Positive };
        (u, v, sign)
    });
    SignedGraph::new(n, signed).expect("cograph edges are simple")
}

/// A random member of `Forb{(K3, -), (K4, M), P4}` on `n` vertices: a random
/// cograph with a random signature, re-sampled until the class check passes.
pub fn sample_p4class_member(n: usize, seed: u64) -> Result<SignedGraph, GenError> {
    if n == 0 {
        return Err(GenError::BadParams("need at least one vertex".into()));
    }
    let mut rng = rng(seed);
    let spec = ForbSpec::p4_class();
    for _ in 0..ATTEMPTS {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut edges = Vec::new();
        random_cograph_edges(&order, &mut rng, &mut edges);
        let neg = rng.gen_range(0.1..0.9);
        let g = random_signature(n, &mut edges, neg, &mut rng);
        if in_forb_class(&g, &spec).is_member() {
            return Ok(g);
        }
    }
    Err(GenError::SamplingExhausted(ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::is_cograph;

    #[test]
    fn samples_are_members_and_reproducible() {
        let spec = ForbSpec::p4_class();
        let mut negatives = 0;
        for seed in 0..30 {
            let g = sample_p4class_member(12, seed).unwrap();
            assert!(is_cograph(&g.underlying()));
            assert!(in_forb_class(&g, &spec).is_member());
            assert_eq!(g, sample_p4class_member(12, seed).unwrap());
            negatives += g.negative_edge_count();
        }
        assert!(negatives > 0);
        assert!(sample_p4class_member(0, 0).is_err());
    }
}
