//! Direct checks for the two clique patterns that come up everywhere.

use crate::signed::SignedGraph;

use super::matcher::embedding_from_map;
use super::pattern::{Embedding, Pattern};

/// First triangle `a < b < c` (lexicographic) whose sign product is negative.
pub fn neg_triangle_vertices(g: &SignedGraph) -> Option<[usize; 3]> {
    for a in 0..g.n() {
        let up: Vec<_> = g.neighbors(a).iter().filter(|e| e.0 > a).collect();
        for (i, &&(b, sab)) in up.iter().enumerate() {
            for &&(c, sac) in &up[i + 1..] {
                if let Some(sbc) = g.sign(b, c) {
                    if (sab * sac * sbc).is_negative() {
                        return Some([a, b, c]);
                    }
                }
            }
        }
    }
    None
}

/// First `K4` (lexicographic) all four of whose triangles are negative. On
/// `K4` the triangle signs determine the switching class, so this is exactly
/// an induced `(K4, -)` up to switching.
pub fn neg_k4_vertices(g: &SignedGraph) -> Option<[usize; 4]> {
    let neg = |x: usize, y: usize, z: usize| {
        matches!(
            (g.sign(x, y), g.sign(x, z), g.sign(y, z)),
            (Some(p), Some(q), Some(r)) if (p * q * r).is_negative()
        )
    };
    for a in 0..g.n() {
        let up: Vec<usize> = g.neighbors(a).iter().map(|e| e.0).filter(|&v| v > a).collect();
        for (i, &b) in up.iter().enumerate() {
            for (j, &c) in up.iter().enumerate().skip(i + 1) {
                if !neg(a, b, c) {
                    continue;
                }
                for &d in &up[j + 1..] {
                    if neg(a, b, d) && neg(a, c, d) && neg(b, c, d) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// A negative triangle as an embedding of [`Pattern::neg_k3`].
pub fn has_neg_triangle(g: &SignedGraph) -> Option<Embedding> {
    let t = neg_triangle_vertices(g)?;
    embedding_from_map(g, &Pattern::neg_k3(), t.to_vec())
}

/// An induced `(K4, -)` up to switching as an embedding of [`Pattern::neg_k4`].
pub fn has_neg_k4(g: &SignedGraph) -> Option<Embedding> {
    let q = neg_k4_vertices(g)?;
    embedding_from_map(g, &Pattern::neg_k4(), q.to_vec())
}
