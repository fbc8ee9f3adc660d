use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GenError;
use crate::graph::Graph;
use crate::sign::Sign;
use crate::signed::SignedGraph;

pub type SgRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SgRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_prob(name: &str, p: f64) -> Result<(), GenError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenError::BadParams(format!("{name} must lie in [0, 1], got {p}")))
    }
}

/// `G(n, p)`; edges are drawn in lexicographic pair order.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph, GenError> {
    check_prob("edge density", p)?;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// `G(n, p)` with each edge negative with probability `neg`.
pub fn random_signed_graph<R: Rng>(n: usize, p: f64, neg: f64, rng: &mut R) -> Result<SignedGraph, GenError> {
    check_prob("negative fraction", neg)?;
    let g = random_graph(n, p, rng)?;
    Ok(SignedGraph::from_graph_with(&g, |_, _| {
        if rng.gen_bool(neg) {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }))
}

/// A connected signed graph without negative triangles: a random tree plus
/// `G(n, p)` edges, signed by random vertex potentials (hence balanced), then
/// each edge in turn is flipped with probability 1/2 unless that closes a
/// negative triangle.
pub fn random_k3free_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<SignedGraph, GenError> {
    check_prob("edge density", p)?;
    let mut adj = vec![vec![false; n]; n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        adj[u][v] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                adj[u][v] = true;
            }
        }
    }
    let pot: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    // sign[u][v] for u < v: true = negative
    let mut neg = vec![vec![false; n]; n];
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u][v] {
                neg[u][v] = pot[u] != pot[v];
                pairs.push((u, v));
            }
        }
    }
    let edge = |a: usize, b: usize| adj[a.min(b)][a.max(b)];
    for &(u, v) in &pairs {
        if !rng.gen_bool(0.5) {
            continue;
        }
        let flipped = !neg[u][v];
        let ok = (0..n).filter(|&w| w != u && w != v && edge(u, w) && edge(v, w)).all(|w| {
            let negs = [flipped, neg[u.min(w)][u.max(w)], neg[v.min(w)][v.max(w)]];
            negs.iter().filter(|&&x| x).count() % 2 == 0
        });
        if ok {
            neg[u][v] = flipped;
        }
    }
    let edges = pairs.into_iter().map(|(u, v)| (u, v, if neg[u][v] { Sign::Negative } else { Sign::Positive }));
    Ok(SignedGraph::new(n, edges)?)
}

/// A shortest cycle through `src`'s BFS tree: the shortest cycle of the graph
/// is found by running this from every vertex.
fn shortest_cycle_from(g: &Graph, src: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    let mut best: Option<(usize, usize, usize)> = None;
    while let Some(u) = queue.pop_front() {
        if best.is_some_and(|(len, _, _)| 2 * dist[u] + 1 >= len) {
            break;
        }
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if parent[u] != w {
                let len = dist[u] + dist[w] + 1;
                if best.is_none_or(|(b, _, _)| len < b) {
                    best = Some((len, u, w));
                }
            }
        }
    }
    let (_, a, b) = best?;
    let climb = |mut x: usize| {
        let mut up = vec![x];
        while x != src {
            x = parent[x];
            up.push(x);
        }
        up
    };
    let (pa, pb) = (climb(a), climb(b));
    // the BFS cycle may close above src; trim the shared tail
    let shared = pa.iter().rev().zip(pb.iter().rev()).take_while(|(x, y)| x == y).count();
    let mut cycle: Vec<usize> = pa[..pa.len() - shared + 1].to_vec();
    cycle.extend(pb[..pb.len() - shared].iter().rev());
    Some(cycle)
}

/// A shortest cycle as a vertex sequence, or `None` for a forest.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    (0..g.n())
        .filter_map(|v| shortest_cycle_from(g, v))
        .min_by_key(|c| c.len())
}

/// Length of a shortest cycle, `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    shortest_cycle(g).map(|c| c.len())
}

/// `G(n, p)` with short cycles broken: while a cycle shorter than `girth`
/// exists, the lowest edge of a shortest one is deleted.
pub fn random_girth_graph(n: usize, girth_min: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if girth_min < 3 {
        return Err(GenError::BadParams(format!("girth must be at least 3, got {girth_min}")));
    }
    let mut g = random_graph(n, p, &mut rng(seed))?;
    while let Some(cycle) = shortest_cycle(&g).filter(|c| c.len() < girth_min) {
        let lowest = (0..cycle.len())
            .map(|i| {
                let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                (a.min(b), a.max(b))
            })
            .min()
            .expect("cycles have edges");
        g = Graph::new(n, g.edges().filter(|&e| e != lowest))?;
    }
    Ok(g)
}
