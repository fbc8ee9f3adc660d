use rand::Rng;
use rayon::prelude::*;
use sgraph::detect::{in_forb_class, ForbSpec};
use sgraph::enumerate::signed_graphs;
use sgraph::{is_balanced, switching_equivalent, BalanceCertificate, Sign, SignedGraph, SwitchingSet};

use super::{instance_rng, HarnessError, Params, Rows};
use crate::report::Row;

pub(super) fn prop26_equivalence(p: &mut Params, _seed: u64, rows: &mut Rows) -> Result<(), HarnessError> {
    let n_max: usize = p.get("n_max", 6)?;
    let k_max: usize = p.get("k_max", 7)?;
    let mut id = 0;
    for n in 1..=n_max.min(6) {
        let all = signed_graphs(n);
        for k in 4..=k_max {
            let bad: Vec<&SignedGraph> = all
                .par_iter()
                .filter(|g| {
                    let lhs = in_forb_class(&g.add_universal_positive(), &ForbSpec::neg_k4_with_path(k)).is_member();
                    let rhs = in_forb_class(g, &ForbSpec::exact_cliques_with_path(k)).is_member();
                    lhs != rhs
                })
                .collect();
            let witness = bad.first().map_or_else(|| SignedGraph::edgeless(n), |g| (*g).clone());
            rows.push(Row::new(id, &witness, "exceptions", bad.len() as i64, "= 0", bad.is_empty(), || {
                format!("k={k} graphs={}", all.len())
            }));
            id += 1;
        }
    }
    Ok(())
}

fn set_of(mask: u32, n: usize) -> SwitchingSet {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Simple cycles with at most `max_len` vertices, each once.
fn cycles(g: &SignedGraph, max_len: usize) -> Vec<Vec<usize>> {
    fn extend(g: &SignedGraph, max_len: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let (start, last) = (path[0], path[path.len() - 1]);
        for &(w, _) in g.neighbors(last) {
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            if w > start && !on[w] && path.len() < max_len {
                on[w] = true;
                path.push(w);
                extend(g, max_len, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        let mut on = vec![false; g.n()];
        on[s] = true;
        extend(g, max_len, &mut vec![s], &mut on, &mut out);
    }
    out
}

fn closed(c: &[usize]) -> Vec<usize> {
    let mut w = c.to_vec();
    w.push(c[0]);
    w
}

/// Failures per property: involution, cycle signs, equivalence witness,
/// balance certificate.
#[derive(Clone, Copy, Default)]
struct Tally([usize; 4]);

impl std::ops::Add for Tally {
    type Output = Tally;
    fn add(self, o: Tally) -> Tally {
        Tally(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

const PROPERTIES: [&str; 4] = ["involution", "cycle_sign_invariance", "equivalence_soundness", "certificate_soundness"];

/// Some bipartition carries exactly the negative edges.
fn negative_cut(g: &SignedGraph) -> bool {
    (0u32..1 << g.n()).any(|m| g.edges().all(|(u, v, s)| ((m >> u ^ m >> v) & 1 == 1) == s.is_negative()))
}

fn check(g: &SignedGraph, masks: &[u32], other: &SignedGraph) -> Tally {
    let mut t = Tally::default();
    let n = g.n();
    let cyc = cycles(g, if n <= 6 { n } else { 5 });
    for &mask in masks {
        let w = set_of(mask, n);
        let h = g.switch(&w).expect("mask within range");
        if h.switch(&w).ok().as_ref() != Some(g) {
            t.0[0] += 1;
        }
        if cyc.iter().any(|c| g.sign_of_closed_walk(&closed(c)).ok() != h.sign_of_closed_walk(&closed(c)).ok()) {
            t.0[1] += 1;
        }
        for target in [&h, other] {
            let ok = match switching_equivalent(g, target) {
                Ok(Some(x)) => g.switch(&x).ok().as_ref() == Some(target),
                Ok(None) => {
                    let product = SignedGraph::new(
                        n,
                        g.edges().map(|(u, v, s)| (u, v, s * target.sign(u, v).expect("same underlying"))),
                    )
                    .expect("same edges");
                    n > 12 || !negative_cut(&product)
                }
                Err(_) => false,
            };
            if !ok {
                t.0[2] += 1;
            }
        }
    }
    let cert = is_balanced(g);
    let sound = cert.verify(g)
        && match &cert {
            BalanceCertificate::Balanced(_) => negative_cut(g),
            BalanceCertificate::Unbalanced(c) => {
                let neg = (0..c.len()).filter(|&i| g.sign(c[i], c[(i + 1) % c.len()]) == Some(Sign::Negative)).count();
                let edges = (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]));
                edges && neg % 2 == 1
            }
        };
    if !sound || cert.is_balanced() != negative_cut(g) {
        t.0[3] += 1;
    }
    t
}

fn resign(g: &SignedGraph, bits: u64) -> SignedGraph {
    let edges = g.edges().enumerate().map(|(i, (u, v, _))| {
        (u, v, if bits >> (i % 64) & 1 == 1 { Sign::Negative } else { Sign::Positive })
    });
    SignedGraph::new(g.n(), edges).expect("same edges")
}

pub(super) fn switching_algebra(p: &mut Params, seed: u64, rows: &mut Rows) -> Result<(), HarnessError> {
    let n_exhaustive: usize = p.get("n_exhaustive", 6)?;
    let samples: usize = p.get("samples", 1000)?;
    let n_max: usize = p.get("n_max", 12)?;
    let exhaustive: Vec<SignedGraph> = (1..=n_exhaustive.min(7)).flat_map(signed_graphs).collect();
    let tally = exhaustive
        .par_iter()
        .map(|g| {
            let masks: Vec<u32> = (0..1u32 << g.n()).collect();
            check(g, &masks, &resign(g, 0x5555_5555_5555_5555))
        })
        .reduce(Tally::default, |a, b| a + b);
    let random = (0..samples)
        .into_par_iter()
        .map(|id| {
            let mut r = instance_rng(seed, id);
            let n = r.gen_range(1..=n_max);
            let density = r.gen_range(0.1..0.9);
            let neg = r.gen_range(0.0..=1.0);
            let g = sgraph::gen::random_signed_graph(n, density, neg, &mut r).expect("valid probabilities");
            let mask = r.gen_range(0..1u32 << n);
            check(&g, &[mask], &resign(&g, r.gen()))
        })
        .reduce(Tally::default, |a, b| a + b);
    let empty = SignedGraph::edgeless(0);
    for (i, name) in PROPERTIES.iter().enumerate() {
        for (j, (scope, t)) in [("exhaustive", tally), ("random", random)].into_iter().enumerate() {
            let bad = t.0[i];
            rows.push(Row::new(2 * i + j, &empty, &format!("{name}_{scope}_failures"), bad as i64, "= 0", bad == 0, || {
                format!("rerun with seed={seed}")
            }));
        }
    }
    Ok(())
}
