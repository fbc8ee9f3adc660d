use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use sgraph::color::{chi_exact, validate_proper, Coloring};
use sgraph::detect::{find_induced, has_neg_triangle, in_forb_class, ForbSpec, Pattern};
use sgraph::gen::*;
use sgraph::{is_balanced, Graph, Sign, SignedGraph};

/// Increasing `k`-sequences over `1..=n`, lexicographic.
fn sequences(k: usize, n: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for s in sequences(k - 1, n) {
        let lo = s.last().map_or(1, |&x| x + 1);
        for x in lo..=n {
            let mut t = s.clone();
            t.push(x);
            out.push(t);
        }
    }
    out.sort();
    out
}

fn is_shift(a: &[usize], b: &[usize]) -> bool {
    a[1..] == b[..b.len() - 1]
}

#[test]
fn shift_graphs_match_definition() {
    for n in 1..=7 {
        for k in 1..=n {
            let g = gen_shift(k, n).unwrap();
            let seqs = sequences(k, n);
            assert_eq!(g.n(), seqs.len());
            for i in 0..seqs.len() {
                for j in i + 1..seqs.len() {
                    let adj = k > 1 && (is_shift(&seqs[i], &seqs[j]) || is_shift(&seqs[j], &seqs[i]));
                    let adj = adj || k == 1;
                    assert_eq!(g.has_edge(i, j), adj, "S_{k},{n}");
                }
            }
        }
    }
    assert_eq!(gen_shift(3, 6).unwrap().n(), 20);
    assert!(gen_shift(0, 3).is_err());
    assert!(gen_shift(4, 3).is_err());
}

#[test]
fn shift_recursion_bound() {
    for k in 1..=2 {
        for n in k..=7 {
            let lhs = chi_exact(&gen_shift(k, n).unwrap(), None).unwrap().0;
            let rhs = chi_exact(&gen_shift(k + 1, n + 1).unwrap(), None).unwrap().0;
            assert!(lhs <= 1 << rhs, "k = {k}, n = {n}: {lhs} > 2^{rhs}");
        }
    }
}

#[test]
fn signed_shift_matches_definition() {
    for n in 3..=8 {
        let g = gen_signed_shift3(n).unwrap();
        let seqs = sequences(3, n);
        assert_eq!(g.n(), seqs.len());
        for i in 0..seqs.len() {
            for j in i + 1..seqs.len() {
                let (a, b) = (&seqs[i], &seqs[j]);
                let want = if is_shift(a, b) || is_shift(b, a) {
                    Some(Sign::Negative)
                } else if a[1] == b[1] {
                    Some(Sign::Positive)
                } else {
                    None
                };
                assert_eq!(g.sign(i, j), want);
            }
        }
        // positive edges: disjoint cliques, one per middle value
        let pos = Graph::new(g.n(), g.edges().filter(|e| e.2.is_positive()).map(|e| (e.0, e.1))).unwrap();
        for comp in pos.components() {
            let k = comp.len();
            assert_eq!(pos.induced(&comp).m(), k * (k - 1) / 2);
        }
        let spec = ForbSpec::new(vec![Pattern::neg_k3(), Pattern::star(4)]);
        assert!(in_forb_class(&g, &spec).is_member());
    }
    assert!(gen_signed_shift3(2).is_err());
}

fn triangle_free(r: &mut SgRng, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(r);
    for (u, v) in pairs {
        if r.gen_bool(p) {
            let common = (0..n).any(|w| {
                edges.iter().any(|&e| e == (u.min(w), u.max(w))) && edges.iter().any(|&e| e == (v.min(w), v.max(w)))
            });
            if !common {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Arcs consecutive head-to-tail, straight from the definition.
fn arc_graph_oracle(d: &Orientation) -> BTreeSet<(usize, usize)> {
    let a = d.arcs();
    let mut out = BTreeSet::new();
    for i in 0..a.len() {
        for j in 0..a.len() {
            if a[i].1 == a[j].0 {
                out.insert((i.min(j), i.max(j)));
            }
        }
    }
    out
}

fn line_graph_oracle(d: &Orientation) -> BTreeSet<(usize, usize)> {
    let a = d.arcs();
    let mut out = BTreeSet::new();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let (x, y) = (a[i], a[j]);
            if x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1 {
                out.insert((i, j));
            }
        }
    }
    out
}

#[test]
fn line_graphs_of_triangle_free_graphs() {
    let mut r = rng(18);
    for _ in 0..50 {
        let n = r.gen_range(2..=12);
        let p = r.gen_range(0.2..0.8);
        let g = triangle_free(&mut r, n, p);
        let d = Orientation::random(&g, &mut r);
        assert_eq!(d.underlying(), g);
        let a = arc_graph(&d);
        assert_eq!(a.edges().collect::<BTreeSet<_>>(), arc_graph_oracle(&d));
        let l = signed_line_graph(&d);
        assert_eq!(l.edges().map(|e| (e.0, e.1)).collect::<BTreeSet<_>>(), line_graph_oracle(&d));
        assert!(l.edges().all(|(u, v, s)| s.is_negative() == a.has_edge(u, v)));
        assert!(has_neg_triangle(&l).is_none());
        assert!(find_induced(&l, &Pattern::claw()).is_none());
    }
    let path = Orientation::new(3, vec![(0, 1), (1, 2)]).unwrap();
    assert_eq!(arc_graph(&path).m(), 1);
    let transitive = Orientation::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
    assert_eq!(arc_graph(&transitive).edges().collect::<Vec<_>>(), vec![(0, 1)]);
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn arc_graph_sandwich() {
    let mut r = rng(16);
    for _ in 0..100 {
        let n = r.gen_range(1..=10);
        let p = r.gen_range(0.1..0.9);
        let g = random_graph(n, p, &mut r).unwrap();
        let d = Orientation::random(&g, &mut r);
        let chi_g = chi_exact(&g, None).unwrap().0;
        let chi_a = chi_exact(&arc_graph(&d), None).unwrap().0;
        let lower = (0..).find(|&k| chi_g <= 1 << k).unwrap();
        let upper = (0..).find(|&k| chi_g <= binom(k, k / 2)).unwrap();
        assert!(lower <= chi_a && chi_a <= upper, "{chi_g} {chi_a}");
    }
}

/// Girth by BFS from every vertex.
fn girth_oracle(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

#[test]
fn girth_is_enforced() {
    for seed in 0..40 {
        let gmin = 3 + seed as usize % 5;
        let g = random_girth_graph(14, gmin, 0.4, seed).unwrap();
        let gi = girth_oracle(&g);
        assert_eq!(girth(&g), gi);
        assert!(gi.is_none_or(|x| x >= gmin));
        assert_eq!(g, random_girth_graph(14, gmin, 0.4, seed).unwrap());
    }
    assert!(random_girth_graph(5, 2, 0.5, 0).is_err());
}

#[test]
fn families() {
    let k4 = neg_clique(4);
    assert_eq!(k4, SignedGraph::complete(4, Sign::Negative));
    let tree = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
    assert!(is_balanced(&all_negative(&tree)).is_balanced());
    let pc = positive_completion(&Graph::cycle(5));
    assert_eq!(pc.m(), 10);
    assert_eq!(pc.negative_subgraph(), Graph::cycle(5));
}

#[test]
fn sampler_members_and_reproducibility() {
    for seed in 0..50 {
        let n = 1 + seed as usize % 30;
        let g = sample_p4class_member(n, seed).unwrap();
        assert_eq!(g.n(), n);
        assert!(in_forb_class(&g, &ForbSpec::p4_class()).is_member());
        assert_eq!(g, sample_p4class_member(n, seed).unwrap());
    }
    assert!(sample_p4class_member(0, 1).is_err());
}

/// Invariants (a)-(d) re-checked by brute force over vertex subsets.
fn check_envelope(e: &EnvelopeCandidate) {
    let g = &e.graph;
    let n = g.n();
    let sets = |k: usize| -> Vec<Vec<usize>> {
        (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect()).collect()
    };
    for t in sets(3) {
        let signs: Vec<Option<Sign>> = vec![g.sign(t[0], t[1]), g.sign(t[1], t[2]), g.sign(t[0], t[2])];
        if signs.iter().all(Option::is_some) {
            let pos = signs.iter().filter(|s| **s == Some(Sign::Positive)).count();
            assert_ne!(pos, 0, "all-negative triangle {t:?}");
            assert_ne!(pos, 2, "two positive edges in {t:?}");
        }
    }
    for q in sets(4) {
        let q = &q;
        let edges: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (q[i], q[j]))).collect();
        let m = edges.iter().filter(|&&(a, b)| g.has_edge(a, b)).count();
        if m == 6 {
            let neg: Vec<_> = edges.iter().filter(|&&(a, b)| g.sign(a, b) == Some(Sign::Negative)).collect();
            let matching = neg.len() == 2 && neg[0].0 != neg[1].0 && neg[0].0 != neg[1].1 && neg[0].1 != neg[1].0 && neg[0].1 != neg[1].1;
            assert!(!matching, "(K4, M) on {q:?}");
        }
        // induced P4: 3 edges, degrees 1,2,2,1 and connected
        if m == 3 {
            let deg: Vec<usize> = q.iter().map(|&v| q.iter().filter(|&&w| g.has_edge(v, w)).count()).collect();
            let mut d = deg.clone();
            d.sort_unstable();
            assert_ne!(d, vec![1, 1, 2, 2], "P4 on {q:?}");
        }
    }
    let c = e.cycle;
    let neg: BTreeSet<(usize, usize)> = g.edges().filter(|x| x.2.is_negative()).map(|x| (x.0, x.1)).collect();
    let cyc: BTreeSet<(usize, usize)> = (0..5).map(|i| (c[i].min(c[(i + 1) % 5]), c[i].max(c[(i + 1) % 5]))).collect();
    assert_eq!(neg, cyc);
    let negative = g.negative_subgraph();
    let colorable = |k: usize| {
        (0..k.pow(n as u32)).any(|code| {
            let col: Vec<usize> = (0..n).map(|v| code / k.pow(v as u32) % k).collect();
            negative.edges().all(|(a, b)| col[a] != col[b])
        })
    };
    assert!(!colorable(2) && colorable(3));
}

#[test]
fn envelope_search() {
    assert!(find_envelope(4).is_none());
    let e = find_envelope(5).unwrap();
    check_envelope(&e);
    assert!(e.is_valid() && e.is_join_compatible());
    assert_eq!(e, EnvelopeCandidate::smallest());
    assert_eq!(find_envelope(7).unwrap(), e);
}

#[test]
fn claim1_postconditions() {
    let (c, k) = (5, 7);
    let neg = Graph::new(5 * k, (0..k).flat_map(|j| (0..5).map(move |i| (5 * j + i, 5 * j + (i + 1) % 5)))).unwrap();
    let cycles: Vec<[usize; 5]> = (0..k).map(|j| std::array::from_fn(|i| 5 * j + i)).collect();
    let mut r = rng(1);
    for _ in 0..100 {
        let mut col = vec![0; 5 * k];
        for cyc in &cycles {
            loop {
                let pick: Vec<usize> = (0..5).map(|_| r.gen_range(0..c)).collect();
                if (0..5).all(|i| pick[i] != pick[(i + 1) % 5]) {
                    for (i, &v) in cyc.iter().enumerate() {
                        col[v] = pick[i];
                    }
                    break;
                }
            }
        }
        let phi = Coloring::new(col);
        assert!(validate_proper(&neg, &phi));
        let t = claim1_xyz(&neg, &cycles, &phi, c).unwrap();
        let mut all: Vec<usize> = t.x.iter().chain(&t.y).chain(&t.z).copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..5 * k).collect::<Vec<_>>());
        for s in [&t.x, &t.y, &t.z] {
            assert!(s.iter().all(|&a| s.iter().all(|&b| !neg.has_edge(a, b))));
        }
        let colors = |s: &[usize]| s.iter().map(|&v| phi.color(v)).collect::<BTreeSet<_>>();
        let common = &(&colors(&t.x) & &colors(&t.y)) & &colors(&t.z);
        assert!(common.len() >= 3);
    }
    // three triangles' worth of colours, three cycles: the triple shares all three
    let neg3 = Graph::new(15, (0..3).flat_map(|j| (0..5).map(move |i| (5 * j + i, 5 * j + (i + 1) % 5)))).unwrap();
    let phi = Coloring::new((0..15).map(|v| [0, 1, 0, 1, 2][v % 5]).collect());
    let t = claim1_xyz(&neg3, &cycles[..3], &phi, 3).unwrap();
    assert_eq!(t.common_colors(&phi), vec![0, 1, 2]);
    assert!(claim1_xyz(&neg3, &cycles[..2], &phi, 3).is_err());
}
