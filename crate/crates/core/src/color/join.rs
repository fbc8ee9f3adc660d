//! Colouring the negative subgraph of full joins and of the class
//! `Forb{(K3, -), (K4, M), P4}` (cliques matched as 2-edge-coloured graphs).

use crate::detect::{cotree, in_forb_class, CoTree, ForbSpec};
use crate::error::ColorError;
use crate::graph::Graph;
use crate::sign::Sign;
use crate::signed::SignedGraph;

use super::coloring::Coloring;
use super::exact::find_proper_coloring;

fn first_negative_edge(g: &SignedGraph, side: &[usize]) -> Option<(usize, usize)> {
    side.iter()
        .flat_map(|&x| side.iter().map(move |&y| (x, y)))
        .find(|&(x, y)| x < y && g.sign(x, y) == Some(Sign::Negative))
}

/// Splits `side2` by the negative edge `uv` of `side1`: negative neighbours of
/// `u`, negative neighbours of `v`, common positive neighbours. Each class is
/// independent in the negative subgraph when the join avoids `(K3, -)` and
/// `(K4, M)`.
pub fn three_color_join_side(
    g: &SignedGraph,
    side1: &[usize],
    side2: &[usize],
    (u, v): (usize, usize),
) -> Result<[Vec<usize>; 3], ColorError> {
    let bad = |msg: &str| Err(ColorError::PreconditionViolated(msg.to_string()));
    if !side1.contains(&u) || !side1.contains(&v) || g.sign(u, v) != Some(Sign::Negative) {
        return bad("uv must be a negative edge of the first side");
    }
    if side1.iter().any(|&x| side2.iter().any(|&y| x == y || !g.has_edge(x, y))) {
        return bad("sides are not disjoint and fully joined");
    }
    let mut classes: [Vec<usize>; 3] = Default::default();
    for &w in side2 {
        let neg_u = g.sign(u, w) == Some(Sign::Negative);
        let neg_v = g.sign(v, w) == Some(Sign::Negative);
        let class = match (neg_u, neg_v) {
            (true, true) => return bad("negative triangle through uv"),
            (true, false) => 0,
            (false, true) => 1,
            (false, false) => 2,
        };
        classes[class].push(w);
    }
    for (class, members) in classes.iter().enumerate() {
        if first_negative_edge(g, members).is_some() {
            return Err(ColorError::PartitionNotIndependent { class });
        }
    }
    Ok(classes)
}

/// Proper 6-colouring of the negative subgraph of `G[side1] ⋈ G[side2]` when
/// both sides contain a negative edge: three classes per side. `side1` and
/// `side2` must partition the vertices of `g`.
pub fn six_color_join(g: &SignedGraph, side1: &[usize], side2: &[usize]) -> Result<Coloring, ColorError> {
    if side1.len() + side2.len() != g.n() {
        return Err(ColorError::PreconditionViolated("sides must cover the graph".into()));
    }
    let (Some(e1), Some(e2)) = (first_negative_edge(g, side1), first_negative_edge(g, side2)) else {
        return Err(ColorError::PreconditionViolated("both sides need a negative edge".into()));
    };
    let mut colors = vec![usize::MAX; g.n()];
    for (offset, classes) in [
        (0, three_color_join_side(g, side2, side1, e2)?),
        (3, three_color_join_side(g, side1, side2, e1)?),
    ] {
        for (c, members) in classes.iter().enumerate() {
            for &w in members {
                colors[w] = offset + c;
            }
        }
    }
    if colors.contains(&usize::MAX) {
        return Err(ColorError::PreconditionViolated("sides must cover the graph".into()));
    }
    Ok(Coloring::new(colors))
}

/// A proper colouring of the negative subgraph with at most 6 colours, hence
/// a balanced 6-colouring, for members of [`ForbSpec::p4_class`].
///
/// Per component: split at the join root into `A` (first co-component) and
/// `B`. If both negative parts are 3-colourable they take colours 0-2 and 3-5.
/// Otherwise `A` (the side opposite a non-3-colourable one) has no negative
/// edge; it is grown to a maximal `A'` with no internal negative edge whose
/// removal leaves only modules. Components of `G - A'` with 5-colourable
/// negative part use colours 0-4, the others use 0-5 and have no negative
/// edge to `A'`, which takes colour 5. Classes with no negative edge between
/// them are merged at the end.
pub fn color_p4class(g: &SignedGraph) -> Result<Coloring, ColorError> {
    let report = in_forb_class(g, &ForbSpec::p4_class());
    if let Some(v) = report.violations.first() {
        return Err(ColorError::PreconditionViolated(format!(
            "graph contains {} at {:?}",
            v.pattern.name(),
            v.embedding.map
        )));
    }
    let colors = p4_color(g)?;
    Ok(merge_classes(&g.negative_subgraph(), Coloring::new(colors)))
}

/// Merges each colour class into the first earlier class it has no edge to.
fn merge_classes(neg: &Graph, c: Coloring) -> Coloring {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for class in c.classes() {
        let target = groups
            .iter_mut()
            .find(|grp| grp.iter().all(|&x| class.iter().all(|&y| !neg.has_edge(x, y))));
        match target {
            Some(grp) => grp.extend(class),
            None => groups.push(class),
        }
    }
    let mut colors = vec![0; c.len()];
    for (i, grp) in groups.iter().enumerate() {
        for &v in grp {
            colors[v] = i;
        }
    }
    Coloring::new(colors)
}

fn contradiction(msg: &str) -> ColorError {
    ColorError::InternalContradiction(msg.to_string())
}

fn p4_color(g: &SignedGraph) -> Result<Vec<usize>, ColorError> {
    let mut colors = vec![0; g.n()];
    for comp in g.underlying().components() {
        if comp.len() == 1 {
            continue;
        }
        let h = g.induced(&comp)?;
        for (j, c) in p4_component(&h)?.into_iter().enumerate() {
            colors[comp[j]] = c;
        }
    }
    Ok(colors)
}

/// Splits a connected cograph on at least two vertices at its join root.
fn join_split(g: &Graph) -> Result<(Vec<usize>, Vec<usize>), ColorError> {
    match cotree(g) {
        Ok(CoTree::Join(children)) => {
            let a = children[0].vertices();
            let mut b: Vec<usize> = children[1..].iter().flat_map(|c| c.vertices()).collect();
            b.sort_unstable();
            Ok((a, b))
        }
        _ => Err(contradiction("expected a connected cograph")),
    }
}

fn three_coloring(neg: &Graph, part: &[usize]) -> Option<Vec<usize>> {
    find_proper_coloring(&neg.induced(part), 3).map(|c| c.into_vec())
}

fn p4_component(h: &SignedGraph) -> Result<Vec<usize>, ColorError> {
    let n = h.n();
    let under = h.underlying();
    let neg = h.negative_subgraph();
    let (a, b) = join_split(&under)?;
    let mut colors = vec![usize::MAX; n];
    let (ca, cb) = (three_coloring(&neg, &a), three_coloring(&neg, &b));
    if let (Some(ca), Some(cb)) = (&ca, &cb) {
        for (j, &v) in a.iter().enumerate() {
            colors[v] = ca[j];
        }
        for (j, &v) in b.iter().enumerate() {
            colors[v] = 3 + cb[j];
        }
        return Ok(colors);
    }
    let a = if cb.is_none() { a } else { b };
    if !neg.is_independent(&a) {
        return Err(contradiction("the side opposite a non-3-colourable side has a negative edge"));
    }
    let a_prime = grow_independent_modular(h, &under, &neg, a);
    let mut in_a = vec![false; n];
    for &v in &a_prime {
        in_a[v] = true;
        colors[v] = 5;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !in_a[v]).collect();
    for comp in under.induced(&rest).components() {
        let comp: Vec<usize> = comp.into_iter().map(|j| rest[j]).collect();
        let hi = h.induced(&comp)?;
        let local = five_coloring(&hi)?;
        let local = match local {
            Some(c) => c,
            None => {
                let (p, q) = join_split(&hi.underlying())?;
                let hneg = hi.negative_subgraph();
                let (Some(cp), Some(cq)) = (three_coloring(&hneg, &p), three_coloring(&hneg, &q)) else {
                    return Err(contradiction("a 6-chromatic part has a non-3-colourable side"));
                };
                if comp.iter().any(|&x| a_prime.iter().any(|&y| h.sign(x, y) == Some(Sign::Negative))) {
                    return Err(contradiction("a 6-chromatic part has a negative edge to A'"));
                }
                let mut c = vec![0; comp.len()];
                for (j, &v) in p.iter().enumerate() {
                    c[v] = cp[j];
                }
                for (j, &v) in q.iter().enumerate() {
                    c[v] = 3 + cq[j];
                }
                c
            }
        };
        for (j, &v) in comp.iter().enumerate() {
            colors[v] = local[j];
        }
    }
    Ok(colors)
}

/// At most 5 colours on the negative subgraph, trying the recursive
/// construction before the exact search.
fn five_coloring(h: &SignedGraph) -> Result<Option<Vec<usize>>, ColorError> {
    let rec = Coloring::new(p4_color(h)?).normalized();
    if rec.num_colors() <= 5 {
        return Ok(Some(rec.into_vec()));
    }
    Ok(find_proper_coloring(&h.negative_subgraph(), 5).map(|c| c.into_vec()))
}

/// Does every component of `G - set` form a module?
fn components_are_modules(g: &Graph, in_set: &[bool]) -> bool {
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !in_set[v]).collect();
    g.induced(&rest).components().into_iter().all(|comp| {
        let mut inside = vec![false; g.n()];
        for &j in &comp {
            inside[rest[j]] = true;
        }
        (0..g.n()).filter(|&w| !inside[w]).all(|w| {
            let hits = comp.iter().filter(|&&j| g.has_edge(w, rest[j])).count();
            hits == 0 || hits == comp.len()
        })
    })
}

/// Grows `start` greedily (ascending vertex order) to a set with no internal
/// negative edge whose complement splits into modules. When single additions
/// stall, a component `H` of the rest whose negative part is not 5-colourable
/// is split at its join root; if one side is not 3-colourable, the other side
/// is added wholesale when that keeps both conditions.
fn grow_independent_modular(h: &SignedGraph, under: &Graph, neg: &Graph, start: Vec<usize>) -> Vec<usize> {
    let n = h.n();
    let mut in_set = vec![false; n];
    for &v in &start {
        in_set[v] = true;
    }
    loop {
        let mut changed = false;
        for v in 0..n {
            if in_set[v] || neg.neighbors(v).iter().any(|&w| in_set[w]) {
                continue;
            }
            in_set[v] = true;
            if components_are_modules(under, &in_set) {
                changed = true;
            } else {
                in_set[v] = false;
            }
        }
        if !changed {
            changed = absorb_side(h, under, neg, &mut in_set);
        }
        if !changed {
            break;
        }
    }
    (0..n).filter(|&v| in_set[v]).collect()
}

fn absorb_side(h: &SignedGraph, under: &Graph, neg: &Graph, in_set: &mut [bool]) -> bool {
    let rest: Vec<usize> = (0..h.n()).filter(|&v| !in_set[v]).collect();
    for comp in under.induced(&rest).components() {
        let comp: Vec<usize> = comp.into_iter().map(|j| rest[j]).collect();
        if comp.len() < 2 || find_proper_coloring(&neg.induced(&comp), 5).is_some() {
            continue;
        }
        let Ok((p, q)) = join_split(&under.induced(&comp)) else {
            continue;
        };
        let p: Vec<usize> = p.into_iter().map(|j| comp[j]).collect();
        let q: Vec<usize> = q.into_iter().map(|j| comp[j]).collect();
        for (hard, other) in [(&p, &q), (&q, &p)] {
            if three_coloring(neg, hard).is_some() {
                continue;
            }
            let mut candidate = in_set.to_vec();
            for &v in other {
                candidate[v] = true;
            }
            let members: Vec<usize> = (0..h.n()).filter(|&v| candidate[v]).collect();
            if neg.is_independent(&members) && components_are_modules(under, &candidate) {
                in_set.copy_from_slice(&candidate);
                return true;
            }
        }
    }
    false
}

/// Neighbourhood solver for `Forb{(K4, -), P4}`: switches so every edge at the
/// centre is positive, colours the open neighbourhood with
/// [`color_p4class`] and gives the centre a colour of its own (at most 7).
pub fn color_nbhd_via_p4class(h: &SignedGraph, centre: usize) -> Result<Coloring, ColorError> {
    let (switched, _) = h.normalize_star(centre)?;
    let others: Vec<usize> = (0..h.n()).filter(|&v| v != centre).collect();
    let inner = color_p4class(&switched.induced(&others)?)?;
    let mut colors = vec![6; h.n()];
    for (j, &v) in others.iter().enumerate() {
        colors[v] = inner.color(j);
    }
    Ok(Coloring::new(colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::coloring::{validate_coloring, validate_proper};
    use crate::detect::k4_matching;

    fn positive_completion(g: &Graph) -> SignedGraph {
        SignedGraph::from_graph_with(&Graph::complete(g.n()), |u, v| {
            if g.has_edge(u, v) { Sign::Negative } else { Sign::Positive }
        })
    }

    #[test]
    fn trivial_members() {
        let g = SignedGraph::complete(6, Sign::Positive);
        assert_eq!(color_p4class(&g).unwrap().num_colors(), 1);
        let pc = positive_completion(&Graph::cycle(5));
        let c = color_p4class(&pc).unwrap();
        assert!(c.num_colors() <= 6);
        assert!(validate_proper(&pc.negative_subgraph(), &c));
        assert!(validate_coloring(&pc, &c));
    }

    #[test]
    fn non_members_are_rejected() {
        assert!(matches!(color_p4class(&k4_matching()), Err(ColorError::PreconditionViolated(_))));
        let p4 = SignedGraph::uniform(&Graph::path(4), Sign::Positive);
        assert!(color_p4class(&p4).is_err());
    }

    #[test]
    fn join_sides() {
        // negative edge 0-1 on one side, a negative edge 2-3 on the other
        let g = SignedGraph::new(
            4,
            [
                (0, 1, Sign::Negative),
                (2, 3, Sign::Negative),
                (0, 2, Sign::Negative),
                (1, 3, Sign::Negative),
                (0, 3, Sign::Positive),
                (1, 2, Sign::Positive),
            ],
        )
        .unwrap();
        let classes = three_color_join_side(&g, &[0, 1], &[2, 3], (0, 1)).unwrap();
        assert_eq!(classes, [vec![2], vec![3], vec![]]);
        let c = six_color_join(&g, &[0, 1], &[2, 3]).unwrap();
        assert!(validate_proper(&g.negative_subgraph(), &c));
        assert!(three_color_join_side(&g, &[0, 1], &[2, 3], (0, 2)).is_err());
        // (K4, M) split along its matching: common positive neighbours hold a negative edge
        let m = k4_matching();
        assert_eq!(
            three_color_join_side(&m, &[0, 1], &[2, 3], (0, 1)),
            Err(ColorError::PartitionNotIndependent { class: 2 })
        );
    }
}
