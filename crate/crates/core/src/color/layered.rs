//! Colour-or-path recursions over BFS layers.
//!
//! Both algorithms pick a start vertex `u`, split the graph into distance
//! layers from `u` and colour layer by layer. Inside a component `K` of layer
//! `i`, the neighbours of one attachment vertex `u_{i-1}` form a balanced set;
//! every component of the rest, together with one such neighbour `u_i`, is
//! coloured recursively with a smaller budget. When a recursive call returns a
//! path from `u_i` instead, it is extended through `u_{i-1}` and a shortest
//! path back to `u`.

use crate::detect::{has_neg_k4, has_neg_triangle};
use crate::error::ColorError;
use crate::graph::Graph;
use crate::signed::SignedGraph;

use super::coloring::{validate_coloring, Coloring};

/// Either a colouring within budget or an induced path from the start vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColorOrPath {
    Coloring(Coloring),
    Path(Vec<usize>),
}

impl ColorOrPath {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            ColorOrPath::Coloring(c) => Some(c),
            ColorOrPath::Path(_) => None,
        }
    }

    pub fn path(&self) -> Option<&[usize]> {
        match self {
            ColorOrPath::Path(p) => Some(p),
            ColorOrPath::Coloring(_) => None,
        }
    }
}

const NONE: usize = usize::MAX;

/// BFS from `u` with lowest-index parents.
struct Layers {
    layers: Vec<Vec<usize>>,
    parent: Vec<usize>,
}

impl Layers {
    fn new(g: &Graph, u: usize) -> Self {
        let dist = g.distances(u);
        let mut parent = vec![NONE; g.n()];
        let mut layers: Vec<Vec<usize>> = Vec::new();
        for (v, d) in dist.iter().enumerate() {
            let d = d.expect("connected graph");
            if layers.len() <= d {
                layers.resize(d + 1, Vec::new());
            }
            layers[d].push(v);
            if d > 0 {
                parent[v] = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .find(|&w| dist[w] == Some(d - 1))
                    .expect("BFS parent");
            }
        }
        Layers { layers, parent }
    }

    /// Shortest path `u, ..., v`.
    fn path_to(&self, v: usize) -> Vec<usize> {
        let mut p = vec![v];
        let mut cur = v;
        while self.parent[cur] != NONE {
            cur = self.parent[cur];
            p.push(cur);
        }
        p.reverse();
        p
    }

    fn depth(&self) -> usize {
        self.layers.len() - 1
    }
}

/// One component `K` of a layer, split around its attachment vertex.
struct Piece {
    attach: usize,
    // N(attach) ∩ K
    near: Vec<usize>,
    // components of K - near, each with its chosen u_i
    rest: Vec<(usize, Vec<usize>)>,
}

fn split_layer(g: &Graph, layers: &Layers, i: usize) -> Vec<Piece> {
    let layer = &layers.layers[i];
    let sub = g.induced(layer);
    sub.components()
        .into_iter()
        .map(|comp| {
            let k: Vec<usize> = comp.iter().map(|&j| layer[j]).collect();
            let attach = layers.layers[i - 1]
                .iter()
                .copied()
                .find(|&a| k.iter().any(|&x| g.has_edge(a, x)))
                .expect("layer component attaches to the previous layer");
            let (near, far): (Vec<usize>, Vec<usize>) = k.iter().partition(|&&x| g.has_edge(attach, x));
            let far_graph = g.induced(&far);
            let rest = far_graph
                .components()
                .into_iter()
                .map(|c| {
                    let c: Vec<usize> = c.into_iter().map(|j| far[j]).collect();
                    let ui = near
                        .iter()
                        .copied()
                        .find(|&y| c.iter().any(|&x| g.has_edge(y, x)))
                        .expect("component touches the neighbourhood");
                    (ui, c)
                })
                .collect();
            Piece { attach, near, rest }
        })
        .collect()
}

/// First neighbour of `ui` inside `c`.
fn step_into(g: &Graph, ui: usize, c: &[usize]) -> usize {
    g.neighbors(ui)
        .iter()
        .copied()
        .find(|x| c.contains(x))
        .expect("component touches u_i")
}

fn check_connected(g: &SignedGraph, u: usize) -> Result<(), ColorError> {
    if u >= g.n() {
        return Err(ColorError::PreconditionViolated(format!("start vertex {u} out of range")));
    }
    if !g.underlying().is_connected() {
        return Err(ColorError::PreconditionViolated("graph is not connected".into()));
    }
    Ok(())
}

/// Colours a connected signed graph without negative triangles with at most
/// `2^k - 1` balanced classes, or finds an induced path of length `k + 1`
/// (`k + 2` vertices) starting at `u`.
///
/// Layer `i ≥ 2` gets its own palette of `2^{k-i}` colours, so the colouring
/// actually uses at most `2^{k-1}` colours.
pub fn color_or_path_k3free(g: &SignedGraph, k: usize, u: usize) -> Result<ColorOrPath, ColorError> {
    if k == 0 {
        return Err(ColorError::PreconditionViolated("k must be at least 1".into()));
    }
    check_connected(g, u)?;
    if has_neg_triangle(g).is_some() {
        return Err(ColorError::PreconditionViolated("negative triangle present".into()));
    }
    Ok(k3free(&g.underlying(), k, u))
}

fn k3free(g: &Graph, k: usize, u: usize) -> ColorOrPath {
    let layers = Layers::new(g, u);
    if layers.depth() > k {
        let far = layers.layers[k + 1][0];
        return ColorOrPath::Path(layers.path_to(far));
    }
    let mut colors = vec![NONE; g.n()];
    for &v in layers.layers.iter().take(2).flatten() {
        colors[v] = 0;
    }
    let mut base = 1;
    for i in 2..=layers.depth() {
        let budget = k - i;
        for piece in split_layer(g, &layers, i) {
            for &v in &piece.near {
                colors[v] = base;
            }
            for (ui, c) in &piece.rest {
                if budget == 0 {
                    let mut p = layers.path_to(piece.attach);
                    p.extend([*ui, step_into(g, *ui, c)]);
                    return ColorOrPath::Path(p);
                }
                let mut verts = c.clone();
                verts.push(*ui);
                let sub = g.induced(&verts);
                match k3free(&sub, budget, verts.len() - 1) {
                    ColorOrPath::Path(p) => {
                        let mut out = layers.path_to(piece.attach);
                        out.extend(p.into_iter().map(|j| verts[j]));
                        return ColorOrPath::Path(out);
                    }
                    ColorOrPath::Coloring(sc) => {
                        let sc = sc.normalized();
                        for (j, &v) in c.iter().enumerate() {
                            colors[v] = base + 1 + sc.color(j);
                        }
                    }
                }
            }
        }
        base += 1 << budget;
    }
    ColorOrPath::Coloring(Coloring::new(colors).normalized())
}

/// Colours a connected signed graph without an induced `(K4, -)` with at most
/// `b * 2^{k-3}` balanced classes, or finds an induced path on `k` vertices
/// starting at `u`. `nbhd` must colour any closed neighbourhood, given as an
/// induced subgraph plus the local index of its centre, with at most `b`
/// balanced classes.
pub fn color_layered_nbhd<F>(
    g: &SignedGraph,
    k: usize,
    b: usize,
    u: usize,
    mut nbhd: F,
) -> Result<ColorOrPath, ColorError>
where
    F: FnMut(&SignedGraph, usize) -> Result<Coloring, ColorError>,
{
    if k < 3 {
        return Err(ColorError::PreconditionViolated("k must be at least 3".into()));
    }
    check_connected(g, u)?;
    if has_neg_k4(g).is_some() {
        return Err(ColorError::PreconditionViolated("induced (K4, -) present".into()));
    }
    layered_nbhd(g, k, b, u, &mut nbhd)
}

fn closed_nbhd(g: &SignedGraph, v: usize) -> Vec<usize> {
    let mut nb: Vec<usize> = g.neighbors(v).iter().map(|e| e.0).collect();
    nb.push(v);
    nb.sort_unstable();
    nb
}

/// Runs the neighbourhood solver on `N[v]` and checks its contract.
fn solve_nbhd<F>(g: &SignedGraph, v: usize, b: usize, nbhd: &mut F) -> Result<(Vec<usize>, Coloring), ColorError>
where
    F: FnMut(&SignedGraph, usize) -> Result<Coloring, ColorError>,
{
    let verts = closed_nbhd(g, v);
    let h = g.induced(&verts)?;
    let centre = verts.binary_search(&v).expect("v is in N[v]");
    let c = nbhd(&h, centre)?.normalized();
    if !validate_coloring(&h, &c) || c.num_colors() > b {
        return Err(ColorError::SolverContractBroken(format!(
            "neighbourhood solver returned an invalid colouring or more than {b} colours"
        )));
    }
    Ok((verts, c))
}

fn layered_nbhd<F>(g: &SignedGraph, k: usize, b: usize, u: usize, nbhd: &mut F) -> Result<ColorOrPath, ColorError>
where
    F: FnMut(&SignedGraph, usize) -> Result<Coloring, ColorError>,
{
    let under = g.underlying();
    let layers = Layers::new(&under, u);
    if layers.depth() >= k - 1 {
        let far = layers.layers[k - 1][0];
        return Ok(ColorOrPath::Path(layers.path_to(far)));
    }
    let mut colors = vec![NONE; g.n()];
    let (verts, c) = solve_nbhd(g, u, b, nbhd)?;
    for (j, &v) in verts.iter().enumerate() {
        colors[v] = c.color(j);
    }
    let mut base = b;
    for i in 2..=layers.depth() {
        // i ≤ k - 2 here; the recursion budget k - i is at least 2
        let budget = k - i;
        for piece in split_layer(&under, &layers, i) {
            let (verts, c) = solve_nbhd(g, piece.attach, b, nbhd)?;
            for (j, &v) in verts.iter().enumerate() {
                if piece.near.contains(&v) {
                    colors[v] = base + c.color(j);
                }
            }
            for (ui, comp) in &piece.rest {
                if budget < 3 {
                    let mut p = layers.path_to(piece.attach);
                    p.extend([*ui, step_into(&under, *ui, comp)]);
                    return Ok(ColorOrPath::Path(p));
                }
                let mut verts = comp.clone();
                verts.push(*ui);
                let sub = g.induced(&verts)?;
                match layered_nbhd(&sub, budget, b, verts.len() - 1, nbhd)? {
                    ColorOrPath::Path(p) => {
                        let mut out = layers.path_to(piece.attach);
                        out.extend(p.into_iter().map(|j| verts[j]));
                        return Ok(ColorOrPath::Path(out));
                    }
                    ColorOrPath::Coloring(sc) => {
                        let sc = sc.normalized();
                        for (j, &v) in comp.iter().enumerate() {
                            colors[v] = base + b + sc.color(j);
                        }
                    }
                }
            }
        }
        base += b + if budget >= 3 { b << (budget - 3) } else { 0 };
    }
    Ok(ColorOrPath::Coloring(Coloring::new(colors).normalized()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::exact::chi_b_exact;
    use crate::detect::is_induced_path;
    use crate::sign::Sign;

    #[test]
    fn positive_clique_gets_one_color() {
        let g = SignedGraph::complete(5, Sign::Positive);
        for k in 1..4 {
            let out = color_or_path_k3free(&g, k, 2).unwrap();
            assert_eq!(out.coloring().unwrap().num_colors(), 1);
        }
    }

    #[test]
    fn path_is_its_own_witness() {
        for k in 1..5 {
            let g = SignedGraph::uniform(&Graph::path(k + 2), Sign::Positive);
            let out = color_or_path_k3free(&g, k, 0).unwrap();
            let p = out.path().unwrap();
            assert_eq!(p.len(), k + 2);
            assert_eq!(p[0], 0);
            assert!(is_induced_path(&g.underlying(), p));
        }
    }

    #[test]
    fn rejects_bad_input() {
        let k3 = SignedGraph::complete(3, Sign::Negative);
        assert!(matches!(color_or_path_k3free(&k3, 2, 0), Err(ColorError::PreconditionViolated(_))));
        let two = SignedGraph::edgeless(2);
        assert!(matches!(color_or_path_k3free(&two, 2, 0), Err(ColorError::PreconditionViolated(_))));
    }

    #[test]
    fn neighbourhood_spans_everything() {
        let g = SignedGraph::complete(4, Sign::Negative).add_universal_positive();
        assert!(color_layered_nbhd(&g, 3, 4, 4, |h, _| Ok(chi_b_exact(h, None)?.1)).is_err());
        let g = SignedGraph::uniform(&Graph::cycle(5), Sign::Negative).add_universal_positive();
        let b = chi_b_exact(&g, None).unwrap().0;
        let out = color_layered_nbhd(&g, 3, b, 5, |h, _| Ok(chi_b_exact(h, None)?.1)).unwrap();
        let c = out.coloring().unwrap();
        assert!(validate_coloring(&g, c) && c.num_colors() <= b);
    }

    #[test]
    fn layered_path_from_start() {
        let g = SignedGraph::uniform(&Graph::path(6), Sign::Negative);
        let out = color_layered_nbhd(&g, 5, 1, 0, |h, _| Ok(chi_b_exact(h, None)?.1)).unwrap();
        assert_eq!(out.path().unwrap(), &[0, 1, 2, 3, 4]);
    }
}
