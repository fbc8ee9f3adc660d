//! Colouring graphs without negative triangles that avoid a disjoint union of
//! patterns.

use crate::detect::{find_pattern, has_neg_triangle, Pattern};
use crate::error::ColorError;
use crate::signed::SignedGraph;

use super::coloring::{validate_coloring, Coloring};
use super::layered::{color_or_path_k3free, ColorOrPath};

fn checked<F>(g: &SignedGraph, solver: &mut F, which: &str) -> Result<Coloring, ColorError>
where
    F: FnMut(&SignedGraph) -> Result<Coloring, ColorError>,
{
    let c = solver(g)?;
    if validate_coloring(g, &c) {
        Ok(c.normalized())
    } else {
        Err(ColorError::SolverContractBroken(format!("{which} returned an invalid colouring")))
    }
}

/// Colours a graph in `Forb{(K3, -), F1 + F2}`.
///
/// Without an induced `F1`, `solver1` colours everything. Otherwise, for the
/// first copy `F'` of `F1`, vertex `v` of `N[F']` gets colour `j` for the first
/// template vertex `j` whose image is in `N[v]` (closed neighbourhoods are
/// balanced without negative triangles), and `solver2` colours the rest with
/// colours shifted by `|F1|`.
pub fn color_union_forest<F1, F2>(
    g: &SignedGraph,
    f1: &Pattern,
    f2: &Pattern,
    mut solver1: F1,
    mut solver2: F2,
) -> Result<Coloring, ColorError>
where
    F1: FnMut(&SignedGraph) -> Result<Coloring, ColorError>,
    F2: FnMut(&SignedGraph) -> Result<Coloring, ColorError>,
{
    if has_neg_triangle(g).is_some() {
        return Err(ColorError::PreconditionViolated("negative triangle present".into()));
    }
    let Some(copy) = find_pattern(g, f1) else {
        return checked(g, &mut solver1, "first solver");
    };
    let width = copy.map.len();
    let mut colors = vec![usize::MAX; g.n()];
    for v in 0..g.n() {
        if let Some(j) = copy.map.iter().position(|&x| x == v || g.has_edge(x, v)) {
            colors[v] = j;
        }
    }
    let rest: Vec<usize> = (0..g.n()).filter(|&v| colors[v] == usize::MAX).collect();
    let h = g.induced(&rest)?;
    if find_pattern(&h, f2).is_some() {
        return Err(ColorError::PreconditionViolated(format!(
            "{} and {} occur as an induced disjoint union",
            f1.name(),
            f2.name()
        )));
    }
    let c2 = checked(&h, &mut solver2, "second solver")?;
    for (j, &v) in rest.iter().enumerate() {
        colors[v] = width + c2.color(j);
    }
    Ok(Coloring::new(colors).normalized())
}

/// Colours a graph without negative triangles and without an induced `P_p`,
/// component by component with [`color_or_path_k3free`] (budget `p - 2`,
/// start at the lowest vertex). All components share one palette.
pub fn color_path_free(g: &SignedGraph, p: usize) -> Result<Coloring, ColorError> {
    let violated = || ColorError::PreconditionViolated(format!("induced P{p} present"));
    match p {
        0 => return Err(ColorError::PreconditionViolated("paths need a vertex".into())),
        1 if g.n() > 0 => return Err(violated()),
        2 if g.m() > 0 => return Err(violated()),
        1 | 2 => return Ok(Coloring::new(vec![0; g.n()])),
        _ => {}
    }
    let mut colors = vec![0; g.n()];
    for comp in g.underlying().components() {
        let h = g.induced(&comp)?;
        match color_or_path_k3free(&h, p - 2, 0)? {
            ColorOrPath::Coloring(c) => {
                for (j, &v) in comp.iter().enumerate() {
                    colors[v] = c.color(j);
                }
            }
            ColorOrPath::Path(_) => return Err(violated()),
        }
    }
    Ok(Coloring::new(colors))
}

/// Colours a graph in `Forb{(K3, -), F}` for the linear forest `F` with the
/// given path sizes (vertex counts), peeling one path at a time with
/// [`color_union_forest`].
pub fn color_linear_forest(g: &SignedGraph, path_sizes: &[usize]) -> Result<Coloring, ColorError> {
    match path_sizes {
        [] => Err(ColorError::PreconditionViolated("empty linear forest".into())),
        [p] => color_path_free(g, *p),
        [p, rest @ ..] => color_union_forest(
            g,
            &Pattern::path(*p),
            &Pattern::linear_forest(rest),
            |h| color_path_free(h, *p),
            |h| color_linear_forest(h, rest),
        ),
    }
}
