//! Cograph recognition with a decomposition tree.

use crate::graph::Graph;

use super::paths::longest_induced_path;

/// Decomposition of a cograph. Children of a `Union` are the connected
/// components; children of a `Join` are the co-components. Children are
/// ordered by their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoTree {
    Leaf(usize),
    Union(Vec<CoTree>),
    Join(Vec<CoTree>),
}

impl CoTree {
    /// Vertices under this node, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out.sort_unstable();
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            CoTree::Leaf(v) => out.push(*v),
            CoTree::Union(ch) | CoTree::Join(ch) => ch.iter().for_each(|c| c.collect(out)),
        }
    }

    pub fn children(&self) -> &[CoTree] {
        match self {
            CoTree::Leaf(_) => &[],
            CoTree::Union(ch) | CoTree::Join(ch) => ch,
        }
    }
}

/// The cotree of `g`, or an induced `P4` (in path order) if `g` is not a
/// cograph. The empty graph has no cotree and is reported as `Union([])`.
pub fn cotree(g: &Graph) -> Result<CoTree, [usize; 4]> {
    let all: Vec<usize> = (0..g.n()).collect();
    if all.is_empty() {
        return Ok(CoTree::Union(Vec::new()));
    }
    decompose(g, &all)
}

pub fn is_cograph(g: &Graph) -> bool {
    cotree(g).is_ok()
}

fn decompose(g: &Graph, set: &[usize]) -> Result<CoTree, [usize; 4]> {
    if set.len() == 1 {
        return Ok(CoTree::Leaf(set[0]));
    }
    let sub = g.induced(set);
    let lift = |part: Vec<usize>| part.into_iter().map(|i| set[i]).collect::<Vec<_>>();
    let comps = sub.components();
    if comps.len() > 1 {
        let children = comps
            .into_iter()
            .map(|c| decompose(g, &lift(c)))
            .collect::<Result<_, _>>()?;
        return Ok(CoTree::Union(children));
    }
    let cocomps = sub.complement().components();
    if cocomps.len() > 1 {
        let children = cocomps
            .into_iter()
            .map(|c| decompose(g, &lift(c)))
            .collect::<Result<_, _>>()?;
        return Ok(CoTree::Join(children));
    }
    // connected with connected complement: an induced P4 must exist
    let (_, p) = longest_induced_path(&sub, 3);
    assert!(p.len() >= 4, "prime graph without an induced P4");
    Err([set[p[0]], set[p[1]], set[p[2]], set[p[3]]])
}
