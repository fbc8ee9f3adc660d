use crate::color::{validate_proper, Coloring};
use crate::error::GenError;
use crate::graph::Graph;

/// Three disjoint independent sets covering the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XyzTriple {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub z: Vec<usize>,
}

impl XyzTriple {
    pub fn sets(&self) -> [&[usize]; 3] {
        [&self.x, &self.y, &self.z]
    }

    /// Colours used in all three sets, ascending.
    pub fn common_colors(&self, phi: &Coloring) -> Vec<usize> {
        let used = |s: &[usize]| {
            let mut c: Vec<usize> = s.iter().map(|&v| phi.color(v)).collect();
            c.sort_unstable();
            c.dedup();
            c
        };
        let (cy, cz) = (used(&self.y), used(&self.z));
        used(&self.x).into_iter().filter(|c| cy.contains(c) && cz.contains(c)).collect()
    }

    /// Disjoint, covering `0..neg.n()`, independent in `neg`, and sharing at
    /// least three colours under `phi`.
    pub fn verify(&self, neg: &Graph, phi: &Coloring) -> bool {
        let mut seen = vec![false; neg.n()];
        for &v in self.sets().iter().flat_map(|s| s.iter()) {
            if v >= neg.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        seen.iter().all(|&b| b)
            && self.sets().iter().all(|s| neg.is_independent(s))
            && self.common_colors(phi).len() >= 3
    }
}

/// Assigns one of three slots to each (colour, cycle) incidence so that no two
/// incidences sharing a colour or a cycle get the same slot.
fn three_edge_color(edges: &[(usize, usize)], slot: &mut Vec<usize>) -> bool {
    let i = slot.len();
    if i == edges.len() {
        return true;
    }
    for s in 0..3 {
        let clash = (0..i).any(|j| slot[j] == s && (edges[j].0 == edges[i].0 || edges[j].1 == edges[i].1));
        if !clash {
            slot.push(s);
            if three_edge_color(edges, slot) {
                return true;
            }
            slot.pop();
        }
    }
    false
}

/// Splits a disjoint union of negative 5-cycles, properly coloured by `phi`
/// with at most `c` colours, into `X, Y, Z` sharing three colours.
///
/// `neg` is the negative subgraph of the host and `cycles` its 5-cycles.
/// Three colours that each meet three cycles are taken (lowest first, each
/// with its first three cycles); a 3-edge-colouring of that colour/cycle
/// incidence graph sends one vertex per incidence into `X`, `Y` or `Z`. Every
/// other vertex joins the smallest set holding none of its negative
/// neighbours (ties to the earlier set).
pub fn claim1_xyz(neg: &Graph, cycles: &[[usize; 5]], phi: &Coloring, c: usize) -> Result<XyzTriple, GenError> {
    let bad = |msg: String| Err(GenError::PreconditionViolated(msg));
    if c < 3 || cycles.len() + 3 < 2 * c {
        return bad(format!("{} cycles do not suffice for {c} colours", cycles.len()));
    }
    if phi.len() != neg.n() || !validate_proper(neg, phi) || phi.as_slice().iter().any(|&x| x >= c) {
        return bad(format!("not a proper colouring with at most {c} colours"));
    }
    for cyc in cycles {
        if !(0..5).all(|i| neg.has_edge(cyc[i], cyc[(i + 1) % 5])) {
            return bad(format!("{cyc:?} is not a negative cycle"));
        }
    }
    let holders = |color: usize| -> Vec<usize> {
        (0..cycles.len()).filter(|&k| cycles[k].iter().any(|&v| phi.color(v) == color)).collect()
    };
    let chosen: Vec<(usize, Vec<usize>)> = (0..c)
        .map(|color| (color, holders(color)))
        .filter(|(_, h)| h.len() >= 3)
        .take(3)
        .collect();
    if chosen.len() < 3 {
        return bad("fewer than three colours meet three cycles".into());
    }
    let edges: Vec<(usize, usize)> = chosen
        .iter()
        .flat_map(|(color, h)| h[..3].iter().map(move |&k| (*color, k)))
        .collect();
    let mut slot = Vec::with_capacity(edges.len());
    if !three_edge_color(&edges, &mut slot) {
        unreachable!("bipartite graphs of maximum degree 3 are 3-edge-colourable");
    }
    let mut sets: [Vec<usize>; 3] = Default::default();
    let mut placed = vec![false; neg.n()];
    for (&(color, k), &s) in edges.iter().zip(&slot) {
        let v = *cycles[k].iter().find(|&&v| phi.color(v) == color).expect("cycle holds the colour");
        sets[s].push(v);
        placed[v] = true;
    }
    for v in 0..neg.n() {
        if placed[v] {
            continue;
        }
        let accepting = (0..3).filter(|&s| sets[s].iter().all(|&w| !neg.has_edge(v, w)));
        let Some(s) = accepting.min_by_key(|&s| sets[s].len()) else {
            return bad(format!("vertex {v} has negative neighbours in all three sets"));
        };
        sets[s].push(v);
    }
    for s in sets.iter_mut() {
        s.sort_unstable();
    }
    let [x, y, z] = sets;
    let triple = XyzTriple { x, y, z };
    debug_assert!(triple.verify(neg, phi));
    Ok(triple)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5s(k: usize) -> (Graph, Vec<[usize; 5]>) {
        let mut g = Graph::empty(0);
        for _ in 0..k {
            g = g.disjoint_union(&Graph::cycle(5));
        }
        let cycles = (0..k).map(|i| std::array::from_fn(|j| 5 * i + j)).collect();
        (g, cycles)
    }

    #[test]
    fn three_colours_three_cycles() {
        let (g, cycles) = c5s(3);
        let phi: Coloring = (0..3).flat_map(|_| [0, 1, 0, 1, 2]).collect();
        let t = claim1_xyz(&g, &cycles, &phi, 3).unwrap();
        assert!(t.verify(&g, &phi));
        assert_eq!(t.common_colors(&phi), vec![0, 1, 2]);
    }

    #[test]
    fn too_few_cycles() {
        let (g, cycles) = c5s(6);
        let phi: Coloring = (0..6).flat_map(|_| [0, 1, 0, 1, 2]).collect();
        assert!(matches!(claim1_xyz(&g, &cycles, &phi, 5), Err(GenError::PreconditionViolated(_))));
        let improper: Coloring = vec![0; 30].into_iter().collect();
        assert!(claim1_xyz(&g, &cycles, &improper, 3).is_err());
    }
}
