//! Tabu search for proper `k`-colourings.

use rand::Rng;

use crate::gen::rng;
use crate::graph::Graph;

use super::coloring::Coloring;

/// Looks for a proper colouring with at most `k` colours by tabu search over
/// complete colourings, minimising the number of monochromatic edges.
///
/// Deterministic given `seed`. `None` only means the budget of `max_moves`
/// ran out, not that no colouring exists.
pub fn tabu_coloring(g: &Graph, k: usize, max_moves: usize, seed: u64) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring::new(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    let mut rng = rng(seed);
    let mut color: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    // gamma[v * k + c]: neighbours of v coloured c
    let mut gamma = vec![0i64; n * k];
    for (u, v) in g.edges() {
        gamma[u * k + color[v]] += 1;
        gamma[v * k + color[u]] += 1;
    }
    let mut conflicts: i64 = g.edges().filter(|&(u, v)| color[u] == color[v]).count() as i64;
    let mut best = conflicts;
    let mut tabu = vec![0usize; n * k];
    for step in 1..=max_moves {
        if conflicts == 0 {
            return Some(Coloring::new(color));
        }
        let mut pick: Option<(i64, usize, usize)> = None;
        let mut ties = 0u32;
        for v in 0..n {
            let own = gamma[v * k + color[v]];
            if own == 0 {
                continue;
            }
            for c in (0..k).filter(|&c| c != color[v]) {
                let delta = gamma[v * k + c] - own;
                let allowed = tabu[v * k + c] < step || conflicts + delta < best;
                if !allowed {
                    continue;
                }
                match pick {
                    Some((d, _, _)) if delta > d => {}
                    Some((d, _, _)) if delta == d => {
                        // reservoir sampling among equally good moves
                        ties += 1;
                        if rng.gen_range(0..ties) == 0 {
                            pick = Some((delta, v, c));
                        }
                    }
                    _ => {
                        ties = 1;
                        pick = Some((delta, v, c));
                    }
                }
            }
        }
        let Some((delta, v, c)) = pick else {
            continue;
        };
        let old = color[v];
        for &w in g.neighbors(v) {
            gamma[w * k + old] -= 1;
            gamma[w * k + c] += 1;
        }
        color[v] = c;
        conflicts += delta;
        best = best.min(conflicts);
        tabu[v * k + old] = step + rng.gen_range(0..10) + (conflicts as usize) * 6 / 10;
    }
    (conflicts == 0).then(|| Coloring::new(color))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::validate_proper;

    #[test]
    fn finds_easy_colourings() {
        let g = Graph::cycle(9);
        let c = tabu_coloring(&g, 3, 10_000, 1).unwrap();
        assert!(validate_proper(&g, &c));
        assert_eq!(tabu_coloring(&Graph::complete(5), 4, 2_000, 1), None);
        assert_eq!(tabu_coloring(&Graph::empty(0), 0, 10, 1), Some(Coloring::new(vec![])));
    }
}
