use crate::color::{search_proper_colorings, Coloring, Verdict};
use crate::error::GenError;
use crate::graph::Graph;
use crate::sign::Sign;
use crate::signed::SignedGraph;

use rand::Rng;

use super::claim1::{claim1_xyz, XyzTriple};
use super::envelope::{EnvelopeCandidate, GROUP};
use super::random::rng;

const COLORS: usize = 5;

/// One refuted colouring: its restriction to `R`, the sets it was split
/// into and the colours they share.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LazyStep {
    pub restriction: Coloring,
    pub triple: XyzTriple,
    pub common: Vec<usize>,
}

/// Result of [`build_lr_lazy`]. Vertices `0..r_len` are `R`; every later block
/// of `envelope_len` vertices is one envelope of `L`.
#[derive(Clone, Debug)]
pub struct LazyBuild {
    pub graph: SignedGraph,
    pub r_len: usize,
    pub envelope_len: usize,
    pub steps: Vec<LazyStep>,
}

/// Parameters of [`build_lr_lazy`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LazyConfig {
    /// Envelopes in `R`; the X, Y, Z split needs at least 7 for five colours.
    pub copies: usize,
    /// Cap on the number of envelopes added.
    pub max_iters: usize,
    /// Envelopes taken from uniformly random colourings of `R` before the
    /// exhaustive search starts.
    pub warm_up: usize,
    pub seed: u64,
}

impl Default for LazyConfig {
    fn default() -> Self {
        LazyConfig {
            copies: 7,
            max_iters: 10_000,
            warm_up: 5,
            seed: 0,
        }
    }
}

struct Grower {
    n: usize,
    edges: Vec<(usize, usize, Sign)>,
    neg_edges: Vec<(usize, usize)>,
}

impl Grower {
    fn add_copy(&mut self, env: &SignedGraph) -> usize {
        let base = self.n;
        for (u, v, s) in env.edges() {
            self.edges.push((base + u, base + v, s));
            if s.is_negative() {
                self.neg_edges.push((base + u, base + v));
            }
        }
        self.n += env.n();
        base
    }

    fn negative(&self) -> Graph {
        Graph::new(self.n, self.neg_edges.iter().copied()).expect("edges are distinct")
    }
}

/// For each new envelope vertex, the `R` vertices it is negative to.
fn negative_sides(env: &EnvelopeCandidate, triple: &XyzTriple) -> Vec<Vec<usize>> {
    let sets = triple.sets();
    (0..env.graph.n())
        .map(|v| match env.cycle.iter().position(|&c| c == v) {
            Some(i) => sets[GROUP[i]].to_vec(),
            None => Vec::new(),
        })
        .collect()
}

/// The local conditions under which gluing an envelope onto `R` keeps the
/// graph in the class: every `N-_R(u)` is independent in `R-`; for a
/// negative `uv` the sets `N-_R(u)`, `N-_R(v)` are disjoint and
/// `N+_R(u) ∩ N+_R(v)` is independent in `R-`; for a positive `uv` the sets
/// `N-_R(u)` and `N-_R(v)` coincide.
fn check_gluing(env: &SignedGraph, r_neg: &Graph, sides: &[Vec<usize>]) -> Result<(), String> {
    let r = r_neg.n();
    let mut mark = vec![[false; 2]; r];
    for (u, side) in sides.iter().enumerate() {
        if !r_neg.is_independent(side) {
            return Err(format!("negative side of envelope vertex {u} holds a negative edge"));
        }
    }
    for (u, v, s) in env.edges() {
        let (a, b) = (&sides[u], &sides[v]);
        match s {
            Sign::Negative => {
                for m in mark.iter_mut() {
                    *m = [false; 2];
                }
                a.iter().for_each(|&x| mark[x][0] = true);
                b.iter().for_each(|&x| mark[x][1] = true);
                if mark.iter().any(|m| m[0] && m[1]) {
                    return Err(format!("negative edge {u}{v}: negative sides meet"));
                }
                let both_positive: Vec<usize> = (0..r).filter(|&x| !mark[x][0] && !mark[x][1]).collect();
                if !r_neg.is_independent(&both_positive) {
                    return Err(format!("negative edge {u}{v}: common positive side holds a negative edge"));
                }
            }
            Sign::Positive if a != b => {
                return Err(format!("positive edge {u}{v}: negative sides differ"));
            }
            Sign::Positive => {}
        }
    }
    Ok(())
}

/// Whether the envelope's cycle can still be coloured when `v_i` must avoid
/// the colours of its group.
fn cycle_extends(forbidden: [&[usize]; 3]) -> bool {
    let allowed = |i: usize, c: usize| !forbidden[GROUP[i]].contains(&c);
    let mut col = [0usize; 5];
    fn go(i: usize, col: &mut [usize; 5], allowed: &dyn Fn(usize, usize) -> bool) -> bool {
        if i == 5 {
            return col[4] != col[0];
        }
        (0..COLORS).any(|c| {
            if !allowed(i, c) || (i > 0 && col[i - 1] == c) {
                return false;
            }
            col[i] = c;
            go(i + 1, col, allowed)
        })
    }
    go(0, &mut col, &allowed)
}

/// Appends an envelope glued along `triple`; returns the negative
/// neighbourhoods of the new vertices.
fn glue(grow: &mut Grower, env: &EnvelopeCandidate, r_len: usize, triple: &XyzTriple) -> Vec<Vec<usize>> {
    let base = grow.add_copy(&env.graph);
    let mut batch: Vec<Vec<usize>> = (0..env.graph.n())
        .map(|v| {
            let inside = env.graph.neighbors(v).iter().filter(|&&(w, s)| w < v && s.is_negative());
            inside.map(|&(w, _)| base + w).collect()
        })
        .collect();
    for (v, side) in negative_sides(env, triple).iter().enumerate() {
        let mut neg = vec![false; r_len];
        side.iter().for_each(|&x| neg[x] = true);
        for (x, &is_neg) in neg.iter().enumerate() {
            let sign = if is_neg { Sign::Negative } else { Sign::Positive };
            grow.edges.push((x, base + v, sign));
            if is_neg {
                grow.neg_edges.push((x, base + v));
                batch[v].push(x);
            }
        }
    }
    batch
}

/// A uniformly random proper 5-colouring of the cycles of `R`.
fn random_restriction<G: Rng>(cycles: &[[usize; 5]], r_len: usize, rng: &mut G) -> Coloring {
    let mut colors = vec![0; r_len];
    for cyc in cycles {
        loop {
            let pick: [usize; 5] = std::array::from_fn(|_| rng.gen_range(0..COLORS));
            if (0..5).all(|i| pick[i] != pick[(i + 1) % 5]) {
                for (&v, &c) in cyc.iter().zip(&pick) {
                    colors[v] = c;
                }
                break;
            }
        }
    }
    Coloring::new(colors)
}

/// Whether an envelope glued along `triple` can still be coloured next to
/// `restriction`.
fn restriction_extends(triple: &XyzTriple, restriction: &Coloring) -> bool {
    let [x, y, z] = triple.sets().map(|s| s.iter().map(|&v| restriction.color(v)).collect::<Vec<_>>());
    cycle_extends([&x, &y, &z])
}

/// Builds and checks the envelope gluing that refutes `restriction`.
fn refute(
    env: &EnvelopeCandidate,
    r_neg: &Graph,
    cycles: &[[usize; 5]],
    restriction: Coloring,
) -> Result<LazyStep, GenError> {
    let triple = claim1_xyz(r_neg, cycles, &restriction, COLORS)?;
    check_gluing(&env.graph, r_neg, &negative_sides(env, &triple)).map_err(GenError::ClassViolation)?;
    if restriction_extends(&triple, &restriction) {
        return Err(GenError::ClassViolation("the new envelope does not refute the restriction".into()));
    }
    let common = triple.common_colors(&restriction);
    Ok(LazyStep {
        restriction,
        triple,
        common,
    })
}

/// Grows the chromatic-number-6 graph one envelope at a time.
///
/// `R` is `copies` disjoint envelopes. For a proper 5-colouring `phi` of the
/// negative subgraph, its restriction to `R` is split into `X, Y, Z` and a
/// fresh envelope is joined to `R`: `v0` negatively to `X`, `v1, v3` to `Y`,
/// `v2, v4` to `Z`, every other pair positively. The new envelope's cycle
/// cannot be coloured next to that restriction, so each step removes at
/// least one restriction for good.
///
/// Colourings come from one run of the exact search that grows with the
/// graph: each colouring it finds gets its envelope appended on the spot and
/// the search carries on, so the run ends exactly when the negative subgraph
/// has no proper 5-colouring left. Search colourings of `R` are strongly
/// correlated, so the first `warm_up` envelopes refute random colourings of
/// `R` instead; without them the search stalls for a long time.
pub fn build_lr_lazy(env: &EnvelopeCandidate, config: &LazyConfig) -> Result<LazyBuild, GenError> {
    let LazyConfig {
        copies,
        max_iters,
        warm_up,
        seed,
    } = *config;
    let defects = env.defects();
    if !defects.is_empty() {
        return Err(GenError::PreconditionViolated(format!("not an envelope: {defects:?}")));
    }
    let mut grow = Grower {
        n: 0,
        edges: Vec::new(),
        neg_edges: Vec::new(),
    };
    let cycles: Vec<[usize; 5]> = (0..copies)
        .map(|_| {
            let base = grow.add_copy(&env.graph);
            env.cycle.map(|v| base + v)
        })
        .collect();
    let r_len = grow.n;
    let r_neg = grow.negative();
    let mut steps: Vec<LazyStep> = Vec::new();
    let mut rng = rng(seed);
    for _ in 0..warm_up.min(max_iters) {
        let restriction = random_restriction(&cycles, r_len, &mut rng);
        let step = refute(env, &r_neg, &cycles, restriction)?;
        glue(&mut grow, env, r_len, &step.triple);
        steps.push(step);
    }
    let mut failure = None;
    let found = search_proper_colorings(&grow.negative(), COLORS, |phi| {
        if steps.len() == max_iters {
            failure = Some(GenError::IterationCapExceeded(max_iters));
            return Verdict::Accept;
        }
        let restriction: Coloring = phi.as_slice()[..r_len].iter().copied().collect();
        let step = match refute(env, &r_neg, &cycles, restriction) {
            Ok(step) => step,
            Err(e) => {
                failure = Some(e);
                return Verdict::Accept;
            }
        };
        let batch = glue(&mut grow, env, r_len, &step.triple);
        steps.push(step);
        Verdict::Extend(batch)
    });
    if let Some(e) = failure {
        return Err(e);
    }
    debug_assert!(found.is_none(), "the search ends only when every colouring is refuted");
    let graph = SignedGraph::new(grow.n, grow.edges)?;
    Ok(LazyBuild {
        graph,
        r_len,
        envelope_len: env.graph.n(),
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refutation_check() {
        // three shared colours leave two for a 5-cycle
        assert!(!cycle_extends([&[0, 1, 2], &[0, 1, 2], &[0, 1, 2]]));
        assert!(cycle_extends([&[0, 1], &[0, 1], &[0, 1]]));
        assert!(cycle_extends([&[0, 1, 2], &[0, 1, 3], &[0, 1, 4]]));
    }

    #[test]
    fn too_few_copies() {
        let env = EnvelopeCandidate::smallest();
        assert!(matches!(build_lr_lazy(&env, &LazyConfig { copies: 3, ..LazyConfig::default() }), Err(GenError::PreconditionViolated(_))));
    }
}
