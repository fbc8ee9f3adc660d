//! Exact colouring by branch and bound.
//!
//! One search skeleton serves both problems. The next vertex is the uncoloured
//! one with the fewest feasible classes; ties go to the vertex that has hit
//! the most dead ends so far, then the highest degree, then the lowest index.
//! Classes are tried in ascending order and a new class may only be opened
//! as the next unused index, which removes colour permutations. The search
//! keeps an explicit stack so deep instances cannot overflow the call stack.
//!
//! Dead ends backjump: every frame collects the depths of the assignments
//! that ruled out its classes, and a frame that runs out of classes returns
//! straight to the deepest of them. While some class is still unopened the
//! symmetry argument depends on every earlier assignment, so such frames
//! fall back to chronological backtracking.

use fixedbitset::FixedBitSet;

use crate::dsu::{Checkpoint, ParityDsu};
use crate::error::ColorError;
use crate::graph::Graph;
use crate::signed::SignedGraph;

use super::coloring::Coloring;

const NONE: usize = usize::MAX;

trait Model {
    fn n(&self) -> usize;
    fn degree(&self, v: usize) -> usize;
    /// Number of already open classes `< open` that accept `v`.
    fn feasible_count(&mut self, v: usize, open: usize, color: &[usize]) -> usize;
    fn feasible(&mut self, v: usize, c: usize, color: &[usize]) -> bool;
    fn assign(&mut self, v: usize, c: usize, color: &[usize]);
    fn unassign(&mut self, v: usize, c: usize, color: &[usize]);
    /// Adds to `out` the depths of assignments that together keep `v` out of
    /// the infeasible class `c`.
    fn reason(&self, v: usize, c: usize, color: &[usize], depth: &[usize], out: &mut FixedBitSet);
    /// Appends an uncoloured vertex adjacent to `nbrs`.
    fn add_vertex(&mut self, nbrs: &[usize], color: &[usize]);
}

/// Proper colouring: counts of coloured neighbours per class. Owns its
/// adjacency so the graph can grow during a search.
struct Proper {
    adj: Vec<Vec<usize>>,
    k: usize,
    hits: Vec<u32>,
    // number of distinct classes seen among coloured neighbours
    blocked: Vec<usize>,
}

impl Proper {
    fn new(g: &Graph, k: usize) -> Self {
        Proper {
            adj: (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect(),
            k,
            hits: vec![0; g.n() * k],
            blocked: vec![0; g.n()],
        }
    }
}

impl Model for Proper {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn feasible_count(&mut self, v: usize, open: usize, _: &[usize]) -> usize {
        open - self.blocked[v]
    }

    fn feasible(&mut self, v: usize, c: usize, _: &[usize]) -> bool {
        self.hits[v * self.k + c] == 0
    }

    fn assign(&mut self, v: usize, c: usize, _: &[usize]) {
        for &w in &self.adj[v] {
            let h = &mut self.hits[w * self.k + c];
            if *h == 0 {
                self.blocked[w] += 1;
            }
            *h += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize, _: &[usize]) {
        for &w in &self.adj[v] {
            let h = &mut self.hits[w * self.k + c];
            *h -= 1;
            if *h == 0 {
                self.blocked[w] -= 1;
            }
        }
    }

    fn reason(&self, v: usize, c: usize, color: &[usize], depth: &[usize], out: &mut FixedBitSet) {
        // one neighbour suffices; the shallowest allows the longest jump
        let d = self.adj[v].iter().filter(|&&w| color[w] == c).map(|&w| depth[w]).min();
        out.insert(d.expect("a neighbour blocks the class"));
    }

    fn add_vertex(&mut self, nbrs: &[usize], color: &[usize]) {
        let v = self.adj.len();
        self.adj.push(nbrs.to_vec());
        self.hits.extend(std::iter::repeat_n(0, self.k));
        self.blocked.push(0);
        for &w in nbrs {
            self.adj[w].push(v);
            if let Some(&c) = color.get(w).filter(|&&c| c != NONE) {
                if self.hits[v * self.k + c] == 0 {
                    self.blocked[v] += 1;
                }
                self.hits[v * self.k + c] += 1;
            }
        }
    }
}

/// Balanced colouring: one parity union-find over all vertices; only edges
/// inside a class are ever merged.
struct Balanced<'a> {
    g: &'a SignedGraph,
    dsu: ParityDsu,
    marks: Vec<Checkpoint>,
}

impl Balanced<'_> {
    fn try_join(&mut self, v: usize, c: usize, color: &[usize]) -> bool {
        self.g
            .neighbors(v)
            .iter()
            .filter(|&&(w, _)| color[w] == c)
            .all(|&(w, s)| self.dsu.unite(v, w, s.parity()))
    }
}

impl Model for Balanced<'_> {
    fn n(&self) -> usize {
        self.g.n()
    }

    fn degree(&self, v: usize) -> usize {
        self.g.degree(v)
    }

    fn feasible_count(&mut self, v: usize, open: usize, color: &[usize]) -> usize {
        (0..open).filter(|&c| self.feasible(v, c, color)).count()
    }

    fn feasible(&mut self, v: usize, c: usize, color: &[usize]) -> bool {
        let cp = self.dsu.checkpoint();
        let ok = self.try_join(v, c, color);
        self.dsu.rollback(cp);
        ok
    }

    fn assign(&mut self, v: usize, c: usize, color: &[usize]) {
        self.marks.push(self.dsu.checkpoint());
        let ok = self.try_join(v, c, color);
        debug_assert!(ok, "assigned an infeasible class");
    }

    fn unassign(&mut self, _: usize, _: usize, _: &[usize]) {
        let cp = self.marks.pop().expect("matching assign");
        self.dsu.rollback(cp);
    }

    fn reason(&self, _: usize, c: usize, color: &[usize], depth: &[usize], out: &mut FixedBitSet) {
        // the offending cycle lies inside the class
        for (w, &cw) in color.iter().enumerate() {
            if cw == c {
                out.insert(depth[w]);
            }
        }
    }

    fn add_vertex(&mut self, _: &[usize], _: &[usize]) {
        unreachable!("balanced searches never grow")
    }
}

struct Frame {
    v: usize,
    next: usize,
    assigned: Option<usize>,
    opened: bool,
    conflicts: FixedBitSet,
}

/// What to do with a complete colouring met during the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    /// Append vertices (each given by its neighbours, which may include
    /// earlier vertices of the same batch) and keep searching. The search
    /// stays exhaustive: added vertices only remove colourings. An empty
    /// batch accepts.
    Extend(Vec<Vec<usize>>),
}

struct Search<'m, M> {
    model: &'m mut M,
    k: usize,
    color: Vec<usize>,
    depth: Vec<usize>,
    open: usize,
    colored: usize,
    stack: Vec<Frame>,
    // dead ends seen at each vertex, the first tie-break after saturation
    fails: Vec<u64>,
}

impl<M: Model> Search<'_, M> {
    fn select(&mut self) -> usize {
        let mut best: Option<(usize, usize, (u64, usize))> = None;
        for v in 0..self.model.n() {
            if self.color[v] != NONE {
                continue;
            }
            let count = self.model.feasible_count(v, self.open, &self.color) + usize::from(self.open < self.k);
            let key = (self.fails[v], self.model.degree(v));
            if best.is_none_or(|(_, b, bk)| count < b || (count == b && key > bk)) {
                best = Some((v, count, key));
                if count == 0 {
                    break;
                }
            }
        }
        best.expect("an uncoloured vertex exists").0
    }

    fn push(&mut self, v: usize) {
        let d = self.stack.len();
        let mut conflicts = FixedBitSet::with_capacity(self.model.n());
        if self.open < self.k {
            conflicts.insert_range(..d);
        } else {
            for c in 0..self.open {
                if !self.model.feasible(v, c, &self.color) {
                    self.model.reason(v, c, &self.color, &self.depth, &mut conflicts);
                }
            }
        }
        self.stack.push(Frame {
            v,
            next: 0,
            assigned: None,
            opened: false,
            conflicts,
        });
    }

    fn undo(&mut self, f: &mut Frame) {
        if let Some(c) = f.assigned.take() {
            self.color[f.v] = NONE;
            self.depth[f.v] = NONE;
            self.model.unassign(f.v, c, &self.color);
            self.colored -= 1;
            if f.opened {
                self.open -= 1;
                f.opened = false;
            }
        }
    }

    /// Tries the next class of the top frame.
    fn advance_top(&mut self) -> bool {
        let here = self.stack.len() - 1;
        let mut top = self.stack.pop().expect("top exists");
        self.undo(&mut top);
        let limit = (self.open + 1).min(self.k);
        let mut placed = false;
        while top.next < limit {
            let c = top.next;
            top.next += 1;
            if c == self.open {
                self.open += 1;
                top.opened = true;
            } else if !self.model.feasible(top.v, c, &self.color) {
                continue;
            }
            self.model.assign(top.v, c, &self.color);
            self.color[top.v] = c;
            self.depth[top.v] = here;
            self.colored += 1;
            top.assigned = Some(c);
            placed = true;
            break;
        }
        self.stack.push(top);
        placed
    }

    /// Returns to the deepest frame among `conflicts`, handing it the rest of
    /// them; `false` when there is none left.
    fn backjump(&mut self, conflicts: FixedBitSet) -> bool {
        let Some(target) = conflicts.maximum() else {
            return false;
        };
        while self.stack.len() > target + 1 {
            let mut f = self.stack.pop().expect("target below");
            self.undo(&mut f);
        }
        let back = self.stack.last_mut().expect("target frame");
        back.conflicts.union_with(&conflicts);
        back.conflicts.remove(target);
        true
    }

    fn run<F>(&mut self, mut on_solution: F) -> Option<Coloring>
    where
        F: FnMut(&Coloring) -> Verdict,
    {
        loop {
            if self.colored == self.model.n() {
                let c = Coloring::new(self.color.clone());
                match on_solution(&c) {
                    Verdict::Extend(batch) if !batch.is_empty() => {
                        for nbrs in &batch {
                            self.model.add_vertex(nbrs, &self.color);
                            self.color.push(NONE);
                            self.depth.push(NONE);
                            self.fails.push(0);
                        }
                        continue;
                    }
                    _ => return Some(c),
                }
            }
            let v = self.select();
            self.push(v);
            // advance the top frame; an exhausted frame jumps back to the
            // deepest assignment among its conflicts
            while !self.advance_top() {
                let failed = self.stack.pop().expect("top exists");
                self.fails[failed.v] += 1;
                if !self.backjump(failed.conflicts) {
                    return None;
                }
            }
        }
    }
}

fn search_with<M, F>(model: &mut M, k: usize, on_solution: F) -> Option<Coloring>
where
    M: Model,
    F: FnMut(&Coloring) -> Verdict,
{
    let n = model.n();
    if n == 0 {
        return Some(Coloring::new(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    let mut s = Search {
        model,
        k,
        color: vec![NONE; n],
        depth: vec![NONE; n],
        open: 0,
        colored: 0,
        stack: Vec::with_capacity(n),
        fails: vec![0; n],
    };
    s.run(on_solution)
}

/// Finds a colouring with at most `k` classes, or `None`.
fn search<M: Model>(model: &mut M, k: usize) -> Option<Coloring> {
    search_with(model, k, |_| Verdict::Accept)
}

/// Runs the proper `k`-colouring search on a graph that may grow: every
/// colouring found is shown to `on_solution`, which either accepts it or
/// appends vertices. Returns the accepted colouring; `None` means the grown
/// graph has no proper `k`-colouring.
pub fn search_proper_colorings<F>(g: &Graph, k: usize, on_solution: F) -> Option<Coloring>
where
    F: FnMut(&Coloring) -> Verdict,
{
    search_with(&mut Proper::new(g, k), k, on_solution)
}

/// A proper colouring of `g` with at most `k` colours, if one exists.
pub fn find_proper_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    search(&mut Proper::new(g, k), k)
}

/// A colouring of `g` with at most `k` balanced classes, if one exists.
pub fn find_balanced_coloring(g: &SignedGraph, k: usize) -> Option<Coloring> {
    let mut model = Balanced {
        g,
        dsu: ParityDsu::new(g.n()),
        marks: Vec::new(),
    };
    search(&mut model, k)
}

fn deepen<F>(n: usize, lower: usize, upper: Option<usize>, mut solve: F) -> Result<(usize, Coloring), ColorError>
where
    F: FnMut(usize) -> Option<Coloring>,
{
    let mut at_cap = None;
    if let Some(u) = upper {
        // infeasible at the cap means infeasible below it too
        at_cap = Some(solve(u).ok_or(ColorError::ExceedsBound(u))?);
    }
    let cap = upper.unwrap_or(n).min(n);
    for k in lower.min(cap)..cap {
        if let Some(c) = solve(k) {
            return Ok((c.num_colors(), c));
        }
    }
    if let Some(c) = at_cap.or_else(|| solve(cap)) {
        return Ok((c.num_colors(), c));
    }
    unreachable!("n colours always suffice")
}

/// Balanced chromatic number with a witness. With `upper = Some(u)` an
/// optimum above `u` is reported as [`ColorError::ExceedsBound`].
pub fn chi_b_exact(g: &SignedGraph, upper: Option<usize>) -> Result<(usize, Coloring), ColorError> {
    let lower = usize::from(g.n() > 0);
    deepen(g.n(), lower, upper, |k| find_balanced_coloring(g, k))
}

/// Chromatic number with a witness; same contract as [`chi_b_exact`].
pub fn chi_exact(g: &Graph, upper: Option<usize>) -> Result<(usize, Coloring), ColorError> {
    let lower = if g.m() > 0 { 2 } else { usize::from(g.n() > 0) };
    deepen(g.n(), lower, upper, |k| find_proper_coloring(g, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::coloring::{validate_coloring, validate_proper};
    use crate::sign::Sign;

    #[test]
    fn small_chromatic_numbers() {
        for n in 1..7 {
            assert_eq!(chi_exact(&Graph::complete(n), None).unwrap().0, n);
        }
        assert_eq!(chi_exact(&Graph::cycle(5), None).unwrap().0, 3);
        assert_eq!(chi_exact(&Graph::cycle(6), None).unwrap().0, 2);
        assert_eq!(chi_exact(&Graph::empty(0), None).unwrap().0, 0);
        assert_eq!(chi_exact(&Graph::empty(3), None).unwrap().0, 1);
        assert_eq!(chi_exact(&Graph::complete(4), Some(3)), Err(ColorError::ExceedsBound(3)));
    }

    #[test]
    fn negative_cliques() {
        for i in 1..=8 {
            let g = SignedGraph::complete(i, Sign::Negative);
            let (k, c) = chi_b_exact(&g, None).unwrap();
            assert_eq!(k, i.div_ceil(2));
            assert!(validate_coloring(&g, &c));
        }
        let k3 = SignedGraph::complete(3, Sign::Negative);
        assert_eq!(chi_b_exact(&k3, Some(1)), Err(ColorError::ExceedsBound(1)));
    }

    #[test]
    fn witnesses_are_valid() {
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (4, 5), (5, 6), (6, 4), (3, 4)]).unwrap();
        let (k, c) = chi_exact(&g, None).unwrap();
        assert_eq!(k, 3);
        assert!(validate_proper(&g, &c));
        assert!(find_proper_coloring(&g, 2).is_none());
    }
}
