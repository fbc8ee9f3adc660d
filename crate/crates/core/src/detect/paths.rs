use crate::graph::Graph;

/// Is `seq` an induced path: distinct vertices, consecutive ones adjacent and
/// no chords?
pub fn is_induced_path(g: &Graph, seq: &[usize]) -> bool {
    if seq.iter().any(|&v| v >= g.n()) {
        return false;
    }
    for (i, &u) in seq.iter().enumerate() {
        for (j, &v) in seq.iter().enumerate().skip(i + 1) {
            if u == v || g.has_edge(u, v) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

/// A longest induced path, by exhaustive DFS. The search stops as soon as a
/// path with `cap` edges is found. Returns `(edges, vertices)`; an empty graph
/// gives `(0, [])`.
pub fn longest_induced_path(g: &Graph, cap: usize) -> (usize, Vec<usize>) {
    let mut dfs = PathDfs {
        g,
        cap: cap.max(1),
        path: Vec::new(),
        // number of path vertices adjacent to each vertex
        touching: vec![0; g.n()],
        on_path: vec![false; g.n()],
        best: Vec::new(),
    };
    for s in 0..g.n() {
        dfs.push(s);
        let done = dfs.grow();
        dfs.pop();
        if done {
            break;
        }
    }
    let best = dfs.best;
    (best.len().saturating_sub(1), best)
}

/// Does `g` contain an induced path on `k` vertices?
pub fn has_induced_path(g: &Graph, k: usize) -> bool {
    k == 0 || longest_induced_path(g, k - 1).1.len() >= k
}

struct PathDfs<'a> {
    g: &'a Graph,
    cap: usize,
    path: Vec<usize>,
    touching: Vec<usize>,
    on_path: Vec<bool>,
    best: Vec<usize>,
}

impl PathDfs<'_> {
    fn push(&mut self, v: usize) {
        self.path.push(v);
        self.on_path[v] = true;
        for &w in self.g.neighbors(v) {
            self.touching[w] += 1;
        }
    }

    fn pop(&mut self) {
        let v = self.path.pop().expect("non-empty path");
        self.on_path[v] = false;
        for &w in self.g.neighbors(v) {
            self.touching[w] -= 1;
        }
    }

    // true once a path with `cap` edges has been recorded
    fn grow(&mut self) -> bool {
        if self.path.len() > self.best.len() {
            self.best = self.path.clone();
            if self.best.len() > self.cap {
                return true;
            }
        }
        let last = *self.path.last().expect("non-empty path");
        for idx in 0..self.g.degree(last) {
            let w = self.g.neighbors(last)[idx];
            if self.on_path[w] || self.touching[w] != 1 {
                continue;
            }
            self.push(w);
            let done = self.grow();
            self.pop();
            if done {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(longest_induced_path(&Graph::empty(0), 3), (0, vec![]));
        assert_eq!(longest_induced_path(&Graph::empty(2), 3).0, 0);
        for n in 2..7 {
            assert_eq!(longest_induced_path(&Graph::complete(n), 10).0, 1);
            assert_eq!(longest_induced_path(&Graph::path(n), 10).0, n - 1);
        }
        let (len, seq) = longest_induced_path(&Graph::cycle(6), 10);
        assert_eq!(len, 4);
        assert!(is_induced_path(&Graph::cycle(6), &seq));
    }

    #[test]
    fn cap_truncates() {
        let (len, seq) = longest_induced_path(&Graph::path(9), 3);
        assert_eq!(len, 3);
        assert!(is_induced_path(&Graph::path(9), &seq));
        assert!(has_induced_path(&Graph::path(9), 9));
        assert!(!has_induced_path(&Graph::path(9), 10));
    }

    #[test]
    fn chords_are_rejected() {
        let c5 = Graph::cycle(5);
        assert!(is_induced_path(&c5, &[0, 1, 2, 3]));
        assert!(!is_induced_path(&c5, &[0, 1, 2, 3, 4]));
        assert!(!is_induced_path(&c5, &[0, 2]));
    }
}
