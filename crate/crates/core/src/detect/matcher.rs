//! Backtracking search for induced occurrences of a small template.

use crate::balance::switching_equivalent;
use crate::dsu::ParityDsu;
use crate::sign::Sign;
use crate::signed::{SignedGraph, SwitchingSet};

use super::pattern::{Embedding, MatchMode, Pattern};

/// Finds the first induced occurrence of `pattern` in `host`.
///
/// Template vertices are placed connectivity first, then by decreasing degree;
/// host candidates are tried in ascending index, so witnesses are
/// deterministic. Up-to-switching matches prune partial maps with a parity
/// union-find over the sign products and confirm the final image with
/// [`switching_equivalent`].
pub fn find_induced(host: &SignedGraph, pattern: &Pattern) -> Option<Embedding> {
    let t = pattern.template();
    if t.n() > host.n() {
        return None;
    }
    let mut search = Search::new(host, pattern);
    if search.extend(0) {
        search.result
    } else {
        None
    }
}

/// Builds the embedding for a complete map, computing the switching witness
/// when the mode needs one. `None` if the map is not an occurrence.
pub(crate) fn embedding_from_map(
    host: &SignedGraph,
    pattern: &Pattern,
    map: Vec<usize>,
) -> Option<Embedding> {
    let switching = match pattern.mode() {
        MatchMode::UpToSwitching => {
            let image = host.induced(&map).ok()?;
            if !image.same_underlying(pattern.template()) {
                return None;
            }
            let w = switching_equivalent(&image, pattern.template()).ok()??;
            Some(w.iter().map(|i| map[i]).collect::<SwitchingSet>())
        }
        _ => None,
    };
    let emb = Embedding { map, switching };
    emb.verify(host, pattern).then_some(emb)
}

struct Step {
    vertex: usize,
    // first earlier position adjacent in the template
    anchor: Option<usize>,
    // (earlier position, template sign between them if adjacent)
    back: Vec<(usize, Option<Sign>)>,
    degree: usize,
    pos_degree: usize,
    neg_degree: usize,
}

struct Search<'a> {
    host: &'a SignedGraph,
    pattern: &'a Pattern,
    steps: Vec<Step>,
    host_pos: Vec<usize>,
    // image of each step position
    image: Vec<usize>,
    used: Vec<bool>,
    dsu: ParityDsu,
    result: Option<Embedding>,
}

impl<'a> Search<'a> {
    fn new(host: &'a SignedGraph, pattern: &'a Pattern) -> Self {
        let t = pattern.template();
        let k = t.n();
        let mut order: Vec<usize> = Vec::with_capacity(k);
        let mut placed = vec![false; k];
        while order.len() < k {
            let next = (0..k)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let attached = t.neighbors(v).iter().any(|&(w, _)| placed[w]);
                    (attached, t.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex");
            placed[next] = true;
            order.push(next);
        }
        let steps = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let back: Vec<_> = (0..i).map(|j| (j, t.sign(v, order[j]))).collect();
                let anchor = back.iter().find(|b| b.1.is_some()).map(|b| b.0);
                let neg_degree = t.neighbors(v).iter().filter(|e| e.1.is_negative()).count();
                Step {
                    vertex: v,
                    anchor,
                    back,
                    degree: t.degree(v),
                    pos_degree: t.degree(v) - neg_degree,
                    neg_degree,
                }
            })
            .collect();
        let host_pos = (0..host.n())
            .map(|v| host.neighbors(v).iter().filter(|e| e.1.is_positive()).count())
            .collect();
        Search {
            host,
            pattern,
            steps,
            host_pos,
            image: vec![usize::MAX; k],
            used: vec![false; host.n()],
            dsu: ParityDsu::new(k),
            result: None,
        }
    }

    fn extend(&mut self, i: usize) -> bool {
        if i == self.steps.len() {
            let mut map = vec![0; i];
            for (pos, step) in self.steps.iter().enumerate() {
                map[step.vertex] = self.image[pos];
            }
            self.result = embedding_from_map(self.host, self.pattern, map);
            return self.result.is_some();
        }
        let candidates: Vec<usize> = match self.steps[i].anchor {
            Some(a) => self.host.neighbors(self.image[a]).iter().map(|e| e.0).collect(),
            None => (0..self.host.n()).collect(),
        };
        let mode = self.pattern.mode();
        for c in candidates {
            if self.used[c] || !self.admissible(i, c, mode) {
                continue;
            }
            let cp = self.dsu.checkpoint();
            if mode == MatchMode::UpToSwitching && !self.unite_parities(i, c) {
                self.dsu.rollback(cp);
                continue;
            }
            self.used[c] = true;
            self.image[i] = c;
            if self.extend(i + 1) {
                return true;
            }
            self.used[c] = false;
            self.image[i] = usize::MAX;
            self.dsu.rollback(cp);
        }
        false
    }

    fn admissible(&self, i: usize, c: usize, mode: MatchMode) -> bool {
        let step = &self.steps[i];
        let host = self.host;
        if host.degree(c) < step.degree {
            return false;
        }
        if mode == MatchMode::Exact2EC {
            let pos = self.host_pos[c];
            if pos < step.pos_degree || host.degree(c) - pos < step.neg_degree {
                return false;
            }
        }
        step.back.iter().all(|&(j, ts)| {
            let hs = host.sign(c, self.image[j]);
            match mode {
                MatchMode::Exact2EC => hs == ts,
                _ => hs.is_some() == ts.is_some(),
            }
        })
    }

    fn unite_parities(&mut self, i: usize, c: usize) -> bool {
        let v = self.steps[i].vertex;
        for idx in 0..self.steps[i].back.len() {
            let (j, ts) = self.steps[i].back[idx];
            if let Some(ts) = ts {
                let hs = self.host.sign(c, self.image[j]).expect("checked adjacent");
                let w = self.steps[j].vertex;
                if !self.dsu.unite(v, w, (hs * ts).parity()) {
                    return false;
                }
            }
        }
        true
    }
}
