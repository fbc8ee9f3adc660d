/// Disjoint-set union where every element carries a parity relative to its
/// root. Merging two elements fixes their relative parity; a merge that
/// contradicts the parities already implied is rejected.
///
/// All writes go through a trail so the structure can be rolled back to any
/// earlier checkpoint. Path compression is trailed as well.
#[derive(Clone, Debug)]
pub struct ParityDsu {
    parent: Vec<usize>,
    // parity of the element relative to its parent
    parity: Vec<u8>,
    size: Vec<usize>,
    trail: Vec<Undo>,
}

#[derive(Clone, Copy, Debug)]
enum Undo {
    Link { node: usize, parent: usize, parity: u8 },
    Size { root: usize, size: usize },
}

/// Opaque rollback point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checkpoint(usize);

impl ParityDsu {
    pub fn new(n: usize) -> Self {
        ParityDsu {
            parent: (0..n).collect(),
            parity: vec![0; n],
            size: vec![1; n],
            trail: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Root of `x` and the parity of `x` relative to it, without mutating.
    pub fn peek(&self, mut x: usize) -> (usize, u8) {
        let mut p = 0;
        while self.parent[x] != x {
            p ^= self.parity[x];
            x = self.parent[x];
        }
        (x, p)
    }

    /// Like [`peek`](Self::peek) but compresses the path.
    pub fn find(&mut self, x: usize) -> (usize, u8) {
        let (root, p) = self.peek(x);
        let (mut cur, mut cur_p) = (x, p);
        while self.parent[cur] != root && self.parent[cur] != cur {
            let next = self.parent[cur];
            let next_p = cur_p ^ self.parity[cur];
            self.relink(cur, root, cur_p);
            cur = next;
            cur_p = next_p;
        }
        (root, p)
    }

    fn relink(&mut self, node: usize, parent: usize, parity: u8) {
        self.trail.push(Undo::Link {
            node,
            parent: self.parent[node],
            parity: self.parity[node],
        });
        self.parent[node] = parent;
        self.parity[node] = parity;
    }

    /// Requires `parity(a) ^ parity(b) == rel`. Returns `false` (and changes
    /// nothing observable) if that contradicts existing constraints.
    pub fn unite(&mut self, a: usize, b: usize, rel: u8) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == rel & 1;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.relink(small, big, pa ^ pb ^ (rel & 1));
        self.trail.push(Undo::Size {
            root: big,
            size: self.size[big],
        });
        self.size[big] += self.size[small];
        true
    }

    /// Would `unite(a, b, rel)` succeed?
    pub fn consistent(&self, a: usize, b: usize, rel: u8) -> bool {
        let (ra, pa) = self.peek(a);
        let (rb, pb) = self.peek(b);
        ra != rb || pa ^ pb == rel & 1
    }

    pub fn checkpoint(&self) -> Checkpoint {
        Checkpoint(self.trail.len())
    }

    pub fn rollback(&mut self, cp: Checkpoint) {
        while self.trail.len() > cp.0 {
            match self.trail.pop().expect("non-empty") {
                Undo::Link {
                    node,
                    parent,
                    parity,
                } => {
                    self.parent[node] = parent;
                    self.parity[node] = parity;
                }
                Undo::Size { root, size } => self.size[root] = size,
            }
        }
    }
}
