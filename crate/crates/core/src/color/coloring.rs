use crate::balance::{is_balanced, BalanceCertificate};
use crate::graph::Graph;
use crate::signed::SignedGraph;

/// A vertex colouring: `colors[v]` is the colour of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<usize>);

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring(colors)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Number of distinct colours used.
    pub fn num_colors(&self) -> usize {
        let mut seen: Vec<usize> = self.0.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Relabels colours `0, 1, ...` in order of first appearance.
    pub fn normalized(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        Coloring(
            self.0
                .iter()
                .map(|&c| {
                    let next = map.len();
                    *map.entry(c).or_insert(next)
                })
                .collect(),
        )
    }

    /// Colour classes of the normalized colouring, each ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let norm = self.normalized();
        let mut out = vec![Vec::new(); norm.num_colors()];
        for (v, &c) in norm.0.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

impl FromIterator<usize> for Coloring {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Coloring(iter.into_iter().collect())
    }
}

/// Is every colour class a balanced set?
pub fn validate_coloring(g: &SignedGraph, c: &Coloring) -> bool {
    c.len() == g.n()
        && c.classes().iter().all(|class| {
            g.induced(class)
                .map(|h| is_balanced(&h).is_balanced())
                .unwrap_or(false)
        })
}

/// Is every colour class independent in `g`?
pub fn validate_proper(g: &Graph, c: &Coloring) -> bool {
    c.len() == g.n() && g.edges().all(|(u, v)| c.color(u) != c.color(v))
}

/// For each colour class of a balanced colouring, the two sides of its
/// balance bipartition: negative edges of the class cross, positive edges
/// stay on one side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityPartition(pub Vec<[Vec<usize>; 2]>);

/// `None` if some class is unbalanced.
pub fn parity_partition(g: &SignedGraph, c: &Coloring) -> Option<ParityPartition> {
    if c.len() != g.n() {
        return None;
    }
    c.classes()
        .into_iter()
        .map(|class| {
            let h = g.induced(&class).ok()?;
            match is_balanced(&h) {
                BalanceCertificate::Balanced(w) => {
                    let (flip, keep): (Vec<usize>, Vec<usize>) =
                        (0..class.len()).partition(|&i| w.contains(i));
                    Some([
                        keep.into_iter().map(|i| class[i]).collect(),
                        flip.into_iter().map(|i| class[i]).collect(),
                    ])
                }
                BalanceCertificate::Unbalanced(_) => None,
            }
        })
        .collect::<Option<Vec<_>>>()
        .map(ParityPartition)
}
