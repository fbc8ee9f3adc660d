use std::fmt;

use crate::graph::Graph;
use crate::sign::Sign;
use crate::signed::{SignedGraph, SwitchingSet};

/// How a template is matched against induced subgraphs of a host.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatchMode {
    /// Signs are ignored on both sides.
    Underlying,
    /// Signs must agree edge for edge (2-edge-colored matching).
    Exact2EC,
    /// The induced image must be switching equivalent to the template.
    UpToSwitching,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Shape {
    Generic,
    NegTriangle,
    NegK4,
    P4,
}

/// A forbidden induced subgraph query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    template: SignedGraph,
    mode: MatchMode,
    name: String,
    shape: Shape,
}

impl Pattern {
    pub fn new(template: SignedGraph, mode: MatchMode) -> Self {
        let name = format!("{:?}/{:?}", template, mode);
        Pattern {
            template,
            mode,
            name,
            shape: Shape::Generic,
        }
    }

    fn named(template: SignedGraph, mode: MatchMode, name: &str, shape: Shape) -> Self {
        Pattern {
            template,
            mode,
            name: name.to_string(),
            shape,
        }
    }

    pub fn template(&self) -> &SignedGraph {
        &self.template
    }

    pub fn mode(&self) -> MatchMode {
        self.mode
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub(crate) fn shape(&self) -> Shape {
        self.shape
    }

    pub fn with_mode(&self, mode: MatchMode) -> Pattern {
        Pattern::new(self.template.clone(), mode)
    }

    /// `(K3, -)` up to switching: the negative triangle.
    pub fn neg_k3() -> Self {
        Self::named(SignedGraph::complete(3, Sign::Negative), MatchMode::UpToSwitching, "neg-k3", Shape::NegTriangle)
    }

    /// `(K4, -)` up to switching.
    pub fn neg_k4() -> Self {
        Self::named(SignedGraph::complete(4, Sign::Negative), MatchMode::UpToSwitching, "neg-k4", Shape::NegK4)
    }

    /// `(K3, -)` as a 2-edge-colored graph.
    pub fn k3_neg_exact() -> Self {
        Self::named(SignedGraph::complete(3, Sign::Negative), MatchMode::Exact2EC, "k3neg-exact", Shape::Generic)
    }

    /// `(K3, +)` as a 2-edge-colored graph.
    pub fn k3_pos_exact() -> Self {
        Self::named(SignedGraph::complete(3, Sign::Positive), MatchMode::Exact2EC, "k3pos-exact", Shape::Generic)
    }

    /// `(K4, M)` as a 2-edge-colored graph.
    pub fn k4m_exact() -> Self {
        Self::named(k4_matching(), MatchMode::Exact2EC, "k4m-exact", Shape::Generic)
    }

    /// Path on `k` vertices, signs ignored.
    pub fn path(k: usize) -> Self {
        let shape = if k == 4 { Shape::P4 } else { Shape::Generic };
        Self::named(SignedGraph::uniform(&Graph::path(k), Sign::Positive), MatchMode::Underlying, &format!("p{k}"), shape)
    }

    /// `K_{1,leaves}`, signs ignored.
    pub fn star(leaves: usize) -> Self {
        let name = match leaves {
            3 => "claw".to_string(),
            t => format!("k1{t}"),
        };
        Self::named(SignedGraph::uniform(&Graph::star(leaves), Sign::Positive), MatchMode::Underlying, &name, Shape::Generic)
    }

    pub fn claw() -> Self {
        Self::star(3)
    }

    /// Disjoint union of paths with the given vertex counts, signs ignored.
    pub fn linear_forest(path_sizes: &[usize]) -> Self {
        let g = path_sizes
            .iter()
            .fold(Graph::empty(0), |acc, &k| acc.disjoint_union(&Graph::path(k)));
        let spec: Vec<String> = path_sizes.iter().map(|k| k.to_string()).collect();
        let shape = if path_sizes == [4] { Shape::P4 } else { Shape::Generic };
        Self::named(
            SignedGraph::uniform(&g, Sign::Positive),
            MatchMode::Underlying,
            &format!("linear-forest:{}", spec.join(",")),
            shape,
        )
    }

    /// Parses the names used on the command line: `neg-k3`, `neg-k4`,
    /// `k4m-exact`, `k3neg-exact`, `k3pos-exact`, `p<k>`, `claw`, `k1<t>`,
    /// `linear-forest:<k1>,<k2>,...`.
    pub fn from_name(name: &str) -> Result<Pattern, String> {
        let bad = || format!("unknown pattern `{name}`");
        match name {
            "neg-k3" => Ok(Self::neg_k3()),
            "neg-k4" => Ok(Self::neg_k4()),
            "k4m-exact" => Ok(Self::k4m_exact()),
            "k3neg-exact" => Ok(Self::k3_neg_exact()),
            "k3pos-exact" => Ok(Self::k3_pos_exact()),
            "claw" => Ok(Self::claw()),
            _ => {
                if let Some(spec) = name.strip_prefix("linear-forest:") {
                    let sizes = spec
                        .split(',')
                        .map(|s| s.trim().parse::<usize>().ok().filter(|&k| k >= 1))
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(bad)?;
                    return Ok(Self::linear_forest(&sizes));
                }
                if let Some(k) = name.strip_prefix("k1").and_then(|t| t.parse::<usize>().ok()) {
                    return Ok(Self::star(k));
                }
                if let Some(k) = name.strip_prefix('p').and_then(|t| t.parse::<usize>().ok()) {
                    if k >= 1 {
                        return Ok(Self::path(k));
                    }
                }
                Err(bad())
            }
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// `(K4, M)`: the negative edges `{0,1}` and `{2,3}` form a perfect matching.
pub fn k4_matching() -> SignedGraph {
    SignedGraph::from_graph_with(&Graph::complete(4), |u, v| {
        if (u, v) == (0, 1) || (u, v) == (2, 3) {
            Sign::Negative
        } else {
            Sign::Positive
        }
    })
}

/// An occurrence of a template in a host: template vertex `i` maps to
/// `map[i]`. For up-to-switching matches, `switching` is a set of host
/// vertices inside the image whose switching turns the image's signs into the
/// template's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
    pub switching: Option<SwitchingSet>,
}

impl Embedding {
    /// Re-verifies the occurrence without rerunning any search.
    pub fn verify(&self, host: &SignedGraph, pattern: &Pattern) -> bool {
        let t = pattern.template();
        let k = t.n();
        if self.map.len() != k || self.map.iter().any(|&v| v >= host.n()) {
            return false;
        }
        let mut seen = self.map.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != k {
            return false;
        }
        let flipped = |v: usize| self.switching.as_ref().is_some_and(|w| w.contains(v));
        if let Some(w) = &self.switching {
            if w.iter().any(|v| !self.map.contains(&v)) {
                return false;
            }
        }
        for i in 0..k {
            for j in i + 1..k {
                let hs = host.sign(self.map[i], self.map[j]);
                let ts = t.sign(i, j);
                let ok = match pattern.mode() {
                    MatchMode::Underlying => hs.is_some() == ts.is_some(),
                    MatchMode::Exact2EC => hs == ts,
                    MatchMode::UpToSwitching => {
                        let hs = hs.map(|s| {
                            if flipped(self.map[i]) != flipped(self.map[j]) { -s } else { s }
                        });
                        hs == ts
                    }
                };
                if !ok {
                    return false;
                }
            }
        }
        pattern.mode() != MatchMode::UpToSwitching || self.switching.is_some()
    }
}
