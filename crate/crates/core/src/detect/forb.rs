use crate::signed::SignedGraph;

use super::cograph::cotree;
use super::fast::{has_neg_k4, has_neg_triangle};
use super::matcher::{embedding_from_map, find_induced};
use super::pattern::{Embedding, Pattern, Shape};

/// A class `Forb_ind(F)` given by its list of forbidden patterns.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ForbSpec(Vec<Pattern>);

impl ForbSpec {
    pub fn new(patterns: Vec<Pattern>) -> Self {
        ForbSpec(patterns)
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.0
    }

    pub fn push(&mut self, p: Pattern) {
        self.0.push(p);
    }

    /// `{(K3, -), (K4, M)}` as 2-edge-coloured graphs together with `P4`.
    pub fn p4_class() -> Self {
        ForbSpec(vec![Pattern::k3_neg_exact(), Pattern::k4m_exact(), Pattern::path(4)])
    }

    /// `{(K3, -), (K4, M)}` as 2-edge-coloured graphs together with `P_k`.
    pub fn exact_cliques_with_path(k: usize) -> Self {
        ForbSpec(vec![Pattern::k3_neg_exact(), Pattern::k4m_exact(), Pattern::path(k)])
    }

    /// `(K4, -)` up to switching together with `P_k`.
    pub fn neg_k4_with_path(k: usize) -> Self {
        ForbSpec(vec![Pattern::neg_k4(), Pattern::path(k)])
    }

    /// Builds a spec from pattern names, see [`Pattern::from_name`].
    pub fn from_names<'a, I: IntoIterator<Item = &'a str>>(names: I) -> Result<Self, String> {
        names.into_iter().map(Pattern::from_name).collect::<Result<_, _>>().map(ForbSpec)
    }
}

impl FromIterator<Pattern> for ForbSpec {
    fn from_iter<I: IntoIterator<Item = Pattern>>(iter: I) -> Self {
        ForbSpec(iter.into_iter().collect())
    }
}

/// A pattern that was found, with the occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub pattern: Pattern,
    pub embedding: Embedding,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbReport {
    pub violations: Vec<Violation>,
}

impl ForbReport {
    pub fn is_member(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Like [`find_induced`] but routes the negative triangle, `(K4, -)` and `P4`
/// through their dedicated checks.
pub fn find_pattern(g: &SignedGraph, p: &Pattern) -> Option<Embedding> {
    match p.shape() {
        Shape::NegTriangle => has_neg_triangle(g),
        Shape::NegK4 => has_neg_k4(g),
        Shape::P4 => cotree(&g.underlying())
            .err()
            .and_then(|w| embedding_from_map(g, p, w.to_vec())),
        Shape::Generic => find_induced(g, p),
    }
}

/// Checks every pattern of `spec`; each one that occurs contributes its first
/// witness.
pub fn in_forb_class(g: &SignedGraph, spec: &ForbSpec) -> ForbReport {
    let violations = spec
        .patterns()
        .iter()
        .filter_map(|p| {
            find_pattern(g, p).map(|embedding| Violation {
                pattern: p.clone(),
                embedding,
            })
        })
        .collect();
    ForbReport { violations }
}
