//! Balanced and proper colourings: validators, the exact oracle and the
//! constructive algorithms.

mod coloring;
mod exact;
mod forest;
mod join;
mod layered;
mod tabu;

pub use coloring::{parity_partition, validate_coloring, validate_proper, Coloring, ParityPartition};
pub use exact::{chi_b_exact, chi_exact, find_balanced_coloring, find_proper_coloring, search_proper_colorings, Verdict};
pub use forest::{color_linear_forest, color_path_free, color_union_forest};
pub use join::{color_nbhd_via_p4class, color_p4class, six_color_join, three_color_join_side};
pub use layered::{color_layered_nbhd, color_or_path_k3free, ColorOrPath};
pub use tabu::tabu_coloring;

use crate::signed::SignedGraph;

/// A balanced colouring with exactly `χ(G⁻)` colours: an optimal proper
/// colouring of the negative subgraph.
pub fn color_via_negative(g: &SignedGraph) -> Coloring {
    match chi_exact(&g.negative_subgraph(), None) {
        Ok((_, c)) => c,
        Err(_) => unreachable!("no upper bound given"),
    }
}
