//! Induced-subgraph detection.

mod cograph;
mod fast;
mod forb;
mod matcher;
mod paths;
mod pattern;

pub use cograph::{cotree, is_cograph, CoTree};
pub use fast::{has_neg_k4, has_neg_triangle, neg_k4_vertices, neg_triangle_vertices};
pub use forb::{find_pattern, in_forb_class, ForbReport, ForbSpec, Violation};
pub use matcher::find_induced;
pub use paths::{has_induced_path, is_induced_path, longest_induced_path};
pub use pattern::{k4_matching, Embedding, MatchMode, Pattern};
