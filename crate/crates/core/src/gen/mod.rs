//! Generators for signed graph families and the lower-bound construction.

mod claim1;
mod envelope;
mod families;
mod lazy;
mod orient;
mod p4class;
mod random;
mod shift;

pub use claim1::{claim1_xyz, XyzTriple};
pub use envelope::{find_envelope, EnvelopeCandidate, EnvelopeDefect};
pub use families::{all_negative, neg_clique, positive_completion};
pub use lazy::{build_lr_lazy, LazyBuild, LazyConfig, LazyStep};
pub use orient::{arc_graph, signed_line_graph, Orientation};
pub use p4class::sample_p4class_member;
pub use random::{girth, random_girth_graph, random_k3free_connected, random_graph, random_signed_graph, rng, shortest_cycle, SgRng};
pub use shift::{gen_shift, gen_signed_shift3, shift_sequences};
