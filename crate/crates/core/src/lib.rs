//! Signed graphs: switching, balance, induced-subgraph detection, balanced
//! colorings and the generators used to probe chi-boundedness questions.

pub mod balance;
pub mod color;
pub mod detect;
pub mod dsu;
pub mod enumerate;
pub mod error;
pub mod gen;
pub mod graph;
pub mod sign;
pub mod signed;

pub use balance::{is_balanced, is_balanced_set, switching_equivalent, BalanceCertificate};
pub use error::{ColorError, GenError, GraphError};
pub use graph::Graph;
pub use sign::Sign;
pub use signed::{SignedGraph, SwitchingSet};
