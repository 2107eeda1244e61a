//! Independent checks used by the test suites: exact Burau matrices,
//! bounded relation-move search, and random input generators.

pub mod burau;
pub mod laurent;
pub mod sampling;
pub mod search;

pub use burau::{burau, check_rule_instance, BurauMatrix};
pub use laurent::LaurentPoly;
pub use search::{bfs_equal, Verdict};
