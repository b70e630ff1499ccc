//! Face covers and rooted K2,t minors for graphs embedded in surfaces.

pub mod dichotomy;
pub mod embed;
pub mod error;
pub mod generators;
pub mod graph;
pub mod model;
pub mod oracles;
pub mod schnyder;
pub mod surface;

pub use embed::{Dart, Embedding, RootSet};
pub use error::{Error, Result};
pub use graph::Graph;
