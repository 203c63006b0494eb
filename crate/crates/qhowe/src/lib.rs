//! Exact construction and verification of quantized Clifford operators,
//! quantum-group embeddings on the fermionic Fock space of an `n × m` grid,
//! and the orthogonal skew Howe duality they generate.

pub mod decomposition;
pub mod embeddings;
pub mod fock;
pub mod highestweight;
pub mod linalg;
pub mod presentations;
pub mod scalars;
