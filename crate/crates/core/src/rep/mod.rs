pub mod bochner;
pub mod casimir;
pub mod tables;
pub mod weyl;

pub use casimir::{casimir_operator, CasimirOracle, IsotypicDecomposition};
pub use tables::{table_dimension_check, DecompositionTable, Space};
pub use weyl::{lambda_dim, weight_of, weyl_dim, WeightVector};
