pub mod rho;
pub mod engine;

pub use engine::{a_map_check, gk_subspace, is_bracket_closed, so_algebra, GStructure, StructureForm};
pub use rho::{rho_matrix, rho_star};
pub mod conditions;
pub mod presets;
pub mod symbol;

pub use conditions::{condition_c2_check, rank_one_decompose};
pub use symbol::{exactness_at_1, symbol_map, SymbolMap};
