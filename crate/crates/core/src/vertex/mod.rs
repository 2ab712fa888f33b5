//! Cylindric vertex model whose partition functions generate fusion
//! coefficients.

mod lattice;
mod partition_function;
mod poly;

pub use lattice::{
    enumerate_lattice_configs, find_lattice_config, rows_from, rows_with_seam, LatticeConfig, Row,
    Vertex,
};
pub use partition_function::{
    boltzmann_weight, count_paths, fusion_degree, hook_content_sum, partition_function, Backend,
};
pub use poly::{schur_polynomial, Monomial, SymbolicPoly};
