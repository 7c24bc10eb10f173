//! Weighted graphs, chromatic symmetric functions, acyclic orientations and
//! the signed coloring sum that realizes plethysm against `X_(G,w)`.

mod basis;
mod coloring;
mod csf;
mod graph;
mod orientation;

pub use basis::{csf_basis_matrix, h_in_csf_basis, CsfBasisMatrix};
pub use coloring::{cs_coloring_sum, cs_coloring_sum_with_vars, var_multiset, SignedVar, SignedVarList};
pub use csf::{chromatic_polynomial, csf, csf_bruteforce, ColorPoly};
pub use graph::WeightedGraph;
pub use orientation::{acyclic_orientations, AcyclicOrientation};
