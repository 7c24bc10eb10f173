//! Hodge diamonds, E-polynomials and the `A`/`B`/`C` generator coordinates.

mod abc;
mod diamond;
mod powersum;

pub use abc::{abc_decompose, abc_sequences, birational_reduce, r_generator, r_generator_abc, AbcPoly, AbcSequence, ZGraded};
pub use diamond::{scissor_sum, serre_dual_transform, validate_symmetries, HodgeDiamond, SymmetryReport};
pub use powersum::{serre_duality_power_sum_relation, two_var_eval, two_var_power_sum_expand};
