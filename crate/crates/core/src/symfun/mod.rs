//! Symmetric functions in the power-sum basis with exact plethysm.

mod bases;
mod hseq;
mod partition;
mod plethysm;
mod symfun;

pub use bases::{e_to_p, h_to_p, s_to_p};
pub use hseq::HSeq;
pub use partition::{partitions_of, z_of, Partition};
pub use plethysm::{pleth_abstract, pleth_concrete, pleth_schur_via_jt, pleth_series};
pub use symfun::SymFun;
