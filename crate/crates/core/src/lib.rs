//! Exact plethystic exponentials of Hodge-Deligne polynomials.
//!
//! The crate computes `PE[f]` three independent ways (the closed product
//! formula, the complete-homogeneous plethysm `Σ hₙ ⊙ f`, and signed
//! colorings of acyclic orientations of complete graphs) together with the
//! surrounding identity web: chromatic symmetric function bases,
//! configuration-space series, character-variety generating functions,
//! generator decompositions in the `A`/`B`/`C` coordinates and Serre-duality
//! relations in two-variable power sums.
//!
//! All arithmetic is exact over `ℚ`. The crate is `no_std` and only needs
//! `alloc`; file formats and the command-line interface live in the
//! `plethora` companion crate.

#![no_std]

extern crate alloc;

pub mod chromgraph;
mod error;
pub mod exactalg;
pub mod genfun;
pub mod hodge;
pub mod symfun;

pub use error::{Error, Result};

/// Enumeration guards for the brute-force routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Upper bound on enumerated states (orientations × colorings, `kⁿ`, ...).
    pub max_states: u64,
    /// Upper bound on the number of edges for edge-subset expansions.
    pub max_edges: usize,
}

impl Limits {
    pub const DEFAULT_MAX_STATES: u64 = 10_000_000;
    pub const DEFAULT_MAX_EDGES: usize = 20;

    pub fn with_max_states(max_states: u64) -> Self {
        Limits {
            max_states,
            ..Limits::default()
        }
    }

    pub(crate) fn check_states(&self, what: &'static str, states: u128) -> Result<()> {
        if states > u128::from(self.max_states) {
            Err(Error::GuardExceeded {
                what,
                states,
                limit: self.max_states,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_states: Self::DEFAULT_MAX_STATES,
            max_edges: Self::DEFAULT_MAX_EDGES,
        }
    }
}
