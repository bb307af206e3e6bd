//! Exact arithmetic for normalized generalized contact Lie algebras.

pub mod algebra;
pub mod analysis;
pub mod classical;
pub mod cli;
pub mod error;
pub mod format;
pub mod indexing;
pub mod isomorphism;
pub mod lattice;
pub mod linalg;
pub mod properties;
pub mod rational;
pub mod report;
pub mod sampling;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/indexing.md")]
    pub mod indexing {}
    #[doc = include_str!("../../../book/src/lattices.md")]
    pub mod lattices {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    pub mod algebra {}
    #[doc = include_str!("../../../book/src/analysis.md")]
    pub mod analysis {}
    #[doc = include_str!("../../../book/src/isomorphism.md")]
    pub mod isomorphism {}
    #[doc = include_str!("../../../book/src/classical.md")]
    pub mod classical {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
