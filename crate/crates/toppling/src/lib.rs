//! Toppling ideals of pointed multigraphs.
//!
//! For a connected multigraph `G` with a distinguished vertex `q`, this crate
//! computes the Gröbner basis of the toppling ideal `I_G`, the minimal free
//! resolutions of `R/I_G` and `R/in(I_G)` indexed by connected flags, and their
//! Z- and Pic-graded Betti tables. The [`oracle`] module recomputes the same
//! data by generic means (Schreyer's algorithm, Hochster's formula, brute force).
#![no_std]

extern crate alloc;

pub mod divisor;
pub mod error;
pub mod field;
pub mod flags;
pub mod graph;
pub mod merge;
pub mod oracle;
pub mod orientation;
pub mod poly;
pub mod resolution;

pub use divisor::{dhar_burn, is_q_reduced, linear_system, pic_class, q_reduce, PicClass};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use flags::{enumerate_minimal_flags, validate_flag, ConnectedFlag, FlagBasis};
pub use graph::{Divisor, PointedGraph, TermOrder, VertexSet};
pub use orientation::{EdgeState, PartialOrientation};
pub use poly::{ModuleElement, Monomial, Polynomial};
pub use resolution::{betti_table, build_resolution, groebner_basis, BettiTable, FreeResolution, Variant};
