//! Exact symbolic computation with tensor-valued trace polynomials in matrix
//! variables.
//!
//! The crate covers the symmetric group algebra and cycle splitting
//! ([`symgroup`]), the trace coefficient ring ([`tracering`]), the twisted
//! algebra of tensor words with permutations ([`twisted`]), the correspondence
//! between permutations and multilinear trace expressions together with
//! deduction certificates ([`interp`]), the tensor Cayley–Hamilton family
//! ([`chident`]), and exact evaluation on generic matrices ([`matexval`]).

pub mod chident;
pub mod cli;
pub mod error;
pub mod interp;
pub mod json;
pub mod matexval;
pub mod rational;
pub mod symgroup;
pub mod tracering;
pub mod twisted;

pub use error::{Result, TciError};
