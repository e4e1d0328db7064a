//! Exact certification of local points on the Fano surface of lines of a
//! smooth intersection of two quadrics in P^5.
//!
//! The pipeline computes the characteristic sextic of the pencil, the
//! associated genus-2 curve data and its bad primes, then certifies smooth
//! F_p-points on affine charts of the Grassmannian, lifts them p-adically,
//! checks the real place, and analyses the singular reductions.

pub mod cli;
pub mod exactmath;
pub mod fixtures;
pub mod fano;
pub mod localcert;
pub mod par;
pub mod pencil;
pub mod quadric;
pub mod reduction;

pub use par::Execution;
