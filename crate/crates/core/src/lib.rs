//! Exact generating functions for k-balanced binary strings, covering
//! walks on circular digraphs, and height-restricted lattice paths.
//!
//! The same counting problem is solved along two independent routes —
//! a transfer-matrix computation over the rational-function field
//! ([`transfer`]) and closed forms built from combinatorial Chebyshev
//! polynomials ([`chebyshev`], [`lattice`]) — and the two results are
//! reconciled coefficient-by-coefficient and symbolically
//! ([`reconcile`]). Exhaustive enumeration ([`oracle`]) provides ground
//! truth for every series. All arithmetic is exact; nothing here touches
//! floating point.

pub mod bigpoly;
pub mod chebyshev;
pub mod cli;
pub mod families;
pub mod lattice;
pub mod oracle;
pub mod reconcile;
pub mod report;
pub mod transfer;
pub mod verify;

pub use bigpoly::{Poly, PolyError, RatFunc, Series};
pub use report::Report;
