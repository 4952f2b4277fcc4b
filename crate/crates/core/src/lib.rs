//! Classification of caps in the binary projective spaces PG(r,2) for
//! r = 2, 3, 4.
//!
//! A cap is a point set no three of which are collinear; over GF(2) the
//! three points of a line XOR to zero, so everything here reduces to bit
//! arithmetic on `u32` masks. The crate provides:
//!
//! * [`geometry`]: points, caps, secant coverage, candidate sets,
//!   completeness, linear rank;
//! * [`collineations`]: the group GL(r+1,2) acting on points, projective
//!   equivalence, canonical forms and stabilizer orders via a
//!   frame-tuple transversal;
//! * [`codes`]: weight enumerators of the binary code spanned by a cap;
//! * [`search`]: the isomorph-pruned extension tree that classifies all
//!   spanning caps up to equivalence;
//! * [`oracle`]: independent brute-force cross-checks (full orbit
//!   classification for small spaces, labeled-cap counting and
//!   orbit–stabilizer mass checks for PG(4,2)).
//!
//! The crate is `no_std` (alloc only); IO, file formats and the CLI live
//! in the companion `capsearch` crate.

#![no_std]

extern crate alloc;

pub mod codes;
pub mod collineations;
mod error;
pub mod geometry;
mod linalg;
pub mod oracle;
pub mod search;

pub use error::Error;
pub use geometry::{Point, PointSet, Space};
