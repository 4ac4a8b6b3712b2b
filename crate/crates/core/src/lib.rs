//! Exact computation of distinguishing polynomials of finite simple graphs.
//!
//! A vertex coloring is *distinguishing* when no automorphism except the
//! identity preserves it; the number of distinguishing colorings with at
//! most `k` colors is a monic integer polynomial in `k` of degree `n`.
//! This crate computes that polynomial two independent ways:
//!
//! * [`oracle`] — exhaustive enumeration plus exact interpolation, the
//!   ground truth at small orders;
//! * [`closed_forms`] — family formulas (complete graphs, stars, paths,
//!   cycles via inclusion-exclusion over divisors) and composition rules
//!   (disjoint unions, complete multipartite graphs, joins by complement).
//!
//! [`analysis`] checks structural facts relating the polynomial to the
//! orbit decomposition, and [`verify`] packages the cross-checks between
//! all of the above into runnable suites.

pub mod analysis;
pub mod closed_forms;
pub mod coloring;
pub mod corpus;
pub mod dihedral;
pub mod error;
pub mod graph;
pub mod group;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod verify;

mod perm;

pub use coloring::Coloring;
pub use error::{Error, Result};
pub use graph::Graph;
pub use group::AutGroup;
pub use perm::Permutation;
pub use poly::{IntPoly, Poly, RatPoly};

/// Re-exported big integer type used for all exact counts.
pub use num::BigInt;
