//! Exact machinery for affine semigroups defined by integer matrices:
//! deciding integer feasibility of `Ax = b, x >= 0` for all right-hand
//! sides at once by computing the holes of the semigroup generated by the
//! columns of `A`.
//!
//! The crate is organized bottom-up:
//!
//! * [`matrix`], [`hnf`] — arbitrary-precision integer linear algebra
//! * [`rational`], [`simplex`] — exact rational arithmetic and LP
//! * [`cone`], [`lattice_points`] — polyhedral geometry and point enumeration
//! * [`diophantine`] — Hilbert bases, minimal solutions, integer feasibility
//! * [`stdpairs`] — standard-pair decompositions of monomial ideals
//! * [`semigroup`] — the hole pipeline itself
//! * [`models`] — generators and oracles for diagonal-effect tables,
//!   linear ordering polytopes, and generic lattice polytopes

pub mod cone;
pub mod diophantine;
pub mod error;
pub mod hnf;
pub mod lattice_points;
pub mod matrix;
pub mod models;
pub mod rational;
pub mod semigroup;
pub mod simplex;
pub mod stdpairs;

pub use cone::{dual_description, is_pointed, ConeDescription};
pub use lattice_points::{
    enumerate_lattice_points, parallelepiped_points, AffineConstraints, LatticePointSet,
};
pub use error::{Error, Result};
pub use hnf::{hermite_normal_form, lattice_rank_index, solve_integer, LatticeIndex};
pub use matrix::{IntMat, IntVec};
