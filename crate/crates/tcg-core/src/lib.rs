//! Geometry kernel for the planar two-center problem with separated or
//! convex-position inputs.
//!
//! The crate is organized bottom-up:
//!
//! - [`geom`] — points, disks, fixed-radius minor arcs, and the predicate
//!   family everything else is written in terms of;
//! - [`sed`] — smallest enclosing disks (randomized incremental);
//! - [`oracle`] — small brute-force reference implementations used by the
//!   test suites to cross-check the fast structures;
//! - [`hull`] — static circular hulls (intersections of congruent disks)
//!   with linear-time construction for sorted or radially sorted input;
//! - [`tangent`] — logarithmic tangent and common-tangent searches on
//!   frozen hulls, plus the disk-domination test;
//! - [`dynamic`] — circular hulls under a fixed deletion order on one side
//!   and online insertions on the other, with amortized O(1) updates;
//! - [`decision`] — the linear-time decision procedure "can two radius-r
//!   disks cover the input split by a separation line";
//! - [`solver`] — exact two-center solvers built on the decision procedure
//!   for nearby (lens) instances and convex-position instances.
//!
//! The crate is `no_std`-compatible (with `alloc`); enable the `libm`
//! feature when building without `std` to supply the floating-point math
//! intrinsics.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("building without `std` requires the `libm` feature for float math");

extern crate alloc;

pub(crate) mod fmath;

pub mod decision;
pub mod dynamic;
pub mod geom;
pub mod hull;
pub mod oracle;
pub mod sed;
pub mod solver;
pub mod tangent;
