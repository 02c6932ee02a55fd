//! Computable invariants of C*-algebras of branched self-coverings.
//!
//! A branched covering `σ: X → X` restricts to a partially defined local
//! homeomorphism `T` on the nonsingular set `U = X \ S`, and the associated
//! C*-algebra can be analyzed through the orbit structure of `T` and a
//! six-term exact sequence in K-theory. This crate provides the pieces of
//! that analysis which are actually computable:
//!
//! - [`fgab`]: exact integer linear algebra over finitely generated abelian
//!   groups (Smith normal form, kernels, cokernels, exactness checks);
//! - [`ktheory`]: a K-group catalog for the relevant spaces, construction of
//!   the Pimsner six-term sequence, and a solver for its unknown nodes;
//! - [`ratmap`]: numerical complex dynamics of rational self-maps of the
//!   Riemann sphere (branch sets, fibers, orbits, transfer operators);
//! - [`plcover`]: exact rational analysis of piecewise-linear branched
//!   self-coverings of the interval (the folding map family);
//! - [`finmodel`]: finite combinatorial models of partially defined dynamics
//!   and their Bratteli diagrams.

pub mod fgab;
pub mod finmodel;
pub mod ktheory;
pub mod plcover;
pub mod ratmap;
