//! Exact verification engine for the integral Chow ring of the stack of
//! hyperelliptic curves of even genus,
//! `A^*(H_g) = Z[c1, c2] / (2(2g+1) c1, g(g-1) c1^2 - 4g(g+1) c2)`.
//!
//! The layers, bottom up:
//!
//! - [`polyring`]: exact polynomials over `Z` in `xi`, `xi_j`, `t1, t2`, `c1, c2`;
//! - [`chowctx`]: torus- and GL2-equivariant Chow rings of products of
//!   projective spaces, with normal forms;
//! - [`pushpull`]: integral pullbacks and pushforwards along the maps
//!   relating `P^N` to its strata;
//! - [`lattice`]: graded ideal membership and quotient structure via
//!   Hermite and Smith normal forms, with certificates;
//! - [`fixedpoints`]: rational localization, an independent check on
//!   every pushforward rule;
//! - [`hgpipeline`]: the presentation itself and one check per lemma;
//! - [`cli`]: the `hgchow` command.

pub mod chowctx;
pub mod cli;
pub mod error;
pub mod fixedpoints;
pub mod hgpipeline;
pub mod lattice;
pub mod polyring;
pub mod pushpull;

pub use error::{Error, Result};
