//! Derived Kirwan blow-ups and stabilizer reduction for affine schemes with a
//! diagonal torus action, computed on standard-form presentations.
//!
//! The crate is organized bottom-up:
//!
//! * [`algebra`] exact polynomials over the rationals and Gröbner bases,
//! * [`cdga`] weight-graded presentations, truncations and fixed loci,
//! * [`torus`] stabilizer strata, the maximal-stabilizer locus and GIT
//!   saturation ideals,
//! * [`blowup`] Rees presentations and (Kirwan) blow-up charts,
//! * [`reduction`] the iterated stabilizer reduction and leaf reports,
//! * [`io`] scene files, the polynomial grammar and the command line.

pub mod algebra;
pub mod blowup;
pub mod cdga;
pub mod error;
pub mod io;
pub mod linalg;
pub mod reduction;
pub mod torus;

pub use error::{Error, Result};
