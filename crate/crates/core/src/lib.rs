//! Finite normality certificates for power products of monomial ideals.
//!
//! Given monomial ideals `I_1, ..., I_r` of a polynomial ring, all power
//! products `I_1^{n_1} ... I_r^{n_r}` are integrally closed as soon as those
//! with `|n| <= λ(I_1 ... I_r) - 1` are, where `λ` is the analytic spread.
//! This crate computes the spread, the integral closures involved, the
//! resulting [`certifier::Certificate`], and an independent brute-force
//! [`oracle`]. The [`reductions`] module is a laboratory for complete and
//! joint reductions and filter-regular sequences on the normalized
//! multi-Rees algebra, checked by truncated exact linear algebra.

pub mod certifier;
pub mod corpus;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod lp;
pub mod monomial;
pub mod oracle;
pub mod polyhedra;
pub mod reductions;

pub use error::{Error, Result};
pub use monomial::{ExponentVector, MonomialIdeal, MultiIndex};
