//! Exact-rational intersection theory on the projectivized Hodge bundle.
//!
//! The crate computes with divisor classes on `P Hbar_g` (and on `Mbar_g`,
//! `Mbar_{g,1}`, and the projectivized bundle of quadratic differentials),
//! re-derives the class of the divisor of canonical divisors that contain a
//! Weierstrass point from test-curve data, checks it against explicit pencil
//! families through Chow-ring and blow-up lattice arithmetic, and evaluates the
//! Teichmuller-curve pairings behind the extremality certificates of the
//! double-zero strata.
//!
//! | module | contents |
//! |---|---|
//! | [`exactq`] | `Rational`, `QMatrix`, exact solving and rank |
//! | [`picard`] | bases, catalogued classes, relation substitution, pairing |
//! | [`testcurves`] | test/moving curves and the coefficient derivation |
//! | [`chow`] | Chow rings of products of projective spaces, blow-up lattices, pencils |
//! | [`porteous`] | principal parts, Weierstrass sweep class, fiber invariants |
//! | [`extremality`] | `kappa_mu`, Teichmuller vectors, thresholds, certificates |
//! | [`catalog`] | persisted class and curve catalog |
//! | [`report`] | command implementations and their reports |
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod catalog;
pub mod chow;
pub mod error;
pub mod exactq;
pub mod extremality;
pub mod picard;
pub mod porteous;
pub mod report;
pub mod testcurves;

pub use error::{Error, Result};
pub use exactq::{QMatrix, Rational};
pub use picard::{DivisorClass, SpaceKind};
pub use testcurves::CurveRecord;
