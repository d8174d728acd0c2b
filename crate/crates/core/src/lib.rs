//! Milnor fibers of Brieskorn singularities `x^p + y^q + z^r`, worked out
//! combinatorially.
//!
//! * [`surfaces`]: curve systems (packings, chains) and their surfaces.
//! * [`monodromy`]: Dehn-twist words, Lefschetz fibrations over the disk,
//!   open books and word substitution.
//! * [`twistrep`]: action of twist words on homology and relation checks.
//! * [`milnorlattice`]: intersection forms of `M(p,q,r)` and their
//!   invariants, Stein handle data.
//! * [`resolution`]: negative continued fractions and resolution graphs.
//! * [`surgery`]: Euler characteristic and signature bookkeeping for
//!   branched covers and generalized chain surgeries.
//! * [`cli`]: the command-line front end used by the `brieskorn` binary.
//!
//! All arithmetic is exact.

pub mod cli;
pub mod error;
pub mod linalg;
pub mod milnorlattice;
pub mod monodromy;
pub mod resolution;
pub mod selftest;
pub mod surfaces;
pub mod surgery;
pub mod twistrep;

pub use error::{Error, Result};
pub use linalg::{Inertia, IntMatrix};
