//! Exact-arithmetic differential calculi, bimodule connections and their
//! generalized braidings on function algebras of finite groups and on
//! quantum SU(2) with its 3D calculus.
//!
//! The crate decides and certifies torsion, cotorsion, metric-preservation,
//! star-compatibility and braid-relation properties of invariant connections,
//! over three interchangeable scalar fields (exact Gaussian rationals, exact
//! rational functions in q, complex doubles).
//!
//! Start with the runnable programs in `examples/`; the `ncriem` binary wraps
//! the same machinery behind `verify`, `classify`, `solve-lc`, `sample-moduli`
//! and `sigma-dump` subcommands with reproducible JSON/CSV reports.

pub mod groupcalc;
pub mod groupconn;
pub mod matrix;
pub mod qalg;
pub mod qconn;
pub mod report;
pub mod suites;

pub mod cli;
pub mod scalars;

pub use matrix::Mat;
pub use scalars::{Backend, CDouble, GaussRat, QRatFn, Rat, Scalar};
