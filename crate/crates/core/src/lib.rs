//! Exact q-series engine for Legendre-type identities on overpartition pairs.
//!
//! - [`series`]: truncated power series over exact rationals.
//! - [`products`]: Pochhammer symbols, `3phi2` partial sums, theta series.
//! - [`identities`]: both sides of every identity, Bailey pairs, proof chains.
//! - [`enumerate`]: brute-force overpartition (pair) enumeration, the
//!   combinatorial oracle for every generating function.

pub mod enumerate;
pub mod identities;
pub mod products;
pub mod report;
pub mod series;

pub use products::{MonomialParam, ProductError};
pub use report::{Status, VerificationReport};
pub use series::{QSeries, Rational, SeriesError};
