//! Bounds on the real roots of univariate real polynomials.
//!
//! The crate computes a family of upper bounds built from Cauchy
//! polynomials (the classical Cauchy bound, early-exit stage bounds,
//! negative-coefficient bounds, fractional-power bounds and the minimum
//! over extracted Cauchy polynomials) together with a reciprocal lower
//! bound for the positive root of a Cauchy polynomial. An independent
//! Sturm-sequence oracle isolates the real roots so every bound can be
//! checked for soundness and tightness.
//!
//! ```
//! use rootbound::{bounds, parse, poly};
//!
//! let raw = parse::parse_poly("x^3 - x - 1").unwrap();
//! let (p, _) = poly::normalize(&raw).unwrap();
//! assert_eq!(bounds::cauchy_bound(&p).unwrap(), 2.0);
//! ```

pub mod bounds;
pub mod cauchy;
mod error;
pub mod oracle;
pub mod parse;
pub mod poly;

pub use bounds::{all_bounds, BoundReport, Bounds};
pub use cauchy::CauchyPolynomial;
pub use error::{Error, Result};
pub use oracle::OracleResult;
pub use poly::{normalize, Polynomial, SignSplit};

/// Default relative tolerance for every numerical root solve.
pub const DEFAULT_REL_TOL: f64 = 1e-12;
