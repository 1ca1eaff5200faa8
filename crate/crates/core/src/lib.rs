//! Exact constant-term computations around the Motzkin triangle.
//!
//! * [`laurent`]: sparse Laurent polynomials with big-integer coefficients
//!   and the constant-term operator.
//! * [`triangles`]: the Motzkin triangle (recurrence, skew-symmetric
//!   extension, constant term), Pascal, trinomial and Catalan-variant
//!   triangles, and general triangles generated by `P(x)^n (1 - x^2)`.
//! * [`identities`]: exact evaluation of the binomial sums and three-way
//!   checks of the identities relating them to triangle entries.
//! * [`cores`]: enumeration of simultaneous `(s, s+d, s+2d)`-core partitions.
//!
//! ```
//! use motzkin_ct::identities::theorem1_check;
//!
//! let report = theorem1_check(4).unwrap();
//! assert!(report.equal);
//! assert_eq!(report.common_value().unwrap().to_string(), "256");
//! ```

pub mod cores;
pub mod error;
pub mod identities;
pub mod laurent;
pub mod rational;
pub mod triangles;

pub use error::{Error, Result};
pub use laurent::LaurentPolynomial;
pub use rational::ExactRational;
pub use triangles::TriangleSpec;
