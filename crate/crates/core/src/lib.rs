//! Exact computation with q-series: theta products, Appell-Lerch sums,
//! Hecke-type double sums and the identities that tie them together.

pub mod appell;
pub mod arith;
pub mod catalog;
pub mod dsl;
pub mod error;
pub mod euler;
pub mod eval;
pub mod hecke;
pub mod lazy;
pub mod monomial;
pub mod scan;
pub mod series;
pub mod theta;
pub mod verify;

pub use arith::{BigRat, CycRat};
pub use dsl::{parse_expr, parse_identities, Expr, IdentityRecord};
pub use error::{QError, QResult};
pub use lazy::Node;
pub use monomial::QMonomial;
pub use series::QSeries;
pub use verify::{verify_identity, Status, VerificationReport};
