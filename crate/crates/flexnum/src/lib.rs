//! Exact algebra of external numbers and their matrix calculus.
//!
//! An external number is the Minkowski sum `a + A` of a nonstandard real
//! representative and a neutrix (a convex additive group of errors). This
//! crate implements a computable model of that algebra: representatives are
//! rational functions of one formal infinitesimal `eps` with exact rational
//! coefficients, neutrices form the lattice `{0}`, `eps^q*o`, `eps^q*L`, `R`,
//! and all operations are exact. On top of the scalars sit matrices,
//! determinants, near-inverses, linear (in)dependence and three notions of
//! rank, together with a randomized law harness that checks the calculus on
//! concrete instances.
//!
//! ```
//! use flexnum::parse::{parse_matrix, parse_scalar};
//!
//! // errors propagate exactly: the larger neutrix wins
//! let x = parse_scalar("(2 + eps*L) * (3 + eps*o)").unwrap();
//! assert_eq!(x.to_string(), "6 + eps*L");
//!
//! // a determinant can collapse to a pure error set
//! let m = parse_matrix("[[1+o,0,0],[0,1,1+eps],[0,1,1]]").unwrap();
//! let d = flexnum::det::det(&m).unwrap();
//! assert_eq!(d.to_string(), "o");
//! assert!(!d.is_zeroless());
//! ```

pub mod det;
pub mod error;
pub mod external;
pub mod harness;
pub mod inverse;
pub mod linalg;
pub mod matrix;
pub mod neutrix;
pub mod nsreal;
pub mod parse;
pub mod poly;
pub mod rank;
pub mod sample;

pub use error::{Error, Result};
pub use external::{
    correction_term_identity, distrib_identity, distributivity_holds, ExternalNumber, SetRelation,
};
pub use matrix::{FlexMatrix, FlexVector};
pub use neutrix::{Neutrix, NeutrixBase};
pub use nsreal::{Classification, NSReal};
pub use poly::{EpsPoly, Rat};
