//! Exact symbolic toolkit for the Lauricella F_C system: Weyl-algebra and
//! commutative Groebner machinery, singular-locus polynomials, identity
//! suites, and the associated A-hypergeometric (toric) side.

pub mod ahyp;
pub mod cpoly;
pub mod error;
pub mod fc;
pub mod monomial_ideal;
pub mod param;
pub mod puiseux;
pub mod report;
pub mod sqrt;
pub mod weyl;

pub use error::{AlgError, AlgResult};
pub use param::{ParamScalar, ParamValues, Rat};
