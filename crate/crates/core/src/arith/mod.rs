//! Exact arithmetic kernel.

pub mod constant;
pub mod cyclo;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod ratfunc;

pub use constant::Constant;
pub use cyclo::CycloNum;
pub use field::Field;
pub use num_rational::BigRational;
pub use poly::Poly;
pub use ratfunc::RatFunc;

/// Elements of the base difference field `C(x)`.
pub type Elem = RatFunc<Constant>;
/// Polynomials over the constants field.
pub type CPoly = Poly<Constant>;
