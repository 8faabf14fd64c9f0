//! Exact arithmetic in the cyclotomic field Q(ζ_M).

mod field;
mod poly;
mod qcontext;

pub use field::{Cyclotomic, CyclotomicField};
pub use poly::{cyclotomic_polynomial, euler_phi, IntPoly};
pub use qcontext::QContext;
