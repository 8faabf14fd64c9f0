//! Exact computations with the Drinfeld double D_n of the Taft algebra at a primitive
//! n-th root of unity q: the algebra itself, its simple modules, the R-matrix and ribbon
//! element, the Temperley-Lieb action on V(2,r)^{⊗k}, and Bratteli-diagram combinatorics
//! of the tensor powers.

pub mod centralizer_oracle;
pub mod cyclotomic;
pub mod dn_algebra;
pub mod error;
pub mod fusion;
pub mod linalg;
pub mod report;
pub mod representations;
pub mod rmatrix;
pub mod temperley_lieb;

pub use cyclotomic::{Cyclotomic, QContext};
pub use error::{Error, Result};
