use std::fmt::Debug;

use crate::cyclotomic::Cyclotomic;
use crate::error::Result;

/// Field operations needed by the elimination kernels.
///
/// Elements carry their own field context, so constants are produced from an
/// existing element rather than from nothing.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}

impl Scalar for Cyclotomic {
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Cyclotomic::zero_like(self)
    }
    fn one_like(&self) -> Self {
        Cyclotomic::one_like(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        Cyclotomic::inv(self)
    }
    fn is_one(&self) -> bool {
        Cyclotomic::is_one(self)
    }
}
