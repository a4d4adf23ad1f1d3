//! Exact base arithmetic and the commutative-ring contract.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

pub mod appoly;
pub mod factored;
pub mod gaussian;
pub mod matrix;
pub mod mixed;
pub mod mobius;
pub mod poly;
pub mod rational;
pub mod realroots;

pub use appoly::APPoly;
pub use factored::{factor_numeric, FactoredRational, HalfPlane, NumericFactoring, Point, RootFactor};
pub use gaussian::GaussianRational;
pub use matrix::RingMatrix;
pub use mixed::MixedElem;
pub use mobius::{disk_to_line, disk_to_line_half, line_to_disk, line_to_disk_half};
pub use poly::Polynomial;
pub use rational::{Half, RationalFunction};
pub use realroots::{half_plane_count, HalfPlaneCount};

/// A commutative unital Q(i)-algebra with exact arithmetic.
///
/// Every ring used here contains Q(i) as scalars, so `from_scalar` is part of
/// the contract. `exact_div` returns `Some(q)` only when `q * d == self`; rings
/// that cannot decide divisibility leave the default, which routes determinant
/// evaluation to division-free expansion.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_scalar(c: &GaussianRational) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_ref(&self, o: &Self) -> Self {
        self.clone() + o.clone()
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.clone() - o.clone()
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.clone() * o.clone()
    }

    /// Inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn exact_div(&self, _d: &Self) -> Option<Self> {
        None
    }

    /// Whether `exact_div` is implemented and the ring has no zero divisors,
    /// so that fraction-free elimination is valid.
    fn is_integral_domain() -> bool {
        false
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

/// Sum of products `Σ a_k b_k`.
pub fn dot<R: Ring>(a: &[R], b: &[R]) -> R {
    a.iter().zip(b).fold(R::zero(), |acc, (x, y)| acc.add_ref(&x.mul_ref(y)))
}
