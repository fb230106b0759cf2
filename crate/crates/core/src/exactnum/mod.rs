//! Exact scalars: arbitrary-precision rationals and sparse multivariate
//! polynomials with rational coefficients.
//!
//! Everything downstream (matrices, brackets, operator calculus) is generic
//! over [`Scalar`], so the same code path runs at sampled parameter values
//! (`Rational`) and with symbolic parameters (`PolyExpr`).

mod poly;
mod rational;

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

pub use poly::{Monomial, PolyExpr, Var};
pub use rational::Rational;

/// A commutative ring with exact equality that embeds the rationals.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + Sub<Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + Mul<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + for<'a> AddAssign<&'a Self>
    + SubAssign
    + for<'a> SubAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n))
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Scalar for PolyExpr {
    fn zero() -> Self {
        PolyExpr::zero()
    }
    fn one() -> Self {
        PolyExpr::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        PolyExpr::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        PolyExpr::constant(r.clone())
    }
}
