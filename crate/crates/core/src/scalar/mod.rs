//! Exact and numeric scalar types.
//!
//! [`RatFunc`] is the exact scalar used by every symbolic computation: a
//! reduced quotient of multivariate polynomials with rational coefficients.
//! [`Taylor`] (and its first-order alias [`Jet1`]) carries truncated Taylor
//! data in `t` for numeric evaluation of t-dependent families with exact
//! derivative propagation.
//!
//! The [`Ring`] and [`Real`] traits let the hypersurface code run unchanged on
//! either backend.

mod gcd;
mod jet;
mod poly;
mod ratfunc;
mod var;

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub use jet::{Jet1, Taylor};
pub use poly::{CompiledPoly, Poly};
pub use ratfunc::{arith, ArithKind, RatFunc, POLE_EPSILON};
pub use var::{Monomial, Var, NUM_VARS};

use num::{BigInt, BigRational, One, ToPrimitive, Zero};

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator.
pub type Rational = BigRational;

/// Builds the rational `num/den`.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // numerator or denominator overflowed f64 individually
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn render_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by the zero expression")]
    DivisionByZero,
    #[error("pole at evaluation point: |denominator| = {0:e}")]
    Pole(f64),
    #[error("variable `{0}` has no value at the evaluation point")]
    UnboundVariable(Var),
}

/// Commutative ring operations shared by exact and numeric scalars.
pub trait Ring:
    Clone + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: &Rational) -> Self;

    /// Exact backends ignore `tol` and decide `== 0` symbolically.
    fn is_negligible(&self, tol: f64) -> bool;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn scale(&self, q: &Rational) -> Self {
        self.clone() * Self::from_rational(q)
    }
}

/// Numeric scalars with division, square roots and trigonometry.
pub trait Real: Ring + Div<Output = Self> {
    fn constant(c: f64) -> Self;
    fn sqrt(&self) -> Self;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    /// Point value (order-zero Taylor coefficient).
    fn value(&self) -> f64;
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_rational(q: &Rational) -> Self {
        rational_to_f64(q)
    }
    fn is_negligible(&self, tol: f64) -> bool {
        self.abs() <= tol
    }
}

impl Real for f64 {
    fn constant(c: f64) -> Self {
        c
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn sin(&self) -> Self {
        f64::sin(*self)
    }
    fn cos(&self) -> Self {
        f64::cos(*self)
    }
    fn value(&self) -> f64 {
        *self
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }
}
