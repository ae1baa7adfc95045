use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::gcd::gcd;
use super::poly::Poly;
use super::var::Var;
use super::{Rational, ScalarError};

/// Evaluation guard: a denominator closer to zero than this is a pole.
pub const POLE_EPSILON: f64 = 1e-12;

/// Exact rational function `num / den` in canonical form.
///
/// `den` is nonzero with graded-lex leading coefficient 1, and `num`, `den`
/// share no nonconstant factor. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() || den.as_constant().is_some() {
            return Self::coprime(num, den);
        }
        let g = gcd(&num, &den);
        Self::coprime(quotient(&num, &g), quotient(&den, &g))
    }

    /// Canonical form of a fraction already known to be in lowest terms.
    fn coprime(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc { num, den: Poly::one() };
        }
        if let Some(q) = den.as_constant() {
            return RatFunc {
                num: num.scale(&q.recip()),
                den: Poly::one(),
            };
        }
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::poly(Poly::one())
    }

    pub fn poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(q: Rational) -> Self {
        Self::poly(Poly::constant(q))
    }

    pub fn int(n: i64) -> Self {
        Self::poly(Poly::int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::poly(Poly::var(v))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    /// Exact zero test on the canonical form.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn contains(&self, v: Var) -> bool {
        self.num.contains(v) || self.den.contains(v)
    }

    pub fn try_div(&self, rhs: &RatFunc) -> Result<RatFunc, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(RatFunc::zero());
        }
        if let Some(q) = rhs.as_constant() {
            return Ok(self.scale(&q.recip()));
        }
        Ok(self * &rhs.recip()?)
    }

    pub fn recip(&self) -> Result<RatFunc, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::coprime(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, q: &Rational) -> RatFunc {
        if q.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(q),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Exact partial derivative (quotient rule, then re-reduced).
    pub fn differentiate(&self, v: Var) -> RatFunc {
        let dn = self.num.differentiate(v);
        if self.den.is_one() {
            return RatFunc::poly(dn);
        }
        let dd = self.den.differentiate(v);
        if dd.is_zero() {
            return Self::normalized(dn, self.den.clone());
        }
        Self::normalized(&(&dn * &self.den) - &(&self.num * &dd), self.den.pow(2))
    }

    pub fn substitute(&self, map: &dyn Fn(Var) -> Option<Poly>) -> Result<RatFunc, ScalarError> {
        RatFunc::new(self.num.substitute(map), self.den.substitute(map))
    }

    pub fn substitute_var(&self, v: Var, img: &Poly) -> Result<RatFunc, ScalarError> {
        self.substitute(&|w| (w == v).then(|| img.clone()))
    }

    /// Value at a chart point `(x, y, z, t)`.
    pub fn evaluate(&self, point: [f64; 4]) -> Result<f64, ScalarError> {
        self.evaluate_with(&|v| Var::COORDS.iter().position(|&c| c == v).map(|i| point[i]))
    }

    pub fn evaluate_with(&self, value: &dyn Fn(Var) -> Option<f64>) -> Result<f64, ScalarError> {
        let d = self.den.evaluate_with(value)?;
        if d.abs() <= POLE_EPSILON {
            return Err(ScalarError::Pole(d.abs()));
        }
        Ok(self.num.evaluate_with(value)? / d)
    }

    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.render())
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::poly(&self.num + &rhs.num);
            }
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        // both operands are reduced, so only the shared part of the
        // denominators can cancel
        let d = gcd(&self.den, &rhs.den);
        let (l, r) = (quotient(&self.den, &d), quotient(&rhs.den, &d));
        let num = &(&self.num * &r) + &(&rhs.num * &l);
        let g = gcd(&num, &d);
        RatFunc::coprime(quotient(&num, &g), quotient(&(&l * &rhs.den), &g))
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::poly(&self.num * &rhs.num);
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        RatFunc::coprime(
            &quotient(&self.num, &g1) * &quotient(&rhs.num, &g2),
            &quotient(&self.den, &g2) * &quotient(&rhs.den, &g1),
        )
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl super::Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_rational(q: &Rational) -> Self {
        RatFunc::constant(q.clone())
    }
    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }
    fn scale(&self, q: &Rational) -> Self {
        RatFunc::scale(self, q)
    }
}

fn quotient(p: &Poly, g: &Poly) -> Poly {
    if g.is_one() {
        p.clone()
    } else {
        p.div_exact(g).expect("gcd divides its argument")
    }
}

/// Arithmetic selector for [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Div,
}

/// Binary arithmetic with an explicit error for division by zero.
pub fn arith(lhs: &RatFunc, rhs: &RatFunc, kind: ArithKind) -> Result<RatFunc, ScalarError> {
    Ok(match kind {
        ArithKind::Add => lhs + rhs,
        ArithKind::Sub => lhs - rhs,
        ArithKind::Mul => lhs * rhs,
        ArithKind::Div => lhs.try_div(rhs)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn t() -> RatFunc {
        RatFunc::var(Var::T)
    }

    #[test]
    fn scaling_half_t_squared() {
        let half_t2 = t().pow(2).scale(&rat(1, 2));
        let r = arith(&half_t2, &RatFunc::int(2), ArithKind::Mul).unwrap();
        assert_eq!(r, t().pow(2));
    }

    #[test]
    fn metric_entry_g22_from_products() {
        let minus_t = -t();
        let r = &(&minus_t * &minus_t) + &RatFunc::one();
        assert_eq!(r.render(), "1 + 1*t^2");
    }

    #[test]
    fn cancellation_is_exact_zero() {
        let g = &RatFunc::one() + &t().pow(2);
        assert!((&g - &g).is_zero());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let err = arith(&t(), &RatFunc::zero(), ArithKind::Div).unwrap_err();
        assert_eq!(err, ScalarError::DivisionByZero);
        assert!(RatFunc::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn quotients_reduce_to_lowest_terms() {
        let num = &(&t() + &RatFunc::one()) * &(&t() - &RatFunc::one());
        let r = num.try_div(&(&t() - &RatFunc::one())).unwrap();
        assert_eq!(r, &t() + &RatFunc::one());
        // den leading coefficient normalized to 1
        let q = RatFunc::one().try_div(&t().scale(&rat(2, 1))).unwrap();
        assert_eq!(q.denom(), &Poly::var(Var::T));
        assert_eq!(q.numer(), &Poly::constant(rat(1, 2)));
    }

    #[test]
    fn derivative_of_g23() {
        // d/dt (-t (1 + t^2/2)) = -1 - 3/2 t^2
        let g23 = &(-t()) * &(&RatFunc::one() + &t().pow(2).scale(&rat(1, 2)));
        let d = g23.differentiate(Var::T);
        let expect = &RatFunc::int(-1) - &t().pow(2).scale(&rat(3, 2));
        assert!((&d - &expect).is_zero());
        assert!(g23.differentiate(Var::X).is_zero());
    }

    #[test]
    fn quotient_rule() {
        // d/dt 1/(2+t^2) = -2t/(2+t^2)^2
        let den = &RatFunc::int(2) + &t().pow(2);
        let f = den.recip().unwrap();
        let expect = (-t().scale(&rat(2, 1))).try_div(&den.pow(2)).unwrap();
        assert_eq!(f.differentiate(Var::T), expect);
    }

    #[test]
    fn evaluation_and_poles() {
        let g22 = &RatFunc::one() + &t().pow(2);
        assert_eq!(g22.evaluate([0.0, 0.0, 0.0, 1.0]).unwrap(), 2.0);
        let g13 = t().pow(2).scale(&rat(1, 2));
        assert_eq!(g13.evaluate([0.0; 4]).unwrap(), 0.0);
        let g23 = &(-t()) * &(&RatFunc::one() + &t().pow(2).scale(&rat(1, 2)));
        assert_eq!(g23.evaluate([0.0, 0.0, 0.0, 2.0]).unwrap(), -6.0);
        let pole = t().recip().unwrap();
        assert!(matches!(pole.evaluate([0.0; 4]), Err(ScalarError::Pole(_))));
    }

    #[test]
    fn ring_identity_difference_of_squares() {
        let a = RatFunc::var(Var::A);
        let c = RatFunc::var(Var::C);
        let lhs = &(&a - &c) * &(&a + &c);
        let rhs = &a.pow(2) - &c.pow(2);
        assert!((&lhs - &rhs).is_zero());
        assert!(!t().pow(2).scale(&rat(1, 2)).is_zero());
    }
}
