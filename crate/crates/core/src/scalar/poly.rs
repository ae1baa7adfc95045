use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One, Signed, Zero};

use super::var::{Monomial, Var, NUM_VARS};
use super::{rational_to_f64, render_rational, Rational, ScalarError};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms live in a `BTreeMap` keyed by graded-lex [`Monomial`], and zero
/// coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(q: Rational) -> Self {
        Self::term(q, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(q: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(m, q);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = Poly::zero();
        for (m, q) in iter {
            p.add_term(m, q);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, q: Rational) {
        if q.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(c) => {
                *c += q;
                if c.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, q);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|q| q.is_one())
    }

    /// The value when the polynomial has no non-constant term.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn contains(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.contains(v)).collect()
    }

    pub fn scale(&self, q: &Rational) -> Poly {
        if q.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, q: &Rational) -> Poly {
        if q.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c * q)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so the graded-lex leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Poly {
        let lc = self.leading_coeff();
        if lc.is_zero() || lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.recip())
    }

    pub fn differentiate(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            out.add_term(m.with_exp(v, e - 1), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Replaces variables by polynomials; `None` keeps the variable.
    pub fn substitute(&self, map: &dyn Fn(Var) -> Option<Poly>) -> Poly {
        let images: Vec<Option<Poly>> = Var::ALL.iter().map(|&v| map(v)).collect();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut factor = Poly::one();
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                match &images[v.index()] {
                    Some(img) => factor = &factor * &img.pow(e as u32),
                    None => kept = kept.with_exp(v, e),
                }
            }
            out = &out + &factor.mul_monomial(&kept, c);
        }
        out
    }

    pub fn substitute_var(&self, v: Var, img: &Poly) -> Poly {
        self.substitute(&|w| (w == v).then(|| img.clone()))
    }

    /// Floating-point value under an assignment of the variables that occur.
    pub fn evaluate_with(&self, value: &dyn Fn(Var) -> Option<f64>) -> Result<f64, ScalarError> {
        let mut vals = [0.0f64; NUM_VARS];
        for v in self.variables() {
            vals[v.index()] = value(v).ok_or(ScalarError::UnboundVariable(v))?;
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut x = rational_to_f64(c);
                for (i, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        x *= vals[i].powi(e as i32);
                    }
                }
                x
            })
            .sum())
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `v`,
    /// index = power of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![Poly::zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            out[e].add_term(m.with_exp(v, 0), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, q) in &c.terms {
                out.add_term(m.with_exp(v, m.exp(v) + e as u16), q.clone());
            }
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading()?;
        if let Some(q) = divisor.as_constant() {
            return Some(self.scale(&q.recip()));
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(lm)?;
            let qc = c / lc;
            rem = &rem - &divisor.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Removes the rational content: result has coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn primitive_integer(&self) -> (Rational, Poly) {
        if self.is_zero() {
            return (Rational::zero(), Poly::zero());
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den_lcm / c.denom());
            num_gcd = num::integer::gcd(num_gcd, n);
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        (content.clone(), self.scale(&content.recip()))
    }

    /// Deterministic rendering: ascending graded-lex order, explicit
    /// coefficients, e.g. `-1*t - 3/2*t^3`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = render_rational(&c.abs());
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&mag);
            if !m.is_one() {
                out.push('*');
                out.push_str(&m.to_string());
            }
        }
        out
    }

    pub fn compile(&self) -> CompiledPoly {
        CompiledPoly {
            terms: self.terms.iter().map(|(m, c)| (rational_to_f64(c), m.0)).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.render())
    }
}

/// Floating-point snapshot of a [`Poly`] for hot evaluation loops.
#[derive(Debug, Clone)]
pub struct CompiledPoly {
    terms: Vec<(f64, [u16; NUM_VARS])>,
}

impl CompiledPoly {
    /// Evaluates with `vals` indexed by [`Var::index`].
    pub fn eval(&self, vals: &[f64; NUM_VARS]) -> f64 {
        self.terms
            .iter()
            .map(|(c, m)| {
                let mut x = *c;
                for (i, &e) in m.iter().enumerate() {
                    if e > 0 {
                        x *= vals[i].powi(e as i32);
                    }
                }
                x
            })
            .sum()
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl super::Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn from_rational(q: &Rational) -> Self {
        Poly::constant(q.clone())
    }
    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn t() -> Poly {
        Poly::var(Var::T)
    }

    #[test]
    fn renders_in_ascending_order_with_explicit_coefficients() {
        let p = &t().scale(&rat(-1, 1)) - &t().pow(3).scale(&rat(3, 2));
        assert_eq!(p.render(), "-1*t - 3/2*t^3");
        let q = &Poly::constant(rat(1, 2)) + &t().pow(2).scale(&rat(3, 4));
        assert_eq!(q.render(), "1/2 + 3/4*t^2");
        assert_eq!(Poly::zero().render(), "0");
    }

    #[test]
    fn exact_division_detects_remainders() {
        let a = Poly::var(Var::A);
        let c = Poly::var(Var::C);
        let prod = &(&a - &c) * &(&a + &c);
        assert_eq!(prod.div_exact(&(&a - &c)), Some(&a + &c));
        assert_eq!((&prod + &Poly::one()).div_exact(&(&a - &c)), None);
    }

    #[test]
    fn univariate_view_round_trips() {
        let a = Poly::var(Var::A);
        let b = Poly::var(Var::B);
        let p = &(&a.pow(2) * &b) + &(&a * &Poly::int(3));
        let cs = p.coeffs_in(Var::A);
        assert_eq!(cs.len(), 3);
        assert_eq!(Poly::from_coeffs_in(Var::A, &cs), p);
    }

    #[test]
    fn substitution_composes() {
        // (x + t)^2 with t -> 2y
        let p = (&Poly::var(Var::X) + &t()).pow(2);
        let q = p.substitute_var(Var::T, &Poly::var(Var::Y).scale(&rat(2, 1)));
        let expect = (&Poly::var(Var::X) + &Poly::var(Var::Y).scale(&rat(2, 1))).pow(2);
        assert_eq!(q, expect);
    }

    #[test]
    fn unbound_variable_is_reported() {
        let err = Poly::var(Var::A).evaluate_with(&|_| None).unwrap_err();
        assert_eq!(err, ScalarError::UnboundVariable(Var::A));
    }
}
