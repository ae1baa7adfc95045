use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{rational_to_f64, Rational, Real, Ring};

/// Truncated Taylor expansion in `t` around a point: `coeffs[k] = f^(k)(t0) / k!`.
///
/// Products, quotients and elementary functions propagate the coefficients
/// exactly up to order `K - 1`. [`Taylor::derive`] shifts the series down one
/// order and marks the top coefficient as unknown (NaN), so a value that has
/// been differentiated more than `K - 1` times reads as NaN instead of a
/// silently wrong number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Taylor<const K: usize> {
    coeffs: [f64; K],
}

/// First-order jet `(value, d/dt)`.
pub type Jet1 = Taylor<2>;

impl Jet1 {
    pub fn new(value: f64, deriv: f64) -> Self {
        Taylor { coeffs: [value, deriv] }
    }
}

impl<const K: usize> Taylor<K> {
    pub fn from_coeffs(coeffs: [f64; K]) -> Self {
        Taylor { coeffs }
    }

    pub fn constant(c: f64) -> Self {
        let mut coeffs = [0.0; K];
        coeffs[0] = c;
        Taylor { coeffs }
    }

    /// The independent variable `t` expanded at `t0`.
    pub fn variable(t0: f64) -> Self {
        let mut coeffs = [0.0; K];
        coeffs[0] = t0;
        if K > 1 {
            coeffs[1] = 1.0;
        }
        Taylor { coeffs }
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// First derivative at the expansion point.
    pub fn deriv(&self) -> f64 {
        if K > 1 {
            self.coeffs[1]
        } else {
            f64::NAN
        }
    }

    /// `k`-th derivative at the expansion point.
    pub fn derivative(&self, k: usize) -> f64 {
        if k >= K {
            return f64::NAN;
        }
        let fact: f64 = (1..=k).map(|i| i as f64).product();
        self.coeffs[k] * fact
    }

    pub fn coeffs(&self) -> &[f64; K] {
        &self.coeffs
    }

    /// d/dt of the series.
    pub fn derive(&self) -> Self {
        let mut coeffs = [f64::NAN; K];
        for k in 0..K.saturating_sub(1) {
            coeffs[k] = (k + 1) as f64 * self.coeffs[k + 1];
        }
        Taylor { coeffs }
    }

    fn sin_cos_impl(&self) -> (Self, Self) {
        let u = &self.coeffs;
        let mut s = [0.0; K];
        let mut c = [0.0; K];
        s[0] = u[0].sin();
        c[0] = u[0].cos();
        for k in 1..K {
            let mut sk = 0.0;
            let mut ck = 0.0;
            for j in 1..=k {
                let w = j as f64 * u[j];
                sk += w * c[k - j];
                ck -= w * s[k - j];
            }
            s[k] = sk / k as f64;
            c[k] = ck / k as f64;
        }
        (Taylor { coeffs: s }, Taylor { coeffs: c })
    }
}

impl<const K: usize> Add for Taylor<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut coeffs = self.coeffs;
        for (a, b) in coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += *b;
        }
        Taylor { coeffs }
    }
}

impl<const K: usize> Sub for Taylor<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut coeffs = self.coeffs;
        for (a, b) in coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= *b;
        }
        Taylor { coeffs }
    }
}

impl<const K: usize> Neg for Taylor<K> {
    type Output = Self;
    fn neg(self) -> Self {
        Taylor {
            coeffs: self.coeffs.map(|c| -c),
        }
    }
}

impl<const K: usize> Mul for Taylor<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut coeffs = [0.0; K];
        for (k, out) in coeffs.iter_mut().enumerate() {
            if k == 1 {
                // Leibniz rule written out: (fg)' = f'g + fg'
                *out = self.coeffs[1] * rhs.coeffs[0] + self.coeffs[0] * rhs.coeffs[1];
                continue;
            }
            *out = (0..=k).map(|i| self.coeffs[i] * rhs.coeffs[k - i]).sum();
        }
        Taylor { coeffs }
    }
}

impl<const K: usize> Div for Taylor<K> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let b0 = rhs.coeffs[0];
        let mut q = [0.0; K];
        for k in 0..K {
            let acc: f64 = (0..k).map(|i| q[i] * rhs.coeffs[k - i]).sum();
            q[k] = (self.coeffs[k] - acc) / b0;
        }
        Taylor { coeffs: q }
    }
}

impl<const K: usize> Ring for Taylor<K> {
    fn zero() -> Self {
        Taylor::constant(0.0)
    }
    fn one() -> Self {
        Taylor::constant(1.0)
    }
    fn from_rational(q: &Rational) -> Self {
        Taylor::constant(rational_to_f64(q))
    }
    fn is_negligible(&self, tol: f64) -> bool {
        self.coeffs[0].abs() <= tol
    }
}

impl<const K: usize> Real for Taylor<K> {
    fn constant(c: f64) -> Self {
        Taylor::constant(c)
    }

    fn sqrt(&self) -> Self {
        let a = &self.coeffs;
        let mut s = [0.0; K];
        s[0] = a[0].sqrt();
        for k in 1..K {
            let acc: f64 = (1..k).map(|i| s[i] * s[k - i]).sum();
            s[k] = (a[k] - acc) / (2.0 * s[0]);
        }
        Taylor { coeffs: s }
    }

    fn sin(&self) -> Self {
        self.sin_cos_impl().0
    }

    fn cos(&self) -> Self {
        self.sin_cos_impl().1
    }

    fn value(&self) -> f64 {
        self.coeffs[0]
    }
}
