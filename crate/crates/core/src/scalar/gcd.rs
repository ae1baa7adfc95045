//! Multivariate polynomial gcd over the rationals.
//!
//! Recursive on the main variable: split off contents, then run the
//! subresultant pseudo-remainder sequence on the primitive parts.

use super::poly::Poly;
use super::var::{Monomial, Var, NUM_VARS};
use super::Rational;
use num::One;

type Univariate = Vec<Poly>;

/// Monic gcd of `a` and `b`; zero only when both inputs are zero.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    gcd_rec(a, b).monic()
}

/// A variable present in only one input comes first, since it reduces to a
/// content computation. Otherwise the shared variable of least degree keeps
/// the pseudo-remainder coefficients small.
fn main_var(a: &Poly, b: &Poly) -> Option<Var> {
    let present: Vec<Var> = Var::ALL
        .into_iter()
        .filter(|&v| a.contains(v) || b.contains(v))
        .collect();
    if let Some(&v) = present.iter().find(|&&v| !(a.contains(v) && b.contains(v))) {
        return Some(v);
    }
    present.into_iter().min_by_key(|&v| a.degree_in(v).max(b.degree_in(v)))
}

fn gcd_rec(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    let (ma, mb) = (monomial_content(a), monomial_content(b));
    if !ma.is_one() || !mb.is_one() {
        let common = Monomial(std::array::from_fn(|i| ma.0[i].min(mb.0[i])));
        let rest = gcd_rec(&strip(a, &ma), &strip(b, &mb));
        return rest.mul_monomial(&common, &Rational::one());
    }
    let (_, a) = a.primitive_integer();
    let (_, b) = b.primitive_integer();
    let (a, b) = (&a, &b);
    if a == b {
        return a.clone();
    }
    let v = match main_var(a, b) {
        Some(v) => v,
        None => return Poly::one(),
    };
    if !a.contains(v) {
        return gcd_rec(a, &content(&b.coeffs_in(v)));
    }
    if !b.contains(v) {
        return gcd_rec(&content(&a.coeffs_in(v)), b);
    }
    let ua = a.coeffs_in(v);
    let ub = b.coeffs_in(v);
    if free_of(a, b, v) {
        return gcd_rec(&content(&ua), &content(&ub));
    }
    let ca = content(&ua);
    let cb = content(&ub);
    let pa = div_coeffs(&ua, &ca);
    let pb = div_coeffs(&ub, &cb);
    let c = gcd_rec(&ca, &cb);
    let g = subresultant_primitive(pa, pb);
    &c * &Poly::from_coeffs_in(v, &g)
}

/// Sound early exit: if, at an evaluation point that keeps both leading
/// coefficients in `v` nonzero, the univariate images are coprime, then the
/// gcd has degree zero in `v`.
fn free_of(a: &Poly, b: &Poly, v: Var) -> bool {
    let others: Vec<Var> = Var::ALL
        .into_iter()
        .filter(|&w| w != v && (a.contains(w) || b.contains(w)))
        .collect();
    if others.is_empty() {
        return false;
    }
    let (da, db) = (a.degree_in(v), b.degree_in(v));
    for shift in 0..3i64 {
        let image = |p: &Poly| {
            others.iter().enumerate().fold(p.clone(), |acc, (i, &w)| {
                acc.substitute_var(w, &Poly::int(2 + shift + 3 * i as i64))
            })
        };
        let (ia, ib) = (image(a), image(b));
        if ia.degree_in(v) != da || ib.degree_in(v) != db {
            continue;
        }
        return gcd_rec(&ia, &ib).degree_in(v) == 0;
    }
    false
}

fn monomial_content(p: &Poly) -> Monomial {
    let mut m = Monomial([u16::MAX; NUM_VARS]);
    for (t, _) in p.terms() {
        m = Monomial(std::array::from_fn(|i| m.0[i].min(t.0[i])));
    }
    m
}

fn strip(p: &Poly, m: &Monomial) -> Poly {
    Poly::from_terms(
        p.terms()
            .map(|(t, c)| (t.div(m).expect("monomial content divides every term"), c.clone())),
    )
}

fn content(u: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in u {
        g = gcd_rec(&g, c);
        if g.as_constant().is_some() && !g.is_zero() {
            return Poly::one();
        }
    }
    g
}

fn div_coeffs(u: &[Poly], d: &Poly) -> Univariate {
    u.iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

fn trim(u: &mut Univariate) {
    while u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
}

fn deg(u: &Univariate) -> usize {
    u.len().saturating_sub(1)
}

fn lc(u: &Univariate) -> &Poly {
    u.last().expect("nonzero univariate")
}

fn pseudo_remainder(a: &Univariate, b: &Univariate) -> Univariate {
    let db = deg(b);
    let lb = lc(b).clone();
    let mut r = a.clone();
    trim(&mut r);
    let mut e = (deg(a) + 1).saturating_sub(db) as u32;
    while !r.is_empty() && deg(&r) >= db {
        let shift = deg(&r) - db;
        let lr = lc(&r).clone();
        let mut next: Univariate = r.iter().map(|c| c * &lb).collect();
        for (i, bc) in b.iter().enumerate() {
            next[i + shift] = &next[i + shift] - &(&lr * bc);
        }
        trim(&mut next);
        r = next;
        e -= 1;
    }
    let factor = lb.pow(e);
    r.iter().map(|c| c * &factor).collect()
}

fn subresultant_primitive(a: Univariate, b: Univariate) -> Univariate {
    let (mut a, mut b) = if deg(&a) >= deg(&b) { (a, b) } else { (b, a) };
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let delta = (deg(&a) - deg(&b)) as u32;
        let r = pseudo_remainder(&a, &b);
        if r.is_empty() {
            break;
        }
        if deg(&r) == 0 {
            return vec![Poly::one()];
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = div_coeffs(&r, &divisor);
        g = lc(&a).clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h update is exact"),
        };
    }
    let c = content(&b);
    div_coeffs(&b, &c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn v(var: Var) -> Poly {
        Poly::var(var)
    }

    #[test]
    fn gcd_of_shared_linear_factor() {
        let a = v(Var::A);
        let c = v(Var::C);
        let b = v(Var::B);
        let common = &a - &c;
        let p = &common * &(&a + &b);
        let q = &common * &(&b.pow(2) + &c);
        assert_eq!(gcd(&p, &q), common.monic());
    }

    #[test]
    fn gcd_of_univariate_in_t() {
        let t = v(Var::T);
        let two_plus_t2 = &Poly::int(2) + &t.pow(2);
        let p = &two_plus_t2 * &(&t + &Poly::one());
        let q = &two_plus_t2 * &t.scale(&rat(3, 1));
        assert_eq!(gcd(&p, &q), two_plus_t2);
    }

    #[test]
    fn coprime_inputs_give_one() {
        let p = &v(Var::T) + &Poly::one();
        let q = &v(Var::T) - &Poly::one();
        assert!(gcd(&p, &q).is_one());
        assert!(gcd(&Poly::int(6), &Poly::int(4)).is_one());
    }

    #[test]
    fn gcd_with_zero_is_monic_other() {
        let p = v(Var::X).scale(&rat(3, 1));
        assert_eq!(gcd(&p, &Poly::zero()), v(Var::X));
    }

    #[test]
    fn multivariate_power_gcd() {
        let x = v(Var::X);
        let y = v(Var::Y);
        let t = v(Var::T);
        let f = &(&x * &y) + &t;
        let p = &f.pow(2) * &(&x - &t);
        let q = &f * &(&y.pow(3) + &x);
        assert_eq!(gcd(&p, &q), f.monic());
    }
}
