//! Checks shared by the property tests and the acceptance run.

#![allow(dead_code, clippy::needless_range_loop)]

use nilgeo::geometry::{FrameGeometry, Nil4};
use nilgeo::hypersurface::{Hypersurface, HypersurfaceFrame, SymbolicDerivation, TimeDerivation};
use nilgeo::minimal::{ExampleFamily, FrameFamily, GraphSurface};
use nilgeo::scalar::{rat, Jet1, Monomial, Poly, RatFunc, Taylor, Var};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub fn poly() -> impl Strategy<Value = Poly> {
    let term = (-6i64..=6, 1i64..=3, 0u16..=2, 0u16..=2, 0u16..=2);
    prop::collection::vec(term, 0..4).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|(n, d, ea, eb, et)| {
            let m = Monomial::one()
                .with_exp(Var::A, ea)
                .with_exp(Var::B, eb)
                .with_exp(Var::T, et);
            (m, rat(n, d))
        }))
    })
}

pub fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_map(|p| if p.is_zero() { Poly::one() } else { p })
}

pub fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatFunc::new(n, d).expect("nonzero denominator"))
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn check(cond: bool, what: &str) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

/// Ring axioms and the product rule for polynomials.
pub fn poly_laws(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(poly(), poly(), poly()), |(p, q, r)| {
            check(&(&p + &q) + &r == &p + &(&q + &r), "additive associativity")?;
            check(&(&p * &q) * &r == &p * &(&q * &r), "multiplicative associativity")?;
            check(&p * &q == &q * &p, "commutativity")?;
            check(&p * &(&q + &r) == &(&p * &q) + &(&p * &r), "distributivity")?;
            check((&p - &p.clone()).is_zero() && &p * &Poly::one() == p, "identities")?;
            for v in [Var::A, Var::T] {
                let lhs = (&p * &q).differentiate(v);
                let rhs = &(&p.differentiate(v) * &q) + &(&p * &q.differentiate(v));
                check(lhs == rhs, "product rule")?;
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Field axioms, canonical form and the quotient rule for rational functions.
pub fn ratfunc_laws(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(ratfunc(), ratfunc(), ratfunc(), nonzero_poly()), |(f, g, h, k)| {
            check(&(&f + &g) + &h == &f + &(&g + &h), "additive associativity")?;
            check(&f * &g == &g * &f, "commutativity")?;
            check(&f * &(&g + &h) == &(&f * &g) + &(&f * &h), "distributivity")?;
            check((&f - &f.clone()).is_zero(), "additive inverse")?;
            let again = RatFunc::new(f.numer().clone(), f.denom().clone()).expect("canonical denominator");
            check(again == f, "canonical form is idempotent")?;
            let scaled = RatFunc::new(f.numer() * &k, f.denom() * &k).expect("nonzero");
            check(scaled == f, "common factors cancel")?;
            if !g.is_zero() {
                let q = f.try_div(&g).expect("nonzero divisor");
                check(&q * &g == f, "division inverts multiplication")?;
                let lhs = q.differentiate(Var::T);
                let num = &(&f.differentiate(Var::T) * &g) - &(&f * &g.differentiate(Var::T));
                let rhs = num.try_div(&g.pow(2)).expect("nonzero");
                check(lhs == rhs, "quotient rule")?;
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Jet derivatives of the example frame against central differences.
pub fn jets_match_finite_differences(points: u32) -> Result<(), String> {
    let step = 1e-5;
    runner(points)
        .run(&(-3.0f64..3.0), |t| {
            let jet = ExampleFamily.frame_at(&Jet1::variable(t));
            let plus = ExampleFamily.frame_at(&(t + step));
            let minus = ExampleFamily.frame_at(&(t - step));
            let graph = GraphSurface::example();
            let gj = nilgeo::minimal::graph_frame(&graph, &Jet1::variable(t)).expect("graph frame");
            let gp = nilgeo::minimal::graph_frame(&graph, &(t + step)).expect("graph frame");
            let gm = nilgeo::minimal::graph_frame(&graph, &(t - step)).expect("graph frame");
            for (j, p, m) in [(&jet, &plus, &minus), (&gj, &gp, &gm)] {
                let vecs = |f: &HypersurfaceFrame<f64>| [f.xi, f.tangents[0], f.tangents[1], f.tangents[2]];
                let jv = [&j.xi, &j.tangents[0], &j.tangents[1], &j.tangents[2]];
                for ((jr, pr), mr) in jv.iter().zip(vecs(p)).zip(vecs(m)) {
                    for k in 0..4 {
                        let fd = (pr[k] - mr[k]) / (2.0 * step);
                        check(
                            (jr[k].deriv() - fd).abs() <= 1e-7,
                            "jet derivative vs central difference",
                        )?;
                    }
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Pair antisymmetries, pair symmetry and the first Bianchi identity of a
/// curvature table `r[i][j][k][l]`, within `tol`.
pub fn riemann_symmetric<const N: usize>(
    r: &dyn Fn(usize, usize, usize, usize) -> f64,
    tol: f64,
) -> Result<(), String> {
    for i in 0..N {
        for j in 0..N {
            for k in 0..N {
                for l in 0..N {
                    let v = r(i, j, k, l);
                    let fail = |what: &str| Err(format!("{what} fails at ({i},{j},{k},{l})"));
                    if (v + r(j, i, k, l)).abs() > tol {
                        return fail("R_ijkl = -R_jikl");
                    }
                    if (v + r(i, j, l, k)).abs() > tol {
                        return fail("R_ijkl = -R_ijlk");
                    }
                    if (v - r(k, l, i, j)).abs() > tol {
                        return fail("R_ijkl = R_klij");
                    }
                    if (v + r(j, k, i, l) + r(k, i, j, l)).abs() > tol {
                        return fail("first Bianchi identity");
                    }
                }
            }
        }
    }
    Ok(())
}

/// Riemann symmetries of the ambient table (exact) and of Gauss-equation
/// induced tables on the slice (exact) and on the example (numeric).
pub fn riemann_suite(points: u32) -> Result<(), String> {
    let nil = Nil4::new();
    let table = nil.curvature_table();
    let exact = |i, j, k, l| {
        let v: &RatFunc = table.get(i, j, k, l);
        v.as_constant()
            .map_or(f64::NAN, |q| nilgeo::scalar::rational_to_f64(&q))
    };
    riemann_symmetric::<4>(&exact, 0.0)?;

    let geometry = FrameGeometry::nil4();
    let der = SymbolicDerivation::new(nil.frame.clone());
    let slice =
        Hypersurface::new(&geometry, &der, HypersurfaceFrame::<RatFunc>::slice(), 0.0).map_err(|e| e.to_string())?;
    let induced = slice.induced_curvature_table();
    riemann_symmetric::<3>(
        &|i, j, k, l| {
            induced[i][j][k][l]
                .as_constant()
                .map_or(f64::NAN, |q| nilgeo::scalar::rational_to_f64(&q))
        },
        0.0,
    )?;

    let tder = TimeDerivation::new(&geometry);
    runner(points)
        .run(&(-4.0f64..4.0), |t| {
            let frame = ExampleFamily.frame_at(&Jet1::variable(t));
            let s =
                Hypersurface::new(&geometry, &tder, frame, 1e-10).map_err(|e| TestCaseError::fail(e.to_string()))?;
            let r = s.induced_curvature_table();
            riemann_symmetric::<3>(&|i, j, k, l| r[i][j][k][l].value(), 1e-12).map_err(TestCaseError::fail)
        })
        .map_err(|e| e.to_string())
}

/// The cubic-form side and the curvature side of the Codazzi equation agree:
/// exactly on the slice, numerically on the example and on random graphs.
pub fn codazzi_dual_path(points: u32) -> Result<(), String> {
    let nil = Nil4::new();
    let geometry = FrameGeometry::nil4();
    let der = SymbolicDerivation::new(nil.frame.clone());
    let slice =
        Hypersurface::new(&geometry, &der, HypersurfaceFrame::<RatFunc>::slice(), 0.0).map_err(|e| e.to_string())?;
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                if slice.codazzi_residual(i, j, k) != slice.codazzi_curvature(i, j, k) {
                    return Err(format!("slice Codazzi sides differ at ({i},{j},{k})"));
                }
            }
        }
    }
    let tder = TimeDerivation::new(&geometry);
    let coef = (-3i64..=3, 1i64..=3);
    runner(points)
        .run(&(-2.0f64..2.0, prop::collection::vec(coef, 0..4)), |(t, c)| {
            let graph = GraphSurface::new(c.into_iter().map(|(n, d)| rat(n, d)).collect());
            let frames = [
                ExampleFamily.frame_at(&Taylor::<3>::variable(t)),
                nilgeo::minimal::graph_frame(&graph, &Taylor::<3>::variable(t))
                    .map_err(|e| TestCaseError::fail(e.to_string()))?,
            ];
            for frame in frames {
                let s = Hypersurface::new(&geometry, &tder, frame, 1e-10)
                    .map_err(|e| TestCaseError::fail(e.to_string()))?;
                let res = s.codazzi_residuals();
                for i in 0..3 {
                    for j in 0..3 {
                        for k in 0..3 {
                            let gap = (res[i][j][k].value() - s.codazzi_curvature(i, j, k).value()).abs();
                            check(gap <= 1e-9, "Codazzi sides agree")?;
                        }
                    }
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}
