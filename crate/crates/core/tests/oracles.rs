//! Independent oracles: finite differences on the
//! coordinate embedding, the intrinsic curvature of induced metrics, and
//! direct use of the published curvature components.

#![allow(clippy::needless_range_loop)]

use nalgebra::{Matrix3, Matrix4, Vector4};
use nilgeo::geometry::{christoffel, ricci_contracted, FrameGeometry, MetricField};
use nilgeo::hypersurface::{Hypersurface, HypersurfaceFrame, SymbolicDerivation, TimeDerivation};
use nilgeo::minimal::{graph_mean_curvature, ExampleFamily, FrameFamily, GraphSurface};
use nilgeo::reference::ReferenceTables;
use nilgeo::scalar::{rat, Jet1, Poly, RatFunc, Taylor, Var};

/// The coordinate metric, typed in from the published matrix.
fn metric_at(t: f64) -> Matrix4<f64> {
    let t2 = t * t;
    Matrix4::new(
        1.0,
        -t,
        t2 / 2.0,
        0.0,
        -t,
        1.0 + t2,
        -t * (1.0 + t2 / 2.0),
        0.0,
        t2 / 2.0,
        -t * (1.0 + t2 / 2.0),
        1.0 + t2 + t2 * t2 / 4.0,
        0.0,
        0.0,
        0.0,
        0.0,
        1.0,
    )
}

/// `Γ^k_ij` from central differences of the metric in `t`.
fn christoffel_fd(t: f64) -> [[[f64; 4]; 4]; 4] {
    let h = 1e-5;
    let dg = (metric_at(t + h) - metric_at(t - h)) / (2.0 * h);
    let d = |m: usize, i: usize, j: usize| if m == 3 { dg[(i, j)] } else { 0.0 };
    let inv = metric_at(t).try_inverse().expect("metric is invertible");
    let mut out = [[[0.0; 4]; 4]; 4];
    for k in 0..4 {
        for i in 0..4 {
            for j in 0..4 {
                out[k][i][j] = (0..4)
                    .map(|l| 0.5 * inv[(k, l)] * (d(i, j, l) + d(j, i, l) - d(l, i, j)))
                    .sum();
            }
        }
    }
    out
}

/// Mean curvature of `(y,z,t) ↦ (φ(t), y, z, t)` computed in coordinates,
/// with the normal oriented so that its `∂t` component is negative.
fn graph_h_fd(phi: &dyn Fn(f64) -> f64, t: f64) -> f64 {
    let h = 1e-4;
    let dphi = (phi(t + h) - phi(t - h)) / (2.0 * h);
    let ddphi = (phi(t + h) - 2.0 * phi(t) + phi(t - h)) / (h * h);
    let g = metric_at(t);
    let gamma = christoffel_fd(t);
    let tangents = [
        Vector4::new(0.0, 1.0, 0.0, 0.0),
        Vector4::new(0.0, 0.0, 1.0, 0.0),
        Vector4::new(dphi, 0.0, 0.0, 1.0),
    ];
    // the only nonzero second derivative of the embedding is f_tt = φ'' ∂x
    let second = |a: usize, b: usize| {
        if a == 2 && b == 2 {
            Vector4::new(ddphi, 0.0, 0.0, 0.0)
        } else {
            Vector4::zeros()
        }
    };
    let covector = Vector4::new(1.0, 0.0, 0.0, -dphi);
    let inv = g.try_inverse().expect("metric is invertible");
    let mut nu = inv * covector;
    nu /= (nu.transpose() * g * nu)[(0, 0)].sqrt();
    if nu[3] > 0.0 {
        nu = -nu;
    }
    let induced = Matrix3::from_fn(|a, b| (tangents[a].transpose() * g * tangents[b])[(0, 0)]);
    let induced_inv = induced.try_inverse().expect("induced metric is invertible");
    let mut trace = 0.0;
    for a in 0..3 {
        for b in 0..3 {
            let mut nab = second(a, b);
            for k in 0..4 {
                for i in 0..4 {
                    for j in 0..4 {
                        nab[k] += gamma[k][i][j] * tangents[a][i] * tangents[b][j];
                    }
                }
            }
            trace += induced_inv[(a, b)] * (nab.transpose() * g * nu)[(0, 0)];
        }
    }
    trace / 3.0
}

#[test]
fn flat_graph_mean_curvature_matches_coordinate_oracle() {
    let engine = graph_mean_curvature(&GraphSurface::new(vec![]), 0.0).unwrap();
    let oracle = graph_h_fd(&|_| 0.0, 0.0);
    assert!((engine - oracle).abs() < 1e-7, "{engine} vs {oracle}");
}

type GraphCase<'a> = (&'a [(i64, i64)], &'a dyn Fn(f64) -> f64);

#[test]
fn graph_mean_curvature_matches_coordinate_oracle() {
    let cases: [GraphCase; 3] = [
        (&[(0, 1), (2, 1), (0, 1), (1, 3)], &|t: f64| 2.0 * t + t.powi(3) / 3.0),
        (&[(0, 1), (0, 1), (1, 1)], &|t: f64| t * t),
        (&[(1, 2), (-1, 1), (0, 1), (1, 4)], &|t: f64| 0.5 - t + t.powi(3) / 4.0),
    ];
    for (coeffs, phi) in cases {
        let surface = GraphSurface::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect());
        for t in [-1.3, 0.0, 0.4, 1.7] {
            let engine = graph_mean_curvature(&surface, t).unwrap();
            let oracle = graph_h_fd(phi, t);
            assert!((engine - oracle).abs() < 1e-6, "t = {t}: {engine} vs {oracle}");
        }
    }
}

#[test]
fn engine_christoffels_match_finite_differences() {
    let metric = nilgeo::geometry::standard_metric();
    let conn = christoffel(&metric).unwrap();
    for t in [-0.8, 0.3, 1.9] {
        let fd = christoffel_fd(t);
        for k in 0..4 {
            for i in 0..4 {
                for j in 0..4 {
                    let v = conn.symbol(k, i, j).evaluate([0.0, 0.0, 0.0, t]).unwrap();
                    assert!((v - fd[k][i][j]).abs() < 1e-8);
                }
            }
        }
    }
}

#[test]
fn slice_gauss_entry_from_published_curvature() {
    // g(R(e1,e2)e2,e1) = g̃(R̃(e1,e2)e2,e1) + h(e2,e2)h(e1,e1) − h(e1,e2)h(e2,e1)
    let r = ReferenceTables::published();
    let r1212 = r
        .curvature
        .iter()
        .find(|(idx, _)| *idx == [1, 2, 1, 2])
        .unwrap()
        .1
        .clone();
    let ambient = -r1212;
    let h = &r.slice_h;
    let oracle = &ambient + &(&h[1][1] * &h[0][0]) - &h[0][1] * &h[1][0];

    let geometry = FrameGeometry::nil4();
    let der = SymbolicDerivation::new(nilgeo::geometry::standard_frame());
    let s = Hypersurface::new(&geometry, &der, HypersurfaceFrame::<RatFunc>::slice(), 0.0).unwrap();
    assert_eq!(s.gauss_induced_curvature(0, 1, 1, 0), RatFunc::constant(oracle));
}

/// Induced metric of the example graph, padded with a flat dummy direction
/// in the `x` slot so that the four-dimensional engine computes its intrinsic
/// curvature. A product with a line does not change the scalar curvature.
fn padded_induced_metric() -> MetricField {
    let t = RatFunc::var(Var::T);
    let dphi = &RatFunc::int(2) + &t.pow(2);
    let g = nilgeo::geometry::standard_metric().entries;
    let tangents: [[RatFunc; 4]; 3] = [
        [RatFunc::zero(), RatFunc::one(), RatFunc::zero(), RatFunc::zero()],
        [RatFunc::zero(), RatFunc::zero(), RatFunc::one(), RatFunc::zero()],
        [dphi, RatFunc::zero(), RatFunc::zero(), RatFunc::one()],
    ];
    let pair = |u: &[RatFunc; 4], v: &[RatFunc; 4]| {
        let mut acc = RatFunc::zero();
        for m in 0..4 {
            for n in 0..4 {
                acc = &acc + &(&(&u[m] * &g[m][n]) * &v[n]);
            }
        }
        acc
    };
    let mut entries: [[RatFunc; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| RatFunc::zero()));
    entries[0][0] = RatFunc::one();
    for a in 0..3 {
        for b in 0..3 {
            entries[a + 1][b + 1] = pair(&tangents[a], &tangents[b]);
        }
    }
    MetricField::new(entries).unwrap()
}

#[test]
fn gauss_equation_matches_intrinsic_curvature_of_example() {
    let metric = padded_induced_metric();
    let conn = christoffel(&metric).unwrap();
    let (_, tau) = ricci_contracted(&conn, &metric).unwrap();
    let geometry = FrameGeometry::nil4();
    let der = TimeDerivation::new(&geometry);
    for t in [-2.0, -0.5, 0.0, 1.0, 3.0] {
        let intrinsic = tau.evaluate([0.0, 0.0, 0.0, t]).unwrap();
        let frame = ExampleFamily.frame_at(&Jet1::variable(t));
        let s = Hypersurface::new(&geometry, &der, frame, 1e-10).unwrap();
        let (_, gauss) = s.induced_ricci();
        assert!(
            (gauss.value() - intrinsic).abs() < 1e-9,
            "t = {t}: {} vs {intrinsic}",
            gauss.value()
        );
    }
}

#[test]
fn example_h_diagonal_matches_expanded_formula() {
    // h(X_i, X_i) = a a_i' d_i + b d_i (b_i' − a_i) + c d_i (c_i' − b_i) + d (d_i d_i' + b_i (a_i + c_i)),
    // with primes from central differences
    let t = 0.0;
    let step = 1e-5;
    let f = ExampleFamily.frame_at(&t);
    let p = ExampleFamily.frame_at(&(t + step));
    let m = ExampleFamily.frame_at(&(t - step));
    let [a, b, c, d] = f.xi;
    let geometry = FrameGeometry::nil4();
    let der = TimeDerivation::new(&geometry);
    let s = Hypersurface::new(&geometry, &der, ExampleFamily.frame_at(&Jet1::variable(t)), 1e-10).unwrap();
    let h = s.second_fundamental_form().h;
    for i in 0..3 {
        let [ai, bi, ci, di] = f.tangents[i];
        let pr: [f64; 4] = std::array::from_fn(|k| (p.tangents[i][k] - m.tangents[i][k]) / (2.0 * step));
        let oracle = a * pr[0] * di + b * di * (pr[1] - ai) + c * di * (pr[2] - bi) + d * (di * pr[3] + bi * (ai + ci));
        assert!((h[i][i].value() - oracle).abs() < 1e-9);
    }
    for i in 0..3 {
        for j in 0..3 {
            assert!((h[i][j].value() - h[j][i].value()).abs() < 1e-12);
        }
    }
}

#[test]
fn example_cubic_form_is_not_zero() {
    let geometry = FrameGeometry::nil4();
    let der = TimeDerivation::new(&geometry);
    let s = Hypersurface::new(
        &geometry,
        &der,
        ExampleFamily.frame_at(&Taylor::<3>::variable(1.0)),
        1e-10,
    )
    .unwrap();
    let c = s.cubic_form().c;
    let max = c
        .iter()
        .flatten()
        .flatten()
        .map(|v| v.value().abs())
        .fold(0.0, f64::max);
    assert!(max > 1e-3);
    assert!(!s.is_parallel());
}

#[test]
fn sweep_residuals_by_brute_force() {
    // e2 and e4 solve every equation; a generic point does not
    let system = nilgeo::classify::CurvatureNormalSystem::nil4();
    let eval = |xi: [f64; 4]| {
        system
            .iter()
            .map(|(_, p)| {
                let vals = |v: Var| Var::NORMAL.iter().position(|&w| w == v).map(|i| xi[i]);
                p.evaluate_with(&vals).unwrap().abs()
            })
            .fold(0.0, f64::max)
    };
    assert_eq!(eval([0.0, 0.0, 0.0, 1.0]), 0.0);
    assert_eq!(eval([0.0, 1.0, 0.0, 0.0]), 0.0);
    assert!(eval([0.5, 0.5, 0.5, 0.5]) > 1e-3);
    let r = std::f64::consts::FRAC_1_SQRT_2;
    assert!(eval([r, 0.0, r, 0.0]) > 1e-3);
}

#[test]
fn example_normal_at_zero_by_substitution() {
    let s5 = 5f64.sqrt();
    let xi = ExampleFamily.frame_at(&0.0).xi;
    let expected = [2.0 / (s5 * 2.0), 0.0, 0.0, -2.0 / s5];
    assert!(xi.iter().zip(&expected).all(|(p, q)| (p - q).abs() <= 1e-12));
}

#[test]
fn exact_scalars_substitute_into_printed_metric() {
    let r = ReferenceTables::published();
    let at = |f: &RatFunc, t: f64| f.evaluate([0.0, 0.0, 0.0, t]).unwrap();
    assert_eq!(at(&r.metric[1][1], 1.0), 2.0);
    assert_eq!(at(&r.metric[1][2], 0.0), 0.0);
    assert_eq!(at(&r.metric[1][2], 2.0), -6.0);
    let d = r.metric[1][2].differentiate(Var::T);
    let t = Poly::var(Var::T);
    let expected = RatFunc::poly(&Poly::int(-1) - &t.pow(2).scale(&rat(3, 2)));
    assert_eq!(d, expected);
}
