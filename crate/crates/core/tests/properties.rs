mod common;

use nilgeo::classify::{classify_symbolic, curvature_normal, sweep_numeric, tangent_generators, CurvatureNormalSystem};
use nilgeo::geometry::FrameGeometry;
use nilgeo::hypersurface::{Hypersurface, TimeDerivation};
use nilgeo::minimal::{
    family_mean_curvature, theorem4_functional, ExampleFamily, FrameFamily, MixedFamily, PlaneRotation, RotatedFamily,
};
use nilgeo::scalar::{Jet1, Poly, Var};
use proptest::prelude::*;

#[test]
fn polynomial_ring_laws() {
    common::poly_laws(1000).unwrap();
}

#[test]
fn rational_function_laws() {
    common::ratfunc_laws(1000).unwrap();
}

#[test]
fn jets_agree_with_finite_differences() {
    common::jets_match_finite_differences(50).unwrap();
}

#[test]
fn riemann_symmetries() {
    common::riemann_suite(20).unwrap();
}

#[test]
fn codazzi_sides_agree() {
    common::codazzi_dual_path(40).unwrap();
}

fn rotations() -> impl Strategy<Value = Vec<PlaneRotation>> {
    let plane = prop::sample::select(vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    prop::collection::vec((plane, -3.0f64..3.0, -1.0f64..1.0), 1..4).prop_map(|v| {
        v.into_iter()
            .map(|((p, q), alpha, beta)| PlaneRotation { p, q, alpha, beta })
            .collect()
    })
}

fn orthogonal3(angles: [f64; 3]) -> [[f64; 3]; 3] {
    let g = |p: usize, q: usize, a: f64| {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        m[p][p] = a.cos();
        m[q][q] = a.cos();
        m[p][q] = -a.sin();
        m[q][p] = a.sin();
        m
    };
    let mul = |a: [[f64; 3]; 3], b: [[f64; 3]; 3]| -> [[f64; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| a[i][k] * b[k][j]).sum()))
    };
    mul(mul(g(0, 1, angles[0]), g(1, 2, angles[1])), g(0, 2, angles[2]))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 20, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn minimality_functional_vanishes_exactly_with_h(rot in rotations()) {
        let fam = RotatedFamily { base: ExampleFamily, rotations: rot };
        for n in 0..=80 {
            let t = -4.0 + 0.1 * f64::from(n);
            let h = family_mean_curvature(&fam, t).unwrap();
            let f = theorem4_functional(&fam, t).unwrap();
            prop_assert!((h.closed_form - h.generic).abs() <= 1e-9);
            prop_assert!((f - 3.0 * h.generic).abs() <= 1e-9, "F = {f}, H = {}", h.generic);
            prop_assert_eq!(f.abs() <= 3e-9, h.generic.abs() <= 1e-9);
        }
    }

    #[test]
    fn tangent_mixing_preserves_h(angles in prop::array::uniform3(-3.0f64..3.0), t in -4.0f64..4.0, rot in rotations()) {
        let base = RotatedFamily { base: ExampleFamily, rotations: rot };
        let mixed = MixedFamily { base: base.clone(), mixing: orthogonal3(angles) };
        let h0 = family_mean_curvature(&base, t).unwrap();
        let h1 = family_mean_curvature(&mixed, t).unwrap();
        prop_assert!((h0.generic - h1.generic).abs() <= 1e-10);
        prop_assert!((h0.closed_form - h1.closed_form).abs() <= 1e-10);
    }

    #[test]
    fn second_fundamental_form_matches_shape_operator(t in -4.0f64..4.0, rot in rotations()) {
        // differentiating g(Y, ξ) = 0 along X
        let fam = RotatedFamily { base: ExampleFamily, rotations: rot };
        let geometry = FrameGeometry::nil4();
        let der = TimeDerivation::new(&geometry);
        let s = Hypersurface::new(&geometry, &der, fam.frame_at(&Jet1::variable(t)), 1e-10).unwrap();
        let h = s.second_fundamental_form().h;
        let a = s.shape_operator();
        for i in 0..3 {
            for j in 0..3 {
                prop_assert!((h[i][j].value() - a[i][j].value()).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn compiled_system_matches_direct_contraction(xi in prop::array::uniform4(-1.0f64..1.0)) {
        let geometry = FrameGeometry::nil4();
        let system = CurvatureNormalSystem::new(&geometry);
        for (t, p) in system.iter() {
            let direct: f64 = curvature_normal(&geometry, &xi, t[0] - 1, t[1] - 1, t[2] - 1);
            let vals = |v: Var| Var::NORMAL.iter().position(|&w| w == v).map(|i| xi[i]);
            prop_assert!((p.evaluate_with(&vals).unwrap() - direct).abs() <= 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 6, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn sweep_agrees_with_symbolic_chain(seed in any::<u64>()) {
        let symbolic = classify_symbolic().survivors();
        let sweep = sweep_numeric(5000, seed, 1e-9).survivors;
        prop_assert_eq!(sweep, symbolic);
    }
}

#[test]
fn generators_are_tangent() {
    let xi = Var::NORMAL.map(Poly::var);
    for x in tangent_generators(&xi) {
        let dot = x.iter().zip(&xi).fold(Poly::zero(), |acc, (u, v)| &acc + &(u * v));
        assert!(dot.is_zero());
    }
}

#[test]
fn curvature_normal_is_antisymmetric() {
    let system = CurvatureNormalSystem::nil4();
    for (t, p) in system.iter() {
        assert_eq!(p, &-system.get([t[1], t[0], t[2]]));
    }
}

#[test]
fn e4_solves_all_triples() {
    let system = CurvatureNormalSystem::nil4();
    let e4 = [0, 0, 0, 1].map(|n| nilgeo::scalar::rat(n, 1));
    assert!(system.vanishes_at(&e4));
    assert_eq!(system.iter().count(), 216);
}
