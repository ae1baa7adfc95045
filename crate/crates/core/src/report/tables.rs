use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::geometry::FrameGeometry;
use crate::geometry::{check_orthonormal, ricci, ricci_contracted, verify_left_invariance, Nil4};
use crate::hypersurface::{principal_curvatures, Hypersurface, HypersurfaceFrame, SymbolicDerivation};
use crate::reference::ReferenceTables;
use crate::scalar::{rat, rational_to_f64, RatFunc, Rational};

use super::{expr, expr_matrix, num, nums, rat_matrix, rat_str, Outcome};

fn sub(i: usize, j: usize) -> String {
    format!("{}{}", i + 1, j + 1)
}

fn frame_vec_json(v: &[RatFunc; 4]) -> Value {
    Value::Array(v.iter().map(expr).collect())
}

fn to_ratfunc(v: &[Rational; 4]) -> [RatFunc; 4] {
    v.clone().map(RatFunc::constant)
}

/// The nonzero curvature entries implied by the listed ones under
/// `R_ijkl = −R_jikl = −R_ijlk = R_klij`.
pub(crate) fn curvature_closure(listed: &[([usize; 4], Rational)]) -> BTreeMap<[usize; 4], Rational> {
    let mut out = BTreeMap::new();
    for ([i, j, k, l], v) in listed {
        let (i, j, k, l) = (i - 1, j - 1, k - 1, l - 1);
        for ([p, q, r, s], sign) in [
            ([i, j, k, l], 1),
            ([j, i, k, l], -1),
            ([i, j, l, k], -1),
            ([j, i, l, k], 1),
            ([k, l, i, j], 1),
            ([l, k, i, j], -1),
            ([k, l, j, i], -1),
            ([l, k, j, i], 1),
        ] {
            out.insert([p, q, r, s], v * rat(sign, 1));
        }
    }
    out
}

/// Ambient tables of Nil⁴ compared with the published ones.
pub fn tables(reference: &ReferenceTables) -> Outcome {
    let nil = Nil4::new();

    let metric_ok = (0..4).all(|i| (0..4).all(|j| nil.metric.entries[i][j] == reference.metric[i][j]));

    let mut christoffel = Map::new();
    let mut christoffel_ok = true;
    for k in 0..4 {
        for i in 0..4 {
            for j in 0..4 {
                let value = nil.connection.symbol(k, i, j);
                let (a, b) = (i.min(j), i.max(j));
                let expected = reference
                    .christoffel
                    .iter()
                    .find(|(idx, _)| *idx == [k + 1, a + 1, b + 1])
                    .map_or_else(RatFunc::zero, |(_, v)| v.clone());
                christoffel_ok &= *value == expected;
                if i <= j && !value.is_zero() {
                    christoffel.insert(format!("Gamma^{}_{}", k + 1, sub(i, j)), expr(value));
                }
            }
        }
    }

    let mut connection = Map::new();
    let mut brackets = Map::new();
    let (mut connection_ok, mut brackets_ok) = (true, true);
    for i in 0..4 {
        for j in 0..4 {
            let nab = nil.frame_connection(i, j);
            let expected = reference
                .connection
                .iter()
                .find(|(idx, _)| *idx == [i + 1, j + 1])
                .map_or_else(|| std::array::from_fn(|_| RatFunc::zero()), |(_, v)| to_ratfunc(v));
            connection_ok &= nab == expected;
            if nab.iter().any(|c| !c.is_zero()) {
                connection.insert(format!("nabla_e{} e{}", i + 1, j + 1), frame_vec_json(&nab));
            }
            let br = nil.frame_bracket(i, j);
            let expected = reference
                .brackets
                .iter()
                .find_map(|(idx, v)| {
                    if *idx == [i + 1, j + 1] {
                        Some(to_ratfunc(v))
                    } else if *idx == [j + 1, i + 1] {
                        Some(to_ratfunc(v).map(|c| -c))
                    } else {
                        None
                    }
                })
                .unwrap_or_else(|| std::array::from_fn(|_| RatFunc::zero()));
            brackets_ok &= br == expected;
            if i > j && br.iter().any(|c| !c.is_zero()) {
                brackets.insert(format!("[e{},e{}]", i + 1, j + 1), frame_vec_json(&br));
            }
        }
    }

    let table = nil.curvature_table();
    let expected = curvature_closure(&reference.curvature);
    let nonzero = table.nonzero();
    let curvature_ok = nonzero.len() == expected.len()
        && nonzero
            .iter()
            .all(|(idx, v)| expected.get(idx).is_some_and(|e| *v == RatFunc::constant(e.clone())));
    let mut curvature = Map::new();
    for (idx, v) in &nonzero {
        let [i, j, k, l] = idx.map(|n| n + 1);
        curvature.insert(format!("R({i},{j},{k},{l})"), expr(v));
    }

    let orthonormal = check_orthonormal(&nil.metric, &nil.frame).is_ok();
    let ric = ricci(&nil.connection, &nil.metric, &nil.frame).expect("standard frame is orthonormal");
    let ricci_ok = (0..4).all(|i| (0..4).all(|j| ric.matrix[i][j] == RatFunc::constant(reference.ricci[i][j].clone())));
    let scalar_ok = ric.scalar == RatFunc::constant(reference.scalar.clone());
    let (_, coord_scalar) = ricci_contracted(&nil.connection, &nil.metric).expect("metric is invertible");
    let coordinate_scalar_ok = coord_scalar == ric.scalar;
    let left_invariant = verify_left_invariance(&nil.frame);

    let checks = json!({
        "metric": metric_ok,
        "christoffel": christoffel_ok,
        "connection": connection_ok,
        "brackets": brackets_ok,
        "curvature": curvature_ok,
        "frame_orthonormal": orthonormal,
        "ricci": ricci_ok,
        "scalar": scalar_ok,
        "scalar_coordinate_trace": coordinate_scalar_ok,
        "left_invariant": left_invariant,
    });
    let pass = checks
        .as_object()
        .is_some_and(|m| m.values().all(|v| v == &Value::Bool(true)));
    let result = json!({
        "metric": expr_matrix(&nil.metric.entries),
        "christoffel": christoffel,
        "connection": connection,
        "brackets": brackets,
        "curvature": curvature,
        "ricci": expr_matrix(&ric.matrix),
        "scalar": expr(&ric.scalar),
        "checks": checks,
    });
    Outcome { result, pass }
}

fn to_f64<const N: usize>(m: &[[Rational; N]; N]) -> [[f64; N]; N] {
    std::array::from_fn(|i| std::array::from_fn(|j| rational_to_f64(&m[i][j])))
}

fn constants(m: &[[RatFunc; 3]; 3]) -> Option<[[Rational; 3]; 3]> {
    let mut out: [[Rational; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = m[i][j].as_constant()?;
        }
    }
    Some(out)
}

/// Extrinsic and induced geometry of the horizontal slice `t = t0`,
/// computed exactly for symbolic `t0`.
pub fn slice(reference: &ReferenceTables) -> Outcome {
    let nil = Nil4::new();
    let geometry = FrameGeometry::nil4();
    let der = SymbolicDerivation::new(nil.frame.clone());
    let surface = Hypersurface::new(&geometry, &der, HypersurfaceFrame::<RatFunc>::slice(), 0.0)
        .expect("slice frame is orthonormal");

    let h = surface.second_fundamental_form().h;
    let shape = surface.shape_operator();
    let mean = surface.mean_curvature();
    let parallel = surface.is_parallel();
    let residuals = surface.codazzi_residuals();
    let mut codazzi_zero = true;
    let mut dual_path = true;
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                codazzi_zero &= residuals[i][j][k].is_zero();
                dual_path &= residuals[i][j][k] == surface.codazzi_curvature(i, j, k);
            }
        }
    }
    let (ric, tau) = surface.induced_ricci();
    let ric_symmetric = (0..3).all(|i| (0..3).all(|j| ric[i][j] == ric[j][i]));

    let h_exact = constants(&h);
    let shape_exact = constants(&shape);
    let ric_exact = constants(&ric);
    let h_ok = h_exact.as_ref() == Some(&reference.slice_h);
    let shape_ok = shape_exact.as_ref() == Some(&reference.slice_shape);
    let principal = principal_curvatures(&to_f64(h_exact.as_ref().unwrap_or(&reference.slice_h)));
    let principal_ok = h_exact.is_some()
        && principal
            .values
            .iter()
            .zip(&reference.slice_principal)
            .all(|(p, q)| (p - q).abs() <= 1e-12);
    let ricci_matches = ric_exact.as_ref() == Some(&reference.slice_ricci);
    let tau_matches = tau == RatFunc::constant(reference.slice_tau.clone());
    let printed_symmetric = (0..3).all(|i| (0..3).all(|j| reference.slice_ricci[i][j] == reference.slice_ricci[j][i]));

    let mut discrepancies = Vec::new();
    if !ricci_matches {
        discrepancies.push(format!(
            "induced Ricci from the Gauss equation differs from the printed matrix{}",
            if printed_symmetric {
                ""
            } else {
                " (which is not symmetric)"
            }
        ));
    }
    if !tau_matches {
        discrepancies.push(format!(
            "induced scalar curvature {} differs from the printed value {}",
            tau.render(),
            crate::scalar::render_rational(&reference.slice_tau)
        ));
    }

    let checks = json!({
        "h": h_ok,
        "shape": shape_ok,
        "H": mean.is_zero(),
        "principal": principal_ok,
        "parallel": parallel,
        "codazzi_zero": codazzi_zero,
        "codazzi_dual_path": dual_path,
        "induced_ricci_symmetric": ric_symmetric,
    });
    let pass = checks
        .as_object()
        .is_some_and(|m| m.values().all(|v| v == &Value::Bool(true)));
    let result = json!({
        "h": expr_matrix(&h),
        "shape": expr_matrix(&shape),
        "H": expr(&mean),
        "principal": nums(&principal.values),
        "parallel": parallel,
        "codazzi_residual_max": if codazzi_zero { num(0.0) } else { Value::String("nonzero".into()) },
        "induced_ricci": expr_matrix(&ric),
        "induced_tau": expr(&tau),
        "printed": {
            "induced_ricci": rat_matrix(&reference.slice_ricci),
            "induced_tau": rat_str(&reference.slice_tau),
            "induced_ricci_symmetric": printed_symmetric,
        },
        "induced_ricci_matches_printed": ricci_matches,
        "induced_tau_matches_printed": tau_matches,
        "discrepancies": discrepancies,
        "checks": checks,
    });
    Outcome { result, pass }
}
