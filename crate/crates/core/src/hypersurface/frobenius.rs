use crate::geometry::det3;
use crate::geometry::{lie_bracket, FrameGeometry, MetricField, VectorFieldExpr};
use crate::scalar::{RatFunc, Ring};

use super::{directional, inner, Derivation, FrameVec, HypersurfaceError};

/// `[U, V]` in the frame basis: `U(V^k) − V(U^k) + Σ U^i V^j [e_i, e_j]^k`.
fn frame_bracket<S: Ring, D: Derivation<S>>(
    geometry: &FrameGeometry,
    der: &D,
    u: &FrameVec<S>,
    v: &FrameVec<S>,
) -> FrameVec<S> {
    std::array::from_fn(|k| {
        let mut acc = directional(der, u, &v[k]) - directional(der, v, &u[k]);
        for i in 0..4 {
            for j in 0..4 {
                let c = &geometry.bracket[i][j][k];
                if num::Zero::is_zero(c) {
                    continue;
                }
                acc = acc + S::from_rational(c) * u[i].clone() * v[j].clone();
            }
        }
        acc
    })
}

/// `ω_ij = g̃([X_i, X_j], ξ)` for the three tangent fields.
pub fn frobenius_pairings<S: Ring, D: Derivation<S>>(
    geometry: &FrameGeometry,
    der: &D,
    tangents: &[FrameVec<S>; 3],
    xi: &FrameVec<S>,
) -> [[S; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| inner(&frame_bracket(geometry, der, &tangents[i], &tangents[j]), xi))
    })
}

fn independent<S: Ring>(cols: &[[S; 4]; 3], tol: f64) -> bool {
    // some 3x3 minor of the 4x3 coefficient matrix is nonzero
    (0..4).any(|skip| {
        let rows: Vec<usize> = (0..4).filter(|&r| r != skip).collect();
        let m: [[S; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| cols[j][rows[i]].clone()));
        !det3(&m).is_negligible(tol)
    })
}

/// True iff every bracket of the tangent fields is orthogonal to `ξ`, i.e. the
/// distribution they span is involutive.
pub fn frobenius_check<S: Ring, D: Derivation<S>>(
    geometry: &FrameGeometry,
    der: &D,
    tangents: &[FrameVec<S>; 3],
    xi: &FrameVec<S>,
    tol: f64,
) -> Result<bool, HypersurfaceError> {
    if !independent(tangents, tol) {
        return Err(HypersurfaceError::DependentTangents);
    }
    let w = frobenius_pairings(geometry, der, tangents, xi);
    Ok(w.iter().flatten().all(|v| v.is_negligible(tol)))
}

/// Exact involutivity check for coordinate-expressed fields.
pub fn frobenius_check_fields(
    metric: &MetricField,
    tangents: &[VectorFieldExpr; 3],
    xi: &VectorFieldExpr,
) -> Result<bool, HypersurfaceError> {
    let cols: [[RatFunc; 4]; 3] = std::array::from_fn(|a| tangents[a].components.clone());
    if !independent(&cols, 0.0) {
        return Err(HypersurfaceError::DependentTangents);
    }
    for i in 0..3 {
        for j in (i + 1)..3 {
            let br = lie_bracket(&tangents[i], &tangents[j]);
            if !metric.inner(&br, xi).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{standard_frame, standard_metric};
    use crate::hypersurface::ConstantDerivation;

    fn unit(k: usize) -> FrameVec<f64> {
        std::array::from_fn(|i| if i == k { 1.0 } else { 0.0 })
    }

    #[test]
    fn e2_normal_is_not_integrable() {
        let e = standard_frame();
        let g = standard_metric();
        let tangents = [e[2].clone(), e[3].clone(), e[0].clone()];
        assert!(!frobenius_check_fields(&g, &tangents, &e[1]).unwrap());
    }

    #[test]
    fn e4_normal_is_integrable() {
        let e = standard_frame();
        let g = standard_metric();
        let tangents = [e[0].clone(), e[1].clone(), e[2].clone()];
        assert!(frobenius_check_fields(&g, &tangents, &e[3]).unwrap());
        let fg = FrameGeometry::nil4();
        assert!(frobenius_check(&fg, &ConstantDerivation, &[unit(0), unit(1), unit(2)], &unit(3), 1e-12).unwrap());
    }

    #[test]
    fn diagonal_normal_pairs_with_bracket() {
        let fg = FrameGeometry::nil4();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let xi = [r, 0.0, r, 0.0];
        let tangents = [unit(1), unit(3), [r, 0.0, -r, 0.0]];
        assert!(!frobenius_check(&fg, &ConstantDerivation, &tangents, &xi, 1e-12).unwrap());
        let w = frobenius_pairings(&fg, &ConstantDerivation, &tangents, &xi);
        // g([e4, e2], xi) = g(e1, xi)
        assert!((w[1][0] - r).abs() < 1e-15);
    }

    #[test]
    fn dependent_tangents_are_rejected() {
        let fg = FrameGeometry::nil4();
        let err = frobenius_check(&fg, &ConstantDerivation, &[unit(0), unit(0), unit(2)], &unit(3), 1e-12);
        assert_eq!(err, Err(HypersurfaceError::DependentTangents));
    }
}
