use crate::scalar::{RatFunc, Rational};

use super::connection::{christoffel, covariant_derivative, lie_bracket, Connection, CurvatureTable};
use super::fields::{standard_frame, standard_metric, MetricField, VectorFieldExpr};
use super::GeometryError;

/// Constant structure data of an orthonormal left-invariant frame.
///
/// Everything the frame-level hypersurface code needs: connection
/// coefficients `∇_{e_i} e_j = Σ_k connection[i][j][k] e_k`, brackets
/// `[e_i, e_j] = Σ_k bracket[i][j][k] e_k`, and `curvature[i][j][k][l] =
/// g(R(e_i,e_j)e_k, e_l)`. Also records how many `∂t` each frame vector carries,
/// which is all a family depending only on `t` needs to differentiate.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameGeometry {
    pub connection: [[[Rational; 4]; 4]; 4],
    pub bracket: [[[Rational; 4]; 4]; 4],
    pub curvature: [[[[Rational; 4]; 4]; 4]; 4],
    pub dt_components: [Rational; 4],
}

fn constant(f: &RatFunc, what: impl FnOnce() -> String) -> Result<Rational, GeometryError> {
    f.as_constant().ok_or_else(|| GeometryError::NonConstant(what()))
}

impl FrameGeometry {
    pub fn from_frame(
        conn: &Connection,
        metric: &MetricField,
        frame: &[VectorFieldExpr; 4],
    ) -> Result<Self, GeometryError> {
        super::connection::check_orthonormal(metric, frame)?;
        let mut connection: [[[Rational; 4]; 4]; 4] = Default::default();
        let mut bracket: [[[Rational; 4]; 4]; 4] = Default::default();
        for i in 0..4 {
            for j in 0..4 {
                let nab = covariant_derivative(conn, &frame[i], &frame[j]);
                let br = lie_bracket(&frame[i], &frame[j]);
                for k in 0..4 {
                    connection[i][j][k] = constant(&metric.inner(&nab, &frame[k]), || {
                        format!("g(∇_e{} e{}, e{})", i + 1, j + 1, k + 1)
                    })?;
                    bracket[i][j][k] = constant(&metric.inner(&br, &frame[k]), || {
                        format!("g([e{}, e{}], e{})", i + 1, j + 1, k + 1)
                    })?;
                }
            }
        }
        let table = CurvatureTable::compute(conn, metric, frame);
        let mut curvature: [[[[Rational; 4]; 4]; 4]; 4] = Default::default();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for l in 0..4 {
                        curvature[i][j][k][l] = constant(table.get(i, j, k, l), || {
                            format!("g(R(e{},e{})e{}, e{})", i + 1, j + 1, k + 1, l + 1)
                        })?;
                    }
                }
            }
        }
        let dt_components = frame
            .iter()
            .enumerate()
            .map(|(i, e)| constant(&e.components[3], || format!("dt(e{})", i + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FrameGeometry {
            connection,
            bracket,
            curvature,
            dt_components: dt_components.try_into().expect("four components"),
        })
    }

    /// Nil⁴ with its standard left-invariant metric and frame, derived once
    /// per process.
    pub fn nil4() -> Self {
        static NIL4: std::sync::OnceLock<FrameGeometry> = std::sync::OnceLock::new();
        NIL4.get_or_init(|| {
            let metric = standard_metric();
            let conn = christoffel(&metric).expect("standard metric is invertible");
            Self::from_frame(&conn, &metric, &standard_frame()).expect("standard frame data is constant")
        })
        .clone()
    }

    /// Euclidean R⁴ with the coordinate frame.
    pub fn flat() -> Self {
        let one = Rational::from_integer(1.into());
        let zero = Rational::from_integer(0.into());
        FrameGeometry {
            connection: Default::default(),
            bracket: Default::default(),
            curvature: Default::default(),
            dt_components: [zero.clone(), zero.clone(), zero, one],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn nil4_brackets() {
        let fg = FrameGeometry::nil4();
        // [e4, e2] = e1, [e4, e3] = e2
        assert_eq!(fg.bracket[3][1][0], rat(1, 1));
        assert_eq!(fg.bracket[3][2][1], rat(1, 1));
        assert_eq!(fg.dt_components, [rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)]);
    }
}
