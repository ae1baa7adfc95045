//! Nil⁴ group law, left-invariant frame, metric, and curvature derived from
//! an arbitrary exact metric.

mod connection;
mod fields;
mod frame_data;
mod group;
mod invariance;

pub use connection::{
    check_orthonormal, christoffel, covariant_derivative, lie_bracket, ricci, ricci_contracted, ricci_from_table,
    riemann, scalar_curvature, Connection, CurvatureTable, RicciTensor,
};
pub use fields::{
    coordinate_frame, det3, standard_coframe, standard_frame, standard_metric, CoframeExpr, MetricField,
    VectorFieldExpr,
};
pub use frame_data::FrameGeometry;
pub use group::{exp_tl, generator_l, nil4_multiply, GroupElement};
pub use invariance::verify_left_invariance;

use crate::scalar::ScalarError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeometryError {
    #[error("metric is not symmetric")]
    AsymmetricMetric,
    #[error("metric determinant vanishes identically")]
    SingularMetric,
    #[error("frame is not orthonormal: g(e{i}, e{j}) = {value}")]
    NonOrthonormalFrame { i: usize, j: usize, value: String },
    #[error("frame data is not constant: {0}")]
    NonConstant(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Standard Nil⁴ data bundled once: frame, coframe, metric, connection.
#[derive(Debug, Clone)]
pub struct Nil4 {
    pub frame: [VectorFieldExpr; 4],
    pub coframe: CoframeExpr,
    pub metric: MetricField,
    pub connection: Connection,
}

impl Nil4 {
    pub fn new() -> Self {
        let metric = standard_metric();
        let connection = christoffel(&metric).expect("standard metric is invertible");
        Nil4 {
            frame: standard_frame(),
            coframe: standard_coframe(),
            metric,
            connection,
        }
    }

    pub fn curvature_table(&self) -> CurvatureTable {
        CurvatureTable::compute(&self.connection, &self.metric, &self.frame)
    }

    /// `∇̃_{e_i} e_j` expressed in the frame basis.
    pub fn frame_connection(&self, i: usize, j: usize) -> [crate::scalar::RatFunc; 4] {
        let v = covariant_derivative(&self.connection, &self.frame[i], &self.frame[j]);
        self.coframe.components(&v)
    }

    /// `[e_i, e_j]` expressed in the frame basis.
    pub fn frame_bracket(&self, i: usize, j: usize) -> [crate::scalar::RatFunc; 4] {
        self.coframe.components(&lie_bracket(&self.frame[i], &self.frame[j]))
    }
}

impl Default for Nil4 {
    fn default() -> Self {
        Self::new()
    }
}
